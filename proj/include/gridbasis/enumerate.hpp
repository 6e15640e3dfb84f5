#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gridbasis/perm.hpp"

namespace gridbasis {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB

struct EnumLimits {
  int max_len = 6;
  int lookahead = 2;
  int workers = 1;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
};

using MembershipFn = std::function<bool(const Permutation&)>;

/// Minimal forbidden permutations of a class up to max_len, with member
/// counts per length. Exact for the class restricted to lengths <= max_len.
struct BasisReport {
  std::string class_description;
  int max_len = 0;
  int lookahead = 0;
  std::vector<Permutation> elements;                // sorted by (length, lex)
  std::map<int, std::uint64_t> members_by_length;   // lengths 1..max_len
  // Largest length carrying a basis element (0 if none), reported only when
  // the remaining lookahead window holds no new elements.
  std::optional<int> stabilized_at;

  std::map<int, std::vector<Permutation>> elements_by_length() const {
    std::map<int, std::vector<Permutation>> grouped;
    for (const auto& p : elements) grouped[p.size()].push_back(p);
    return grouped;
  }
};

namespace detail {

// Encodings of the one-point extensions of `ranks`, appended to out.
inline void encoded_extensions(const std::vector<std::uint8_t>& ranks,
                               std::vector<std::uint64_t>& out) {
  const int n = static_cast<int>(ranks.size());
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n) + 1);
  for (int pos = 0; pos <= n; ++pos) {
    for (int val = 1; val <= n + 1; ++val) {
      std::size_t w = 0;
      for (int i = 0; i < n; ++i) {
        if (i == pos) values[w++] = static_cast<std::uint8_t>(val);
        const int r = ranks[static_cast<std::size_t>(i)];
        values[w++] = static_cast<std::uint8_t>(r >= val ? r + 1 : r);
      }
      if (pos == n) values[w++] = static_cast<std::uint8_t>(val);
      out.push_back(encode_ranks(values));
    }
  }
}

inline std::uint64_t encoded_deletion(const std::vector<std::uint8_t>& ranks, int drop) {
  std::uint64_t code = 0;
  int w = 0;
  const int removed = ranks[static_cast<std::size_t>(drop)];
  for (int i = 0; i < static_cast<int>(ranks.size()); ++i) {
    if (i == drop) continue;
    const int r = ranks[static_cast<std::size_t>(i)];
    code |= static_cast<std::uint64_t>(r > removed ? r - 1 : r) << (4 * (15 - w));
    ++w;
  }
  return code;
}

inline bool sorted_contains(const std::vector<std::uint64_t>& sorted, std::uint64_t code) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), code);
  return it != sorted.end() && *it == code;
}

inline bool all_deletions_member(const std::vector<std::uint8_t>& ranks,
                                 const std::vector<std::uint64_t>& prev_members) {
  for (int drop = 0; drop < static_cast<int>(ranks.size()); ++drop)
    if (!sorted_contains(prev_members, encoded_deletion(ranks, drop))) return false;
  return true;
}

}  // namespace detail

/// Level-wise basis enumeration. The length-k candidate pool is the set of
/// one-point extensions of the length-(k-1) members; a candidate is a basis
/// element iff it is a non-member with every deletion a member, and members
/// seal the next frontier before the next length starts. Candidates within a
/// length may be tested on several workers; results merge in candidate order,
/// so reports are identical for any worker count.
///
/// Pre: `member` decides a downward-closed set containing the empty
/// permutation; this is spot-checked and violations raise validation_error.
inline BasisReport enumerate_basis(const MembershipFn& member, std::string class_description,
                                   const EnumLimits& lim) {
  if (lim.max_len < 0 || lim.max_len > kHardLengthCap)
    throw resource_error("max length " + std::to_string(lim.max_len) +
                         " exceeds the hard length cap " + std::to_string(kHardLengthCap));
  if (lim.workers < 1) throw validation_error("workers must be >= 1");
  if (lim.lookahead < 0) throw validation_error("lookahead must be >= 0");

  BasisReport report;
  report.class_description = std::move(class_description);
  report.max_len = lim.max_len;
  report.lookahead = lim.lookahead;

  std::vector<std::uint64_t> frontier{encode_ranks({})};  // members of length len-1
  std::vector<std::uint8_t> buf;

  for (int len = 1; len <= lim.max_len; ++len) {
    auto budget_check = [&](std::uint64_t entries) {
      if (entries * 8 > lim.memory_budget)
        throw resource_error("memory budget exceeded at length " + std::to_string(len));
    };
    budget_check(frontier.size() +
                 frontier.size() * static_cast<std::uint64_t>(len) * static_cast<std::uint64_t>(len));

    std::vector<std::uint64_t> candidates;
    candidates.reserve(frontier.size() * static_cast<std::size_t>(len) * static_cast<std::size_t>(len));
    for (std::uint64_t code : frontier) {
      decode_ranks(code, len - 1, buf);
      detail::encoded_extensions(buf, candidates);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    budget_check(frontier.size() + 2 * candidates.size());

    struct BlockOut {
      std::vector<std::uint64_t> members;
      std::vector<Permutation> basis;
    };
    constexpr std::size_t kBlock = 512;
    const std::size_t nblocks = (candidates.size() + kBlock - 1) / kBlock;
    std::vector<BlockOut> outs(nblocks);
    std::atomic<std::size_t> next_block{0};

    auto classify_blocks = [&] {
      std::vector<std::uint8_t> local;
      for (;;) {
        const std::size_t blk = next_block.fetch_add(1);
        if (blk >= nblocks) break;
        const std::size_t lo = blk * kBlock;
        const std::size_t hi = std::min(lo + kBlock, candidates.size());
        for (std::size_t i = lo; i < hi; ++i) {
          decode_ranks(candidates[i], len, local);
          Permutation p{std::vector<std::uint8_t>(local)};
          if (member(p))
            outs[blk].members.push_back(candidates[i]);
          else if (detail::all_deletions_member(local, frontier))
            outs[blk].basis.push_back(std::move(p));
        }
      }
    };

    const int nthreads = std::min<int>(lim.workers, static_cast<int>(nblocks ? nblocks : 1));
    if (nthreads <= 1) {
      classify_blocks();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(classify_blocks);
      for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> next;
    for (auto& blk : outs) {
      next.insert(next.end(), blk.members.begin(), blk.members.end());
      for (auto& p : blk.basis) report.elements.push_back(std::move(p));
    }

    // Downward-closure spot check: sampled new members must have every
    // deletion in the sealed previous frontier.
    {
      const std::size_t stride = next.size() <= 64 ? 1 : next.size() / 64;
      for (std::size_t i = 0; i < next.size(); i += stride) {
        decode_ranks(next[i], len, buf);
        if (!detail::all_deletions_member(buf, frontier))
          throw validation_error(
              "membership decider is not downward closed: " +
              gridbasis::to_string(Permutation(std::vector<std::uint8_t>(buf))) +
              " is a member with a non-member deletion");
      }
    }

    report.members_by_length[len] = next.size();
    frontier = std::move(next);
  }

  // Emission re-check: listed elements are minimal non-members and form an
  // antichain under containment.
  for (const auto& p : report.elements) {
    if (member(p))
      throw std::logic_error("basis element " + gridbasis::to_string(p) + " is a member");
    for (const auto& q : deletions(p))
      if (!member(q))
        throw std::logic_error("basis element " + gridbasis::to_string(p) +
                               " has non-member deletion " + gridbasis::to_string(q));
  }
  for (std::size_t i = 0; i < report.elements.size(); ++i)
    for (std::size_t j = i + 1; j < report.elements.size(); ++j)
      if (contains(report.elements[i], report.elements[j]))
        throw std::logic_error("basis is not an antichain");

  int last = 0;
  for (const auto& p : report.elements) last = std::max(last, p.size());
  if (lim.max_len - last >= lim.lookahead) report.stabilized_at = last;
  return report;
}

}  // namespace gridbasis
