#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridbasis/errors.hpp"

namespace gridbasis {

// Enumeration length cap. all_permutations and the basis enumerator refuse
// lengths above this; membership deciders themselves are not capped.
inline constexpr int kHardLengthCap = 12;

/// A permutation of {1..n} in one-line notation, stored as 1-based ranks.
/// The empty permutation (n = 0) is a valid value and renders as "e".
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {
    if (!is_valid(ranks_)) throw std::invalid_argument("ranks must be a bijection on 1..n");
  }

  static Permutation of(std::initializer_list<int> ranks) {
    std::vector<std::uint8_t> v;
    v.reserve(ranks.size());
    for (int r : ranks) {
      if (r < 1 || r > 255) throw std::invalid_argument("rank out of range");
      v.push_back(static_cast<std::uint8_t>(r));
    }
    return Permutation(std::move(v));
  }

  static Permutation identity(int n) {
    Permutation p;
    p.ranks_.resize(static_cast<std::size_t>(n));
    std::iota(p.ranks_.begin(), p.ranks_.end(), std::uint8_t{1});
    return p;
  }

  int size() const { return static_cast<int>(ranks_.size()); }
  bool empty() const { return ranks_.empty(); }
  std::span<const std::uint8_t> ranks() const { return ranks_; }
  int at(int i) const { return ranks_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  // Total order: by length first, then lexicographically by ranks.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.ranks_.begin(), a.ranks_.end(),
                                                  b.ranks_.begin(), b.ranks_.end());
  }

 private:
  static bool is_valid(const std::vector<std::uint8_t>& ranks) {
    const std::size_t n = ranks.size();
    if (n > 255) return false;
    std::array<bool, 256> seen{};
    for (std::uint8_t r : ranks) {
      if (r < 1 || r > n || seen[r]) return false;
      seen[r] = true;
    }
    return true;
  }

  std::vector<std::uint8_t> ranks_;
};

namespace detail {

// Order-isomorphic reduction of a sequence of distinct values onto ranks 1..k.
inline void reduce_into(std::span<const std::uint8_t> values, std::vector<std::uint8_t>& out) {
  out.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint8_t rank = 1;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (values[j] < values[i]) ++rank;
    out[i] = rank;
  }
}

inline Permutation reduce(std::span<const std::uint8_t> values) {
  std::vector<std::uint8_t> out;
  reduce_into(values, out);
  return Permutation(std::move(out));
}

// Depth-first pattern matcher with value-window pruning. For each pattern
// position j, pred_/succ_ give the earlier position holding the tightest
// lower/upper value constraint; a host value is admissible iff it lies
// strictly inside that window. Works on any sequence of distinct values.
class EmbedMatcher {
 public:
  explicit EmbedMatcher(std::span<const std::uint8_t> pattern)
      : pattern_(pattern.begin(), pattern.end()),
        pred_(pattern_.size(), -1),
        succ_(pattern_.size(), -1) {
    const int k = static_cast<int>(pattern_.size());
    for (int j = 0; j < k; ++j) {
      for (int t = 0; t < j; ++t) {
        if (pattern_[t] < pattern_[j]) {
          if (pred_[j] < 0 || pattern_[t] > pattern_[pred_[j]]) pred_[j] = static_cast<std::int16_t>(t);
        } else {
          if (succ_[j] < 0 || pattern_[t] < pattern_[succ_[j]]) succ_[j] = static_cast<std::int16_t>(t);
        }
      }
    }
  }

  int pattern_size() const { return static_cast<int>(pattern_.size()); }

  bool embeds_in(std::span<const std::uint8_t> values) const {
    const int k = static_cast<int>(pattern_.size());
    if (k == 0) return true;
    if (k > static_cast<int>(values.size())) return false;
    if (k <= 32) {
      std::array<int, 32> chosen{};
      return match_from(0, 0, values, chosen.data());
    }
    std::vector<int> chosen(static_cast<std::size_t>(k));
    return match_from(0, 0, values, chosen.data());
  }

 private:
  bool match_from(int j, int start, std::span<const std::uint8_t> values, int* chosen) const {
    const int k = static_cast<int>(pattern_.size());
    const int n = static_cast<int>(values.size());
    const int lo = pred_[j] >= 0 ? chosen[pred_[j]] : 0;
    const int hi = succ_[j] >= 0 ? chosen[succ_[j]] : 256;
    for (int i = start; i <= n - (k - j); ++i) {
      const int v = values[i];
      if (v > lo && v < hi) {
        chosen[j] = v;
        if (j + 1 == k || match_from(j + 1, i + 1, values, chosen)) return true;
      }
    }
    return false;
  }

  std::vector<std::uint8_t> pattern_;
  std::vector<std::int16_t> pred_, succ_;
};

}  // namespace detail

/// True iff some subsequence of host is order-isomorphic to pattern.
/// The empty permutation is contained in everything.
inline bool contains(const Permutation& pattern, const Permutation& host) {
  return detail::EmbedMatcher(pattern.ranks()).embeds_in(host.ranks());
}

/// Pattern of the points of host selected by 0-based indices (any order,
/// duplicates collapse). Throws std::out_of_range for invalid indices.
inline Permutation pattern_of(const Permutation& host, std::span<const int> indices) {
  std::vector<int> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::uint8_t> values;
  values.reserve(idx.size());
  for (int i : idx) {
    if (i < 0 || i >= host.size()) throw std::out_of_range("pattern_of: index out of range");
    values.push_back(static_cast<std::uint8_t>(host.at(i)));
  }
  return detail::reduce(values);
}

/// The distinct patterns obtained by deleting one point, sorted.
inline std::vector<Permutation> deletions(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("deletions: empty permutation");
  const int n = p.size();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n) - 1);
  for (int drop = 0; drop < n; ++drop) {
    std::size_t w = 0;
    for (int i = 0; i < n; ++i) {
      if (i == drop) continue;
      const int r = p.at(i);
      values[w++] = static_cast<std::uint8_t>(r > p.at(drop) ? r - 1 : r);
    }
    out.emplace_back(std::vector<std::uint8_t>(values));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All distinct permutations of length n+1 having p as a one-point deletion,
/// sorted: a new point is inserted at each position/value slot.
inline std::vector<Permutation> extensions(const Permutation& p) {
  const int n = p.size();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n) + 1);
  for (int pos = 0; pos <= n; ++pos) {
    for (int val = 1; val <= n + 1; ++val) {
      std::size_t w = 0;
      for (int i = 0; i < n; ++i) {
        if (i == pos) values[w++] = static_cast<std::uint8_t>(val);
        const int r = p.at(i);
        values[w++] = static_cast<std::uint8_t>(r >= val ? r + 1 : r);
      }
      if (pos == n) values[w++] = static_cast<std::uint8_t>(val);
      out.emplace_back(std::vector<std::uint8_t>(values));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class SymmetryOp { reverse, complement, inverse, rotate180 };

inline Permutation reverse(const Permutation& p) {
  std::vector<std::uint8_t> v(p.ranks().rbegin(), p.ranks().rend());
  return Permutation(std::move(v));
}

inline Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<std::uint8_t> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(static_cast<std::uint8_t>(n + 1 - p.at(i)));
  return Permutation(std::move(v));
}

inline Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(p.at(i)) - 1] = static_cast<std::uint8_t>(i + 1);
  return Permutation(std::move(v));
}

inline Permutation rotate180(const Permutation& p) { return complement(reverse(p)); }

inline Permutation symmetry(const Permutation& p, SymmetryOp op) {
  switch (op) {
    case SymmetryOp::reverse: return reverse(p);
    case SymmetryOp::complement: return complement(p);
    case SymmetryOp::inverse: return inverse(p);
    case SymmetryOp::rotate180: return rotate180(p);
  }
  throw std::invalid_argument("unknown symmetry");
}

/// Lazily yields all n! permutations of length n in lexicographic order.
class PermutationRange {
 public:
  explicit PermutationRange(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    if (n > kHardLengthCap)
      throw resource_error("length " + std::to_string(n) + " exceeds the hard length cap " +
                           std::to_string(kHardLengthCap));
  }

  struct sentinel {};

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n) : state_(static_cast<std::size_t>(n)), done_(false) {
      std::iota(state_.begin(), state_.end(), std::uint8_t{1});
    }

    Permutation operator*() const { return Permutation(std::vector<std::uint8_t>(state_)); }

    iterator& operator++() {
      if (!std::next_permutation(state_.begin(), state_.end())) done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, sentinel) { return it.done_; }

   private:
    std::vector<std::uint8_t> state_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  sentinel end() const { return {}; }

 private:
  int n_;
};

inline PermutationRange all_permutations(int n) { return PermutationRange(n); }

// Canonical integer encoding for lengths <= 15: rank i goes into nibble
// 15 - i, so codes of equal-length permutations compare like their ranks.
inline std::uint64_t encode_ranks(std::span<const std::uint8_t> ranks) {
  if (ranks.size() > 15) throw std::invalid_argument("encoding supports length <= 15");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    code |= static_cast<std::uint64_t>(ranks[i]) << (4 * (15 - i));
  return code;
}

inline void decode_ranks(std::uint64_t code, int n, std::vector<std::uint8_t>& out) {
  out.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (4 * (15 - i))) & 0xF);
}

/// Text form: digit string for n <= 9 ("2143"), comma-separated ranks
/// otherwise ("11,2,5,1,..."); the empty permutation is "e".
inline std::string to_string(const Permutation& p) {
  if (p.empty()) return "e";
  std::string s;
  if (p.size() <= 9) {
    for (std::uint8_t r : p.ranks()) s += static_cast<char>('0' + r);
  } else {
    for (int i = 0; i < p.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(p.at(i));
    }
  }
  return s;
}

/// Parses both text forms (and "e"). Position/token of the failure are
/// reported relative to the given string.
inline Permutation parse_perm(std::string_view text) {
  auto is_ws = [](char c) { return c == ' ' || c == '\t'; };
  std::size_t b = 0, e = text.size();
  while (b < e && is_ws(text[b])) ++b;
  while (e > b && is_ws(text[e - 1])) --e;
  if (b == e) throw parse_error("expected a permutation", std::string(text), 0);
  const std::string_view t = text.substr(b, e - b);
  if (t == "e") return {};

  std::vector<std::uint8_t> ranks;
  if (t.find(',') != std::string_view::npos) {
    std::size_t i = 0;
    while (i <= t.size()) {
      std::size_t j = t.find(',', i);
      if (j == std::string_view::npos) j = t.size();
      std::size_t tb = i, te = j;
      while (tb < te && is_ws(t[tb])) ++tb;
      while (te > tb && is_ws(t[te - 1])) --te;
      const std::string token(t.substr(tb, te - tb));
      int value = 0;
      const char* first = token.data();
      const char* last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (token.empty() || ec != std::errc{} || ptr != last || value < 1 || value > 255)
        throw parse_error("invalid rank", token, b + tb);
      ranks.push_back(static_cast<std::uint8_t>(value));
      if (j == t.size()) break;
      i = j + 1;
    }
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const char c = t[i];
      if (c < '1' || c > '9')
        throw parse_error("invalid rank digit", std::string(1, c), b + i);
      ranks.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  try {
    return Permutation(std::move(ranks));
  } catch (const std::invalid_argument&) {
    throw parse_error("not a permutation of 1..n", std::string(t), b);
  }
}

}  // namespace gridbasis
