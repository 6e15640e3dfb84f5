#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gridbasis/enumerate.hpp"
#include "gridbasis/grid.hpp"

namespace gridbasis {

/// Basis of a 2x2 grid class E split against the juxtaposed-juxtapositions
/// superclass F: elements inside F (the relative basis, each in exactly one
/// squint class) and elements outside F.
struct RelativeBasisReport {
  GridSpec grid;
  BasisReport full;                  // basis of E
  std::vector<Permutation> in_f;     // relative basis, sorted
  std::vector<SquintSide> sides;     // parallel to in_f
  std::vector<Permutation> outside;  // basis(E) \ F, sorted
};

inline RelativeBasisReport relative_basis(const GridSpec& g, const EnumLimits& lim,
                                          bool check_outside_in_basis_f = false) {
  detail::require_2x2(g);
  RelativeBasisReport report;
  report.grid = g;
  report.full =
      enumerate_basis([&](const Permutation& p) { return member_grid(g, p); }, g.to_string(), lim);
  for (const auto& e : report.full.elements) {
    if (member_f(g, e)) {
      const bool in_a = member_squint(g, e, SquintSide::a);
      const bool in_b = member_squint(g, e, SquintSide::b);
      if (in_a == in_b)
        throw std::logic_error("relative basis element " + gridbasis::to_string(e) +
                               " is not in exactly one squint class");
      report.in_f.push_back(e);
      report.sides.push_back(in_a ? SquintSide::a : SquintSide::b);
    } else {
      report.outside.push_back(e);
    }
  }
  if (check_outside_in_basis_f && !report.outside.empty()) {
    const BasisReport basis_f =
        enumerate_basis([&](const Permutation& p) { return member_f(g, p); }, g.to_string(), lim);
    for (const auto& e : report.outside) {
      if (std::find(basis_f.elements.begin(), basis_f.elements.end(), e) == basis_f.elements.end())
        throw std::logic_error("basis element " + gridbasis::to_string(e) +
                               " lies outside F but is not a basis element of F");
    }
  }
  return report;
}

struct Lemma3Report {
  bool pass = true;
  std::optional<Permutation> counterexample;  // lexicographically least mismatch
};

/// Exhaustively checks membership in the grid class against the intersection
/// of the two squint classes for all permutations of length <= max_len.
inline Lemma3Report verify_lemma3(const GridSpec& g, int max_len) {
  detail::require_2x2(g);
  if (max_len < 0 || max_len > kHardLengthCap)
    throw resource_error("max length " + std::to_string(max_len) +
                         " exceeds the hard length cap " + std::to_string(kHardLengthCap));
  for (int len = 0; len <= max_len; ++len) {
    for (const Permutation& p : all_permutations(len)) {
      const bool in_grid = member_grid(g, p);
      const bool in_both =
          member_squint(g, p, SquintSide::a) && member_squint(g, p, SquintSide::b);
      if (in_grid != in_both) return {false, p};
    }
  }
  return {};
}

struct Observation2Report {
  bool pass = true;
  std::vector<Permutation> violations;  // basis(E) elements neither in F nor in basis(F)
  BasisReport basis_e;
  BasisReport basis_f;
};

/// Checks that every basis element of E = Grid(g) either lies in F or is
/// itself a basis element of F, with both bases computed to max_len.
inline Observation2Report verify_observation2(const GridSpec& g, const EnumLimits& lim) {
  detail::require_2x2(g);
  Observation2Report report;
  report.basis_e =
      enumerate_basis([&](const Permutation& p) { return member_grid(g, p); }, g.to_string(), lim);
  report.basis_f =
      enumerate_basis([&](const Permutation& p) { return member_f(g, p); },
                      "F(" + g.to_string() + ")", lim);
  for (const auto& e : report.basis_e.elements) {
    if (member_f(g, e)) continue;
    if (std::find(report.basis_f.elements.begin(), report.basis_f.elements.end(), e) ==
        report.basis_f.elements.end())
      report.violations.push_back(e);
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace gridbasis
