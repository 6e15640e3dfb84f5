#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "gridbasis/enumerate.hpp"
#include "gridbasis/grid.hpp"

namespace gridbasis {

/// Monotone 2x2 grids are encoded in four bits (A,B,C,D msb->lsb; 0 = inc).
inline GridSpec monotone_grid_from_code(unsigned code) {
  auto cell = [&](int bit) { return (code >> bit) & 1 ? ClassSpec::dec() : ClassSpec::inc(); };
  return GridSpec::grid2(cell(3), cell(2), cell(1), cell(0));
}

inline unsigned monotone_grid_code(const GridSpec& g) {
  detail::require_2x2(g);
  unsigned code = 0;
  const std::array<const ClassSpec*, 4> cells = {&g.a(), &g.b(), &g.c(), &g.d()};
  for (int i = 0; i < 4; ++i) {
    if (*cells[static_cast<std::size_t>(i)] == ClassSpec::dec())
      code |= 1u << (3 - i);
    else if (!(*cells[static_cast<std::size_t>(i)] == ClassSpec::inc()))
      throw validation_error("grid has a non-monotone cell");
  }
  return code;
}

/// Orbits of the 16 all-nonempty monotone 2x2 grids under the symmetry group
/// generated by reverse, complement and inverse; each orbit ascending, orbits
/// ordered by representative (their least code).
inline std::vector<std::vector<unsigned>> monotone_orbits() {
  std::vector<std::vector<unsigned>> orbits;
  std::array<bool, 16> seen{};
  for (unsigned code = 0; code < 16; ++code) {
    if (seen[code]) continue;
    std::vector<unsigned> orbit{code};
    seen[code] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const GridSpec g = monotone_grid_from_code(orbit[i]);
      for (SymmetryOp op : {SymmetryOp::reverse, SymmetryOp::complement, SymmetryOp::inverse}) {
        const unsigned image = monotone_grid_code(transformed(g, op));
        if (!seen[image]) {
          seen[image] = true;
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct SurveyOrbit {
  GridSpec representative;
  std::vector<GridSpec> members;
  BasisReport report;
};

/// Basis survey over all 16 all-nonempty monotone 2x2 grids, one enumeration
/// per symmetry orbit.
inline std::vector<SurveyOrbit> survey_monotone(const EnumLimits& lim) {
  std::vector<SurveyOrbit> out;
  for (const auto& orbit : monotone_orbits()) {
    SurveyOrbit entry;
    entry.representative = monotone_grid_from_code(orbit.front());
    for (unsigned code : orbit) entry.members.push_back(monotone_grid_from_code(code));
    const GridSpec& g = entry.representative;
    entry.report = enumerate_basis([&](const Permutation& p) { return member_grid(g, p); },
                                   g.to_string(), lim);
    out.push_back(std::move(entry));
  }
  return out;
}

/// Basis of the 2x2 grid with top row Av(c), Av(d) and a monotone bottom
/// row: form 1 = [inc inc], form 2 = [inc dec], form 3 = [dec inc].
inline BasisReport theorem2_check(const ClassSpec& c, const ClassSpec& d, int form,
                                  const EnumLimits& lim) {
  GridSpec g;
  switch (form) {
    case 1: g = GridSpec::grid2(c, d, ClassSpec::inc(), ClassSpec::inc()); break;
    case 2: g = GridSpec::grid2(c, d, ClassSpec::inc(), ClassSpec::dec()); break;
    case 3: g = GridSpec::grid2(c, d, ClassSpec::dec(), ClassSpec::inc()); break;
    default: throw validation_error("form must be 1, 2 or 3");
  }
  return enumerate_basis([&](const Permutation& p) { return member_grid(g, p); }, g.to_string(),
                         lim);
}

/// Basis counts for the direct-sum grid with Av(321654) in the bottom-left
/// and top-right cells and empty cells elsewhere. Reported counts are
/// evidence only; no claim is made about lengths beyond max_len.
inline BasisReport nonfb_demo(const EnumLimits& lim) {
  const ClassSpec c = ClassSpec::av({Permutation::of({3, 2, 1, 6, 5, 4})});
  const GridSpec g = GridSpec::grid2(ClassSpec::empty_class(), c, c, ClassSpec::empty_class());
  return enumerate_basis([&](const Permutation& p) { return member_grid(g, p); }, g.to_string(),
                         lim);
}

}  // namespace gridbasis
