#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridbasis/class_spec.hpp"

namespace gridbasis {

enum class GridShape { horizontal, vertical, two_by_two };
enum class SquintSide { a, b };

/// A juxtaposition or 2x2 grid of permutation classes. 2x2 cells are
/// addressed A (top-left), B (top-right), C (bottom-left), D (bottom-right).
class GridSpec {
 public:
  GridSpec() : shape_(GridShape::two_by_two), cells_(4) {}

  static GridSpec juxt_h(ClassSpec left, ClassSpec right) {
    GridSpec g;
    g.shape_ = GridShape::horizontal;
    g.cells_ = {std::move(left), std::move(right)};
    return g;
  }

  static GridSpec juxt_v(ClassSpec top, ClassSpec bottom) {
    GridSpec g;
    g.shape_ = GridShape::vertical;
    g.cells_ = {std::move(top), std::move(bottom)};
    return g;
  }

  static GridSpec grid2(ClassSpec a, ClassSpec b, ClassSpec c, ClassSpec d) {
    GridSpec g;
    g.cells_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return g;
  }

  GridShape shape() const { return shape_; }

  const ClassSpec& a() const { require(GridShape::two_by_two); return cells_[0]; }
  const ClassSpec& b() const { require(GridShape::two_by_two); return cells_[1]; }
  const ClassSpec& c() const { require(GridShape::two_by_two); return cells_[2]; }
  const ClassSpec& d() const { require(GridShape::two_by_two); return cells_[3]; }
  const ClassSpec& left() const { require(GridShape::horizontal); return cells_[0]; }
  const ClassSpec& right() const { require(GridShape::horizontal); return cells_[1]; }
  const ClassSpec& top() const { require(GridShape::vertical); return cells_[0]; }
  const ClassSpec& bottom() const { require(GridShape::vertical); return cells_[1]; }

  std::span<const ClassSpec> cells() const { return cells_; }

  std::string to_string() const {
    switch (shape_) {
      case GridShape::horizontal:
        return "[" + cells_[0].to_string() + "|" + cells_[1].to_string() + "]";
      case GridShape::vertical:
        return "[" + cells_[0].to_string() + "/" + cells_[1].to_string() + "]";
      case GridShape::two_by_two:
        return "[" + cells_[0].to_string() + " " + cells_[1].to_string() + "; " +
               cells_[2].to_string() + " " + cells_[3].to_string() + "]";
    }
    return {};
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_;
  }

 private:
  void require(GridShape s) const {
    if (shape_ != s) throw validation_error("grid cell accessed with the wrong shape");
  }

  GridShape shape_;
  std::vector<ClassSpec> cells_;
};

/// Witness for grid membership: the first v positions lie left of the
/// v-line; points of rank > h lie above the h-line. Juxtaposition witnesses
/// use only the relevant coordinate (the other stays 0).
struct Gridding {
  int v = 0;
  int h = 0;
};

/// Witness for the juxtaposed-juxtapositions superclass and the squint
/// classes: v-line, right h-line r and left h-line l, all in 0..n.
/// Heights are directly comparable because both live in the full rank space.
struct DivisionTriple {
  int v = 0;
  int r = 0;
  int l = 0;
};

/// Heights h in 0..n (ascending) such that this side's points above h form a
/// member of `top` and those at-or-below h a member of `bottom`. `side` holds
/// the side's original ranks in position order; n is the full length, so the
/// heights of the two sides of one permutation are directly comparable.
inline std::vector<int> valid_heights(std::span<const std::uint8_t> side, int n,
                                      const ClassSpec& top, const ClassSpec& bottom) {
  std::vector<int> out;
  std::vector<std::uint8_t> above, below;
  above.reserve(side.size());
  below.reserve(side.size());
  for (int h = 0; h <= n; ++h) {
    above.clear();
    below.clear();
    for (std::uint8_t r : side) (r > h ? above : below).push_back(r);
    if (top.member(above) && bottom.member(below)) out.push_back(h);
  }
  return out;
}

/// Lexicographically least gridding of p for g, if any. For 2x2 shapes this
/// searches v ascending and intersects the two sides' valid-height sets.
inline std::optional<Gridding> find_gridding(const GridSpec& g, const Permutation& p) {
  const auto ranks = p.ranks();
  const int n = p.size();
  switch (g.shape()) {
    case GridShape::horizontal:
      for (int v = 0; v <= n; ++v) {
        if (g.left().member(ranks.subspan(0, static_cast<std::size_t>(v))) &&
            g.right().member(ranks.subspan(static_cast<std::size_t>(v))))
          return Gridding{v, 0};
      }
      return std::nullopt;
    case GridShape::vertical: {
      std::vector<std::uint8_t> above, below;
      for (int h = 0; h <= n; ++h) {
        above.clear();
        below.clear();
        for (std::uint8_t r : ranks) (r > h ? above : below).push_back(r);
        if (g.top().member(above) && g.bottom().member(below)) return Gridding{0, h};
      }
      return std::nullopt;
    }
    case GridShape::two_by_two:
      for (int v = 0; v <= n; ++v) {
        const auto lh = valid_heights(ranks.subspan(0, static_cast<std::size_t>(v)), n, g.a(), g.c());
        if (lh.empty()) continue;
        const auto rh = valid_heights(ranks.subspan(static_cast<std::size_t>(v)), n, g.b(), g.d());
        std::size_t i = 0, j = 0;
        while (i < lh.size() && j < rh.size()) {
          if (lh[i] == rh[j]) return Gridding{v, lh[i]};
          (lh[i] < rh[j] ? i : j)++;
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

inline bool member_grid(const GridSpec& g, const Permutation& p) {
  return find_gridding(g, p).has_value();
}

namespace detail {

inline void require_2x2(const GridSpec& g) {
  if (g.shape() != GridShape::two_by_two)
    throw validation_error("operation requires a 2x2 grid");
}

}  // namespace detail

/// Least division triple showing p in the horizontal juxtaposition of the
/// vertical juxtapositions [A/C] and [B/D]; the two h-lines are independent.
inline std::optional<DivisionTriple> find_division(const GridSpec& g, const Permutation& p) {
  detail::require_2x2(g);
  const auto ranks = p.ranks();
  const int n = p.size();
  for (int v = 0; v <= n; ++v) {
    const auto lh = valid_heights(ranks.subspan(0, static_cast<std::size_t>(v)), n, g.a(), g.c());
    if (lh.empty()) continue;
    const auto rh = valid_heights(ranks.subspan(static_cast<std::size_t>(v)), n, g.b(), g.d());
    if (rh.empty()) continue;
    return DivisionTriple{v, rh.front(), lh.front()};
  }
  return std::nullopt;
}

inline bool member_f(const GridSpec& g, const Permutation& p) {
  return find_division(g, p).has_value();
}

/// Least division triple with l <= r (side A) or l >= r (side B).
inline std::optional<DivisionTriple> find_squint_division(const GridSpec& g, const Permutation& p,
                                                          SquintSide side) {
  detail::require_2x2(g);
  const auto ranks = p.ranks();
  const int n = p.size();
  for (int v = 0; v <= n; ++v) {
    const auto lh = valid_heights(ranks.subspan(0, static_cast<std::size_t>(v)), n, g.a(), g.c());
    if (lh.empty()) continue;
    const auto rh = valid_heights(ranks.subspan(static_cast<std::size_t>(v)), n, g.b(), g.d());
    if (rh.empty()) continue;
    if (side == SquintSide::a) {
      // least r admitting some l <= r, then the least such l
      const auto it = std::lower_bound(rh.begin(), rh.end(), lh.front());
      if (it != rh.end()) return DivisionTriple{v, *it, lh.front()};
    } else {
      // least r admitting some l >= r, then the least such l
      const auto it = std::lower_bound(lh.begin(), lh.end(), rh.front());
      if (it != lh.end()) return DivisionTriple{v, rh.front(), *it};
    }
  }
  return std::nullopt;
}

inline bool member_squint(const GridSpec& g, const Permutation& p, SquintSide side) {
  return find_squint_division(g, p, side).has_value();
}

/// Cell patterns {A, B, C, D} of p sliced at (v, h).
inline std::array<Permutation, 4> slice2x2(const Permutation& p, int v, int h) {
  std::array<std::vector<std::uint8_t>, 4> cells;
  for (int i = 0; i < p.size(); ++i) {
    const int r = p.at(i);
    const int cell = (r > h ? 0 : 2) + (i < v ? 0 : 1);
    cells[static_cast<std::size_t>(cell)].push_back(static_cast<std::uint8_t>(r));
  }
  return {detail::reduce(cells[0]), detail::reduce(cells[1]), detail::reduce(cells[2]),
          detail::reduce(cells[3])};
}

/// Image of a grid under a symmetry: cells move with the point set and their
/// classes are transformed. inverse swaps the shape of juxtapositions.
inline GridSpec transformed(const GridSpec& g, SymmetryOp op) {
  if (op == SymmetryOp::rotate180)
    return transformed(transformed(g, SymmetryOp::reverse), SymmetryOp::complement);
  auto t = [&](const ClassSpec& c) { return transformed(c, op); };
  switch (g.shape()) {
    case GridShape::horizontal:
      switch (op) {
        case SymmetryOp::reverse: return GridSpec::juxt_h(t(g.right()), t(g.left()));
        case SymmetryOp::complement: return GridSpec::juxt_h(t(g.left()), t(g.right()));
        case SymmetryOp::inverse: return GridSpec::juxt_v(t(g.right()), t(g.left()));
        default: break;
      }
      break;
    case GridShape::vertical:
      switch (op) {
        case SymmetryOp::reverse: return GridSpec::juxt_v(t(g.top()), t(g.bottom()));
        case SymmetryOp::complement: return GridSpec::juxt_v(t(g.bottom()), t(g.top()));
        case SymmetryOp::inverse: return GridSpec::juxt_h(t(g.bottom()), t(g.top()));
        default: break;
      }
      break;
    case GridShape::two_by_two:
      switch (op) {
        case SymmetryOp::reverse: return GridSpec::grid2(t(g.b()), t(g.a()), t(g.d()), t(g.c()));
        case SymmetryOp::complement: return GridSpec::grid2(t(g.c()), t(g.d()), t(g.a()), t(g.b()));
        case SymmetryOp::inverse: return GridSpec::grid2(t(g.d()), t(g.b()), t(g.c()), t(g.a()));
        default: break;
      }
      break;
  }
  throw std::invalid_argument("unknown symmetry");
}

}  // namespace gridbasis
