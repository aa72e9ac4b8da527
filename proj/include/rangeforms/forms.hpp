#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rangeforms/exact_range.hpp"
#include "rangeforms/grid_cache.hpp"
#include "rangeforms/interval.hpp"
#include "rangeforms/poly.hpp"

namespace rangeforms {

// Entries of the Tribonacci triangle: sum_i C(k,i) C(n-k,i) 2^i.
std::uint64_t delannoy(unsigned n, unsigned k);
std::vector<std::uint64_t> delannoy_row(unsigned n);

// Interpolation error constants for a square of radius r.
inline double omega_lagrange(double r) { return std::numbers::sqrt3 / 27.0 * r * r * r; }
inline double omega_hermite(double r) { return r * r * r * r / 24.0; }

// Which range function to apply. An empty level selects the maximal form.
struct FormSpec {
  enum class Kind { NaturalExtension, Taylor, Lagrange, Hermite };

  Kind kind = Kind::NaturalExtension;
  unsigned order = 0;             // m for Taylor; 3 for Lagrange, 4 for Hermite
  std::optional<unsigned> level;  // n
  bool sharing = false;           // use a GridCache (Lagrange and Hermite)

  static FormSpec natural() { return {}; }
  static FormSpec taylor(unsigned m, std::optional<unsigned> n = std::nullopt);
  static FormSpec lagrange(std::optional<unsigned> n = std::nullopt, bool shared = false);
  static FormSpec hermite(std::optional<unsigned> n = std::nullopt, bool shared = false);

  // Short label such as "T3", "L3+shared", "T2n4", "NE".
  std::string label() const;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

// Parses a label as produced by FormSpec::label (case-insensitive).
FormSpec parse_form(const std::string& token);

// Taylor form of order m (1..4) and level n >= m. Requires a square box.
Interval taylor_form(const Derivatives& f, const Box2& box, unsigned m, unsigned n);
Interval maximal_taylor_form(const Derivatives& f, const Box2& box, unsigned m);

// f_{i,j} = f(m_x + (i-1) r_x, m_y + (j-1) r_y).
using LagrangeGrid = std::array<std::array<double, 3>, 3>;
CenteredPoly2 lagrange_interpolate(const LagrangeGrid& values, const Box2& box);

Interval recursive_lagrange_form(const Derivatives& f, const Box2& box, unsigned n, const GridCache* cache = nullptr);
Interval maximal_lagrange_form(const Derivatives& f, const Box2& box, const GridCache* cache = nullptr);

// Corner data indexed [i][j] for the corner (m_x + (2i-1) r_x, m_y + (2j-1) r_y).
struct HermiteData {
  std::array<std::array<double, 2>, 2> f{};
  std::array<std::array<double, 2>, 2> fx{};
  std::array<std::array<double, 2>, 2> fy{};
  std::array<std::array<double, 2>, 2> fxy{};
};
CenteredPoly2 hermite_interpolate(const HermiteData& data, const Box2& box);

Interval recursive_hermite_form(const Derivatives& f, const Box2& box, unsigned n, const GridCache* cache = nullptr);
Interval maximal_hermite_form(const Derivatives& f, const Box2& box, const GridCache* cache = nullptr);

// Partials f^(3i,3j) (resp. f^(4i+k,4j+l)) read by the maximal or level-n
// Lagrange (resp. Hermite) form; used to populate a GridCache.
std::vector<PartialIndex> lagrange_partials(unsigned degree, std::optional<unsigned> level = std::nullopt);
std::vector<PartialIndex> hermite_partials(unsigned degree, std::optional<unsigned> level = std::nullopt);

Interval evaluate(const FormSpec& spec, const Derivatives& f, const Box2& box, const GridCache* cache = nullptr);

// Convenience overloads that differentiate f on the spot.
Interval taylor_form(const Poly2& f, const Box2& box, unsigned m, unsigned n);
Interval maximal_taylor_form(const Poly2& f, const Box2& box, unsigned m);
Interval maximal_lagrange_form(const Poly2& f, const Box2& box);
Interval maximal_hermite_form(const Poly2& f, const Box2& box);
Interval evaluate(const FormSpec& spec, const Poly2& f, const Box2& box);

}  // namespace rangeforms
