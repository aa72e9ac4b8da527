#include "rangeforms/forms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rangeforms {

namespace {

constexpr unsigned kTable = 64;

struct Combinatorics {
  std::array<double, kTable + 1> factorial{};
  std::array<std::array<double, kTable + 1>, kTable + 1> binomial{};

  Combinatorics() {
    factorial[0] = 1.0;
    for (unsigned k = 1; k <= kTable; ++k) factorial[k] = factorial[k - 1] * k;
    for (unsigned n = 0; n <= kTable; ++n) {
      binomial[n][0] = binomial[n][n] = 1.0;
      for (unsigned k = 1; k < n; ++k) binomial[n][k] = binomial[n - 1][k - 1] + binomial[n - 1][k];
    }
  }
};

const Combinatorics& comb() {
  static const Combinatorics c;
  return c;
}

double factorial(unsigned k) {
  if (k > kTable) throw std::out_of_range("factorial: order too large");
  return comb().factorial[k];
}

double binomial(unsigned n, unsigned k) {
  if (n > kTable) throw std::out_of_range("binomial: order too large");
  return comb().binomial[n][k];
}

// Radius used by the remainder terms. Boxes whose corners are not exactly
// representable may differ from a square in the last bits; the larger radius
// keeps the bound valid.
double square_radius(const Box2& box) {
  if (!box.is_nearly_square()) throw std::invalid_argument("range form requires a square box");
  const double r = std::max(box.rad_x(), box.rad_y());
  if (!(r > 0.0)) throw std::invalid_argument("range form requires a box with positive radius");
  return r;
}

// Values of partial derivatives at up to three node coordinates per axis,
// read from the cache when every node is a cache node.
class NodeReader {
 public:
  NodeReader(const Derivatives& f, const GridCache* cache, std::array<double, 3> xs, std::array<double, 3> ys,
             unsigned count)
      : f_(f), xs_(xs), ys_(ys) {
    if (cache == nullptr) return;
    for (unsigned k = 0; k < count; ++k) {
      const auto ix = cache->x_index(xs[k]);
      const auto iy = cache->y_index(ys[k]);
      if (!ix || !iy) return;
      ix_[k] = *ix;
      iy_[k] = *iy;
    }
    cache_ = cache;
  }

  // Table for p, or nullptr to evaluate directly.
  const double* table(PartialIndex p) const { return cache_ == nullptr ? nullptr : cache_->table(p); }

  double value(PartialIndex p, const double* table, unsigned a, unsigned b) const {
    if (table != nullptr) return table[iy_[b] * cache_->width() + ix_[a]];
    return f_.eval(p, xs_[a], ys_[b]);
  }

 private:
  const Derivatives& f_;
  std::array<double, 3> xs_;
  std::array<double, 3> ys_;
  std::array<std::size_t, 3> ix_{};
  std::array<std::size_t, 3> iy_{};
  const GridCache* cache_ = nullptr;
};

double ne_magnitude(const Derivatives& f, PartialIndex p, const Box2& box) {
  const Poly2& g = f(p);
  if (g.is_zero()) return 0.0;
  return natural_extension(g, box).magnitude();
}

// sum_{k=1}^{K} u_k w^k by Horner; u[0] is unused.
double weighted_sum(const std::vector<double>& u, double w) {
  double acc = 0.0;
  for (std::size_t k = u.size(); k-- > 1;) acc = (acc + u[k]) * w;
  return acc;
}

// Shared skeleton of the recursive forms. `stride` is 3 or 4, `K` the largest
// i + j with an interpolant, `tails` whether the level-n natural-extension
// terms are present (finite level n = K + 1).
template <class Interp>
Interval recursive_form(const Derivatives& f, const Box2& box, unsigned stride, unsigned K, bool tails, double omega,
                        Interp interp) {
  // split[i][j] = T_{i,j}(B) + R_{i,j}(B)
  std::vector<std::vector<Interval>> split(K + 1);
  for (unsigned i = 0; i <= K; ++i) {
    split[i].resize(K + 1 - i);
    for (unsigned j = 0; i + j <= K; ++j) split[i][j] = interp(i, j);
  }
  std::vector<double> u(1, 0.0);
  for (unsigned k = 1; k <= K; ++k) {
    double uk = 0.0;
    for (unsigned j = 0; j <= k; ++j) uk += static_cast<double>(delannoy(k, j)) * split[k - j][j].magnitude();
    u.push_back(uk);
  }
  if (tails) {
    const unsigned n = K + 1;
    double un = 0.0;
    for (unsigned j = 0; j <= n; ++j) {
      un += static_cast<double>(delannoy(n, j)) * ne_magnitude(f, {stride * (n - j), stride * j}, box);
    }
    double un1 = 0.0;
    for (unsigned j = 1; j <= n; ++j) {
      un1 += static_cast<double>(delannoy(n - 1, j - 1)) * ne_magnitude(f, {stride * (n + 1 - j), stride * j}, box);
    }
    u.push_back(un);
    u.push_back(un1);
  }
  return split[0][0] + symmetric(weighted_sum(u, omega));
}

}  // namespace

std::uint64_t delannoy(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("delannoy: k exceeds n");
  if (n > 40) throw std::out_of_range("delannoy: n too large");
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(41);
    for (unsigned nn = 0; nn <= 40; ++nn) {
      t[nn].resize(nn + 1);
      for (unsigned kk = 0; kk <= nn; ++kk) {
        std::uint64_t sum = 0;
        std::uint64_t ck = 1, cnk = 1, p2 = 1;
        for (unsigned i = 0; i <= std::min(kk, nn - kk); ++i) {
          sum += ck * cnk * p2;
          ck = ck * (kk - i) / (i + 1);
          cnk = cnk * (nn - kk - i) / (i + 1);
          p2 *= 2;
        }
        t[nn][kk] = sum;
      }
    }
    return t;
  }();
  return table[n][k];
}

std::vector<std::uint64_t> delannoy_row(unsigned n) {
  std::vector<std::uint64_t> row;
  for (unsigned k = 0; k <= n; ++k) row.push_back(delannoy(n, k));
  return row;
}

FormSpec FormSpec::taylor(unsigned m, std::optional<unsigned> n) {
  if (m < 1 || m > 4) throw std::invalid_argument("Taylor form order must be 1..4");
  if (n && *n < m) throw std::invalid_argument("Taylor form level must be at least its order");
  return {Kind::Taylor, m, n, false};
}

FormSpec FormSpec::lagrange(std::optional<unsigned> n, bool shared) {
  if (n && *n < 1) throw std::invalid_argument("Lagrange form level must be at least 1");
  return {Kind::Lagrange, 3, n, shared};
}

FormSpec FormSpec::hermite(std::optional<unsigned> n, bool shared) {
  if (n && *n < 1) throw std::invalid_argument("Hermite form level must be at least 1");
  return {Kind::Hermite, 4, n, shared};
}

std::string FormSpec::label() const {
  std::string s;
  switch (kind) {
    case Kind::NaturalExtension: return "NE";
    case Kind::Taylor: s = "T" + std::to_string(order); break;
    case Kind::Lagrange: s = "L3"; break;
    case Kind::Hermite: s = "H4"; break;
  }
  if (level) s += "n" + std::to_string(*level);
  if (sharing) s += "+shared";
  return s;
}

FormSpec parse_form(const std::string& token) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto bad = [&]() { return std::invalid_argument("unknown form '" + token + "'"); };
  bool shared = false;
  const std::string suffix = "+shared";
  if (t.size() > suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0) {
    shared = true;
    t.erase(t.size() - suffix.size());
  }
  if (t == "ne") {
    if (shared) throw bad();
    return FormSpec::natural();
  }
  if (t.size() < 2 || !std::isdigit(static_cast<unsigned char>(t[1]))) throw bad();
  const unsigned order = static_cast<unsigned>(t[1] - '0');
  std::optional<unsigned> level;
  if (t.size() > 2) {
    if (t[2] != 'n' || t.size() == 3) throw bad();
    const std::string digits = t.substr(3);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw bad();
    }
    level = static_cast<unsigned>(std::stoul(digits));
  }
  switch (t[0]) {
    case 't':
      if (shared) throw bad();
      return FormSpec::taylor(order, level);
    case 'l':
      if (order != 3) throw bad();
      return FormSpec::lagrange(level, shared);
    case 'h':
      if (order != 4) throw bad();
      return FormSpec::hermite(level, shared);
    default: throw bad();
  }
}

namespace {

Interval taylor_impl(const Derivatives& f, const Box2& box, unsigned m, unsigned n, bool maximal) {
  const double r = square_radius(box);
  if (m < 1 || m > 4) throw std::invalid_argument("Taylor form order must be 1..4");
  if (!maximal && m > n) throw std::invalid_argument("Taylor form level must be at least its order");
  // T_0(B) + r [-1,1] s_1 is the exact range of T_1 on a square, so orders
  // 1 and 2 coincide whenever s_1 is taken at the midpoint.
  if (m == 1 && (maximal || n >= 2)) m = 2;

  const double mx = box.mid_x(), my = box.mid_y();
  CenteredPoly2 T(box);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; i + j < m; ++j) T.set(i, j, f.eval({i, j}, mx, my) / (factorial(i) * factorial(j)));
  }
  Interval exact;
  switch (m) {
    case 1: exact = Interval(T.coeff(0, 0)); break;
    case 2: exact = range_biv_linear(T); break;
    case 3: exact = range_biv_quadratic(T); break;
    default: exact = range_biv_cubic(T); break;
  }

  const unsigned top = maximal ? f.degree() : n;
  double S = 0.0;
  for (unsigned k = top; k >= m && k <= top; --k) {
    double sk = 0.0;
    if (!maximal && k == n) {
      for (unsigned j = 0; j <= k; ++j) sk += binomial(k, j) * ne_magnitude(f, {k - j, j}, box);
    } else {
      for (unsigned j = 0; j <= k; ++j) sk += binomial(k, j) * std::abs(f.eval({k - j, j}, mx, my));
    }
    S = S * r + sk / factorial(k);
    if (k == 0) break;
  }
  double rm = 1.0;
  for (unsigned k = 0; k < m; ++k) rm *= r;
  return exact + symmetric(rm * S);
}

Interval lagrange_impl(const Derivatives& f, const Box2& box, unsigned K, bool tails, const GridCache* cache) {
  const double r = square_radius(box);
  const NodeReader nodes(f, cache, {box.x().lo(), box.mid_x(), box.x().hi()},
                         {box.y().lo(), box.mid_y(), box.y().hi()}, 3);
  auto interp = [&](unsigned i, unsigned j) {
    const PartialIndex p{3 * i, 3 * j};
    const Poly2& g = f(p);
    if (g.is_zero()) return Interval(0.0);
    const double* table = nodes.table(p);
    LagrangeGrid values;
    for (unsigned a = 0; a < 3; ++a) {
      for (unsigned b = 0; b < 3; ++b) values[a][b] = nodes.value(p, table, a, b);
    }
    return range_biquadratic_split(lagrange_interpolate(values, box)).sum();
  };
  return recursive_form(f, box, 3, K, tails, omega_lagrange(r), interp);
}

Interval hermite_impl(const Derivatives& f, const Box2& box, unsigned K, bool tails, const GridCache* cache) {
  const double r = square_radius(box);
  const NodeReader nodes(f, cache, {box.x().lo(), box.x().hi(), 0.0}, {box.y().lo(), box.y().hi(), 0.0}, 2);
  auto interp = [&](unsigned i, unsigned j) {
    if (f({4 * i, 4 * j}).is_zero()) return Interval(0.0);
    HermiteData data;
    auto fill = [&](std::array<std::array<double, 2>, 2>& dst, PartialIndex p) {
      const double* table = nodes.table(p);
      for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) dst[a][b] = nodes.value(p, table, a, b);
      }
    };
    fill(data.f, {4 * i, 4 * j});
    fill(data.fx, {4 * i + 1, 4 * j});
    fill(data.fy, {4 * i, 4 * j + 1});
    fill(data.fxy, {4 * i + 1, 4 * j + 1});
    return range_bicubic_split(hermite_interpolate(data, box)).sum();
  };
  return recursive_form(f, box, 4, K, tails, omega_hermite(r), interp);
}

}  // namespace

Interval taylor_form(const Derivatives& f, const Box2& box, unsigned m, unsigned n) {
  return taylor_impl(f, box, m, n, false);
}

Interval maximal_taylor_form(const Derivatives& f, const Box2& box, unsigned m) {
  return taylor_impl(f, box, m, 0, true);
}

CenteredPoly2 lagrange_interpolate(const LagrangeGrid& f, const Box2& box) {
  const double rx = box.rad_x(), ry = box.rad_y();
  if (!(rx > 0.0 && ry > 0.0)) throw std::invalid_argument("lagrange_interpolate: degenerate box");
  CenteredPoly2 p(box);
  p.set(0, 0, f[1][1]);
  p.set(1, 0, (f[2][1] - f[0][1]) / (2.0 * rx));
  p.set(0, 1, (f[1][2] - f[1][0]) / (2.0 * ry));
  p.set(2, 0, (f[2][1] - 2.0 * f[1][1] + f[0][1]) / (2.0 * rx * rx));
  p.set(1, 1, (f[2][2] - f[0][2] - f[2][0] + f[0][0]) / (4.0 * rx * ry));
  p.set(0, 2, (f[1][2] - 2.0 * f[1][1] + f[1][0]) / (2.0 * ry * ry));
  p.set(2, 1, (f[2][2] - 2.0 * f[1][2] + f[0][2] - f[2][0] + 2.0 * f[1][0] - f[0][0]) / (4.0 * rx * rx * ry));
  p.set(1, 2, (f[2][2] - 2.0 * f[2][1] + f[2][0] - f[0][2] + 2.0 * f[0][1] - f[0][0]) / (4.0 * rx * ry * ry));
  p.set(2, 2,
        (f[2][2] - 2.0 * f[1][2] + f[0][2] - 2.0 * f[2][1] + 4.0 * f[1][1] - 2.0 * f[0][1] + f[2][0] -
         2.0 * f[1][0] + f[0][0]) /
            (4.0 * rx * rx * ry * ry));
  return p;
}

CenteredPoly2 hermite_interpolate(const HermiteData& d, const Box2& box) {
  const double rx = box.rad_x(), ry = box.rad_y();
  if (!(rx > 0.0 && ry > 0.0)) throw std::invalid_argument("hermite_interpolate: degenerate box");
  // Cubic Hermite basis on [-r, r]: rows are the coefficients of t^0..t^3,
  // columns the data (value at -r, value at +r, slope at -r, slope at +r).
  auto basis = [](double r) {
    std::array<std::array<double, 4>, 4> M{};
    M[0] = {0.5, 0.5, 0.25 * r, -0.25 * r};
    M[1] = {-0.75 / r, 0.75 / r, -0.25, -0.25};
    M[2] = {0.0, 0.0, -0.25 / r, 0.25 / r};
    M[3] = {0.25 / (r * r * r), -0.25 / (r * r * r), 0.25 / (r * r), 0.25 / (r * r)};
    return M;
  };
  const auto Mx = basis(rx), My = basis(ry);
  // G[a][b]: a, b in {value -, value +, slope -, slope +} along x and y.
  std::array<std::array<double, 4>, 4> G{};
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) {
      G[i][j] = d.f[i][j];
      G[2 + i][j] = d.fx[i][j];
      G[i][2 + j] = d.fy[i][j];
      G[2 + i][2 + j] = d.fxy[i][j];
    }
  }
  CenteredPoly2 p(box);
  for (unsigned u = 0; u < 4; ++u) {
    for (unsigned v = 0; v < 4; ++v) {
      double acc = 0.0;
      for (unsigned a = 0; a < 4; ++a) {
        double row = 0.0;
        for (unsigned b = 0; b < 4; ++b) row += My[v][b] * G[a][b];
        acc += Mx[u][a] * row;
      }
      p.set(u, v, acc);
    }
  }
  return p;
}

Interval recursive_lagrange_form(const Derivatives& f, const Box2& box, unsigned n, const GridCache* cache) {
  if (n < 1) throw std::invalid_argument("Lagrange form level must be at least 1");
  return lagrange_impl(f, box, n - 1, true, cache);
}

Interval maximal_lagrange_form(const Derivatives& f, const Box2& box, const GridCache* cache) {
  return lagrange_impl(f, box, f.degree() / 3, false, cache);
}

Interval recursive_hermite_form(const Derivatives& f, const Box2& box, unsigned n, const GridCache* cache) {
  if (n < 1) throw std::invalid_argument("Hermite form level must be at least 1");
  return hermite_impl(f, box, n - 1, true, cache);
}

Interval maximal_hermite_form(const Derivatives& f, const Box2& box, const GridCache* cache) {
  return hermite_impl(f, box, f.degree() / 4, false, cache);
}

std::vector<PartialIndex> lagrange_partials(unsigned degree, std::optional<unsigned> level) {
  const unsigned K = level ? *level - 1 : degree / 3;
  std::vector<PartialIndex> out;
  for (unsigned i = 0; i <= K; ++i) {
    for (unsigned j = 0; i + j <= K; ++j) out.push_back({3 * i, 3 * j});
  }
  return out;
}

std::vector<PartialIndex> hermite_partials(unsigned degree, std::optional<unsigned> level) {
  const unsigned K = level ? *level - 1 : degree / 4;
  std::vector<PartialIndex> out;
  for (unsigned i = 0; i <= K; ++i) {
    for (unsigned j = 0; i + j <= K; ++j) {
      for (unsigned k = 0; k < 2; ++k) {
        for (unsigned l = 0; l < 2; ++l) out.push_back({4 * i + k, 4 * j + l});
      }
    }
  }
  return out;
}

Interval evaluate(const FormSpec& spec, const Derivatives& f, const Box2& box, const GridCache* cache) {
  const GridCache* c = spec.sharing ? cache : nullptr;
  switch (spec.kind) {
    case FormSpec::Kind::NaturalExtension: return natural_extension(f.poly(), box);
    case FormSpec::Kind::Taylor:
      return spec.level ? taylor_form(f, box, spec.order, *spec.level) : maximal_taylor_form(f, box, spec.order);
    case FormSpec::Kind::Lagrange:
      return spec.level ? recursive_lagrange_form(f, box, *spec.level, c) : maximal_lagrange_form(f, box, c);
    case FormSpec::Kind::Hermite:
      return spec.level ? recursive_hermite_form(f, box, *spec.level, c) : maximal_hermite_form(f, box, c);
  }
  throw std::logic_error("evaluate: unknown form kind");
}

Interval taylor_form(const Poly2& f, const Box2& box, unsigned m, unsigned n) {
  return taylor_form(Derivatives(f), box, m, n);
}

Interval maximal_taylor_form(const Poly2& f, const Box2& box, unsigned m) {
  return maximal_taylor_form(Derivatives(f), box, m);
}

Interval maximal_lagrange_form(const Poly2& f, const Box2& box) { return maximal_lagrange_form(Derivatives(f), box); }

Interval maximal_hermite_form(const Poly2& f, const Box2& box) { return maximal_hermite_form(Derivatives(f), box); }

Interval evaluate(const FormSpec& spec, const Poly2& f, const Box2& box) { return evaluate(spec, Derivatives(f), box); }

}  // namespace rangeforms
