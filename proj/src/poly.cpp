#include "rangeforms/poly.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rangeforms {

Poly2::Poly2() : c_{0.0} {}

Poly2::Poly2(double constant) : c_{constant} {}

Poly2::Poly2(unsigned nx, unsigned ny, std::vector<double> c) : nx_(nx), ny_(ny), c_(std::move(c)) {
  trim();
}

Poly2::Poly2(const std::vector<std::vector<double>>& grid) {
  unsigned nx = std::max<std::size_t>(grid.size(), 1);
  unsigned ny = 1;
  for (const auto& row : grid) ny = std::max<unsigned>(ny, row.size());
  nx_ = nx;
  ny_ = ny;
  c_.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  for (unsigned i = 0; i < grid.size(); ++i) {
    for (unsigned j = 0; j < grid[i].size(); ++j) c_[j * nx_ + i] = grid[i][j];
  }
  trim();
}

Poly2 Poly2::from_monomials(std::initializer_list<Monomial> terms) {
  return from_monomials(std::vector<Monomial>(terms));
}

Poly2 Poly2::from_monomials(const std::vector<Monomial>& terms) {
  unsigned nx = 1, ny = 1;
  for (const auto& t : terms) {
    nx = std::max(nx, t.i + 1);
    ny = std::max(ny, t.j + 1);
  }
  std::vector<double> c(static_cast<std::size_t>(nx) * ny, 0.0);
  for (const auto& t : terms) c[t.j * nx + t.i] += t.coeff;
  return Poly2(nx, ny, std::move(c));
}

Poly2 Poly2::x() { return from_monomials({{1, 0, 1.0}}); }
Poly2 Poly2::y() { return from_monomials({{0, 1, 1.0}}); }

void Poly2::trim() {
  unsigned nx = nx_;
  unsigned ny = ny_;
  auto at = [&](unsigned i, unsigned j) { return c_[j * nx_ + i]; };
  while (ny > 1) {
    bool zero = true;
    for (unsigned i = 0; i < nx && zero; ++i) zero = at(i, ny - 1) == 0.0;
    if (!zero) break;
    --ny;
  }
  while (nx > 1) {
    bool zero = true;
    for (unsigned j = 0; j < ny && zero; ++j) zero = at(nx - 1, j) == 0.0;
    if (!zero) break;
    --nx;
  }
  if (nx == nx_ && ny == ny_) return;
  std::vector<double> c(static_cast<std::size_t>(nx) * ny);
  for (unsigned j = 0; j < ny; ++j) {
    for (unsigned i = 0; i < nx; ++i) c[j * nx + i] = at(i, j);
  }
  nx_ = nx;
  ny_ = ny;
  c_ = std::move(c);
}

unsigned Poly2::degree() const {
  unsigned d = 0;
  for (unsigned j = 0; j < ny_; ++j) {
    for (unsigned i = 0; i < nx_; ++i) {
      if (c_[j * nx_ + i] != 0.0) d = std::max(d, i + j);
    }
  }
  return d;
}

bool Poly2::is_zero() const { return nx_ == 1 && ny_ == 1 && c_[0] == 0.0; }

std::vector<Monomial> Poly2::monomials() const {
  std::vector<Monomial> out;
  for (unsigned j = 0; j < ny_; ++j) {
    for (unsigned i = 0; i < nx_; ++i) {
      const double c = c_[j * nx_ + i];
      if (c != 0.0) out.push_back({i, j, c});
    }
  }
  return out;
}

double Poly2::operator()(double x, double y) const { return eval(*this, x, y); }

Poly2 operator+(const Poly2& a, const Poly2& b) {
  const unsigned nx = std::max(a.deg_x(), b.deg_x()) + 1;
  const unsigned ny = std::max(a.deg_y(), b.deg_y()) + 1;
  std::vector<std::vector<double>> g(nx, std::vector<double>(ny, 0.0));
  for (unsigned i = 0; i < nx; ++i) {
    for (unsigned j = 0; j < ny; ++j) g[i][j] = a.coeff(i, j) + b.coeff(i, j);
  }
  return Poly2(g);
}

Poly2 operator-(const Poly2& a) { return -1.0 * a; }

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(double s, const Poly2& a) {
  std::vector<Monomial> terms = a.monomials();
  for (auto& t : terms) t.coeff *= s;
  return Poly2::from_monomials(terms);
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  const unsigned nx = a.deg_x() + b.deg_x() + 1;
  const unsigned ny = a.deg_y() + b.deg_y() + 1;
  std::vector<std::vector<double>> g(nx, std::vector<double>(ny, 0.0));
  const auto ma = a.monomials();
  const auto mb = b.monomials();
  for (const auto& s : ma) {
    for (const auto& t : mb) g[s.i + t.i][s.j + t.j] += s.coeff * t.coeff;
  }
  return Poly2(g);
}

Poly2 pow(const Poly2& a, unsigned k) {
  Poly2 result(1.0);
  for (unsigned n = 0; n < k; ++n) result = result * a;
  return result;
}

double eval(const Poly2& p, double x, double y) {
  double acc = 0.0;
  for (unsigned j = p.deg_y() + 1; j-- > 0;) {
    double row = 0.0;
    for (unsigned i = p.deg_x() + 1; i-- > 0;) row = row * x + p.coeff(i, j);
    acc = acc * y + row;
  }
  return acc;
}

Poly2 partial(const Poly2& p, PartialIndex d) {
  if (d.i > p.deg_x() || d.j > p.deg_y()) return Poly2();
  unsigned nx = p.deg_x() + 1;
  unsigned ny = p.deg_y() + 1;
  std::vector<std::vector<double>> g(nx, std::vector<double>(ny));
  for (unsigned i = 0; i < nx; ++i) {
    for (unsigned j = 0; j < ny; ++j) g[i][j] = p.coeff(i, j);
  }
  for (unsigned step = 0; step < d.i; ++step) {
    for (unsigned i = 0; i + 1 < nx; ++i) {
      for (unsigned j = 0; j < ny; ++j) g[i][j] = static_cast<double>(i + 1) * g[i + 1][j];
    }
    g.pop_back();
    --nx;
  }
  for (unsigned step = 0; step < d.j; ++step) {
    for (unsigned i = 0; i < nx; ++i) {
      for (unsigned j = 0; j + 1 < ny; ++j) g[i][j] = static_cast<double>(j + 1) * g[i][j + 1];
      g[i].pop_back();
    }
    --ny;
  }
  return Poly2(g);
}

Interval natural_extension(const Poly2& p, const Box2& box) {
  Interval acc(0.0);
  for (unsigned j = p.deg_y() + 1; j-- > 0;) {
    Interval row(0.0);
    for (unsigned i = p.deg_x() + 1; i-- > 0;) row = row * box.x() + p.coeff(i, j);
    acc = acc * box.y() + row;
  }
  return acc;
}

Poly2 shift(const Poly2& p, double x0, double y0) {
  const unsigned nx = p.deg_x() + 1;
  const unsigned ny = p.deg_y() + 1;
  std::vector<std::vector<double>> g(nx, std::vector<double>(ny));
  for (unsigned i = 0; i < nx; ++i) {
    for (unsigned j = 0; j < ny; ++j) g[i][j] = p.coeff(i, j);
  }
  // Repeated synthetic division, first along x for every y exponent...
  for (unsigned j = 0; j < ny; ++j) {
    for (unsigned k = 0; k + 1 < nx; ++k) {
      for (unsigned i = nx - 1; i-- > k;) g[i][j] += x0 * g[i + 1][j];
    }
  }
  // ...then along y for every x exponent.
  for (unsigned i = 0; i < nx; ++i) {
    for (unsigned k = 0; k + 1 < ny; ++k) {
      for (unsigned j = ny - 1; j-- > k;) g[i][j] += y0 * g[i][j + 1];
    }
  }
  return Poly2(g);
}

Derivatives::Derivatives(Poly2 p)
    : nx_(p.deg_x() + 1), ny_(p.deg_y() + 1), degree_(p.degree()) {
  table_.reserve(static_cast<std::size_t>(nx_) * ny_);
  for (unsigned j = 0; j < ny_; ++j) {
    for (unsigned i = 0; i < nx_; ++i) table_.push_back(i == 0 && j == 0 ? p : partial(p, {i, j}));
  }
}

const Poly2& Derivatives::operator()(PartialIndex d) const {
  if (d.i >= nx_ || d.j >= ny_) return zero_;
  return table_[d.j * nx_ + d.i];
}

Poly2 parse_monomials(std::istream& in) {
  std::vector<Monomial> terms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long i = 0, j = 0;
    double c = 0.0;
    if (!(ls >> i)) {
      ls.clear();
      std::string rest;
      if (ls >> rest) throw std::runtime_error("monomial file line " + std::to_string(lineno) + ": expected 'i j coefficient'");
      continue;  // blank or comment-only line
    }
    if (!(ls >> j >> c)) {
      throw std::runtime_error("monomial file line " + std::to_string(lineno) + ": expected 'i j coefficient'");
    }
    std::string trailing;
    if (ls >> trailing) {
      throw std::runtime_error("monomial file line " + std::to_string(lineno) + ": unexpected trailing text");
    }
    if (i < 0 || j < 0) {
      throw std::runtime_error("monomial file line " + std::to_string(lineno) + ": negative exponent");
    }
    terms.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), c});
  }
  return Poly2::from_monomials(terms);
}

Poly2 read_monomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  return parse_monomials(in);
}

void write_monomials(std::ostream& out, const Poly2& p) {
  const auto old = out.precision(17);
  for (const auto& m : p.monomials()) out << m.i << ' ' << m.j << ' ' << m.coeff << '\n';
  out.precision(old);
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
  const auto terms = p.monomials();
  if (terms.empty()) return os << '0';
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << '-';
    first = false;
    os << std::abs(t.coeff);
    if (t.i > 0) os << "*x^" << t.i;
    if (t.j > 0) os << "*y^" << t.j;
  }
  return os;
}

}  // namespace rangeforms
