#include "rangeforms/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rangeforms/corpus.hpp"
#include "rangeforms/oracle.hpp"

namespace rangeforms {

Poly2 load_function(const std::string& name_or_path) {
  const auto& names = corpus_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return corpus(name_or_path);
  if (!std::filesystem::exists(name_or_path)) {
    throw std::invalid_argument("unknown function '" + name_or_path + "' (not a corpus name or a file)");
  }
  return read_monomial_file(name_or_path);
}

std::vector<FormSpec> parse_form_list(const std::string& list) {
  std::vector<FormSpec> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    // A bare "+shared" entry turns on sharing for every Lagrange/Hermite form listed.
    if (token == "+shared") {
      const std::size_t count = out.size();
      for (std::size_t k = 0; k < count; ++k) {
        if (out[k].kind == FormSpec::Kind::Lagrange || out[k].kind == FormSpec::Kind::Hermite) {
          FormSpec shared = out[k];
          shared.sharing = true;
          if (std::find(out.begin(), out.end(), shared) == out.end()) out.push_back(shared);
        }
      }
      continue;
    }
    out.push_back(parse_form(token));
  }
  if (out.empty()) throw std::invalid_argument("empty form list");
  return out;
}

std::vector<double> log_radii(double start, double stop, unsigned count) {
  if (!(start > 0.0) || !(stop > 0.0)) throw std::invalid_argument("radii must be positive");
  if (count == 0) throw std::invalid_argument("radius count must be positive");
  if (count == 1) return {start};
  std::vector<double> out(count);
  const double a = std::log10(start), b = std::log10(stop);
  for (unsigned k = 0; k < count; ++k) out[k] = std::pow(10.0, a + (b - a) * k / (count - 1));
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("loglog_slope: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) continue;
    const double lx = std::log10(x[k]), ly = std::log10(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / denom;
}

ConvergenceReport run_convergence(const Poly2& f, double mx, double my, const std::vector<double>& radii,
                                  const std::vector<FormSpec>& forms, double resolution) {
  if (!(resolution > 0.0)) throw std::invalid_argument("oracle resolution must be positive");
  const Derivatives d(f);
  ConvergenceReport report;
  report.forms = forms;
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    const Box2 box = Box2::square(mx, my, r);
    ConvergenceRow row;
    row.radius = r;
    for (const auto& spec : forms) {
      std::optional<GridCache> cache;
      if (spec.sharing) {
        // A single box: its own node lines form the grid.
        cache = build_shared_cache(spec, d, Subdivision(box, 1));
      }
      row.forms.push_back({evaluate(spec, d, box, cache ? &*cache : nullptr), 0.0});
    }

    auto measure = [&](double res) {
      const OracleRange o = oracle_range(f, box, res);
      row.exact = o.range;
      row.resolution = o.resolution;
      double q_min = std::numeric_limits<double>::infinity();
      for (auto& fr : row.forms) {
        fr.hausdorff = hausdorff(fr.range, o.range);
        if (fr.hausdorff > 0.0) q_min = std::min(q_min, fr.hausdorff);
      }
      return q_min;
    };
    const double q_min = measure(resolution);
    // Rounding floor of the polynomial values themselves.
    const double floor = 1e-15 * std::max(1.0, row.exact.magnitude());
    if (std::isfinite(q_min) && 1e-3 * q_min < row.resolution) measure(std::max(1e-3 * q_min, floor));
    report.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < forms.size(); ++k) {
    std::vector<double> xs, ys;
    for (const auto& row : report.rows) {
      xs.push_back(row.radius);
      ys.push_back(row.forms[k].hausdorff);
    }
    report.slopes.push_back(loglog_slope(xs, ys));
  }
  return report;
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report) {
  const auto old = out.precision(17);
  out << "radius,form,lo,hi,hausdorff,exact_lo,exact_hi,oracle_resolution\n";
  for (const auto& row : report.rows) {
    for (std::size_t k = 0; k < report.forms.size(); ++k) {
      const auto& fr = row.forms[k];
      out << row.radius << ',' << report.forms[k].label() << ',' << fr.range.lo() << ',' << fr.range.hi() << ','
          << fr.hausdorff << ',' << row.exact.lo() << ',' << row.exact.hi() << ',' << row.resolution << '\n';
    }
  }
  out.precision(old);
}

std::vector<double> grid_lines(double a, double b, unsigned n) {
  if (n == 0) throw std::invalid_argument("grid size must be positive");
  if (!(a < b)) throw std::invalid_argument("grid lines need a < b");
  std::vector<double> e(n + 1);
  for (unsigned k = 0; k <= n; ++k) e[k] = a + k * (b - a) / n;
  e[n] = b;
  return e;
}

Subdivision::Subdivision(const Box2& domain, unsigned n) : domain_(domain), n_(n) {
  if (n == 0) throw std::invalid_argument("grid size must be positive");
  if (!domain.is_nearly_square() || domain.is_degenerate()) {
    throw std::invalid_argument("grid domain must be a non-degenerate square");
  }
  xs_ = grid_lines(domain.x().lo(), domain.x().hi(), n);
  ys_ = grid_lines(domain.y().lo(), domain.y().hi(), n);
}

Box2 Subdivision::cell(unsigned i, unsigned j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("grid cell index");
  return Box2(Interval(xs_[i], xs_[i + 1]), Interval(ys_[j], ys_[j + 1]));
}

namespace {

std::vector<double> with_midlines(const std::vector<double>& e) {
  std::vector<double> out;
  out.reserve(2 * e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    out.push_back(e[k]);
    // Same expression as Interval::midpoint, so lookups match bit for bit.
    if (k + 1 < e.size()) out.push_back(Interval(e[k], e[k + 1]).midpoint());
  }
  return out;
}

}  // namespace

std::vector<double> Subdivision::xs_with_midlines() const { return with_midlines(xs_); }
std::vector<double> Subdivision::ys_with_midlines() const { return with_midlines(ys_); }

std::optional<GridCache> build_shared_cache(const FormSpec& spec, const Derivatives& f, const Subdivision& grid) {
  if (!spec.sharing) return std::nullopt;
  if (spec.kind == FormSpec::Kind::Lagrange) {
    GridCache cache(grid.xs_with_midlines(), grid.ys_with_midlines());
    cache.populate(f, lagrange_partials(f.degree(), spec.level));
    return cache;
  }
  if (spec.kind == FormSpec::Kind::Hermite) {
    GridCache cache(grid.xs(), grid.ys());
    cache.populate(f, hermite_partials(f.degree(), spec.level));
    return cache;
  }
  return std::nullopt;
}

std::vector<double> grid_widths(const FormSpec& spec, const Derivatives& f, const Subdivision& grid) {
  const auto cache = build_shared_cache(spec, f, grid);
  const GridCache* c = cache ? &*cache : nullptr;
  std::vector<double> widths(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) widths[k] = evaluate(spec, f, grid.cell(k), c).width();
  return widths;
}

namespace {

struct TimedRun {
  double ms;
  double total_width;
};

TimedRun timed_grid_run(const FormSpec& spec, const Derivatives& f, const Subdivision& grid) {
  const auto start = std::chrono::steady_clock::now();
  const auto cache = build_shared_cache(spec, f, grid);
  const GridCache* c = cache ? &*cache : nullptr;
  double total = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) total += evaluate(spec, f, grid.cell(k), c).width();
  const auto stop = std::chrono::steady_clock::now();
  return {std::chrono::duration<double, std::milli>(stop - start).count(), total};
}

}  // namespace

std::vector<GridReport> run_grid(const Poly2& f, const Box2& domain, unsigned n, const std::vector<FormSpec>& forms,
                                 unsigned repeats, AllocationProbe* probe) {
  if (repeats == 0) throw std::invalid_argument("repeats must be positive");
  const Derivatives d(f);
  const Subdivision grid(domain, n);

  std::vector<FormSpec> order{FormSpec::taylor(2)};
  for (const auto& s : forms) {
    if (!(s == order.front())) order.push_back(s);
  }

  std::vector<GridReport> reports(order.size());
  std::vector<double> ms(order.size(), 0.0);
  for (std::size_t f = 0; f < order.size(); ++f) {
    reports[f].form = order[f];
    reports[f].total_width = timed_grid_run(order[f], d, grid).total_width;  // warm-up
  }
  // Repeats are interleaved across forms so clock drift hits every form alike.
  for (unsigned k = 0; k < repeats; ++k) {
    for (std::size_t f = 0; f < order.size(); ++f) {
      if (probe != nullptr) probe->reset();
      const TimedRun run = timed_grid_run(order[f], d, grid);
      if (probe != nullptr) reports[f].peak_alloc_bytes = std::max(reports[f].peak_alloc_bytes, probe->peak_bytes());
      ms[f] += run.ms;
    }
  }
  for (std::size_t f = 0; f < order.size(); ++f) reports[f].total_ms = ms[f] / repeats;
  const GridReport& base = reports.front();
  for (auto& rep : reports) {
    rep.speedup = rep.total_ms > 0.0 ? base.total_ms / rep.total_ms : std::numeric_limits<double>::quiet_NaN();
    rep.efficacy = rep.total_width > 0.0 ? base.total_width / rep.total_width : std::numeric_limits<double>::quiet_NaN();
  }
  return reports;
}

void write_grid_csv(std::ostream& out, const std::string& function, const std::vector<GridReport>& reports) {
  const auto old = out.precision(17);
  out << "function,form,total_ms,total_width,peak_alloc_bytes,speedup,efficacy\n";
  for (const auto& r : reports) {
    out << function << ',' << r.form.label() << ',' << r.total_ms << ',' << r.total_width << ',' << r.peak_alloc_bytes
        << ',' << r.speedup << ',' << r.efficacy << '\n';
  }
  out.precision(old);
}

std::vector<EfficacyCell> run_heatmap(const Poly2& f, const Box2& domain, unsigned n, const FormSpec& a,
                                      const FormSpec& b) {
  const Derivatives d(f);
  const Subdivision grid(domain, n);
  const auto wa = grid_widths(a, d, grid);
  const auto wb = grid_widths(b, d, grid);
  std::vector<EfficacyCell> cells(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    auto& c = cells[k];
    c.i = static_cast<unsigned>(k % n);
    c.j = static_cast<unsigned>(k / n);
    c.width_a = wa[k];
    c.width_b = wb[k];
    c.w = (wa[k] > 0.0 && wb[k] > 0.0) ? std::log10(wa[k] / wb[k]) : std::numeric_limits<double>::quiet_NaN();
  }
  return cells;
}

namespace {

Rgb lerp(Rgb a, Rgb b, double t) {
  t = std::clamp(t, 0.0, 1.0);
  auto mix = [t](unsigned char x, unsigned char y) {
    return static_cast<unsigned char>(std::lround(x + t * (static_cast<double>(y) - x)));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

}  // namespace

Rgb heat_color(double w, double w_min, double w_max) {
  if (std::isnan(w)) return kSentinel;
  if (w < 0.0) return w_min < 0.0 ? lerp(kYellow, kDarkGreen, w / w_min) : kYellow;
  if (w > 0.0) return w_max > 0.0 ? lerp(kYellow, kDarkRed, w / w_max) : kYellow;
  return kYellow;
}

void write_heatmap_csv(std::ostream& out, const Subdivision& grid, const std::vector<EfficacyCell>& cells) {
  const auto old = out.precision(17);
  out << "i,j,x_mid,y_mid,width_a,width_b,w\n";
  for (const auto& c : cells) {
    const Box2 box = grid.cell(c.i, c.j);
    out << c.i << ',' << c.j << ',' << box.mid_x() << ',' << box.mid_y() << ',' << c.width_a << ',' << c.width_b
        << ',' << c.w << '\n';
  }
  out.precision(old);
}

void write_heatmap_ppm(std::ostream& out, unsigned n, const std::vector<EfficacyCell>& cells) {
  if (cells.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("heatmap size mismatch");
  double w_min = 0.0, w_max = 0.0;
  for (const auto& c : cells) {
    if (std::isnan(c.w)) continue;
    w_min = std::min(w_min, c.w);
    w_max = std::max(w_max, c.w);
  }
  out << "P6\n" << n << ' ' << n << "\n255\n";
  for (unsigned row = 0; row < n; ++row) {
    const unsigned j = n - 1 - row;
    for (unsigned i = 0; i < n; ++i) {
      const Rgb px = heat_color(cells[static_cast<std::size_t>(j) * n + i].w, w_min, w_max);
      out.put(static_cast<char>(px.r)).put(static_cast<char>(px.g)).put(static_cast<char>(px.b));
    }
  }
}

// ---- verify ------------------------------------------------------------------

namespace {

struct GoldenForm {
  const char* form;
  const char* lo;
  const char* hi;
  const char* q;
};

struct GoldenColumn {
  double radius;
  std::vector<GoldenForm> forms;
};

struct GoldenFigure {
  const char* id;
  const char* function;
  double mx, my;
  // The clover-4 table lists the ranges of -f; q is unaffected by the sign.
  bool negated;
  std::vector<GoldenColumn> columns;
};

const std::vector<GoldenFigure>& golden_figures() {
  static const std::vector<GoldenFigure> figures{
      {"fig5", "clover-4", 0.1, 0.2, true,
       {{0.1,
         {{"T2", "-1.4303", "-0.6978", "0.2667"},
          {"T3", "-1.3976", "-0.8436", "0.1209"},
          {"L3", "-1.3688", "-0.8688", "0.0958"},
          {"T4", "-1.3630", "-0.9397", "0.0249"},
          {"H4", "-1.3621", "-0.9508", "0.0138"}}},
        {0.01,
         {{"T2", "-1.07824745", "-1.04988220", "0.00253750"},
          {"T3", "-1.07792045", "-1.05238265", "0.00003705"},
          {"L3", "-1.07789250", "-1.05241267", "0.00000703"},
          {"T4", "-1.07788591", "-1.05241719", "0.00000252"},
          {"H4", "-1.07788571", "-1.05241821", "0.00000149"}}}}},
      {"fig6", "grass", 0.1, 0.1, false,
       {{0.005,
         {{"T2", "-73.566", "-46.367", "11.6914"},
          {"T3", "-62.737", "-46.391", "0.8625"},
          {"L3", "-62.639", "-45.980", "0.7648"},
          {"T4", "-61.926", "-46.404", "0.0516"},
          {"H4", "-61.947", "-46.360", "0.0728"}}},
        {0.0005,
         {{"T2", "-60.6614110", "-59.2708307", "0.12624978"},
          {"T3", "-60.5351831", "-59.2710780", "0.00002195"},
          {"L3", "-60.5355311", "-59.2707216", "0.00036989"},
          {"T4", "-60.5351702", "-59.2710910", "0.00000904"},
          {"H4", "-60.5351657", "-59.2710865", "0.00000503"}}}}},
  };
  return figures;
}

struct GoldenEfficacy {
  const char* function;
  // T2 (baseline), T3, T4, L3, L3 shared, H4, H4 shared.
  std::array<const char*, 7> values;
};

const std::vector<GoldenEfficacy>& golden_table(const std::string& id) {
  static const std::vector<GoldenEfficacy> table2{
      {"clover-4", {"1", "1.1978", "1.1991", "1.1950", "1.1950", "1.1997", "1.1997"}},
      {"clover-5", {"1", "1.2223", "1.2229", "1.2195", "1.2195", "1.2240", "1.2240"}},
      {"clover-8", {"1", "1.2986", "1.2990", "1.2941", "1.2941", "1.3014", "1.3014"}},
      {"grass", {"1", "1.1993", "1.2014", "1.1890", "1.1890", "1.2008", "1.2008"}},
  };
  static const std::vector<GoldenEfficacy> table5{
      {"cardioid", {"1", "1.0710", "1.0712", "1.0703", "1.0703", "1.0713", "1.0713"}},
      {"lemniscate", {"1", "1.0671", "1.0676", "1.0669", "1.0669", "1.0676", "1.0676"}},
      {"octic-flower", {"1", "1.1581", "1.1604", "1.1562", "1.1562", "1.1606", "1.1606"}},
  };
  return id == "table2" ? table2 : table5;
}

int printed_decimals(const std::string& s) {
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

// Rounded to the printed precision, then compared with `units` of slack in the last digit.
VerifyLine figure_line(const std::string& figure, const std::string& cell, const std::string& expected, double actual,
                       double units) {
  const int dec = printed_decimals(expected);
  const double unit = std::pow(10.0, -dec);
  VerifyLine line{figure, cell, expected, actual, units * unit, false};
  const double diff = std::abs(round_to(actual, dec) - std::stod(expected));
  line.pass = diff <= units * unit + 1e-6 * unit;
  return line;
}

void verify_figure(const GoldenFigure& fig, double units, VerifyReport& report) {
  std::vector<FormSpec> forms;
  for (const auto& g : fig.columns.front().forms) forms.push_back(parse_form(g.form));
  std::vector<double> radii;
  for (const auto& c : fig.columns) radii.push_back(c.radius);
  const ConvergenceReport conv = run_convergence(corpus(fig.function), fig.mx, fig.my, radii, forms, 1e-12);

  for (std::size_t c = 0; c < fig.columns.size(); ++c) {
    const auto& column = fig.columns[c];
    std::ostringstream rs;
    rs << "r=" << column.radius;
    for (std::size_t k = 0; k < column.forms.size(); ++k) {
      const auto& g = column.forms[k];
      Interval range = conv.rows[c].forms[k].range;
      if (fig.negated) range = Interval(-range.hi(), -range.lo());
      const std::string prefix = rs.str() + " " + g.form;
      const VerifyLine lines[3] = {
          figure_line(fig.id, prefix + " lo", g.lo, range.lo(), units),
          figure_line(fig.id, prefix + " hi", g.hi, range.hi(), units),
          figure_line(fig.id, prefix + " q", g.q, conv.rows[c].forms[k].hausdorff, units),
      };
      bool pass = true;
      for (const auto& l : lines) {
        pass = pass && l.pass;
        report.lines.push_back(l);
      }
      ++report.cells;
      if (!pass) ++report.failed_cells;
    }
  }
}

void verify_table(const std::string& id, double units, VerifyReport& report) {
  static const char* labels[7] = {"T2", "T3", "T4", "L3", "L3+shared", "H4", "H4+shared"};
  for (const auto& row : golden_table(id)) {
    const Poly2 f = corpus(row.function);
    const Derivatives d(f);
    const Subdivision grid(corpus_domain(row.function), 32);
    const auto sum = [&](const FormSpec& spec) {
      double total = 0.0;
      for (double w : grid_widths(spec, d, grid)) total += w;
      return total;
    };
    const double base = sum(FormSpec::taylor(2));
    for (int k = 0; k < 7; ++k) {
      const double efficacy = base / sum(parse_form(labels[k]));
      // All efficacy columns are printed with four decimals.
      const double slack = units * 1e-4;
      VerifyLine line{id, std::string(row.function) + " " + labels[k] + " efficacy", row.values[k], efficacy, slack,
                      false};
      line.pass = std::abs(efficacy - std::stod(row.values[k])) <= slack + 1e-12;
      report.lines.push_back(line);
      ++report.cells;
      if (!line.pass) ++report.failed_cells;
    }
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const std::string& only = options.figure;
  if (!only.empty() && only != "fig5" && only != "fig6" && only != "table2" && only != "table5") {
    throw std::invalid_argument("unknown figure '" + only + "' (expected fig5, fig6, table2 or table5)");
  }
  if (options.tolerance && !(*options.tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  VerifyReport report;
  for (const auto& fig : golden_figures()) {
    if (only.empty() || only == fig.id) verify_figure(fig, options.tolerance.value_or(2.0), report);
  }
  for (const char* id : {"table2", "table5"}) {
    if (only.empty() || only == id) verify_table(id, options.tolerance.value_or(30.0), report);
  }
  return report;
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
  const auto old = out.precision(17);
  out << "figure,cell,expected,actual,slack,status\n";
  for (const auto& l : report.lines) {
    out << l.figure << ',' << l.cell << ',' << l.expected << ',' << l.actual << ',' << l.slack << ','
        << (l.pass ? "PASS" : "FAIL") << '\n';
  }
  out << "# cells " << report.cells << ", failed " << report.failed_cells << '\n';
  out.precision(old);
}

}  // namespace rangeforms
