// rangebench: convergence tables, subdivision timings, efficacy heatmaps and
// the golden-value check.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "alloc_counter.hpp"
#include "rangeforms/bench.hpp"
#include "rangeforms/corpus.hpp"

using namespace rangeforms;

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument(what + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw std::invalid_argument(what + ": expected " + std::to_string(expected) + " comma-separated numbers");
  }
  return out;
}

Box2 resolve_domain(const std::string& function, const std::string& domain) {
  if (domain.empty()) {
    const auto& names = corpus_names();
    if (std::find(names.begin(), names.end(), function) == names.end()) {
      throw std::invalid_argument("--domain is required for functions outside the corpus");
    }
    return corpus_domain(function);
  }
  const auto v = parse_numbers(domain, 4, "--domain");
  if (!(v[0] < v[1]) || !(v[2] < v[3])) throw std::invalid_argument("--domain: need x0 < x1 and y0 < y1");
  return Box2(Interval(v[0], v[1]), Interval(v[2], v[3]));
}

// Writes to the file, or to stdout for "" and "-".
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range enclosures of bivariate polynomials: benchmarks and reproduction checks"};
  app.require_subcommand(1);

  std::string function, domain, out;

  auto* converge = app.add_subcommand("converge", "Hausdorff distance to the true range over shrinking squares");
  std::string midpoint = "0.1,0.2", radii = "0.031622776601683791,0.00031622776601683794,8", fit;
  double resolution = 1e-10;
  std::string converge_forms = "t2,t3,l3,t4,h4";
  converge->add_option("--function", function, "Corpus name or monomial file")->required();
  converge->add_option("--midpoint", midpoint, "mx,my")->capture_default_str();
  converge->add_option("--radii", radii, "start,stop,count (log spaced)")->capture_default_str();
  converge->add_option("--forms", converge_forms, "Comma-separated forms")->capture_default_str();
  converge->add_option("--resolution", resolution, "Oracle resolution (tightened automatically at small radii)")
      ->capture_default_str();
  converge->add_option("--fit", fit, "lo,hi radius window for the slope fit (default: all radii)");
  converge->add_option("--out", out, "CSV output (default stdout)");

  auto* grid = app.add_subcommand("grid", "Total time and width over an n x n subdivision");
  unsigned n = 32, repeats = 10;
  std::string grid_forms = "t3,t4,l3,h4,+shared";
  grid->add_option("--function", function, "Corpus name or monomial file")->required();
  grid->add_option("--domain", domain, "x0,x1,y0,y1 (default: the corpus domain)");
  grid->add_option("--grid", n, "Cells per side")->capture_default_str()->check(CLI::PositiveNumber);
  grid->add_option("--forms", grid_forms, "Comma-separated forms; T2 is always added")->capture_default_str();
  grid->add_option("--repeats", repeats, "Timed runs to average")->capture_default_str()->check(CLI::PositiveNumber);
  grid->add_option("--out", out, "CSV output (default stdout)");

  auto* heatmap = app.add_subcommand("heatmap", "Per-cell log10 width ratio of two forms");
  std::string heat_forms = "t3,t2", ppm;
  heatmap->add_option("--function", function, "Corpus name or monomial file")->required();
  heatmap->add_option("--domain", domain, "x0,x1,y0,y1 (default: the corpus domain)");
  heatmap->add_option("--grid", n, "Cells per side")->capture_default_str()->check(CLI::PositiveNumber);
  heatmap->add_option("--forms", heat_forms, "Two forms A,B; W = log10(width A / width B)")->capture_default_str();
  heatmap->add_option("--out", out, "CSV output (default stdout)");
  heatmap->add_option("--ppm", ppm, "PPM (P6) image output");

  auto* verify = app.add_subcommand("verify", "Reproduce the published convergence and efficacy values");
  VerifyOptions vopt;
  double tolerance = 0.0;
  verify->add_option("--figure", vopt.figure, "Restrict to fig5, fig6, table2 or table5");
  verify->add_option("--tolerance", tolerance, "Slack in units of the last printed digit");
  verify->add_option("--out", out, "Report output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*converge) {
      const auto mid = parse_numbers(midpoint, 2, "--midpoint");
      const auto spec = parse_numbers(radii, 3, "--radii");
      if (spec[2] < 1 || spec[2] != std::floor(spec[2])) throw std::invalid_argument("--radii: count must be >= 1");
      const Poly2 f = load_function(function);
      const auto list = parse_form_list(converge_forms);
      const auto report = run_convergence(f, mid[0], mid[1], log_radii(spec[0], spec[1], static_cast<unsigned>(spec[2])),
                                          list, resolution);
      emit(out, [&](std::ostream& os) { write_convergence_csv(os, report); });

      double lo = 0.0, hi = INFINITY;
      if (!fit.empty()) {
        const auto w = parse_numbers(fit, 2, "--fit");
        lo = std::min(w[0], w[1]);
        hi = std::max(w[0], w[1]);
      }
      std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
      log << "form   slope\n";
      for (std::size_t k = 0; k < list.size(); ++k) {
        std::vector<double> xs, ys;
        for (const auto& row : report.rows) {
          if (row.radius < lo || row.radius > hi) continue;
          xs.push_back(row.radius);
          ys.push_back(row.forms[k].hausdorff);
        }
        log << std::left << std::setw(6) << list[k].label() << ' ' << std::fixed << std::setprecision(3)
            << loglog_slope(xs, ys) << '\n';
      }
    } else if (*grid) {
      const Poly2 f = load_function(function);
      const Box2 box = resolve_domain(function, domain);
      HeapCounter probe;
      const auto reports = run_grid(f, box, n, parse_form_list(grid_forms), repeats, &probe);
      emit(out, [&](std::ostream& os) { write_grid_csv(os, function, reports); });
    } else if (*heatmap) {
      const auto list = parse_form_list(heat_forms);
      if (list.size() != 2) throw std::invalid_argument("--forms: heatmap needs exactly two forms");
      const Poly2 f = load_function(function);
      const Box2 box = resolve_domain(function, domain);
      const auto cells = run_heatmap(f, box, n, list[0], list[1]);
      const Subdivision sub(box, n);
      emit(out, [&](std::ostream& os) { write_heatmap_csv(os, sub, cells); });
      if (!ppm.empty()) emit(ppm, [&](std::ostream& os) { write_heatmap_ppm(os, n, cells); });
      std::size_t zero = 0;
      for (const auto& c : cells) zero += std::isnan(c.w) ? 1 : 0;
      if (zero > 0) std::cerr << "warning: " << zero << " cell(s) with a zero-width range (sentinel color)\n";
    } else if (*verify) {
      if (verify->count("--tolerance") > 0) vopt.tolerance = tolerance;
      const auto report = run_verify(vopt);
      emit(out, [&](std::ostream& os) { write_verify_report(os, report); });
      if (!report.ok()) {
        std::cerr << report.failed_cells << " of " << report.cells << " cells outside tolerance\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
