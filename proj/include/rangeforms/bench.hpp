#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rangeforms/forms.hpp"
#include "rangeforms/interval.hpp"
#include "rangeforms/poly.hpp"

namespace rangeforms {

// Corpus name or path to a monomial file.
Poly2 load_function(const std::string& name_or_path);

// Comma-separated form tokens such as "t2,t3,l3+shared".
std::vector<FormSpec> parse_form_list(const std::string& list);

// count radii from start to stop, equally spaced in log scale.
std::vector<double> log_radii(double start, double stop, unsigned count);

// Least-squares slope of log10(y) against log10(x). Pairs with y <= 0 are skipped.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---- convergence -----------------------------------------------------------

struct FormResult {
  Interval range;
  double hausdorff = 0.0;
};

struct ConvergenceRow {
  double radius = 0.0;
  Interval exact;           // oracle range
  double resolution = 0.0;  // oracle resolution used for this row
  std::vector<FormResult> forms;
};

struct ConvergenceReport {
  std::vector<FormSpec> forms;
  std::vector<ConvergenceRow> rows;
  std::vector<double> slopes;  // one per form, over all rows
};

// Oracle resolution: at most `resolution`, and at most 1e-3 of the smallest
// distance observed at that radius so the fitted slopes are not limited by
// the reference.
ConvergenceReport run_convergence(const Poly2& f, double mx, double my, const std::vector<double>& radii,
                                  const std::vector<FormSpec>& forms, double resolution = 1e-10);

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);

// ---- subdivision grid ------------------------------------------------------

// e_k = a + k (b - a) / n for k = 0..n.
std::vector<double> grid_lines(double a, double b, unsigned n);

// The n x n uniform subdivision of a square domain. Cells are listed row-major:
// index j * n + i covers [e_i, e_{i+1}] x [e_j, e_{j+1}].
class Subdivision {
 public:
  Subdivision(const Box2& domain, unsigned n);

  unsigned n() const { return n_; }
  const Box2& domain() const { return domain_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
  Box2 cell(unsigned i, unsigned j) const;
  Box2 cell(std::size_t index) const { return cell(index % n_, index / n_); }

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  // Lines plus cell midlines, sorted: the Lagrange node coordinates.
  std::vector<double> xs_with_midlines() const;
  std::vector<double> ys_with_midlines() const;

 private:
  Box2 domain_;
  unsigned n_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// The cache a shared form reads from: Lagrange forms use lines and midlines,
// Hermite forms the lines only. Null for forms that do not share.
std::optional<GridCache> build_shared_cache(const FormSpec& spec, const Derivatives& f, const Subdivision& grid);

// Widths of the form over every cell, row-major.
std::vector<double> grid_widths(const FormSpec& spec, const Derivatives& f, const Subdivision& grid);

// Optional hook measuring heap use during a timed run.
class AllocationProbe {
 public:
  virtual ~AllocationProbe() = default;
  virtual void reset() = 0;
  virtual std::size_t peak_bytes() const = 0;
};

struct GridReport {
  FormSpec form;
  double total_ms = 0.0;  // average over the repeats, cache construction included
  double total_width = 0.0;
  std::size_t peak_alloc_bytes = 0;  // 0 without a probe
  double speedup = 1.0;
  double efficacy = 1.0;
};

// Times every form over the grid after one untimed pass, with the repeats
// interleaved across forms. The T2 baseline is always measured and is the
// first entry of the result.
std::vector<GridReport> run_grid(const Poly2& f, const Box2& domain, unsigned n, const std::vector<FormSpec>& forms,
                                 unsigned repeats = 10, AllocationProbe* probe = nullptr);

void write_grid_csv(std::ostream& out, const std::string& function, const std::vector<GridReport>& reports);

// ---- pairwise heatmap ------------------------------------------------------

struct EfficacyCell {
  unsigned i = 0;
  unsigned j = 0;
  double width_a = 0.0;
  double width_b = 0.0;
  // log10(width_a / width_b); NaN when either width is zero.
  double w = 0.0;
};

std::vector<EfficacyCell> run_heatmap(const Poly2& f, const Box2& domain, unsigned n, const FormSpec& a,
                                      const FormSpec& b);

struct Rgb {
  unsigned char r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kYellow{255, 255, 0};
inline constexpr Rgb kDarkGreen{0, 100, 0};
inline constexpr Rgb kDarkRed{139, 0, 0};
inline constexpr Rgb kSentinel{128, 128, 128};

// Green below zero, yellow at zero, red above; w_min and w_max map to the ends.
Rgb heat_color(double w, double w_min, double w_max);

void write_heatmap_csv(std::ostream& out, const Subdivision& grid, const std::vector<EfficacyCell>& cells);
// Binary P6, one pixel per cell, highest y in the top row.
void write_heatmap_ppm(std::ostream& out, unsigned n, const std::vector<EfficacyCell>& cells);

// ---- golden-value check ----------------------------------------------------

struct VerifyOptions {
  std::string figure;                   // "", "fig5", "fig6", "table2" or "table5"
  std::optional<double> tolerance;      // in units of the last printed digit
};

struct VerifyLine {
  std::string figure;
  std::string cell;      // e.g. "r=0.1 T2 q"
  std::string expected;  // as printed
  double actual = 0.0;
  double slack = 0.0;    // absolute
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  std::size_t cells = 0;         // figure cells count range and q together
  std::size_t failed_cells = 0;
  bool ok() const { return failed_cells == 0; }
};

// Reproduces the published convergence tables and efficacy columns. Figure
// values are rounded to the printed precision before comparison; default
// slack is 2 units for the figures and 30 units (0.003) for the tables.
VerifyReport run_verify(const VerifyOptions& options);

void write_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace rangeforms
