#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rangeforms/bench.hpp"
#include "rangeforms/corpus.hpp"

using namespace rangeforms;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("helpers") {
    CHECK(load_function("grass") == corpus("grass"));
    CHECK_THROWS_AS(load_function("no-such-function"), std::invalid_argument);

    const auto forms = parse_form_list("t3, l3 ,h4,+shared");
    REQUIRE(forms.size() == 5);
    CHECK(forms[3].label() == "L3+shared");
    CHECK(forms[4].label() == "H4+shared");
    CHECK_THROWS_AS(parse_form_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_list("t3,q9"), std::invalid_argument);

    const auto r = log_radii(1e-1, 1e-3, 5);
    REQUIRE(r.size() == 5);
    CHECK(r.front() == doctest::Approx(1e-1));
    CHECK(r[2] == doctest::Approx(1e-2));
    CHECK(r.back() == doctest::Approx(1e-3));
    CHECK_THROWS_AS(log_radii(0, 1, 3), std::invalid_argument);

    std::vector<double> x, y;
    for (double v : r) {
      x.push_back(v);
      y.push_back(5 * v * v * v);
    }
    CHECK(loglog_slope(x, y) == doctest::Approx(3.0));
    CHECK(std::isnan(loglog_slope({1.0}, {1.0})));
  }

  TEST_CASE("grid lines and subdivision") {
    const auto e = grid_lines(-1, 2, 3);
    CHECK(e == std::vector<double>{-1, 0, 1, 2});
    CHECK(grid_lines(0, 0.3, 7).back() == 0.3);

    const Subdivision g(Box2(Interval(0, 1), Interval(2, 3)), 4);
    CHECK(g.size() == 16);
    CHECK(g.cell(1, 2) == Box2(Interval(0.25, 0.5), Interval(2.5, 2.75)));
    CHECK(g.cell(std::size_t{9}) == g.cell(1, 2));
    CHECK(g.xs_with_midlines().size() == 9);
    const auto mids = g.ys_with_midlines();
    CHECK(std::is_sorted(mids.begin(), mids.end()));
    CHECK_THROWS_AS(g.cell(4, 0), std::out_of_range);
    CHECK_THROWS_AS(Subdivision(Box2(Interval(0, 1), Interval(0, 2)), 4), std::invalid_argument);
    CHECK_THROWS_AS(Subdivision(Box2(Interval(0, 1), Interval(0, 1)), 0), std::invalid_argument);
    for (const auto& name : corpus_names()) {
      const Subdivision s(corpus_domain(name), 32);
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(s.cell(k).is_nearly_square());
    }
  }

  TEST_CASE("grid widths match per-cell evaluation") {
    const Derivatives d(corpus("cardioid"));
    const Subdivision g(corpus_domain("cardioid"), 8);
    for (const char* f : {"T2", "T4", "L3", "H4"}) {
      const FormSpec spec = parse_form(f);
      const auto w = grid_widths(spec, d, g);
      REQUIRE(w.size() == 64);
      for (std::size_t k = 0; k < g.size(); ++k) CHECK(w[k] == evaluate(spec, d, g.cell(k)).width());
    }
  }

  TEST_CASE("sharing does not change values") {
    for (const auto& name : {"clover-4", "octic-flower"}) {
      const Derivatives d(corpus(name));
      const Subdivision g(corpus_domain(name), 32);
      CHECK(grid_widths(FormSpec::lagrange(), d, g) == grid_widths(FormSpec::lagrange(std::nullopt, true), d, g));
      CHECK(grid_widths(FormSpec::hermite(), d, g) == grid_widths(FormSpec::hermite(std::nullopt, true), d, g));
      CHECK_FALSE(build_shared_cache(FormSpec::taylor(3), d, g).has_value());
      const auto lc = build_shared_cache(FormSpec::lagrange(std::nullopt, true), d, g);
      REQUIRE(lc.has_value());
      CHECK(lc->node_count() == 65u * 65u);
      const auto hc = build_shared_cache(FormSpec::hermite(std::nullopt, true), d, g);
      REQUIRE(hc.has_value());
      CHECK(hc->node_count() == 33u * 33u);
    }
  }

  TEST_CASE("grid report") {
    const auto reports = run_grid(corpus("lemniscate"), corpus_domain("lemniscate"), 4, parse_form_list("t3,l3,+shared"), 2);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].form.label() == "T2");
    CHECK(reports[0].speedup == 1.0);
    CHECK(reports[0].efficacy == 1.0);
    CHECK(reports[0].peak_alloc_bytes == 0);
    CHECK(reports[2].total_width == reports[3].total_width);
    for (const auto& r : reports) {
      CHECK(r.total_ms >= 0.0);
      CHECK(r.efficacy == doctest::Approx(reports[0].total_width / r.total_width));
    }
    const auto again = run_grid(corpus("lemniscate"), corpus_domain("lemniscate"), 4, parse_form_list("t3,l3,+shared"), 1);
    for (std::size_t k = 0; k < reports.size(); ++k) CHECK(again[k].total_width == reports[k].total_width);

    const Box2 dom = corpus_domain("cardioid");
    const auto one = run_grid(corpus("cardioid"), dom, 1, {FormSpec::hermite()}, 1);
    CHECK(one[1].total_width == maximal_hermite_form(corpus("cardioid"), dom).width());

    std::ostringstream csv;
    write_grid_csv(csv, "lemniscate", reports);
    const auto rows = lines_of(csv.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "function,form,total_ms,total_width,peak_alloc_bytes,speedup,efficacy");
    CHECK(rows[4].rfind("lemniscate,L3+shared,", 0) == 0);
    CHECK_THROWS_AS(run_grid(corpus("cardioid"), dom, 2, {}, 0), std::invalid_argument);
  }

  TEST_CASE("heatmap semantics") {
    const Box2 dom = corpus_domain("clover-5");
    const auto cells = run_heatmap(corpus("clover-5"), dom, 6, FormSpec::taylor(3), FormSpec::taylor(2));
    REQUIRE(cells.size() == 36);
    for (const auto& c : cells) {
      CHECK(c.w == std::log10(c.width_a / c.width_b));
      CHECK(c.i == (&c - cells.data()) % 6);
    }
    const auto self = run_heatmap(corpus("clover-5"), dom, 6, FormSpec::hermite(), FormSpec::hermite(std::nullopt, true));
    for (const auto& c : self) {
      CHECK(c.w == 0.0);
      CHECK(heat_color(c.w, -1, 1) == kYellow);
    }
    const auto flat = run_heatmap(Poly2(2.0), dom, 2, FormSpec::taylor(3), FormSpec::taylor(2));
    for (const auto& c : flat) CHECK(std::isnan(c.w));

    std::ostringstream csv;
    write_heatmap_csv(csv, Subdivision(dom, 6), cells);
    CHECK(lines_of(csv.str()).size() == 37);
    CHECK(lines_of(csv.str())[0] == "i,j,x_mid,y_mid,width_a,width_b,w");
  }

  TEST_CASE("heat colors") {
    CHECK(heat_color(0.0, -2, 3) == kYellow);
    CHECK(heat_color(-2.0, -2, 3) == kDarkGreen);
    CHECK(heat_color(3.0, -2, 3) == kDarkRed);
    CHECK(heat_color(NAN, -2, 3) == kSentinel);
    const Rgb mid = heat_color(1.5, -2, 3);
    CHECK(mid.r > kDarkRed.r);
    CHECK(mid.r < kYellow.r);
    CHECK(mid.b == 0);
  }

  TEST_CASE("ppm layout") {
    std::vector<EfficacyCell> cells(4);
    for (unsigned k = 0; k < 4; ++k) {
      cells[k].i = k % 2;
      cells[k].j = k / 2;
    }
    cells[2].w = 1.0;  // i = 0, j = 1: top-left pixel
    cells[1].w = -1.0;  // i = 1, j = 0: bottom-right pixel
    std::ostringstream out;
    write_heatmap_ppm(out, 2, cells);
    const std::string s = out.str();
    const std::string header = "P6\n2 2\n255\n";
    REQUIRE(s.size() == header.size() + 12);
    CHECK(s.substr(0, header.size()) == header);
    auto px = [&](int k) {
      return Rgb{static_cast<unsigned char>(s[header.size() + 3 * k]), static_cast<unsigned char>(s[header.size() + 3 * k + 1]),
                 static_cast<unsigned char>(s[header.size() + 3 * k + 2])};
    };
    CHECK(px(0) == kDarkRed);
    CHECK(px(1) == kYellow);
    CHECK(px(2) == kYellow);
    CHECK(px(3) == kDarkGreen);
    std::ostringstream bad;
    CHECK_THROWS_AS(write_heatmap_ppm(bad, 3, cells), std::invalid_argument);
  }

  TEST_CASE("verify filtering and tolerance") {
    VerifyOptions opt;
    opt.figure = "fig5";
    const VerifyReport r = run_verify(opt);
    CHECK(r.cells == 10);
    CHECK(r.ok());
    for (const auto& l : r.lines) CHECK(l.figure == "fig5");

    opt.figure = "table2";
    opt.tolerance = 0.0;
    const VerifyReport strict = run_verify(opt);
    CHECK(strict.cells == 28);
    CHECK_FALSE(strict.ok());

    std::ostringstream out;
    write_verify_report(out, strict);
    const auto rows = lines_of(out.str());
    CHECK(rows.front() == "figure,cell,expected,actual,slack,status");
    CHECK(rows.back() == "# cells 28, failed " + std::to_string(strict.failed_cells));

    opt.figure = "fig9";
    CHECK_THROWS_AS(run_verify(opt), std::invalid_argument);
    opt.figure = "";
    opt.tolerance = -1.0;
    CHECK_THROWS_AS(run_verify(opt), std::invalid_argument);
  }
}
