#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "strata/errors.hpp"
#include "strata/report.hpp"

using namespace strata;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("ideal generator grammar") {
  using P = std::pair<long long, long long>;
  CHECK(report::parse_ideal_gens("10") == std::vector<P>{{10, 0}});
  CHECK(report::parse_ideal_gens("10, 5+5*w") == std::vector<P>{{10, 0}, {5, 5}});
  CHECK(report::parse_ideal_gens("3*w") == std::vector<P>{{0, 3}});
  CHECK(report::parse_ideal_gens("-7") == std::vector<P>{{-7, 0}});
  CHECK(report::parse_ideal_gens("2-1*w") == std::vector<P>{{2, -1}});
  CHECK(report::parse_ideal_gens(" 4 , 1 + 2*w ") == std::vector<P>{{4, 0}, {1, 2}});
  CHECK(report::parse_ideal_gens("-2*w") == std::vector<P>{{0, -2}});
  CHECK(report::parse_ideal_gens("+3, 0") == std::vector<P>{{3, 0}, {0, 0}});

  CHECK_THROWS_AS(report::parse_ideal_gens(""), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("10,"), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("w"), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("2+w"), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("five"), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("1*w+2"), Error);
  CHECK_THROWS_AS(report::parse_ideal_gens("99999999999999999999"), Error);
}

TEST_CASE("report for Z/12") {
  report::RunOptions opts;
  opts.verify = true;
  report::ReportDocument doc = report::run_zn(12, opts);
  CHECK(doc.kind == "zn");
  CHECK(doc.n == 12);
  CHECK(doc.order == 12);
  REQUIRE(doc.factorization.size() == 2);
  CHECK(doc.factorization[0].prime == "2");
  CHECK(doc.factorization[0].exponent == 2);
  CHECK(doc.factorization[1].prime == "3");
  REQUIRE(doc.nodes.size() == 4);
  CHECK(doc.components.size() == 4);
  CHECK(doc.verified);
  CHECK(doc.match);
  CHECK(doc.recipe_ms >= 0.0);
  CHECK(doc.oracle_ms > 0.0);

  long long total = 0;
  for (const auto& node : doc.nodes) total += node.size;
  CHECK(total == 12);

  for (const auto& node : doc.nodes)
    for (int up : node.covers) {
      const auto& upper = doc.nodes[(size_t)up];
      CHECK(node.subset.size() == upper.subset.size() + 1);
      for (int p : upper.subset)
        CHECK(std::find(node.subset.begin(), node.subset.end(), p) !=
              node.subset.end());
    }
}

TEST_CASE("report for the trivial ring") {
  report::ReportDocument doc = report::run_zn(1, {});
  CHECK(doc.order == 1);
  CHECK(doc.factorization.empty());
  REQUIRE(doc.nodes.size() == 1);
  CHECK(doc.nodes[0].size == 1);
  REQUIRE(doc.components.size() == 1);
  CHECK(doc.components[0].base.shown == std::vector<std::string>{"0"});
}

TEST_CASE("report for the order-50 quadratic quotient") {
  report::RunOptions opts;
  opts.verify = true;
  report::ReportDocument doc = report::run_quad(-5, "10, 5+5*w", opts);
  CHECK(doc.kind == "quad");
  CHECK(doc.d == -5);
  CHECK(doc.ideal_m == 10);
  CHECK(doc.ideal_c == 5);
  CHECK(doc.ideal_f == 5);
  CHECK(doc.order == 50);
  CHECK(doc.nodes.size() == 4);
  CHECK(doc.match);
  CHECK(doc.nodes[0].base_size == 20);
}

TEST_CASE("quotient by a norm-2 prime reports a field") {
  report::ReportDocument doc = report::run_quad(-5, "2, 1+1*w", {});
  CHECK(doc.order == 2);
  REQUIRE(doc.nodes.size() == 2);
  CHECK(doc.nodes[0].size == 1);
  CHECK(doc.nodes[1].size == 1);
  CHECK(doc.nodes[0].height == 0);
  CHECK(doc.nodes[1].height == 0);
}

TEST_CASE("quotient by the unit ideal reports the trivial ring") {
  report::ReportDocument doc = report::run_quad(-5, "1", {});
  CHECK(doc.order == 1);
  CHECK(doc.nodes.size() == 1);
}

TEST_CASE("zero ideal is rejected as an infinite quotient") {
  CHECK_THROWS_AS(report::run_quad(-5, "0", {}), Error);
  CHECK_THROWS_AS(report::run_quad(-5, "0, 0", {}), Error);
  try {
    report::run_quad(-5, "0", {});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteQuotient);
    CHECK(exit_code(e.code()) == 3);
  }
}

TEST_CASE("focus narrows the detail to one component") {
  report::RunOptions opts;
  opts.focus = "1000";
  report::ReportDocument doc = report::run_zn(6000, opts);
  REQUIRE(doc.nodes.size() == 8);
  REQUIRE(doc.components.size() == 1);
  REQUIRE(doc.focus.has_value());
  CHECK(doc.components[0].node == *doc.focus);
  CHECK(doc.components[0].idempotent == "2000");
  CHECK(doc.components[0].height == 3);
  REQUIRE(doc.components[0].layers.size() == 3);
  CHECK(doc.components[0].layers[0].elements.count == 360);
  CHECK(doc.components[0].layers[1].elements.count == 36);
  CHECK(doc.components[0].layers[2].elements.count == 2);
  CHECK(doc.components[0].base.count == 2);

  report::RunOptions neg = opts;
  neg.focus = "-5000";
  report::ReportDocument doc2 = report::run_zn(6000, neg);
  REQUIRE(doc2.focus.has_value());
  CHECK(*doc2.focus == *doc.focus);

  report::RunOptions bad = opts;
  bad.focus = "x";
  CHECK_THROWS_AS(report::run_zn(6000, bad), Error);
}

TEST_CASE("focus on a quadratic element") {
  report::RunOptions opts;
  opts.focus = "1*w";
  report::ReportDocument doc = report::run_quad(-5, "10, 5+5*w", opts);
  REQUIRE(doc.components.size() == 1);
  CHECK(doc.components[0].idempotent == "5");
  REQUIRE(doc.components[0].layers.size() == 1);
  CHECK(doc.components[0].layers[0].elements.count == 4);
}

TEST_CASE("element lists truncate at the cap with exact counts") {
  report::RunOptions opts;
  opts.max_elems = 3;
  report::ReportDocument doc = report::run_zn(6000, opts);
  for (const auto& comp : doc.components) {
    CHECK(comp.base.shown.size() <= 3);
    CHECK(comp.base.truncated == (comp.base.count > 3));
    for (const auto& layer : comp.layers) {
      CHECK(layer.elements.shown.size() <= 3);
      CHECK(layer.elements.truncated == (layer.elements.count > 3));
    }
  }
  long long total = 0;
  for (const auto& node : doc.nodes) total += node.size;
  CHECK(total == 6000);
}

TEST_CASE("JSON serialization round-trips") {
  report::RunOptions opts;
  opts.verify = true;
  for (report::ReportDocument doc :
       {report::run_zn(12, opts), report::run_zn(1, {}),
        report::run_quad(-5, "10, 5+5*w", opts)}) {
    std::string text = report::to_json(doc);
    report::ReportDocument back = report::from_json(text);
    CHECK(back == doc);
    CHECK(report::to_json(back) == text);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(report::from_json("{"), Error);
  CHECK_THROWS_AS(report::from_json("{\"ring\": {}}"), Error);
}

TEST_CASE("text and DOT renderings are deterministic") {
  report::RunOptions opts;
  report::ReportDocument a = report::run_zn(60, opts);
  report::ReportDocument b = report::run_zn(60, opts);
  CHECK(report::render_text(a) == report::render_text(b));
  CHECK(report::render_dot(a) == report::render_dot(b));
}

TEST_CASE("DOT digraph has one node per component and the Hasse edges") {
  report::ReportDocument z12 = report::run_zn(12, {});
  std::string dot12 = report::render_dot(z12);
  CHECK(count_occurrences(dot12, "label=") == 4);
  CHECK(count_occurrences(dot12, " -> ") == 4);

  report::ReportDocument z30 = report::run_zn(30, {});
  std::string dot30 = report::render_dot(z30);
  CHECK(count_occurrences(dot30, "label=") == 8);
  CHECK(count_occurrences(dot30, " -> ") == 12);

  report::ReportDocument zp = report::run_zn(7, {});
  std::string dotp = report::render_dot(zp);
  CHECK(count_occurrences(dotp, "label=") == 2);
  CHECK(count_occurrences(dotp, " -> ") == 1);
}

TEST_CASE("text rendering carries the headline facts") {
  report::RunOptions opts;
  opts.verify = true;
  std::string text = report::render_text(report::run_zn(12, opts));
  CHECK(text.find("ring Z/12, order 12") != std::string::npos);
  CHECK(text.find("factorisation: 2^2 * 3") != std::string::npos);
  CHECK(text.find("components: 4") != std::string::npos);
  CHECK(text.find("MATCH") != std::string::npos);

  std::string qtext = report::render_text(report::run_quad(-5, "10, 5+5*w", {}));
  CHECK(qtext.find("(10, 5+5√-5)") != std::string::npos);
  CHECK(qtext.find("order 50") != std::string::npos);
  CHECK(qtext.find("recipe only") != std::string::npos);
}

TEST_CASE("max_elems guard") {
  report::RunOptions opts;
  opts.max_elems = -1;
  CHECK_THROWS_AS(report::run_zn(12, opts), Error);
}
