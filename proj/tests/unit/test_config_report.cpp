#include <doctest.h>

#include <string>

#include "infogeo/config.hpp"
#include "infogeo/errors.hpp"
#include "infogeo/report.hpp"
#include "infogeo/suites.hpp"

using namespace infogeo;
using nlohmann::json;

TEST_CASE("configuration parsing") {
  const RunConfig c = parse_config_text(R"({"manifold": "simplex", "dimension": 3, "points": {"count": 4, "seed": 9}})");
  CHECK(c.manifold == ManifoldKind::simplex);
  CHECK(c.divergence == DivergenceKind::kl);
  CHECK(c.count == 4);
  CHECK(c.seed == 9);
  CHECK(c.format == OutputFormat::json);

  const RunConfig e = parse_config_text(
      R"({"manifold": "euclidean", "dimension": 2, "scheme": {"type": "richardson_central"}, "output_format": "csv"})");
  CHECK(e.divergence == DivergenceKind::quadratic);
  CHECK(e.scheme.scheme == Scheme::richardson_central);
  CHECK(e.format == OutputFormat::csv);
}

TEST_CASE("configuration errors") {
  const char* bad[] = {
      R"({"manifold": "simplex", "dimension": 3, "divergence": "umegaki"})",
      R"({"manifold": "su_times_simplex", "dimension": 3, "divergence": "kl"})",
      R"({"manifold": "simplex", "dimension": 1})",
      R"({"manifold": "torus", "dimension": 3})",
      R"({"manifold": "simplex"})",
      R"({"manifold": "simplex", "dimension": 3, "colour": "blue"})",
      R"({"manifold": "simplex", "dimension": 3, "tolerances": {"relative": -1}})",
      R"({"manifold": "simplex", "dimension": 3, "points": {"count": 0}})",
      R"({"manifold": "simplex", "dimension": 3, "scheme": {"type": "secant"}})",
      R"([1, 2])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_config_text(text), ConfigError);
  }
  CHECK_THROWS(parse_config_text("{not json"));
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("config round trip") {
  const RunConfig c = parse_config_text(R"({"manifold": "pure_states", "dimension": 3, "points": [[[1,0],[0,1],[0.5,0]]]})");
  const RunConfig d = parse_config(config_to_json(c));
  CHECK(config_to_json(c) == config_to_json(d));
}

TEST_CASE("suites pass and are deterministic") {
  const RunConfig c = parse_config_text(R"({"manifold": "simplex", "dimension": 3, "points": {"count": 5}})");
  const VerificationReport a = run_suite(c);
  const VerificationReport b = run_suite(c);
  CHECK(a.passed());
  CHECK(render_summary(a, OutputFormat::json) == render_summary(b, OutputFormat::json));
  CHECK(render_rows(a, OutputFormat::csv) == render_rows(b, OutputFormat::csv));

  bool has_fr = false;
  for (const CheckSummary& s : a.summaries) has_fr = has_fr || s.check_id == "metric_vs_2_fisher_rao";
  CHECK(has_fr);

  RunConfig other = c;
  other.seed = 2;
  CHECK(render_rows(run_suite(other), OutputFormat::csv) != render_rows(a, OutputFormat::csv));
}

TEST_CASE("strict tolerances turn into failures") {
  RunConfig c = parse_config_text(
      R"({"manifold": "simplex", "dimension": 3, "points": {"count": 3}, "scheme": {"type": "richardson_central"},
          "tolerances": {"relative": 1e-300}})");
  CHECK_FALSE(run_suite(c).passed());
}

TEST_CASE("explicit points") {
  const RunConfig c = parse_config_text(R"({"manifold": "simplex", "dimension": 2, "points": [[0.5, 0.5]]})");
  const VerificationReport r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.rows.front().coordinates == std::vector<double>{0.5, 0.5});

  const nlohmann::ordered_json t = tensor_dump(c);
  CHECK(t["tensors"]["extracted_metric"]["components"][0][0].get<double>() == doctest::Approx(8.0).epsilon(1e-12));

  const RunConfig bad = parse_config_text(R"({"manifold": "simplex", "dimension": 2, "points": [[0.5, 0.6]]})");
  CHECK_THROWS_AS(run_suite(bad), DomainError);
  const json wrong_size = json::parse("[0.2, 0.3, 0.5]");
  CHECK_THROWS_AS(tensor_dump(c, &wrong_size), ConfigError);
}

TEST_CASE("quadratic tensor dump") {
  const RunConfig c = parse_config_text(R"({"manifold": "euclidean", "dimension": 2, "points": [[0.1, 0.2]]})");
  const nlohmann::ordered_json t = tensor_dump(c);
  const auto& g = t["tensors"]["extracted_metric"]["components"];
  CHECK(g[0][0].get<double>() == doctest::Approx(2.0));
  CHECK(g[0][1].get<double>() == doctest::Approx(0.0));
  CHECK(g[1][1].get<double>() == doctest::Approx(2.0));
  const std::string csv = render_tensor(t, OutputFormat::csv);
  CHECK(csv.rfind("tensor,row,col,row_label,col_label,value\n", 0) == 0);
}

TEST_CASE("pure-state tensor dump") {
  const RunConfig c = parse_config_text(
      R"({"manifold": "pure_states", "dimension": 2, "points": [[[0.7071067811865476, 0], [0.7071067811865476, 0]]]})");
  const nlohmann::ordered_json t = tensor_dump(c);
  CHECK(t["tensors"].contains("re_h"));
  CHECK(t["tensors"]["re_h"]["components"][0][0].get<double>() == doctest::Approx(0.5));
  CHECK(t["tensors"]["im_h"]["components"][0][2].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("number formatting and file output") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(8.0) == "8");
  CHECK_THROWS_AS(write_file("/nonexistent-dir/out.json", "x"), IoError);
}
