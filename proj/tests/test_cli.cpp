#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hardy/cli.hpp"
#include "hardy/json_io.hpp"

using namespace hardy;
using nlohmann::json;

TEST_CASE("polynomial expressions") {
  const Polynomial p = io::parse_polynomial("1 + z");
  CHECK(p.degree() == 1);
  CHECK(p[0] == cplx(1.0));
  const Polynomial q = io::parse_polynomial("0.5-2*z^3+z");
  CHECK(q[3] == cplx(-2.0));
  CHECK(q[1] == cplx(1.0));
  CHECK(io::parse_polynomial("z^2")[2] == cplx(1.0));
  CHECK_THROWS_AS(io::parse_polynomial("1 + w"), DomainError);
  CHECK_THROWS_AS(io::parse_polynomial("z^"), DomainError);
  CHECK_THROWS_AS(io::parse_polynomial(""), DomainError);
}

TEST_CASE("JSON round trips") {
  const BlaschkeProduct b({cplx(0.5, 0.1), cplx(0, -0.3)}, cplx(0, 1));
  const BlaschkeProduct b2 = io::blaschke_from_json(io::to_json(b));
  CHECK(b2.zeros() == b.zeros());
  CHECK(b2.constant() == b.constant());

  Eigen::MatrixXcd m(2, 2);
  m << cplx(1, 2), 3.0, cplx(0, -1), 4.0;
  const json mj = io::matrix_to_json(m);
  CHECK(mj["n"] == 2);
  CHECK(mj["entries"][1][0] == 3.0);
  CHECK(io::matrix_from_json(mj) == m);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 2}, {"entries", json::array({json::array({1, 0})})}}), DomainError);

  const HardyFunction f = HardyFunction::from_coefficients({1.0, 2.0}, {1.0, -0.5});
  const HardyFunction f2 = io::hardy_from_json(io::to_json(f));
  CHECK(std::abs(f2(cplx(0.3, 0.2)) - f(cplx(0.3, 0.2))) < 1e-15);

  const ClarkMeasure c = clark_finite_blaschke(BlaschkeProduct::z_power(2), cplx(0, 1));
  const json cj = io::to_json(c);
  CHECK(cj["atoms"].size() == 2);
  CHECK(cj["atoms"][0]["mass"].get<double>() == doctest::Approx(0.5));
  CHECK(cj["tail_bound"] == 0.0);

  CHECK_THROWS_AS(io::blaschke_from_json(json::parse(R"({"zeros":[[1.5,0]]})")), DomainError);
  CHECK_THROWS_AS(io::complex_from_json(json("x")), DomainError);
}

TEST_CASE("symbol specs keep inner structure for Blaschke input") {
  CHECK(io::parse_symbol_spec("z^3").inner.has_value());
  CHECK(io::parse_symbol_spec("z^3").inner->degree() == 3);
  CHECK_FALSE(io::parse_symbol_spec("1+z").inner.has_value());
  CHECK(io::parse_symbol_spec(R"({"zeros":[[0.5,0]]})").inner.has_value());
  CHECK_THROWS_AS(io::parse_function_spec("{not json"), DomainError);
}

TEST_CASE("inner-test command verdicts and exit codes") {
  cli::InnerTestOptions o;
  o.function = R"({"numerator":[0.7071067811865476,0,0,0.7071067811865476]})";
  o.symbol = "z^2";
  cli::RunReport r = cli::cmd_inner_test(o);
  CHECK(r.exit_code == 0);
  CHECK(r.verdicts.size() == 3);

  o.function = "1";
  o.symbol = "1+z";
  o.method = "moment";
  r = cli::cmd_inner_test(o);
  CHECK(r.exit_code == 1);
  const json m1 = r.numerics["moment"]["moment_1"];
  CHECK(std::abs(m1[0].get<double>() - 1.0) < 1e-12);
  CHECK(r.csv.rfind("n,re,im,abs", 0) == 0);

  // Non-Blaschke symbol under "all": Stessin and Clark are skipped.
  o.method = "all";
  r = cli::cmd_inner_test(o);
  CHECK(r.to_json()["skipped"].size() == 2);

  o.method = "stessin";
  CHECK_THROWS_AS(cli::cmd_inner_test(o), DomainError);
  o.symbol = R"({"zeros":[[1.2,0]]})";
  CHECK_THROWS_AS(cli::cmd_inner_test(o), DomainError);
}

TEST_CASE("moment-only pass with a structural failure is reported as a discrepancy") {
  // (1 + z^40)/sqrt(2) against u = z: moments vanish up to n = 39.
  cli::InnerTestOptions o;
  o.function = "0.7071067811865476+0.7071067811865476z^40";
  o.symbol = "z";
  cli::RunReport r = cli::cmd_inner_test(o);
  CHECK(r.verdicts["moment"] == true);
  CHECK(r.verdicts["stessin"] == false);
  CHECK(r.verdicts["clark"] == false);
  CHECK(r.exit_code == 2);
  CHECK(r.to_json().contains("discrepancy"));
  o.moments = 40;
  r = cli::cmd_inner_test(o);
  CHECK(r.exit_code == 1);
}

TEST_CASE("clark command") {
  cli::ClarkOptions o;
  o.source = R"({"zeros":[[0,0],[0,0]]})";
  o.alpha = "0,1";
  cli::RunReport r = cli::cmd_clark(o);
  CHECK(r.exit_code == 0);
  CHECK(r.extra["measure"]["atoms"].size() == 2);

  cli::ClarkOptions a;
  a.source = "atomic";
  a.t = 0.0;
  a.truncation = 100;
  a.integrate = "1";
  r = cli::cmd_clark(a);
  CHECK(r.exit_code == 0);
  CHECK(r.extra["measure"]["atoms"].size() == 201);
  const double integral = r.numerics["integral"]["value"][0].get<double>();
  const double herglotz = 1.0 / std::tanh(0.5);
  CHECK(herglotz - integral >= 0.0);
  CHECK(herglotz - integral <= r.numerics["integral"]["uncertainty"].get<double>());

  cli::ClarkOptions bad = o;
  bad.alpha = "0.5,0";
  CHECK_THROWS_AS(cli::cmd_clark(bad), DomainError);
  bad.alpha.reset();
  CHECK_THROWS_AS(cli::cmd_clark(bad), DomainError);
}

TEST_CASE("every demo runs and passes") {
  for (const std::string& name : cli::demo_names()) {
    cli::DemoOptions o;
    o.name = name;
    if (name == "atomic-unbounded") o.truncation = 10000;
    const cli::RunReport r = cli::cmd_demo(o);
    CAPTURE(name);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.anchor.empty());
  }
  cli::DemoOptions o;
  o.name = "nope";
  CHECK_THROWS_AS(cli::cmd_demo(o), DomainError);
}

TEST_CASE("HARDY_INNER_GRID overrides the default grid") {
  setenv("HARDY_INNER_GRID", "1024", 1);
  CHECK(cli::default_grid_from_env() == 1024);
  setenv("HARDY_INNER_GRID", "1000", 1);
  CHECK_THROWS_AS(cli::default_grid_from_env(), DomainError);
  unsetenv("HARDY_INNER_GRID");
  CHECK(cli::default_grid_from_env() == 4096);
}
