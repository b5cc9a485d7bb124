#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hardy/cli.hpp"
#include "hardy/types.hpp"

namespace {

int emit(const hardy::cli::RunReport& r, const std::string& csv_path) {
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot write " << csv_path << '\n';
      std::cout << hardy::cli::error_report(r.command, "cannot write csv").dump(2) << '\n';
      return 2;
    }
    out << r.csv;
  }
  std::cout << r.to_json().dump(2) << '\n';
  if (r.exit_code == 2) std::cerr << "verdicts disagree between methods\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner-vector certification for Toeplitz operators and compressed shifts"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  std::string csv_path;
  app.add_option("--seed", seed, "seed for randomized demos")->capture_default_str();
  app.add_option("--csv", csv_path, "write tabular moments/densities to this file");

  hardy::cli::InnerTestOptions it;
  std::optional<int> it_grid;
  auto* inner = app.add_subcommand("inner-test", "moment, Stessin and Clark inner tests");
  inner->add_option("function", it.function, "function: JSON, @file or polynomial")->required();
  inner->add_option("symbol", it.symbol, "symbol: Blaschke JSON, function JSON or polynomial")
      ->required();
  inner->add_option("--grid", it_grid, "quadrature grid size (power of two)");
  inner->add_option("--moments", it.moments, "moment count N")->capture_default_str();
  inner->add_option("--tol", it.tol, "tolerance")->capture_default_str();
  inner->add_option("--method", it.method, "moment, stessin, clark or all")
      ->check(CLI::IsMember({"moment", "stessin", "clark", "all"}))
      ->capture_default_str();
  inner->add_option("--alpha-samples", it.n_alpha, "alpha grid for the Clark test")
      ->capture_default_str();

  hardy::cli::ClarkOptions co;
  std::optional<std::string> c_alpha;
  std::optional<double> c_t;
  std::optional<std::string> c_int;
  auto* clark = app.add_subcommand("clark", "Clark measure of a Blaschke product or the atomic example");
  clark->add_option("source", co.source, "Blaschke JSON, @file, z^n or \"atomic\"")->required();
  clark->add_option("--alpha", c_alpha, "unimodular alpha as re,im");
  clark->add_option("--t", c_t, "alpha = exp(i t)");
  clark->add_option("--truncation", co.truncation, "atoms |k| <= K for the atomic measure")
      ->capture_default_str();
  clark->add_option("--integrate", c_int, "integrate g against the measure");

  hardy::cli::DemoOptions dm;
  std::optional<int> d_grid;
  auto* demo = app.add_subcommand("demo", "worked examples end to end");
  demo->add_option("name", dm.name, "demo name")->required();
  demo->add_option("--n", dm.n, "size parameter")->capture_default_str();
  demo->add_option("--beta", dm.beta, "exponent for atomic-unbounded")->capture_default_str();
  demo->add_option("--truncation", dm.truncation, "K for atomic-unbounded")->capture_default_str();
  demo->add_option("--grid", d_grid, "quadrature grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = "hardy";
  try {
    if (*inner) {
      command = "inner-test";
      it.grid = it_grid;
      return emit(hardy::cli::cmd_inner_test(it), csv_path);
    }
    if (*clark) {
      command = "clark";
      co.alpha = c_alpha;
      co.t = c_t;
      co.integrate = c_int;
      return emit(hardy::cli::cmd_clark(co), csv_path);
    }
    command = "demo";
    dm.seed = seed;
    dm.grid = d_grid;
    return emit(hardy::cli::cmd_demo(dm), csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << hardy::cli::error_report(command, e.what()).dump(2) << '\n';
    return 2;
  }
}
