#include "hardy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "hardy/blaschke.hpp"
#include "hardy/boundary.hpp"
#include "hardy/clark.hpp"
#include "hardy/compressed.hpp"
#include "hardy/json_io.hpp"
#include "hardy/model_space.hpp"
#include "hardy/wold.hpp"

namespace hardy::cli {

namespace {

using io::to_json;

int checked_grid(std::optional<int> grid) {
  const int g = grid.value_or(default_grid_from_env());
  if (!is_valid_grid_size(g)) {
    throw DomainError("grid size must be a power of two >= 8, got " + std::to_string(g));
  }
  return g;
}

json inner_report_json(const InnerTestReport& t) {
  return {{"max_deviation", t.max_deviation}, {"tolerance", t.tolerance},
          {"truncation_bound", t.truncation_bound}, {"grid_size", t.grid_size},
          {"depth", t.depth}, {"warnings", t.warnings}, {"note", t.note}};
}

json moment_report_json(const MomentReport& m) {
  json j = {{"max_abs", m.max_abs},
            {"first_nonzero", m.first_nonzero},
            {"first_nonzero_magnitude", m.first_nonzero_magnitude},
            {"tolerance", m.tolerance},
            {"n_max", m.n_max},
            {"grid_size", m.grid_size},
            {"warnings", m.warnings},
            {"note", m.note}};
  if (!m.moments.empty()) j["moment_1"] = to_json(m.moments[0]);
  return j;
}

std::string moments_csv(const std::vector<cplx>& moments) {
  std::ostringstream out;
  out.precision(17);
  out << "n,re,im,abs\n";
  for (size_t n = 0; n < moments.size(); ++n) {
    out << n + 1 << ',' << moments[n].real() << ',' << moments[n].imag() << ','
        << std::abs(moments[n]) << '\n';
  }
  return out.str();
}

cplx parse_unimodular(const std::string& text) {
  std::string t = io::resolve_spec_text(text);
  cplx a;
  if (!t.empty() && t[0] == '[') {
    try {
      a = io::complex_from_json(json::parse(t));
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed alpha: ") + e.what());
    }
  } else {
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re)) throw DomainError("malformed alpha \"" + text + "\"");
    in >> im;
    a = {re, im};
  }
  if (std::abs(std::abs(a) - 1.0) > 1e-12) {
    throw DomainError("alpha must be unimodular, |alpha| = " + std::to_string(std::abs(a)));
  }
  return a / std::abs(a);
}

BlaschkeProduct parse_blaschke_spec(const std::string& spec) {
  const Symbol s = io::parse_symbol_spec(spec);
  if (!s.inner) throw DomainError("expected a finite Blaschke product, got " + s.description);
  return *s.inner;
}

BoundaryFn as_fn(const HardyFunction& f) {
  return [f](cplx z) { return f(z); };
}

cplx random_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, kTwoPi * u(rng));
}

cplx random_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

// Runs all three inner tests on f against a Blaschke symbol u.
void three_way(RunReport& r, const std::string& prefix, const HardyFunction& f,
               const BlaschkeProduct& u, int grid, double tol) {
  const BoundaryFn fn = as_fn(f);
  const MomentReport m = moment_inner_test(fn, [u](cplx z) { return u(z); }, kDefaultMomentCount,
                                           grid, tol);
  const InnerTestReport s = stessin_inner_test(fn, u, -1, grid, tol);
  const InnerTestReport c = clark_inner_test(u, fn, kDefaultAlphaSamples, tol, grid);
  r.verdicts[prefix + "moment"] = m.is_inner_up_to_n;
  r.verdicts[prefix + "stessin"] = s.is_inner;
  r.verdicts[prefix + "clark"] = c.is_inner;
  r.numerics[prefix + "moment"] = moment_report_json(m);
  r.numerics[prefix + "stessin"] = inner_report_json(s);
  r.numerics[prefix + "clark"] = inner_report_json(c);
}

RunReport demo_zn_inner(const DemoOptions& o) {
  if (o.n < 1) throw DomainError("zn-inner needs n >= 1");
  const int grid = checked_grid(o.grid);
  RunReport r;
  r.anchor = "z^n symbol, f = n^{-1/2} sum_{j<n} z^{j(n+1)}";
  const int n = o.n;
  std::vector<cplx> coeffs(static_cast<size_t>((n - 1) * (n + 1) + 1), 0.0);
  for (int j = 0; j < n; ++j) coeffs[static_cast<size_t>(j * (n + 1))] = 1.0 / std::sqrt(double(n));
  const HardyFunction f{Polynomial(coeffs)};
  r.inputs = {{"n", n}, {"grid", grid}, {"function", to_json(f)}};
  three_way(r, "", f, BlaschkeProduct::z_power(n), grid, 1e-9);
  return r;
}

RunReport demo_single_factor(const DemoOptions& o) {
  const int grid = checked_grid(o.grid);
  std::mt19937_64 rng(o.seed);
  const cplx a = random_disk(rng, 0.9);
  RunReport r;
  r.anchor = "single Blaschke factor b_a with the normalized kernel at a";
  const HardyFunction k(Polynomial::constant(std::sqrt(1.0 - std::norm(a))),
                        std::vector<cplx>{std::conj(a)});
  r.inputs = {{"a", to_json(a)}, {"seed", o.seed}, {"grid", grid}, {"function", to_json(k)}};
  three_way(r, "", k, BlaschkeProduct::factor(a), grid, 1e-9);
  return r;
}

RunReport demo_z2_clark(const DemoOptions& o) {
  const int grid = checked_grid(o.grid);
  RunReport r;
  r.anchor = "Clark measure of z^2 at alpha = i";
  const BlaschkeProduct u = BlaschkeProduct::z_power(2);
  const cplx alpha(0.0, 1.0);
  const ClarkMeasure m = clark_finite_blaschke(u, alpha);
  r.inputs = {{"u", to_json(u)}, {"alpha", to_json(alpha)}, {"grid", grid}};
  r.extra["measure"] = io::to_json(m);
  double mass_err = 0.0;
  double atom_err = 0.0;
  const cplx expected[2] = {std::polar(1.0, kPi / 4.0), std::polar(1.0, 5.0 * kPi / 4.0)};
  for (size_t j = 0; j < m.atoms.size() && j < 2; ++j) {
    mass_err = std::max(mass_err, std::abs(m.atoms[j].mass - 0.5));
    atom_err = std::max(atom_err, std::abs(m.atoms[j].zeta - expected[j]));
  }
  r.verdicts["two_atoms"] = m.atoms.size() == 2;
  r.verdicts["masses_half"] = mass_err <= 1e-12;
  r.verdicts["atoms_at_eighth_roots"] = atom_err <= 1e-12;
  r.numerics["mass_error"] = {{"value", mass_err}, {"tolerance", 1e-12}};
  r.numerics["atom_error"] = {{"value", atom_err}, {"tolerance", 1e-12}};

  // f = (1 + z^3)/sqrt(2) has constant Clark density 1 for z^2.
  const double s = 1.0 / std::sqrt(2.0);
  const HardyFunction f{Polynomial({s, 0.0, 0.0, s})};
  const double density = clark_density(u, as_fn(f), alpha);
  r.verdicts["density_one"] = std::abs(density - 1.0) <= 1e-12;
  r.numerics["density_at_alpha"] = {{"value", density}, {"tolerance", 1e-12}};

  const BoundaryFn g = [](cplx z) { return std::norm(z + 0.5); };
  const cplx avg = aleksandrov_disintegrate(g, u, 512);
  const cplx direct = integrate(sample_boundary(g, grid)).value;
  r.verdicts["disintegration"] = std::abs(avg - direct) <= 1e-6;
  r.numerics["disintegration"] = {{"alpha_average", to_json(avg)},
                                  {"direct", to_json(direct)},
                                  {"n_alpha", 512},
                                  {"grid_size", grid},
                                  {"tolerance", 1e-6}};
  return r;
}

RunReport demo_atomic_unbounded(const DemoOptions& o) {
  RunReport r;
  r.anchor = "atomic inner function exp((z+1)/(z-1)) with an unbounded inner vector";
  const int k = o.truncation;
  r.inputs = {{"beta", o.beta}, {"truncation", k}, {"t_points", 32}};
  double max_rel = 0.0;
  double max_mod2 = 0.0;
  int argmax = 0;
  double target = 0.0;
  double bound = 0.0;
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,density,target\n";
  for (int m = 0; m < 32; ++m) {
    const double t = -kPi + kTwoPi * (m + 0.5) / 32.0;
    const AtomicDensityReport a = atomic_inner_vector_density(o.beta, t, k);
    max_rel = std::max(max_rel, std::abs(a.density - a.target) / a.target);
    if (a.max_modulus_squared > max_mod2) {
      max_mod2 = a.max_modulus_squared;
      argmax = a.argmax_k;
    }
    target = a.target;
    bound = a.bound;
    csv << a.t << ',' << a.density << ',' << a.target << '\n';
  }
  const int reference_k = std::max(1000000, k);
  const double reference = atomic_coefficient_sum(o.beta, reference_k);
  r.verdicts["density_constant"] = max_rel <= 1e-12;
  r.verdicts["within_tail_bound"] = reference - target <= bound;
  r.verdicts["unbounded_witness"] = max_mod2 > 1e3;
  r.numerics["density_relative_error"] = {{"value", max_rel}, {"tolerance", 1e-12}, {"truncation", k}};
  r.numerics["target"] = {{"value", target}, {"truncation", k}};
  r.numerics["reference"] = {{"value", reference}, {"truncation", reference_k}};
  r.numerics["tail_gap"] = {{"value", reference - target}, {"bound", bound}};
  r.numerics["max_modulus_squared"] = {{"value", max_mod2}, {"k", argmax}, {"threshold", 1e3}};
  r.csv = csv.str();
  return r;
}

RunReport demo_wold_blocks(const DemoOptions& o) {
  const int grid = checked_grid(o.grid);
  RunReport r;
  r.anchor = "orthogonal-block inner vectors sum_j alpha_j u^j F_j";
  std::mt19937_64 rng(o.seed);
  const BlaschkeProduct u({cplx(0.5, 0.0), cplx(0.0, -1.0 / 3.0), random_disk(rng, 0.8)});
  std::vector<cplx> alpha;
  double n2 = 0.0;
  for (int j = 0; j < u.degree(); ++j) {
    alpha.push_back(random_normal(rng));
    n2 += std::norm(alpha.back());
  }
  for (cplx& a : alpha) a /= std::sqrt(n2);
  const HardyFunction f = orthogonal_block_construct(u, alpha);
  json aj = json::array();
  for (cplx a : alpha) aj.push_back(to_json(a));
  r.inputs = {{"u", to_json(u)}, {"alpha", aj}, {"seed", o.seed}, {"grid", grid}};
  three_way(r, "", f, u, grid, 1e-9);
  const WoldExpansion w = wold_expand_adaptive(as_fn(f), u, 1e-12, 256, grid);
  const WoldOrthogonalityReport orth = wold_orthogonality_test(w, 16, 1e-9);
  r.verdicts["wold_orthogonality"] = orth.passed;
  json norms = json::array();
  for (const ModelVector& b : w.blocks()) norms.push_back(b.norm());
  r.numerics["block_norms"] = {{"value", norms}, {"depth", w.k_max}, {"grid_size", grid}};
  r.numerics["wold_orthogonality"] = {{"max_abs", orth.max_abs}, {"allowance", orth.allowance}, {"n_max", 16}};
  r.numerics["parseval_gap"] = {{"value", w.parseval_gap()}, {"residual", w.residual}, {"grid_size", grid}};
  return r;
}

RunReport demo_compressed_divisors(const DemoOptions& o) {
  if (o.n < 1 || o.n > 12) throw DomainError("compressed-divisors needs 1 <= n <= 12");
  const int grid = checked_grid(o.grid);
  RunReport r;
  r.anchor = "inner functions in K_Theta are the inner divisors of Theta(z)/z";
  const BlaschkeProduct theta = BlaschkeProduct::z_power(o.n);
  r.inputs = {{"theta", to_json(theta)}, {"grid", grid}};
  const CompressedOperator s = compressed_shift_matrix(theta, grid);
  r.extra["compressed_shift"] = io::matrix_to_json(s.matrix);

  bool divisors_pass = true;
  json divisors = json::array();
  for (const BlaschkeProduct& v : inner_divisor_enumerate(theta)) {
    const ModelVector p = project(as_fn(v.as_hardy()), theta, grid);
    const TInnerReport t = s_theta_inner_test(theta, p);
    divisors_pass = divisors_pass && t.is_inner;
    divisors.push_back({{"degree", v.degree()}, {"max_abs_moment", t.max_abs}, {"passes", t.is_inner}});
  }
  // Monomials of degree >= n are orthogonal to K_{z^n}; they are not in the space.
  bool outside_rejected = true;
  for (int k = o.n; k <= 2 * o.n; ++k) {
    const ModelVector p = project(as_fn(HardyFunction(Polynomial::monomial(k))), theta, grid);
    outside_rejected = outside_rejected && p.norm() < 1e-9;
  }
  // Two-term combinations z^i + z^j are not inner and must fail.
  bool binomials_fail = true;
  int binomials = 0;
  for (int i = 0; i < o.n; ++i) {
    for (int j = i + 1; j < o.n; ++j) {
      ModelVector p{theta, std::vector<cplx>(static_cast<size_t>(o.n), 0.0)};
      p.coords[static_cast<size_t>(i)] = 1.0 / std::sqrt(2.0);
      p.coords[static_cast<size_t>(j)] = 1.0 / std::sqrt(2.0);
      binomials_fail = binomials_fail && !s_theta_inner_test(theta, p).is_inner;
      ++binomials;
    }
  }
  r.verdicts["divisors_pass"] = divisors_pass;
  r.verdicts["monomials_outside_rejected"] = outside_rejected;
  r.verdicts["binomials_fail"] = binomials_fail;
  r.numerics["divisors"] = {{"value", divisors}, {"moments", default_compressed_moments(theta)},
                            {"tolerance", 1e-9}, {"grid_size", grid}};
  r.numerics["binomials_checked"] = binomials;
  return r;
}

RunReport demo_one_plus_z(const DemoOptions& o) {
  const int grid = checked_grid(o.grid);
  RunReport r;
  r.anchor = "phi(z) = 1 + z admits no T_phi-inner vector";
  std::mt19937_64 rng(o.seed);
  const BoundaryFn phi = [](cplx z) { return 1.0 + z; };
  std::vector<std::pair<std::string, HardyFunction>> family;
  family.emplace_back("constant", HardyFunction::constant(1.0));
  for (int i = 0; i < 10; ++i) {
    const cplx lambda = random_disk(rng, 0.95);
    family.emplace_back("kernel", HardyFunction(Polynomial::constant(std::sqrt(1.0 - std::norm(lambda))),
                                                std::vector<cplx>{std::conj(lambda)}));
  }
  std::uniform_int_distribution<int> deg(0, 3);
  for (int i = 0; i < 20; ++i) {
    std::vector<cplx> num(static_cast<size_t>(deg(rng)) + 1);
    for (cplx& c : num) c = random_normal(rng);
    const HardyFunction g(Polynomial(num), std::vector<cplx>{random_disk(rng, 0.9)});
    family.emplace_back("rational", g * (1.0 / h2_norm(as_fn(g), grid)));
  }
  bool all_rejected = true;
  double smallest = 1e300;
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "kind,first_nonzero,magnitude\n";
  for (const auto& [kind, f] : family) {
    const MomentReport m = moment_inner_test(as_fn(f), phi, kDefaultMomentCount, grid, 1e-9);
    const bool rejected = !m.is_inner_up_to_n && m.first_nonzero_magnitude > 1e-3;
    all_rejected = all_rejected && rejected;
    smallest = std::min(smallest, m.first_nonzero_magnitude);
    rows.push_back({{"kind", kind}, {"first_nonzero", m.first_nonzero},
                    {"magnitude", m.first_nonzero_magnitude}});
    csv << kind << ',' << m.first_nonzero << ',' << m.first_nonzero_magnitude << '\n';
  }
  r.inputs = {{"seed", o.seed}, {"grid", grid}, {"candidates", family.size()}};
  r.verdicts["all_rejected"] = all_rejected;
  r.numerics["smallest_first_moment"] = {{"value", smallest}, {"threshold", 1e-3},
                                         {"moments", kDefaultMomentCount}, {"grid_size", grid}};
  r.extra["candidates"] = rows;
  r.extra["note"] = "necessary-condition check only; no completeness claim";
  r.csv = csv.str();
  return r;
}

}  // namespace

void RunReport::finish() {
  bool all = true;
  for (const auto& [name, v] : verdicts.items()) all = all && v.get<bool>();
  exit_code = all ? 0 : 1;
}

json RunReport::to_json() const {
  json j = {{"command", command}, {"inputs", inputs}, {"verdicts", verdicts},
            {"numerics", numerics}, {"exit_code", exit_code}};
  if (!anchor.empty()) j["anchor"] = anchor;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

int default_grid_from_env() {
  const char* env = std::getenv("HARDY_INNER_GRID");
  if (env == nullptr || *env == '\0') return kDefaultGridSize;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || !is_valid_grid_size(static_cast<int>(v))) {
    throw DomainError(std::string("HARDY_INNER_GRID must be a power of two >= 8, got ") + env);
  }
  return static_cast<int>(v);
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {
      "zn-inner",   "single-factor",       "z2-clark",  "atomic-unbounded",
      "wold-blocks", "compressed-divisors", "one-plus-z"};
  return names;
}

RunReport cmd_inner_test(const InnerTestOptions& o) {
  const int grid = checked_grid(o.grid);
  const std::string& method = o.method;
  if (method != "moment" && method != "stessin" && method != "clark" && method != "all") {
    throw DomainError("unknown method \"" + method + "\" (moment, stessin, clark, all)");
  }
  if (o.moments < 1) throw DomainError("--moments must be >= 1");
  if (!(o.tol > 0.0)) throw DomainError("--tol must be positive");
  const HardyFunction f = io::parse_function_spec(o.function);
  const Symbol phi = io::parse_symbol_spec(o.symbol);
  const BoundaryFn fn = as_fn(f);

  RunReport r;
  r.command = "inner-test";
  r.inputs = {{"function", to_json(f)}, {"symbol", phi.description}, {"grid", grid},
              {"moments", o.moments}, {"tol", o.tol}, {"method", method}};
  if (phi.inner) r.inputs["symbol_blaschke"] = to_json(*phi.inner);

  json skipped = json::array();
  if (method == "moment" || method == "all") {
    const MomentReport m = moment_inner_test(fn, phi.fn, o.moments, grid, o.tol);
    r.verdicts["moment"] = m.is_inner_up_to_n;
    r.numerics["moment"] = moment_report_json(m);
    r.csv = moments_csv(m.moments);
  }
  for (const std::string name : {"stessin", "clark"}) {
    if (method != name && method != "all") continue;
    if (!phi.inner) {
      if (method == name) throw DomainError(name + " test needs a finite Blaschke symbol");
      skipped.push_back(name);
      continue;
    }
    const InnerTestReport t = name == "stessin"
                                  ? stessin_inner_test(fn, *phi.inner, -1, grid, o.tol)
                                  : clark_inner_test(*phi.inner, fn, o.n_alpha, o.tol, grid);
    r.verdicts[name] = t.is_inner;
    r.numerics[name] = inner_report_json(t);
  }
  if (!skipped.empty()) r.extra["skipped"] = skipped;
  r.finish();
  if (method == "all" && r.verdicts.size() > 1) {
    bool first = r.verdicts.begin()->get<bool>();
    bool agree = true;
    for (const auto& [name, v] : r.verdicts.items()) agree = agree && v.get<bool>() == first;
    if (!agree) {
      r.exit_code = 2;
      r.extra["discrepancy"] = r.verdicts;
    }
  }
  return r;
}

RunReport cmd_clark(const ClarkOptions& o) {
  if (o.alpha && o.t) throw DomainError("give either --alpha or --t, not both");
  if (!o.alpha && !o.t) throw DomainError("one of --alpha or --t is required");
  const cplx alpha = o.alpha ? parse_unimodular(*o.alpha) : unimodular(*o.t);
  RunReport r;
  r.command = "clark";
  ClarkMeasure m;
  double expected = 0.0;
  double allowance = 0.0;
  if (o.source == "atomic") {
    const double t = o.t ? *o.t : std::arg(alpha);
    m = clark_atomic(t, o.truncation);
    expected = herglotz_mass(std::exp(-1.0), m.alpha);
    allowance = m.tail_bound + 1e-12;
    r.inputs = {{"source", "atomic"}, {"t", t}, {"truncation", o.truncation}};
  } else {
    const BlaschkeProduct u = parse_blaschke_spec(o.source);
    m = clark_finite_blaschke(u, alpha);
    expected = herglotz_mass(u(0.0), alpha);
    allowance = 1e-8;
    r.inputs = {{"source", to_json(u)}, {"alpha", to_json(alpha)}};
  }
  const double total = m.total_mass();
  r.verdicts["mass_identity"] = std::abs(total - expected) <= allowance;
  r.numerics["total_mass"] = {{"value", total}, {"tail_bound", m.tail_bound},
                              {"atoms", m.atoms.size()}};
  r.numerics["herglotz_mass"] = {{"value", expected}, {"tolerance", allowance}};
  if (o.integrate) {
    const HardyFunction g = io::parse_function_spec(*o.integrate);
    const ClarkIntegral in = integrate_against_clark(as_fn(g), m);
    r.inputs["integrate"] = to_json(g);
    r.numerics["integral"] = {{"value", to_json(in.value)}, {"uncertainty", in.uncertainty},
                              {"tail_bound", m.tail_bound}};
  }
  r.extra["measure"] = io::to_json(m);
  r.finish();
  return r;
}

RunReport cmd_demo(const DemoOptions& o) {
  RunReport r;
  if (o.name == "zn-inner") r = demo_zn_inner(o);
  else if (o.name == "single-factor") r = demo_single_factor(o);
  else if (o.name == "z2-clark") r = demo_z2_clark(o);
  else if (o.name == "atomic-unbounded") r = demo_atomic_unbounded(o);
  else if (o.name == "wold-blocks") r = demo_wold_blocks(o);
  else if (o.name == "compressed-divisors") r = demo_compressed_divisors(o);
  else if (o.name == "one-plus-z") r = demo_one_plus_z(o);
  else {
    std::string list;
    for (const std::string& n : demo_names()) list += (list.empty() ? "" : ", ") + n;
    throw DomainError("unknown demo \"" + o.name + "\"; available: " + list);
  }
  r.command = "demo " + o.name;
  r.finish();
  return r;
}

json error_report(const std::string& command, const std::string& message) {
  return {{"command", command}, {"error", message}, {"exit_code", 2}};
}

}  // namespace hardy::cli
