#pragma once

#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "hardy/blaschke.hpp"
#include "hardy/clark.hpp"
#include "hardy/compressed.hpp"
#include "hardy/hardy_function.hpp"
#include "hardy/polynomial.hpp"

namespace hardy::io {

using nlohmann::json;

// Complex numbers travel as [re, im]; a bare number is read as real.
json to_json(cplx z);
cplx complex_from_json(const json& j);

// {"constant": [re, im], "zeros": [[re, im], ...]}; constant defaults to 1.
json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

// {"n": int, "entries": [[re, im], ...]} in row-major order.
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);

// {"alpha": [re, im], "atoms": [{"zeta": [re, im], "mass": r}, ...], "tail_bound": r}
json to_json(const ClarkMeasure& m);

// {"numerator": [[re, im], ...], "denominator": [[re, im], ...]}, ascending
// coefficients; the denominator defaults to 1.
json to_json(const HardyFunction& f);
HardyFunction hardy_from_json(const json& j);

// Real-coefficient polynomial such as "1+z", "z^3", "0.5 - 2*z^2".
Polynomial parse_polynomial(const std::string& text);

// Text, "@path" or a polynomial expression, parsed to JSON or a polynomial.
std::string resolve_spec_text(const std::string& spec);

// Function spec: HardyFunction JSON, Blaschke JSON or polynomial expression.
HardyFunction parse_function_spec(const std::string& spec);

// Symbol spec: as above; Blaschke JSON and unimodular monomials c z^n keep
// their inner structure.
Symbol parse_symbol_spec(const std::string& spec);

}  // namespace hardy::io
