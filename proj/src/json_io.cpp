#include "hardy/json_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hardy::io {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<cplx> complex_list(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<cplx> out;
  for (const json& e : j) out.push_back(complex_from_json(e));
  return out;
}

json complex_list_to_json(const std::vector<cplx>& v) {
  json a = json::array();
  for (cplx z : v) a.push_back(to_json(z));
  return a;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw DomainError("expected a complex number [re, im], got " + j.dump());
}

json to_json(const BlaschkeProduct& b) {
  return {{"constant", to_json(b.constant())}, {"zeros", complex_list_to_json(b.zeros())}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  if (!j.is_object() || !j.contains("zeros")) {
    throw DomainError("Blaschke spec needs an object with \"zeros\"");
  }
  const cplx c = j.contains("constant") ? complex_from_json(j.at("constant")) : cplx(1.0);
  return BlaschkeProduct(complex_list(j.at("zeros"), "zeros"), c);
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(to_json(m(r, c)));
  }
  return {{"n", m.rows()}, {"entries", entries}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw DomainError("matrix spec needs \"n\" and \"entries\"");
  }
  const json& nj = j.at("n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) {
    throw DomainError("matrix \"n\" must be a positive integer");
  }
  const int n = nj.get<int>();
  const std::vector<cplx> e = complex_list(j.at("entries"), "entries");
  if (e.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw DomainError("matrix needs n*n = " + std::to_string(n * n) + " entries, got " +
                      std::to_string(e.size()));
  }
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = e[static_cast<size_t>(r * n + c)];
  }
  return m;
}

json to_json(const ClarkMeasure& m) {
  json atoms = json::array();
  for (const ClarkAtom& a : m.atoms) atoms.push_back({{"zeta", to_json(a.zeta)}, {"mass", a.mass}});
  return {{"alpha", to_json(m.alpha)}, {"atoms", atoms}, {"tail_bound", m.tail_bound}};
}

json to_json(const HardyFunction& f) {
  return {{"numerator", complex_list_to_json(f.numerator().coeffs())},
          {"denominator", complex_list_to_json(f.denominator().coeffs())}};
}

HardyFunction hardy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numerator")) {
    throw DomainError("function spec needs \"numerator\"");
  }
  const std::vector<cplx> num = complex_list(j.at("numerator"), "numerator");
  if (num.empty()) throw DomainError("numerator is empty");
  std::vector<cplx> den{1.0};
  if (j.contains("denominator")) den = complex_list(j.at("denominator"), "denominator");
  if (den.empty()) throw DomainError("denominator is empty");
  return HardyFunction::from_coefficients(num, den);
}

Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty polynomial expression");
  std::vector<cplx> coeffs;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("cannot parse polynomial \"" + text + "\": " + why);
  };
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      fail("expected + or - at position " + std::to_string(pos));
    }
    double c = 1.0;
    bool have_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      size_t used = 0;
      try {
        c = std::stod(s.substr(pos), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos += used;
      have_number = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int power = 0;
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("missing exponent");
        power = std::stoi(s.substr(start, pos - start));
      }
    } else if (!have_number) {
      fail("expected a number or z");
    }
    if (coeffs.size() <= static_cast<size_t>(power)) coeffs.resize(static_cast<size_t>(power) + 1, 0.0);
    coeffs[static_cast<size_t>(power)] += sign * c;
  }
  return Polynomial(coeffs);
}

std::string resolve_spec_text(const std::string& spec) {
  const std::string t = trim(spec);
  if (!t.empty() && t[0] == '@') {
    std::ifstream in(t.substr(1));
    if (!in) throw DomainError("cannot read spec file " + t.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return trim(buf.str());
  }
  return t;
}

HardyFunction parse_function_spec(const std::string& spec) {
  const std::string t = resolve_spec_text(spec);
  if (!t.empty() && t[0] == '{') {
    const json j = parse_json_text(t);
    if (j.contains("zeros")) return blaschke_from_json(j).as_hardy();
    return hardy_from_json(j);
  }
  return HardyFunction(parse_polynomial(t));
}

Symbol parse_symbol_spec(const std::string& spec) {
  const std::string t = resolve_spec_text(spec);
  if (!t.empty() && t[0] == '{') {
    const json j = parse_json_text(t);
    if (j.contains("zeros")) return Symbol::from_blaschke(blaschke_from_json(j));
    return Symbol::from_hardy(hardy_from_json(j), j.dump());
  }
  const Polynomial p = parse_polynomial(t);
  const int n = p.degree();
  bool monomial = true;
  for (int k = 0; k < n; ++k) monomial = monomial && p[k] == 0.0;
  if (monomial && std::abs(std::abs(p[n]) - 1.0) <= 1e-14) {
    std::vector<cplx> zeros(static_cast<size_t>(n), 0.0);
    return Symbol::from_blaschke(BlaschkeProduct(zeros, p[n] / std::abs(p[n])), t);
  }
  return Symbol::from_hardy(HardyFunction(p), t);
}

}  // namespace hardy::io
