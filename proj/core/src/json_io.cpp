#include "hgm/json_io.hpp"

namespace hgm {

namespace {

size_t digits_for(mpfr_prec_t prec) {
  return static_cast<size_t>(prec * 0.31) + 2;
}

json real_str(const Real& r) { return r.str(digits_for(r.prec())); }

}  // namespace

json complex_to_json(const Complex& z) {
  return json::array({real_str(z.re()), real_str(z.im())});
}

json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (size_t i = 0; i < m.n(); ++i)
    for (size_t j = 0; j < m.n(); ++j) entries.push_back(complex_to_json(m.at(i, j)));
  return json{{"n", m.n()},
              {"precision_bits", static_cast<long>(m.prec())},
              {"entries", entries}};
}

CMatrix matrix_from_json(const json& j) {
  size_t n = j.at("n").get<size_t>();
  mpfr_prec_t prec = j.at("precision_bits").get<long>();
  CMatrix m(n, prec);
  const json& entries = j.at("entries");
  if (entries.size() != n * n) throw NumericError("matrix JSON entry count mismatch");
  for (size_t k = 0; k < n * n; ++k) {
    m.at(k / n, k % n) =
        Complex(Real::from_string(entries[k][0].get<std::string>(), prec),
                Real::from_string(entries[k][1].get<std::string>(), prec));
  }
  return m;
}

json ghg_params_to_json(const GHGParams& p) {
  json a = json::array(), b = json::array();
  for (const auto& x : p.a) a.push_back(rational_str(x));
  for (const auto& x : p.b) b.push_back(rational_str(x));
  return json{{"system", "ghg"}, {"a", a}, {"b", b}};
}

json fc_params_to_json(const FCParams& p) {
  json a = json::array(), b = json::array();
  a.push_back(rational_str(p.a1));
  a.push_back(rational_str(p.a2));
  for (const auto& x : p.b) b.push_back(rational_str(x));
  return json{{"system", "fc"}, {"a", a}, {"b", b}};
}

GHGParams ghg_params_from_json(const json& j) {
  GHGParams p;
  for (const auto& s : j.at("a")) p.a.push_back(parse_rational(s.get<std::string>()));
  for (const auto& s : j.at("b")) p.b.push_back(parse_rational(s.get<std::string>()));
  return p;
}

FCParams fc_params_from_json(const json& j) {
  FCParams p;
  const auto& a = j.at("a");
  if (a.size() != 2) throw NumericError("fc params need exactly two a's");
  p.a1 = parse_rational(a[0].get<std::string>());
  p.a2 = parse_rational(a[1].get<std::string>());
  for (const auto& s : j.at("b")) p.b.push_back(parse_rational(s.get<std::string>()));
  return p;
}

json circuit_set_to_json(const CircuitSetGHG& set) {
  return json{{"kind", "ghg_circuit_set"},
              {"p", set.p()},
              {"params", ghg_params_to_json(set.params)},
              {"lambda", complex_to_json(set.lambda)},
              {"H", matrix_to_json(set.H)},
              {"M0", matrix_to_json(set.M0)},
              {"M1", matrix_to_json(set.M1)}};
}

json circuit_set_to_json(const CircuitSetFC& set) {
  json gens = json::array();
  for (const auto& m : set.M) gens.push_back(matrix_to_json(m));
  return json{{"kind", "fc_circuit_set"},
              {"m", set.m()},
              {"params", fc_params_to_json(set.params)},
              {"lambda", complex_to_json(set.lambda)},
              {"H", matrix_to_json(set.H)},
              {"M", gens},
              {"Mlast", matrix_to_json(set.Mlast)}};
}

json riemann_scheme_to_json(const RiemannScheme& s) {
  auto list = [](const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_str(x));
    return out;
  };
  return json{{"x=0", list(s.at_zero)},
              {"x=1", list(s.at_one)},
              {"x=inf", list(s.at_infinity)}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name},
                          {"residual", c.residual.str(6)},
                          {"tolerance", c.tolerance.str(6)},
                          {"pass", c.pass},
                          {"skipped", c.skipped},
                          {"params", c.context}});
  }
  return json{{"suite", r.suite},
              {"seed", r.seed},
              {"precision_bits", static_cast<long>(r.precision_bits)},
              {"checks", checks}};
}

json violations_to_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(json{{"expr", x.expr}, {"value", rational_str(x.value)}});
  return out;
}

}  // namespace hgm
