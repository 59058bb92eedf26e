#include "dnil/report.hpp"

#include <algorithm>
#include <vector>

#include "dnil/errors.hpp"

namespace dnil {

Json to_json(const DiffPolynomial& f) {
  std::vector<std::pair<DiffMonomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return DescendingOrder{}(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [mono, c] : terms) {
    Json exps = Json::array();
    for (const auto& [order, exp] : mono.factors()) exps.push_back({order, exp});
    out.push_back({{"exponents", std::move(exps)}, {"coefficient", to_fraction_string(c)}});
  }
  return out;
}

Json to_json(const GrassmannElement& u) {
  Json out = Json::array();
  for (const auto& [mono, c] : u.terms()) {
    Json vectors = Json::array();
    for (const auto& v : mono.vectors()) {
      vectors.push_back({v.kind == Kind::xi ? "xi" : "eta", v.level, v.order});
    }
    out.push_back({{"vectors", std::move(vectors)}, {"coefficient", to_fraction_string(c)}});
  }
  return out;
}

Json to_json(const DiffOperator& a) {
  Json out = Json::array();
  for (const auto& [order, c] : a.coefficients()) {
    out.push_back({{"order", order}, {"scalar", to_fraction_string(c.scalar())}, {"poly", to_json(c.poly())}});
  }
  return out;
}

Json to_json(const MembershipCertificate& cert) {
  Json out = Json::array();
  for (const auto& t : cert.terms) {
    out.push_back({{"cofactor", to_string(t.cofactor)}, {"k", t.k}, {"coefficient", to_fraction_string(t.coefficient)}});
  }
  return out;
}

DiffPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
  DiffPolynomial out;
  for (const auto& term : j) {
    std::vector<DiffMonomial::Factor> factors;
    for (const auto& pair : term.at("exponents")) {
      factors.emplace_back(pair.at(0).get<Order>(), pair.at(1).get<Exponent>());
    }
    out.add_term(DiffMonomial(std::move(factors)), parse_rational(term.at("coefficient").get<std::string>()));
  }
  return out;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["params"] = params;
  out["result"] = result;
  out["certificate"] = certificate ? *certificate : Json(nullptr);
  out["elapsed_ms"] = elapsed_ms;
  return out;
}

}  // namespace dnil
