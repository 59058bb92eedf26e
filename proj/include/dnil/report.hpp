#pragma once

// Structured (JSON) forms of the library's values and the CLI report envelope.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "dnil/diffop.hpp"
#include "dnil/diffpoly.hpp"
#include "dnil/grassmann.hpp"
#include "dnil/ideal.hpp"

namespace dnil {

using Json = nlohmann::ordered_json;

/// [{exponents: [[order, exp], ...], coefficient: "n/d"}, ...], descending order.
Json to_json(const DiffPolynomial& f);
/// [{vectors: [[kind, level, order], ...], coefficient: "n/d"}, ...]
Json to_json(const GrassmannElement& u);
/// [{order, scalar, poly}, ...] by ascending D-order.
Json to_json(const DiffOperator& a);
/// [{cofactor, k, coefficient}, ...] with cofactors in the polynomial grammar.
Json to_json(const MembershipCertificate& cert);

DiffPolynomial polynomial_from_json(const Json& j);

struct Report {
  std::string command;
  Json params = Json::object();
  Json result = Json::object();
  std::optional<Json> certificate;
  std::uint64_t elapsed_ms = 0;

  Json to_json() const;
};

}  // namespace dnil
