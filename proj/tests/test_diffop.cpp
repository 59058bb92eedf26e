#include <doctest.h>

#include <variant>

#include "dnil/diffop.hpp"
#include "dnil/errors.hpp"
#include "dnil/ideal.hpp"
#include "dnil/sampling.hpp"
#include "support.hpp"

using namespace dnil;
using testing::P;

namespace {

DiffOperator O(const std::string& text) { return parse_operator(text); }
DiffOperator D(unsigned order = 1) { return DiffOperator::term(OperatorCoefficient::scalar_only(1), order); }

// The operator acting on an element of D_2: sum a_p * f^{(p)}.
DiffPolynomial apply(const DiffOperator& a, const DiffPolynomial& f) {
  DiffPolynomial out;
  for (const auto& [p, c] : a.coefficients()) {
    DiffPolynomial fp = derive(f, p);
    out += c.scalar() * fp + c.poly() * fp;
  }
  return normal_form(out, 2).poly();
}

}  // namespace

TEST_CASE("commutation rule") {
  DiffOperator x = DiffOperator::element(P("x0"));
  CHECK(D() * x == DiffOperator::element(P("x0"), 1) + DiffOperator::element(P("x1")));
  CHECK(commutator(D(), x) == DiffOperator::element(P("x1")));
  CHECK(commutator(D(2), x) == DiffOperator::element(P("2*x1"), 1) + DiffOperator::element(P("x2")));
  DiffOperator xd = DiffOperator::element(P("x0"), 1);
  CHECK((xd * xd).is_zero());
  CHECK(commutator(xd, xd).is_zero());
  CHECK(DiffOperator::identity() * xd == xd);
  CHECK(op_power(xd, 1) == xd);
}

TEST_CASE("leading_coefficient") {
  CHECK(leading_coefficient(O("x0*D^3 + x2")) == OperatorCoefficient::element(P("x0")));
  CHECK(leading_coefficient(O("x5")) == OperatorCoefficient::element(P("x5")));
  CHECK(leading_coefficient(O("2*D + x0*D")) == OperatorCoefficient(2, P("x0")));
  CHECK_THROWS_AS(leading_coefficient(DiffOperator{}), EmptyInput);
}

TEST_CASE("nil_bound and nil_index_operator") {
  CHECK(nil_bound(O("x0*D")) == 3);
  CHECK(nil_bound(O("x2")) == 4);
  CHECK(nil_bound(O("x0*D^2 + x1")) == 5);
  CHECK_THROWS_AS(nil_bound(O("1 + x0")), InvalidInput);
  CHECK_THROWS_AS(nil_bound(DiffOperator{}), InvalidInput);
  CHECK(nil_index_operator(O("x0*D")) == 2);
  CHECK(nil_index_operator(O("x1")) == 3);
  unsigned n = nil_index_operator(O("x0*D + x1"));
  CHECK(n <= 3);
  CHECK(op_power(O("x0*D + x1"), n).is_zero());
  CHECK_FALSE(op_power(O("x0*D + x1"), n - 1).is_zero());
}

TEST_CASE("coefficients are reduced modulo [x^2]") {
  CHECK(O("x1^2*D") == O("-1*x0*x2*D"));
  CHECK(O("x0^2").is_zero());
}

TEST_CASE("parse and print operators") {
  CHECK(to_string(O("x0*D^2 + x1*D + 1")) == to_string(O("1 + x1*D + x0*D^2")));
  Sampler s(19);
  for (int i = 0; i < 50; ++i) {
    DiffOperator a = s.d2_operator();
    CHECK(parse_operator(to_string(a)) == a);
  }
  CHECK_THROWS_AS(O("x0*D^"), ParseError);
  CHECK(O("x0*D*D") == O("x0*D^2"));
}

TEST_CASE("multiplication matches composition of actions") {
  Sampler s(37);
  for (int i = 0; i < 40; ++i) {
    DiffOperator a = s.d2_operator(), b = s.d2_operator();
    if (i % 4 == 0) a += DiffOperator::identity();
    if (i % 5 == 0) b += D(2);
    DiffPolynomial f = s.d2_element();
    CHECK(apply(a * b, f) == apply(a, apply(b, f)));
  }
}

TEST_CASE("operator algebra properties") {
  Sampler s(43);
  for (int i = 0; i < 30; ++i) {
    DiffOperator a = s.d2_operator(), b = s.d2_operator(), c = s.d2_operator();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(commutator(a, b) == DiffOperator{} - commutator(b, a));
    DiffPolynomial e = s.d2_element();
    // D e - e D = e'
    CHECK(commutator(D(), DiffOperator::element(e)) == DiffOperator::element(derive(e)));
  }
}

TEST_CASE("witness_corollary") {
  auto a = witness_corollary(P("x0"), P("x0"), 10);
  REQUIRE(a);
  CHECK(a->k == 2);
  CHECK(a->product == P("x0*x2"));
  auto b = witness_corollary(P("x2"), P("x0"), 10);
  REQUIRE(b);
  CHECK(b->k == 0);
  auto c = witness_corollary(P("x1"), P("x1"), 10);
  REQUIRE(c);
  for (unsigned k = 0; k < c->k; ++k) CHECK(normal_form(derive(P("x1"), k) * P("x1"), 2).is_zero());
  CHECK(verify_witness(P("x1"), P("x1"), *c));
  CHECK_THROWS_AS(witness_corollary(P("0"), P("x0"), 10), InvalidInput);
  CHECK_THROWS_AS(witness_corollary(P("x0"), P("x1^2 + x0*x2"), 10), InvalidInput);
}

TEST_CASE("witness_theorem2") {
  auto r = witness_theorem2(O("x0"), O("x0"), 10, 12);
  REQUIRE(std::holds_alternative<Theorem2Witness>(r));
  auto w = std::get<Theorem2Witness>(r);
  CHECK(w.k == 2);
  CHECK_FALSE(w.product.is_zero());
  CHECK(verify_witness(O("x0"), O("x0"), w));

  auto r2 = witness_theorem2(O("x0*D"), O("x0"), 10, 12);
  REQUIRE(std::holds_alternative<Theorem2Witness>(r2));
  auto w2 = std::get<Theorem2Witness>(r2);
  CHECK(w2.k == 2);
  CHECK(verify_witness(O("x0*D"), O("x0"), w2));
  DiffOperator c = DiffOperator::element(w2.c, 1);
  CHECK(w2.product == commutator(op_power(c, w2.k), O("x0*D")) * O("x0"));

  auto tiny = witness_theorem2(O("x0*D"), O("x0"), 1, 12);
  CHECK(std::holds_alternative<WitnessExhausted>(tiny));
  CHECK_THROWS_AS(witness_theorem2(DiffOperator{}, O("x0"), 10, 12), InvalidInput);
  CHECK_THROWS_AS(witness_theorem2(O("1 + x0"), O("x0"), 10, 12), InvalidInput);
}
