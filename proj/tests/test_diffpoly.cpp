#include <doctest.h>

#include <set>

#include "dnil/errors.hpp"
#include "dnil/sampling.hpp"
#include "support.hpp"

using namespace dnil;
using testing::M;
using testing::P;

namespace {

std::vector<unsigned> exponents(const DiffMonomial& mono, unsigned length) {
  std::vector<unsigned> out(length, 0);
  for (const auto& [order, e] : mono.factors()) out.at(order) = e;
  return out;
}

// The order rule read straight off exponent vectors.
OrderComparison brute_compare(const DiffMonomial& p, const DiffMonomial& q) {
  unsigned length = std::max(p.max_order(), q.max_order()) + 1;
  auto a = exponents(p, length), b = exponents(q, length);
  for (unsigned j = 0; j < length; ++j) {
    if (a[j] == b[j]) continue;
    return a[j] < b[j] ? OrderComparison::p_larger : OrderComparison::q_larger;
  }
  return OrderComparison::equal;
}

bool brute_alpha(const DiffMonomial& mono, unsigned m) {
  auto e = exponents(mono, mono.max_order() + 2);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] + e[i + 1] >= m) return false;
  }
  return true;
}

// Partitions of w into at most d parts.
std::size_t partitions(unsigned w, unsigned d) {
  std::vector<std::vector<std::size_t>> table(w + 1, std::vector<std::size_t>(d + 1, 0));
  for (unsigned k = 0; k <= d; ++k) table[0][k] = 1;
  for (unsigned n = 1; n <= w; ++n) {
    for (unsigned k = 1; k <= d; ++k) {
      table[n][k] = table[n][k - 1] + (n >= k ? table[n - k][k] : 0);
    }
  }
  return table[w][d];
}

}  // namespace

TEST_CASE("derive") {
  CHECK(derive(DiffPolynomial{}).is_zero());
  CHECK(derive(P("x0*x1")) == P("x1^2 + x0*x2"));
  CHECK(derive(P("x0^2")) == P("2*x0*x1"));
  CHECK(derive(P("x0^2"), 3) == P("6*x1*x2 + 2*x0*x3"));
  CHECK(derive(P("x4"), 0) == P("x4"));
}

TEST_CASE("multiply") {
  CHECK(P("x0") * P("x0") == P("x0^2"));
  CHECK(P("x0 + x1") * P("x0 - x1") == P("x0^2 - x1^2"));
  CHECK(multiply(P("2*x1"), P("3*x0*x2")) == P("6*x0*x1*x2"));
}

TEST_CASE("is_alpha") {
  CHECK(is_alpha(M("x0*x2"), 2));
  CHECK_FALSE(is_alpha(M("x1^2"), 2));
  CHECK(is_alpha(DiffMonomial{}, 2));
  CHECK_THROWS_AS(is_alpha(M("x0"), 1), InvalidParameter);
}

TEST_CASE("enumerate_monomials examples") {
  CHECK(enumerate_monomials(2, 2) == std::vector<DiffMonomial>{M("x1^2"), M("x0*x2")});
  CHECK(enumerate_monomials(1, 5) == std::vector<DiffMonomial>{M("x5")});
  CHECK(enumerate_monomials(0, 0) == std::vector<DiffMonomial>{DiffMonomial{}});
  CHECK(enumerate_monomials(0, 3).empty());
}

TEST_CASE("enumerate_monomials matches the partition count and is sorted descending") {
  for (unsigned d = 1; d <= 6; ++d) {
    for (unsigned w = 0; w <= 10; ++w) {
      auto list = enumerate_monomials(d, w);
      CHECK(list.size() == partitions(w, d));
      std::set<DiffMonomial> distinct(list.begin(), list.end());
      CHECK(distinct.size() == list.size());
      for (const auto& mono : list) {
        CHECK(mono.degree() == d);
        CHECK(mono.weight() == w);
      }
      for (std::size_t i = 1; i < list.size(); ++i) {
        CHECK(compare_order(list[i - 1], list[i]) == OrderComparison::p_larger);
      }
    }
  }
}

TEST_CASE("enumerate_alpha") {
  CHECK(enumerate_alpha(2, 2, 2) == std::vector<DiffMonomial>{M("x0*x2")});
  CHECK(enumerate_alpha(2, 2, 3) == std::vector<DiffMonomial>{M("x0*x3")});
  CHECK(enumerate_alpha(3, 2, 2) == std::vector<DiffMonomial>{M("x1^2"), M("x0*x2")});
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned d = 1; d <= 5; ++d) {
      for (unsigned w = 0; w <= 9; ++w) {
        std::size_t expected = 0;
        for (const auto& mono : enumerate_monomials(d, w)) expected += brute_alpha(mono, m) ? 1 : 0;
        auto list = enumerate_alpha(m, d, w);
        CHECK(list.size() == expected);
        for (const auto& mono : list) CHECK(is_alpha(mono, m));
      }
    }
  }
}

TEST_CASE("compare_order examples") {
  CHECK(compare_order(M("x0*x2"), M("x1^2")) == OrderComparison::q_larger);
  CHECK(compare_order(M("x0*x3"), M("x0*x3")) == OrderComparison::equal);
  CHECK(compare_order(M("x0^2"), M("x0*x1")) == OrderComparison::q_larger);
}

TEST_CASE("compare_order agrees with the exponent-vector rule and is a total order on slices") {
  for (unsigned d = 1; d <= 4; ++d) {
    for (unsigned w = 0; w <= 7; ++w) {
      auto list = enumerate_monomials(d, w);
      for (const auto& p : list) {
        for (const auto& q : list) {
          auto c = compare_order(p, q);
          CHECK(c == brute_compare(p, q));
          CHECK((c == OrderComparison::equal) == (p == q));
          auto r = compare_order(q, p);
          if (c == OrderComparison::p_larger) CHECK(r == OrderComparison::q_larger);
        }
      }
    }
  }
}

TEST_CASE("compare_order is multiplicative") {
  auto slice = enumerate_monomials(3, 4);
  auto factors = enumerate_monomials(2, 3);
  for (const auto& p : slice) {
    for (const auto& q : slice) {
      for (const auto& r : factors) CHECK(compare_order(p * r, q * r) == compare_order(p, q));
    }
  }
}

TEST_CASE("leading_monomial") {
  CHECK(leading_monomial(P("x0*x2 + x1^2")) == M("x1^2"));
  CHECK(leading_monomial(P("5*x3")) == M("x3"));
  CHECK(leading_monomial(P("x0*x3 + x1*x2")) == M("x1*x2"));
  CHECK_THROWS_AS(leading_monomial(DiffPolynomial{}), EmptyInput);
}

TEST_CASE("leading monomial of a generator derivative is balanced") {
  for (unsigned m = 2; m <= 4; ++m) {
    DiffPolynomial g = DiffPolynomial::variable(0, m);
    for (unsigned k = 0; k <= 9; ++k) {
      unsigned q = k / m, r = k % m;
      DiffMonomial expected = DiffMonomial::variable(q, m - r);
      if (r > 0) expected = expected * DiffMonomial::variable(q + 1, r);
      CHECK(leading_monomial(g) == expected);
      g = derive(g);
    }
  }
}

TEST_CASE("parse and print") {
  DiffPolynomial f = P("2*x0*x1 - 1/2*x3^2");
  CHECK(f.coefficient(M("x0*x1")) == 2);
  CHECK(f.coefficient(M("x3^2")) == Rational(-1, 2));
  CHECK(f.size() == 2);
  CHECK(to_string(f) == "-1/2*x3^2 + 2*x0*x1");
  CHECK(P("x0^2") == DiffPolynomial::variable(0, 2));
  CHECK(P(" x0 * x1 ") == P("x0*x1"));
  CHECK(to_string(DiffPolynomial{}) == "0");
  CHECK(to_string(P("x0 - x0")) == "0");
  CHECK(P("3") == DiffPolynomial::constant(3));
  CHECK_THROWS_AS(P("x-1"), ParseError);
  CHECK_THROWS_AS(P("x1^-2"), ParseError);
  CHECK_THROWS_AS(P("1/0*x1"), ParseError);
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  try {
    P("x1 + y2");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("print/parse round trip") {
  Sampler s(11);
  for (int i = 0; i < 200; ++i) {
    DiffPolynomial f = s.polynomial(4, 8, 5);
    CHECK(P(to_string(f)) == f);
  }
}

TEST_CASE("derivation properties") {
  Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    DiffPolynomial f = s.polynomial(3, 5, 3), g = s.polynomial(3, 5, 3);
    CHECK(derive(f * g) == derive(f) * g + f * derive(g));
    CHECK(derive(f + g) == derive(f) + derive(g));
    CHECK(derive(f, 3) == derive(derive(derive(f))));
    for (const auto& [key, slice] : f.slices()) {
      DiffPolynomial d = derive(slice);
      for (const auto& [mono, c] : d.terms()) {
        CHECK(mono.degree() == key.first);
        CHECK(mono.weight() == key.second + 1);
      }
    }
  }
}

TEST_CASE("ring axioms on samples") {
  Sampler s(5);
  for (int i = 0; i < 50; ++i) {
    DiffPolynomial f = s.polynomial(2, 4, 3), g = s.polynomial(2, 4, 3), h = s.polynomial(2, 4, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}
