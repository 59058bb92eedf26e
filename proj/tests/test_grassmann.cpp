#include <doctest.h>

#include <algorithm>
#include <random>

#include "dnil/embedding.hpp"
#include "dnil/errors.hpp"
#include "support.hpp"

using namespace dnil;
using testing::eta;
using testing::xi;

namespace {

// Sign of sorting `v` by counting inversions pairwise.
int inversion_sign(const std::vector<BasisVector>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) sign = -sign;
    }
  }
  return sign;
}

GrassmannElement random_element(std::mt19937_64& rng, unsigned m, unsigned max_degree, unsigned max_order) {
  GrassmannElement out(m);
  unsigned terms = 1 + rng() % 3;
  for (unsigned t = 0; t < terms; ++t) {
    unsigned degree = 1 + rng() % max_degree;
    std::vector<BasisVector> vectors;
    for (unsigned k = 0; k < degree; ++k) {
      Kind kind = rng() % 2 ? Kind::xi : Kind::eta;
      vectors.push_back({kind, static_cast<unsigned>(rng() % (m - 1)), static_cast<unsigned>(rng() % (max_order + 1))});
    }
    out += GrassmannElement::product(m, vectors, Rational(static_cast<long>(rng() % 5) - 2));
  }
  return out;
}

// Wedge power by repeated multiplication, no shortcuts.
GrassmannElement slow_power(const GrassmannElement& u, unsigned n) {
  GrassmannElement acc = u;
  for (unsigned i = 1; i < n; ++i) acc = wedge(acc, u);
  return acc;
}

}  // namespace

TEST_CASE("wedge examples") {
  auto x = wedge(xi(0, 0), eta(0, 0));
  CHECK(wedge(x, x).is_zero());
  CHECK(x == GrassmannElement::product(2, {BasisVector::xi(0, 0), BasisVector::eta(0, 0)}));
  CHECK(wedge(eta(0, 0), xi(0, 0)) == Rational(-1) * x);
  CHECK_THROWS_AS(wedge(xi(0, 0, 2), xi(0, 0, 3)), InvalidParameter);
}

TEST_CASE("canonicalize sign matches the inversion count") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BasisVector> v;
    for (unsigned k = 0; k < 6; ++k) {
      v.push_back({rng() % 2 ? Kind::xi : Kind::eta, static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 4)});
    }
    auto canon = GrassmannMonomial::canonicalize(v);
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    CHECK(canon.has_value() == !repeats);
    if (canon) {
      CHECK(canon->first.vectors() == sorted);
      CHECK(canon->second == inversion_sign(v));
    }
  }
}

TEST_CASE("derive examples") {
  auto x = wedge(xi(0, 0), eta(0, 0));
  CHECK(derive(x) == wedge(xi(0, 1), eta(0, 0)) + wedge(xi(0, 0), eta(0, 1)));
  CHECK(derive(xi(0, 0)) == xi(0, 1));
  CHECK(derive(derive(x)) ==
        wedge(xi(0, 2), eta(0, 0)) + Rational(2) * wedge(xi(0, 1), eta(0, 1)) + wedge(xi(0, 0), eta(0, 2)));
}

TEST_CASE("power examples") {
  auto x = wedge(xi(0, 0), eta(0, 0));
  CHECK(power(x, 2).is_zero());
  auto x1 = wedge(xi(0, 1), eta(0, 0)) + wedge(xi(0, 0), eta(0, 1));
  auto expected = GrassmannElement::product(
      2, {BasisVector::xi(0, 0), BasisVector::eta(0, 0), BasisVector::xi(0, 1), BasisVector::eta(0, 1)}, -2);
  CHECK(power(x1, 2) == expected);
  CHECK(power(x1, 3).is_zero());
  CHECK(power(x1, 1) == x1);
  CHECK_THROWS_AS(power(x1, 0), InvalidParameter);
  CHECK(nil_index(x1, 10) == 3u);
  CHECK(nil_index(x1, 2) == std::nullopt);
}

TEST_CASE("power agrees with repeated wedge") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned m = 2 + trial % 2;
    GrassmannElement u = random_element(rng, m, 2, 3);
    for (unsigned n = 1; n <= 4; ++n) CHECK(power(u, n) == slow_power(u, n));
  }
}

TEST_CASE("is_even") {
  CHECK(is_even(wedge(xi(0, 0), eta(0, 0))));
  CHECK_FALSE(is_even(xi(0, 0)));
  CHECK(is_even(GrassmannElement(2)));
}

TEST_CASE("no unit element") {
  CHECK_THROWS_AS(GrassmannElement::product(2, {}), InvalidInput);
  CHECK_THROWS_AS(GrassmannElement(1), InvalidParameter);
  CHECK_THROWS_AS(xi(1, 0, 2), InvalidParameter);
}

TEST_CASE("weight_lower_bound") {
  CHECK(weight_lower_bound(4, 2) == 2);
  CHECK(weight_lower_bound(2, 2) == 0);
  CHECK(weight_lower_bound(6, 2) == 6);
  CHECK_THROWS_AS(weight_lower_bound(4, 3), Unsupported);
}

TEST_CASE("algebra properties") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    unsigned m = 2 + trial % 2;
    auto u = random_element(rng, m, 3, 3), v = random_element(rng, m, 3, 3), w = random_element(rng, m, 2, 3);
    CHECK(derive(wedge(u, v)) == wedge(derive(u), v) + wedge(u, derive(v)));
    CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
    CHECK(wedge(u, v + w) == wedge(u, v) + wedge(u, w));
    if (!u.is_zero()) CHECK_FALSE(derive(u).is_zero());
  }
}

TEST_CASE("generators anticommute and even elements are central") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    BasisVector a{rng() % 2 ? Kind::xi : Kind::eta, 0, static_cast<unsigned>(rng() % 4)};
    BasisVector b{rng() % 2 ? Kind::xi : Kind::eta, 0, static_cast<unsigned>(rng() % 4)};
    auto ga = GrassmannElement::generator(2, a), gb = GrassmannElement::generator(2, b);
    CHECK(wedge(ga, gb) == Rational(-1) * wedge(gb, ga));
    auto even = phi_generator(2, static_cast<unsigned>(rng() % 4));
    auto u = random_element(rng, 2, 3, 3);
    CHECK(wedge(even, u) == wedge(u, even));
  }
}
