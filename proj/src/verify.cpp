#include "dnil/verify.hpp"

#include <algorithm>
#include <functional>
#include <variant>

#include "dnil/embedding.hpp"
#include "dnil/errors.hpp"
#include "dnil/ideal.hpp"
#include "dnil/sampling.hpp"

namespace dnil {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Json SuiteResult::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) list.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", name}, {"pass", pass()}, {"checks", checks.size()}, {"failures", failures()}, {"results", list}};
}

namespace {

std::string slice_label(unsigned m, unsigned d, unsigned w) {
  return "m=" + std::to_string(m) + " d=" + std::to_string(d) + " w=" + std::to_string(w);
}

SuiteResult sweep(const std::string& name, unsigned m, unsigned max_d, unsigned max_w,
                  const std::function<Check(unsigned, unsigned)>& body) {
  SuiteResult out{name, {}};
  for (unsigned d = 1; d <= max_d; ++d) {
    for (unsigned w = 0; w <= max_w; ++w) {
      Check c = body(d, w);
      c.label = slice_label(m, d, w);
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

Json optional_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Check ritt_check(unsigned m, unsigned i) {
  unsigned expected = (i + 1) * m - i;
  auto grassmann = nil_index(phi_generator(m, i), expected + 2);
  auto ideal = nil_index_element(DiffPolynomial::variable(i), m, expected + 2);
  Check c;
  c.label = "m=" + std::to_string(m) + " i=" + std::to_string(i);
  c.pass = grassmann == expected && ideal == expected;
  c.detail = {{"expected", expected}, {"grassmann", optional_json(grassmann)}, {"ideal", optional_json(ideal)}};
  return c;
}

SuiteResult verify_ritt(unsigned m, unsigned max_i) {
  SuiteResult out{"ritt", {}};
  for (unsigned i = 0; i <= max_i; ++i) out.checks.push_back(ritt_check(m, i));
  return out;
}

SuiteResult verify_injectivity(unsigned m, unsigned max_d, unsigned max_w) {
  return sweep("injectivity", m, max_d, max_w, [m](unsigned d, unsigned w) {
    auto r = injectivity_rank(m, d, w);
    return Check{{}, r.rank == r.basis_count, {{"rank", r.rank}, {"basis", r.basis_count}}};
  });
}

SuiteResult verify_basis(unsigned m, unsigned max_d, unsigned max_w) {
  return sweep("basis", m, max_d, max_w, [m](unsigned d, unsigned w) {
    std::size_t dim = component_dimension(m, d, w);
    std::size_t alpha = enumerate_alpha(m, d, w).size();
    return Check{{}, dim == alpha, {{"dimension", dim}, {"alpha", alpha}}};
  });
}

SuiteResult verify_constants(unsigned m, unsigned max_d, unsigned max_w) {
  return sweep("constants", m, max_d, max_w, [m](unsigned d, unsigned w) {
    std::size_t kernel = derivation_kernel_dimension(m, d, w);
    return Check{{}, kernel == 0, {{"kernel", kernel}}};
  });
}

SuiteResult verify_triangular(unsigned m, unsigned max_d, unsigned max_w) {
  return sweep("triangular", m, max_d, max_w, [m](unsigned d, unsigned w) {
    auto matrix = witness_matrix(m, d, w);
    return Check{{}, matrix.is_triangular(), {{"size", matrix.basis.size()}}};
  });
}

SuiteResult verify_agreement(unsigned m, unsigned max_d, unsigned max_w, unsigned samples, std::uint64_t seed) {
  SuiteResult out = sweep("agreement", m, max_d, max_w, [m](unsigned d, unsigned w) {
    std::size_t mismatches = 0;
    auto monomials = enumerate_monomials(d, w);
    for (const auto& mono : monomials) {
      DiffPolynomial f;
      f.add_term(mono, 1);
      if (!(normal_form(f, m) == normal_form_via_embedding(f, m))) ++mismatches;
    }
    return Check{{}, mismatches == 0, {{"monomials", monomials.size()}, {"mismatches", mismatches}}};
  });
  Sampler sampler(seed);
  for (unsigned s = 0; s < samples; ++s) {
    DiffPolynomial f = sampler.polynomial(std::min(max_d, 4u), max_w, 4);
    auto direct = normal_form(f, m);
    auto via = normal_form_via_embedding(f, m);
    out.checks.push_back(Check{"sample " + std::to_string(s), direct == via,
                               {{"input", to_string(f)}, {"normal_form", to_string(direct.poly())}}});
  }
  return out;
}

SuiteResult verify_nilpotent(unsigned samples, std::uint64_t seed) {
  SuiteResult out{"nilpotent", {}};
  Sampler sampler(seed);
  for (unsigned s = 0; s < samples; ++s) {
    DiffPolynomial f = sampler.d2_element();
    unsigned bound = nil_bound(DiffOperator::element(f));
    auto n = nil_index_element(f, 2, bound);
    auto grassmann = nil_index(phi(2, f), bound);
    bool ok = n.has_value() && grassmann == n && *n >= 2;
    if (ok) {
      // Recompute f^{N-1} and f^N from scratch.
      DiffPolynomial p = f;
      for (unsigned e = 2; e < *n; ++e) p = normal_form(p * f, 2).poly();
      ok = !p.is_zero() && normal_form(p * f, 2).is_zero();
    }
    out.checks.push_back(Check{"sample " + std::to_string(s), ok,
                               {{"element", to_string(f)},
                                {"bound", bound},
                                {"index", optional_json(n)},
                                {"grassmann", optional_json(grassmann)}}});
  }
  return out;
}

SuiteResult verify_operator_nil(unsigned samples, std::uint64_t seed) {
  SuiteResult out{"operator-nil", {}};
  Sampler sampler(seed);
  for (unsigned s = 0; s < samples; ++s) {
    DiffOperator a = sampler.d2_operator();
    unsigned bound = nil_bound(a);
    Check c{"sample " + std::to_string(s), false, {{"operator", to_string(a)}, {"bound", bound}}};
    try {
      unsigned n = nil_index_operator(a);
      c.detail["index"] = n;
      if (n >= 2 && n <= bound) {
        DiffOperator before = op_power(a, n - 1);
        c.pass = !before.is_zero() && (before * a).is_zero();
      }
    } catch (const InternalError& e) {
      c.detail["error"] = e.what();
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

SuiteResult verify_weight_floor(unsigned max_degree) {
  SuiteResult out{"weight-floor", {}};
  for (unsigned degree = 1; degree <= max_degree; ++degree) {
    unsigned bound = weight_lower_bound(degree, 2);
    // A vector of order above max(bound, degree) already pushes the weight
    // past every candidate minimum, so these orders suffice.
    unsigned orders = std::max(bound, degree) + 1;
    std::vector<unsigned> pool;  // order of each of xi_i, eta_i
    for (unsigned i = 0; i < orders; ++i) pool.insert(pool.end(), {i, i});

    unsigned min_weight = ~0u;
    std::size_t below = 0;
    std::size_t count = 0;
    std::function<void(std::size_t, std::size_t, unsigned)> walk = [&](std::size_t depth, std::size_t start,
                                                                       unsigned weight) {
      if (depth == degree) {
        ++count;
        min_weight = std::min(min_weight, weight);
        if (weight < bound) ++below;
        return;
      }
      for (std::size_t j = start; j + (degree - depth) <= pool.size(); ++j) walk(depth + 1, j + 1, weight + pool[j]);
    };
    walk(0, 0, 0);

    out.checks.push_back(Check{"D=" + std::to_string(degree), below == 0 && min_weight == bound,
                               {{"bound", bound}, {"min_weight", min_weight}, {"below", below}, {"monomials", count}}});
  }
  return out;
}

SuiteResult verify_witnesses(unsigned samples, std::uint64_t seed, unsigned k_cap, unsigned c_cap) {
  SuiteResult out{"witnesses", {}};
  Sampler sampler(seed);
  for (unsigned s = 0; s < samples; ++s) {
    DiffPolynomial a = sampler.d2_element();
    DiffPolynomial b = sampler.d2_element();
    auto w = witness_corollary(a, b, k_cap);
    Check c{"element " + std::to_string(s), false, {{"a", to_string(a)}, {"b", to_string(b)}}};
    if (w) {
      c.detail["k"] = w->k;
      c.pass = verify_witness(a, b, *w);
    }
    out.checks.push_back(std::move(c));
  }
  for (unsigned s = 0; s < samples; ++s) {
    DiffOperator a = sampler.d2_operator();
    DiffOperator b = sampler.d2_operator();
    auto result = witness_theorem2(a, b, k_cap, c_cap);
    Check c{"operator " + std::to_string(s), false, {{"a", to_string(a)}, {"b", to_string(b)}}};
    if (auto* w = std::get_if<Theorem2Witness>(&result)) {
      c.detail["j"] = w->j;
      c.detail["k"] = w->k;
      c.pass = verify_witness(a, b, *w);
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace dnil
