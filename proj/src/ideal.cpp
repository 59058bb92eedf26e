#include "dnil/ideal.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "dnil/embedding.hpp"
#include "dnil/errors.hpp"
#include "dnil/linalg.hpp"

namespace dnil {

namespace {

void require_m(unsigned m) {
  if (m < 2) throw InvalidParameter("m must be at least 2");
}

void require_no_constant(const DiffPolynomial& f) {
  if (f.constant_term() != 0) {
    throw InvalidInput("expected an element of k_+{x}: nonzero constant term");
  }
}

// (x^m)^{(k)} together with the coefficient of its leading monomial under
// compare_order, the balanced x_q^{m-r} x_{q+1}^r with k = q m + r.
struct GeneratorEntry {
  DiffPolynomial value;
  Rational lead_coefficient;
};

const GeneratorEntry& generator_entry(unsigned m, unsigned k) {
  static std::shared_mutex mutex;
  // deque keeps references stable while the chain grows
  static std::map<unsigned, std::deque<GeneratorEntry>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(m); it != cache.end() && k < it->second.size()) return it->second[k];
  }
  std::unique_lock lock(mutex);
  auto& chain = cache[m];
  while (chain.size() <= k) {
    unsigned n = static_cast<unsigned>(chain.size());
    DiffPolynomial value = chain.empty() ? DiffPolynomial::variable(0, m) : derive(chain.back().value);
    unsigned q = n / m, r = n % m;
    DiffMonomial lead(std::vector<DiffMonomial::Factor>{{q, m - r}, {q + 1, r}});
    Rational lc = value.coefficient(lead);
    chain.push_back({std::move(value), std::move(lc)});
  }
  return chain[k];
}

// The spanning row that has `monomial` (not alpha_m) as its leading term.
struct Reducer {
  DiffMonomial cofactor;
  unsigned k;
};

Reducer reducer_for(const DiffMonomial& monomial, unsigned m) {
  const auto& f = monomial.factors();
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    Order i = f[idx].first;
    Exponent p = f[idx].second;
    Exponent next = idx + 1 < f.size() && f[idx + 1].first == i + 1 ? f[idx + 1].second : 0;
    if (p + next < m) continue;
    Exponent a = std::min<Exponent>(p, m);
    Exponent r = m - a;
    DiffMonomial lead(std::vector<DiffMonomial::Factor>{{i, a}, {i + 1, r}});
    return {monomial.quotient(lead), i * m + r};
  }
  throw InternalError("reducer requested for an alpha_m-monomial");
}

using CertificateMap = std::map<std::pair<unsigned, DiffMonomial>, Rational>;

// Clears every non-alpha term, largest first. The result is alpha-supported
// and congruent to `slice`; quotients are accumulated into `certificate`.
DiffPolynomial reduce_slice(const DiffPolynomial& slice, unsigned m, CertificateMap* certificate) {
  std::map<DiffMonomial, Rational, DescendingOrder> work(slice.terms().begin(), slice.terms().end());
  DiffPolynomial out;
  while (!work.empty()) {
    auto top = work.begin();
    DiffMonomial mono = top->first;
    Rational c = top->second;
    work.erase(top);
    if (is_alpha(mono, m)) {
      out.add_term(mono, c);
      continue;
    }
    Reducer red = reducer_for(mono, m);
    const GeneratorEntry& gen = generator_entry(m, red.k);
    Rational factor = c / gen.lead_coefficient;
    for (const auto& [g, gc] : gen.value.terms()) {
      DiffMonomial t = red.cofactor * g;
      if (t == mono) continue;  // cancels exactly
      auto [slot, inserted] = work.try_emplace(std::move(t), 0);
      slot->second -= factor * gc;
      if (slot->second == 0) work.erase(slot);
    }
    check_term_limit(work.size(), "normal form reduction");
    if (certificate != nullptr) {
      auto& acc = (*certificate)[{red.k, red.cofactor}];
      acc += factor;
    }
  }
  return out;
}

// Full elimination of the spanning set of one slice, with columns indexed by
// the slice's monomials in descending compare_order.
struct SliceEchelon {
  std::map<DiffMonomial, std::uint32_t> column;
  SparseEchelon<std::uint32_t> echelon;

  SparseEchelon<std::uint32_t>::Vector coordinates(const DiffPolynomial& f) const {
    SparseEchelon<std::uint32_t>::Vector v;
    for (const auto& [mono, c] : f.terms()) v.emplace(column.at(mono), c);
    return v;
  }
};

std::shared_ptr<const SliceEchelon> slice_echelon(unsigned m, unsigned d, unsigned w) {
  static std::shared_mutex mutex;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const SliceEchelon>> cache;
  auto key = std::make_tuple(m, d, w);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<SliceEchelon>();
  auto monomials = enumerate_monomials(d, w);
  for (std::uint32_t idx = 0; idx < monomials.size(); ++idx) built->column.emplace(monomials[idx], idx);
  std::size_t label = 0;
  for (const auto& span : ideal_spanning_set(m, d, w)) {
    built->echelon.insert(built->coordinates(span.value), label++);
  }
  // Leading monomials of [x^m] are exactly the non-alpha monomials.
  built->echelon.for_each_pivot([&](std::uint32_t col) {
    if (is_alpha(monomials[col], m)) {
      throw InternalError("ideal slice has a pivot on an alpha_m-monomial: " + to_string(monomials[col]));
    }
  });
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

// Echelon of phi(alpha) rows for one slice, labels = index into the basis.
struct EmbeddingSlice {
  std::vector<DiffMonomial> basis;
  SparseEchelon<GrassmannMonomial> echelon{true};
};

std::shared_ptr<const EmbeddingSlice> embedding_slice(unsigned m, unsigned d, unsigned w) {
  static std::shared_mutex mutex;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const EmbeddingSlice>> cache;
  auto key = std::make_tuple(m, d, w);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<EmbeddingSlice>();
  built->basis = enumerate_alpha(m, d, w);
  for (std::size_t idx = 0; idx < built->basis.size(); ++idx) {
    GrassmannElement image = phi(m, built->basis[idx]);
    if (!built->echelon.insert({image.terms().begin(), image.terms().end()}, idx)) {
      throw InternalError("phi is not injective on slice (" + std::to_string(d) + ", " +
                          std::to_string(w) + ")");
    }
  }
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

}  // namespace

const DiffPolynomial& generator_derivative(unsigned m, unsigned k) {
  require_m(m);
  return generator_entry(m, k).value;
}

std::vector<IdealSpanElement> ideal_spanning_set(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  std::vector<IdealSpanElement> out;
  if (d < m) return out;
  for (unsigned k = 0; k <= w; ++k) {
    const DiffPolynomial& gen = generator_derivative(m, k);
    for (auto& cofactor : enumerate_monomials(d - m, w - k)) {
      DiffPolynomial value = DiffPolynomial(cofactor) * gen;
      out.push_back({std::move(cofactor), k, std::move(value)});
    }
  }
  return out;
}

DiffPolynomial MembershipCertificate::expand() const {
  DiffPolynomial out;
  for (const auto& t : terms) {
    out += t.coefficient * (DiffPolynomial(t.cofactor) * generator_derivative(m, t.k));
  }
  return out;
}

MembershipResult membership(const DiffPolynomial& f, unsigned m) {
  require_m(m);
  require_no_constant(f);
  CertificateMap quotients;
  for (const auto& [key, slice] : f.slices()) {
    auto [d, w] = key;
    DiffPolynomial rest = reduce_slice(slice, m, &quotients);
    if (rest.is_zero()) continue;
    // The remainder is a nonzero alpha-combination; confirm non-membership
    // against the full elimination of the slice.
    auto ech = slice_echelon(m, d, w);
    if (ech->echelon.in_span(ech->coordinates(slice))) {
      throw InternalError("alpha_m-monomials are dependent modulo [x^m] in slice (" +
                          std::to_string(d) + ", " + std::to_string(w) + ")");
    }
    return {false, std::nullopt};
  }
  MembershipCertificate cert;
  cert.m = m;
  for (const auto& [key, c] : quotients) {
    if (c != 0) cert.terms.push_back({key.second, key.first, c});
  }
  if (cert.expand() != f) throw InternalError("membership certificate does not reproduce the input");
  return {true, std::move(cert)};
}

NormalForm::NormalForm(unsigned m, DiffPolynomial poly) : m_(m), poly_(std::move(poly)) {
  for (const auto& [mono, c] : poly_.terms()) {
    if (!is_alpha(mono, m_)) throw InvalidInput("normal form contains non-alpha term " + to_string(mono));
  }
}

unsigned min_alpha_weight(unsigned m, unsigned d) {
  require_m(m);
  unsigned w = 0;
  for (unsigned j = 0; j < d; ++j) w += 2 * (j / (m - 1));
  return w;
}

NormalForm normal_form(const DiffPolynomial& f, unsigned m) {
  require_m(m);
  require_no_constant(f);
  DiffPolynomial out;
  for (const auto& [key, slice] : f.slices()) {
    // Reduction always ends on alpha-monomials, so a slice without any is 0.
    if (key.second < min_alpha_weight(m, key.first)) continue;
    out += reduce_slice(slice, m, nullptr);
  }
  return NormalForm(m, std::move(out));
}

NormalForm normal_form_via_embedding(const DiffPolynomial& f, unsigned m) {
  require_m(m);
  require_no_constant(f);
  DiffPolynomial out;
  for (const auto& [key, slice] : f.slices()) {
    auto [d, w] = key;
    auto emb = embedding_slice(m, d, w);
    GrassmannElement image = phi(m, slice);
    auto red = emb->echelon.reduce({image.terms().begin(), image.terms().end()});
    if (!red.remainder.empty()) {
      throw InternalError("phi(f) is outside the image of the alpha_m basis in slice (" +
                          std::to_string(d) + ", " + std::to_string(w) + ")");
    }
    for (const auto& [label, c] : red.combination) out.add_term(emb->basis[label], c);
  }
  return NormalForm(m, std::move(out));
}

std::size_t ideal_slice_rank(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  return slice_echelon(m, d, w)->echelon.rank();
}

std::size_t component_dimension(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  if (d == 0) return 0;
  auto ech = slice_echelon(m, d, w);
  return ech->column.size() - ech->echelon.rank();
}

std::size_t derivation_kernel_dimension(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  if (d == 0) throw InvalidParameter("derivation_kernel_dimension requires d >= 1");
  auto basis = enumerate_alpha(m, d, w);
  SparseEchelon<DiffMonomial, DescendingOrder> echelon;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    NormalForm image = normal_form(derive(DiffPolynomial(basis[idx])), m);
    echelon.insert({image.poly().terms().begin(), image.poly().terms().end()}, idx);
  }
  return basis.size() - echelon.rank();
}

std::optional<unsigned> nil_index_element(const DiffPolynomial& f, unsigned m, unsigned cap) {
  NormalForm base = normal_form(f, m);
  if (base.is_zero()) throw InvalidInput("nil index of an element that is 0 in D_m");
  DiffPolynomial acc = base.poly();
  for (unsigned n = 2; n <= cap; ++n) {
    acc = normal_form(acc * base.poly(), m).poly();
    if (acc.is_zero()) return n;
  }
  return std::nullopt;
}

}  // namespace dnil
