#include "dnil/diffop.hpp"

#include <algorithm>

#include "dnil/detail/term_parser.hpp"
#include "dnil/errors.hpp"
#include "dnil/ideal.hpp"

namespace dnil {

namespace {

constexpr unsigned kM = 2;

DiffPolynomial reduce(const DiffPolynomial& f) { return normal_form(f, kM).poly(); }

}  // namespace

// ---------------------------------------------------------------------------
// OperatorCoefficient

OperatorCoefficient::OperatorCoefficient(const Rational& scalar, const DiffPolynomial& poly)
    : scalar_(scalar), poly_(reduce(poly)) {}

OperatorCoefficient& OperatorCoefficient::operator+=(const OperatorCoefficient& other) {
  scalar_ += other.scalar_;
  poly_ += other.poly_;
  return *this;
}

OperatorCoefficient& OperatorCoefficient::operator-=(const OperatorCoefficient& other) {
  scalar_ -= other.scalar_;
  poly_ -= other.poly_;
  return *this;
}

OperatorCoefficient& OperatorCoefficient::operator*=(const Rational& c) {
  scalar_ *= c;
  poly_ *= c;
  return *this;
}

OperatorCoefficient operator*(const OperatorCoefficient& a, const OperatorCoefficient& b) {
  // (s + p)(t + q) = st + (s q + t p) + p q; only p q needs reduction.
  DiffPolynomial poly = a.poly_ * b.scalar_ + b.poly_ * a.scalar_;
  if (!a.poly_.is_zero() && !b.poly_.is_zero()) poly += reduce(a.poly_ * b.poly_);
  return OperatorCoefficient(OperatorCoefficient::Reduced{}, a.scalar_ * b.scalar_, std::move(poly));
}

OperatorCoefficient derive(const OperatorCoefficient& c) {
  return OperatorCoefficient(OperatorCoefficient::Reduced{}, 0, reduce(derive(c.poly_)));
}

// ---------------------------------------------------------------------------
// DiffOperator

DiffOperator DiffOperator::identity() { return term(OperatorCoefficient::scalar_only(1), 0); }

DiffOperator DiffOperator::term(const OperatorCoefficient& coefficient, unsigned order) {
  DiffOperator out;
  out.add_term(order, coefficient);
  return out;
}

DiffOperator DiffOperator::element(const DiffPolynomial& poly, unsigned order) {
  return term(OperatorCoefficient::element(poly), order);
}

unsigned DiffOperator::degree() const {
  if (coefficients_.empty()) throw EmptyInput("degree of the zero operator");
  return coefficients_.rbegin()->first;
}

OperatorCoefficient DiffOperator::coefficient(unsigned order) const {
  auto it = coefficients_.find(order);
  return it == coefficients_.end() ? OperatorCoefficient{} : it->second;
}

bool DiffOperator::in_d2() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const auto& kv) { return kv.second.scalar() == 0; });
}

unsigned DiffOperator::max_weight() const noexcept {
  unsigned w = 0;
  for (const auto& [order, c] : coefficients_) w = std::max(w, c.weight());
  return w;
}

void DiffOperator::add_term(unsigned order, const OperatorCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(order, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  for (const auto& [order, c] : other.coefficients_) add_term(order, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) {
  for (const auto& [order, c] : other.coefficients_) add_term(order, OperatorCoefficient{} - c);
  return *this;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  // a_p D^p * b_q D^q = sum_j binom(p, j) a_p b_q^{(j)} D^{p - j + q}
  unsigned max_p = a.is_zero() ? 0 : a.degree();
  DiffOperator out;
  for (const auto& [q, bq] : b.coefficients_) {
    std::vector<OperatorCoefficient> derivatives{bq};
    for (unsigned j = 1; j <= max_p; ++j) derivatives.push_back(derive(derivatives.back()));
    for (const auto& [p, ap] : a.coefficients_) {
      for (unsigned j = 0; j <= p; ++j) {
        if (derivatives[j].is_zero()) break;
        OperatorCoefficient prod = ap * derivatives[j];
        prod *= Rational(binomial(p, j));
        out.add_term(p - j + q, prod);
      }
    }
  }
  return out;
}

DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b) { return a * b; }

DiffOperator op_power(const DiffOperator& a, unsigned n) {
  DiffOperator out = DiffOperator::identity();
  for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = out * a;
  return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

OperatorCoefficient leading_coefficient(const DiffOperator& a) {
  if (a.is_zero()) throw EmptyInput("leading coefficient of the zero operator");
  return a.coefficients().rbegin()->second;
}

unsigned nil_bound(const DiffOperator& a) {
  if (a.is_zero()) throw InvalidInput("nil_bound of the zero operator");
  if (!a.in_d2()) throw InvalidInput("operator has a nonzero scalar part and is not nilpotent");
  return a.max_weight() + a.degree() + 2;
}

unsigned nil_index_operator(const DiffOperator& a) {
  unsigned bound = nil_bound(a);
  DiffOperator acc = a;
  for (unsigned n = 2; n <= bound; ++n) {
    acc = acc * a;
    if (acc.is_zero()) return n;
  }
  throw InternalError("operator power did not vanish within nil_bound = " + std::to_string(bound));
}

// ---------------------------------------------------------------------------
// Primality witnesses

std::optional<CorollaryWitness> witness_corollary(const DiffPolynomial& a, const DiffPolynomial& b,
                                                  unsigned cap, unsigned min_k) {
  DiffPolynomial ra = reduce(a);
  DiffPolynomial rb = reduce(b);
  if (ra.is_zero() || rb.is_zero()) throw InvalidInput("witness_corollary needs a, b nonzero in D_2");
  DiffPolynomial bk = derive(rb, min_k);
  for (unsigned k = min_k; k <= cap; ++k) {
    DiffPolynomial prod = reduce(bk * ra);
    if (!prod.is_zero()) return CorollaryWitness{k, std::move(prod)};
    bk = derive(bk);
  }
  return std::nullopt;
}

namespace {

DiffOperator theorem2_product(const DiffOperator& a, const DiffOperator& b, unsigned j, unsigned k) {
  DiffOperator c_partial = DiffOperator::element(DiffPolynomial::variable(j), 1);
  return commutator(op_power(c_partial, k), a) * b;
}

void require_nonzero_d2(const DiffOperator& op, const char* name) {
  if (op.is_zero()) throw InvalidInput(std::string(name) + " must be a nonzero operator");
  if (!op.in_d2()) throw InvalidInput(std::string(name) + " must lie in D_2[D] (no scalar parts)");
}

}  // namespace

std::variant<Theorem2Witness, WitnessExhausted> witness_theorem2(const DiffOperator& a, const DiffOperator& b,
                                                                  unsigned k_cap, unsigned c_cap) {
  require_nonzero_d2(a, "a");
  require_nonzero_d2(b, "b");
  const DiffPolynomial a_lead = leading_coefficient(a).poly();
  const DiffPolynomial b_lead = leading_coefficient(b).poly();
  WitnessExhausted exhausted{k_cap, c_cap, {}};
  // k = 0 makes the commutator vanish identically, so the scan starts at 1.
  unsigned next_k = 1;
  while (next_k <= k_cap) {
    auto cor = witness_corollary(b_lead, a_lead, k_cap, next_k);
    if (!cor) break;
    unsigned k = cor->k;
    exhausted.ks_tried.push_back(k);
    for (unsigned j = 0; j <= c_cap; ++j) {
      DiffOperator prod = theorem2_product(a, b, j, k);
      if (!prod.is_zero()) return Theorem2Witness{DiffPolynomial::variable(j), j, k, std::move(prod)};
    }
    next_k = k + 1;
  }
  return exhausted;
}

bool verify_witness(const DiffPolynomial& a, const DiffPolynomial& b, const CorollaryWitness& w) {
  DiffPolynomial prod = reduce(derive(b, w.k) * a);
  return !prod.is_zero() && prod == w.product;
}

bool verify_witness(const DiffOperator& a, const DiffOperator& b, const Theorem2Witness& w) {
  DiffOperator prod = theorem2_product(a, b, w.j, w.k);
  return !prod.is_zero() && prod == w.product;
}

// ---------------------------------------------------------------------------
// Text form

DiffOperator parse_operator(std::string_view text) {
  std::map<unsigned, std::pair<Rational, DiffPolynomial>> parts;
  for (const auto& t : detail::parse_terms(text, true)) {
    auto& [scalar, poly] = parts[t.partial_power];
    if (t.monomial.is_unit()) {
      scalar += t.coefficient;
    } else {
      poly.add_term(t.monomial, t.coefficient);
    }
  }
  DiffOperator out;
  for (const auto& [order, part] : parts) out.add_term(order, OperatorCoefficient(part.first, part.second));
  return out;
}

namespace {

void append_signed(std::string& out, const Rational& c, const std::string& tail) {
  if (out.empty()) {
    out += to_string(c);
  } else {
    out += c < 0 ? " - " : " + ";
    out += to_string(Rational(abs(c)));
  }
  if (!tail.empty()) out += "*" + tail;
}

void append_coefficient(std::string& out, const OperatorCoefficient& c, const std::string& partial) {
  std::vector<std::pair<DiffMonomial, Rational>> terms(c.poly().terms().begin(), c.poly().terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return DescendingOrder{}(x.first, y.first); });
  for (const auto& [mono, coeff] : terms) {
    std::string tail = to_string(mono);
    if (!partial.empty()) tail += "*" + partial;
    append_signed(out, coeff, tail);
  }
  if (c.scalar() != 0) append_signed(out, c.scalar(), partial);
}

std::string partial_text(unsigned order) {
  if (order == 0) return "";
  return order == 1 ? "D" : "D^" + std::to_string(order);
}

}  // namespace

std::string to_string(const OperatorCoefficient& c) {
  std::string out;
  append_coefficient(out, c, "");
  return out.empty() ? "0" : out;
}

std::string to_string(const DiffOperator& a) {
  std::string out;
  for (auto it = a.coefficients().rbegin(); it != a.coefficients().rend(); ++it) {
    append_coefficient(out, it->second, partial_text(it->first));
  }
  return out.empty() ? "0" : out;
}

}  // namespace dnil
