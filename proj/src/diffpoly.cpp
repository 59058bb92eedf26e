#include "dnil/diffpoly.hpp"

#include <algorithm>

#include "dnil/errors.hpp"

namespace dnil {

// ---------------------------------------------------------------------------
// DiffMonomial

DiffMonomial::DiffMonomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [order, exp] : factors) {
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == order) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(order, exp);
    }
  }
}

DiffMonomial DiffMonomial::variable(Order i, Exponent e) {
  return DiffMonomial(std::vector<Factor>{{i, e}});
}

DiffMonomial DiffMonomial::from_orders(std::span<const Order> orders) {
  std::vector<Factor> factors;
  factors.reserve(orders.size());
  for (Order k : orders) factors.emplace_back(k, 1);
  return DiffMonomial(std::move(factors));
}

Exponent DiffMonomial::exponent(Order i) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{i, 0});
  return it != factors_.end() && it->first == i ? it->second : 0;
}

unsigned DiffMonomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned DiffMonomial::weight() const noexcept {
  unsigned w = 0;
  for (const auto& f : factors_) w += f.first * f.second;
  return w;
}

std::vector<Order> DiffMonomial::orders() const {
  std::vector<Order> out;
  for (const auto& [order, exp] : factors_) out.insert(out.end(), exp, order);
  return out;
}

bool DiffMonomial::divisible_by(const DiffMonomial& divisor) const noexcept {
  auto it = factors_.begin();
  for (const auto& [order, exp] : divisor.factors_) {
    while (it != factors_.end() && it->first < order) ++it;
    if (it == factors_.end() || it->first != order || it->second < exp) return false;
  }
  return true;
}

DiffMonomial DiffMonomial::quotient(const DiffMonomial& divisor) const {
  if (!divisible_by(divisor)) throw InvalidInput("monomial quotient: not divisible");
  DiffMonomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [order, exp] : factors_) {
    Exponent e = exp;
    if (it != divisor.factors_.end() && it->first == order) {
      e -= it->second;
      ++it;
    }
    if (e > 0) out.factors_.emplace_back(order, e);
  }
  return out;
}

DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b) {
  DiffMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

OrderComparison compare_order(const DiffMonomial& p, const DiffMonomial& q) noexcept {
  const auto& a = p.factors();
  const auto& b = q.factors();
  auto i = a.begin();
  auto j = b.begin();
  // Walk both sparse vectors; the first index where exponents differ decides.
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      // p has a positive exponent where q has 0: q is larger.
      return OrderComparison::q_larger;
    }
    if (i == a.end() || j->first < i->first) return OrderComparison::p_larger;
    if (i->second != j->second) {
      return i->second < j->second ? OrderComparison::p_larger : OrderComparison::q_larger;
    }
    ++i;
    ++j;
  }
  return OrderComparison::equal;
}

bool is_alpha(const DiffMonomial& monomial, unsigned m) {
  if (m < 2) throw InvalidParameter("is_alpha: m must be at least 2");
  const auto& f = monomial.factors();
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    Exponent next = idx + 1 < f.size() && f[idx + 1].first == f[idx].first + 1 ? f[idx + 1].second : 0;
    if (f[idx].second + next >= m) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// DiffPolynomial

DiffPolynomial::DiffPolynomial(const DiffMonomial& monomial, const Rational& coefficient) {
  add_term(monomial, coefficient);
}

DiffPolynomial DiffPolynomial::constant(const Rational& c) { return DiffPolynomial(DiffMonomial{}, c); }

DiffPolynomial DiffPolynomial::variable(Order i, Exponent e) {
  return DiffPolynomial(DiffMonomial::variable(i, e));
}

Rational DiffPolynomial::coefficient(const DiffMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPolynomial::add_term(const DiffMonomial& monomial, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned DiffPolynomial::max_weight() const noexcept {
  unsigned w = 0;
  for (const auto& [mono, c] : terms_) w = std::max(w, mono.weight());
  return w;
}

unsigned DiffPolynomial::max_order() const noexcept {
  unsigned o = 0;
  for (const auto& [mono, c] : terms_) o = std::max<unsigned>(o, mono.max_order());
  return o;
}

std::map<std::pair<unsigned, unsigned>, DiffPolynomial> DiffPolynomial::slices() const {
  std::map<std::pair<unsigned, unsigned>, DiffPolynomial> out;
  for (const auto& [mono, c] : terms_) {
    out[{mono.degree(), mono.weight()}].terms_.emplace(mono, c);
  }
  return out;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  DiffPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  check_term_limit(out.size(), "polynomial product");
  return out;
}

DiffPolynomial multiply(const DiffPolynomial& f, const DiffPolynomial& g) { return f * g; }

DiffPolynomial derive(const DiffPolynomial& f) {
  DiffPolynomial out;
  for (const auto& [mono, c] : f.terms()) {
    for (const auto& [order, exp] : mono.factors()) {
      // Replace one x_order by x_{order+1}, with multiplicity exp.
      std::vector<DiffMonomial::Factor> factors = mono.factors();
      for (auto& fac : factors) {
        if (fac.first == order) fac.second -= 1;
      }
      factors.emplace_back(order + 1, 1);
      out.add_term(DiffMonomial(std::move(factors)), c * exp);
    }
  }
  return out;
}

DiffPolynomial derive(const DiffPolynomial& f, unsigned k) {
  DiffPolynomial out = f;
  for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = derive(out);
  return out;
}

DiffMonomial leading_monomial(const DiffPolynomial& f) {
  if (f.is_zero()) throw EmptyInput("leading_monomial of the zero polynomial");
  const DiffMonomial* best = nullptr;
  for (const auto& [mono, c] : f.terms()) {
    if (best == nullptr || compare_order(mono, *best) == OrderComparison::p_larger) best = &mono;
  }
  return *best;
}

namespace {

// Nondecreasing order sequences of length `remaining` with entries >= lo and
// the given sum.
void enumerate_rec(unsigned remaining, unsigned sum, Order lo, std::vector<Order>& prefix,
                   std::vector<DiffMonomial>& out) {
  if (remaining == 0) {
    if (sum == 0) out.push_back(DiffMonomial::from_orders(prefix));
    return;
  }
  for (Order k = lo; k * remaining <= sum; ++k) {
    prefix.push_back(k);
    enumerate_rec(remaining - 1, sum - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DiffMonomial> enumerate_monomials(unsigned d, unsigned w) {
  std::vector<DiffMonomial> out;
  std::vector<Order> prefix;
  enumerate_rec(d, w, 0, prefix, out);
  std::sort(out.begin(), out.end(), DescendingOrder{});
  return out;
}

std::vector<DiffMonomial> enumerate_alpha(unsigned m, unsigned d, unsigned w) {
  if (m < 2) throw InvalidParameter("enumerate_alpha: m must be at least 2");
  std::vector<DiffMonomial> out;
  for (auto& mono : enumerate_monomials(d, w)) {
    if (is_alpha(mono, m)) out.push_back(std::move(mono));
  }
  return out;
}

std::string to_string(const DiffMonomial& monomial) {
  if (monomial.is_unit()) return "1";
  std::string out;
  for (const auto& [order, exp] : monomial.factors()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(order);
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

std::string to_string(const DiffPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<DiffMonomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return DescendingOrder{}(a.first, b.first); });
  std::string out;
  for (const auto& [mono, c] : terms) {
    Rational magnitude = abs(c);
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(magnitude);
    }
    if (!mono.is_unit()) out += '*' + to_string(mono);
  }
  return out;
}

}  // namespace dnil
