#include "dnil/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "dnil/errors.hpp"

namespace dnil {

// ---------------------------------------------------------------------------
// GrassmannMonomial

std::optional<std::pair<GrassmannMonomial, int>> GrassmannMonomial::canonicalize(
    std::vector<BasisVector> vectors) {
  // Insertion sort; the number of swaps is the inversion count.
  int sign = 1;
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    for (std::size_t j = i; j > 0 && vectors[j] < vectors[j - 1]; --j) {
      std::swap(vectors[j], vectors[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i] == vectors[i - 1]) return std::nullopt;
  }
  GrassmannMonomial out;
  out.vectors_ = std::move(vectors);
  return std::make_pair(std::move(out), sign);
}

unsigned GrassmannMonomial::weight() const noexcept {
  unsigned w = 0;
  for (const auto& v : vectors_) w += v.order;
  return w;
}

std::optional<std::pair<GrassmannMonomial, int>> wedge(const GrassmannMonomial& a,
                                                        const GrassmannMonomial& b) {
  const auto& x = a.vectors();
  const auto& y = b.vectors();
  std::vector<BasisVector> merged;
  merged.reserve(x.size() + y.size());
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return std::nullopt;
    if (x[i] < y[j]) {
      merged.push_back(x[i++]);
    } else {
      // y[j] jumps over every remaining element of x.
      inversions += x.size() - i;
      merged.push_back(y[j++]);
    }
  }
  merged.insert(merged.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  merged.insert(merged.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
  auto out = GrassmannMonomial::canonicalize(std::move(merged));  // already sorted, no swaps
  out->second = inversions % 2 == 0 ? 1 : -1;
  return out;
}

// ---------------------------------------------------------------------------
// GrassmannElement

GrassmannElement::GrassmannElement(unsigned m) : m_(m) {
  if (m < 2) throw InvalidParameter("Lambda(V_m) requires m >= 2");
}

void GrassmannElement::check_vector(const BasisVector& v) const {
  if (v.level + 2 > m_) {
    throw InvalidParameter("basis vector level " + std::to_string(v.level) + " exceeds m - 2 = " +
                           std::to_string(m_ - 2));
  }
}

GrassmannElement GrassmannElement::generator(unsigned m, const BasisVector& v) {
  return product(m, {v});
}

GrassmannElement GrassmannElement::product(unsigned m, const std::vector<BasisVector>& vectors,
                                           const Rational& coefficient) {
  GrassmannElement out(m);
  if (vectors.empty()) throw InvalidInput("Lambda(V_m) has no unit: empty wedge product");
  for (const auto& v : vectors) out.check_vector(v);
  if (auto canon = GrassmannMonomial::canonicalize(vectors)) {
    out.add_term(canon->first, coefficient * canon->second);
  }
  return out;
}

Rational GrassmannElement::coefficient_of(const GrassmannMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GrassmannElement::add_term(const GrassmannMonomial& monomial, const Rational& c) {
  if (c == 0) return;
  if (monomial.empty()) throw InvalidInput("Lambda(V_m) has no unit: empty monomial");
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  if (other.m_ != m_) throw InvalidParameter("Grassmann elements over different m");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  if (other.m_ != m_) throw InvalidParameter("Grassmann elements over different m");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

GrassmannElement wedge(const GrassmannElement& u, const GrassmannElement& v) {
  if (u.m() != v.m()) throw InvalidParameter("wedge of elements over different m");
  GrassmannElement out(u.m());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (auto prod = wedge(a, b)) {
        out.add_term(prod->first, prod->second > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
      }
    }
  }
  check_term_limit(out.size(), "wedge product");
  return out;
}

GrassmannElement derive(const GrassmannElement& u) {
  GrassmannElement out(u.m());
  for (const auto& [mono, c] : u.terms()) {
    for (std::size_t j = 0; j < mono.degree(); ++j) {
      std::vector<BasisVector> vectors = mono.vectors();
      vectors[j].order += 1;
      if (auto canon = GrassmannMonomial::canonicalize(std::move(vectors))) {
        out.add_term(canon->first, c * canon->second);
      }
    }
  }
  return out;
}

namespace {

// Wedge powers over at most 64 distinct generators, with monomials as bit
// masks indexed by the canonical generator order.
// `steps` reports how many factors the returned product has; it is smaller
// than n only when the product vanished early.
GrassmannElement power_bitmask(const GrassmannElement& u, unsigned n,
                               const std::vector<BasisVector>& alphabet, unsigned& steps) {
  using Mask = std::uint64_t;
  using Poly = std::unordered_map<Mask, Rational>;

  auto to_mask = [&](const GrassmannMonomial& mono) {
    Mask mask = 0;
    for (const auto& v : mono.vectors()) {
      auto idx = std::lower_bound(alphabet.begin(), alphabet.end(), v) - alphabet.begin();
      mask |= Mask{1} << idx;
    }
    return mask;
  };

  std::vector<std::pair<Mask, Rational>> base;
  for (const auto& [mono, c] : u.terms()) base.emplace_back(to_mask(mono), c);

  Poly acc;
  for (const auto& [mask, c] : base) acc[mask] += c;
  steps = 1;
  for (unsigned step = 1; step < n && !acc.empty(); ++step) {
    Poly next;
    next.reserve(acc.size() * 2);
    for (const auto& [a, ca] : acc) {
      for (const auto& [b, cb] : base) {
        if ((a & b) != 0) continue;
        // Inversions: pairs (x in a, y in b) with x > y.
        unsigned inversions = 0;
        for (Mask rest = b; rest != 0; rest &= rest - 1) {
          unsigned y = static_cast<unsigned>(std::countr_zero(rest));
          Mask above = y + 1 >= 64 ? Mask{0} : (~Mask{0} << (y + 1));
          inversions += static_cast<unsigned>(std::popcount(a & above));
        }
        Rational term = ca * cb;
        if (inversions % 2 != 0) term = -term;
        auto [it, inserted] = next.try_emplace(a | b, std::move(term));
        if (!inserted) it->second += term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    check_term_limit(next.size(), "wedge power");
    acc = std::move(next);
    steps = step + 1;
  }

  GrassmannElement out(u.m());
  for (const auto& [mask, c] : acc) {
    std::vector<BasisVector> vectors;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      vectors.push_back(alphabet[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    auto canon = GrassmannMonomial::canonicalize(std::move(vectors));
    out.add_term(canon->first, c);
  }
  return out;
}

std::vector<BasisVector> alphabet_of(const GrassmannElement& u) {
  std::vector<BasisVector> alphabet;
  for (const auto& [mono, c] : u.terms()) {
    alphabet.insert(alphabet.end(), mono.vectors().begin(), mono.vectors().end());
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

GrassmannElement power_counted(const GrassmannElement& u, unsigned n, unsigned& steps) {
  auto alphabet = alphabet_of(u);
  if (alphabet.size() <= 64) return power_bitmask(u, n, alphabet, steps);
  GrassmannElement acc = u;
  steps = 1;
  for (unsigned step = 1; step < n && !acc.is_zero(); ++step) {
    acc = wedge(acc, u);
    steps = step + 1;
  }
  return acc;
}

}  // namespace

GrassmannElement power(const GrassmannElement& u, unsigned n) {
  if (n == 0) throw InvalidParameter("power: exponent must be at least 1 (no unit element)");
  unsigned steps = 0;
  return power_counted(u, n, steps);
}

std::optional<unsigned> nil_index(const GrassmannElement& u, unsigned cap) {
  if (u.is_zero()) throw InvalidInput("nil index of the zero element");
  if (cap == 0) return std::nullopt;
  unsigned steps = 0;
  GrassmannElement p = power_counted(u, cap, steps);
  if (p.is_zero()) return steps;
  return std::nullopt;
}

bool is_even(const GrassmannElement& u) {
  return std::all_of(u.terms().begin(), u.terms().end(),
                     [](const auto& kv) { return kv.first.degree() % 2 == 0; });
}

unsigned weight_lower_bound(unsigned degree, unsigned m) {
  if (m != 2) throw Unsupported("weight_lower_bound is only established for m = 2");
  unsigned d = degree / 2;
  return d == 0 ? 0 : d * (d - 1);
}

std::string to_string(const BasisVector& v) {
  return std::string(v.kind == Kind::xi ? "xi" : "eta") + "[" + std::to_string(v.level) + "," +
         std::to_string(v.order) + "]";
}

std::string to_string(const GrassmannMonomial& monomial) {
  std::string out;
  for (const auto& v : monomial.vectors()) {
    if (!out.empty()) out += "∧";
    out += to_string(v);
  }
  return out;
}

std::string to_string(const GrassmannElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : u.terms()) {
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += c < 0 ? " - " : " + ";
      out += to_string(Rational(abs(c)));
    }
    out += "*" + to_string(mono);
  }
  return out;
}

}  // namespace dnil
