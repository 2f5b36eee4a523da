#include "critpoints/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace critpoints {

Ring::Ring(PrimeField f, int n, MonomialOrder o) : field(f), nvars(n), order(o) {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument("variable count must be in [1, " + std::to_string(kMaxVariables) +
                                "]");
  }
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != ring.nvars) {
      throw std::invalid_argument("term has the wrong number of variables");
    }
  }
  const DescendingIn desc{ring.order};
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return desc(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = ring.field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.value == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

Polynomial Polynomial::constant(Ring ring, FieldElement c) {
  std::vector<Term> terms;
  if (c.value != 0) terms.push_back({Monomial(ring.nvars), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(Ring ring, int index) {
  Monomial m = Monomial::variable(ring.nvars, index);
  return Polynomial(std::move(ring), {{m, FieldElement{1}}});
}

int Polynomial::total_degree() const {
  if (terms_.empty()) throw std::domain_error("total degree of the zero polynomial");
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

Polynomial Polynomial::homogeneous_component(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return FieldElement{0};
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_.field.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = compare(a->monomial, b->monomial, ring_.order);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      FieldElement s = ring_.field.add(a->coeff, b->coeff);
      if (s.value != 0) out.push_back({a->monomial, s});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const auto& field = ring_.field;
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      auto& c = acc[s.monomial * t.monomial];
      c = field.add(c, field.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c.value != 0) out.push_back({m, c});
  }
  const DescendingIn desc{ring_.order};
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return desc(a.monomial, b.monomial); });
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(FieldElement c) const {
  if (c.value == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_.field.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, FieldElement c) const {
  if (c.value == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, ring_.field.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_.field.inv(leading_coefficient()));
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  return from_terms(ring_.with_order(order), terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(t.coeff.value);
    } else if (t.coeff.value == 1) {
      out += t.monomial.to_string();
    } else {
      out += std::to_string(t.coeff.value) + '*' + t.monomial.to_string();
    }
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, int index) {
  const Ring& ring = f.ring();
  if (index < 0 || index >= ring.nvars) throw std::invalid_argument("variable index out of range");
  const Monomial x = Monomial::variable(ring.nvars, index);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    int e = t.monomial[index];
    if (e == 0) continue;
    FieldElement c = ring.field.mul(t.coeff, ring.field.from_int(e));
    if (c.value != 0) out.push_back({t.monomial / x, c});
  }
  // Dividing every term by the same variable preserves the order among them.
  return Polynomial::from_terms(ring, std::move(out));
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  const Ring& ring = f.ring();
  if (static_cast<int>(point.size()) != ring.nvars) {
    throw std::invalid_argument("evaluation point has the wrong dimension");
  }
  const auto& field = ring.field;
  FieldElement sum{0};
  for (const auto& t : f.terms()) {
    FieldElement v = t.coeff;
    for (int i = 0; i < ring.nvars && v.value != 0; ++i) {
      if (t.monomial[i] != 0) v = field.mul(v, field.pow(point[i], t.monomial[i]));
    }
    sum = field.add(sum, v);
  }
  return sum;
}

Polynomial substitute(const Polynomial& f, std::span<const FieldElement> values,
                      std::span<const bool> fixed) {
  const Ring& ring = f.ring();
  if (static_cast<int>(values.size()) != ring.nvars ||
      static_cast<int>(fixed.size()) != ring.nvars) {
    throw std::invalid_argument("substitution vectors have the wrong dimension");
  }
  const auto& field = ring.field;
  std::vector<Term> out;
  out.reserve(f.size());
  std::vector<int> exps(ring.nvars);
  for (const auto& t : f.terms()) {
    FieldElement c = t.coeff;
    for (int i = 0; i < ring.nvars; ++i) {
      if (fixed[i]) {
        c = field.mul(c, field.pow(values[i], t.monomial[i]));
        exps[i] = 0;
      } else {
        exps[i] = t.monomial[i];
      }
    }
    out.push_back({Monomial(ring.nvars, exps), c});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace critpoints
