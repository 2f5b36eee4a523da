#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "critpoints/gf.hpp"
#include "critpoints/monomial.hpp"

namespace critpoints {

/// Coefficient field, variable count and monomial order shared by a family of
/// polynomials.
struct Ring {
  PrimeField field;
  int nvars = 0;
  MonomialOrder order = MonomialOrder::kGrevlex;

  Ring(PrimeField f, int n, MonomialOrder o = MonomialOrder::kGrevlex);

  Ring with_order(MonomialOrder o) const { return Ring(field, nvars, o); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.nvars == b.nvars && a.order == b.order;
  }
};

struct Term {
  Monomial monomial;
  FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(q). Terms are kept strictly decreasing in the
/// ring's order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, FieldElement c);
  /// The variable x_{index+1}.
  static Polynomial variable(Ring ring, int index);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Precondition for these two: !is_zero().
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  FieldElement leading_coefficient() const { return terms_.front().coeff; }

  /// Throws std::domain_error on the zero polynomial.
  int total_degree() const;
  /// True when every term has the same degree (the zero polynomial counts).
  bool is_homogeneous() const;
  /// Sum of the terms of degree exactly `d`.
  Polynomial homogeneous_component(int d) const;
  /// Coefficient of `m`, zero when absent.
  FieldElement coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(FieldElement c) const;
  Polynomial mul_term(const Monomial& m, FieldElement c) const;
  /// Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  /// Same polynomial re-sorted for another order.
  Polynomial with_order(MonomialOrder order) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  void require_same_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Formal derivative with respect to x_{index+1}.
Polynomial partial_derivative(const Polynomial& f, int index);

/// f(point); throws std::invalid_argument when point.size() != nvars.
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);

/// Substitutes values for a subset of variables. `values[i]` replaces x_{i+1}
/// when `fixed[i]` is set; the result lives in the same ring.
Polynomial substitute(const Polynomial& f, std::span<const FieldElement> values,
                      std::span<const bool> fixed);

}  // namespace critpoints
