#pragma once

// Gröbner bases by degree-ascending F4: each step gathers the S-pairs of
// minimal degree, builds their Macaulay block with symbolic preprocessing and
// brings it to row echelon form over GF(q).

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "critpoints/critsys.hpp"
#include "critpoints/polynomial.hpp"
#include "critpoints/series.hpp"

namespace critpoints {

class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(int degree, int cap);
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NotZeroDimensional : public std::runtime_error {
 public:
  NotZeroDimensional() : std::runtime_error("ideal is not zero-dimensional") {}
};

struct GroebnerOptions {
  /// Abort with DegreeCapExceeded once a step would exceed this degree.
  std::optional<int> degree_cap;
};

/// Per-step statistics, one entry per Macaulay block.
struct StepStats {
  int degree = 0;
  std::size_t pairs = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t new_elements = 0;
};

/// Reduced, monic Gröbner basis sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> basis, int max_step_degree,
                std::vector<StepStats> steps = {});

  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return ring_.order; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  /// Highest degree of any Macaulay block reduced while computing the basis.
  int max_step_degree() const { return max_step_degree_; }
  const std::vector<StepStats>& steps() const { return steps_; }

  std::vector<Monomial> leading_monomials() const;
  /// True when the basis is {1}.
  bool is_unit() const;

 private:
  Ring ring_;
  std::vector<Polynomial> basis_;
  int max_step_degree_;
  std::vector<StepStats> steps_;
};

/// Reduced Gröbner basis of the ideal generated by `generators` for
/// `order`. Zero generators are ignored.
GroebnerBasis groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                             const GroebnerOptions& options = {});
GroebnerBasis groebner_basis(const PolySystem& system, MonomialOrder order,
                             const GroebnerOptions& options = {});

/// Repeated normal forms modulo one basis, sharing the interned monomials and
/// chosen reducers between calls.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& basis);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  /// Remainder of `f` (any order over the same field and variables) on
  /// division by the basis, returned in the basis order.
  Polynomial normal_form(const Polynomial& f);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Checks that every listed S-pair reduces to zero. With `max_pairs` set, a
/// deterministic spread of that many pairs is checked instead of all.
bool buchberger_check(const GroebnerBasis& basis, std::optional<std::size_t> max_pairs = {});

/// True when every variable has a pure power among the leading monomials
/// (the unit ideal included).
bool is_zero_dimensional(const GroebnerBasis& basis);

/// Standard monomials, increasing in the basis order. Throws
/// NotZeroDimensional.
std::vector<Monomial> staircase(const GroebnerBasis& basis);

/// Hilbert series of K[X] / <generators> for a monomial ideal, truncated.
PowerSeries hilbert_series_of_monomial_ideal(std::span<const Monomial> generators, int nvars,
                                             int truncation);

/// Hilbert series of K[X] / <LM(G)>; equals that of the ideal itself for a
/// degree order and homogeneous generators.
PowerSeries hilbert_series_from_lm(const GroebnerBasis& basis, int truncation);

}  // namespace critpoints
