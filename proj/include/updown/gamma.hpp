#ifndef UPDOWN_GAMMA_HPP
#define UPDOWN_GAMMA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "updown/partition.hpp"
#include "updown/ratmat.hpp"
#include "updown/rational.hpp"

namespace updown {

// The polynomial algebras used throughout:
//   OddP   - generator i (0-indexed) is the odd power sum p_{2i+1},
//            graded with deg p_{2i+1} = 2i+1.  This is the algebra of
//            doubly symmetric functions.
//   EvenQ  - generator i is the moment coordinate q_{2i+2} on the simplex,
//            graded with deg q_{2k} = 2k+1.  This is the quotient algebra
//            obtained by sending p_1 to 1.
//   GCoord - generator i is the auxiliary coordinate g_{i+1} (the order-
//            (i+1) coefficient of the diagram generating function), graded
//            with deg g_k = 2k-1.
enum class VarKind { OddP, EvenQ, GCoord };

// Grading of generator i for the given variable kind.
std::int64_t generator_weight(VarKind kind, std::size_t i);

// Exponent vector, trailing zeros trimmed.
using Expo = std::vector<unsigned>;

// Sparse multivariate polynomial with exact rational coefficients over one
// of the three generator families.
struct SparsePoly {
  VarKind kind = VarKind::OddP;
  std::map<Expo, Rat> terms;  // only nonzero coefficients are stored

  static SparsePoly constant(VarKind kind, const Rat& c);
  static SparsePoly generator(VarKind kind, std::size_t i);

  bool is_zero() const { return terms.empty(); }
  // Maximum graded degree of a term; -1 for the zero polynomial.
  std::int64_t degree() const;
  // Sum of the terms of exact graded degree d.
  SparsePoly homogeneous_component(std::int64_t d) const;
  // Partial derivative with respect to generator i.
  SparsePoly derivative(std::size_t i) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rat& c) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  bool operator==(const SparsePoly& o) const = default;

  std::string to_string() const;  // for diagnostics: "2*v0^2 - 2*v0"
};

// Degree of a single exponent vector under the kind's grading.
std::int64_t expo_weight(VarKind kind, const Expo& e);

// Every monomial exponent vector of graded degree <= m, ordered by weight
// and then lexicographically.
std::vector<Expo> monomial_basis(VarKind kind, std::int64_t m);

using GammaPoly = SparsePoly;     // kind == OddP
using QuotientPoly = SparsePoly;  // kind == EvenQ

// Evaluate an OddP polynomial at a strict partition via power sums
// p_k(la) = sum_i la_i^k, or a GCoord polynomial via the numeric g
// coordinates of la.
Rat evaluate(const SparsePoly& f, const StrictPartition& la);

// Evaluate an EvenQ polynomial at a point of the closed simplex given by
// its coordinate list, via q_{2k}(x) = sum_i x_i^{2k+1}.
Rat evaluate_quotient(const QuotientPoly& f, const std::vector<Rat>& x);

// One-row Schur-Q polynomial q_r, the t^r coefficient of
// exp(2 sum_{k odd} p_k t^k / k), expressed in the odd power sums.
GammaPoly q_one_row(std::int64_t r);

// Schur-Q polynomial of a strict partition, via the two-row polynomials
//   Q_(r,s) = q_r q_s + 2 sum_{i=1..s} (-1)^i q_{r+i} q_{s-i}
// and, for three or more rows, the Pfaffian of the matrix of two-row
// polynomials (padded with a zero part when the number of rows is odd).
GammaPoly schur_q(const StrictPartition& la);

// Factorial (shifted) Schur-Q value Qstar_mu(la): the symmetrization
//   2^l / (n-l)! * sum over permutations w of n = l(la) variables of
//     prod_i y_{w(i)}^(falling mu_i) * prod_{i <= l < j} (y_wi + y_wj)/(y_wi - y_wj)
// evaluated at the parts of la (l = l(mu)); zero when l(mu) > l(la).
// This is the definitional route, used to anchor the symbolic one.
Rat schur_q_factorial_eval(const StrictPartition& mu, const StrictPartition& la);

// Qstar_mu as a polynomial in the odd power sums (top term Q_mu, degree
// |mu|), obtained by exact interpolation on the evaluation grid of weight
// |mu|.  Cached per mu.
GammaPoly schur_q_factorial_symbolic(const StrictPartition& mu);

// The interpolation grid of weight m: all strict partitions of weight <= m
// paired with all OddP monomials of graded degree <= m (the two sets have
// equal cardinality).  The Vandermonde-type matrix of monomial values is
// invertible; its inverse is precomputed.  Shared and immutable once built.
struct EvaluationGrid {
  std::int64_t max_weight = 0;
  std::vector<StrictPartition> points;
  std::vector<Expo> monomials;  // OddP exponent vectors, weight-then-lex order
  RatMat values;                // values(i, j) = monomial_j(point_i)
  RatMat inverse;
  // Qstar basis on the same grid: qstar_values(i, j) = Qstar_{points[j]}(points[i]).
  RatMat qstar_values;
  RatMat qstar_inverse;
};

const EvaluationGrid& evaluation_grid(std::int64_t m);

// The unique OddP polynomial of degree <= m taking the given values on the
// grid points of evaluation_grid(m) (values aligned with grid.points).
GammaPoly to_monomial_basis(const std::vector<Rat>& values, std::int64_t m);

// Expansion of f in the factorial basis: f = sum_mu coeff_mu Qstar_mu over
// |mu| <= m.  Requires deg f <= m (checked).
std::map<StrictPartition, Rat> expand_in_qstar(const GammaPoly& f,
                                               std::int64_t m);

// The order-k diagram coordinate g_k as an element of the algebra; its
// graded degree is exactly 2k-1, so any degree_bound >= 2k-1 (or -1 for
// the default) yields the same polynomial.
GammaPoly g_symbolic(std::int64_t k, std::int64_t degree_bound = -1);
GammaPoly boldp_symbolic(std::int64_t m, std::int64_t degree_bound = -1);

// Expansion of an OddP polynomial in the monomial basis of the g
// coordinates, valid whenever deg f <= M.  Returns a GCoord polynomial.
SparsePoly expand_in_g(const GammaPoly& f, std::int64_t M);

// Quotient map p_1 -> 1, p_{2i+1} -> q_{2i} (i >= 1).
QuotientPoly project(const GammaPoly& f);
// The canonical p_1-free section q_{2i} -> p_{2i+1} of the quotient map.
GammaPoly lift(const QuotientPoly& f);

}  // namespace updown

#endif  // UPDOWN_GAMMA_HPP
