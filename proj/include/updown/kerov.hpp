#ifndef UPDOWN_KEROV_HPP
#define UPDOWN_KEROV_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "updown/partition.hpp"
#include "updown/rational.hpp"

namespace updown {

// Dense univariate polynomial with exact rational coefficients, constant
// term first.  The zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
Rat poly_eval(const Poly& a, const Rat& v);
// Drop trailing zero coefficients.
void poly_trim(Poly& a);
int poly_degree(const Poly& a);  // -1 for the zero polynomial

// Truncated power series helpers (index = exponent, length = order + 1).
// All exact.  series_inv requires a unit constant term; series_log requires
// constant term 1 and returns log(a) with zero constant term.
Poly series_mul(const Poly& a, const Poly& b, std::size_t order);
Poly series_inv(const Poly& a, std::size_t order);
Poly series_log(const Poly& a, std::size_t order);

// Ratio of two polynomials in one variable.  No normalization is imposed;
// equality should be tested by cross-multiplication.
struct RationalFunctionOneVar {
  Poly num;
  Poly den;
};

bool rational_functions_equal(const RationalFunctionOneVar& f,
                              const RationalFunctionOneVar& g);

// The transition weights attached to the interlacing coordinates of la.
//
// With X = addable contents, X' = X minus {0}, Y = removable contents, the
// up rational function
//   R_up(v) = prod_{y in Y} (v - y(y+1)) / (v * prod_{x in X'} (v - x(x+1)))
// decomposes as sum_{x in X} theta_up_x / (v - x(x+1)), and
//   R_down(v) = 1 / (v R_up(v)) = 1 - sum_{y in Y} theta_down_y / (v - y(y+1)).
// theta_up sums to 1 over X; theta_down sums to 2|la| over Y.
std::map<std::int64_t, Rat> theta_up(const StrictPartition& la);
// Throws std::domain_error on the empty diagram (nothing is removable).
std::map<std::int64_t, Rat> theta_down(const StrictPartition& la);

// The generating function
//   Phi(v; la) = v * R_up(v)
//              = prod_{y in Y} (v - y(y+1)) / prod_{x in X'} (v - x(x+1)),
// built from the interlacing coordinates.
RationalFunctionOneVar phi(const StrictPartition& la);
// The same function built row by row:
//   Phi(v; la) = prod_i (v - la_i(la_i - 1)) / (v - la_i(la_i + 1)).
// Kept as an independent route; the two must agree.
RationalFunctionOneVar phi_from_parts(const StrictPartition& la);

// The three coordinate systems read off the expansion of Phi at v = infinity:
//   log Phi = sum_m (boldp_m / m) v^-m      (BoldP)
//   Phi     = 1 + sum_m g_m v^-m            (G)
//   1/Phi   = 1 - sum_m ghat_m v^-m         (GHat)
enum class CoordinateKind { BoldP, G, GHat };

struct CoordinateVector {
  CoordinateKind kind;
  std::vector<Rat> values;  // values[m-1] is the order-m coordinate
};

// First M coordinates of la, extracted by exact power-series division of
// Phi at v = infinity.
CoordinateVector coordinates(const StrictPartition& la, CoordinateKind kind,
                             int M);

// The same coordinates computed from the residue weights:
//   boldp_m = sum_X (x(x+1))^m - sum_Y (y(y+1))^m
//   g_m     = sum_X theta_up_x (x(x+1))^m
//   ghat_m  = sum_Y theta_down_y (y(y+1))^(m-1).
// Independent of the series route; the two must agree.
CoordinateVector coordinates_via_sums(const StrictPartition& la,
                                      CoordinateKind kind, int M);

}  // namespace updown

#endif  // UPDOWN_KEROV_HPP
