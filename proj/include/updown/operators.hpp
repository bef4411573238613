#ifndef UPDOWN_OPERATORS_HPP
#define UPDOWN_OPERATORS_HPP

#include <cstdint>
#include <map>

#include "updown/gamma.hpp"
#include "updown/partition.hpp"
#include "updown/rational.hpp"

namespace updown {

// The down and up derivations on the algebra of doubly symmetric
// functions, defined through the factorial basis:
//   D Qstar_mu = (p_1 - |mu|) Qstar_mu
//   U Qstar_mu = (p_1 + |mu| + alpha/2) Qstar_mu
//               + sum over removable y of (y(y+1) + alpha) Qstar_{mu - box(y)}.
// The argument is expanded in the factorial basis on the grid of its own
// degree, mapped term by term, and reassembled.
GammaPoly D_op(const GammaPoly& f);
GammaPoly U_op(const GammaPoly& f, const Rat& alpha);

// Action of the centered one-step operator on a factorial basis element:
// (T_n - 1)(Qstar_mu restricted to weight n) equals
//   1/((n+1)(n + alpha/2)) * [ -|mu| (|mu| + alpha/2 - 1) Qstar_mu
//     + (n - |mu| + 1) sum over removable y of (y(y+1) + alpha) Qstar_{mu - box(y)} ],
// returned as the map from basis labels to coefficients.
std::map<StrictPartition, Rat> tn_on_qstar(const StrictPartition& mu,
                                           std::int64_t n, const Rat& alpha);

// The explicit second-order operator on the algebra generated by the odd
// power sums:
//   B = sum_{i,j>=2} (2i-1)(2j-1) (p_1 p_{2i+2j-3} - p_{2i-1} p_{2j-1})
//         d^2/dp_{2i-1} dp_{2j-1}
//     + 2 sum_{i,j>=1} (2i+2j-1) p_1 p_{2i-1} p_{2j-1} d/dp_{2i+2j-1}
//     - sum_{i>=2} (2i-1)(2i-2+alpha/2) p_{2i-1} d/dp_{2i-1}.
// It contains no d/dp_1 and commutes with multiplication by p_1.
GammaPoly B_op(const GammaPoly& f, const Rat& alpha);

// The image of B in the quotient algebra (p_1 -> 1, p_{2i+1} -> q_{2i}),
// with the convention q_0 = 1:
//   A = sum_{i,j>=1} (2i+1)(2j+1) (q_{2i+2j} - q_{2i} q_{2j}) d^2/dq_{2i} dq_{2j}
//     + 2 sum_{i,j>=0} (2i+2j+3) q_{2i} q_{2j} d/dq_{2i+2j+2}
//     - sum_{i>=1} (2i+1)(2i+alpha/2) q_{2i} d/dq_{2i}.
QuotientPoly A_op(const QuotientPoly& f, const Rat& alpha);

// Predicted action of A on a projected Schur-Q polynomial:
//   A Qo_mu = -|mu| (|mu| + alpha/2 - 1) Qo_mu
//           + sum over removable y of (y(y+1) + alpha) Qo_{mu - box(y)},
// where Qo_nu is the projection of the Schur-Q polynomial of nu.
QuotientPoly A_on_Q(const StrictPartition& mu, const Rat& alpha);

// A vector in the function space spanned by the indicator basis
// eps_lambda over strict partitions of weight <= cutoff.
struct TruncatedFun0 {
  std::int64_t cutoff = 0;
  Rat alpha;
  std::map<StrictPartition, Rat> coeffs;  // only nonzero entries
};

// The raising / lowering / grading operators of the sl(2) triple acting on
// that space:
//   E eps_la = sum over addable x of 2^(-[x=0]) (x(x+1) + alpha) eps_{la + box(x)}
//   F eps_la = - sum over removable y of eps_{la - box(y)}
//   H eps_la = (alpha/2 + 2 |la|) eps_la,
// satisfying [E,H] = -2E, [F,H] = 2F, [E,F] = H.  Applying E to a vector
// supported at the cutoff weight throws a std::domain_error naming the
// overflowing weight.
enum class SL2 { E, F, H };
TruncatedFun0 kerov_sl2(SL2 which, const TruncatedFun0& v);

}  // namespace updown

#endif  // UPDOWN_OPERATORS_HPP
