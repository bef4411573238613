#ifndef UPDOWN_VERIFY_HPP
#define UPDOWN_VERIFY_HPP

#include <cstdint>

#include "updown/rational.hpp"
#include "updown/report.hpp"

namespace updown {

// Tolerance pinned for every floating-point spectrum comparison.
inline constexpr double kSpectrumTolerance = 1e-9;

// Coherence of consecutive levels of the measure family, n = 0..max_weight-1.
Report coherence_suite(std::int64_t max_weight, const Alpha& alpha);

// Interlacing-coordinate identities on every diagram of weight <= max_weight:
// pattern validity and reconstruction, the weight identity, the residue
// weights against the transition probabilities, the two product forms of
// the generating function, series versus residue coordinate extraction,
// the coordinate recurrences, and the one-box ratio identities.
Report kerov_suite(std::int64_t max_weight);

// Relative dimensions through the factorial evaluation versus weighted
// path counts, over all pairs of weight <= max_weight.
Report ivanov_suite(std::int64_t max_weight);

// Action of the centered one-step operator on the factorial basis versus
// the exact transition matrices, |mu| <= mu_bound, |mu| <= n <= n_bound.
Report qstar_transition_suite(std::int64_t mu_bound, std::int64_t n_bound,
                              const Rat& alpha);

// Graded leading terms (orders +1, 0, -1) of the down and up derivations
// in the diagram-coordinate basis, on monomials of degree <= max_deg.
Report gbasis_suite(const Rat& alpha, std::int64_t max_deg);

// The compensated up-down composition against the explicit second-order
// operator: same leading graded term on monomials of degree <= max_deg,
// exact annihilation of 1 and p_1, and commutation with multiplication
// by p_1.
Report compensation_suite(const Rat& alpha, std::int64_t max_deg);

// The quotient-algebra generator: agreement with the projected
// second-order operator, predicted action on projected Schur-Q
// polynomials (|mu| <= mu_bound), and the eigen-behavior of the leading
// term on monomials of degree <= deg_bound.
Report limit_generator_suite(const Rat& alpha, std::int64_t mu_bound,
                             std::int64_t deg_bound);

// Commutation relations of the raising/lowering/grading triple on the
// indicator basis up to max_weight.
Report sl2_suite(const Rat& alpha, std::int64_t max_weight);

// Spectra of the one-step chains for n = 1..n_bound: closed-form
// eigenvalues with strict-partition-difference multiplicities, checked by
// the exact characteristic polynomial (small levels) and by 256-bit
// Jacobi within kSpectrumTolerance, plus exact stationarity and
// reversibility.
Report spectrum_suite(std::int64_t n_bound, const Alpha& alpha);

}  // namespace updown

#endif  // UPDOWN_VERIFY_HPP
