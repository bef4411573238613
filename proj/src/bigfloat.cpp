#include "updown/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace updown {

std::string Float256::to_string(int digits) const {
  char* s = nullptr;
  mpfr_exp_t e;
  s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_,
                   MPFR_RNDN);
  if (!s) return "nan";
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "");
  out += "0." + d + "e" + std::to_string(static_cast<long>(e));
  return out;
}

std::vector<Float256> jacobi_eigenvalues(std::vector<std::vector<Float256>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
  if (n == 0) return {};
  if (n == 1) return {a[0][0]};

  // Stop when every off-diagonal entry is below 2^-200 times the scale.
  Float256 scale(0L);
  for (std::size_t i = 0; i < n; ++i) {
    Float256 m = a[i][i].abs();
    if (m > scale) scale = m;
  }
  if (scale.is_zero()) scale = Float256(1L);
  Float256 eps = scale;
  for (int i = 0; i < 200; ++i) eps = eps / Float256(2L);

  const Float256 one(1L), two(2L);
  for (int sweep = 0; sweep < 100; ++sweep) {
    Float256 off(0L);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        off += a[p][q].abs();
    if (!(off > eps)) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (!(a[p][q].abs() > eps)) continue;
        // Rotation angle from theta = (a_qq - a_pp) / (2 a_pq):
        // t = sign(theta) / (|theta| + sqrt(theta^2 + 1)).
        Float256 theta = (a[q][q] - a[p][p]) / (two * a[p][q]);
        Float256 t = one / (theta.abs() + (theta * theta + one).sqrt());
        if (theta < Float256(0L)) t = -t;
        Float256 c = one / (t * t + one).sqrt();
        Float256 s = t * c;
        // Update the symmetric matrix A <- J^T A J.
        Float256 app = a[p][p], aqq = a[q][q], apq = a[p][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = Float256(0L);
        a[q][p] = Float256(0L);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          Float256 arp = a[r][p], arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[p][r] = a[r][p];
          a[r][q] = s * arp + c * arq;
          a[q][r] = a[r][q];
        }
      }
    }
  }

  std::vector<Float256> eigs;
  eigs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) eigs.push_back(a[i][i]);
  std::sort(eigs.begin(), eigs.end(),
            [](const Float256& x, const Float256& y) { return y < x; });
  return eigs;
}

}  // namespace updown
