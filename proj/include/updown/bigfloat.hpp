#ifndef UPDOWN_BIGFLOAT_HPP
#define UPDOWN_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "updown/rational.hpp"

namespace updown {

// 256-bit floating point number (MPFR, round to nearest).
class Float256 {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Float256() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  explicit Float256(long x) { mpfr_init2(v_, kPrecision); mpfr_set_si(v_, x, MPFR_RNDN); }
  explicit Float256(double x) { mpfr_init2(v_, kPrecision); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Float256(const Rat& q) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Float256(const Float256& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Float256(Float256&& o) noexcept { mpfr_init2(v_, kPrecision); mpfr_swap(v_, o.v_); }
  Float256& operator=(const Float256& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Float256& operator=(Float256&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Float256() { mpfr_clear(v_); }

  friend Float256 operator+(const Float256& a, const Float256& b) {
    Float256 r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Float256 operator-(const Float256& a, const Float256& b) {
    Float256 r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Float256 operator*(const Float256& a, const Float256& b) {
    Float256 r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Float256 operator/(const Float256& a, const Float256& b) {
    Float256 r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  Float256& operator+=(const Float256& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Float256& operator-=(const Float256& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Float256& operator*=(const Float256& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

  Float256 sqrt() const { Float256 r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  Float256 abs() const { Float256 r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  Float256 operator-() const { Float256 r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  int compare(const Float256& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const Float256& a, const Float256& b) { return a.compare(b) < 0; }
  friend bool operator>(const Float256& a, const Float256& b) { return a.compare(b) > 0; }
  friend bool operator==(const Float256& a, const Float256& b) { return a.compare(b) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 40) const;

 private:
  mpfr_t v_;
};

// Eigenvalues of a symmetric matrix by the cyclic Jacobi method in 256-bit
// arithmetic, returned in descending order.  The input is given row-major;
// it must be square and symmetric.
std::vector<Float256> jacobi_eigenvalues(std::vector<std::vector<Float256>> a);

}  // namespace updown

#endif  // UPDOWN_BIGFLOAT_HPP
