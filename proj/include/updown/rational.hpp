#ifndef UPDOWN_RATIONAL_HPP
#define UPDOWN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace updown {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // arbitrary-precision rational, kept in canonical form

// Build a rational in lowest terms with positive denominator.  The raw
// two-argument mpq_class constructor does not canonicalize, so every
// fraction built from a numerator/denominator pair goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Canonical text form: "8/9", "-3/4", or "7" for integers.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parse "a/b" or "a".  Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Int int_pow(const Int& base, unsigned long k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long k) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), k);
  // powers of a canonical fraction are canonical
  return r;
}

// n (n-1) ... (n-k+1), the falling factorial, as an exact integer.
inline Int falling_factorial(const Int& n, unsigned long k) {
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= (n - static_cast<long>(i));
  return r;
}

// Jack-like parameter of the measure family: a positive rational, or
// infinity.  Infinity selects the Poissonized-dimension (Plancherel)
// degeneration of every formula that accepts it.
class Alpha {
 public:
  // Finite positive value; non-positive values are outside the domain of
  // every formula in this library.
  explicit Alpha(const Rat& value) : infinite_(false), value_(value) {
    if (value <= 0)
      throw std::domain_error("Alpha: parameter must be positive, got " +
                              rat_to_string(value));
  }
  static Alpha infinity() { return Alpha(); }

  bool is_infinite() const { return infinite_; }
  // Finite value; throws if infinite.
  const Rat& value() const {
    if (infinite_) throw std::domain_error("Alpha: infinite parameter has no value");
    return value_;
  }
  std::string to_string() const { return infinite_ ? "inf" : rat_to_string(value_); }

  // Accepts "inf", "infinity", "oo", or a positive rational literal.
  static Alpha parse(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo" || s == "Inf") return infinity();
    return Alpha(parse_rat(s));
  }

 private:
  Alpha() : infinite_(true), value_(0) {}
  bool infinite_;
  Rat value_;
};

}  // namespace updown

#endif  // UPDOWN_RATIONAL_HPP
