#ifndef LATGEO_SCALAR_HPP
#define LATGEO_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "latgeo/errors.hpp"

namespace latgeo {

/// Exact rational number; canonical (reduced, positive denominator) after every operation.
using Scalar = mpq_class;

inline Scalar canonical(Scalar q) {
  q.canonicalize();
  return q;
}

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw DegenerateInput("zero denominator");
  return canonical(Scalar(num, den));
}

/// Parses "p/q" or an integer string.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return canonical(q).get_str(10); }

inline double to_double(const Scalar& q) { return q.get_d(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Scalar from_double(double d) {
  Scalar q(d);
  q.canonicalize();
  return q;
}

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw EnumerationFailed("integer out of 64-bit range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

inline std::int64_t floor_int(const Scalar& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int64(r);
}

inline std::int64_t ceil_int(const Scalar& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_int64(r);
}

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

inline int sign(const Scalar& q) { return sgn(q); }

inline Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(f);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace latgeo

#endif  // LATGEO_SCALAR_HPP
