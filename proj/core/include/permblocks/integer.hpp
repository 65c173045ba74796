#ifndef PERMBLOCKS_INTEGER_HPP
#define PERMBLOCKS_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace permblocks {

/** Exact unbounded integer; all fusion coefficients and block dimensions use
 * this type so counts never overflow silently. */
using Integer = mpz_class;

/** Exact rational; used for twisted weights n / |g_j|. */
using Rational = mpq_class;

inline std::string to_string(const Integer &value) { return value.get_str(); }

inline std::string to_string(const Rational &value) {
  Rational canon = value;
  canon.canonicalize();
  if (canon.get_den() == 1)
    return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

} // namespace permblocks

#endif
