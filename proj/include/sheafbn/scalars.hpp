#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

// Eigen scalar traits for the GMP arbitrary-precision types. Exact arithmetic
// throughout: no epsilon, no dummy precision.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace sheafbn {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

// Quotient rounded to nearest; remainder magnitude is at most |d|/2.
inline Int div_nearest(const Int& a, const Int& d) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  Int r2 = 2 * abs(r);
  if (r2 > abs(d)) q += (sgn(a) == sgn(d)) ? 1 : -1;
  return q;
}

inline Int mod_reduce(const Int& a, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace sheafbn
