#pragma once

// Lets Eigen dense containers hold the exact scalar types used here.

#include <Eigen/Core>
#include <gmpxx.h>

#include "tilegroup/exactnum.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 24,
    MulCost = 48
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<tilegroup::QuadraticRational> : GenericNumTraits<tilegroup::QuadraticRational> {
  using Real = tilegroup::QuadraticRational;
  using NonInteger = tilegroup::QuadraticRational;
  using Literal = tilegroup::QuadraticRational;
  using Nested = tilegroup::QuadraticRational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
