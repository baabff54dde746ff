#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "ekr/error.hpp"

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
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
}  // namespace Eigen

namespace ekr {

using Rational = mpq_class;

template <int Rows, int Cols>
using RationalMatrix = Eigen::Matrix<Rational, Rows, Cols>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// Rounds a complex value that must be an integer; throws CheckFailure when the
/// distance to the nearest integer (real and imaginary part) exceeds tol.
inline std::int64_t round_checked(std::complex<double> v, double tol, std::string_view what) {
  const double nearest = std::round(v.real());
  const double residual = std::max(std::abs(v.real() - nearest), std::abs(v.imag()));
  if (!(residual < tol)) {
    throw CheckFailure(std::string(what) + ": value (" + std::to_string(v.real()) + ", " +
                       std::to_string(v.imag()) + ") is not an integer within tolerance");
  }
  return static_cast<std::int64_t>(nearest);
}

/// Numerical rank by Gaussian elimination with partial (row) pivoting. A column
/// whose best pivot has magnitude below pivot_tol is treated as dependent.
template <typename Derived>
Eigen::Index numeric_rank(const Eigen::MatrixBase<Derived>& input, double pivot_tol = 1e-8) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    double best = std::abs(a(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best < pivot_tol) continue;
    a.row(rank).swap(a.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Scalar factor = a(r, col) / a(rank, col);
      a.row(r).tail(cols - col) -= factor * a.row(rank).tail(cols - col);
    }
    ++rank;
  }
  return rank;
}

}  // namespace ekr
