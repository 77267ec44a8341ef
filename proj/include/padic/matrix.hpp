#pragma once

#include <Eigen/Core>

#include <optional>

#include "padic/ratfunc.hpp"

namespace Eigen {

template <>
struct NumTraits<padic::RatFunc> {
  using Real = padic::RatFunc;
  using NonInteger = padic::RatFunc;
  using Literal = padic::RatFunc;
  using Nested = padic::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace padic {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixRF = Matrix<RatFunc>;
using VectorRF = Vector<RatFunc>;
using Index = Eigen::Index;

// Entrywise d/dT.
template <typename Derived>
auto derivative(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const RatFunc& f) { return f.derivative(); }).eval();
}

// Gauss valuation of a matrix: the min over entries (+infinity when all
// entries vanish).
template <typename Derived>
ExtVal gauss_val(const Eigen::MatrixBase<Derived>& m, const PointSpec& pt) {
  ExtVal best = ExtVal::infinity();
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      ExtVal v = gauss_val(m.derived()(i, j), pt);
      if (v < best) best = v;
    }
  return best;
}

// Determinant over K(T) by fraction-free (Bareiss) elimination on the
// denominator-cleared polynomial lift.
RatFunc det(const MatrixRF& a);

// Solves A x = b over K(T); nullopt when A is singular.
std::optional<VectorRF> solve(const MatrixRF& a, const VectorRF& b);

}  // namespace padic
