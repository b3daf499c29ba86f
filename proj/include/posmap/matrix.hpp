#pragma once

#include <vector>

#include <Eigen/Core>

#include "posmap/error.hpp"
#include "posmap/gaussian.hpp"
#include "posmap/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<posmap::Rational> : GenericNumTraits<posmap::Rational> {
    using Real = posmap::Rational;
    using NonInteger = posmap::Rational;
    using Nested = posmap::Rational;
    using Literal = posmap::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    // Exact scalars; only consulted when Eigen prints a matrix.
    static constexpr int digits10() { return 0; }
};

// Eigen's complex machinery is tied to std::complex, so Gaussian rationals
// are presented as an opaque field; conjugation goes through posmap::conj.
template <>
struct NumTraits<posmap::GaussianRational> : GenericNumTraits<posmap::GaussianRational> {
    using Real = posmap::GaussianRational;
    using NonInteger = posmap::GaussianRational;
    using Nested = posmap::GaussianRational;
    using Literal = posmap::GaussianRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 32
    };
    static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace posmap {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Matrix<GaussianRational>;
using CVector = Vector<GaussianRational>;

/// Conjugate transpose of an exact complex matrix.
template <class Derived>
CMatrix adjoint(const Eigen::MatrixBase<Derived>& m) {
    return m.transpose().unaryExpr([](const GaussianRational& z) { return z.conj(); });
}

template <class Derived>
bool is_selfadjoint(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("selfadjointness needs a square matrix");
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = r; c < m.cols(); ++c)
            if (!(m(r, c) == m(c, r).conj())) return false;
    return true;
}

/// Coefficients of det(t·I - m), ascending, by the Faddeev-LeVerrier
/// recurrence. Exact over any field of characteristic zero.
template <class Derived>
std::vector<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const Eigen::Index n = m.rows();
    std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar(0));
    coeffs[static_cast<std::size_t>(n)] = Scalar(1);
    Matrix<Scalar> a = m;
    Matrix<Scalar> aux = Matrix<Scalar>::Zero(n, n);
    const Matrix<Scalar> identity = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        aux = a * aux + coeffs[static_cast<std::size_t>(n - k + 1)] * identity;
        const Scalar tr = (a * aux).trace();
        coeffs[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<long>(k));
    }
    return coeffs;
}

}  // namespace posmap
