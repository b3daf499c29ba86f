#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posmap/gaussian.hpp"
#include "posmap/matrix.hpp"
#include "posmap/multipoly.hpp"
#include "posmap/sos.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

/// Hermiticity-preserving map X ↦ Σ_r alpha_r A_r X A_r^* on n×n matrices.
struct KrausTerm {
    Rational alpha;
    CMatrix matrix;

    friend bool operator==(const KrausTerm& a, const KrausTerm& b) {
        return a.alpha == b.alpha && a.matrix.rows() == b.matrix.rows() &&
               a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix;
    }
};

class Superoperator {
public:
    Superoperator(std::size_t n, std::vector<KrausTerm> terms);

    std::size_t n() const { return n_; }
    const std::vector<KrausTerm>& terms() const { return terms_; }

    /// Φ(X), used by tests to check the Choi construction against the map.
    CMatrix apply(const CMatrix& x) const;

    friend bool operator==(const Superoperator&, const Superoperator&) = default;

private:
    std::size_t n_;
    std::vector<KrausTerm> terms_;
};

/// Operator on C^n ⊗ C^n, entries indexed by lexicographic pairs: row
/// (i, j) is i·n + j (0-based).
class HermitianOperator {
public:
    /// Throws DimensionMismatch unless `entries` is n²×n².
    HermitianOperator(std::size_t n, CMatrix entries);

    static HermitianOperator zero(std::size_t n);

    std::size_t n() const { return n_; }
    const CMatrix& matrix() const { return entries_; }

    const GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return entries_(static_cast<Eigen::Index>(i * n_ + j), static_cast<Eigen::Index>(k * n_ + l));
    }

    bool is_selfadjoint() const { return posmap::is_selfadjoint(entries_); }

    friend bool operator==(const HermitianOperator& a, const HermitianOperator& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    CMatrix entries_;
};

/// Positivity polynomial in the 4n real variables
/// (x_1 re, x_1 im, ..., x_n re, x_n im, y_1 re, y_1 im, ..., y_n re, y_n im).
/// Homogeneous of degree 2 in each of the x and y blocks.
struct PositivityPolynomial {
    std::size_t n;
    MultiPoly poly;
    /// Present when the construction exhibited p as a weighted sum of
    /// squares; the weights may be negative.
    std::optional<std::vector<SosTerm>> sos;
};

/// Index of the real (part = 0) or imaginary (part = 1) component of x_i
/// or y_j in the positivity-polynomial variable order.
std::size_t x_variable(std::size_t n, std::size_t i, int part);
std::size_t y_variable(std::size_t n, std::size_t j, int part);

/// x1..x{2n}, y1..y{2n}.
std::vector<std::string> positivity_variable_names(std::size_t n);

/// J(Φ)_{(ij)(kl)} = Σ_r alpha_r a^r_{lk} conj(a^r_{ji}).
HermitianOperator choi_matrix(const Superoperator& phi);

bool is_hermiticity_preserving(const CMatrix& candidate);

/// Exact PSD test of J(Φ): the characteristic polynomial has no root in
/// (-∞, 0).
bool is_completely_positive(const Superoperator& phi);
/// Characteristic polynomial of a selfadjoint operator (real coefficients).
UniPoly characteristic_polynomial(const HermitianOperator& t);
bool is_positive_semidefinite(const HermitianOperator& t);

/// Σ_{(ij)} σ_(ij) + Σ_{(ij)<(kl)} τ_(ij)(kl) expanded into real monomials.
PositivityPolynomial positivity_polynomial_from_choi(const HermitianOperator& t);

/// Σ_r alpha_r |x·A_r^*·y^T|², with the squares kept as SOS metadata.
PositivityPolynomial positivity_polynomial_from_kraus(const Superoperator& phi);

/// ⟨x⊗y | T (x⊗y)⟩ by the direct quadruple sum. Throws InternalError if the
/// imaginary part is nonzero.
Rational evaluate_bilinear_form(const HermitianOperator& t, const CVector& x, const CVector& y);

/// Splits a 4n real point into complex vectors (x, y).
std::pair<CVector, CVector> complex_vectors(std::size_t n, std::span<const Rational> point);
/// Inverse of complex_vectors.
std::vector<Rational> real_point(const CVector& x, const CVector& y);

}  // namespace posmap
