#include "posmap/choi.hpp"

#include "posmap/sturm.hpp"

namespace posmap {

namespace {

using Idx = Eigen::Index;

Idx idx(std::size_t k) { return static_cast<Idx>(k); }

/// Polynomial with Gaussian-rational values, kept as real and imaginary
/// parts over the real variables.
struct ComplexPoly {
    MultiPoly re;
    MultiPoly im;
};

ComplexPoly operator*(const GaussianRational& c, const ComplexPoly& z) {
    return {c.re * z.re - c.im * z.im, c.re * z.im + c.im * z.re};
}

/// z_(ij) = x_i·y_j over the 4n real variables.
std::vector<ComplexPoly> product_coordinates(std::size_t n) {
    const std::size_t nvars = 4 * n;
    std::vector<ComplexPoly> z;
    z.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const MultiPoly a = MultiPoly::variable(nvars, x_variable(n, i, 0));
        const MultiPoly b = MultiPoly::variable(nvars, x_variable(n, i, 1));
        for (std::size_t j = 0; j < n; ++j) {
            const MultiPoly c = MultiPoly::variable(nvars, y_variable(n, j, 0));
            const MultiPoly d = MultiPoly::variable(nvars, y_variable(n, j, 1));
            z.push_back({a * c - b * d, a * d + b * c});
        }
    }
    return z;
}

}  // namespace

Superoperator::Superoperator(std::size_t n, std::vector<KrausTerm> terms)
    : n_(n), terms_(std::move(terms)) {
    if (n_ == 0) throw PreconditionError("superoperator dimension must be positive");
    if (terms_.empty()) throw PreconditionError("superoperator needs at least one term");
    for (std::size_t r = 0; r < terms_.size(); ++r) {
        const CMatrix& a = terms_[r].matrix;
        if (a.rows() != idx(n_) || a.cols() != idx(n_))
            throw DimensionMismatch("term " + std::to_string(r) + " matrix is " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    ", expected " + std::to_string(n_) + "x" + std::to_string(n_));
    }
}

CMatrix Superoperator::apply(const CMatrix& x) const {
    if (x.rows() != idx(n_) || x.cols() != idx(n_)) throw DimensionMismatch("argument has wrong size");
    CMatrix out = CMatrix::Zero(idx(n_), idx(n_));
    for (const auto& [alpha, a] : terms_) {
        const CMatrix t = a * x * adjoint(a);
        out += GaussianRational(alpha) * t;
    }
    return out;
}

HermitianOperator::HermitianOperator(std::size_t n, CMatrix entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw PreconditionError("operator dimension must be positive");
    if (entries_.rows() != idx(n_ * n_) || entries_.cols() != idx(n_ * n_))
        throw DimensionMismatch("operator on C^" + std::to_string(n_) + " ⊗ C^" + std::to_string(n_) +
                                " needs a " + std::to_string(n_ * n_) + "x" + std::to_string(n_ * n_) +
                                " matrix");
}

HermitianOperator HermitianOperator::zero(std::size_t n) {
    return HermitianOperator(n, CMatrix::Zero(idx(n * n), idx(n * n)));
}

std::size_t x_variable(std::size_t, std::size_t i, int part) { return 2 * i + static_cast<std::size_t>(part); }

std::size_t y_variable(std::size_t n, std::size_t j, int part) {
    return 2 * n + 2 * j + static_cast<std::size_t>(part);
}

std::vector<std::string> positivity_variable_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= 2 * n; ++k) names.push_back("x" + std::to_string(k));
    for (std::size_t k = 1; k <= 2 * n; ++k) names.push_back("y" + std::to_string(k));
    return names;
}

HermitianOperator choi_matrix(const Superoperator& phi) {
    const std::size_t n = phi.n();
    CMatrix j = CMatrix::Zero(idx(n * n), idx(n * n));
    for (const auto& [alpha, a] : phi.terms()) {
        if (alpha.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        j(idx(i * n + jj), idx(k * n + l)) +=
                            GaussianRational(alpha) * a(idx(l), idx(k)) * a(idx(jj), idx(i)).conj();
    }
    return HermitianOperator(n, std::move(j));
}

bool is_hermiticity_preserving(const CMatrix& candidate) { return is_selfadjoint(candidate); }

UniPoly characteristic_polynomial(const HermitianOperator& t) {
    const std::vector<GaussianRational> coeffs = characteristic_polynomial(t.matrix());
    std::vector<Rational> real;
    real.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_real()) throw InternalError("characteristic polynomial of a selfadjoint operator is not real");
        real.push_back(c.re);
    }
    return UniPoly(std::move(real));
}

bool is_positive_semidefinite(const HermitianOperator& t) {
    if (!t.is_selfadjoint()) throw PreconditionError("PSD test needs a selfadjoint operator");
    const UniPoly chi = characteristic_polynomial(t);
    const UniPoly minus_t = -UniPoly::t();
    return count_joint_positive(chi, minus_t, minus_t) == 0;
}

bool is_completely_positive(const Superoperator& phi) { return is_positive_semidefinite(choi_matrix(phi)); }

PositivityPolynomial positivity_polynomial_from_choi(const HermitianOperator& t) {
    if (!t.is_selfadjoint()) throw PreconditionError("positivity polynomial needs a selfadjoint operator");
    const std::size_t n = t.n();
    const std::vector<ComplexPoly> z = product_coordinates(n);
    MultiPoly p(4 * n);
    for (std::size_t a = 0; a < n * n; ++a) {
        const ComplexPoly& za = z[a];
        const Rational diag = t.matrix()(idx(a), idx(a)).re;
        if (!diag.is_zero()) p += diag * (za.re * za.re + za.im * za.im);
        for (std::size_t b = a + 1; b < n * n; ++b) {
            const GaussianRational& tab = t.matrix()(idx(a), idx(b));
            if (tab.is_zero()) continue;
            const ComplexPoly& zb = z[b];
            // w = conj(z_b)·z_a; τ = 2·Re(T_ab·w)
            const MultiPoly w_re = zb.re * za.re + zb.im * za.im;
            const MultiPoly w_im = zb.re * za.im - zb.im * za.re;
            p += Rational(2) * (tab.re * w_re - tab.im * w_im);
        }
    }
    return {n, std::move(p), std::nullopt};
}

PositivityPolynomial positivity_polynomial_from_kraus(const Superoperator& phi) {
    const std::size_t n = phi.n();
    const std::vector<ComplexPoly> z = product_coordinates(n);
    MultiPoly p(4 * n);
    std::vector<SosTerm> sos;
    for (const auto& [alpha, a] : phi.terms()) {
        if (alpha.is_zero()) continue;
        // b = x·A^*·y^T = Σ_ij conj(a_ji) x_i y_j
        ComplexPoly b{MultiPoly(4 * n), MultiPoly(4 * n)};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const GaussianRational c = a(idx(j), idx(i)).conj();
                if (c.is_zero()) continue;
                const ComplexPoly term = c * z[i * n + j];
                b.re += term.re;
                b.im += term.im;
            }
        }
        for (MultiPoly* part : {&b.re, &b.im}) {
            if (part->is_zero()) continue;
            p += alpha * (*part * *part);
            sos.push_back({alpha, std::move(*part)});
        }
    }
    return {n, std::move(p), std::move(sos)};
}

Rational evaluate_bilinear_form(const HermitianOperator& t, const CVector& x, const CVector& y) {
    const std::size_t n = t.n();
    if (x.size() != idx(n) || y.size() != idx(n)) throw DimensionMismatch("vectors must have length n");
    GaussianRational sum;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GaussianRational xy = x(idx(i)) * y(idx(j));
            if (xy.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    sum += t(i, j, k, l) * (x(idx(k)) * y(idx(l))).conj() * xy;
        }
    if (!sum.is_real())
        throw InternalError("bilinear form has nonzero imaginary part " + sum.im.str());
    return sum.re;
}

std::pair<CVector, CVector> complex_vectors(std::size_t n, std::span<const Rational> point) {
    if (point.size() != 4 * n) throw DimensionMismatch("point must have 4n coordinates");
    CVector x(idx(n)), y(idx(n));
    for (std::size_t i = 0; i < n; ++i) {
        x(idx(i)) = {point[x_variable(n, i, 0)], point[x_variable(n, i, 1)]};
        y(idx(i)) = {point[y_variable(n, i, 0)], point[y_variable(n, i, 1)]};
    }
    return {std::move(x), std::move(y)};
}

std::vector<Rational> real_point(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("x and y must have equal length");
    const auto n = static_cast<std::size_t>(x.size());
    std::vector<Rational> point(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        point[x_variable(n, i, 0)] = x(idx(i)).re;
        point[x_variable(n, i, 1)] = x(idx(i)).im;
        point[y_variable(n, i, 0)] = y(idx(i)).re;
        point[y_variable(n, i, 1)] = y(idx(i)).im;
    }
    return point;
}

}  // namespace posmap
