#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "orthovol/errors.hpp"

namespace orthovol {

using Vector = std::vector<double>;

/// Small dense row-major matrix. Everything in this project is tiny
/// (dimensions up to a few dozen), so no blocking or expression tricks.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

/// LU factorization with partial pivoting, in place. Returns false if the
/// matrix is numerically singular.
class LuFactors {
public:
    static LuFactors factor(Matrix a) {
        LuFactors f;
        const std::size_t n = a.rows();
        f.perm_.resize(n);
        for (std::size_t i = 0; i < n; ++i) f.perm_[i] = i;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            double best = std::fabs(a(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                double v = std::fabs(a(r, col));
                if (v > best) { best = v; piv = r; }
            }
            if (best < 1e-300) { f.singular_ = true; break; }
            if (piv != col) {
                std::swap(f.perm_[piv], f.perm_[col]);
                for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            }
            for (std::size_t r = col + 1; r < n; ++r) {
                double m = a(r, col) / a(col, col);
                a(r, col) = m;
                for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= m * a(col, j);
            }
        }
        f.lu_ = std::move(a);
        return f;
    }

    bool singular() const { return singular_; }

    /// Solves A x = b for the factored A.
    Vector solve(const Vector& b) const {
        const std::size_t n = lu_.rows();
        Vector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
            x[ii] /= lu_(ii, ii);
        }
        return x;
    }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
};

/// Solves the square system A x = b; throws InternalError when singular.
inline Vector solve_linear(const Matrix& a, const Vector& b) {
    LuFactors f = LuFactors::factor(a);
    if (f.singular()) throw InternalError("linear system is singular");
    return f.solve(b);
}

/// Modified Gram-Schmidt orthonormal basis of span{vecs}. Returns the basis
/// as columns of a (p x rank) matrix; `rank` is set to the numerical rank
/// (relative tolerance 1e-10 against each input's norm).
inline Matrix orthonormal_span(const std::vector<Vector>& vecs, int& rank) {
    const std::size_t p = vecs.empty() ? 0 : vecs.front().size();
    std::vector<Vector> basis;
    for (const Vector& v : vecs) {
        Vector w = v;
        double orig = norm(v);
        for (const Vector& q : basis) {
            double c = dot(w, q);
            for (std::size_t i = 0; i < p; ++i) w[i] -= c * q[i];
        }
        // second pass for orthogonality at full precision
        for (const Vector& q : basis) {
            double c = dot(w, q);
            for (std::size_t i = 0; i < p; ++i) w[i] -= c * q[i];
        }
        double rem = norm(w);
        if (rem > 1e-10 * (orig > 0 ? orig : 1.0)) {
            for (double& wi : w) wi /= rem;
            basis.push_back(std::move(w));
        }
    }
    rank = static_cast<int>(basis.size());
    Matrix q(p, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < p; ++i) q(i, j) = basis[j][i];
    return q;
}

inline Vector cross3(const Vector& a, const Vector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace orthovol
