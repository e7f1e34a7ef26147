#include "bkm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bkm/errors.hpp"

namespace bkm::linalg {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("DenseMatrix: entry count does not match shape");
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("DenseMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::column(std::span<const double> v) {
    return DenseMatrix(v.size(), 1, std::vector<double>(v.begin(), v.end()));
}

std::vector<double> DenseMatrix::col(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

bool DenseMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: shape mismatch");
    }
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("multiply: shape mismatch");
    }
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += a(i, j) * x[j];
        }
        y[i] = sum;
    }
    return y;
}

double norm_inf(const DenseMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double sum = 0.0;
        for (double v : a.row(i)) {
            sum += std::abs(v);
        }
        best = std::max(best, sum);
    }
    return best;
}

double norm_1(const DenseMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            sum += std::abs(a(i, j));
        }
        best = std::max(best, sum);
    }
    return best;
}

double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

LuFactorization::LuFactorization(const DenseMatrix& a)
    : n_(a.rows()), lu_(a), perm_(a.rows()), norm1_(norm_1(a)) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("LuFactorization: matrix is not square");
    }
    if (!a.all_finite()) {
        throw std::invalid_argument("LuFactorization: matrix has non-finite entries");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        perm_[i] = i;
    }
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n_; ++i) {
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                p = i;
            }
        }
        if (best < kSingularPivot) {
            throw SingularMatrixError(k);
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = k + 1; j < n_; ++j) {
                lu_(i, j) -= factor * lu_(k, j);
            }
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
    if (b.size() != n_) {
        throw std::invalid_argument("LuFactorization::solve: right-hand side has wrong length");
    }
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) {
            sum -= lu_(i, j) * x[j];
        }
        x[i] = sum;
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        double sum = x[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) {
            sum -= lu_(ii, j) * x[j];
        }
        x[ii] = sum / lu_(ii, ii);
    }
    return x;
}

DenseMatrix LuFactorization::solve(const DenseMatrix& b) const {
    if (b.rows() != n_) {
        throw std::invalid_argument("LuFactorization::solve: right-hand side has wrong row count");
    }
    DenseMatrix x(n_, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto xj = solve(b.col(j));
        for (std::size_t i = 0; i < n_; ++i) {
            x(i, j) = xj[i];
        }
    }
    return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> b) const {
    if (b.size() != n_) {
        throw std::invalid_argument("LuFactorization::solve_transposed: wrong length");
    }
    // A^T = U^T L^T P, so solve U^T w = b, L^T v = w, x = P^T v.
    std::vector<double> w(b.begin(), b.end());
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = w[i];
        for (std::size_t j = 0; j < i; ++j) {
            sum -= lu_(j, i) * w[j];
        }
        w[i] = sum / lu_(i, i);
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        double sum = w[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) {
            sum -= lu_(j, ii) * w[j];
        }
        w[ii] = sum;
    }
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        x[perm_[i]] = w[i];
    }
    return x;
}

double LuFactorization::cond_estimate_1norm() const {
    if (n_ == 0) {
        return 1.0;
    }
    const auto norm1_vec = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) {
            s += std::abs(x);
        }
        return s;
    };

    std::vector<double> x(n_, 1.0 / static_cast<double>(n_));
    std::vector<double> prev_sign;
    double estimate = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        const auto y = solve(x);
        const double next = norm1_vec(y);
        if (iter > 0 && next <= estimate) {
            break;
        }
        estimate = next;
        std::vector<double> sign(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
        }
        if (sign == prev_sign) {
            break;
        }
        prev_sign = sign;
        const auto z = solve_transposed(sign);
        std::size_t jmax = 0;
        double ztx = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            ztx += z[i] * x[i];
            if (std::abs(z[i]) > std::abs(z[jmax])) {
                jmax = i;
            }
        }
        if (iter > 0 && std::abs(z[jmax]) <= ztx) {
            break;
        }
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }

    // Higham's alternating test vector guards against the estimator stalling.
    std::vector<double> b(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double mag = n_ > 1 ? 1.0 + static_cast<double>(i) / static_cast<double>(n_ - 1) : 1.0;
        b[i] = (i % 2 == 0) ? mag : -mag;
    }
    const double alt = 2.0 * norm1_vec(solve(b)) / (3.0 * static_cast<double>(n_));
    estimate = std::max(estimate, alt);

    return std::max(1.0, estimate * norm1_);
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b) {
    return LuFactorization(a).solve(b);
}

double cond_estimate_1norm(const DenseMatrix& a) {
    try {
        return LuFactorization(a).cond_estimate_1norm();
    } catch (const SingularMatrixError&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace bkm::linalg
