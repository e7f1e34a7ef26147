#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bkm::linalg {

/// Dense row-major real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    /// Throws std::invalid_argument if entries.size() != rows * cols.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    /// Nested initializer, one inner list per row.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    /// n x 1 matrix holding v.
    static DenseMatrix column(std::span<const double> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<double> col(std::size_t j) const;

    const std::vector<double>& data() const { return data_; }

    bool all_finite() const;
    DenseMatrix transposed() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

double norm_inf(const DenseMatrix& a);
double norm_1(const DenseMatrix& a);
double norm_inf(std::span<const double> v);

/// Pivots with magnitude below this are treated as exactly zero.
inline constexpr double kSingularPivot = 1e-300;

/// LU factorization with partial (row) pivoting, PA = LU.
class LuFactorization {
public:
    /// Throws std::invalid_argument for a non-square or non-finite matrix and
    /// SingularMatrixError when a pivot falls below kSingularPivot.
    explicit LuFactorization(const DenseMatrix& a);

    std::size_t size() const { return n_; }

    std::vector<double> solve(std::span<const double> b) const;
    DenseMatrix solve(const DenseMatrix& b) const;
    /// Solves A^T x = b.
    std::vector<double> solve_transposed(std::span<const double> b) const;

    /// 1-norm of the original matrix.
    double norm1() const { return norm1_; }

    /// Estimate of ||A||_1 ||A^{-1}||_1 (Hager / Higham estimator); >= 1.
    double cond_estimate_1norm() const;

private:
    std::size_t n_;
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    double norm1_;
};

/// Solves A X = B. Same errors as LuFactorization.
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b);

/// 1-norm condition number estimate; +infinity when A is singular.
double cond_estimate_1norm(const DenseMatrix& a);

} // namespace bkm::linalg
