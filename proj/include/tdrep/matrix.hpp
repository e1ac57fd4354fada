#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdrep {

/// Thrown when a factorization meets a singular or numerically unusable pivot.
/// Carries the condition estimate that triggered the failure (infinity when an
/// exact zero pivot was found).
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, double condition_estimate)
        : std::runtime_error(what), condition_estimate_(condition_estimate) {}
    double condition_estimate() const { return condition_estimate_; }

private:
    double condition_estimate_;
};

/// Dense row-major matrix of doubles. All problem sizes here are tiny
/// (S up to a few hundred), so there is no blocking, no sparsity, and
/// every operation validates shapes and finiteness.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
    }
    Matrix(int r, int c, std::vector<double> values);

    double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    double* row_ptr(int r) { return data.data() + static_cast<size_t>(r) * cols; }
    const double* row_ptr(int r) const { return data.data() + static_cast<size_t>(r) * cols; }

    bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }

    static Matrix zeros(int r, int c) { return Matrix(r, c); }
    static Matrix identity(int n);
    static Matrix diag(const std::vector<double>& d);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows_init);

    std::vector<double> col(int c) const;
    std::vector<double> row(int r) const;
};

std::string shape_str(const Matrix& m);

bool all_finite(const Matrix& m);
void require_finite(const Matrix& m, const std::string& op);

Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);
/// a + s*b
Matrix axpy(const Matrix& a, double s, const Matrix& b);

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v);
std::vector<double> tmatvec(const Matrix& m, const std::vector<double>& v);  // m^T v
double dot(const std::vector<double>& a, const std::vector<double>& b);

double frob_norm_sq(const Matrix& m);
double frob_norm(const Matrix& m);
double max_abs(const Matrix& m);

/// trace(m w m^T) with w symmetric PSD, w.rows == m.cols. With w = I this
/// equals the plain squared Frobenius norm.
double weighted_frob_norm_sq(const Matrix& m, const Matrix& w);

/// LU factorization with partial pivoting of a square matrix, kept around
/// for repeated solves. The condition estimate is the cheap proxy
/// max|U_ii| / min|U_ii|; factorization fails above `condition_cap`.
struct LuFactors {
    Matrix lu;               // L (unit diagonal, below) and U (on/above diagonal)
    std::vector<int> perm;   // row permutation
    double condition_estimate = 0.0;
};

constexpr double kDefaultConditionCap = 1e12;

LuFactors lu_factor(const Matrix& m, double condition_cap = kDefaultConditionCap);
std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b);
Matrix lu_solve(const LuFactors& f, const Matrix& b);

/// Solve a x = b (square a) via LU with partial pivoting.
Matrix solve(const Matrix& a, const Matrix& b, double condition_cap = kDefaultConditionCap);

Matrix invert(const Matrix& m, double condition_cap = kDefaultConditionCap);

/// Ridge pseudo-inverse (m^T m + ridge I)^{-1} m^T. With ridge = 0 the
/// matrix must have full column rank; otherwise the error advises ridge > 0.
Matrix pinv(const Matrix& m, double ridge = 0.0);

/// Lower-triangular Cholesky factor of a symmetric PSD matrix.
Matrix cholesky(const Matrix& m);

/// Eigenvalues of a symmetric matrix (ascending), via cyclic Jacobi sweeps.
std::vector<double> sym_eigenvalues(const Matrix& m);

double min_eigenvalue_sym(const Matrix& m);

/// Smallest singular value of a (tall or square) matrix, sqrt of the
/// smallest eigenvalue of m^T m.
double min_singular_value(const Matrix& m);

}  // namespace tdrep
