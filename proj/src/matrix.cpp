#include "tdrep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tdrep {

Matrix::Matrix(int r, int c, std::vector<double> values) : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != static_cast<size_t>(r) * c)
        throw std::invalid_argument("Matrix: value count " + std::to_string(data.size()) +
                                    " does not match shape " + std::to_string(r) + "x" + std::to_string(c));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows_init) {
    int r = static_cast<int>(rows_init.size());
    int c = r > 0 ? static_cast<int>(rows_init.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows_init) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("from_rows: ragged rows");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<double> Matrix::col(int c) const {
    std::vector<double> out(rows);
    for (int i = 0; i < rows; ++i) out[i] = (*this)(i, c);
    return out;
}

std::vector<double> Matrix::row(int r) const {
    return std::vector<double>(row_ptr(r), row_ptr(r) + cols);
}

std::string shape_str(const Matrix& m) {
    return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}

bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

void require_finite(const Matrix& m, const std::string& op) {
    if (!all_finite(m)) throw std::runtime_error(op + ": non-finite entries");
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: shape mismatch, lhs is " + shape_str(a) + ", rhs is " + shape_str(b));
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* orow = out.row_ptr(i);
        for (int k = 0; k < a.cols; ++k) {
            double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (int j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("add: shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    Matrix out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("sub: shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    Matrix out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
    return out;
}

Matrix scale(const Matrix& m, double s) {
    Matrix out = m;
    for (double& v : out.data) v *= s;
    return out;
}

Matrix axpy(const Matrix& a, double s, const Matrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("axpy: shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    Matrix out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += s * b.data[i];
    return out;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v) {
    if (m.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("matvec: shape mismatch, matrix " + shape_str(m) + ", vector length " +
                                    std::to_string(v.size()));
    std::vector<double> out(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.row_ptr(i);
        double acc = 0.0;
        for (int j = 0; j < m.cols; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> tmatvec(const Matrix& m, const std::vector<double>& v) {
    if (m.rows != static_cast<int>(v.size()))
        throw std::invalid_argument("tmatvec: shape mismatch, matrix " + shape_str(m) + ", vector length " +
                                    std::to_string(v.size()));
    std::vector<double> out(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.row_ptr(i);
        double vi = v[i];
        for (int j = 0; j < m.cols; ++j) out[j] += row[j] * vi;
    }
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double frob_norm_sq(const Matrix& m) {
    double acc = 0.0;
    for (double v : m.data) acc += v * v;
    return acc;
}

double frob_norm(const Matrix& m) { return std::sqrt(frob_norm_sq(m)); }

double max_abs(const Matrix& m) {
    double acc = 0.0;
    for (double v : m.data) acc = std::max(acc, std::fabs(v));
    return acc;
}

double weighted_frob_norm_sq(const Matrix& m, const Matrix& w) {
    if (w.rows != w.cols || w.rows != m.cols)
        throw std::invalid_argument("weighted_frob_norm_sq: weight must be " + std::to_string(m.cols) + "x" +
                                    std::to_string(m.cols) + ", got " + shape_str(w));
    double scale_ref = std::max(1.0, max_abs(w));
    for (int i = 0; i < w.rows; ++i)
        for (int j = i + 1; j < w.cols; ++j)
            if (std::fabs(w(i, j) - w(j, i)) > 1e-10 * scale_ref)
                throw std::invalid_argument("weighted_frob_norm_sq: weight matrix is not symmetric");
    // trace(m w m^T) = sum_i row_i(m) w row_i(m)^T
    double acc = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.row_ptr(i);
        for (int a = 0; a < w.rows; ++a) {
            double partial = 0.0;
            const double* wrow = w.row_ptr(a);
            for (int b = 0; b < w.cols; ++b) partial += wrow[b] * row[b];
            acc += row[a] * partial;
        }
    }
    return acc;
}

LuFactors lu_factor(const Matrix& m, double condition_cap) {
    if (m.rows != m.cols)
        throw std::invalid_argument("lu_factor: matrix must be square, got " + shape_str(m));
    int n = m.rows;
    LuFactors f;
    f.lu = m;
    f.perm.resize(n);
    for (int i = 0; i < n; ++i) f.perm[i] = i;

    Matrix& a = f.lu;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::fabs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        double pivot = a(k, k);
        if (pivot == 0.0)
            throw SingularMatrixError("lu_factor: exact zero pivot at step " + std::to_string(k),
                                      std::numeric_limits<double>::infinity());
        for (int i = k + 1; i < n; ++i) {
            double l = a(i, k) / pivot;
            a(i, k) = l;
            if (l == 0.0) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
        }
    }

    double umax = 0.0, umin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double d = std::fabs(a(i, i));
        umax = std::max(umax, d);
        umin = std::min(umin, d);
    }
    f.condition_estimate = umin > 0.0 ? umax / umin : std::numeric_limits<double>::infinity();
    if (f.condition_estimate > condition_cap)
        throw SingularMatrixError("lu_factor: condition estimate " + std::to_string(f.condition_estimate) +
                                      " exceeds cap " + std::to_string(condition_cap),
                                  f.condition_estimate);
    return f;
}

std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
    int n = f.lu.rows;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: rhs length mismatch");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    // forward substitution, unit lower triangular
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

Matrix lu_solve(const LuFactors& f, const Matrix& b) {
    if (b.rows != f.lu.rows) throw std::invalid_argument("lu_solve: rhs has " + shape_str(b) + " rows");
    Matrix x(b.rows, b.cols);
    std::vector<double> column(b.rows);
    for (int c = 0; c < b.cols; ++c) {
        for (int i = 0; i < b.rows; ++i) column[i] = b(i, c);
        std::vector<double> sol = lu_solve(f, column);
        for (int i = 0; i < b.rows; ++i) x(i, c) = sol[i];
    }
    return x;
}

Matrix solve(const Matrix& a, const Matrix& b, double condition_cap) {
    return lu_solve(lu_factor(a, condition_cap), b);
}

Matrix invert(const Matrix& m, double condition_cap) {
    Matrix inv = solve(m, Matrix::identity(m.rows), condition_cap);
    require_finite(inv, "invert");
    return inv;
}

Matrix pinv(const Matrix& m, double ridge) {
    if (ridge < 0.0) throw std::invalid_argument("pinv: ridge must be nonnegative");
    Matrix mt = transpose(m);
    Matrix gram = matmul(mt, m);
    for (int i = 0; i < gram.rows; ++i) gram(i, i) += ridge;
    LuFactors f;
    try {
        f = lu_factor(gram);
    } catch (const SingularMatrixError& e) {
        if (ridge == 0.0)
            throw SingularMatrixError(
                "pinv: rank-deficient input with ridge = 0 (condition estimate " +
                    std::to_string(e.condition_estimate()) + "); pass ridge > 0",
                e.condition_estimate());
        throw;
    }
    return lu_solve(f, mt);
}

Matrix cholesky(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("cholesky: matrix must be square, got " + shape_str(m));
    int n = m.rows;
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double acc = m(i, j);
            for (int k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
            if (i == j) {
                if (acc < -1e-12) throw std::invalid_argument("cholesky: matrix is not positive semidefinite");
                l(i, i) = std::sqrt(std::max(acc, 0.0));
            } else {
                l(i, j) = l(j, j) > 0.0 ? acc / l(j, j) : 0.0;
            }
        }
    }
    return l;
}

std::vector<double> sym_eigenvalues(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("sym_eigenvalues: matrix must be square");
    int n = m.rows;
    Matrix a = m;
    // cyclic Jacobi; sizes here are <= a few dozen so convergence is quick
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double min_eigenvalue_sym(const Matrix& m) { return sym_eigenvalues(m).front(); }

double min_singular_value(const Matrix& m) {
    Matrix gram = matmul(transpose(m), m);
    double lo = min_eigenvalue_sym(gram);
    return std::sqrt(std::max(lo, 0.0));
}

}  // namespace tdrep
