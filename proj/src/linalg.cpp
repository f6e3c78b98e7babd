#include "arq/linalg.hpp"

#include <cassert>
#include <sstream>

#include "arq/errors.hpp"

namespace arq {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ArqError("ShapeMismatch", "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix r(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) r(i, k) = (*this)(i, cols[k]);
    return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix r(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(rows[k], j);
    return r;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + static_cast<long>(i * cols_),
                               data_.begin() + static_cast<long>((i + 1) * cols_));
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows());
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.cols());
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ArqError("ShapeMismatch", "matrix product of incompatible shapes");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) == 0) continue;
                c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
            }
        }
    return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Field& f, const Scalar& s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
    return c;
}

Matrix reduce(const Field& f, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.reduce(a(i, j));
    return c;
}

Matrix power(const Field& f, const Matrix& a, unsigned long k) {
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k) {
        if (k & 1UL) result = multiply(f, result, base);
        k >>= 1UL;
        if (k) base = multiply(f, base, base);
    }
    return result;
}

namespace {

// Fraction-free Gauss-Jordan over the integers with content removal.
RowEchelon rref_rational(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> rows(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    auto remove_content = [](std::vector<mpz_class>& r) {
        mpz_class g = 0;
        for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    };
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                p = i;
                break;
            }
        if (p == nr) continue;
        std::swap(rows[p], rows[r]);
        remove_content(rows[r]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            mpz_class a = rows[r][c], b = rows[i][c], g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_class ca = a / g, cb = b / g;
            for (std::size_t j = 0; j < nc; ++j) rows[i][j] = ca * rows[i][j] - cb * rows[r][j];
            remove_content(rows[i]);
        }
        pivots.push_back(c);
        ++r;
    }
    RowEchelon e{Matrix(nr, nc), pivots};
    for (std::size_t i = 0; i < r; ++i) {
        Scalar piv(rows[i][pivots[i]]);
        for (std::size_t j = 0; j < nc; ++j)
            if (rows[i][j] != 0) {
                Scalar v(rows[i][j]);
                v /= piv;
                e.reduced(i, j) = v;
            }
    }
    return e;
}

RowEchelon rref_modular(const Field& f, const Matrix& m) {
    Matrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = f.inv(a(r, c));
        for (std::size_t j = c; j < nc; ++j) a(r, j) = f.mul(a(r, j), inv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < nc; ++j)
                if (a(r, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

}  // namespace

RowEchelon rref(const Field& f, const Matrix& m) {
    return f.is_rational() ? rref_rational(m) : rref_modular(f, m);
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).pivots.size(); }

RankKernel rank_kernel(const Field& f, const Matrix& m) {
    RowEchelon e = rref(f, m);
    RankKernel out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> raw;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return out;
    // Normalize the basis itself to reduced echelon form (pivot entries 1).
    RowEchelon k = rref(f, Matrix::from_rows(raw));
    for (std::size_t i = 0; i < k.pivots.size(); ++i) out.kernel.push_back(k.reduced.row(i));
    assert(out.rank + out.kernel.size() == m.cols());
    return out;
}

Matrix kernel_matrix(const Field& f, const Matrix& m) {
    RankKernel rk = rank_kernel(f, m);
    Matrix k(m.cols(), rk.kernel.size());
    for (std::size_t j = 0; j < rk.kernel.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = rk.kernel[j][i];
    return k;
}

Matrix cokernel_basis(const Field& f, const Matrix& m) {
    RankKernel rk = rank_kernel(f, m.transpose());
    if (rk.kernel.empty()) return Matrix(0, m.rows());
    return Matrix::from_rows(rk.kernel, m.rows());
}

Matrix column_space(const Field& f, const Matrix& m) {
    RowEchelon e = rref(f, m.transpose());
    Matrix b(m.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = e.reduced(j, i);
    return b;
}

std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ArqError("ShapeMismatch", "solve with incompatible shapes");
    Matrix aug = Matrix::hstack(a, b);
    RowEchelon e = rref(f, aug);
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
    }
    return x;
}

bool is_invertible(const Field& f, const Matrix& a) {
    return a.rows() == a.cols() && rank(f, a) == a.rows();
}

Matrix inverse(const Field& f, const Matrix& a) {
    if (!is_invertible(f, a)) throw ArqError("Singular", "matrix is not invertible");
    return *solve(f, a, Matrix::identity(a.rows()));
}

Matrix pivot_section(const RowEchelon& e) {
    Matrix s(e.reduced.cols(), e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) s(e.pivots[i], i) = 1;
    return s;
}

}  // namespace arq
