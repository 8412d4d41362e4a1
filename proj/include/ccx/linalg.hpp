#ifndef CCX_LINALG_HPP
#define CCX_LINALG_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccx/rational.hpp"

namespace ccx {

/// Point of Q^n; doubles as a linear functional via the standard pairing.
using QVector = std::vector<Rational>;

inline Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

inline QVector add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVector sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVector scale(const Rational& t, const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline QVector negate(const QVector& a) { return scale(Rational(-1), a); }

inline QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

inline QVector unit_vector(std::size_t n, std::size_t i) {
    QVector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

inline QVector concat(const QVector& a, const QVector& b) {
    QVector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Lexicographic order used everywhere a canonical ordering is needed.
inline bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Dense rational matrix, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, QVector(cols, Rational(0))) {}
    QMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("matrix: ragged rows");
            QVector r;
            for (long v : row) r.emplace_back(v);
            data_.push_back(std::move(r));
        }
    }
    static QMatrix from_rows(std::vector<QVector> rows) {
        QMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& r : rows)
            if (r.size() != m.cols_) throw std::invalid_argument("matrix: ragged rows");
        m.data_ = std::move(rows);
        return m;
    }
    static QMatrix from_columns(const std::vector<QVector>& cols) {
        std::size_t n = cols.empty() ? 0 : cols.front().size();
        QMatrix m(n, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != n) throw std::invalid_argument("matrix: ragged columns");
            for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }
    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_.at(i).at(j); }
    const Rational& at(std::size_t i, std::size_t j) const { return data_.at(i).at(j); }
    const QVector& row(std::size_t i) const { return data_.at(i); }

    QVector column(std::size_t j) const {
        QVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QVector apply(const QVector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
        QVector y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(data_[i], x);
        return y;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<QVector> data_;
};

namespace detail {

/// Fraction-free (Bareiss) forward elimination over the integer-cleared
/// augmented matrix. Pivot rule: columns left to right, first nonzero row
/// top-down among the unused rows. Returns pivot (row, col) pairs; the
/// matrix is left in echelon form with exact integer entries.
struct Echelon {
    std::vector<std::vector<BigInt>> m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

inline Echelon bareiss_echelon(const QMatrix& A, const QVector* rhs) {
    const std::size_t rows = A.rows();
    const std::size_t cols = A.cols() + (rhs ? 1 : 0);
    Echelon e;
    e.m.assign(rows, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt lcm(1);
        for (std::size_t j = 0; j < A.cols(); ++j)
            lcm = lcm / gcd(lcm, denominator(A.at(i, j))) * denominator(A.at(i, j));
        if (rhs) lcm = lcm / gcd(lcm, denominator((*rhs)[i])) * denominator((*rhs)[i]);
        for (std::size_t j = 0; j < A.cols(); ++j) {
            Rational v = A.at(i, j) * lcm;
            e.m[i][j] = numerator(v);
        }
        if (rhs) {
            Rational v = (*rhs)[i] * lcm;
            e.m[i][cols - 1] = numerator(v);
        }
    }

    BigInt prev(1);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < A.cols() && next_row < rows; ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < rows && e.m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(e.m[next_row], e.m[pivot_row]);
        for (std::size_t i = next_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt t = e.m[next_row][col] * e.m[i][j] - e.m[i][col] * e.m[next_row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.m[i][j] = t;
            }
            e.m[i][col] = 0;
        }
        prev = e.m[next_row][col];
        e.pivots.emplace_back(next_row, col);
        ++next_row;
    }
    return e;
}

} // namespace detail

/// Exact rank over Q.
inline std::size_t rank(const QMatrix& A) {
    return detail::bareiss_echelon(A, nullptr).pivots.size();
}

/// Solves A x = b exactly. Free variables are fixed to 0, so the result is
/// deterministic; returns nullopt when the system is inconsistent.
inline std::optional<QVector> solve_linear_system(const QMatrix& A, const QVector& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    detail::Echelon e = detail::bareiss_echelon(A, &b);
    const std::size_t n = A.cols();
    for (std::size_t i = e.pivots.size(); i < A.rows(); ++i)
        if (e.m[i][n] != 0) return std::nullopt;

    QVector x(n, Rational(0));
    for (std::size_t p = e.pivots.size(); p-- > 0;) {
        auto [r, c] = e.pivots[p];
        Rational acc(e.m[r][n]);
        for (std::size_t j = c + 1; j < n; ++j)
            if (e.m[r][j] != 0) acc -= Rational(e.m[r][j]) * x[j];
        x[c] = acc / Rational(e.m[r][c]);
    }
    return x;
}

/// Deterministic basis of the null space {x : A x = 0}: one vector per free
/// column, that free variable set to 1 and the others to 0.
inline std::vector<QVector> kernel_basis(const QMatrix& A) {
    detail::Echelon e = detail::bareiss_echelon(A, nullptr);
    const std::size_t n = A.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t p = e.pivots.size(); p-- > 0;) {
            auto [r, c] = e.pivots[p];
            Rational acc(0);
            for (std::size_t j = c + 1; j < n; ++j)
                if (e.m[r][j] != 0) acc -= Rational(e.m[r][j]) * v[j];
            v[c] = acc / Rational(e.m[r][c]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ccx

#endif
