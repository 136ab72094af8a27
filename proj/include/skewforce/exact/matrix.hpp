#ifndef SKEWFORCE_EXACT_MATRIX_HPP
#define SKEWFORCE_EXACT_MATRIX_HPP

#include <utility>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/rational.hpp"
#include "skewforce/graph.hpp"

namespace skewforce {

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be non-negative");
    }

    static RationalMatrix adjacency(const Graph& g) {
        RationalMatrix a(g.order(), g.order());
        for (const Edge& e : g.edges()) {
            a(e.u, e.v) = 1;
            a(e.v, e.u) = 1;
        }
        return a;
    }

    // Columns of the result are the given vectors.
    static RationalMatrix from_columns(int rows, const std::vector<RationalVector>& columns) {
        RationalMatrix m(rows, static_cast<int>(columns.size()));
        for (int c = 0; c < m.cols(); ++c) {
            if (static_cast<int>(columns[static_cast<std::size_t>(c)].size()) != rows)
                throw ValidationError("column length mismatch");
            for (int r = 0; r < rows; ++r) m(r, c) = columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        }
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational& operator()(int r, int c) { return data_[index(r, c)]; }
    const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

    RationalVector operator*(const RationalVector& x) const {
        if (static_cast<int>(x.size()) != cols_) throw ValidationError("matrix-vector dimension mismatch");
        RationalVector y(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0) y[static_cast<std::size_t>(r)] += (*this)(r, c) * x[static_cast<std::size_t>(c)];
        return y;
    }

    // [this | other]
    RationalMatrix augment(const RationalMatrix& other) const {
        if (other.rows_ != rows_) throw ValidationError("augment needs equal row counts");
        RationalMatrix m(rows_, cols_ + other.cols_);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
            for (int c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
        }
        return m;
    }

    RationalMatrix select_rows(const std::vector<int>& which) const {
        RationalMatrix m(static_cast<int>(which.size()), cols_);
        for (std::size_t i = 0; i < which.size(); ++i)
            for (int c = 0; c < cols_; ++c) m(static_cast<int>(i), c) = (*this)(which[i], c);
        return m;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || c < 0 || r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
        return static_cast<std::size_t>(r * cols_ + c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Row echelon form produced by Bareiss fraction-free elimination. Every
// intermediate entry is a minor of the (row-scaled) input, so all divisions
// are exact and entries stay integral.
struct Echelon {
    int cols = 0;
    std::vector<IntegerVector> rows;  // nonzero rows only, in echelon order
    std::vector<int> pivots;          // pivot column of each row

    int rank() const noexcept { return static_cast<int>(rows.size()); }
};

inline Echelon fraction_free_echelon(const RationalMatrix& a) {
    // Clear denominators row by row; row scaling keeps rank and kernel.
    std::vector<IntegerVector> m(static_cast<std::size_t>(a.rows()));
    for (int r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        for (int c = 0; c < a.cols(); ++c) l = lcm(l, a(r, c).get_den());
        auto& row = m[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(a.cols()));
        for (int c = 0; c < a.cols(); ++c) row.push_back(Integer(a(r, c) * l));
    }

    Echelon out;
    out.cols = a.cols();
    const int rows = a.rows();
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < a.cols() && r < rows; ++c) {
        int p = r;
        while (p < rows && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
        const IntegerVector& piv = m[static_cast<std::size_t>(r)];
        const Integer& pv = piv[static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            IntegerVector& row = m[static_cast<std::size_t>(i)];
            const Integer f = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < a.cols(); ++j) {
                Integer t = pv * row[static_cast<std::size_t>(j)] - f * piv[static_cast<std::size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                row[static_cast<std::size_t>(j)] = std::move(t);
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pv;
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(static_cast<std::size_t>(r));
    out.rows = std::move(m);
    return out;
}

inline int rank(const RationalMatrix& a) { return fraction_free_echelon(a).rank(); }

// Basis of {x : a x = 0}, one primitive integer vector per free column, by
// back substitution on the fraction-free echelon form.
inline std::vector<IntegerVector> kernel_basis(const RationalMatrix& a) {
    const Echelon e = fraction_free_echelon(a);
    std::vector<char> is_pivot(static_cast<std::size_t>(a.cols()), 0);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<IntegerVector> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RationalVector x(static_cast<std::size_t>(a.cols()));
        x[static_cast<std::size_t>(f)] = 1;
        for (int i = e.rank() - 1; i >= 0; --i) {
            const IntegerVector& row = e.rows[static_cast<std::size_t>(i)];
            const int p = e.pivots[static_cast<std::size_t>(i)];
            Rational s = 0;
            for (int j = p + 1; j < a.cols(); ++j)
                if (row[static_cast<std::size_t>(j)] != 0 && x[static_cast<std::size_t>(j)] != 0)
                    s += Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(p)] = -s / Rational(row[static_cast<std::size_t>(p)]);
        }
        basis.push_back(to_primitive_integer(x));
    }
    return basis;
}

} // namespace skewforce

#endif // SKEWFORCE_EXACT_MATRIX_HPP
