#pragma once

// Dense exact linear algebra over a field F (Rat or Fp). Everything here
// is deterministic: reduced row echelon forms are canonical, so subspace
// equality is plain row-by-row comparison.

#include "gpa/error.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

namespace gpa {

template <class F>
using Vec = std::vector<F>;

template <class F>
bool vec_is_zero(const Vec<F>& v) {
    for (const F& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

// y += c * x
template <class F>
void axpy(Vec<F>& y, const F& c, const Vec<F>& x) {
    assert(y.size() == x.size());
    if (c.is_zero())
        return;
    for (size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero())
            y[i] += c * x[i];
    }
}

template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    F& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const F& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + c];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = F(1);
        return m;
    }

    bool is_zero() const {
        for (const F& x : a)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool is_square() const { return rows == cols; }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols == y.rows);
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const F& v = x.at(i, k);
                if (v.is_zero())
                    continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (!y.at(k, j).is_zero())
                        r.at(i, j) += v * y.at(k, j);
                }
            }
        return r;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] += y.a[i];
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] -= y.a[i];
        return r;
    }

    Mat scaled(const F& c) const {
        Mat r = *this;
        for (F& x : r.a)
            x *= c;
        return r;
    }

    Vec<F> apply(const Vec<F>& v) const {
        assert(static_cast<int>(v.size()) == cols);
        Vec<F> r(rows, F(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero())
                    r[i] += at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    F trace() const {
        assert(rows == cols);
        F t(0);
        for (int i = 0; i < rows; ++i)
            t += at(i, i);
        return t;
    }
};

// In-place reduced row echelon form. Returns the rank; pivot columns are
// appended to *pivots when given.
template <class F>
int rref(Mat<F>& m, std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pr = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (!m.at(r, c).is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0)
            continue;
        if (pr != rank)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(pr, j), m.at(rank, j));
        F inv = F(1) / m.at(rank, c);
        for (int j = c; j < m.cols; ++j)
            if (!m.at(rank, j).is_zero())
                m.at(rank, j) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, c).is_zero())
                continue;
            F f = m.at(r, c);
            for (int j = c; j < m.cols; ++j)
                if (!m.at(rank, j).is_zero())
                    m.at(r, j) -= f * m.at(rank, j);
        }
        if (pivots)
            pivots->push_back(c);
        ++rank;
    }
    return rank;
}

template <class F>
int rank_of(Mat<F> m) {
    return rref(m);
}

// Basis of { x : m x = 0 }, ordered by free column.
template <class F>
std::vector<Vec<F>> nullspace(Mat<F> m) {
    std::vector<int> piv;
    int rank = rref(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<Vec<F>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_piv[fc])
            continue;
        Vec<F> x(m.cols, F(0));
        x[fc] = F(1);
        for (int r = 0; r < rank; ++r)
            x[piv[r]] = -m.at(r, fc);
        basis.push_back(std::move(x));
    }
    return basis;
}

// One solution of m x = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& m, const Vec<F>& b) {
    assert(static_cast<int>(b.size()) == m.rows);
    Mat<F> aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> piv;
    int rank = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols)
        return std::nullopt; // inconsistent
    Vec<F> x(m.cols, F(0));
    for (int r = 0; r < rank; ++r)
        x[piv[r]] = aug.at(r, m.cols);
    return x;
}

template <class F>
bool is_invertible(const Mat<F>& m) {
    return m.is_square() && rank_of(m) == m.rows;
}

/// Incremental reduced row echelon basis of a subspace. Rows are kept fully
/// reduced and sorted by leading column, which makes the representation
/// canonical: two Echelon objects describe the same subspace iff their rows
/// compare equal.
template <class F>
class Echelon {
    std::vector<Vec<F>> rows_;
    std::vector<int> lead_;
    int width_ = 0;

public:
    Echelon() = default;
    explicit Echelon(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<int>& leads() const { return lead_; }

    Vec<F> reduce(Vec<F> v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const F& c = v[lead_[i]];
            if (!c.is_zero())
                axpy(v, -c, rows_[i]);
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return vec_is_zero(reduce(v)); }

    /// Insert a vector; returns true when the dimension grew.
    bool insert(Vec<F> v) {
        assert(static_cast<int>(v.size()) == width_);
        v = reduce(std::move(v));
        int lead = -1;
        for (int i = 0; i < width_; ++i) {
            if (!v[i].is_zero()) {
                lead = i;
                break;
            }
        }
        if (lead < 0)
            return false;
        F inv = F(1) / v[lead];
        for (F& x : v)
            if (!x.is_zero())
                x *= inv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const F& c = rows_[i][lead];
            if (!c.is_zero())
                axpy(rows_[i], -c, v);
        }
        auto pos = std::lower_bound(lead_.begin(), lead_.end(), lead);
        size_t idx = static_cast<size_t>(pos - lead_.begin());
        lead_.insert(pos, lead);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    friend bool operator==(const Echelon& a, const Echelon& b) {
        return a.width_ == b.width_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Echelon& a, const Echelon& b) {
        return !(a == b);
    }

    /// Subspace containment: every row of *this reduces to zero against o.
    bool contained_in(const Echelon& o) const {
        for (const auto& r : rows_)
            if (!o.contains(r))
                return false;
        return true;
    }

    std::string fingerprint() const {
        std::string s;
        for (const auto& r : rows_) {
            for (const F& x : r) {
                s += x.str();
                s += ',';
            }
            s += ';';
        }
        return s;
    }
};

// Solve x = sum c_i rows[i]; requires x in the span. Coordinates follow the
// echelon row order.
template <class F>
Vec<F> coordinates_in(const Echelon<F>& e, Vec<F> x) {
    Vec<F> coeff(e.dim(), F(0));
    const auto& rows = e.rows();
    const auto& leads = e.leads();
    for (int i = 0; i < e.dim(); ++i) {
        const F& c = x[leads[i]];
        if (!c.is_zero()) {
            coeff[i] = c;
            axpy(x, -c, rows[i]);
        }
    }
    if (!vec_is_zero(x))
        throw Error("coordinates_in: vector outside subspace");
    return coeff;
}

} // namespace gpa
