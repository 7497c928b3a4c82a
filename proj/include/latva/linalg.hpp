#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latva/rational.hpp"

namespace latva {

/// Dense matrix over Q, row-major. Sized for windowed module computations
/// (tens to a few hundred rows), everything exact.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const QVec& row) {
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Rational inv = m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

/// Basis of the right nullspace {x : Mx = 0}.
inline std::vector<QVec> nullspace(QMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(m.cols(), Rational(0));
        v[free_c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally maintained row space in reduced echelon form. Used for
/// closure/spanning computations: add vectors, query dimension and membership.
class SpanBuilder {
  public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    bool full() const { return rows_.size() == dim_; }

    /// Reduces v against the current basis; returns true if it enlarged the span.
    bool add(QVec v) {
        reduce(v);
        std::size_t lead = leading(v);
        if (lead == dim_) return false;
        Rational inv = v[lead];
        for (auto& x : v) x /= inv;
        // keep rows sorted by leading index and back-substitute
        for (auto& row : rows_) {
            if (row.vec[lead] != 0) {
                Rational f = row.vec[lead];
                for (std::size_t j = 0; j < dim_; ++j) row.vec[j] -= f * v[j];
            }
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && rows_[pos].lead < lead) ++pos;
        rows_.insert(rows_.begin() + pos, Row{lead, std::move(v)});
        return true;
    }

    bool contains(QVec v) const {
        reduce(v);
        return leading(v) == dim_;
    }

    std::vector<QVec> basis() const {
        std::vector<QVec> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.vec);
        return out;
    }

  private:
    struct Row {
        std::size_t lead;
        QVec vec;
    };

    void reduce(QVec& v) const {
        for (const auto& row : rows_) {
            if (v[row.lead] != 0) {
                Rational f = v[row.lead];
                for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row.vec[j];
            }
        }
    }

    std::size_t leading(const QVec& v) const {
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) return j;
        return dim_;
    }

    std::size_t dim_;
    std::vector<Row> rows_;
};

}  // namespace latva
