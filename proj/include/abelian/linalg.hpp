#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "abelian/poly.hpp"

namespace abelian {

// Dense exact matrices over a field K, row-major.
template <class K>
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<K> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, FieldOps<K>::zero()) {}
    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class K>
std::vector<int> rref(DenseMatrix<K>& m) {
    using Ops = FieldOps<K>;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (!Ops::is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        K inv = Ops::inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || Ops::is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(DenseMatrix<K> m) {
    return static_cast<int>(rref(m).size());
}

// Kernel basis in reduced echelon form (one vector per free column).
template <class K>
std::vector<std::vector<K>> kernel_basis(DenseMatrix<K> m) {
    using Ops = FieldOps<K>;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(m.cols, Ops::zero());
        v[free] = Ops::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Row space helper for span-membership tests: eliminates rows incrementally.
template <class K>
class RowSpace {
  public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int dimension() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the current space; returns the residual.
    std::vector<K> reduce(std::vector<K> v) const {
        using Ops = FieldOps<K>;
        for (const auto& [piv, row] : rows_) {
            if (Ops::is_zero(v[piv])) continue;
            K f = v[piv];
            for (int j = piv; j < cols_; ++j) v[j] -= f * row[j];
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        using Ops = FieldOps<K>;
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const K& c) { return Ops::is_zero(c); });
    }

    // Returns true if v enlarged the space.
    bool insert(std::vector<K> v) {
        using Ops = FieldOps<K>;
        v = reduce(std::move(v));
        int piv = -1;
        for (int j = 0; j < cols_; ++j)
            if (!Ops::is_zero(v[j])) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        K inv = Ops::inv(v[piv]);
        for (int j = piv; j < cols_; ++j) v[j] *= inv;
        rows_.emplace(piv, std::move(v));
        return true;
    }

    bool same_space(const RowSpace& other) const {
        if (dimension() != other.dimension()) return false;
        for (const auto& [piv, row] : rows_)
            if (!other.contains(row)) return false;
        return true;
    }

  private:
    int cols_;
    std::map<int, std::vector<K>> rows_;  // pivot column -> normalized row
};

// Sparse exact rank over K; rows are sorted (column, coefficient) lists.
// Used by the brute-force Hilbert oracle where rows are generator multiples.
template <class K>
class SparseEliminator {
  public:
    using Row = std::vector<std::pair<int, K>>;

    int rank() const { return static_cast<int>(pivots_.size()); }

    void add_row(Row r) {
        using Ops = FieldOps<K>;
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                K inv = Ops::inv(r.front().second);
                for (auto& [c, v] : r) v *= inv;
                pivots_.emplace(r.front().first, std::move(r));
                return;
            }
            r = axpy(r, -r.front().second, it->second);
        }
    }

  private:
    // a + f*b for sorted sparse rows.
    static Row axpy(const Row& a, const K& f, const Row& b) {
        using Ops = FieldOps<K>;
        Row out;
        out.reserve(a.size() + b.size());
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                out.push_back(*ia++);
            } else if (ia == a.end() || ib->first < ia->first) {
                out.emplace_back(ib->first, f * ib->second);
                ++ib;
            } else {
                K v = ia->second + f * ib->second;
                if (!Ops::is_zero(v)) out.emplace_back(ia->first, std::move(v));
                ++ia, ++ib;
            }
        }
        return out;
    }

    std::map<int, Row> pivots_;  // pivot column -> normalized row
};

}  // namespace abelian
