#pragma once

#include <string>
#include <vector>

#include "abelian/linalg.hpp"
#include "abelian/poly.hpp"

namespace abelian {

template <class K>
struct ExactPoint {
    std::vector<K> coords;

    explicit ExactPoint(std::vector<K> c) : coords(std::move(c)) {
        bool all_zero = true;
        for (const auto& v : coords)
            if (!FieldOps<K>::is_zero(v)) {
                all_zero = false;
                break;
            }
        if (coords.empty() || all_zero)
            throw ParameterError("ExactPoint: not a projective point (all coordinates zero)");
    }
    int size() const { return static_cast<int>(coords.size()); }
};

using ExactPointQ = ExactPoint<Rational>;
using ExactPointC = ExactPoint<Cyclotomic>;

template <class K>
struct SymbolicMatrix {
    int rows = 0, cols = 0;
    std::vector<Polynomial<K>> entries;  // row-major
    std::string provenance;

    SymbolicMatrix() = default;
    SymbolicMatrix(int r, int c, std::string prov = "")
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c), provenance(std::move(prov)) {}

    Polynomial<K>& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Polynomial<K>& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * cols + j];
    }

    bool is_square() const { return rows == cols; }
    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i) {
            if (!at(i, i).is_zero()) return false;
            for (int j = i + 1; j < cols; ++j)
                if (at(i, j) != -at(j, i)) return false;
        }
        return true;
    }
    bool is_scalar() const {
        for (const auto& p : entries)
            if (p.degree() > 0) return false;
        return true;
    }

    SymbolicMatrix transposed() const {
        SymbolicMatrix t(cols, rows, provenance + "; transposed");
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

using MatrixQ = SymbolicMatrix<Rational>;
using MatrixC = SymbolicMatrix<Cyclotomic>;

// M_d = (x_{i+j} y_{i-j} + x_{i+j+d} y_{i-j+d}), indices mod 2d, rows/cols
// indexed by representatives 0..d-1. Well-definedness under representative
// shifts i -> i+d is asserted at construction.
MatrixQ even_matrix(int d);

// M'_d = (x_{(d+1)(i+j)} y_{(d+1)(i-j)}), indices mod 2d+1, (2d+1) x (2d+1).
MatrixQ odd_matrix(int d);

// R_d = (x_{j+i} x_{j-i}), 0 <= i <= d, 0 <= j <= 2d, indices mod 2d+1.
MatrixQ r_matrix(int d);

// Leftmost (d+1) x (d+1) block of R_d restricted to P^- (x_0 -> 0,
// x_{2d+1-i} -> -x_i); skew-symmetric by construction.
MatrixQ t_matrix(int d);

// The degenerate point p_0 = (0:1:1:0:...:0:-1:-1) in P^{n-1}.
ExactPointQ p0_point(int n);
// P^- coordinates (x_1..x_d) of p_0 for n = 2d+1.
std::vector<Rational> z0_pminus_coords(int d);
// Full coordinates from P^- coordinates (x_0 = 0, x_{n-i} = -x_i), n = 2d+1.
ExactPointQ point_from_pminus(const std::vector<Rational>& z);

// Termwise substitution of a point for one variable family.
MatrixQ substitute_point(const MatrixQ& m, Family fam, const ExactPointQ& pt);
MatrixC substitute_point(const MatrixC& m, Family fam, const ExactPointC& pt);
MatrixC substitute_point(const MatrixQ& m, Family fam, const ExactPointC& pt);

// Symbolic determinant by memoized cofactor expansion. Guarded: size <= 7, or
// every entry has at most 2 terms.
template <class K>
Polynomial<K> determinant(const SymbolicMatrix<K>& m);

// All k x k minors, row/column subsets in lexicographic order.
template <class K>
std::vector<Polynomial<K>> minors(const SymbolicMatrix<K>& m, int k, bool parallel = true);

// Pfaffian of a skew-symmetric matrix; pf([[0,a],[-a,0]]) = a.
template <class K>
Polynomial<K> pfaffian(const SymbolicMatrix<K>& m);

// Pfaffians of all principal 2k x 2k submatrices (row = column subsets,
// lexicographic order). Requires skew input.
template <class K>
std::vector<Polynomial<K>> pfaffians(const SymbolicMatrix<K>& m, int size, bool parallel = true);

// Exact linear algebra on scalar (degree <= 0) matrices.
template <class K>
int exact_rank(const SymbolicMatrix<K>& m);
template <class K>
std::vector<std::vector<K>> exact_kernel(const SymbolicMatrix<K>& m);

extern template Polynomial<Rational> determinant(const SymbolicMatrix<Rational>&);
extern template Polynomial<Cyclotomic> determinant(const SymbolicMatrix<Cyclotomic>&);
extern template std::vector<Polynomial<Rational>> minors(const SymbolicMatrix<Rational>&, int,
                                                         bool);
extern template std::vector<Polynomial<Cyclotomic>> minors(const SymbolicMatrix<Cyclotomic>&, int,
                                                           bool);
extern template Polynomial<Rational> pfaffian(const SymbolicMatrix<Rational>&);
extern template Polynomial<Cyclotomic> pfaffian(const SymbolicMatrix<Cyclotomic>&);
extern template std::vector<Polynomial<Rational>> pfaffians(const SymbolicMatrix<Rational>&, int,
                                                            bool);
extern template std::vector<Polynomial<Cyclotomic>> pfaffians(const SymbolicMatrix<Cyclotomic>&,
                                                              int, bool);
extern template int exact_rank(const SymbolicMatrix<Rational>&);
extern template int exact_rank(const SymbolicMatrix<Cyclotomic>&);
extern template std::vector<std::vector<Rational>> exact_kernel(const SymbolicMatrix<Rational>&);
extern template std::vector<std::vector<Cyclotomic>> exact_kernel(
    const SymbolicMatrix<Cyclotomic>&);

}  // namespace abelian
