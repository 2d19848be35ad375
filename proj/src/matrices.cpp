#include "abelian/matrices.hpp"

#include <omp.h>

#include <sstream>
#include <type_traits>

namespace abelian {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

PolyQ xy_term(int xi, int yi, int m) {
    return PolyQ(Monomial({{var_x(xi, m), 1}, {var_y(yi, m), 1}}), Rational(1));
}

// Subsets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

MatrixQ even_matrix(int d) {
    if (d < 2) throw ParameterError("even_matrix: d >= 2 required");
    int n = 2 * d;
    MatrixQ m(d, d, "even_matrix(d=" + std::to_string(d) + ")");
    auto entry = [&](int i, int j) {
        return xy_term(mod(i + j, n), mod(i - j, n), n) +
               xy_term(mod(i + j + d, n), mod(i - j + d, n), n);
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            m.at(i, j) = entry(i, j);
            // representative shifts i -> i+d, j -> j+d leave the entry fixed
            if (entry(i + d, j) != m.at(i, j) || entry(i, j + d) != m.at(i, j))
                throw InvariantError("even_matrix: representative shift changed an entry");
        }
    return m;
}

MatrixQ odd_matrix(int d) {
    if (d < 2) throw ParameterError("odd_matrix: d >= 2 required");
    int n = 2 * d + 1;
    MatrixQ m(n, n, "odd_matrix(d=" + std::to_string(d) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = xy_term(mod((d + 1) * (i + j), n), mod((d + 1) * (i - j), n), n);
    return m;
}

MatrixQ r_matrix(int d) {
    if (d < 3) throw ParameterError("r_matrix: d >= 3 required");
    int n = 2 * d + 1;
    MatrixQ m(d + 1, n, "r_matrix(d=" + std::to_string(d) + ")");
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = PolyQ(Monomial({{var_x(mod(j + i, n), n), 1}, {var_x(mod(j - i, n), n), 1}}),
                               Rational(1));
    return m;
}

MatrixQ t_matrix(int d) {
    if (d < 3) throw ParameterError("t_matrix: d >= 3 required");
    int n = 2 * d + 1;
    MatrixQ r = r_matrix(d);
    std::map<Variable, PolyQ> subs;
    subs.emplace(var_x(0, n), PolyQ::zero());
    for (int i = 1; i <= d; ++i)
        subs.emplace(var_x(n - i, n), -PolyQ::variable(var_x(i, n)));
    MatrixQ t(d + 1, d + 1, "t_matrix(d=" + std::to_string(d) + ")");
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) t.at(i, j) = r.at(i, j).substituted(subs);
    if (!t.is_skew_symmetric()) throw InvariantError("t_matrix: expected skew symmetry");
    return t;
}

ExactPointQ p0_point(int n) {
    if (n < 6) throw ParameterError("p0_point: n >= 6 required");
    std::vector<Rational> v(n, Rational(0));
    v[1] = 1;
    v[2] = 1;
    v[n - 2] = -1;
    v[n - 1] = -1;
    return ExactPointQ(std::move(v));
}

std::vector<Rational> z0_pminus_coords(int d) {
    std::vector<Rational> z(d, Rational(0));
    z[0] = 1;
    z[1] = 1;
    return z;
}

ExactPointQ point_from_pminus(const std::vector<Rational>& z) {
    int d = static_cast<int>(z.size());
    int n = 2 * d + 1;
    std::vector<Rational> v(n, Rational(0));
    for (int i = 1; i <= d; ++i) {
        v[i] = z[i - 1];
        v[n - i] = -z[i - 1];
    }
    return ExactPointQ(std::move(v));
}

namespace {

template <class K, class K2>
SymbolicMatrix<K2> substitute_point_impl(const SymbolicMatrix<K>& m, Family fam,
                                         const ExactPoint<K2>& pt) {
    SymbolicMatrix<K2> out(m.rows, m.cols, m.provenance + "; substituted family " +
                                               (fam == Family::X ? "x" : "y"));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Polynomial<K2> acc;
            for (const auto& [mono, coeff] : m.at(i, j).terms()) {
                K2 value = [&] {
                    if constexpr (std::is_same_v<K, K2>)
                        return coeff;
                    else
                        return FieldOps<K2>::from_rational(coeff);
                }();
                Monomial::Terms rest;
                bool dead = false;
                for (const auto& [v, e] : mono.terms()) {
                    if (v.family != fam) {
                        rest.emplace_back(v, e);
                        continue;
                    }
                    if (v.index >= pt.size())
                        throw InvariantError("substitute_point: point length mismatch");
                    for (int t = 0; t < e; ++t) value *= pt.coords[v.index];
                    if (FieldOps<K2>::is_zero(value)) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) acc.add_term(Monomial(rest), value);
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

// The substituted family must span the full modulus.
template <class K, class K2>
void check_point_length(const SymbolicMatrix<K>& m, const ExactPoint<K2>& pt) {
    for (const auto& p : m.entries)
        for (const auto& [mono, c] : p.terms()) {
            (void)c;
            for (const auto& [v, e] : mono.terms()) {
                (void)e;
                if (v.modulus != pt.size())
                    throw InvariantError("substitute_point: point length != variable modulus");
                return;  // all entries share one modulus by construction
            }
        }
}

}  // namespace

MatrixQ substitute_point(const MatrixQ& m, Family fam, const ExactPointQ& pt) {
    check_point_length(m, pt);
    return substitute_point_impl(m, fam, pt);
}
MatrixC substitute_point(const MatrixC& m, Family fam, const ExactPointC& pt) {
    check_point_length(m, pt);
    return substitute_point_impl(m, fam, pt);
}
MatrixC substitute_point(const MatrixQ& m, Family fam, const ExactPointC& pt) {
    check_point_length(m, pt);
    return substitute_point_impl(m, fam, pt);
}

namespace {

template <class K>
size_t max_terms_per_entry(const SymbolicMatrix<K>& m) {
    size_t t = 0;
    for (const auto& p : m.entries) t = std::max(t, p.term_count());
    return t;
}

// Laplace expansion along the first remaining row, memoized on the column set.
template <class K>
Polynomial<K> det_recursive(const SymbolicMatrix<K>& m, const std::vector<int>& rows,
                            unsigned cols_mask, std::map<unsigned, Polynomial<K>>* memo,
                            int depth) {
    if (cols_mask == 0) return Polynomial<K>(FieldOps<K>::one());
    if (memo) {
        auto it = memo->find(cols_mask);
        if (it != memo->end()) return it->second;
    }
    Polynomial<K> acc;
    int row = rows[depth];
    int sign = 1;
    for (int j = 0, seen = 0; j < m.cols; ++j) {
        if (!(cols_mask & (1u << j))) continue;
        ++seen;
        const Polynomial<K>& e = m.at(row, j);
        if (!e.is_zero()) {
            Polynomial<K> sub = det_recursive(m, rows, cols_mask & ~(1u << j), memo, depth + 1);
            Polynomial<K> term = e * sub;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    if (memo) memo->emplace(cols_mask, acc);
    return acc;
}

template <class K>
Polynomial<K> det_of_submatrix(const SymbolicMatrix<K>& m, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
    // Re-extract into a dense submatrix for clean indexing.
    SymbolicMatrix<K> sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    std::vector<int> idx(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) idx[i] = static_cast<int>(i);
    std::map<unsigned, Polynomial<K>> memo;
    return det_recursive(sub, idx, (1u << cols.size()) - 1, &memo, 0);
}

template <class K>
Polynomial<K> pfaffian_recursive(const SymbolicMatrix<K>& m, std::vector<int> idx) {
    if (idx.empty()) return Polynomial<K>(FieldOps<K>::one());
    Polynomial<K> acc;
    int i0 = idx[0];
    for (size_t j = 1; j < idx.size(); ++j) {
        const Polynomial<K>& e = m.at(i0, idx[j]);
        if (e.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        Polynomial<K> term = e * pfaffian_recursive(m, std::move(rest));
        if (j % 2 == 0) term = -term;  // sign (-1)^{j-1} over remaining positions
        acc += term;
    }
    return acc;
}

}  // namespace

template <class K>
Polynomial<K> determinant(const SymbolicMatrix<K>& m) {
    if (!m.is_square()) throw InvariantError("determinant: matrix not square");
    if (m.rows > 7 && max_terms_per_entry(m) > 2)
        throw SizeGuardError("determinant: symbolic determinants limited to size <= 7 "
                             "or matrices with <= 2 terms per entry");
    if (m.rows > 12) throw SizeGuardError("determinant: size too large");
    std::vector<int> rows(m.rows), cols(m.cols);
    for (int i = 0; i < m.rows; ++i) rows[i] = i, cols[i] = i;
    return det_of_submatrix(m, rows, cols);
}

template <class K>
std::vector<Polynomial<K>> minors(const SymbolicMatrix<K>& m, int k, bool parallel) {
    if (k < 1 || k > m.rows || k > m.cols) throw ParameterError("minors: bad size");
    auto row_sets = subsets(m.rows, k);
    auto col_sets = subsets(m.cols, k);
    std::vector<Polynomial<K>> out(row_sets.size() * col_sets.size());
    const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < total; ++t) {
        size_t ri = static_cast<size_t>(t) / col_sets.size();
        size_t ci = static_cast<size_t>(t) % col_sets.size();
        out[t] = det_of_submatrix(m, row_sets[ri], col_sets[ci]);
    }
    return out;
}

template <class K>
Polynomial<K> pfaffian(const SymbolicMatrix<K>& m) {
    if (!m.is_skew_symmetric()) throw InvariantError("pfaffian: matrix not skew-symmetric");
    if (m.rows % 2 != 0) return Polynomial<K>();
    std::vector<int> idx(m.rows);
    for (int i = 0; i < m.rows; ++i) idx[i] = i;
    return pfaffian_recursive(m, idx);
}

template <class K>
std::vector<Polynomial<K>> pfaffians(const SymbolicMatrix<K>& m, int size, bool parallel) {
    if (!m.is_skew_symmetric()) throw InvariantError("pfaffians: matrix not skew-symmetric");
    if (size % 2 != 0 || size < 2 || size > m.rows)
        throw ParameterError("pfaffians: size must be even and <= dim");
    auto sets = subsets(m.rows, size);
    std::vector<Polynomial<K>> out(sets.size());
    const long total = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < total; ++t) out[t] = pfaffian_recursive(m, sets[t]);
    return out;
}

template <class K>
int exact_rank(const SymbolicMatrix<K>& m) {
    if (!m.is_scalar()) throw InvariantError("exact_rank: entries must be scalars");
    DenseMatrix<K> d(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) d.at(i, j) = m.at(i, j).coefficient(Monomial::one());
    return rank(std::move(d));
}

template <class K>
std::vector<std::vector<K>> exact_kernel(const SymbolicMatrix<K>& m) {
    if (!m.is_scalar()) throw InvariantError("exact_kernel: entries must be scalars");
    DenseMatrix<K> d(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) d.at(i, j) = m.at(i, j).coefficient(Monomial::one());
    return kernel_basis(std::move(d));
}

template Polynomial<Rational> determinant(const SymbolicMatrix<Rational>&);
template Polynomial<Cyclotomic> determinant(const SymbolicMatrix<Cyclotomic>&);
template std::vector<Polynomial<Rational>> minors(const SymbolicMatrix<Rational>&, int, bool);
template std::vector<Polynomial<Cyclotomic>> minors(const SymbolicMatrix<Cyclotomic>&, int, bool);
template Polynomial<Rational> pfaffian(const SymbolicMatrix<Rational>&);
template Polynomial<Cyclotomic> pfaffian(const SymbolicMatrix<Cyclotomic>&);
template std::vector<Polynomial<Rational>> pfaffians(const SymbolicMatrix<Rational>&, int, bool);
template std::vector<Polynomial<Cyclotomic>> pfaffians(const SymbolicMatrix<Cyclotomic>&, int,
                                                       bool);
template int exact_rank(const SymbolicMatrix<Rational>&);
template int exact_rank(const SymbolicMatrix<Cyclotomic>&);
template std::vector<std::vector<Rational>> exact_kernel(const SymbolicMatrix<Rational>&);
template std::vector<std::vector<Cyclotomic>> exact_kernel(const SymbolicMatrix<Cyclotomic>&);

}  // namespace abelian
