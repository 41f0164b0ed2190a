#pragma once

#include <stdexcept>
#include <vector>

namespace weyltk {

/// Field-generic dense exact linear algebra; K is a field object
/// (RatField, PrimeField).  Matrices are row vectors of rows.
template <class K>
using Vec = std::vector<typename K::Elem>;
template <class K>
using Mat = std::vector<std::vector<typename K::Elem>>;

template <class K>
Mat<K> identity_matrix(const K& k, int n) {
    Mat<K> m(n, Vec<K>(n, k.zero()));
    for (int i = 0; i < n; ++i) m[i][i] = k.one();
    return m;
}

template <class K>
Mat<K> mat_mul(const K& k, const Mat<K>& a, const Mat<K>& b) {
    size_t n = a.size(), m = b[0].size(), inner = b.size();
    Mat<K> r(n, Vec<K>(m, k.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < inner; ++t) {
            if (k.is_zero(a[i][t])) continue;
            for (size_t j = 0; j < m; ++j)
                r[i][j] = k.add(r[i][j], k.mul(a[i][t], b[t][j]));
        }
    return r;
}

template <class K>
Vec<K> mat_vec(const K& k, const Mat<K>& a, const Vec<K>& x) {
    Vec<K> r(a.size(), k.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            r[i] = k.add(r[i], k.mul(a[i][j], x[j]));
    return r;
}

template <class K>
Mat<K> transpose(const K& k, const Mat<K>& a) {
    if (a.empty()) return {};
    Mat<K> r(a[0].size(), Vec<K>(a.size(), k.zero()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

/// In-place row echelon; returns rank.
template <class K>
int echelon(const K& k, Mat<K>& m) {
    int rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && k.is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        auto invp = k.inv(m[rank][col]);
        for (size_t j = col; j < cols; ++j) m[rank][j] = k.mul(m[rank][j], invp);
        for (size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(i) == rank || k.is_zero(m[i][col])) continue;
            auto f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

template <class K>
int rank_of(const K& k, Mat<K> m) {
    return echelon(k, m);
}

/// Unique solution of a square nonsingular system; throws on singular input.
template <class K>
Vec<K> solve_square(const K& k, Mat<K> a, Vec<K> b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    int rank = echelon(k, a);
    if (static_cast<size_t>(rank) != n)
        throw std::domain_error("solve_square: singular system");
    Vec<K> x(n, k.zero());
    for (size_t i = 0; i < n; ++i) {
        // row i has pivot at column i after full reduction of a nonsingular system
        x[i] = a[i][n];
    }
    return x;
}

/// Basis of the right null space of a (rows are equations).
template <class K>
Mat<K> nullspace_basis(const K& k, Mat<K> a, int ncols) {
    int rank = echelon(k, a);
    std::vector<int> pivotCol(rank, -1);
    std::vector<bool> isPivot(ncols, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < ncols; ++c) {
            if (!k.is_zero(a[r][c])) {
                pivotCol[r] = c;
                isPivot[c] = true;
                break;
            }
        }
    }
    Mat<K> basis;
    for (int freeCol = 0; freeCol < ncols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        Vec<K> v(ncols, k.zero());
        v[freeCol] = k.one();
        for (int r = 0; r < rank; ++r) {
            // pivot entry is 1 after echelon
            v[pivotCol[r]] = k.neg(a[r][freeCol]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// dim(span(a) ∩ span(b)) = rank a + rank b - rank(a ⊔ b).
template <class K>
int intersection_dim(const K& k, const Mat<K>& a, const Mat<K>& b) {
    Mat<K> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(k, a) + rank_of(k, b) - rank_of(k, both);
}

template <class K>
bool mat_eq(const K& k, const Mat<K>& a, const Mat<K>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!k.eq(a[i][j], b[i][j])) return false;
    }
    return true;
}

} // namespace weyltk
