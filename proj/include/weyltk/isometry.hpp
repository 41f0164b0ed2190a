#pragma once

#include "weyltk/fields.hpp"
#include "weyltk/linalg.hpp"
#include "weyltk/partition.hpp"
#include "weyltk/signed_perm.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace weyltk {

/// A vector space with the alternating or symmetric form realizing the
/// block decomposition used by the explicit class construction.  Basis
/// layout: for SP, blocks (V_i, V'_i) for i = 1..k, each of dimension
/// bar_p_i; for the orthogonal kinds, Z' then Z'' then (V_i, V'_i) for
/// i = 2..k.  Each labeled subspace is a contiguous coordinate range.
template <class K>
struct FormedSpace {
    GroupKind kind = GroupKind::SP;
    int n = 0;
    int dim = 0;
    Mat<K> gram;
    // coordinate bookkeeping
    std::vector<std::pair<int, int>> v_block, vp_block; // [start,len] per i (1-based i stored at i-1)
    std::pair<int, int> zp_block{0, 0}, zpp_block{0, 0};
};

/// The witness: the semisimple isometry g, its eigenvalue list, the solved
/// coefficients and the distinguished vectors v_t.
template <class K>
struct ClassWitness {
    FormedSpace<K> space;
    std::vector<typename K::Elem> lambdas; // lambda_i for i = 1..k (SP) / 2..k (orth)
    Mat<K> g, g_inv;
    Mat<K> c;        // c[t-1]: row of solved coefficients per t
    Mat<K> v;        // v[t-1]: the vector v_t
    PartitionSeq p;
    ClassWitness(FormedSpace<K> s, PartitionSeq pp) : space(std::move(s)), p(std::move(pp)) {}
};

/// One verified intersection-dimension entry: dim(V'_{vp} ∩ V_{v}) == value.
struct FlagDimEntry {
    int r = 0;       // block index
    int i = 0;       // position within the block (0 for the two end patterns)
    int vp = 0, v = 0;
    int value = 0;
};

template <class K>
struct FlagPair {
    Mat<K> gram;                 // copy for convenience
    std::vector<Mat<K>> V, Vp;   // V[h], Vp[h] spanning rows, h = 0..dim
    std::vector<FlagDimEntry> dimension_table;
};

/// Thrown when no valid eigenvalue list can be drawn (field too small).
class lambda_selection_error : public std::runtime_error {
public:
    explicit lambda_selection_error(const std::string& w) : std::runtime_error(w) {}
};

namespace detail {

template <class K>
typename K::Elem pow_elem(const K& k, const typename K::Elem& a, int e) {
    typename K::Elem r = k.one();
    typename K::Elem base = e >= 0 ? a : k.inv(a);
    for (int i = 0; i < std::abs(e); ++i) r = k.mul(r, base);
    return r;
}

/// lambda^j - lambda^{-j} or + depending on sign.
template <class K>
typename K::Elem sym_power(const K& k, const typename K::Elem& a, int j, int sign) {
    auto pj = pow_elem(k, a, j);
    auto mj = pow_elem(k, a, -j);
    return sign > 0 ? k.add(pj, mj) : k.sub(pj, mj);
}

template <class K>
Mat<K> coefficient_system_sp(const K& k, const std::vector<typename K::Elem>& lambdas, int pt) {
    Mat<K> m(pt, Vec<K>(pt, k.zero()));
    for (int j = 1; j <= pt; ++j)
        for (int i = 1; i <= pt; ++i)
            m[j - 1][i - 1] = sym_power(k, lambdas[i - 1], j, -1);
    return m;
}

template <class K>
Mat<K> coefficient_system_orth(const K& k, const std::vector<typename K::Elem>& lambdas, int pt) {
    // unknown order: c_{t,1}, c_{t,-1}, c_{t,lambda_2}, ..., c_{t,lambda_{pt}}
    Mat<K> m(pt + 1, Vec<K>(pt + 1, k.zero()));
    for (int j = 0; j <= pt; ++j) {
        m[j][0] = k.one();
        m[j][1] = j % 2 == 0 ? k.one() : k.neg(k.one());
        for (int i = 2; i <= pt; ++i)
            m[j][i] = sym_power(k, lambdas[i - 2], j, +1);
    }
    return m;
}

} // namespace detail

/// Solves the per-part linear systems and assembles the witness.
/// Preconditions on lambdas: pairwise distinct, never mutually inverse, and
/// distinct from 0, 1, -1.  For the orthogonal kinds the list has k-1
/// entries (indices 2..k) and every solved c_{t,1}, c_{t,-1} must be
/// nonzero so the diagonal Gram blocks stay nondegenerate; violations throw.
template <class K>
ClassWitness<K> build_class_rep(const PartitionSeq& p, GroupKind kind,
                                const std::vector<typename K::Elem>& lambdas, const K& k) {
    auto bp = conjugate_counts(p);
    int kk = p.part(1);
    int sigma = p.sigma();
    int kap = kappa(kind);
    if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0)
        throw std::invalid_argument("build_class_rep: SO_EVEN requires even sigma");
    int expectLams = kind == GroupKind::SP ? kk : kk - 1;
    if (static_cast<int>(lambdas.size()) != expectLams)
        throw std::invalid_argument("build_class_rep: expected " + std::to_string(expectLams) +
                                    " eigenvalues");
    for (size_t i = 0; i < lambdas.size(); ++i) {
        const auto& li = lambdas[i];
        if (k.is_zero(li) || k.eq(li, k.one()) || k.eq(li, k.neg(k.one())))
            throw std::invalid_argument("build_class_rep: eigenvalues must avoid 0, 1, -1");
        for (size_t j = 0; j < lambdas.size(); ++j) {
            if (i < j && k.eq(li, lambdas[j]))
                throw std::invalid_argument("build_class_rep: eigenvalues must be distinct");
            if (k.eq(li, k.inv(lambdas[j])))
                throw std::invalid_argument("build_class_rep: eigenvalues must avoid inverses");
        }
    }

    FormedSpace<K> sp;
    sp.kind = kind;
    sp.n = p.n();
    sp.dim = 2 * p.n() + kap;
    int cursor = 0;
    int iLow = kind == GroupKind::SP ? 1 : 2;
    if (kind != GroupKind::SP) {
        int dzp = sigma + kap - p.kappa_sigma();
        int dzpp = sigma + p.kappa_sigma();
        sp.zp_block = {cursor, dzp};
        cursor += dzp;
        sp.zpp_block = {cursor, dzpp};
        cursor += dzpp;
    }
    sp.v_block.assign(kk, {0, 0});
    sp.vp_block.assign(kk, {0, 0});
    for (int i = iLow; i <= kk; ++i) {
        sp.v_block[i - 1] = {cursor, bp[i - 1]};
        cursor += bp[i - 1];
        sp.vp_block[i - 1] = {cursor, bp[i - 1]};
        cursor += bp[i - 1];
    }
    if (cursor != sp.dim) throw std::logic_error("build_class_rep: dimension bookkeeping");

    ClassWitness<K> w(sp, p);
    w.lambdas = lambdas;

    // solve the coefficient systems
    for (int t = 1; t <= sigma; ++t) {
        int pt = p.part(t);
        if (kind == GroupKind::SP) {
            std::vector<typename K::Elem> lam(lambdas.begin(), lambdas.begin() + pt);
            Mat<K> m = detail::coefficient_system_sp(k, lam, pt);
            Vec<K> rhs(pt, k.zero());
            rhs[pt - 1] = k.neg(k.one());
            w.c.push_back(solve_square(k, m, rhs));
        } else {
            std::vector<typename K::Elem> lam(lambdas.begin(),
                                              lambdas.begin() + std::max(0, pt - 1));
            Mat<K> m = detail::coefficient_system_orth(k, lam, pt);
            Vec<K> rhs(pt + 1, k.zero());
            rhs[pt] = k.one();
            Vec<K> sol = solve_square(k, m, rhs);
            if (k.is_zero(sol[0]) || k.is_zero(sol[1]))
                throw std::invalid_argument(
                    "build_class_rep: eigenvalue draw makes a diagonal Gram entry vanish");
            w.c.push_back(std::move(sol));
        }
    }

    // gram and g
    w.space.gram.assign(sp.dim, Vec<K>(sp.dim, k.zero()));
    w.g.assign(sp.dim, Vec<K>(sp.dim, k.zero()));
    w.g_inv.assign(sp.dim, Vec<K>(sp.dim, k.zero()));
    auto& gram = w.space.gram;

    // basis index of v_{t,i} / v'_{t,i}: position of t among {t' : p_{t'} >= i}
    auto slot = [&](int t, int i) {
        int pos = 0;
        for (int t2 = 1; t2 < t; ++t2)
            if (p.part(t2) >= i) ++pos;
        return pos;
    };

    if (kind == GroupKind::SP) {
        for (int i = 1; i <= kk; ++i) {
            auto [vs, vl] = sp.v_block[i - 1];
            auto [ps, pl] = sp.vp_block[i - 1];
            for (int t = 1; t <= sigma; ++t) {
                if (p.part(t) < i) continue;
                int s = slot(t, i);
                auto cti = w.c[t - 1][i - 1];
                gram[vs + s][ps + s] = cti;
                gram[ps + s][vs + s] = k.neg(cti);
            }
            for (int s = 0; s < vl; ++s) {
                w.g[vs + s][vs + s] = lambdas[i - 1];
                w.g_inv[vs + s][vs + s] = k.inv(lambdas[i - 1]);
            }
            for (int s = 0; s < pl; ++s) {
                w.g[ps + s][ps + s] = k.inv(lambdas[i - 1]);
                w.g_inv[ps + s][ps + s] = lambdas[i - 1];
            }
        }
    } else {
        auto [zs, zl] = sp.zp_block;
        auto [ws, wl] = sp.zpp_block;
        for (int t = 1; t <= sigma; ++t) {
            gram[zs + t - 1][zs + t - 1] = w.c[t - 1][0];
            gram[ws + t - 1][ws + t - 1] = w.c[t - 1][1];
        }
        for (int s = sigma; s < zl; ++s) gram[zs + s][zs + s] = k.one(); // spare slot
        for (int s = sigma; s < wl; ++s) gram[ws + s][ws + s] = k.one();
        for (int s = 0; s < zl; ++s) {
            w.g[zs + s][zs + s] = k.one();
            w.g_inv[zs + s][zs + s] = k.one();
        }
        for (int s = 0; s < wl; ++s) {
            w.g[ws + s][ws + s] = k.neg(k.one());
            w.g_inv[ws + s][ws + s] = k.neg(k.one());
        }
        for (int i = 2; i <= kk; ++i) {
            auto [vs, vl] = sp.v_block[i - 1];
            auto [ps, pl] = sp.vp_block[i - 1];
            for (int t = 1; t <= sigma; ++t) {
                if (p.part(t) < i) continue;
                int s = slot(t, i);
                auto cti = w.c[t - 1][i]; // unknowns: c1, c-1, c_{lambda_2}, ...
                gram[vs + s][ps + s] = cti;
                gram[ps + s][vs + s] = cti;
            }
            for (int s = 0; s < vl; ++s) {
                w.g[vs + s][vs + s] = lambdas[i - 2];
                w.g_inv[vs + s][vs + s] = k.inv(lambdas[i - 2]);
            }
            for (int s = 0; s < pl; ++s) {
                w.g[ps + s][ps + s] = k.inv(lambdas[i - 2]);
                w.g_inv[ps + s][ps + s] = lambdas[i - 2];
            }
        }
    }

    // nondegeneracy and isometry checks
    if (rank_of(k, gram) != sp.dim)
        throw std::logic_error("build_class_rep: degenerate form");
    {
        Mat<K> gtG = mat_mul(k, transpose(k, w.g), mat_mul(k, gram, w.g));
        if (!mat_eq(k, gtG, gram))
            throw std::logic_error("build_class_rep: g is not an isometry");
    }

    // the vectors v_t
    for (int t = 1; t <= sigma; ++t) {
        Vec<K> vt(sp.dim, k.zero());
        if (kind != GroupKind::SP) {
            vt[sp.zp_block.first + t - 1] = k.one();
            vt[sp.zpp_block.first + t - 1] = k.one();
        }
        for (int i = iLow; i <= kk; ++i) {
            if (p.part(t) < i) continue;
            int s = slot(t, i);
            vt[sp.v_block[i - 1].first + s] = k.one();
            vt[sp.vp_block[i - 1].first + s] = k.one();
        }
        w.v.push_back(std::move(vt));
    }
    return w;
}

/// Exact check of the orthogonality pattern (g^j v_t, v_{t'}) = [t=t'][j=-p_t]
/// for all t, t' and j in [-p_t, p_t-1].  On failure returns false and the
/// offending triple.
template <class K>
bool verify_orthogonality(const ClassWitness<K>& w, const K& k,
                          std::optional<std::tuple<int, int, int>>* offending = nullptr) {
    int sigma = w.p.sigma();
    for (int t = 1; t <= sigma; ++t) {
        Vec<K> cur = w.v[t - 1];
        // start at j = -p_t
        for (int s = 0; s < w.p.part(t); ++s) cur = mat_vec(k, w.g_inv, cur);
        for (int j = -w.p.part(t); j <= w.p.part(t) - 1; ++j) {
            for (int t2 = 1; t2 <= sigma; ++t2) {
                typename K::Elem form = k.zero();
                for (int a = 0; a < w.space.dim; ++a) {
                    if (k.is_zero(cur[a])) continue;
                    for (int b = 0; b < w.space.dim; ++b)
                        form = k.add(form, k.mul(cur[a], k.mul(w.space.gram[a][b], w.v[t2 - 1][b])));
                }
                bool expectOne = (t2 == t) && (j == -w.p.part(t));
                if (expectOne ? !k.eq(form, k.one()) : !k.is_zero(form)) {
                    if (offending) *offending = std::make_tuple(t, t2, j);
                    return false;
                }
            }
            cur = mat_vec(k, w.g, cur);
        }
    }
    return true;
}

/// Builds the two complete isotropic flags spanned by the g-orbit vectors,
/// extends them by orthogonal complements, and checks the four displayed
/// intersection-dimension patterns, isotropy, and g V = V'.
template <class K>
FlagPair<K> build_flags(const ClassWitness<K>& w, const K& k);

/// Extracts the Weyl-group element encoding the dimension-jump profile of
/// the two flags.  For an odd-dimensional space the middle index is removed.
template <class K>
SignedPerm relative_position(const FlagPair<K>& f, const K& k);

/// Centralizer dimension inside the isometry Lie algebra, computed from the
/// centralizer product formula and independently as the kernel dimension of
/// Ad(g) - 1; both must agree.
template <class K>
std::pair<long, long> centralizer_dim(const ClassWitness<K>& w, const K& k);

/// Seeded draw of a valid eigenvalue list.
template <class K>
std::vector<typename K::Elem> random_lambdas(const PartitionSeq& p, GroupKind kind, const K& k,
                                             unsigned long seed);

// ---- implementation of the declarations above ----

template <class K>
FlagPair<K> build_flags(const ClassWitness<K>& w, const K& k) {
    const int dim = w.space.dim;
    const int n = w.space.n;
    FlagPair<K> f;
    f.gram = w.space.gram;

    // orbit vectors g^j v_t for j = 0..p_t
    std::vector<Mat<K>> orbit(w.p.sigma());
    for (int t = 1; t <= w.p.sigma(); ++t) {
        Vec<K> cur = w.v[t - 1];
        for (int j = 0; j <= w.p.part(t); ++j) {
            orbit[t - 1].push_back(cur);
            cur = mat_vec(k, w.g, cur);
        }
    }

    auto half_flag = [&](int shift) {
        std::vector<Mat<K>> flags(n + 1);
        for (int h = 1; h <= n; ++h) {
            int rest = h, r = 1;
            while (rest > w.p.part(r)) rest -= w.p.part(r++);
            Mat<K> span;
            for (int t = 1; t < r; ++t)
                for (int j = 0; j < w.p.part(t); ++j) span.push_back(orbit[t - 1][j + shift]);
            for (int j = 0; j < rest; ++j) span.push_back(orbit[r - 1][j + shift]);
            if (rank_of(k, span) != h)
                throw std::logic_error("build_flags: orbit vectors do not form a flag");
            flags[h] = std::move(span);
        }
        return flags;
    };
    auto lower = half_flag(0);
    auto lowerP = half_flag(1);

    // complete by orthogonal complements: V_{dim-h} = (V_h)^perp
    auto complete = [&](std::vector<Mat<K>>& flags) {
        flags.resize(dim + 1);
        for (int h = 0; h <= n; ++h) {
            int m = dim - h;
            if (m <= n) break;
            Mat<K> eqs;
            for (const auto& row : flags[h]) eqs.push_back(mat_vec(k, f.gram, row));
            if (h == 0) {
                flags[m] = identity_matrix(k, dim);
                continue;
            }
            flags[m] = nullspace_basis(k, eqs, dim);
            if (static_cast<int>(flags[m].size()) != m)
                throw std::logic_error("build_flags: complement has wrong dimension");
        }
        flags[0] = {};
    };
    complete(lower);
    complete(lowerP);
    f.V = lower;
    f.Vp = lowerP;

    // isotropy of the lower halves
    for (int h = 1; h <= n; ++h) {
        for (const auto& a : f.V[h])
            for (const auto& b : f.V[h]) {
                typename K::Elem val = k.zero();
                auto gb = mat_vec(k, f.gram, b);
                for (int i = 0; i < dim; ++i) val = k.add(val, k.mul(a[i], gb[i]));
                if (!k.is_zero(val)) throw std::logic_error("build_flags: V_h not isotropic");
            }
        for (const auto& a : f.Vp[h])
            for (const auto& b : f.Vp[h]) {
                typename K::Elem val = k.zero();
                auto gb = mat_vec(k, f.gram, b);
                for (int i = 0; i < dim; ++i) val = k.add(val, k.mul(a[i], gb[i]));
                if (!k.is_zero(val)) throw std::logic_error("build_flags: V'_h not isotropic");
            }
    }

    // g V_h = V'_h
    for (int h = 1; h <= dim; ++h) {
        Mat<K> mapped;
        for (const auto& row : f.V[h]) mapped.push_back(mat_vec(k, w.g, row));
        Mat<K> joint = mapped;
        joint.insert(joint.end(), f.Vp[h].begin(), f.Vp[h].end());
        if (rank_of(k, joint) != static_cast<int>(f.Vp[h].size()))
            throw std::logic_error("build_flags: g V_h != V'_h");
    }

    // the four displayed intersection-dimension patterns
    auto inter = [&](int hp, int h) { return intersection_dim(k, f.Vp[hp], f.V[h]); };
    auto checked = [&](int r, int i, int hp, int h, int expect, const char* which) {
        int got = inter(hp, h);
        if (got != expect)
            throw std::logic_error("build_flags: pattern " + std::string(which) + " fails at r=" +
                                   std::to_string(r) + " i=" + std::to_string(i) + ": dim(V'_" +
                                   std::to_string(hp) + " ∩ V_" + std::to_string(h) + ") = " +
                                   std::to_string(got) + ", expected " + std::to_string(expect));
        f.dimension_table.push_back({r, i, hp, h, expect});
    };
    int prefix = 0;
    for (int r = 1; r <= w.p.sigma(); ++r) {
        for (int i = 1; i <= w.p.part(r) - 1; ++i) {
            int h = prefix + i;
            checked(r, i, h, h, h - r, "(a)");
            checked(r, i, h, h + 1, h - r + 1, "(b)");
        }
        int H = prefix + w.p.part(r);
        checked(r, 0, H, dim - prefix - 1, H - r, "(c)");
        checked(r, 0, H, dim - prefix, H - r + 1, "(d)");
        prefix += w.p.part(r);
    }
    return f;
}

template <class K>
SignedPerm relative_position(const FlagPair<K>& f, const K& k) {
    int dim = static_cast<int>(f.V.size()) - 1;
    // d(i,j) = dim(V_i ∩ V'_j); jump matrix must be a permutation matrix
    std::vector<std::vector<int>> d(dim + 1, std::vector<int>(dim + 1, 0));
    for (int i = 0; i <= dim; ++i)
        for (int j = 0; j <= dim; ++j)
            d[i][j] = (i == 0 || j == 0) ? 0 : intersection_dim(k, f.V[i], f.Vp[j]);
    std::vector<int> perm(dim + 1, 0); // perm[i] = j, 1-based
    std::vector<bool> hit(dim + 1, false);
    for (int i = 1; i <= dim; ++i) {
        int found = 0;
        for (int j = 1; j <= dim; ++j) {
            int jump = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
            if (jump == 1) {
                perm[i] = j;
                if (hit[j]) throw std::invalid_argument("relative_position: malformed profile");
                hit[j] = true;
                ++found;
            } else if (jump != 0) {
                throw std::invalid_argument("relative_position: malformed profile");
            }
        }
        if (found != 1) throw std::invalid_argument("relative_position: malformed profile");
    }
    // collapse the fixed middle index in odd dimension
    int n = dim / 2;
    std::vector<int> images(2 * n);
    if (dim % 2 == 1) {
        int mid = n + 1;
        if (perm[mid] != mid)
            throw std::invalid_argument("relative_position: middle index not fixed");
        for (int i = 1; i <= dim; ++i) {
            if (i == mid) continue;
            int src = i < mid ? i : i - 1;
            int dst = perm[i] < mid ? perm[i] : perm[i] - 1;
            images[src - 1] = dst - 1;
        }
    } else {
        for (int i = 1; i <= dim; ++i) images[i - 1] = perm[i] - 1;
    }
    return SignedPerm::from_images(std::move(images));
}

template <class K>
std::pair<long, long> centralizer_dim(const ClassWitness<K>& w, const K& k) {
    const int dim = w.space.dim;
    auto bp = conjugate_counts(w.p);
    int kap = kappa(w.space.kind);

    long formula = 0;
    if (w.space.kind == GroupKind::SP) {
        for (int b : bp) formula += static_cast<long>(b) * b;
    } else {
        long a = bp[0] + kap - w.p.kappa_sigma();
        long b = bp[0] + w.p.kappa_sigma();
        formula = a * (a - 1) / 2 + b * (b - 1) / 2;
        for (size_t i = 1; i < bp.size(); ++i) formula += static_cast<long>(bp[i]) * bp[i];
        long alt = -static_cast<long>(w.p.sigma()) * (1 - kap);
        for (int bb : bp) alt += static_cast<long>(bb) * bb;
        if (formula != alt)
            throw std::logic_error("centralizer_dim: product formula disagrees with the square sum");
    }

    // Lie algebra: X with X^T G + G X = 0
    const auto& G = w.space.gram;
    Mat<K> eqs;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Vec<K> row(dim * dim, k.zero());
            // sum_k X_{ki} G_{kj} + G_{ik} X_{kj} = 0
            for (int t = 0; t < dim; ++t) {
                row[t * dim + i] = k.add(row[t * dim + i], G[t][j]);
                row[t * dim + j] = k.add(row[t * dim + j], G[i][t]);
            }
            eqs.push_back(std::move(row));
        }
    }
    Mat<K> lieBasis = nullspace_basis(k, eqs, dim * dim);
    long lieDim = static_cast<long>(lieBasis.size());
    long expectLie = w.space.kind == GroupKind::SP
                         ? static_cast<long>(w.space.n) * (2 * w.space.n + 1)
                         : static_cast<long>(dim) * (dim - 1) / 2;
    if (lieDim != expectLie)
        throw std::logic_error("centralizer_dim: isometry Lie algebra has wrong dimension");

    // kernel of X -> g X g^{-1} - X on the Lie algebra
    Mat<K> adRows; // columns indexed by basis elements
    std::vector<Mat<K>> images;
    for (const auto& flat : lieBasis) {
        Mat<K> X(dim, Vec<K>(dim, k.zero()));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) X[i][j] = flat[i * dim + j];
        Mat<K> ad = mat_mul(k, w.g, mat_mul(k, X, w.g_inv));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) ad[i][j] = k.sub(ad[i][j], X[i][j]);
        images.push_back(std::move(ad));
    }
    // matrix with one column per basis element
    Mat<K> colsys(dim * dim, Vec<K>(lieBasis.size(), k.zero()));
    for (size_t s = 0; s < images.size(); ++s)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) colsys[i * dim + j][s] = images[s][i][j];
    long kernel = lieDim - rank_of(k, colsys);

    if (kernel != formula)
        throw std::logic_error("centralizer_dim: kernel dimension " + std::to_string(kernel) +
                               " disagrees with formula " + std::to_string(formula));
    return {formula, kernel};
}

template <class K>
std::vector<typename K::Elem> random_lambdas(const PartitionSeq& p, GroupKind kind, const K& k,
                                             unsigned long seed) {
    int need = kind == GroupKind::SP ? p.part(1) : p.part(1) - 1;
    std::mt19937_64 rng(seed);
    std::vector<typename K::Elem> pool;
    if constexpr (std::is_same_v<K, RatField>) {
        for (int num = 2; num <= 11; ++num)
            for (int den = 1; den <= 3; ++den) {
                Rat v(num, den);
                if (v == 1 || v == 0) continue;
                if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
            }
    } else {
        for (long v = 2; v <= k.p - 2; ++v) pool.push_back(k.from_int(v));
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::shuffle(pool.begin(), pool.end(), rng);
        if (static_cast<int>(pool.size()) < need) break;
        std::vector<typename K::Elem> lam(pool.begin(), pool.begin() + need);
        bool ok = true;
        for (size_t i = 0; i < lam.size() && ok; ++i)
            for (size_t j = 0; j < lam.size() && ok; ++j) {
                if (i < j && k.eq(lam[i], lam[j])) ok = false;
                if (k.eq(lam[i], k.inv(lam[j]))) ok = false;
            }
        if (!ok) continue;
        try {
            (void)build_class_rep(p, kind, lam, k);
        } catch (const std::invalid_argument&) {
            continue; // e.g. a vanishing diagonal Gram entry; redraw
        }
        return lam;
    }
    throw lambda_selection_error("random_lambdas: no valid eigenvalue list found (field too small?)");
}

} // namespace weyltk
