#include "weyltk/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weyltk {

namespace {

// ---- SL2 ----

struct M2 {
    int a, b, c, d;
    bool operator<(const M2& o) const {
        return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
    bool operator==(const M2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

M2 mul2(const GF& F, const M2& x, const M2& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

M2 inv2(const GF& F, const M2& x) {
    int det = F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c));
    int di = F.inv(det);
    return {F.mul(x.d, di), F.mul(F.neg(x.b), di), F.mul(F.neg(x.c), di), F.mul(x.a, di)};
}

std::vector<M2> sl2_elements(const GF& F) {
    std::vector<M2> out;
    int q = F.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    if (F.sub(F.mul(a, d), F.mul(b, c)) == 1) out.push_back({a, b, c, d});
    return out;
}

std::set<M2> sl2_class(const GF& F, const M2& rep) {
    int det = F.sub(F.mul(rep.a, rep.d), F.mul(rep.b, rep.c));
    if (det != 1) throw std::invalid_argument("sl2: representative has determinant != 1");
    std::set<M2> cls;
    std::vector<M2> stack{rep};
    cls.insert(rep);
    // transvection generators over the full field (the two unipotent
    // one-parameter subgroups generate the group)
    std::vector<M2> gens;
    for (int c = 1; c < F.q(); ++c) {
        gens.push_back({1, c, 0, 1});
        gens.push_back({1, 0, c, 1});
    }
    while (!stack.empty()) {
        M2 cur = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            M2 conj = mul2(F, g, mul2(F, cur, inv2(F, g)));
            if (cls.insert(conj).second) stack.push_back(conj);
        }
    }
    return cls;
}

// entries within [0, q) are taken as field codes (the base-p digit encoding
// of GF); anything else is reduced into the prime field
int entry_to_elem(const GF& F, long v) {
    if (v >= 0 && v < F.q()) return static_cast<int>(v);
    return F.from_int(v);
}

M2 sl2_rep(const GF& F, const std::vector<long>& entries) {
    if (entries.size() != 4) throw std::invalid_argument("sl2: need 4 entries");
    M2 m{entry_to_elem(F, entries[0]), entry_to_elem(F, entries[1]),
         entry_to_elem(F, entries[2]), entry_to_elem(F, entries[3])};
    if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)) != 1)
        throw std::invalid_argument("sl2: representative not realizable (determinant != 1)");
    return m;
}

// lines of F_q^2 as normalized points: (1, x) for x in F_q, plus (0, 1)
int line_of(const GF& F, int x, int y) {
    if (x != 0) return F.mul(y, F.inv(x)); // (1, y/x) -> index y/x
    return F.q();                          // (0, 1)
}

int image_line(const GF& F, const M2& g, int line) {
    int x, y;
    if (line == F.q()) {
        x = 0;
        y = 1;
    } else {
        x = 1;
        y = line;
    }
    int nx = F.add(F.mul(g.a, x), F.mul(g.b, y));
    int ny = F.add(F.mul(g.c, x), F.mul(g.d, y));
    if (nx == 0 && ny == 0) throw std::logic_error("sl2: singular action");
    return line_of(F, nx, ny);
}

} // namespace

long long sl2_class_size(int q, const std::vector<long>& rep) {
    if (q > 49) throw std::invalid_argument("sl2: q must be <= 49");
    GF F(q);
    return static_cast<long long>(sl2_class(F, sl2_rep(F, rep)).size());
}

long long sl2_pair_count(int q, const std::vector<long>& rep, const std::string& w) {
    if (q > 49) throw std::invalid_argument("sl2: q must be <= 49");
    if (w != "e" && w != "s")
        throw std::invalid_argument("sl2: relative position must be 'e' or 's'");
    GF F(q);
    auto cls = sl2_class(F, sl2_rep(F, rep));
    long long total = 0;
    for (const auto& g : cls) {
        int fixed = 0;
        for (int line = 0; line <= q; ++line)
            if (image_line(F, g, line) == line) ++fixed;
        total += w == "e" ? fixed : (q + 1 - fixed);
    }
    return total;
}

namespace {

// ---- Sp4 ----

using V4 = std::array<int, 4>;
using M4 = std::array<int, 16>;

struct Sp4Context {
    GF F;
    // Gram of the alternating form: (e_i, e_{5-i}) = 1 for i = 1,2 and
    // -1 for i = 3,4
    int gram[4][4] = {};
    explicit Sp4Context(int q) : F(q) {
        gram[0][3] = 1;
        gram[1][2] = 1;
        gram[2][1] = F.neg(1);
        gram[3][0] = F.neg(1);
    }
    int form(const V4& x, const V4& y) const {
        int s = 0;
        for (int i = 0; i < 4; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (gram[i][j] == 0 || y[j] == 0) continue;
                s = F.add(s, F.mul(x[i], F.mul(gram[i][j], y[j])));
            }
        }
        return s;
    }
    bool preserves(const M4& m) const {
        // columns are images of basis vectors
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                V4 ci{m[0 * 4 + i], m[1 * 4 + i], m[2 * 4 + i], m[3 * 4 + i]};
                V4 cj{m[0 * 4 + j], m[1 * 4 + j], m[2 * 4 + j], m[3 * 4 + j]};
                if (form(ci, cj) != gram[i][j]) return false;
            }
        return true;
    }
    M4 mul(const M4& a, const M4& b) const {
        M4 r{};
        for (int i = 0; i < 4; ++i)
            for (int t = 0; t < 4; ++t) {
                if (a[i * 4 + t] == 0) continue;
                for (int j = 0; j < 4; ++j)
                    r[i * 4 + j] = F.add(r[i * 4 + j], F.mul(a[i * 4 + t], b[t * 4 + j]));
            }
        return r;
    }
    V4 apply(const M4& m, const V4& v) const {
        V4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (m[i * 4 + j] != 0 && v[j] != 0)
                    r[i] = F.add(r[i], F.mul(m[i * 4 + j], v[j]));
        return r;
    }
};

/// All elements, built column by column with the symplectic constraints.
std::vector<M4> sp4_elements(const Sp4Context& C) {
    const GF& F = C.F;
    int q = F.q();
    std::vector<V4> vectors;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    if (a || b || c || d) vectors.push_back({a, b, c, d});
    std::vector<M4> out;
    for (const auto& c1 : vectors) {
        for (const auto& c2 : vectors) {
            if (C.form(c1, c2) != C.gram[0][1]) continue;
            for (const auto& c3 : vectors) {
                if (C.form(c1, c3) != C.gram[0][2]) continue;
                if (C.form(c2, c3) != C.gram[1][2]) continue;
                for (const auto& c4 : vectors) {
                    if (C.form(c1, c4) != C.gram[0][3]) continue;
                    if (C.form(c2, c4) != C.gram[1][3]) continue;
                    if (C.form(c3, c4) != C.gram[2][3]) continue;
                    M4 m{};
                    for (int i = 0; i < 4; ++i) {
                        m[i * 4 + 0] = c1[i];
                        m[i * 4 + 1] = c2[i];
                        m[i * 4 + 2] = c3[i];
                        m[i * 4 + 3] = c4[i];
                    }
                    out.push_back(m);
                }
            }
        }
    }
    return out;
}

struct Flag {
    int line;  // canonical line id
    int plane; // canonical plane id
    bool operator<(const Flag& o) const { return std::tie(line, plane) < std::tie(o.line, o.plane); }
};

struct FlagTable {
    std::vector<std::pair<V4, std::array<V4, 2>>> flags; // (line rep, plane basis)
    std::map<std::vector<int>, int> canonical;            // canonical key -> flag index

    std::vector<int> key_of(const Sp4Context& C, V4 line, std::array<V4, 2> plane) const;
};

V4 normalize_vec(const GF& F, V4 v) {
    for (int i = 0; i < 4; ++i) {
        if (v[i] != 0) {
            int s = F.inv(v[i]);
            for (int j = 0; j < 4; ++j) v[j] = F.mul(v[j], s);
            return v;
        }
    }
    throw std::logic_error("normalize_vec: zero vector");
}

std::vector<int> FlagTable::key_of(const Sp4Context& C, V4 line, std::array<V4, 2> plane) const {
    const GF& F = C.F;
    line = normalize_vec(F, line);
    // reduced row echelon of the plane
    std::vector<V4> rows{plane[0], plane[1]};
    int r = 0;
    for (int col = 0; col < 4 && r < 2; ++col) {
        int piv = -1;
        for (int i = r; i < 2; ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        int s = F.inv(rows[r][col]);
        for (int j = 0; j < 4; ++j) rows[r][j] = F.mul(rows[r][j], s);
        for (int i = 0; i < 2; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int f = rows[i][col];
            for (int j = 0; j < 4; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    if (r != 2) throw std::logic_error("flag: plane is not 2-dimensional");
    std::vector<int> key;
    for (int i = 0; i < 4; ++i) key.push_back(line[i]);
    for (const auto& row : rows)
        for (int i = 0; i < 4; ++i) key.push_back(row[i]);
    return key;
}

FlagTable build_flags_sp4(const Sp4Context& C) {
    const GF& F = C.F;
    int q = F.q();
    FlagTable t;
    // isotropic lines: all lines (the form is alternating)
    std::vector<V4> lines;
    {
        std::set<std::vector<int>> seen;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        if (!(a || b || c || d)) continue;
                        V4 v = normalize_vec(F, {a, b, c, d});
                        std::vector<int> key(v.begin(), v.end());
                        if (seen.insert(key).second) lines.push_back(v);
                    }
    }
    for (const auto& line : lines) {
        // isotropic planes through the line: vectors w with (line, w) = 0,
        // modulo the line itself
        std::set<std::vector<int>> seenPlanes;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        V4 w{a, b, c, d};
                        if (!(a || b || c || d)) continue;
                        if (C.form(line, w) != 0) continue;
                        // w independent from line?
                        std::array<V4, 2> plane{line, w};
                        std::vector<int> key;
                        try {
                            key = t.key_of(C, line, plane);
                        } catch (const std::logic_error&) {
                            continue; // dependent
                        }
                        if (seenPlanes.insert(key).second) {
                            t.canonical[key] = static_cast<int>(t.flags.size());
                            t.flags.push_back({line, plane});
                        }
                    }
    }
    return t;
}

/// Relative position of two complete symplectic flags as a signed window.
std::vector<int> relpos_sp4(const Sp4Context& C, const std::pair<V4, std::array<V4, 2>>& f1,
                            const std::pair<V4, std::array<V4, 2>>& f2) {
    const GF& F = C.F;
    // complete flags: V1 ⊂ V2 ⊂ V3 = V1^perp ⊂ V4
    auto perp_of_line = [&](const V4& line) {
        // solve (line, x) = 0: 3-dim solution space
        std::vector<V4> basis;
        // gram row for "line"
        V4 row{};
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int i = 0; i < 4; ++i)
                if (line[i] != 0 && C.gram[i][j] != 0) s = F.add(s, F.mul(line[i], C.gram[i][j]));
            row[j] = s;
        }
        int pivot = -1;
        for (int j = 0; j < 4; ++j)
            if (row[j] != 0) pivot = j;
        if (pivot < 0) throw std::logic_error("relpos: degenerate form");
        for (int j = 0; j < 4; ++j) {
            if (j == pivot) continue;
            V4 v{};
            v[j] = 1;
            v[pivot] = F.neg(F.mul(row[j], F.inv(row[pivot])));
            basis.push_back(v);
        }
        return basis;
    };

    auto flag_spans = [&](const std::pair<V4, std::array<V4, 2>>& f) {
        std::vector<std::vector<V4>> spans(5);
        spans[1] = {f.first};
        spans[2] = {f.second[0], f.second[1]};
        spans[3] = perp_of_line(f.first);
        spans[4] = {V4{1, 0, 0, 0}, V4{0, 1, 0, 0}, V4{0, 0, 1, 0}, V4{0, 0, 0, 1}};
        return spans;
    };
    auto s1 = flag_spans(f1), s2 = flag_spans(f2);

    auto rank_of_rows = [&](std::vector<V4> rows) {
        int r = 0;
        for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[r], rows[piv]);
            int s = F.inv(rows[r][col]);
            for (int j = 0; j < 4; ++j) rows[r][j] = F.mul(rows[r][j], s);
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == r || rows[i][col] == 0) continue;
                int f = rows[i][col];
                for (int j = 0; j < 4; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
            }
            ++r;
        }
        return r;
    };
    auto inter_dim = [&](const std::vector<V4>& a, const std::vector<V4>& b) {
        std::vector<V4> joint = a;
        joint.insert(joint.end(), b.begin(), b.end());
        return static_cast<int>(a.size()) + static_cast<int>(b.size()) -
               rank_of_rows(std::move(joint));
    };

    int d[5][5] = {};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) d[i][j] = inter_dim(s1[i], s2[j]);
    std::vector<int> images(4, -1);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            int jump = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
            if (jump == 1) images[i - 1] = j - 1;
        }
        if (images[i - 1] < 0) throw std::logic_error("relpos: malformed jump profile");
    }
    SignedPerm w = SignedPerm::from_images(std::move(images));
    return w.window();
}

M4 sp4_rep(const Sp4Context& C, const std::vector<long>& entries) {
    if (entries.size() != 16) throw std::invalid_argument("sp4: need 16 entries (row-major)");
    M4 m{};
    for (int i = 0; i < 16; ++i) m[i] = entry_to_elem(C.F, entries[i]);
    if (!C.preserves(m))
        throw std::invalid_argument("sp4: representative does not preserve the form");
    return m;
}

std::vector<M4> sp4_class(const Sp4Context& C, const M4& rep, const std::vector<M4>& all) {
    std::set<M4> cls;
    for (const auto& h : all) {
        // h rep h^{-1}: compute h^{-1} by solving (small field, reuse inverse search)
        // invert h via gaussian elimination over GF
        const GF& F = C.F;
        std::array<std::array<int, 8>, 4> a{};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a[i][j] = h[i * 4 + j];
            a[i][4 + i] = 1;
        }
        for (int c = 0; c < 4; ++c) {
            int piv = -1;
            for (int r = c; r < 4; ++r)
                if (a[r][c] != 0) {
                    piv = r;
                    break;
                }
            std::swap(a[piv], a[c]);
            int s = F.inv(a[c][c]);
            for (int j = 0; j < 8; ++j) a[c][j] = F.mul(a[c][j], s);
            for (int r = 0; r < 4; ++r) {
                if (r == c || a[r][c] == 0) continue;
                int f = a[r][c];
                for (int j = 0; j < 8; ++j) a[r][j] = F.sub(a[r][j], F.mul(f, a[c][j]));
            }
        }
        M4 hinv{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) hinv[i * 4 + j] = a[i][4 + j];
        cls.insert(C.mul(h, C.mul(rep, hinv)));
    }
    return {cls.begin(), cls.end()};
}

} // namespace

long long sp4_group_order(int q) {
    // q^4 (q^2-1)(q^4-1)
    long long qq = q;
    return qq * qq * qq * qq * (qq * qq - 1) * (qq * qq * qq * qq - 1);
}

long long sp4_class_size(int q, const std::vector<long>& rep) {
    if (q > 3) throw std::invalid_argument("sp4: enumeration supported for q = 2, 3 only");
    Sp4Context C(q);
    auto all = sp4_elements(C);
    return static_cast<long long>(sp4_class(C, sp4_rep(C, rep), all).size());
}

long long sp4_pair_count(int q, const std::vector<long>& rep, const std::vector<int>& window) {
    if (q > 3) throw std::invalid_argument("sp4: enumeration supported for q = 2, 3 only");
    if (window.size() != 2) throw std::invalid_argument("sp4: window must have length 2");
    Sp4Context C(q);
    auto all = sp4_elements(C);
    if (static_cast<long long>(all.size()) != sp4_group_order(q))
        throw std::logic_error("sp4: enumeration does not match the group order");
    auto cls = sp4_class(C, sp4_rep(C, rep), all);
    FlagTable flags = build_flags_sp4(C);

    // precompute pairwise relative positions
    int nf = static_cast<int>(flags.flags.size());
    std::vector<std::vector<int>> pairWindows(nf, std::vector<int>(nf, -1));
    std::map<std::vector<int>, int> windowIds;
    auto window_id = [&](const std::vector<int>& w) {
        auto it = windowIds.find(w);
        if (it != windowIds.end()) return it->second;
        int id = static_cast<int>(windowIds.size());
        windowIds[w] = id;
        return id;
    };
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            pairWindows[i][j] = window_id(relpos_sp4(C, flags.flags[i], flags.flags[j]));
    auto targetIt = windowIds.find(window);
    if (targetIt == windowIds.end()) return 0;
    int target = targetIt->second;

    long long total = 0;
    for (const auto& g : cls) {
        for (int fi = 0; fi < nf; ++fi) {
            const auto& f = flags.flags[fi];
            V4 gl = C.apply(g, f.first);
            std::array<V4, 2> gp{C.apply(g, f.second[0]), C.apply(g, f.second[1])};
            auto key = flags.key_of(C, gl, gp);
            int gi = flags.canonical.at(key);
            if (pairWindows[fi][gi] == target) ++total;
        }
    }
    return total;
}

} // namespace weyltk
