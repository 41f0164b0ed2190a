#include "weyltk/pipeline.hpp"

#include "weyltk/representations.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace weyltk {

namespace {

using Matrix = WeylMatrix;

QPoly charpoly_det(const Matrix& mIn, bool oneMinusQw) {
    // det(1 - q M) or det(q I - M), exact over Z[q] by interpolation
    int n = static_cast<int>(mIn.size());
    std::vector<Rat> xs, ys;
    for (int pt = 0; pt <= n; ++pt) {
        Rat x(pt);
        // build the rational matrix and take its determinant
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[i][j] = oneMinusQw ? Rat(Rat(i == j ? 1 : 0) - x * mIn[i][j])
                                     : Rat(x * Rat(i == j ? 1 : 0) - mIn[i][j]);
        Rat det = 1;
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (a[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(a[piv], a[c]);
                det = -det;
            }
            det *= a[c][c];
            Rat inv = Rat(1) / a[c][c];
            for (int r = c + 1; r < n; ++r) {
                if (a[r][c] == 0) continue;
                Rat f = a[r][c] * inv;
                for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
            }
        }
        xs.push_back(x);
        ys.push_back(det);
    }
    // Lagrange interpolation, degree <= n
    std::vector<Rat> coeff(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        // basis polynomial for node i
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) {
                next[t] -= basis[t] * xs[j];
                next[t + 1] += basis[t];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        Rat scale = ys[i] / denom;
        for (size_t t = 0; t < basis.size(); ++t) coeff[t] += basis[t] * scale;
    }
    std::vector<Int> out;
    for (const auto& c : coeff) {
        if (denominator(c) != 1) throw std::logic_error("charpoly_det: non-integer coefficient");
        out.push_back(numerator(c));
    }
    return QPoly(std::move(out));
}

Matrix reflection_matrix(const RootVec& alpha, int dim) {
    auto dotv = [](const RootVec& a, const RootVec& b) {
        long s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
        return s;
    };
    long aa = dotv(alpha, alpha);
    Matrix m(dim, std::vector<Rat>(dim, Rat(0)));
    // s(e_j) = e_j - 2(e_j,alpha)/(alpha,alpha) alpha
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            m[i][j] = Rat(i == j ? 1 : 0) - Rat(2 * alpha[j], aa) * alpha[i];
    return m;
}

Matrix mat_mul_i(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    Matrix r(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

RootVec apply_mat(const Matrix& m, const RootVec& v) {
    int n = static_cast<int>(m.size());
    RootVec r(n, 0);
    for (int i = 0; i < n; ++i) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j) acc += m[i][j] * v[j];
        if (denominator(acc) != 1)
            throw std::logic_error("apply_mat: root image is not integral");
        r[i] = static_cast<int>(to_i64(numerator(acc)));
    }
    return r;
}

int det_sign(const Matrix& mIn) {
    // elements of Weyl groups have determinant +-1
    int n = static_cast<int>(mIn.size());
    std::vector<std::vector<Rat>> a = mIn;
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] * inv;
            for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
        }
    }
    if (det == 1) return 1;
    if (det == -1) return -1;
    throw std::logic_error("det_sign: determinant is not a unit");
}

} // namespace

QPoly group_order_polynomial(const RootSystemData& rd) {
    QPoly qnu = QPoly::q_power(static_cast<int>(rd.nu));
    QPoly qm1(std::vector<Int>{Int(-1), Int(1)});
    return qnu * qm1.pow(rd.rank) * rd.poincare;
}

QPoly group_order_polynomial(const SubsystemData& sd) {
    QPoly qnu = QPoly::q_power(static_cast<int>(sd.nu_k));
    QPoly qm1(std::vector<Int>{Int(-1), Int(1)});
    return qnu * qm1.pow(sd.ambient->rank) * sd.poincare_degrees;
}

MatrixWeylGroup enumerate_weyl(const SubsystemData& sd, long order_cap) {
    int dim = sd.ambient->ambient_dim;
    MatrixWeylGroup g;
    std::vector<Matrix> gens;
    for (const auto& r : sd.gens) gens.push_back(reflection_matrix(r, dim));

    std::map<Matrix, int> seen;
    Matrix id(dim, std::vector<Rat>(dim, Rat(0)));
    for (int i = 0; i < dim; ++i) id[i][i] = 1;
    g.elements.push_back(id);
    seen[id] = 0;
    for (size_t head = 0; head < g.elements.size(); ++head) {
        for (const auto& gen : gens) {
            Matrix next = mat_mul_i(gen, g.elements[head]);
            if (seen.emplace(next, g.elements.size()).second) {
                g.elements.push_back(next);
                if (static_cast<long>(g.elements.size()) > order_cap)
                    throw std::invalid_argument("enumerate_weyl: group order exceeds the cap");
            }
        }
    }

    // lengths: positive subsystem roots sent to negative
    std::set<RootVec> positives(sd.positives.begin(), sd.positives.end());
    for (const auto& m : g.elements) {
        long len = 0;
        for (const auto& r : sd.positives) {
            RootVec img = apply_mat(m, r);
            if (!positives.count(img)) ++len;
        }
        g.lengths.push_back(len);
        g.dets.push_back(det_sign(m));
    }
    {
        std::map<long, long> hist;
        for (long l : g.lengths) hist[l]++;
        std::vector<Int> coeffs(hist.empty() ? 1 : hist.rbegin()->first + 1, Int(0));
        for (const auto& [l, c] : hist) coeffs[l] = c;
        g.poincare_enumerated = QPoly(std::move(coeffs));
    }

    // conjugacy classes via orbit closure
    g.class_of.assign(g.elements.size(), -1);
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (g.class_of[i] >= 0) continue;
        int cls = static_cast<int>(g.class_rep.size());
        g.class_rep.push_back(static_cast<int>(i));
        std::vector<size_t> stack{i};
        g.class_of[i] = cls;
        long size = 1;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (const auto& gen : gens) {
                // gen * cur * gen^{-1}; generators are involutions
                Matrix conj = mat_mul_i(gen, mat_mul_i(g.elements[cur], gen));
                int idx = seen.at(conj);
                if (g.class_of[idx] < 0) {
                    g.class_of[idx] = cls;
                    stack.push_back(idx);
                    ++size;
                }
            }
        }
        g.class_sizes.push_back(size);
    }
    return g;
}

ClassFunctionQ pi_class_function(const SubsystemData& sd) {
    ClassFunctionQ cf;
    cf.sub = &sd;
    cf.group = enumerate_weyl(sd);
    const auto& rd = *sd.ambient;
    int l = rd.rank;
    int r = 0;
    for (const auto& [label, rank] : sd.components) r += rank;

    QPoly oneMinusQ(std::vector<Int>{Int(1), Int(-1)});
    QPoly qMinusOne(std::vector<Int>{Int(-1), Int(1)});
    QPoly numer1 = QPoly::one();
    for (int d : sd.degrees) {
        std::vector<Int> v(d + 1, Int(0));
        v[0] = 1;
        v[d] = -1;
        numer1 *= QPoly(std::move(v));
    }
    numer1 *= oneMinusQ.pow(l - r);
    QPoly numer2base = qMinusOne.pow(l) * cf.group.poincare_enumerated;

    cf.class_values.assign(cf.group.class_rep.size(), QPoly());
    std::vector<bool> have(cf.group.class_rep.size(), false);
    for (size_t e = 0; e < cf.group.elements.size(); ++e) {
        // restrict the matrix to the ambient weight space is unnecessary:
        // both determinants are taken on the full space
        const Matrix mFull = cf.group.elements[e];
        // project to the ambient_dim x ambient_dim matrix (already is)
        QPoly det1 = charpoly_det(mFull, true);   // det(1 - q w)
        QPoly det2 = charpoly_det(mFull, false);  // det(q - w)
        // the fixed complement contributes (1-q)/(q-1) powers beyond rank l
        int extra = rd.ambient_dim - l;
        QPoly route1 = (numer1 * oneMinusQ.pow(extra)).div_exact(det1);
        QPoly route2 = (numer2base * qMinusOne.pow(extra)).div_exact(det2) *
                       Int(cf.group.dets[e]);
        if (route1 != route2)
            throw std::logic_error("pi_class_function: the two evaluations disagree");
        int cls = cf.group.class_of[e];
        if (!have[cls]) {
            cf.class_values[cls] = route1;
            have[cls] = true;
        } else if (cf.class_values[cls] != route1) {
            throw std::logic_error("pi_class_function: value not constant on a class");
        }
    }
    return cf;
}

namespace {

// ---- ambient character data ----

SignedCycleType signed_type_from_matrix(const Matrix& m) {
    // signed permutation matrix on the coordinates
    int n = static_cast<int>(m.size());
    std::vector<int> window(n, 0);
    for (int j = 0; j < n; ++j) {
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            if (m[i][j] == 0) continue;
            if ((m[i][j] != 1 && m[i][j] != -1) || hits++)
                throw std::invalid_argument("signed_type_from_matrix: not a signed permutation");
            window[j] = m[i][j] > 0 ? i + 1 : -(i + 1);
        }
        if (hits != 1) throw std::invalid_argument("signed_type_from_matrix: empty column");
    }
    return SignedPerm::from_window(window).cycle_type();
}

std::vector<int> perm_cycle_type(const Matrix& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> to(n, -1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (m[i][j] == 0) continue;
            if (m[i][j] != 1 || to[j] >= 0)
                throw std::invalid_argument("perm_cycle_type: not a permutation matrix");
            to[j] = i;
        }
        if (to[j] < 0) throw std::invalid_argument("perm_cycle_type: empty column");
    }
    std::vector<bool> seen(n, false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = to[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

// G2 character table keyed by geometric class invariants.
// Classes: identity, long reflection, short reflection, rotations by
// 60/120/180 degrees.  Linear characters 1_3' / 1_3'' are fixed by their
// value on the long-root reflection: 1_3' is +1 there.
struct G2Table {
    std::vector<std::string> labels{"1_0", "1_3'", "1_3''", "1_6", "2_1", "2_2"};
    // columns: e, refl_long, refl_short, rot60, rot120, rot180
    long values[6][6] = {
        {1, 1, 1, 1, 1, 1},
        {1, 1, -1, -1, 1, -1},
        {1, -1, 1, -1, 1, -1},
        {1, -1, -1, 1, 1, 1},
        {2, 0, 0, 1, -1, -2},
        {2, 0, 0, -1, -1, 2},
    };
};

int g2_class_index(const Matrix& m, const RootSystemData& rd) {
    // trace and reflection type decide the class
    Rat trace = 0;
    for (size_t i = 0; i < m.size(); ++i) trace += m[i][i];
    if (denominator(trace) != 1) throw std::logic_error("g2_class_index: non-integral trace");
    // the ambient model is 3-dimensional with a fixed line; the reflection
    // representation accounts for trace tr - 1
    long t = to_i64(numerator(trace)) - 1;
    if (t == 2) return 0;
    if (t == 1) return 3;   // rot60
    if (t == -1) return 4;  // rot120
    if (t == -2) return 5;  // rot180
    if (t != 0) throw std::logic_error("g2_class_index: unexpected trace");
    // reflection: which root length is negated
    for (const auto& r : rd.roots) {
        RootVec img = apply_mat(m, r);
        bool isNeg = true;
        for (size_t i = 0; i < r.size(); ++i)
            if (img[i] != -r[i]) isNeg = false;
        if (isNeg) {
            long norm = 0;
            for (int x : r) norm += static_cast<long>(x) * x;
            // long roots of the G2 model have squared norm 6, short 2
            return norm == 6 ? 1 : 2;
        }
    }
    throw std::logic_error("g2_class_index: reflection without a negated root");
}

} // namespace

int AmbientCharSet::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("ambient_characters: unknown label '" + label + "'");
}

long AmbientCharSet::value(size_t i, const Matrix& matrix) const {
    char fam = type[0];
    if (fam == 'A') {
        SignedCycleType t;
        t.pos = perm_cycle_type(matrix);
        return chi_value(classical_labels[i], t);
    }
    if (fam == 'B' || fam == 'C' || fam == 'D')
        return chi_value(classical_labels[i], signed_type_from_matrix(matrix));
    if (type == "G2") {
        static const G2Table table;
        int cls = g2_class_index(matrix, root_data("G2"));
        return table.values[i][cls];
    }
    throw std::invalid_argument("ambient_characters: no character data for " + type);
}

AmbientCharSet ambient_characters(const RootSystemData& rd) {
    AmbientCharSet cs;
    cs.type = rd.type;
    char fam = rd.type[0];
    if (fam == 'A') {
        for (const auto& rep : family_irreps(Family::S, rd.rank + 1)) {
            cs.classical_labels.push_back(rep);
            cs.labels.push_back(rep.to_string());
        }
    } else if (fam == 'B' || fam == 'C') {
        for (const auto& rep : family_irreps(Family::B, rd.rank)) {
            cs.classical_labels.push_back(rep);
            cs.labels.push_back(rep.to_string());
        }
    } else if (fam == 'D') {
        for (const auto& rep : family_irreps(Family::D, rd.rank)) {
            if (rep.degenerate()) continue; // pooled pairs are not usable here
            cs.classical_labels.push_back(rep);
            cs.labels.push_back(rep.to_string());
        }
    } else if (rd.type == "G2") {
        cs.labels = G2Table().labels;
    } else {
        throw std::invalid_argument("ambient_characters: no built-in data for " + rd.type);
    }
    return cs;
}

QPoly inner_with_pi(const RootSystemData& rd, const std::string& irrLabel,
                    const SubsystemData& sd) {
    AmbientCharSet cs = ambient_characters(rd);
    int idx = cs.index_of(irrLabel);
    ClassFunctionQ pi = pi_class_function(sd);
    QPoly acc;
    for (size_t c = 0; c < pi.group.class_rep.size(); ++c) {
        long chi = cs.value(idx, pi.group.elements[pi.group.class_rep[c]]);
        if (chi == 0) continue;
        acc += pi.class_values[c] * (Int(chi) * pi.group.class_sizes[c]);
    }
    long order = 0;
    for (long s : pi.group.class_sizes) order += s;
    QPoly result = acc.div_exact(Int(order));
    for (const auto& coeff : result.coeffs())
        if (coeff < 0) throw std::logic_error("inner_with_pi: negative coefficient");
    if (result.degree() > sd.nu_k)
        throw std::logic_error("inner_with_pi: degree exceeds the positive root count");
    return result;
}

PipelineData PipelineData::builtin_type_a(int rank) {
    PipelineData d;
    d.type = "A" + std::to_string(rank);
    d.provenance = "builtin";
    int n = rank + 1;
    // single elliptic class: the n-cycles
    {
        SignedPerm cox = SignedPerm::from_window([&] {
            std::vector<int> w(n);
            for (int i = 0; i < n - 1; ++i) w[i] = i + 2;
            w[n - 1] = 1;
            return w;
        }());
        // characteristic polynomial on the reflection representation:
        // (X^n - 1)/(X - 1)
        std::map<int, int> fac;
        for (int dd = 2; dd <= n; ++dd)
            if (n % dd == 0) fac[dd] = 1;
        d.class_labels.push_back(cyclotomic_string(fac));
    }
    // Hecke character values at the Coxeter class: nonzero only on hooks,
    // (n-1-k) powers of q with alternating sign for the hook (n-k, 1^k)
    for (const auto& rep : family_irreps(Family::S, n)) {
        d.irr_labels.push_back(rep.to_string());
        const auto& lam = rep.alpha();
        bool hook = lam.size() <= 1 || lam[1] <= 1;
        std::vector<QPoly> row;
        if (!hook) {
            row.emplace_back();
        } else {
            int kHook = static_cast<int>(lam.size()) - 1; // 1^k tail length
            if (lam.empty()) kHook = 0;
            row.push_back(QPoly::q_power(n - 1 - kHook, Int(kHook % 2 == 0 ? 1 : -1)));
        }
        d.A.push_back(std::move(row));
    }
    size_t m = d.irr_labels.size();
    d.phi.assign(m, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < m; ++i) d.phi[i][i] = 1;
    return d;
}

namespace {

using nlohmann::json;

json qpoly_to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& s : p.coeff_strings()) arr.push_back(s);
    return arr;
}

QPoly qpoly_from_json(const json& arr) {
    std::vector<std::string> v;
    for (const auto& x : arr) v.push_back(x.get<std::string>());
    return QPoly::from_coeff_strings(v);
}

} // namespace

void PipelineData::save(const std::string& dir) const {
    {
        json a;
        a["type"] = type;
        a["matrix"] = "A";
        a["rows"] = irr_labels;
        a["cols"] = class_labels;
        json entries = json::array();
        for (const auto& row : A) {
            json jrow = json::array();
            for (const auto& p : row) jrow.push_back(qpoly_to_json(p));
            entries.push_back(jrow);
        }
        a["entries"] = entries;
        std::ofstream out(dir + "/" + type + "_A.json");
        if (!out) throw std::runtime_error("PipelineData: cannot write to " + dir);
        out << a.dump(2) << "\n";
    }
    {
        json f;
        f["type"] = type;
        f["matrix"] = "phi";
        f["rows"] = irr_labels;
        f["cols"] = irr_labels;
        json entries = json::array();
        for (const auto& row : phi) {
            json jrow = json::array();
            for (const auto& v : row) jrow.push_back(v.str());
            entries.push_back(jrow);
        }
        f["entries"] = entries;
        std::ofstream out(dir + "/" + type + "_phi.json");
        out << f.dump(2) << "\n";
    }
}

PipelineData PipelineData::load(const std::string& dir, const std::string& type) {
    PipelineData d;
    d.type = type;
    d.provenance = dir;
    auto read = [&](const std::string& name) {
        std::ifstream in(dir + "/" + type + "_" + name + ".json");
        if (!in) throw std::runtime_error("PipelineData: missing " + dir + "/" + type + "_" +
                                          name + ".json");
        json j;
        in >> j;
        return j;
    };
    json a = read("A");
    if (a.at("type") != type || a.at("matrix") != "A")
        throw std::runtime_error("PipelineData: malformed A document");
    d.irr_labels = a.at("rows").get<std::vector<std::string>>();
    d.class_labels = a.at("cols").get<std::vector<std::string>>();
    for (const auto& jrow : a.at("entries")) {
        std::vector<QPoly> row;
        for (const auto& cell : jrow) row.push_back(qpoly_from_json(cell));
        if (row.size() != d.class_labels.size())
            throw std::runtime_error("PipelineData: A row width mismatch");
        d.A.push_back(std::move(row));
    }
    if (d.A.size() != d.irr_labels.size())
        throw std::runtime_error("PipelineData: A row count mismatch");

    json f = read("phi");
    if (f.at("type") != type || f.at("matrix") != "phi")
        throw std::runtime_error("PipelineData: malformed phi document");
    if (f.at("rows").get<std::vector<std::string>>() != d.irr_labels ||
        f.at("cols").get<std::vector<std::string>>() != d.irr_labels)
        throw std::runtime_error("PipelineData: phi labels disagree with A");
    for (const auto& jrow : f.at("entries")) {
        std::vector<Int> row;
        for (const auto& cell : jrow) row.emplace_back(cell.get<std::string>());
        if (row.size() != d.irr_labels.size())
            throw std::runtime_error("PipelineData: phi row width mismatch");
        d.phi.push_back(std::move(row));
    }
    if (d.phi.size() != d.irr_labels.size())
        throw std::runtime_error("PipelineData: phi row count mismatch");
    return d;
}

long elliptic_min_length(const RootSystemData& rd, const std::string& classLabel,
                         long order_cap) {
    // enumerate the whole group as the subsystem on all finite nodes
    std::vector<int> allNodes;
    for (int i = 1; i <= rd.rank; ++i) allNodes.push_back(i);
    SubsystemData whole = subsystem_for(rd, allNodes);
    MatrixWeylGroup g = enumerate_weyl(whole, order_cap);

    std::string suffix;
    auto want = parse_cyclotomic_string(classLabel, &suffix);
    if (!suffix.empty())
        throw std::invalid_argument("elliptic_min_length: decorated class labels are ambiguous");
    if (want.count(1))
        throw std::invalid_argument("elliptic_min_length: class is not elliptic");

    // characteristic polynomial on the reflection representation: strip the
    // (X-1)^(ambient_dim - rank) factor from the full matrix
    std::optional<long> best;
    std::set<int> classesSeen;
    for (size_t e = 0; e < g.elements.size(); ++e) {
        QPoly cp = charpoly_det(g.elements[e], false); // det(qI - w)
        auto fac = cyclotomic_factor(cp);
        auto it = fac.find(1);
        int extra = rd.ambient_dim - rd.rank;
        if (extra > 0) {
            if (it == fac.end() || it->second < extra)
                throw std::logic_error("elliptic_min_length: missing fixed-space factor");
            it->second -= extra;
            if (it->second == 0) fac.erase(it);
        }
        if (fac != want) continue;
        classesSeen.insert(g.class_of[e]);
        if (!best || g.lengths[e] < *best) best = g.lengths[e];
    }
    if (!best) throw std::invalid_argument("elliptic_min_length: no class with label " + classLabel);
    return *best;
}

FixedPointReport pipeline_count(const RootSystemData& rd, const std::string& classLabel,
                                const SubsystemData& sd, const PipelineData& data) {
    FixedPointReport rep;
    int classIdx = -1;
    for (size_t i = 0; i < data.class_labels.size(); ++i)
        if (data.class_labels[i] == classLabel) classIdx = static_cast<int>(i);
    if (classIdx < 0)
        throw std::invalid_argument("pipeline_count: class '" + classLabel +
                                    "' not present in the data");

    // bracket = sum_E A[E][C] sum_{E'} phi[E][E'] (E' : Pi_{G_K})
    std::vector<QPoly> inner(data.irr_labels.size());
    for (size_t i = 0; i < data.irr_labels.size(); ++i)
        inner[i] = inner_with_pi(rd, data.irr_labels[i], sd);
    QPoly bracket;
    for (size_t e = 0; e < data.irr_labels.size(); ++e) {
        if (data.A[e][classIdx].is_zero()) continue;
        QPoly sum;
        for (size_t ep = 0; ep < data.irr_labels.size(); ++ep) {
            if (data.phi[e][ep] == 0) continue;
            sum += inner[ep] * data.phi[e][ep];
        }
        bracket += data.A[e][classIdx] * sum;
    }

    QPoly orderG = group_order_polynomial(rd);
    QPoly orderGK = group_order_polynomial(sd);
    rep.P = (orderG * bracket).div_exact(orderGK);

    rep.dim_gk = sd.dim_gk;
    rep.d_c = elliptic_min_length(rd, classLabel);
    rep.csmall = !rep.P.is_zero() && rep.dim_gk == rep.d_c;
    if (rep.csmall) {
        QPoly ratio = rep.P.div_exact(orderG);
        if (ratio.degree() != 0)
            throw std::logic_error("pipeline_count: small-class count is not a constant multiple");
        Int m = ratio.coeff(0);
        if (m < 1) throw std::logic_error("pipeline_count: multiplicity below one");
        rep.m_kc = m;
    }
    std::ostringstream os;
    os << "P = " << rep.P.to_string() << "; dim G_K = " << rep.dim_gk << ", d_C = " << rep.d_c;
    rep.detail = os.str();
    return rep;
}

} // namespace weyltk
