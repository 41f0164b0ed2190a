#include "weyltk/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weyltk {

namespace {

long dot(const RootVec& a, const RootVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

RootVec reflect(const RootVec& beta, const RootVec& alpha) {
    long num = 2 * dot(beta, alpha), den = dot(alpha, alpha);
    if (num % den != 0) throw std::logic_error("reflect: non-integral Cartan pairing");
    long c = num / den;
    RootVec r = beta;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= static_cast<int>(c) * alpha[i];
    return r;
}

/// Closure of the simple roots under their own reflections = all roots.
std::vector<RootVec> generate_roots(const std::vector<RootVec>& simples) {
    std::set<RootVec> all(simples.begin(), simples.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RootVec> cur(all.begin(), all.end());
        for (const auto& r : cur) {
            for (const auto& s : simples) {
                RootVec img = reflect(r, s);
                if (all.insert(img).second) grew = true;
            }
        }
    }
    return {all.begin(), all.end()};
}

std::vector<int> degrees_for(const std::string& label, int rank) {
    std::vector<int> d;
    if (label == "A") {
        for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
    } else if (label == "BC") {
        for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
    } else if (label == "D") {
        for (int i = 1; i < rank; ++i) d.push_back(2 * i);
        d.push_back(rank);
    } else if (label == "G2") {
        d = {2, 6};
    } else if (label == "F4") {
        d = {2, 6, 8, 12};
    } else if (label == "E6") {
        d = {2, 5, 6, 8, 9, 12};
    } else if (label == "E7") {
        d = {2, 6, 8, 10, 12, 14, 18};
    } else if (label == "E8") {
        d = {2, 8, 12, 14, 18, 20, 24, 30};
    } else {
        throw std::logic_error("degrees_for: unknown component label " + label);
    }
    return d;
}

QPoly q_bracket(int d) {
    std::vector<Int> c(d, Int(1));
    return QPoly(std::move(c)); // 1 + q + ... + q^{d-1}
}

QPoly poincare_from_degrees(const std::vector<int>& degrees) {
    QPoly p = QPoly::one();
    for (int d : degrees) p *= q_bracket(d);
    return p;
}

std::vector<RootVec> e8_simples() {
    // doubled coordinates: integral entries
    std::vector<RootVec> s(8, RootVec(8, 0));
    s[0] = {1, -1, -1, -1, -1, -1, -1, 1};  // (e1-e2-...-e7+e8)/2, doubled
    s[1] = {2, 2, 0, 0, 0, 0, 0, 0};        // e1+e2
    s[2] = {-2, 2, 0, 0, 0, 0, 0, 0};       // e2-e1
    for (int i = 3; i < 8; ++i) {
        s[i][i - 2] = -2;
        s[i][i - 1] = 2;                     // e_{i-1} - e_{i-2}
    }
    return s;
}

struct TypeSpec {
    std::vector<RootVec> simples;
    int ambient;
};

TypeSpec simple_roots_for(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("root_data: bad type '" + type + "'");
    char fam = type[0];
    int rank = std::stoi(type.substr(1));
    TypeSpec ts;
    auto unit = [&](int dimension, int i, int v) {
        RootVec r(dimension, 0);
        r[i] = v;
        return r;
    };
    switch (fam) {
        case 'A': {
            if (rank < 1 || rank > 8) throw std::invalid_argument("root_data: A rank 1..8");
            ts.ambient = rank + 1;
            for (int i = 0; i < rank; ++i) {
                RootVec r(ts.ambient, 0);
                r[i] = 1;
                r[i + 1] = -1;
                ts.simples.push_back(r);
            }
            return ts;
        }
        case 'B': {
            if (rank < 1 || rank > 8) throw std::invalid_argument("root_data: B rank 1..8");
            ts.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RootVec r(rank, 0);
                r[i] = 1;
                r[i + 1] = -1;
                ts.simples.push_back(r);
            }
            ts.simples.push_back(unit(rank, rank - 1, 1));
            return ts;
        }
        case 'C': {
            if (rank < 2 || rank > 8) throw std::invalid_argument("root_data: C rank 2..8");
            ts.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RootVec r(rank, 0);
                r[i] = 1;
                r[i + 1] = -1;
                ts.simples.push_back(r);
            }
            ts.simples.push_back(unit(rank, rank - 1, 2));
            return ts;
        }
        case 'D': {
            if (rank < 3 || rank > 8) throw std::invalid_argument("root_data: D rank 3..8");
            ts.ambient = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                RootVec r(rank, 0);
                r[i] = 1;
                r[i + 1] = -1;
                ts.simples.push_back(r);
            }
            RootVec r(rank, 0);
            r[rank - 2] = 1;
            r[rank - 1] = 1;
            ts.simples.push_back(r);
            return ts;
        }
        case 'G': {
            if (rank != 2) throw std::invalid_argument("root_data: G2 only");
            ts.ambient = 3;
            // node 1 long (adjacent to the affine node), node 2 short
            ts.simples = {{-2, 1, 1}, {1, -1, 0}};
            return ts;
        }
        case 'F': {
            if (rank != 4) throw std::invalid_argument("root_data: F4 only");
            ts.ambient = 4;
            // doubled coordinates
            ts.simples = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            return ts;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw std::invalid_argument("root_data: E6..E8 only");
            ts.ambient = 8;
            auto e8 = e8_simples();
            ts.simples.assign(e8.begin(), e8.begin() + rank);
            return ts;
        }
        default:
            throw std::invalid_argument("root_data: unknown family '" + type + "'");
    }
}

struct ComponentInfo {
    std::string label;
    int rank;
};

/// Classifies an irreducible component by rank, root count and the number
/// of distinct root lengths (resolves the 72-root tie between rank-6
/// types: two lengths for B/C, one for the simply-laced type).
ComponentInfo classify_component(int rank, size_t rootCount, int lengthKinds) {
    auto rc = static_cast<size_t>(rootCount);
    if (rc == static_cast<size_t>(rank) * (rank + 1)) return {"A", rank};
    if (rank == 6 && rc == 72 && lengthKinds == 1) return {"E6", rank};
    if (rc == 2 * static_cast<size_t>(rank) * rank) return {"BC", rank};
    if (rank >= 4 && rc == 2 * static_cast<size_t>(rank) * (rank - 1)) return {"D", rank};
    if (rank == 2 && rc == 12) return {"G2", rank};
    if (rank == 4 && rc == 48 && lengthKinds == 2) return {"F4", rank};
    if (rank == 7 && rc == 126) return {"E7", rank};
    if (rank == 8 && rc == 240) return {"E8", rank};
    throw std::logic_error("classify_component: unrecognized component (rank " +
                           std::to_string(rank) + ", " + std::to_string(rootCount) + " roots)");
}

} // namespace

long RootSystemData::weyl_order() const {
    Int o = 1;
    for (int d : degrees) o *= d;
    return to_i64(o);
}

bool RootSystemData::is_positive(const RootVec& r) const {
    // solve r = sum c_i simples_i over Q; nonneg coefficients <=> positive
    // (precomputed expansions are cached per root in root_data construction;
    // here a simple on-the-fly solve keeps the structure self-contained)
    size_t dim = ambient_dim, k = simples.size();
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(k + 1, Rat(0)));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = simples[j][i];
        a[i][k] = r[i];
    }
    // gaussian elimination
    size_t row = 0;
    std::vector<int> pivotOfCol(k, -1);
    for (size_t col = 0; col < k && row < dim; ++col) {
        size_t piv = row;
        while (piv < dim && a[piv][col] == 0) ++piv;
        if (piv == dim) continue;
        std::swap(a[row], a[piv]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j <= k; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivotOfCol[col] = static_cast<int>(row);
        ++row;
    }
    for (size_t i = row; i < dim; ++i)
        if (a[i][k] != 0) throw std::logic_error("is_positive: vector outside the root lattice span");
    for (size_t col = 0; col < k; ++col) {
        if (pivotOfCol[col] < 0) continue;
        if (a[pivotOfCol[col]][k] < 0) return false;
    }
    return true;
}

const RootSystemData& root_data(const std::string& type) {
    static std::map<std::string, RootSystemData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(type);
    if (it != cache.end()) return it->second;

    TypeSpec ts = simple_roots_for(type);
    RootSystemData rd;
    rd.type = type;
    rd.rank = static_cast<int>(ts.simples.size());
    rd.ambient_dim = ts.ambient;
    rd.simples = ts.simples;
    rd.roots = generate_roots(ts.simples);

    char fam = type[0];
    std::string label = fam == 'A'                ? "A"
                        : (fam == 'B' || fam == 'C') ? "BC"
                        : fam == 'D'              ? "D"
                                                  : type;
    rd.degrees = degrees_for(label, rd.rank);
    rd.nu = static_cast<long>(rd.roots.size()) / 2;
    long degSum = 0;
    for (int d : rd.degrees) degSum += d - 1;
    if (degSum != rd.nu)
        throw std::logic_error("root_data: degree data inconsistent with root count");
    rd.poincare = poincare_from_degrees(rd.degrees);

    // affine node: the unique negative root r with r - s never a root for
    // any simple s (the lowest root)
    std::set<RootVec> rootSet(rd.roots.begin(), rd.roots.end());
    std::vector<RootVec> candidates;
    for (const auto& r : rd.roots) {
        if (rd.is_positive(r)) continue;
        bool ok = true;
        for (const auto& s : rd.simples) {
            RootVec diff(r.size());
            for (size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - s[i];
            if (rootSet.count(diff)) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(r);
    }
    if (candidates.size() != 1)
        throw std::logic_error("root_data: lowest root is not unique for " + type);
    rd.affine = candidates[0];

    return cache.emplace(type, std::move(rd)).first->second;
}

std::string SubsystemData::node_string() const {
    if (nodes.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) os << ",";
        os << nodes[i];
    }
    return os.str();
}

SubsystemData subsystem_for(const RootSystemData& rd, const std::vector<int>& nodesIn) {
    SubsystemData sd;
    sd.ambient = &rd;
    sd.nodes = nodesIn;
    std::sort(sd.nodes.begin(), sd.nodes.end());
    if (std::adjacent_find(sd.nodes.begin(), sd.nodes.end()) != sd.nodes.end())
        throw std::invalid_argument("subsystem_for: duplicate node");
    if (static_cast<int>(sd.nodes.size()) > rd.rank)
        throw std::invalid_argument("subsystem_for: subset must be proper");
    for (int nd : sd.nodes) {
        if (nd < 0 || nd > rd.rank)
            throw std::invalid_argument("subsystem_for: node out of range");
        sd.gens.push_back(nd == 0 ? rd.affine : rd.simples[nd - 1]);
    }

    // subsystem = orbit of the generators under their own reflections
    std::set<RootVec> orbit(sd.gens.begin(), sd.gens.end());
    bool grew = !sd.gens.empty();
    while (grew) {
        grew = false;
        std::vector<RootVec> cur(orbit.begin(), orbit.end());
        for (const auto& r : cur)
            for (const auto& g : sd.gens) {
                RootVec img = reflect(r, g);
                if (orbit.insert(img).second) grew = true;
            }
    }
    sd.roots.assign(orbit.begin(), orbit.end());
    sd.nu_k = static_cast<long>(sd.roots.size()) / 2;
    sd.dim_gk = static_cast<long>(sd.roots.size()) + rd.rank;

    // positivity w.r.t. the K-simple system: nonnegative K-coordinates
    for (const auto& r : sd.roots) {
        // solve r in terms of gens
        size_t dim = r.size(), k = sd.gens.size();
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(k + 1, Rat(0)));
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < k; ++j) a[i][j] = sd.gens[j][i];
            a[i][k] = r[i];
        }
        size_t row = 0;
        std::vector<int> pivotOfCol(k, -1);
        for (size_t col = 0; col < k && row < dim; ++col) {
            size_t piv = row;
            while (piv < dim && a[piv][col] == 0) ++piv;
            if (piv == dim) continue;
            std::swap(a[row], a[piv]);
            Rat inv = Rat(1) / a[row][col];
            for (size_t j = col; j <= k; ++j) a[row][j] *= inv;
            for (size_t i = 0; i < dim; ++i) {
                if (i == row || a[i][col] == 0) continue;
                Rat f = a[i][col];
                for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
            }
            pivotOfCol[col] = static_cast<int>(row);
            ++row;
        }
        for (size_t i = row; i < dim; ++i)
            if (a[i][k] != 0)
                throw std::logic_error("subsystem_for: root outside the K-span");
        bool nonneg = true;
        for (size_t col = 0; col < k; ++col)
            if (pivotOfCol[col] >= 0 && a[pivotOfCol[col]][k] < 0) nonneg = false;
        if (nonneg) sd.positives.push_back(r);
    }
    if (static_cast<long>(sd.positives.size()) != sd.nu_k)
        throw std::logic_error("subsystem_for: positive system has wrong size");

    // components via the Dynkin graph on the generators
    size_t k = sd.gens.size();
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (size_t i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < k; ++j) {
                if (comp[j] >= 0 || dot(sd.gens[cur], sd.gens[j]) == 0) continue;
                comp[j] = ncomp;
                stack.push_back(j);
            }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        std::vector<RootVec> gensC;
        for (size_t i = 0; i < k; ++i)
            if (comp[i] == c) gensC.push_back(sd.gens[i]);
        // roots belonging to this component: nonzero pairing support
        size_t count = 0;
        std::set<long> norms;
        for (const auto& r : sd.roots) {
            bool inC = false;
            for (const auto& g : gensC)
                if (dot(r, g) != 0) inC = true;
            bool inOther = false;
            for (size_t i = 0; i < k; ++i)
                if (comp[i] != c && dot(r, sd.gens[i]) != 0) inOther = true;
            if (inC && inOther)
                throw std::logic_error("subsystem_for: root straddles components");
            if (inC) {
                ++count;
                norms.insert(dot(r, r));
            }
        }
        auto info = classify_component(static_cast<int>(gensC.size()), count,
                                       static_cast<int>(norms.size()));
        sd.components.emplace_back(info.label, info.rank);
        for (int d : degrees_for(info.label, info.rank)) sd.degrees.push_back(d);
    }
    std::sort(sd.degrees.begin(), sd.degrees.end());
    {
        long degSum = 0;
        for (int d : sd.degrees) degSum += d - 1;
        if (degSum != sd.nu_k)
            throw std::logic_error("subsystem_for: component degrees inconsistent");
    }
    sd.poincare_degrees = poincare_from_degrees(sd.degrees);
    return sd;
}

std::vector<SubsystemData> subsystems(const RootSystemData& rd, bool dedupe_by_conjugacy) {
    std::vector<SubsystemData> out;
    int nodes = rd.rank + 1;
    for (int mask = 0; mask < (1 << nodes) - 1; ++mask) {
        std::vector<int> ns;
        for (int i = 0; i < nodes; ++i)
            if (mask >> i & 1) ns.push_back(i);
        out.push_back(subsystem_for(rd, ns));
    }
    if (!dedupe_by_conjugacy) return out;

    // canonical form of a subsystem: the least image of its sorted root set
    // under the full ambient group (enumerable ambient groups only)
    {
        // the group acts by permutations of the root indices
        std::map<RootVec, int> indexOf;
        for (size_t i = 0; i < rd.roots.size(); ++i) indexOf[rd.roots[i]] = static_cast<int>(i);
        auto permOf = [&](const RootVec& alpha) {
            std::vector<int> perm(rd.roots.size());
            for (size_t i = 0; i < rd.roots.size(); ++i)
                perm[i] = indexOf.at(reflect(rd.roots[i], alpha));
            return perm;
        };
        std::vector<std::vector<int>> gens;
        for (const auto& s : rd.simples) gens.push_back(permOf(s));
        std::set<std::vector<int>> seen;
        std::vector<int> id(rd.roots.size());
        for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
        std::vector<std::vector<int>> elements{id};
        seen.insert(id);
        for (size_t head = 0; head < elements.size(); ++head) {
            if (elements.size() > 400000)
                throw std::invalid_argument("subsystems: group too large to deduplicate");
            for (const auto& g : gens) {
                std::vector<int> next(id.size());
                for (size_t i = 0; i < id.size(); ++i) next[i] = g[elements[head][i]];
                if (seen.insert(next).second) elements.push_back(next);
            }
        }
        // canonicalize each subsystem as a sorted index set, minimized over W
        std::vector<SubsystemData> unique;
        std::set<std::vector<int>> canon;
        for (auto& sd : out) {
            std::vector<int> idx;
            for (const auto& r : sd.roots) idx.push_back(indexOf.at(r));
            std::sort(idx.begin(), idx.end());
            std::vector<int> best;
            for (const auto& w : elements) {
                std::vector<int> img;
                img.reserve(idx.size());
                for (int i : idx) img.push_back(w[i]);
                std::sort(img.begin(), img.end());
                if (best.empty() || img < best) best = std::move(img);
            }
            if (canon.insert(best).second) unique.push_back(std::move(sd));
        }
        return unique;
    }
}

} // namespace weyltk
