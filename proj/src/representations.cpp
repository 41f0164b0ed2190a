#include "weyltk/representations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace weyltk {

namespace {

QPoly det_one_minus_qw(Family f, const SignedCycleType& t) {
    QPoly det = QPoly::one();
    for (int c : t.pos) {
        std::vector<Int> v(c + 1, Int(0));
        v[0] = 1;
        v[c] = -1;
        det *= QPoly(std::move(v)); // 1 - q^c
    }
    for (int c : t.neg) {
        std::vector<Int> v(c + 1, Int(0));
        v[0] = 1;
        v[c] = 1;
        det *= QPoly(std::move(v)); // 1 + q^c
    }
    if (f == Family::S) {
        // reflection representation drops one trivial summand
        std::vector<Int> oneMinusQ{Int(1), Int(-1)};
        det = det.div_exact(QPoly(std::move(oneMinusQ)));
    }
    return det;
}

} // namespace

int GroupData::index_of(const IrrLabel& rep) const {
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i] == rep) return static_cast<int>(i);
    throw std::invalid_argument("GroupData: unknown label " + rep.to_string());
}

const GroupData& group_data(Family f, int rank, int max_rank) {
    static std::map<std::pair<Family, int>, GroupData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f, rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (rank > max_rank)
        throw std::invalid_argument("group_data: rank exceeds the configured limit");

    GroupData g;
    g.fam = f;
    g.rank = rank;
    g.order = family_order(f, rank);
    g.classes = &family_classes(f, rank);
    g.irreps = family_irreps(f, rank);

    size_t nc = g.classes->types.size();
    for (const auto& rep : g.irreps) {
        std::vector<long> row(nc);
        for (size_t c = 0; c < nc; ++c) row[c] = chi_value(rep, g.classes->types[c]);
        g.chi.push_back(std::move(row));
    }

    QPoly numer = QPoly::one();
    for (int d : family_degrees(f, rank)) {
        std::vector<Int> v(d + 1, Int(0));
        v[0] = 1;
        v[d] = -1;
        numer *= QPoly(std::move(v)); // 1 - q^d
    }
    std::vector<QPoly> quot(nc);
    for (size_t c = 0; c < nc; ++c) {
        g.class_det.push_back(rank == 0 ? QPoly::one()
                                        : det_one_minus_qw(f, g.classes->types[c]));
        quot[c] = rank == 0 ? QPoly::one() : numer.div_exact(g.class_det[c]);
    }
    for (size_t i = 0; i < g.irreps.size(); ++i) {
        QPoly acc;
        for (size_t c = 0; c < nc; ++c)
            acc += quot[c] * (Int(g.classes->sizes[c]) * g.chi[i][c]);
        g.fake.push_back(acc.div_exact(Int(g.order)));
    }
    return cache.emplace(key, std::move(g)).first->second;
}

namespace {

Family family_of_kind(LabelKind k) {
    switch (k) {
        case LabelKind::S: return Family::S;
        case LabelKind::B: return Family::B;
        case LabelKind::D: return Family::D;
    }
    throw std::logic_error("family_of_kind");
}

} // namespace

QPoly fake_degree_pair_sum(const IrrLabel& rep) {
    const GroupData& g = group_data(family_of_kind(rep.kind()), rep.n());
    return g.fake[g.index_of(rep)];
}

QPoly fake_degree(const IrrLabel& rep) {
    if (rep.kind() == LabelKind::D && rep.degenerate())
        throw degenerate_label_error("fake_degree: degenerate pair " + rep.to_string() +
                                     " (only the constituent sum is defined)");
    return fake_degree_pair_sum(rep);
}

int b_invariant(const IrrLabel& rep) {
    QPoly f = fake_degree(rep);
    if (f.is_zero()) throw std::logic_error("b_invariant: zero fake degree");
    return f.low_degree();
}

bool is_dagger(const IrrLabel& rep) {
    QPoly f = fake_degree(rep);
    if (f.is_zero()) throw std::logic_error("is_dagger: zero fake degree");
    return f.coeff(f.low_degree()) == 1;
}

Embedding Embedding::dense(Factor ambient, std::vector<Factor> factors) {
    Embedding e;
    e.ambient = ambient;
    e.factors = std::move(factors);
    int off = 0;
    for (const auto& f : e.factors) {
        e.offsets.push_back(off);
        off += f.rank;
    }
    e.validate();
    return e;
}

long Embedding::sub_order() const {
    long o = 1;
    for (const auto& f : factors) o *= family_order(f.fam, f.rank);
    return o;
}

void Embedding::validate() const {
    if (factors.size() != offsets.size())
        throw std::invalid_argument("Embedding: factor/offset mismatch");
    std::vector<bool> used(ambient.rank, false);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].rank < 0) throw std::invalid_argument("Embedding: negative rank");
        for (int c = offsets[i]; c < offsets[i] + factors[i].rank; ++c) {
            if (c < 0 || c >= ambient.rank)
                throw std::invalid_argument("Embedding: block out of range");
            if (used[c]) throw std::invalid_argument("Embedding: overlapping blocks");
            used[c] = true;
        }
        if (ambient.fam == Family::S && factors[i].fam != Family::S)
            throw std::invalid_argument("Embedding: signed factor in a symmetric ambient group");
        if (ambient.fam == Family::D && factors[i].fam == Family::B)
            throw std::invalid_argument("Embedding: odd factor in an even ambient group");
    }
}

namespace {

struct SubClassVisitor {
    const Embedding& emb;
    // per factor: class list
    std::vector<const FamilyClasses*> fc;

    explicit SubClassVisitor(const Embedding& e) : emb(e) {
        for (const auto& f : e.factors) fc.push_back(&family_classes(f.fam, f.rank));
    }

    /// Iterates over tuples of factor classes; fn(sizeProduct, factorTypes,
    /// mergedAmbientType).
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<size_t> idx(emb.factors.size(), 0);
        int fixed = emb.ambient.rank;
        for (const auto& f : emb.factors) fixed -= f.rank;
        while (true) {
            long size = 1;
            std::vector<const SignedCycleType*> types;
            for (size_t i = 0; i < idx.size(); ++i) {
                size *= fc[i]->sizes[idx[i]];
                types.push_back(&fc[i]->types[idx[i]]);
            }
            SignedCycleType merged;
            for (auto* t : types) {
                merged.pos.insert(merged.pos.end(), t->pos.begin(), t->pos.end());
                merged.neg.insert(merged.neg.end(), t->neg.begin(), t->neg.end());
            }
            for (int i = 0; i < fixed; ++i) merged.pos.push_back(1);
            std::sort(merged.pos.begin(), merged.pos.end(), std::greater<int>());
            std::sort(merged.neg.begin(), merged.neg.end(), std::greater<int>());
            fn(size, types, merged);

            size_t i = idx.size();
            while (i-- > 0) {
                if (++idx[i] < fc[i]->types.size()) break;
                idx[i] = 0;
                if (i == 0) return;
            }
            if (idx.empty()) return; // single empty-product iteration done
        }
    }
};

long chi_tuple(const std::vector<IrrLabel>& reps,
               const std::vector<const SignedCycleType*>& types) {
    long v = 1;
    for (size_t i = 0; i < reps.size(); ++i) v *= chi_value(reps[i], *types[i]);
    return v;
}

} // namespace

std::vector<Int> induce_mult(const Embedding& emb, const std::vector<IrrLabel>& reps) {
    emb.validate();
    if (reps.size() != emb.factors.size())
        throw std::invalid_argument("induce_mult: one representation per factor required");
    for (size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].kind() != (emb.factors[i].fam == Family::S   ? LabelKind::S
                               : emb.factors[i].fam == Family::B ? LabelKind::B
                                                                 : LabelKind::D) ||
            reps[i].n() != emb.factors[i].rank)
            throw std::invalid_argument("induce_mult: representation does not match factor");
        if (reps[i].kind() == LabelKind::D && reps[i].degenerate())
            throw degenerate_label_error("induce_mult: degenerate factor representation " +
                                         reps[i].to_string());
    }

    const GroupData& amb = group_data(emb.ambient.fam, emb.ambient.rank);
    std::vector<Int> acc(amb.irreps.size(), Int(0));
    SubClassVisitor visitor(emb);
    visitor.for_each([&](long size, const std::vector<const SignedCycleType*>& types,
                         const SignedCycleType& merged) {
        long cs = chi_tuple(reps, types);
        if (cs == 0) return;
        int c = amb.classes->index_of(merged);
        Int w = Int(size) * cs;
        for (size_t i = 0; i < amb.irreps.size(); ++i)
            if (amb.chi[i][c] != 0) acc[i] += w * amb.chi[i][c];
    });
    long subOrder = emb.sub_order();
    for (auto& x : acc) {
        if (x % subOrder != 0)
            throw std::logic_error("induce_mult: inner product is not integral");
        x /= subOrder;
        if (x < 0) throw std::logic_error("induce_mult: negative multiplicity");
    }
    return acc;
}

RestrictionTable restrict_mult(const Embedding& emb, const IrrLabel& rep) {
    emb.validate();
    const GroupData& amb = group_data(emb.ambient.fam, emb.ambient.rank);
    (void)amb.index_of(rep); // validates membership
    if (rep.kind() == LabelKind::D && rep.degenerate())
        throw degenerate_label_error("restrict_mult: degenerate ambient representation");

    // enumerate tuples of factor irreps
    std::vector<const std::vector<IrrLabel>*> lists;
    for (const auto& f : emb.factors) lists.push_back(&family_irreps(f.fam, f.rank));
    RestrictionTable out;
    std::vector<size_t> idx(emb.factors.size(), 0);
    while (true) {
        std::vector<IrrLabel> tuple;
        for (size_t i = 0; i < idx.size(); ++i) tuple.push_back((*lists[i])[idx[i]]);
        bool anyDegenerate = false;
        for (const auto& t : tuple)
            if (t.kind() == LabelKind::D && t.degenerate()) anyDegenerate = true;
        if (!anyDegenerate) {
            Int m = 0;
            SubClassVisitor visitor(emb);
            visitor.for_each([&](long size, const std::vector<const SignedCycleType*>& types,
                                 const SignedCycleType& merged) {
                long cs = chi_tuple(tuple, types);
                if (cs == 0) return;
                m += Int(size) * cs * chi_value(rep, merged);
            });
            if (m % emb.sub_order() != 0)
                throw std::logic_error("restrict_mult: inner product is not integral");
            m /= emb.sub_order();
            if (m != 0) {
                out.tuples.push_back(tuple);
                out.mult.push_back(m);
            }
        }
        size_t i = idx.size();
        bool done = idx.empty();
        while (i-- > 0) {
            if (++idx[i] < lists[i]->size()) break;
            idx[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

IrrLabel j_induce(const Embedding& emb, const std::vector<IrrLabel>& reps) {
    // b-invariant and dagger property of the source (multiplicative over factors)
    int bSub = 0;
    for (const auto& r : reps) {
        QPoly f = fake_degree(r); // throws for degenerate labels
        bSub += f.low_degree();
        if (f.coeff(f.low_degree()) != 1)
            throw std::invalid_argument("j_induce: source representation " + r.to_string() +
                                        " is not multiplicity-one at its b-invariant");
    }

    std::vector<Int> mult = induce_mult(emb, reps);
    const GroupData& amb = group_data(emb.ambient.fam, emb.ambient.rank);
    std::optional<size_t> found;
    for (size_t i = 0; i < amb.irreps.size(); ++i) {
        if (mult[i] == 0) continue;
        const IrrLabel& cand = amb.irreps[i];
        int bi = amb.fake[i].low_degree();
        if (cand.kind() == LabelKind::D && cand.degenerate()) {
            // only the constituent sum is known; a constituent could match
            // whenever the lowest pooled degree does not exceed the target
            if (bi <= bSub)
                throw degenerate_label_error(
                    "j_induce: degenerate pair " + cand.to_string() +
                    " with pooled b-invariant " + std::to_string(bi) +
                    " cannot be resolved against target " + std::to_string(bSub));
            continue;
        }
        if (bi != bSub) continue;
        if (found)
            throw std::logic_error("j_induce: multiple b-matching constituents");
        found = i;
    }
    if (!found) throw std::logic_error("j_induce: no b-matching constituent");
    if (amb.fake[*found].coeff(bSub) != 1)
        throw std::logic_error("j_induce: selected constituent is not multiplicity-one");
    return amb.irreps[*found];
}

namespace {

std::vector<int> bar_p(const PartitionSeq& p) { return conjugate_counts(p); }

} // namespace

Embedding tower_symmetric(const PartitionSeq& p) {
    auto bp = bar_p(p);
    std::vector<Factor> fs;
    for (int i = static_cast<int>(bp.size()) - 1; i >= 0; --i)
        fs.push_back(Factor{Family::S, bp[i]});
    return Embedding::dense(Factor{Family::B, p.n()}, std::move(fs));
}

Embedding tower_mixed_corner(const PartitionSeq& p) {
    auto bp = bar_p(p);
    int s = p.sigma();
    int a = (s - s % 2) / 2, b = (s + s % 2) / 2;
    std::vector<Factor> fs;
    for (int i = static_cast<int>(bp.size()) - 1; i >= 1; --i)
        fs.push_back(Factor{Family::S, bp[i]});
    fs.push_back(Factor{Family::B, a});
    fs.push_back(Factor{Family::D, b});
    return Embedding::dense(Factor{Family::B, p.n()}, std::move(fs));
}

Embedding tower_even_corner(const PartitionSeq& p) {
    if (p.sigma() % 2 != 0)
        throw std::invalid_argument("tower_even_corner: sigma must be even");
    auto bp = bar_p(p);
    std::vector<Factor> fs;
    for (int i = static_cast<int>(bp.size()) - 1; i >= 1; --i)
        fs.push_back(Factor{Family::S, bp[i]});
    fs.push_back(Factor{Family::D, p.sigma() / 2});
    fs.push_back(Factor{Family::D, p.sigma() / 2});
    return Embedding::dense(Factor{Family::D, p.n()}, std::move(fs));
}

std::vector<IrrLabel> sign_reps_for(const Embedding& emb) {
    std::vector<IrrLabel> reps;
    for (const auto& f : emb.factors) {
        LabelKind k = f.fam == Family::S ? LabelKind::S
                      : f.fam == Family::B ? LabelKind::B
                                           : LabelKind::D;
        reps.push_back(IrrLabel::sign(k, f.rank));
    }
    return reps;
}

IrrLabel j_closed_even_rank(int c) {
    // n = 2c: [(0 < 2 < 3 < ... < c+1), (1 < 2 < ... < c)]
    std::vector<int> top{0};
    for (int v = 2; v <= c + 1; ++v) top.push_back(v);
    std::vector<int> bottom;
    for (int v = 1; v <= c; ++v) bottom.push_back(v);
    return IrrLabel::from_symbol_B(top, bottom);
}

IrrLabel j_closed_odd_rank(int c) {
    // n = 2c+1: [(1 < 2 < ... < c+1), (1 < 2 < ... < c)]
    std::vector<int> top, bottom;
    for (int v = 1; v <= c + 1; ++v) top.push_back(v);
    for (int v = 1; v <= c; ++v) bottom.push_back(v);
    return IrrLabel::from_symbol_B(top, bottom);
}

IrrLabel j_closed_even_pair(int c) {
    // n = 2c: [(2 < 3 < ... < c+1), (0 < 1 < ... < c-1)]
    std::vector<int> top, bottom;
    for (int v = 2; v <= c + 1; ++v) top.push_back(v);
    for (int v = 0; v <= c - 1; ++v) bottom.push_back(v);
    return IrrLabel::from_symbol_D(top, bottom);
}

IrrLabel j_closed_form(const PartitionSeq& p, JTowerVariant v) {
    int s = p.sigma();
    int tau = s / 2;
    auto pt = [&](int t) { return p.part(t); };
    if (v == JTowerVariant::SymmetricTower || v == JTowerVariant::MixedCornerTower) {
        std::vector<int> top, bottom;
        if (s % 2 == 1) {
            // [(p_s < p_{s-2}+1 < ... < p_1+tau), (p_{s-1} < p_{s-3}+1 < ... < p_2+tau-1)]
            for (int j = 0; s - 2 * j >= 1; ++j) top.push_back(pt(s - 2 * j) + j);
            for (int j = 0; s - 1 - 2 * j >= 2; ++j) bottom.push_back(pt(s - 1 - 2 * j) + j);
        } else {
            // [(0 < p_{s-1}+1 < ... < p_1+tau), (p_s < p_{s-2}+1 < ... < p_2+tau-1)]
            top.push_back(0);
            for (int j = 0; s - 1 - 2 * j >= 1; ++j) top.push_back(pt(s - 1 - 2 * j) + j + 1);
            for (int j = 0; s - 2 * j >= 2; ++j) bottom.push_back(pt(s - 2 * j) + j);
        }
        return IrrLabel::from_symbol_B(top, bottom);
    }
    // even-corner variant: sigma = 2 tau required
    if (s % 2 != 0)
        throw std::invalid_argument("j_closed_form: even-corner form needs even sigma");
    (void)tau;
    std::vector<int> top, bottom;
    // [(p_{s-1}+1 < p_{s-3}+2 < ... < p_1+tau), (p_s-1 < p_{s-2} < ... < p_2+tau-2)]
    for (int j = 0; s - 1 - 2 * j >= 1; ++j) top.push_back(pt(s - 1 - 2 * j) + j + 1);
    for (int j = 0; s - 2 * j >= 2; ++j) bottom.push_back(pt(s - 2 * j) + j - 1);
    return IrrLabel::from_symbol_D(top, bottom);
}

PartitionSeq lower_top_parts(const PartitionSeq& p) {
    auto bp = bar_p(p);
    int bpk = bp.back(); // number of parts equal to the maximum size class >= k
    std::vector<int> parts = p.parts();
    for (int i = 0; i < bpk; ++i) parts[i] -= 1;
    std::vector<int> cleaned;
    for (int x : parts)
        if (x > 0) cleaned.push_back(x);
    return PartitionSeq(cleaned);
}

} // namespace weyltk
