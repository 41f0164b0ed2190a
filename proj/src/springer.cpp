#include "weyltk/springer.hpp"

#include <algorithm>
#include <sstream>

namespace weyltk {

namespace {

std::vector<int> staircase_subtract(const std::vector<int>& asc, const char* what) {
    // asc strictly increasing; returns the partition (descending, trimmed)
    std::vector<int> parts;
    for (size_t i = 0; i < asc.size(); ++i) {
        int v = asc[i] - static_cast<int>(i);
        if (v < 0) throw std::invalid_argument(std::string(what) + ": negative staircase residue");
        parts.push_back(v);
    }
    std::reverse(parts.begin(), parts.end());
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument(std::string(what) + ": residues not weakly decreasing");
    return trim_partition(std::move(parts));
}

} // namespace

IrrLabel springer_label(const JordanType& j, GroupKind kind, SymbolScratch* scratch) {
    SymbolScratch sc;
    sc.z.assign(j.blocks.rbegin(), j.blocks.rend()); // ascending

    if (kind == GroupKind::SP) {
        if (j.total % 2 != 0)
            throw std::invalid_argument("springer_label: SP blocks must sum to 2n");
        for (int b : sc.z)
            if (b % 2 != 0)
                throw std::invalid_argument("springer_label: SP requires even blocks");
        if (sc.z.size() % 2 != 0) sc.z.insert(sc.z.begin(), 0);
    } else if (kind == GroupKind::SO_ODD) {
        if (j.total % 2 != 1)
            throw std::invalid_argument("springer_label: SO_ODD blocks must sum to 2n+1");
    } else {
        if (j.total % 2 != 0)
            throw std::invalid_argument("springer_label: SO_EVEN blocks must sum to 2n");
        if (j.blocks.size() % 2 != 0)
            throw std::invalid_argument("springer_label: SO_EVEN requires an even block count");
    }
    sc.M = static_cast<int>(sc.z.size());

    for (int i = 0; i < sc.M; ++i) sc.z_prime.push_back(sc.z[i] + i);
    for (int i = 1; i < sc.M; ++i)
        if (sc.z_prime[i] <= sc.z_prime[i - 1])
            throw std::logic_error("springer_label: z' not strictly increasing");

    for (int v : sc.z_prime) (v % 2 == 0 ? sc.evens : sc.odds).push_back(v);
    size_t expectEvens = sc.M / 2, expectOdds = (sc.M + 1) / 2;
    if (sc.evens.size() != expectEvens || sc.odds.size() != expectOdds)
        throw std::invalid_argument("springer_label: parity split has sizes (" +
                                    std::to_string(sc.evens.size()) + "," +
                                    std::to_string(sc.odds.size()) + "), expected (" +
                                    std::to_string(expectEvens) + "," +
                                    std::to_string(expectOdds) + ")");

    for (int v : sc.evens) sc.y.push_back(v / 2);
    for (int v : sc.odds) sc.y_prime.push_back((v - 1) / 2);

    std::vector<int> alpha = staircase_subtract(sc.y_prime, "springer_label: y'");
    std::vector<int> beta = staircase_subtract(sc.y, "springer_label: y");
    if (scratch) *scratch = sc;

    if (kind == GroupKind::SO_EVEN) return IrrLabel::make_D(alpha, beta);
    return IrrLabel::make_B(alpha, beta);
}

namespace {

// (p_t + shift) lists for the two symbol rows, descending t by steps of two
std::vector<int> row_from_parts(const PartitionSeq& p, int tStart, int shiftStart) {
    std::vector<int> row;
    int shift = shiftStart;
    for (int t = tStart; t >= 1; t -= 2) row.push_back(p.part(t) + shift++);
    return row;
}

} // namespace

IrrLabel springer_label_closed_form(const PartitionSeq& p, GroupKind kind) {
    int s = p.sigma();
    if (kind == GroupKind::SO_EVEN) {
        if (p.kappa_sigma() != 0)
            throw std::invalid_argument("springer_label_closed_form: SO_EVEN needs even sigma");
        // [(p_s-1 < p_{s-2} < ... < p_2+tau-2), (p_{s-1}+1 < ... < p_1+tau)]
        std::vector<int> first = row_from_parts(p, s, -1);
        std::vector<int> second = row_from_parts(p, s - 1, +1);
        return IrrLabel::from_symbol_D(first, second);
    }
    if (p.kappa_sigma() == 1) {
        // [(p_s < p_{s-2}+1 < ... < p_1+tau), (p_{s-1} < ... < p_2+tau-1)]
        return IrrLabel::from_symbol_B(row_from_parts(p, s, 0), row_from_parts(p, s - 1, 0));
    }
    // [(0 < p_{s-1}+1 < ... < p_1+tau), (p_s < ... < p_2+tau-1)]
    std::vector<int> top{0};
    for (int v : row_from_parts(p, s - 1, 1)) top.push_back(v);
    return IrrLabel::from_symbol_B(top, row_from_parts(p, s, 0));
}

std::pair<std::vector<int>, std::vector<int>> parity_split_from_parts(const PartitionSeq& p,
                                                                      GroupKind kind) {
    int s = p.sigma();
    int ks = p.kappa_sigma();
    // interleaving facts the split relies on, asserted rather than assumed
    for (int t = 1; t <= s; ++t) {
        if (psi(p, t) != 0) continue;
        if (t % 2 == 0 && t < s) {
            if (psi(p, t + 1) != 0 || p.part(t + 1) != p.part(t))
                throw std::logic_error("parity_split_from_parts: even-index interleaving fails");
        }
        if (t % 2 == 1) {
            if (t <= 1 || psi(p, t - 1) != 0 || p.part(t - 1) != p.part(t))
                throw std::logic_error("parity_split_from_parts: odd-index interleaving fails");
        }
    }

    std::vector<int> evens, odds;
    auto push = [](std::vector<int>& v, int x) { v.push_back(x); };
    if (kind == GroupKind::SP) {
        if (ks == 0) {
            for (int t = 1; t <= s; ++t)
                push(t % 2 == 0 ? evens : odds, 2 * p.part(t) + s - t);
        } else {
            for (int t = 1; t <= s; ++t)
                push(t % 2 == 0 ? evens : odds, 2 * p.part(t) + s - t + 1);
            push(evens, 0);
        }
    } else if (kind == GroupKind::SO_EVEN) {
        // even entries at kappa_t = kappa_{psi(t)}, i.e. psi-shifted parity even
        for (int t = 1; t <= s; ++t) {
            int v = 2 * p.part(t) + psi(p, t) + s - t;
            push(v % 2 == 0 ? evens : odds, v);
        }
    } else {
        if (ks == 1) {
            for (int t = 1; t <= s; ++t) {
                int v = 2 * p.part(t) + psi(p, t) + s - t;
                push(v % 2 == 0 ? evens : odds, v);
            }
        } else {
            for (int t = 1; t <= s; ++t) {
                int v = 2 * p.part(t) + psi(p, t) + s - t + 1;
                push(v % 2 == 0 ? evens : odds, v);
            }
            push(odds, 1);
        }
    }
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
    return {evens, odds};
}

std::string LabelTriple::to_string() const {
    std::ostringstream os;
    os << "procedure=" << procedure.to_string() << " closed=" << closed_form.to_string()
       << " j=" << j_induced.to_string() << (pass ? " PASS" : " FAIL");
    return os.str();
}

LabelTriple verify_label_triple(const PartitionSeq& p, GroupKind kind) {
    LabelTriple out;
    out.procedure = springer_label(jordan_type(p, kind), kind);
    out.closed_form = springer_label_closed_form(p, kind);
    Embedding emb = kind == GroupKind::SP      ? tower_symmetric(p)
                    : kind == GroupKind::SO_ODD ? tower_mixed_corner(p)
                                                : tower_even_corner(p);
    out.j_induced = j_induce(emb, sign_reps_for(emb));
    out.pass = out.procedure == out.closed_form && out.closed_form == out.j_induced;
    return out;
}

bool sp_so_labels_agree(const PartitionSeq& p) {
    IrrLabel sp = springer_label(jordan_type(p, GroupKind::SP), GroupKind::SP);
    IrrLabel so = springer_label(jordan_type(p, GroupKind::SO_ODD), GroupKind::SO_ODD);
    return sp == so;
}

IrrLabel j_of_springer(const std::vector<SpringerFactor>& factors, Factor ambient) {
    std::vector<Factor> fs;
    std::vector<IrrLabel> reps;
    for (const auto& f : factors) {
        fs.push_back(f.group);
        switch (f.group.fam) {
            case Family::S: {
                if (f.jordan.total != f.group.rank)
                    throw std::invalid_argument("j_of_springer: S factor blocks must sum to the rank");
                reps.push_back(IrrLabel::make_S(f.jordan.blocks));
                break;
            }
            case Family::B: {
                GroupKind kind;
                if (f.jordan.total == 2 * f.group.rank)
                    kind = GroupKind::SP;
                else if (f.jordan.total == 2 * f.group.rank + 1)
                    kind = GroupKind::SO_ODD;
                else
                    throw std::invalid_argument("j_of_springer: B factor blocks must sum to 2r or 2r+1");
                reps.push_back(springer_label(f.jordan, kind));
                break;
            }
            case Family::D: {
                if (f.jordan.total != 2 * f.group.rank)
                    throw std::invalid_argument("j_of_springer: D factor blocks must sum to 2r");
                reps.push_back(springer_label(f.jordan, GroupKind::SO_EVEN));
                break;
            }
        }
    }
    Embedding emb = Embedding::dense(ambient, std::move(fs));
    return j_induce(emb, reps);
}

} // namespace weyltk
