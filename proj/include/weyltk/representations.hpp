#pragma once

#include "weyltk/partition.hpp"
#include "weyltk/qpoly.hpp"
#include "weyltk/weyl_spec.hpp"

#include <optional>
#include <vector>

namespace weyltk {

/// Cached per-group data: classes, character matrix, fake degrees.
struct GroupData {
    Family fam;
    int rank = 0;
    long order = 0;
    const FamilyClasses* classes = nullptr;
    std::vector<IrrLabel> irreps;
    std::vector<std::vector<long>> chi;   // [irrep][class]
    std::vector<QPoly> fake;              // degenerate D rows hold constituent sums
    std::vector<QPoly> class_det;         // det(1 - q w) on the reflection rep
    int index_of(const IrrLabel& rep) const;
};
const GroupData& group_data(Family f, int rank, int max_rank = 8);

/// Graded multiplicity of the representation in the coinvariant algebra.
/// Throws degenerate_label_error for a degenerate D label (only the
/// constituent sum is defined; see fake_degree_pair_sum).
QPoly fake_degree(const IrrLabel& rep);
QPoly fake_degree_pair_sum(const IrrLabel& rep); // degenerate D labels allowed

/// Lowest degree of the fake degree polynomial.
int b_invariant(const IrrLabel& rep);
/// True when the coefficient at the lowest degree is exactly 1.
bool is_dagger(const IrrLabel& rep);

/// A product of reflection subgroups acting on disjoint coordinate blocks of
/// an ambient group of family S, B, or D; coordinates outside every block
/// are fixed.  An S factor permutes its block without signs; B and D factors
/// act as (even) signed permutations of theirs.
struct Embedding {
    Factor ambient;
    std::vector<Factor> factors;
    std::vector<int> offsets; // 0-based start coordinate per factor

    static Embedding dense(Factor ambient, std::vector<Factor> factors);
    long sub_order() const;
    void validate() const;
};

/// Multiplicities of every ambient irreducible in the representation induced
/// from the outer tensor product of the given factor representations
/// (Frobenius reciprocity, exact).  Order matches group_data(ambient).irreps.
std::vector<Int> induce_mult(const Embedding& emb, const std::vector<IrrLabel>& reps);

/// Restriction multiplicities of one ambient representation to the embedded
/// product, listed over tuples of factor irreducibles.
struct RestrictionTable {
    std::vector<std::vector<IrrLabel>> tuples;
    std::vector<Int> mult;
};
RestrictionTable restrict_mult(const Embedding& emb, const IrrLabel& rep);

/// Truncated induction: the unique constituent of the induced representation
/// whose b-invariant matches the (dagger) source.  Throws
/// std::invalid_argument if the source is not dagger, degenerate_label_error
/// if a degenerate pair obstructs the search, and std::logic_error on
/// zero/multiple matches.
IrrLabel j_induce(const Embedding& emb, const std::vector<IrrLabel>& reps);

/// Closed-form outputs of truncated induction from the standard towers.
enum class JTowerVariant { SymmetricTower, MixedCornerTower, EvenCornerTower };
IrrLabel j_closed_form(const PartitionSeq& p, JTowerVariant v);

/// The corresponding embeddings (source representation: sign on each factor).
Embedding tower_symmetric(const PartitionSeq& p);   // S_{bar p_k} x ... x S_{bar p_1} in W_n
Embedding tower_mixed_corner(const PartitionSeq& p); // S x ... x W_a x W'_b in W_n
Embedding tower_even_corner(const PartitionSeq& p);  // S x ... x W'_{s/2} x W'_{s/2} in W'_n

/// Small fixed cases: j of sign from W_c x W'_c and from S_n into W_{2c};
/// from W_c x W'_{c+1} and S_n into W_{2c+1}; from W'_c x W'_c into W'_{2c}.
IrrLabel j_closed_even_rank(int c);  // n = 2c, ambient W_n
IrrLabel j_closed_odd_rank(int c);   // n = 2c+1, ambient W_n
IrrLabel j_closed_even_pair(int c);  // n = 2c, ambient W'_n

/// Corner-step data for the recursion checks: parts lowered by one on the
/// first bar_p_k entries.
PartitionSeq lower_top_parts(const PartitionSeq& p);

std::vector<IrrLabel> sign_reps_for(const Embedding& emb);

} // namespace weyltk
