#pragma once

#include "weyltk/partition.hpp"
#include "weyltk/representations.hpp"

#include <string>
#include <vector>

namespace weyltk {

/// Intermediate state of the symbol procedure, kept for reporting and tests.
struct SymbolScratch {
    int M = 0;
    std::vector<int> z;       // padded block sizes, ascending
    std::vector<int> z_prime; // z_i + (i-1), strictly increasing
    std::vector<int> evens;   // the even entries of z_prime (values 2 y_i)
    std::vector<int> odds;    // the odd entries (values 2 y'_i + 1)
    std::vector<int> y;       // ascending
    std::vector<int> y_prime; // ascending
};

/// Label of the Springer representation attached to a unipotent class with
/// the given Jordan blocks, by the two-row symbol procedure.  Accepts any
/// block multiset whose parity bookkeeping is consistent with the kind and
/// rejects the rest.
IrrLabel springer_label(const JordanType& j, GroupKind kind, SymbolScratch* scratch = nullptr);

/// The same label written in closed form directly from the part sequence.
IrrLabel springer_label_closed_form(const PartitionSeq& p, GroupKind kind);

/// Independent recomputation of the even/odd split of z' from the part
/// sequence via the parity of 2 p_t + psi(t) + offset, with the interleaving
/// facts it relies on asserted at runtime.  Returns (evens, odds) ascending.
std::pair<std::vector<int>, std::vector<int>> parity_split_from_parts(const PartitionSeq& p,
                                                                      GroupKind kind);

/// Three independent computations of the same label: symbol procedure,
/// closed form, and truncated induction of the sign character from the
/// matching subgroup tower.
struct LabelTriple {
    IrrLabel procedure;
    IrrLabel closed_form;
    IrrLabel j_induced;
    bool pass = false;
    std::string to_string() const;
};
LabelTriple verify_label_triple(const PartitionSeq& p, GroupKind kind);

/// The SP and SO_ODD labels attached to p agree as labels of W_n.
bool sp_so_labels_agree(const PartitionSeq& p);

/// One factor of a centralizer subgroup together with a unipotent class of
/// that factor, encoded by its Jordan blocks.  S factors are general-linear
/// (Jordan type = any partition of the rank); B factors are symplectic or
/// odd-orthogonal depending on the block total (2*rank or 2*rank+1); D
/// factors are even-orthogonal.
struct SpringerFactor {
    Factor group;
    JordanType jordan;
};

/// Truncated induction of the tensor product of the factor Springer labels
/// into the ambient group; the classical-type probe for products of the
/// form j(rho_u).
IrrLabel j_of_springer(const std::vector<SpringerFactor>& factors, Factor ambient);

} // namespace weyltk
