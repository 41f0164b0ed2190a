#pragma once

#include "weyltk/partition.hpp"
#include "weyltk/qpoly.hpp"

#include <map>
#include <vector>

namespace weyltk {

/// Signed cycle type: lengths of positive cycles and of negative cycles,
/// each weakly decreasing.
struct SignedCycleType {
    std::vector<int> pos;
    std::vector<int> neg;
    bool operator==(const SignedCycleType& o) const { return pos == o.pos && neg == o.neg; }
    bool operator<(const SignedCycleType& o) const {
        return std::tie(pos, neg) < std::tie(o.pos, o.neg);
    }
    std::string to_string() const;
};

/// Element of the group of permutations of [1,2n] commuting with
/// i -> 2n+1-i.  Stored as 0-based images; the window form lists the
/// signed values w(1..n) with i' rendered as -i.
class SignedPerm {
public:
    explicit SignedPerm(int n); // identity
    static SignedPerm from_window(const std::vector<int>& window);
    static SignedPerm from_images(std::vector<int> images); // 0-based, validated

    int n() const { return n_; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> window() const;

    SignedPerm operator*(const SignedPerm& o) const; // (a*b)(i) = a(b(i))
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
    bool operator!=(const SignedPerm& o) const { return img_ != o.img_; }
    bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

    bool is_identity() const;
    /// Even as a permutation of [1,2n]; the elements of the rotation
    /// subgroup of index two.
    bool is_even() const;

    SignedCycleType cycle_type() const;

    /// Action on the weight lattice Z^n as a signed permutation matrix;
    /// returns column j = image of e_j, entries in {-1,0,1} encoded as
    /// (index, sign) pairs.
    std::vector<std::pair<int, int>> matrix_columns() const;

    std::string to_string() const; // window notation "[2,-1]"

private:
    int n_ = 0;
    std::vector<int> img_; // size 2n
};

/// Number of positive roots of B_n mapped to negative roots.
long length_b(const SignedPerm& w);
/// Number of positive roots of D_n mapped to negative roots; requires an
/// even element.
long length_d(const SignedPerm& w);
long length_for_kind(const SignedPerm& w, GroupKind kind);

/// An element whose signed cycle type consists of negative cycles of sizes
/// p_1,...,p_sigma and whose length equals d_min(p, kind).  The construction
/// is validated against the closed-form minimal length and fails hard on a
/// mismatch.
SignedPerm w_min_rep(const PartitionSeq& p, GroupKind kind);

/// Characteristic polynomial on the n-dimensional reflection representation
/// together with its cyclotomic factorization.
struct CharPolyReport {
    QPoly poly;
    std::map<int, int> cyclotomic; // d -> multiplicity
    bool elliptic = false;         // no Phi_1 factor
    std::string label() const { return cyclotomic_string(cyclotomic); }
};
CharPolyReport char_poly_reflection(const SignedPerm& w);

/// All 2^n n! elements (use only for small n).
std::vector<SignedPerm> enumerate_group_b(int n);
/// The even elements.
std::vector<SignedPerm> enumerate_group_d(int n);

/// All elements with the given signed cycle type (brute force; small n).
std::vector<SignedPerm> conjugacy_class_of_type(int n, const SignedCycleType& type);

} // namespace weyltk
