#pragma once

#include <string>
#include <vector>

namespace weyltk {

/// Which family of isometry groups a computation refers to.
/// SP: alternating form on a 2n-dimensional space.
/// SO_ODD: quadratic form, dimension 2n+1.  SO_EVEN: quadratic form, dimension 2n.
enum class GroupKind { SP, SO_ODD, SO_EVEN };

std::string to_string(GroupKind k);
GroupKind kind_from_string(const std::string& s);
/// Parity of the space dimension: 0 for SP and SO_EVEN, 1 for SO_ODD.
int kappa(GroupKind k);

/// A weakly decreasing sequence of positive integers p_1 >= ... >= p_sigma
/// summing to n.  Indexes the elliptic conjugacy classes considered here.
class PartitionSeq {
public:
    explicit PartitionSeq(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int t) const { return parts_.at(t - 1); } // 1-based
    int n() const { return n_; }
    int sigma() const { return static_cast<int>(parts_.size()); }
    int kappa_sigma() const { return sigma() % 2; }

    bool operator==(const PartitionSeq& o) const { return parts_ == o.parts_; }
    std::string to_string() const;
    static PartitionSeq parse(const std::string& s); // "3,1,1"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// A multiset of Jordan block sizes, stored weakly decreasing.
struct JordanType {
    std::vector<int> blocks;
    int total = 0;

    explicit JordanType(std::vector<int> b);
    bool operator==(const JordanType& o) const { return blocks == o.blocks; }
    std::string to_string() const;
};

/// Conjugate-count sequence: entry i counts the parts of p that are >= i,
/// for i = 1..p_1.
std::vector<int> conjugate_counts(const PartitionSeq& p);

/// Minimal length of the associated elliptic class:
/// 2*(p_2 + 2 p_3 + ... + (sigma-1) p_sigma) + n, minus sigma for SO_EVEN.
/// SO_EVEN requires an even number of parts.
long d_min(const PartitionSeq& p, GroupKind kind);

/// Exact identity sum(conjugate_counts^2) == d_min-for-SP value.
bool bar_square_identity(const PartitionSeq& p);

/// All partitions of n valid for the kind (even part count for SO_EVEN),
/// sorted lexicographically descending.
std::vector<PartitionSeq> enumerate_elliptic(int n, GroupKind kind);

/// All partitions of n, sorted lexicographically descending.
std::vector<std::vector<int>> partitions_of(int n);

/// The block-size adjustment map used for orthogonal groups:
/// +1 at odd t with p_{t-1} > p_t (always at t=1), -1 at even t with
/// p_t > p_{t+1} (always at t=sigma), 0 otherwise.  t is 1-based.
int psi(const PartitionSeq& p, int t);

/// Jordan blocks of the distinguished unipotent class attached to p:
/// (2 p_t) for SP; (2 p_t + psi(t)) for the orthogonal kinds, with an extra
/// block 1 appended for SO_ODD when sigma is even.
JordanType jordan_type(const PartitionSeq& p, GroupKind kind);

} // namespace weyltk
