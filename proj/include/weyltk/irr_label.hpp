#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weyltk {

/// Raised where a very-even label of the rotation subgroup would have to be
/// split into its two constituents; the toolkit does not compute the split.
class degenerate_label_error : public std::runtime_error {
public:
    explicit degenerate_label_error(const std::string& what) : std::runtime_error(what) {}
};

enum class LabelKind { S, B, D };

/// Label of an irreducible representation of S_n (a partition), of the full
/// signed-permutation group W_n (an ordered pair of partitions), or of the
/// even subgroup W'_n (an unordered pair; equal pairs carry a degenerate
/// flag and stand for the sum of the two constituents).
///
/// Stored canonically as bipartitions (weakly decreasing, no zero parts);
/// symbol form (the strictly increasing two-row presentation with the
/// shift-equivalence normalized away) is derived on demand.
class IrrLabel {
public:
    static IrrLabel make_S(std::vector<int> lambda);
    static IrrLabel make_B(std::vector<int> alpha, std::vector<int> beta);
    static IrrLabel make_D(std::vector<int> alpha, std::vector<int> beta);

    /// Builds from the two-row symbol presentation: rows strictly increasing,
    /// sizes (m+1, m) for B with entry sum m^2+n, (m, m) for D with entry sum
    /// m^2-m+n.
    static IrrLabel from_symbol_B(const std::vector<int>& top, const std::vector<int>& bottom);
    static IrrLabel from_symbol_D(const std::vector<int>& top, const std::vector<int>& bottom);

    static IrrLabel trivial(LabelKind kind, int n);
    static IrrLabel sign(LabelKind kind, int n);

    LabelKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& beta() const { return beta_; }
    bool degenerate() const { return degenerate_; }

    bool operator==(const IrrLabel& o) const {
        return kind_ == o.kind_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }
    bool operator!=(const IrrLabel& o) const { return !(*this == o); }
    bool operator<(const IrrLabel& o) const;

    /// Two-row symbol at minimal m: (top, bottom) strictly increasing.
    std::pair<std::vector<int>, std::vector<int>> symbol() const;

    /// "[(0,2),(1)]" for pair kinds, "(3,1)" for S.
    std::string to_string() const;

private:
    LabelKind kind_ = LabelKind::S;
    int n_ = 0;
    std::vector<int> alpha_, beta_;
    bool degenerate_ = false;
};

/// Partition helpers shared by label and character code.
std::vector<int> trim_partition(std::vector<int> parts); // drop zeros, validate order
int partition_weight(const std::vector<int>& parts);

} // namespace weyltk
