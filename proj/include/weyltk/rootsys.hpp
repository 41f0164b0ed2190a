#pragma once

#include "weyltk/numeric.hpp"
#include "weyltk/qpoly.hpp"

#include <string>
#include <vector>

namespace weyltk {

using RootVec = std::vector<int>;

/// Crystallographic root system in explicit integer coordinates (scaled so
/// every root is integral), with the standard degree data.
struct RootSystemData {
    std::string type;   // "A2", "B3", ..., "G2", "F4", "E6".."E8"
    int rank = 0;       // number of simple roots
    int ambient_dim = 0;
    std::vector<RootVec> roots;
    std::vector<RootVec> simples;   // node i of the diagram = simples[i-1]
    RootVec affine;                 // the lowest root (attached affine node 0)
    std::vector<int> degrees;
    long nu = 0;                    // positive root count
    QPoly poincare;                 // prod [d_i]_q

    long weyl_order() const;
    /// Positive iff the expansion in simple roots is nonnegative.
    bool is_positive(const RootVec& r) const;
};

/// Supported: A1.., B2.., C3.., D4.. (ranks up to 8), G2, F4, E6, E7, E8.
const RootSystemData& root_data(const std::string& type);

/// A proper subset K of the affine node set {0,1,...,rank} and the closed
/// subsystem it generates.
struct SubsystemData {
    const RootSystemData* ambient = nullptr;
    std::vector<int> nodes;          // sorted; 0 = affine node
    std::vector<RootVec> gens;       // the chosen simple roots of the subsystem
    std::vector<RootVec> roots;      // full subsystem
    std::vector<RootVec> positives;  // positive for the K-simple system
    long nu_k = 0;
    long dim_gk = 0;                 // |roots| + ambient rank
    /// Irreducible component types as (label, rank) with degree data pooled.
    std::vector<std::pair<std::string, int>> components;
    std::vector<int> degrees;
    QPoly poincare_degrees;          // prod [d]_q from the component degrees

    std::string node_string() const; // "0,2" or "-" when empty
};

/// Builds the subsystem spanned by the given affine-node subset.
SubsystemData subsystem_for(const RootSystemData& rd, const std::vector<int>& nodes);

/// All proper subsets of the affine node set, in mask order.  With
/// dedupe_by_conjugacy one representative per ambient-Weyl-conjugacy class
/// of subsystems is kept (requires the ambient group to be enumerable).
std::vector<SubsystemData> subsystems(const RootSystemData& rd,
                                      bool dedupe_by_conjugacy = false);

} // namespace weyltk
