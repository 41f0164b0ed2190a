#pragma once

#include "weyltk/irr_label.hpp"
#include "weyltk/qpoly.hpp"
#include "weyltk/rootsys.hpp"
#include "weyltk/signed_perm.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weyltk {

/// Order polynomial of the split reductive group with the given root datum:
/// q^nu (q-1)^rank * Poincare(W).
QPoly group_order_polynomial(const RootSystemData& rd);
QPoly group_order_polynomial(const SubsystemData& sd);

/// An enumerated reflection group acting on the ambient weight space:
/// elements as exact rational matrices, with lengths, determinants, classes.
using WeylMatrix = std::vector<std::vector<Rat>>;
struct MatrixWeylGroup {
    std::vector<WeylMatrix> elements; // row-major
    std::vector<long> lengths;                  // w.r.t. the given positive system
    std::vector<int> dets;
    std::vector<int> class_of;                  // element -> class index
    std::vector<int> class_rep;                 // class index -> element index
    std::vector<long> class_sizes;
    QPoly poincare_enumerated;                  // sum q^length
};

/// Enumerates the subsystem reflection group (throws above the order cap).
MatrixWeylGroup enumerate_weyl(const SubsystemData& sd, long order_cap = 4000);

/// The graded class function Pi attached to the subsystem group, computed
/// two independent ways per element and cross-checked exactly:
///  (1) component degrees:  prod_j (1-q^{d_j}) (1-q)^{l-r} / det(1 - q w)
///  (2) enumerated lengths: det(w) (q-1)^l Poincare_W(q) / det(q - w)
struct ClassFunctionQ {
    const SubsystemData* sub = nullptr;
    MatrixWeylGroup group;
    std::vector<QPoly> class_values;
    const QPoly& value_on_class(int classIdx) const { return class_values.at(classIdx); }
};
ClassFunctionQ pi_class_function(const SubsystemData& sd);

/// Character values of the ambient Weyl group evaluated on matrices, for
/// the ambient types with built-in data: classical families (matrices are
/// (signed) permutation matrices) and G2 (static table).
struct AmbientCharSet {
    std::vector<std::string> labels;
    /// value of irrep `i` on the ambient element with the given matrix
    long value(size_t i, const WeylMatrix& matrix) const;
    // internals
    std::string type;
    std::vector<IrrLabel> classical_labels; // for A/B/C/D
    int index_of(const std::string& label) const;
};
AmbientCharSet ambient_characters(const RootSystemData& rd);

/// Inner product (E' : Pi_{G_K}) of the restriction of the ambient
/// irreducible with the graded class function; an exact polynomial with
/// nonnegative integer coefficients of degree <= nu_K.
QPoly inner_with_pi(const RootSystemData& rd, const std::string& irrLabel,
                    const SubsystemData& sd);

/// The externally supplied (or built-in) matrices of the counting formula.
struct PipelineData {
    std::string type;
    std::vector<std::string> irr_labels;       // rows of A, rows/cols of phi
    std::vector<std::string> class_labels;     // elliptic classes, by cyclotomic string
    std::vector<std::vector<QPoly>> A;         // [irr][class]
    std::vector<std::vector<Int>> phi;         // [irr][irr]
    std::string provenance;                    // "builtin" or the directory loaded from

    static PipelineData builtin_type_a(int rank);
    static PipelineData load(const std::string& dir, const std::string& type);
    void save(const std::string& dir) const;
};

struct FixedPointReport {
    QPoly P;
    bool csmall = false;
    std::optional<Int> m_kc;
    long d_c = -1;
    long dim_gk = -1;
    std::string detail;
};

/// Evaluates the four-matrix product |G^F|/|G_K^F| * A^t phi m t for the
/// elliptic class named by its cyclotomic string, with m and t realized
/// through inner_with_pi.  The quotient and the division P / |G^F| (when
/// the class is small) are required to be exact.
FixedPointReport pipeline_count(const RootSystemData& rd, const std::string& classLabel,
                                const SubsystemData& sd, const PipelineData& data);

/// Minimal length among elements with the given elliptic characteristic
/// polynomial (enumerates W; throws above the cap or on an ambiguous label).
long elliptic_min_length(const RootSystemData& rd, const std::string& classLabel,
                         long order_cap = 60000);

} // namespace weyltk
