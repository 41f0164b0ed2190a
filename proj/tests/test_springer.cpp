#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltk/springer.hpp"

#include <algorithm>

using namespace weyltk;

TEST_CASE("symbol procedure: fixed cases") {
    CHECK(springer_label(JordanType({2, 2}), GroupKind::SP) ==
          IrrLabel::from_symbol_B({0, 2}, {1}));
    CHECK(springer_label(JordanType({4}), GroupKind::SP) == IrrLabel::from_symbol_B({2}, {}));
    CHECK(springer_label(JordanType({3, 1, 1}), GroupKind::SO_ODD) ==
          IrrLabel::from_symbol_B({0, 2}, {1}));
    CHECK(springer_label(JordanType({3, 1}), GroupKind::SO_EVEN) ==
          IrrLabel::from_symbol_D({2}, {0}));
}

TEST_CASE("symbol procedure scratch state") {
    SymbolScratch sc;
    (void)springer_label(JordanType({2, 2}), GroupKind::SP, &sc);
    CHECK(sc.M == 2);
    CHECK(sc.z == std::vector<int>{2, 2});
    CHECK(sc.z_prime == std::vector<int>{2, 3});
    CHECK(sc.evens == std::vector<int>{2});
    CHECK(sc.odds == std::vector<int>{3});
    CHECK(sc.y == std::vector<int>{1});
    CHECK(sc.y_prime == std::vector<int>{1});
}

TEST_CASE("symbol procedure rejects mismatched inputs") {
    CHECK_THROWS_AS(springer_label(JordanType({3, 1}), GroupKind::SP), std::invalid_argument);
    CHECK_THROWS_AS(springer_label(JordanType({2, 2}), GroupKind::SO_ODD), std::invalid_argument);
    CHECK_THROWS_AS(springer_label(JordanType({3, 1, 1}), GroupKind::SO_EVEN),
                    std::invalid_argument);
    // an even block with odd multiplicity is not an orthogonal type; the
    // parity split comes out with the wrong sizes
    CHECK_THROWS_AS(springer_label(JordanType({2, 1}), GroupKind::SO_ODD),
                    std::invalid_argument);
    // valid orthogonal types beyond the distinguished family are accepted
    CHECK_NOTHROW(springer_label(JordanType({2, 2, 1}), GroupKind::SO_ODD));
}

TEST_CASE("closed-form labels: fixed cases") {
    CHECK(springer_label_closed_form(PartitionSeq({1, 1}), GroupKind::SP) ==
          IrrLabel::from_symbol_B({0, 2}, {1}));
    CHECK(springer_label_closed_form(PartitionSeq({2}), GroupKind::SP) ==
          IrrLabel::from_symbol_B({2}, {}));
    CHECK(springer_label_closed_form(PartitionSeq({1, 1}), GroupKind::SO_EVEN) ==
          IrrLabel::from_symbol_D({2}, {0}));
}

TEST_CASE("procedure equals closed form for all small partitions") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            for (GroupKind kind : {GroupKind::SP, GroupKind::SO_ODD, GroupKind::SO_EVEN}) {
                if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0) continue;
                CHECK(springer_label(jordan_type(p, kind), kind) ==
                      springer_label_closed_form(p, kind));
            }
        }
    }
}

TEST_CASE("parity bookkeeping matches the displayed multiset computations") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            for (GroupKind kind : {GroupKind::SP, GroupKind::SO_ODD, GroupKind::SO_EVEN}) {
                if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0) continue;
                SymbolScratch sc;
                (void)springer_label(jordan_type(p, kind), kind, &sc);
                auto [evens, odds] = parity_split_from_parts(p, kind);
                CHECK(sc.evens == evens);
                CHECK(sc.odds == odds);
            }
        }
    }
}

TEST_CASE("three-way agreement on fixed cases") {
    auto t1 = verify_label_triple(PartitionSeq({1, 1}), GroupKind::SP);
    CHECK(t1.pass);
    CHECK(t1.procedure == IrrLabel::from_symbol_B({0, 2}, {1}));
    auto t2 = verify_label_triple(PartitionSeq({2, 1}), GroupKind::SP);
    CHECK(t2.pass);
    auto t3 = verify_label_triple(PartitionSeq({1, 1}), GroupKind::SO_EVEN);
    CHECK(t3.pass);
    CHECK(t3.procedure == IrrLabel::from_symbol_D({2}, {0}));
}

TEST_CASE("three-way agreement, full rank-7 sweep") {
    for (const auto& parts : partitions_of(7)) {
        PartitionSeq p(parts);
        for (GroupKind kind : {GroupKind::SP, GroupKind::SO_ODD, GroupKind::SO_EVEN}) {
            if (kind == GroupKind::SO_EVEN && p.kappa_sigma() != 0) continue;
            CHECK(verify_label_triple(p, kind).pass);
        }
    }
}

TEST_CASE("labels coincide across the two odd-dimension kinds") {
    CHECK(sp_so_labels_agree(PartitionSeq({1, 1})));
    CHECK(sp_so_labels_agree(PartitionSeq({2})));
    for (int n = 1; n <= 6; ++n)
        for (const auto& parts : partitions_of(n)) CHECK(sp_so_labels_agree(PartitionSeq(parts)));
}

TEST_CASE("sum constraint of produced labels") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            CHECK(springer_label(jordan_type(p, GroupKind::SP), GroupKind::SP).n() == n);
            CHECK(springer_label(jordan_type(p, GroupKind::SO_ODD), GroupKind::SO_ODD).n() == n);
            if (p.kappa_sigma() == 0)
                CHECK(springer_label(jordan_type(p, GroupKind::SO_EVEN), GroupKind::SO_EVEN).n() ==
                      n);
        }
    }
}

TEST_CASE("centralizer-tower probes") {
    // single factor = ambient, regular unipotent -> trivial label
    SpringerFactor regular{Factor{Family::B, 3}, JordanType({6})};
    CHECK(j_of_springer({regular}, Factor{Family::B, 3}) == IrrLabel::trivial(LabelKind::B, 3));

    // general-linear factors with identity unipotents recover the tower label
    for (int n = 1; n <= 5; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            auto bp = conjugate_counts(p);
            std::vector<SpringerFactor> factors;
            for (auto it = bp.rbegin(); it != bp.rend(); ++it)
                factors.push_back({Factor{Family::S, *it}, JordanType(std::vector<int>(*it, 1))});
            CHECK(j_of_springer(factors, Factor{Family::B, n}) ==
                  springer_label_closed_form(p, GroupKind::SP));
        }
    }

    // rank-2 symplectic factor with blocks (2,2) inside rank 3
    SpringerFactor sub{Factor{Family::B, 2}, JordanType({2, 2})};
    IrrLabel inner = springer_label(JordanType({2, 2}), GroupKind::SP);
    Embedding emb = Embedding::dense(Factor{Family::B, 3}, {Factor{Family::B, 2}});
    CHECK(j_of_springer({sub}, Factor{Family::B, 3}) == j_induce(emb, {inner}));
}
