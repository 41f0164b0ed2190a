#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltk/representations.hpp"
#include "weyltk/signed_perm.hpp"

#include <atomic>
#include <map>
#include <numeric>
#include <thread>

using namespace weyltk;

namespace {

// ---- independent oracle: graded decomposition of the rank-2 coinvariant
// algebra.  Basis of Q[x,y]/(x^2+y^2, x^2 y^2): monomials x^a y^b with
// b <= 1, a <= 3, reduced by y^2 -> -x^2 and x^4 -> 0.
struct B2Coinvariants {
    // basis index: (a, b) with b <= 1, a <= 3
    static int index_of(int a, int b) { return b * 4 + a; }

    // action of the signed permutation w on x^a y^b, reduced to the basis;
    // returns the coefficient vector over the 8 basis monomials
    static std::vector<long> act(const SignedPerm& w, int a, int b) {
        auto cols = w.matrix_columns();
        // images: x -> sx * (x or y), y -> sy * (x or y)
        // expand (img x)^a (img y)^b; both images are single signed variables
        int xa = cols[0].first, sx = cols[0].second;
        int yb = cols[1].first, sy = cols[1].second;
        long coeff = 1;
        for (int i = 0; i < a; ++i) coeff *= sx;
        for (int i = 0; i < b; ++i) coeff *= sy;
        // resulting monomial: (var xa)^a (var yb)^b
        int powX = (xa == 0 ? a : 0) + (yb == 0 ? b : 0);
        int powY = (xa == 1 ? a : 0) + (yb == 1 ? b : 0);
        // reduce y^2 -> -x^2
        while (powY >= 2) {
            powY -= 2;
            powX += 2;
            coeff = -coeff;
        }
        std::vector<long> out(8, 0);
        if (powX >= 4) return out; // x^4 == 0
        out[index_of(powX, powY)] = coeff;
        return out;
    }

    // trace of w on the degree-d graded piece
    static long graded_trace(const SignedPerm& w, int d) {
        long tr = 0;
        for (int b = 0; b <= 1; ++b) {
            for (int a = 0; a <= 3; ++a) {
                if (a + b != d) continue;
                auto img = act(w, a, b);
                tr += img[index_of(a, b)];
            }
        }
        return tr;
    }
};

QPoly fake_degree_oracle_b2(const IrrLabel& rep) {
    auto elements = enumerate_group_b(2);
    std::vector<Int> coeffs(5, Int(0));
    for (int d = 0; d <= 4; ++d) {
        long acc = 0;
        for (const auto& w : elements)
            acc += chi_value(rep, w.cycle_type()) * B2Coinvariants::graded_trace(w, d);
        REQUIRE(acc % 8 == 0);
        coeffs[d] = acc / 8;
    }
    return QPoly(coeffs);
}

// ---- element-level induction oracle over explicit embedded subgroups
std::vector<SignedPerm> embed_all_elements(const Embedding& emb) {
    // enumerate each factor's elements as ambient signed permutations
    std::vector<std::vector<SignedPerm>> perFactor;
    for (size_t f = 0; f < emb.factors.size(); ++f) {
        std::vector<SignedPerm> list;
        const auto& factor = emb.factors[f];
        int off = emb.offsets[f];
        auto lift = [&](const std::vector<int>& factorWindow) {
            std::vector<int> window(emb.ambient.rank);
            std::iota(window.begin(), window.end(), 1);
            for (int i = 0; i < factor.rank; ++i) {
                int v = factorWindow[i];
                window[off + i] = v > 0 ? v + off : v - off;
            }
            return SignedPerm::from_window(window);
        };
        if (factor.fam == Family::S) {
            for (const auto& w : enumerate_group_b(factor.rank)) {
                bool unsigned_ = true;
                for (int v : w.window())
                    if (v < 0) unsigned_ = false;
                if (unsigned_) list.push_back(lift(w.window()));
            }
        } else if (factor.fam == Family::B) {
            for (const auto& w : enumerate_group_b(factor.rank)) list.push_back(lift(w.window()));
        } else {
            for (const auto& w : enumerate_group_d(factor.rank)) list.push_back(lift(w.window()));
        }
        perFactor.push_back(std::move(list));
    }
    std::vector<SignedPerm> out{SignedPerm(emb.ambient.rank)};
    for (const auto& list : perFactor) {
        std::vector<SignedPerm> next;
        for (const auto& base : out)
            for (const auto& el : list) next.push_back(base * el);
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("fake degrees: fixed values") {
    // trivial representation: polynomial 1
    CHECK(fake_degree(IrrLabel::trivial(LabelKind::B, 3)) == QPoly::one());
    CHECK(fake_degree(IrrLabel::trivial(LabelKind::S, 4)) == QPoly::one());
    CHECK(fake_degree(IrrLabel::trivial(LabelKind::D, 4)) == QPoly::one());
    // sign representations occur exactly at the top degree
    for (int n = 1; n <= 5; ++n) {
        CHECK(fake_degree(IrrLabel::sign(LabelKind::B, n)) == QPoly::q_power(n * n));
        CHECK(fake_degree(IrrLabel::sign(LabelKind::S, n)) == QPoly::q_power(n * (n - 1) / 2));
        if (n >= 2)
            CHECK(fake_degree(IrrLabel::sign(LabelKind::D, n)) == QPoly::q_power(n * n - n));
    }
    CHECK(b_invariant(IrrLabel::sign(LabelKind::S, 4)) == 6);
    CHECK(is_dagger(IrrLabel::sign(LabelKind::S, 4)));
    CHECK(b_invariant(IrrLabel::trivial(LabelKind::B, 2)) == 0);
    CHECK(is_dagger(IrrLabel::trivial(LabelKind::B, 2)));
}

TEST_CASE("fake degrees of the rank-2 signed group against the coinvariant oracle") {
    for (const auto& rep : family_irreps(Family::B, 2)) {
        QPoly expect = fake_degree_oracle_b2(rep);
        CHECK(fake_degree(rep) == expect);
    }
    // reflection representation occurs in degrees 1 and 3: b = 1, dagger
    IrrLabel refl = IrrLabel::make_B({1}, {1});
    CHECK(fake_degree(refl) == QPoly::from_coeff_strings({"0", "1", "0", "1"}));
    CHECK(b_invariant(refl) == 1);
    CHECK(is_dagger(refl));
}

TEST_CASE("reflection representation of rank 3 is dagger") {
    IrrLabel refl3 = IrrLabel::make_B({2}, {1});
    CHECK(fake_degree(refl3).coeff(b_invariant(refl3)) == 1);
    CHECK(b_invariant(refl3) == 1);
}

TEST_CASE("fake degree sums to the dimension at q = 1") {
    for (Family f : {Family::S, Family::B, Family::D}) {
        const auto& gd = group_data(f, 4);
        for (size_t i = 0; i < gd.irreps.size(); ++i) {
            SignedCycleType id;
            id.pos.assign(4, 1);
            CHECK(gd.fake[i].eval_int(1) == gd.chi[i][gd.classes->index_of(id)]);
        }
    }
}

TEST_CASE("degenerate labels are refused by fake_degree") {
    IrrLabel deg = IrrLabel::make_D({2, 1}, {2, 1});
    CHECK_THROWS_AS(fake_degree(deg), degenerate_label_error);
    CHECK_NOTHROW(fake_degree_pair_sum(deg));
}

TEST_CASE("induce_mult: regular representation from the trivial subgroup") {
    Embedding emb = Embedding::dense(Factor{Family::S, 2}, {});
    auto mult = induce_mult(emb, {});
    const auto& irr = family_irreps(Family::S, 2);
    REQUIRE(mult.size() == irr.size());
    for (size_t i = 0; i < mult.size(); ++i) CHECK(mult[i] == 1);
}

TEST_CASE("induce_mult: sign of the permutation subgroup, total dimension") {
    Embedding emb = Embedding::dense(Factor{Family::B, 2}, {Factor{Family::S, 2}});
    auto mult = induce_mult(emb, {IrrLabel::sign(LabelKind::S, 2)});
    const auto& gd = group_data(Family::B, 2);
    Int total = 0;
    SignedCycleType id;
    id.pos = {1, 1};
    int idClass = gd.classes->index_of(id);
    for (size_t i = 0; i < mult.size(); ++i) total += mult[i] * gd.chi[i][idClass];
    CHECK(total == 4); // |W_2|/|S_2| * dim(sgn)
}

TEST_CASE("restriction of the rank-2 reflection representation") {
    Embedding emb = Embedding::dense(Factor{Family::B, 2}, {Factor{Family::S, 2}});
    auto table = restrict_mult(emb, IrrLabel::make_B({1}, {1}));
    // trivial + sign of S_2
    REQUIRE(table.tuples.size() == 2);
    CHECK(table.mult[0] == 1);
    CHECK(table.mult[1] == 1);
}

TEST_CASE("induce_mult agrees with the element-level induced character") {
    std::vector<Embedding> cases;
    cases.push_back(Embedding::dense(Factor{Family::B, 2}, {Factor{Family::S, 2}}));
    cases.push_back(Embedding::dense(Factor{Family::B, 3},
                                     {Factor{Family::S, 2}, Factor{Family::B, 1}}));
    cases.push_back(Embedding::dense(Factor{Family::D, 3}, {Factor{Family::S, 3}}));
    cases.push_back(Embedding::dense(Factor{Family::B, 3}, {Factor{Family::B, 2}}));
    for (const auto& emb : cases) {
        auto reps = sign_reps_for(emb);
        auto mult = induce_mult(emb, reps);
        auto subElements = embed_all_elements(emb);
        REQUIRE(static_cast<long>(subElements.size()) == emb.sub_order());
        // sign character value of an embedded element: product over factors
        auto signValue = [&](const SignedPerm& w) {
            long s = 1;
            // length parity of the ambient element restricted to the factor,
            // computed from the permutation parity on [1, 2n] adjusted by
            // family; simplest: use the determinant on the reflection rep
            auto cols = w.matrix_columns();
            // determinant of a signed permutation matrix
            std::vector<int> perm(cols.size());
            int sign = 1;
            for (size_t j = 0; j < cols.size(); ++j) {
                perm[j] = cols[j].first;
                sign *= cols[j].second;
            }
            // parity of perm
            std::vector<bool> seen(perm.size(), false);
            for (size_t j = 0; j < perm.size(); ++j) {
                if (seen[j]) continue;
                int len = 0;
                for (size_t t = j; !seen[t]; t = perm[t]) {
                    seen[t] = true;
                    ++len;
                }
                if (len % 2 == 0) sign = -sign;
            }
            s = sign;
            return s;
        };
        // direct Frobenius: <Ind sgn, chi_E> = (1/|H|) sum_h sgn(h) chi_E(h)
        const auto& gd = group_data(emb.ambient.fam, emb.ambient.rank);
        for (size_t i = 0; i < gd.irreps.size(); ++i) {
            if (gd.irreps[i].kind() == LabelKind::D && gd.irreps[i].degenerate()) continue;
            long acc = 0;
            for (const auto& h : subElements)
                acc += signValue(h) * chi_value(gd.irreps[i], h.cycle_type());
            REQUIRE(acc % emb.sub_order() == 0);
            CHECK(Int(acc / emb.sub_order()) == mult[i]);
        }
    }
}

TEST_CASE("truncated induction: identity case and fixed small cases") {
    // from the group to itself
    Embedding self = Embedding::dense(Factor{Family::B, 2}, {Factor{Family::B, 2}});
    IrrLabel refl = IrrLabel::make_B({1}, {1});
    CHECK(j_induce(self, {refl}) == refl);

    // sign of the permutation subgroup of rank 2: [(0,2),(1)]
    Embedding emb = Embedding::dense(Factor{Family::B, 2}, {Factor{Family::S, 2}});
    IrrLabel expect = IrrLabel::from_symbol_B({0, 2}, {1});
    CHECK(j_induce(emb, {IrrLabel::sign(LabelKind::S, 2)}) == expect);

    // from the product of two trivial even factors into the even group:
    // [(2),(0)]
    Embedding embD =
        Embedding::dense(Factor{Family::D, 2}, {Factor{Family::D, 1}, Factor{Family::D, 1}});
    IrrLabel expectD = IrrLabel::from_symbol_D({2}, {0});
    CHECK(j_induce(embD, sign_reps_for(embD)) == expectD);
    CHECK(expectD == j_closed_even_pair(1));

    // non-dagger source is rejected: the 2-dimensional representation of the
    // rank-2 even group is dagger, but a degenerate pair is refused upstream
    CHECK_THROWS_AS(
        j_induce(Embedding::dense(Factor{Family::D, 2}, {Factor{Family::D, 2}}),
                 std::vector<IrrLabel>{IrrLabel::make_D({1}, {1})}),
        degenerate_label_error);

    // the search itself can run into an unresolvable pooled pair: inducing
    // the sign of the permutation block into the rank-2 even group puts a
    // very even pair in the induction at the matching b-invariant, and the
    // constituent split is not computed
    Embedding sInD = Embedding::dense(Factor{Family::D, 2}, {Factor{Family::S, 2}});
    CHECK_THROWS_AS(j_induce(sInD, {IrrLabel::sign(LabelKind::S, 2)}), degenerate_label_error);
}

TEST_CASE("closed forms (a), (b), (c) match the defining computation") {
    for (int c = 1; c <= 3; ++c) {
        int n = 2 * c;
        // from the permutation subgroup
        Embedding sym = Embedding::dense(Factor{Family::B, n}, {Factor{Family::S, n}});
        CHECK(j_induce(sym, sign_reps_for(sym)) == j_closed_even_rank(c));
        // from W_c x W'_c
        Embedding mixed =
            Embedding::dense(Factor{Family::B, n}, {Factor{Family::B, c}, Factor{Family::D, c}});
        CHECK(j_induce(mixed, sign_reps_for(mixed)) == j_closed_even_rank(c));
        // from W'_c x W'_c into the even group
        Embedding even =
            Embedding::dense(Factor{Family::D, n}, {Factor{Family::D, c}, Factor{Family::D, c}});
        CHECK(j_induce(even, sign_reps_for(even)) == j_closed_even_pair(c));
    }
    for (int c = 0; c <= 2; ++c) {
        int n = 2 * c + 1;
        Embedding sym = Embedding::dense(Factor{Family::B, n}, {Factor{Family::S, n}});
        CHECK(j_induce(sym, sign_reps_for(sym)) == j_closed_odd_rank(c));
        Embedding mixed = Embedding::dense(Factor{Family::B, n},
                                           {Factor{Family::B, c}, Factor{Family::D, c + 1}});
        CHECK(j_induce(mixed, sign_reps_for(mixed)) == j_closed_odd_rank(c));
    }
}

TEST_CASE("tower closed forms agree with the defining computation, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            {
                Embedding emb = tower_symmetric(p);
                CHECK(j_induce(emb, sign_reps_for(emb)) ==
                      j_closed_form(p, JTowerVariant::SymmetricTower));
            }
            {
                Embedding emb = tower_mixed_corner(p);
                CHECK(j_induce(emb, sign_reps_for(emb)) ==
                      j_closed_form(p, JTowerVariant::MixedCornerTower));
            }
            if (p.sigma() % 2 == 0) {
                Embedding emb = tower_even_corner(p);
                CHECK(j_induce(emb, sign_reps_for(emb)) ==
                      j_closed_form(p, JTowerVariant::EvenCornerTower));
            }
        }
    }
}

TEST_CASE("fixed tower values from the closed forms") {
    CHECK(j_closed_form(PartitionSeq({1, 1}), JTowerVariant::SymmetricTower) ==
          IrrLabel::from_symbol_B({0, 2}, {1}));
    // sigma = 3, tau = 1 instance
    CHECK(j_closed_form(PartitionSeq({2, 1, 1}), JTowerVariant::SymmetricTower) ==
          IrrLabel::from_symbol_B({1, 3}, {1}));
    CHECK(j_closed_form(PartitionSeq({2, 1}), JTowerVariant::SymmetricTower) ==
          IrrLabel::from_symbol_B({0, 3}, {1}));
    CHECK(j_closed_form(PartitionSeq({1, 1}), JTowerVariant::EvenCornerTower) ==
          IrrLabel::from_symbol_D({2}, {0}));
}

TEST_CASE("corner recursions reduce the tower by one step") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& parts : partitions_of(n)) {
            PartitionSeq p(parts);
            if (p.part(1) <= 1) continue; // recursion needs k > 1
            auto bp = conjugate_counts(p);
            int bpk = bp.back();
            PartitionSeq lowered = lower_top_parts(p);
            CHECK(lowered.sigma() == p.sigma());

            // odd and even part counts, full group corner
            {
                IrrLabel inner = j_closed_form(lowered, JTowerVariant::SymmetricTower);
                Embedding step =
                    Embedding::dense(Factor{Family::B, n},
                                     {Factor{Family::S, bpk}, Factor{Family::B, n - bpk}});
                IrrLabel stepwise = j_induce(step, {IrrLabel::sign(LabelKind::S, bpk), inner});
                CHECK(stepwise == j_closed_form(p, JTowerVariant::SymmetricTower));
            }
            // even part count, even-group corner
            if (p.sigma() % 2 == 0) {
                IrrLabel inner = j_closed_form(lowered, JTowerVariant::EvenCornerTower);
                Embedding step =
                    Embedding::dense(Factor{Family::D, n},
                                     {Factor{Family::S, bpk}, Factor{Family::D, n - bpk}});
                IrrLabel stepwise = j_induce(step, {IrrLabel::sign(LabelKind::S, bpk), inner});
                CHECK(stepwise == j_closed_form(p, JTowerVariant::EvenCornerTower));
            }
        }
    }
}

TEST_CASE("transitivity of truncated induction on towers") {
    // two-step and one-step inductions agree: S_2 x S_2 in W_4 via W_2 x W_2
    PartitionSeq p({2, 2});
    Embedding full = tower_symmetric(p); // S_2 x S_2 in W_4
    IrrLabel oneStep = j_induce(full, sign_reps_for(full));

    // inner step: sgn from S_2 into W_2, in each block
    Embedding innerEmb = Embedding::dense(Factor{Family::B, 2}, {Factor{Family::S, 2}});
    IrrLabel innerLabel = j_induce(innerEmb, {IrrLabel::sign(LabelKind::S, 2)});
    Embedding outer =
        Embedding::dense(Factor{Family::B, 4}, {Factor{Family::B, 2}, Factor{Family::B, 2}});
    IrrLabel twoStep = j_induce(outer, {innerLabel, innerLabel});
    CHECK(oneStep == twoStep);
}

TEST_CASE("cached group data serves concurrent readers") {
    std::vector<std::thread> workers;
    std::atomic<int> failuresSeen{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&] {
            try {
                const auto& gd = group_data(Family::B, 4);
                const auto& gd2 = group_data(Family::D, 4);
                if (gd.irreps.empty() || gd2.irreps.empty()) ++failuresSeen;
                (void)fake_degree(IrrLabel::sign(LabelKind::B, 4));
            } catch (...) {
                ++failuresSeen;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(failuresSeen == 0);
}

TEST_CASE("sign labels match the stated symbols") {
    CHECK(IrrLabel::sign(LabelKind::B, 3).symbol() ==
          std::make_pair(std::vector<int>{0, 1, 2, 3}, std::vector<int>{1, 2, 3}));
    CHECK(IrrLabel::sign(LabelKind::D, 3).symbol() ==
          std::make_pair(std::vector<int>{1, 2, 3}, std::vector<int>{0, 1, 2}));
}
