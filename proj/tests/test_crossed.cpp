#include <catch2/catch_amalgamated.hpp>

#include "hopf/crossed.hpp"
#include "hopf/twist.hpp"

using namespace hopf;
using Catch::Matchers::ContainsSubstring;

namespace {

GroupTable table(int degree, const std::vector<std::string>& gens) {
    return GroupTable::enumerate(PermGroup::from_strings(degree, gens));
}

LinMap conj_map(const GroupTable& G, const std::string& c, const CycField* F) {
    GroupAut a = GroupAut::conjugation(G, perm_parse(c, G.degree));
    LinMap f;
    f.src_dim = f.dst_dim = G.size();
    for (int i = 0; i < G.size(); ++i)
        f.cols.push_back({{a.img[static_cast<size_t>(i)], Cyc::one(F)}});
    return f;
}

std::vector<std::vector<Vec>> ones_sigma(int nG, int nGamma, const CycField* F) {
    return std::vector<std::vector<Vec>>(
        static_cast<size_t>(nG),
        std::vector<Vec>(static_cast<size_t>(nG), Vec(static_cast<size_t>(nGamma), Cyc::one(F))));
}

FinHopf twisted_s4(const GroupTable& s4, const GroupTable& s, const CycField* F) {
    FinHopf K = group_algebra(s4, F);
    return apply_twist(K, twist_from_cocycle(K, s4, s, nondegenerate_two_cocycle(s, F)));
}

}  // namespace

TEST_CASE("trivial groups leave the middle term unchanged") {
    const CycField* F = CycField::get(4);
    GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
    GroupTable triv = table(1, {});
    FinHopf R = group_algebra(s3, F);

    FinHopf A = basic_construction(R, triv, {identity_map(R.dim, F)}, triv,
                                   {identity_map(R.dim, F)}, ones_sigma(1, 1, F));
    CHECK(A.dim == R.dim);
    CHECK(structure_equal(A, R));
}

TEST_CASE("nontrivial cocycle values enter the multiplication") {
    const CycField* F = CycField::get(4);
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(z2, F);
    std::vector<LinMap> triv = {identity_map(2, F), identity_map(2, F)};

    auto sigma = ones_sigma(2, 2, F);
    sigma[1][1] = {Cyc::one(F), Cyc::zero(F) - Cyc::one(F)};  // the sign character
    FinHopf A = basic_construction(R, z2, triv, z2, triv, sigma);
    CHECK(A.dim == 8);
    CHECK(A.provenance.at("sigma_trivial") == false);
    CHECK(is_commutative(A));
    CHECK(is_cocommutative(A));

    FinHopf A0 = basic_construction(R, z2, triv, z2, triv, ones_sigma(2, 2, F));
    CHECK_FALSE(structure_equal(A, A0));
}

TEST_CASE("cohomologous cocycles give isomorphic constructions") {
    const CycField* F = CycField::get(4);
    GroupTable z2 = table(2, {"(1 2)"});
    GroupTable z4 = table(4, {"(1 2 3 4)"});
    FinHopf R = group_algebra(z2, F);
    std::vector<LinMap> thetas(4, identity_map(2, F));
    std::vector<LinMap> mus(2, identity_map(2, F));

    // beta: G -> characters of Gamma with beta(1) of order four; the
    // coboundary has (1,1) entry beta(1)^2 = the order-two character.
    auto coboundary = ones_sigma(2, 4, F);
    for (int c = 0; c < 4; ++c)
        coboundary[1][1][static_cast<size_t>(c)] = Cyc::root_of_unity(F, (2 * c) % 4);
    FinHopf A0 = basic_construction(R, z4, thetas, z2, mus, ones_sigma(2, 4, F));
    FinHopf A1 = basic_construction(R, z4, thetas, z2, mus, coboundary);
    CHECK_FALSE(structure_equal(A0, A1));

    // The gauge b#g -> beta(g) b#g intertwines the two products.
    LinMap f;
    f.src_dim = f.dst_dim = A0.dim;
    f.cols.resize(static_cast<size_t>(A0.dim));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c)
            for (int g = 0; g < 2; ++g) {
                int b = r * 4 + c;
                Cyc phase = g == 0 ? Cyc::one(F) : Cyc::root_of_unity(F, c % 4);
                f.cols[static_cast<size_t>(b * 2 + g)] = {{b * 2 + g, phase}};
            }
    CHECK(is_hopf_iso(f, A1, A0));

    // The comparison helper alone cannot see the diagonal gauge.
    CompareResult gr = structural_compare(A1, A0);
    CHECK_FALSE(gr.found);
    CHECK(gr.note.find("inconclusive") != std::string::npos);
}

TEST_CASE("defective construction data is rejected") {
    const CycField* F = CycField::get(4);
    GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(s3, F);
    LinMap id6 = identity_map(6, F);
    std::vector<LinMap> ad12 = {id6, conj_map(s3, "(1 2)", F)};
    std::vector<LinMap> ad13 = {id6, conj_map(s3, "(1 3)", F)};

    CHECK_THROWS_WITH(basic_construction(R, z2, ad12, z2, ad13, ones_sigma(2, 2, F)),
                      ContainsSubstring("do not commute"));

    auto bad = ones_sigma(2, 2, F);
    bad[0][1][1] = Cyc::zero(F) - Cyc::one(F);
    CHECK_THROWS_WITH(basic_construction(R, z2, ad12, z2, ad12, bad),
                      ContainsSubstring("not normalized"));

    auto noninv = ones_sigma(2, 2, F);
    noninv[1][1][1] = Cyc::zero(F);
    CHECK_THROWS_WITH(basic_construction(R, z2, ad12, z2, ad12, noninv),
                      ContainsSubstring("invertible"));

    auto nonchar = ones_sigma(2, 2, F);
    nonchar[1][1][1] = Cyc(F, 2);
    CHECK_THROWS_WITH(basic_construction(R, z2, ad12, z2, ad12, nonchar),
                      ContainsSubstring("not characters"));

    GroupTable z4 = table(4, {"(1 2 3 4)"});
    std::vector<LinMap> thetas2 = {identity_map(2, F), identity_map(2, F)};
    std::vector<LinMap> mus4(4, identity_map(2, F));
    FinHopf R2 = group_algebra(z2, F);
    auto noncocycle = ones_sigma(4, 2, F);
    noncocycle[1][1] = {Cyc::one(F), Cyc::zero(F) - Cyc::one(F)};
    CHECK_THROWS_WITH(basic_construction(R2, z2, thetas2, z4, mus4, noncocycle),
                      ContainsSubstring("not a two-cocycle"));
}

TEST_CASE("deformed double crossed construction at dimension ninety-six") {
    const CycField* F = CycField::get(4);
    GroupTable s4 = table(4, {"(1 2)", "(1 2 3 4)"});
    GroupTable s = table(4, {"(1 2)", "(3 4)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = twisted_s4(s4, s, F);

    std::vector<LinMap> theta = {identity_map(24, F), conj_map(s4, "(1 2)", F)};
    std::vector<LinMap> mu = {identity_map(24, F), conj_map(s4, "(3 4)", F)};
    FinHopf A = basic_construction(R, z2, theta, z2, mu, ones_sigma(2, 2, F));
    CHECK(A.dim == 96);
    CHECK_FALSE(is_commutative(A));
    CHECK_FALSE(is_cocommutative(A));

    FinHopf B = smash_coproduct(coaction_from_theta(R, z2, theta));
    CHECK(is_hopf_map(sequence_iota(A), B, A));
    CHECK(is_hopf_map(sequence_pi(A), A, group_algebra(z2, F)));

    SECTION("it matches the regrouped one-step construction") {
        // W realizes the semidirect factor: S4 extended by t = (34)(56),
        // which conjugates S4 exactly as (34) does and centralizes the
        // cocycle's support.
        GroupTable w = table(6, {"(1 2)", "(1 2 3 4)", "(3 4)(5 6)"});
        REQUIRE(w.size() == 48);
        GroupTable sw = table(6, {"(1 2)", "(3 4)"});
        FinHopf RW = twisted_s4(w, sw, F);
        std::vector<LinMap> theta_w = {identity_map(48, F), conj_map(w, "(1 2)", F)};
        FinHopf H2 = smash_coproduct(coaction_from_theta(RW, z2, theta_w));
        REQUIRE(H2.dim == 96);

        Perm t = perm_parse("(3 4)(5 6)", 6);
        std::vector<int> cand(96);
        for (int r = 0; r < 24; ++r) {
            Perm lift(6);
            for (int q = 0; q < 4; ++q) lift[static_cast<size_t>(q)] =
                s4.elements[static_cast<size_t>(r)][static_cast<size_t>(q)];
            lift[4] = 4;
            lift[5] = 5;
            for (int u = 0; u < 2; ++u) {
                cand[static_cast<size_t>((r * 2 + u) * 2 + 0)] = w.index_of(lift) * 2 + u;
                cand[static_cast<size_t>((r * 2 + u) * 2 + 1)] =
                    w.index_of(perm_mul(lift, t)) * 2 + u;
            }
        }
        CompareResult gr = structural_compare(A, H2, {cand});
        CHECK(gr.found);
        CHECK(gr.note == "matched candidate bijection");
    }
}

TEST_CASE("deforming before or after the smash coproduct agrees") {
    const CycField* F = CycField::get(4);
    GroupTable s4 = table(4, {"(1 2)", "(1 2 3 4)"});
    GroupTable s = table(4, {"(1 2)", "(3 4)"});
    GroupTable z2 = table(2, {"(1 2)"});

    FinHopf K = group_algebra(s4, F);
    Twist tw = twist_from_cocycle(K, s4, s, nondegenerate_two_cocycle(s, F));
    FinHopf R = apply_twist(K, tw);
    std::vector<LinMap> theta_tw = {identity_map(24, F), conj_map(s4, "(1 2)", F)};
    FinHopf H1 = smash_coproduct(coaction_from_theta(R, z2, theta_tw));

    FinHopf B0 = smash_coproduct(coaction_from_theta(K, z2, theta_tw));
    LinMap embed;
    embed.src_dim = 24;
    embed.dst_dim = 48;
    for (int r = 0; r < 24; ++r) {
        SVec col;
        col.emplace(r * 2 + 0, Cyc::one(F));
        col.emplace(r * 2 + 1, Cyc::one(F));
        embed.cols.push_back(srow_from(col));
    }
    FinHopf H2 = apply_twist(B0, inflate_twist(tw, embed, B0));

    CHECK(structure_equal(H1, H2));
    CompareResult gr = structural_compare(H1, H2);
    CHECK(gr.found);
    CHECK(gr.note == "identical structure constants");
}
