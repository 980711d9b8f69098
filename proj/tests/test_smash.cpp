#include <catch2/catch_amalgamated.hpp>

#include "hopf/smash.hpp"
#include "hopf/twist.hpp"

using namespace hopf;
using Catch::Matchers::ContainsSubstring;

namespace {

GroupTable table(int degree, const std::vector<std::string>& gens) {
    return GroupTable::enumerate(PermGroup::from_strings(degree, gens));
}

/// Conjugation by c as a linear map on the group algebra basis.
LinMap conj_map(const GroupTable& G, const std::string& c, const CycField* F) {
    GroupAut a = GroupAut::conjugation(G, perm_parse(c, G.degree));
    LinMap f;
    f.src_dim = f.dst_dim = G.size();
    for (int i = 0; i < G.size(); ++i)
        f.cols.push_back({{a.img[static_cast<size_t>(i)], Cyc::one(F)}});
    return f;
}

LinMap inversion_map(const GroupTable& G, const CycField* F) {
    LinMap f;
    f.src_dim = f.dst_dim = G.size();
    for (int i = 0; i < G.size(); ++i) f.cols.push_back({{G.inv(i), Cyc::one(F)}});
    return f;
}

Vec basis_of(const FinHopf& H, int i) {
    Vec v = zero_vec(H);
    v[static_cast<size_t>(i)] = Cyc::one(H.F);
    return v;
}

}  // namespace

TEST_CASE("trivial coactions and actions reproduce the tensor product") {
    const CycField* F = CycField::get(4);
    GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(s3, F);

    auto theta = extend_theta(z2, F, R.dim, {identity_map(R.dim, F)});
    CoactionData cd = coaction_from_theta(R, z2, theta);
    REQUIRE(verify_coaction(cd));

    FinHopf H = smash_coproduct(cd);
    CHECK(H.dim == 12);
    CHECK(verify_hopf(H).ok);
    CHECK(structure_equal(H, tensor_hopf(R, dual_group_algebra(z2, F))));

    ActionData ad = action_from_theta(R, z2, theta);
    REQUIRE(verify_action(ad));
    FinHopf Hp = smash_product(ad);
    CHECK(structure_equal(Hp, tensor_hopf(R, group_algebra(z2, F))));

    // The recorded inclusion/projection survive a provenance round trip.
    LinMap iota = sequence_iota(H), pi = sequence_pi(H);
    CHECK(is_hopf_map(iota, cd.K, H));
    CHECK(is_hopf_map(pi, H, R));
}

TEST_CASE("inner action builds the twelve dimensional smash product") {
    const CycField* F = CycField::get(4);
    GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf T = group_algebra(s3, F);

    auto theta = extend_theta(z2, F, T.dim, {conj_map(s3, "(1 2)", F)});
    ActionData ad = action_from_theta(T, z2, theta);
    FinHopf H = smash_product(ad);
    CHECK(H.dim == 12);
    CHECK(verify_hopf(H).ok);
    CHECK_FALSE(is_commutative(H));
    CHECK(is_cocommutative(H));
    CHECK(H.labels[1].find('#') != std::string::npos);

    SECTION("a group-like valued homomorphism splits it") {
        int t12 = s3.index_of(perm_parse("(1 2)", 3));
        Section sec = section_from_phi(ad, z2, H, {basis_of(T, 0), basis_of(T, t12)});
        CHECK(is_hopf_map(sec.s, ad.K, H));
        CHECK(is_hopf_iso(sec.psi, H, sec.tensor_model));
        CHECK(structure_equal(sec.tensor_model, tensor_hopf(T, group_algebra(z2, F))));
    }
    SECTION("defective section data is rejected") {
        int r = s3.index_of(perm_parse("(1 2 3)", 3));
        CHECK_THROWS_WITH(section_from_phi(ad, z2, H, {basis_of(T, 0), basis_of(T, 0)}),
                          ContainsSubstring("conjugation condition"));
        CHECK_THROWS_WITH(section_from_phi(ad, z2, H, {basis_of(T, 0), basis_of(T, r)}),
                          ContainsSubstring("not a group homomorphism"));
        Vec blend = basis_of(T, 0);
        blend[1] = Cyc::one(F);
        CHECK_THROWS_WITH(section_from_phi(ad, z2, H, {basis_of(T, 0), blend}),
                          ContainsSubstring("not group-like"));
    }
}

TEST_CASE("outer action admits no group-like section") {
    const CycField* F = CycField::get(4);
    GroupTable z3 = table(3, {"(1 2 3)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf T = group_algebra(z3, F);

    auto theta = extend_theta(z2, F, T.dim, {inversion_map(z3, F)});
    ActionData ad = action_from_theta(T, z2, theta);
    FinHopf H = smash_product(ad);
    CHECK(H.dim == 6);
    CHECK(verify_hopf(H).ok);
    CHECK_FALSE(is_commutative(H));
    CHECK(is_cocommutative(H));

    // The group-likes of a group algebra are exactly the basis vectors, so
    // the candidate images can be enumerated outright.
    for (int g = 0; g < 3; ++g)
        CHECK_THROWS_AS(section_from_phi(ad, z2, H, {basis_of(T, 0), basis_of(T, g)}),
                        std::invalid_argument);
}

TEST_CASE("twisted smash coproduct at dimension forty-eight") {
    const CycField* F = CycField::get(4);
    GroupTable s4 = table(4, {"(1 2)", "(1 2 3 4)"});
    GroupTable s = table(4, {"(1 2)", "(3 4)"});
    FinHopf K24 = group_algebra(s4, F);
    Twist tw = twist_from_cocycle(K24, s4, s, nondegenerate_two_cocycle(s, F));
    FinHopf R = apply_twist(K24, tw);
    REQUIRE_FALSE(is_cocommutative(R));

    GroupTable z2 = table(2, {"(1 2)"});
    auto theta = extend_theta(z2, F, R.dim, {conj_map(s4, "(1 2)", F)});
    CoactionData cd = coaction_from_theta(R, z2, theta);
    FinHopf H = smash_coproduct(cd);
    CHECK(H.dim == 48);
    CHECK(verify_hopf(H).ok);
    CHECK_FALSE(is_commutative(H));
    CHECK_FALSE(is_cocommutative(H));
    CHECK(is_hopf_map(sequence_iota(H), cd.K, H));
    CHECK(is_hopf_map(sequence_pi(H), H, R));

    SECTION("its dual is the smash product of the dual action") {
        ActionData dad = dual_coaction(cd);
        CHECK(structure_equal(dual_hopf(H), smash_product(dad)));
    }
    SECTION("automorphisms that break the deformed coproduct are rejected") {
        CHECK_THROWS_WITH(coaction_from_theta(R, z2, extend_theta(z2, F, R.dim, {conj_map(s4, "(1 3)", F)})),
                          ContainsSubstring("not a Hopf automorphism"));
    }
}

TEST_CASE("inversion grading of the cyclic group algebra") {
    const CycField* F = CycField::get(4);
    GroupTable z4 = table(4, {"(1 2 3 4)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(z4, F);

    auto theta = extend_theta(z2, F, R.dim, {inversion_map(z4, F)});
    CoactionData cd = coaction_from_theta(R, z2, theta);
    FinHopf H = smash_coproduct(cd);
    CHECK(H.dim == 8);
    CHECK(verify_hopf(H).ok);
    CHECK(is_commutative(H));
    CHECK_FALSE(is_cocommutative(H));

    ActionData dad = dual_coaction(cd);
    FinHopf Hd = smash_product(dad);
    CHECK(structure_equal(dual_hopf(H), Hd));
    CHECK_FALSE(is_commutative(Hd));
    CHECK(is_cocommutative(Hd));

    SECTION("the dual is a dihedral group algebra in disguise") {
        GroupTable d4 = table(4, {"(1 2 3 4)", "(1 3)"});
        FinHopf KD4 = group_algebra(d4, F);
        int r = d4.index_of(perm_parse("(1 2 3 4)", 4));
        int f4 = d4.index_of(perm_parse("(1 3)", 4));
        // chi^j # s^a  <-  r^j f^a, where chi is the order-four character.
        LinMap phi;
        phi.src_dim = phi.dst_dim = 8;
        phi.cols.resize(8);
        for (int j = 0; j < 4; ++j)
            for (int a = 0; a < 2; ++a) {
                int src = 0;
                for (int q = 0; q < j; ++q) src = d4.mul(src, r);
                for (int q = 0; q < a; ++q) src = d4.mul(src, f4);
                SVec col;
                for (int m = 0; m < 4; ++m)
                    col.emplace(m * 2 + a, Cyc::root_of_unity(F, (j * m) % 4));
                phi.cols[static_cast<size_t>(src)] = srow_from(col);
            }
        CHECK(is_hopf_iso(phi, KD4, Hd));
    }
}

TEST_CASE("group algebra gradings decompose and are policed") {
    const CycField* F = CycField::get(4);
    GroupTable z4 = table(4, {"(1 2 3 4)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(z4, F);
    FinHopf KZ2 = group_algebra(z2, F);

    SECTION("the parity grading by inversion symmetry") {
        LinMap inv = inversion_map(z4, F);
        Cyc half(F, Rat(1, 2));
        CoactionData cd;
        cd.R = R;
        cd.K = KZ2;
        cd.rho.assign(4, {});
        for (int i = 0; i < 4; ++i) {
            int j = z4.inv(i);
            detail::acc_add(cd.rho[static_cast<size_t>(i)], cd.pair_index(0, i), half);
            detail::acc_add(cd.rho[static_cast<size_t>(i)], cd.pair_index(0, j), half);
            detail::acc_add(cd.rho[static_cast<size_t>(i)], cd.pair_index(1, i), half);
            detail::acc_add(cd.rho[static_cast<size_t>(i)], cd.pair_index(1, j),
                            Cyc::zero(F) - half);
        }
        REQUIRE(verify_coaction(cd));
        Grading gr = grading_from_coaction(cd, z2);
        CHECK(gr.support == std::vector<int>{0, 1});
        CHECK(gr.pieces[0].size() == 3);
        CHECK(gr.pieces[1].size() == 1);
        FinHopf H = smash_coproduct(cd);
        CHECK(verify_hopf(H).ok);
        CHECK(is_commutative(H));
    }
    SECTION("the tautological grading violates the counit condition") {
        CoactionData cd;
        cd.R = R;
        cd.K = group_algebra(z4, F);
        cd.rho.assign(4, {});
        for (int i = 0; i < 4; ++i)
            cd.rho[static_cast<size_t>(i)].emplace(cd.pair_index(i, i), Cyc::one(F));
        std::string w;
        CHECK_FALSE(verify_coaction(cd, &w));
        CHECK(w.find("is not a comodule map") != std::string::npos);
        CHECK_THROWS_WITH(grading_from_coaction(cd, z4),
                          ContainsSubstring("counit does not vanish"));
    }
    SECTION("support outside the center is rejected") {
        GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
        FinHopf R2 = group_algebra(z2, F);
        CoactionData cd;
        cd.R = R2;
        cd.K = group_algebra(s3, F);
        cd.rho.assign(2, {});
        cd.rho[0].emplace(cd.pair_index(0, 0), Cyc::one(F));
        int t = s3.index_of(perm_parse("(1 2)", 3));
        cd.rho[1].emplace(cd.pair_index(t, 1), Cyc::one(F));
        CHECK_THROWS_WITH(grading_from_coaction(cd, s3),
                          ContainsSubstring("escapes the center"));
    }
    SECTION("non-spanning homogeneous pieces are rejected") {
        FinHopf R2 = group_algebra(z2, F);
        CoactionData cd;
        cd.R = R2;
        cd.K = KZ2;
        cd.rho.assign(2, {});
        cd.rho[0].emplace(cd.pair_index(0, 0), Cyc::one(F));
        cd.rho[1].emplace(cd.pair_index(0, 1), Cyc::zeta(F));
        CHECK_THROWS_WITH(grading_from_coaction(cd, z2),
                          ContainsSubstring("do not span"));
    }
}

TEST_CASE("character bijections give algebra but not coalgebra isomorphisms") {
    const CycField* F = CycField::get(4);
    GroupTable v4 = table(4, {"(1 2)", "(3 4)"});
    GroupTable z4 = table(4, {"(1 2 3 4)"});
    FinHopf KV = group_algebra(v4, F);
    FinHopf KZ = group_algebra(z4, F);

    LinMap phi = group_algebra_iso_from_char_bijection(v4, z4, {0, 1, 2, 3}, F);
    CHECK(phi.is_bijective());
    CHECK(is_algebra_map(phi, KV, KZ));
    CHECK_FALSE(is_coalgebra_map(phi, KV, KZ));

    LinMap phi_inv = invert_linmap(phi, F);
    CHECK(compose(phi, phi_inv).cols == identity_map(4, F).cols);
    for (int g = 0; g < 4; ++g) {
        Vec ag = sv_to_dense(svec_from(phi_inv.cols[static_cast<size_t>(g)]), 4, F);
        CHECK_FALSE(counit_vec(KV, ag).is_zero());
    }

    CHECK_THROWS_WITH(group_algebra_iso_from_char_bijection(v4, z4, {0, 0, 1, 2}, F),
                      ContainsSubstring("not bijective"));
    GroupTable z2 = table(2, {"(1 2)"});
    CHECK_THROWS_WITH(group_algebra_iso_from_char_bijection(v4, z2, {0, 1}, F),
                      ContainsSubstring("equal order"));
}

TEST_CASE("defective automorphism data is rejected") {
    const CycField* F = CycField::get(4);
    GroupTable z4 = table(4, {"(1 2 3 4)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf R = group_algebra(z4, F);

    CHECK_THROWS_WITH(extend_theta(z2, F, 4, {}),
                      ContainsSubstring("one image per generator"));

    // Squaring collapses the cyclic group, so it is no automorphism.
    LinMap sq;
    sq.src_dim = sq.dst_dim = 4;
    for (int i = 0; i < 4; ++i) sq.cols.push_back({{z4.mul(i, i), Cyc::one(F)}});
    CHECK_THROWS_WITH(coaction_from_theta(R, z2, extend_theta(z2, F, 4, {sq})),
                      ContainsSubstring("not a Hopf automorphism"));

    // Entrywise valid automorphisms that do not form a homomorphism.
    LinMap id4 = identity_map(4, F), inv4 = inversion_map(z4, F);
    CHECK_THROWS_WITH(coaction_from_theta(R, z4, {id4, inv4, inv4, id4}),
                      ContainsSubstring("not a homomorphism"));
}

TEST_CASE("corrupted structure data is rejected by the constructors") {
    const CycField* F = CycField::get(4);
    GroupTable s3 = table(3, {"(1 2)", "(1 2 3)"});
    GroupTable z2 = table(2, {"(1 2)"});
    FinHopf T = group_algebra(s3, F);
    auto theta = extend_theta(z2, F, T.dim, {conj_map(s3, "(1 2)", F)});

    ActionData ad = action_from_theta(T, z2, theta);
    ad.act[1][0].emplace(3, Cyc::one(F));
    CHECK_THROWS_WITH(smash_product(ad), ContainsSubstring("action conditions fail"));

    CoactionData cd = coaction_from_theta(T, z2, theta);
    cd.rho[0].emplace(cd.pair_index(1, 3), Cyc::one(F));
    CHECK_THROWS_WITH(smash_coproduct(cd), ContainsSubstring("coaction conditions fail"));
}
