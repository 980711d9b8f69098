#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hopf/abelian.hpp"
#include "hopf/group.hpp"
#include "hopf/matched_pair.hpp"
#include "hopf/perm.hpp"

using namespace hopf;

static GroupTable table_of(int degree, std::vector<std::string> gens) {
    return GroupTable::enumerate(PermGroup::from_strings(degree, gens));
}

TEST_CASE("permutation parse, print, compose") {
    CHECK(perm_to_string(perm_parse("(1 2)(3 4)", 4)) == "(1 2)(3 4)");
    CHECK(perm_to_string(perm_parse("e", 3)) == "e");
    CHECK(perm_to_string(perm_parse("()", 5)) == "e");
    CHECK(perm_to_string(perm_parse("(2, 3, 1)", 3)) == "(1 2 3)");

    // Composition applies the right factor first.
    Perm a = perm_parse("(1 2)", 3), b = perm_parse("(2 3)", 3);
    CHECK(perm_to_string(perm_mul(a, b)) == "(1 2 3)");
    CHECK(perm_to_string(perm_mul(b, a)) == "(1 3 2)");
    CHECK(perm_is_identity(perm_mul(a, perm_inv(a))));
    CHECK(perm_order(perm_parse("(1 2 3)(4 5)", 5)) == 6);

    CHECK_THROWS_AS(perm_parse("(1 2", 4), std::invalid_argument);
    CHECK_THROWS_AS(perm_parse("(1 1)", 4), std::invalid_argument);
    CHECK_THROWS_AS(perm_parse("(1 9)", 4), std::invalid_argument);
}

TEST_CASE("group enumeration with identity first") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    GroupTable a5 = table_of(5, {"(1 2 3)", "(1 2 3 4 5)"});
    CHECK(s3.size() == 6);
    CHECK(s4.size() == 24);
    CHECK(a5.size() == 60);
    CHECK(perm_is_identity(s3.elements[0]));
    CHECK(perm_is_identity(a5.elements[0]));
    CHECK(std::is_sorted(s4.elements.begin(), s4.elements.end()));

    for (int i = 0; i < s3.size(); ++i) {
        CHECK(s3.mul(i, s3.inv(i)) == 0);
        CHECK(s3.mul(0, i) == i);
    }
    CHECK(s4.exponent() == 12);
    CHECK(s3.order_of(s3.index_of(perm_parse("(1 2 3)", 3))) == 3);
    CHECK_FALSE(s3.is_abelian());
    CHECK(table_of(4, {"(1 2)", "(3 4)"}).is_abelian());
}

TEST_CASE("element cap aborts runaway enumeration") {
    PermGroup a5 = PermGroup::from_strings(5, {"(1 2 3)", "(1 2 3 4 5)"});
    CHECK_THROWS_WITH(GroupTable::enumerate(a5, 10),
                      Catch::Matchers::ContainsSubstring("element cap"));
    CHECK_NOTHROW(GroupTable::enumerate(a5, 60));
}

TEST_CASE("centralizers and centers") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    std::vector<int> s = {s4.index_of(perm_parse("(1 2)", 4)), s4.index_of(perm_parse("(3 4)", 4))};
    std::vector<int> cent = s4.centralizer(s);
    std::set<std::string> names;
    for (int i : cent) names.insert(perm_to_string(s4.elements[static_cast<size_t>(i)]));
    CHECK(names == std::set<std::string>{"e", "(1 2)", "(3 4)", "(1 2)(3 4)"});

    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    CHECK(s3.center() == std::vector<int>{0});

    GroupTable d4 = table_of(4, {"(1 2 3 4)", "(1 3)"});
    std::vector<int> z = d4.center();
    REQUIRE(z.size() == 2);
    CHECK(perm_to_string(d4.elements[static_cast<size_t>(z[1])]) == "(1 3)(2 4)");
}

TEST_CASE("normality, simplicity, subgroup lattice") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    GroupTable a5 = table_of(5, {"(1 2 3)", "(1 2 3 4 5)"});

    std::vector<int> v4 = s4.closure({s4.index_of(perm_parse("(1 2)(3 4)", 4)),
                                      s4.index_of(perm_parse("(1 3)(2 4)", 4))});
    CHECK(v4.size() == 4);
    CHECK(s4.is_normal(v4));
    std::vector<int> twists = s4.closure({s4.index_of(perm_parse("(1 2)", 4)),
                                          s4.index_of(perm_parse("(3 4)", 4))});
    CHECK(twists.size() == 4);
    CHECK_FALSE(s4.is_normal(twists));

    CHECK(a5.is_simple());
    CHECK_FALSE(s4.is_simple());
    CHECK(table_of(5, {"(1 2 3 4 5)"}).is_simple());  // prime cyclic
    CHECK_FALSE(table_of(6, {"(1 2 3 4 5 6)"}).is_simple());

    std::vector<std::vector<int>> ns = s4.normal_subgroups();
    std::multiset<size_t> sizes;
    for (auto& n : ns) sizes.insert(n.size());
    CHECK(sizes == std::multiset<size_t>{1, 4, 12, 24});
    CHECK(a5.normal_subgroups().size() == 2);

    CHECK(a5.all_subgroups().size() == 59);
    CHECK(s4.all_subgroups().size() == 30);
}

TEST_CASE("conjugacy classes of symmetric group on four points") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    std::vector<std::vector<int>> cls = s4.conjugacy_classes();
    std::multiset<size_t> sizes;
    for (auto& c : cls) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("regular representation is a faithful isomorphic copy") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    PermGroup reg = s3.regular_representation();
    CHECK(reg.degree == 6);
    GroupTable rt = GroupTable::enumerate(reg);
    CHECK(rt.size() == 6);
    CHECK(rt.exponent() == s3.exponent());
    CHECK_FALSE(rt.is_abelian());
}

TEST_CASE("quaternion group of order eight from its regular permutation model") {
    // 1,i,j,k,-1,-i,-j,-k as points 1..8; left multiplication by i and j.
    GroupTable q8 = table_of(8, {"(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"});
    REQUIRE(q8.size() == 8);
    CHECK(q8.exponent() == 4);
    CHECK_FALSE(q8.is_abelian());
    int involutions = 0;
    for (int i = 0; i < 8; ++i)
        if (q8.order_of(i) == 2) ++involutions;
    CHECK(involutions == 1);  // only -1: distinguishes Q8 from D4
    for (auto& n : q8.normal_subgroups()) CHECK(q8.is_normal(n));
    CHECK(q8.normal_subgroups().size() == 6);  // 1, <-1>, <i>, <j>, <k>, Q8
}

TEST_CASE("abelian invariant factor decompositions") {
    GroupTable v4 = table_of(4, {"(1 2)", "(3 4)"});
    CHECK(abelian_decomposition(v4).orders == std::vector<long>{2, 2});

    GroupTable z6 = table_of(6, {"(1 2 3 4 5 6)"});
    CHECK(abelian_decomposition(z6).orders == std::vector<long>{6});

    // Z/3 x Z/4 collapses to the single invariant factor 12.
    GroupTable z12 = table_of(7, {"(1 2 3)", "(4 5 6 7)"});
    CHECK(abelian_decomposition(z12).orders == std::vector<long>{12});

    GroupTable z2z6 = table_of(8, {"(1 2)", "(3 4 5 6 7 8)"});
    CHECK(abelian_decomposition(z2z6).orders == std::vector<long>{2, 6});

    GroupTable z33 = table_of(6, {"(1 2 3)", "(4 5 6)"});
    CHECK(abelian_decomposition(z33).orders == std::vector<long>{3, 3});

    GroupTable triv = table_of(2, {});
    CHECK(abelian_decomposition(triv).orders.empty());

    // Coordinates are a bijection onto the mixed-radix box.
    AbelianDecomp dz = abelian_decomposition(z12);
    std::set<std::vector<long>> seen(dz.coords.begin(), dz.coords.end());
    CHECK(seen.size() == 12);
    for (size_t i = 0; i < dz.gens.size(); ++i)
        CHECK(z12.order_of(dz.gens[i]) == dz.orders[i]);

    CHECK_THROWS_AS(abelian_decomposition(table_of(3, {"(1 2)", "(1 2 3)"})),
                    std::invalid_argument);
}

TEST_CASE("character tables and orthogonality") {
    GroupTable z6 = table_of(6, {"(1 2 3 4 5 6)"});
    CharacterTable ch = CharacterTable::build(z6, CycField::get(12));
    REQUIRE(ch.count() == 6);
    const CycField* f = ch.F;

    // Orthogonality: sum_g chi(g) psi(g^-1) = |S| [chi == psi].
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            Cyc acc = Cyc::zero(f);
            for (int g = 0; g < 6; ++g) acc = acc + ch.value(a, g) * ch.value(b, z6.inv(g));
            CHECK(acc == (a == b ? Cyc(f, 6) : Cyc::zero(f)));
        }

    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int g = 0; g < 6; ++g) {
                CHECK(ch.value(ch.char_mul(a, b), g) == ch.value(a, g) * ch.value(b, g));
                CHECK(ch.value(ch.char_inv(a), g) * ch.value(a, g) == Cyc::one(f));
            }
    CHECK(ch.value(ch.trivial_char(), 3) == Cyc::one(f));

    // Characters of the Klein four-group are real signs.
    GroupTable v4 = table_of(4, {"(1 2)", "(3 4)"});
    CharacterTable cv = CharacterTable::build(v4, CycField::get(4));
    for (int a = 0; a < 4; ++a)
        for (int g = 0; g < 4; ++g) {
            Cyc v = cv.value(a, g);
            CHECK((v == Cyc::one(cv.F) || v == Cyc(cv.F, -1)));
        }

    // A conductor without the needed roots of unity is rejected.
    CHECK_THROWS_WITH(CharacterTable::build(z6, CycField::get(4)),
                      Catch::Matchers::ContainsSubstring("conductor"));
}

TEST_CASE("character pullback along an automorphism") {
    GroupTable z33 = table_of(6, {"(1 2 3)", "(4 5 6)"});
    CharacterTable ch = CharacterTable::build(z33, CycField::get(3));
    GroupAut sw = GroupAut::conjugation(z33, perm_parse("(1 4)(2 5)(3 6)", 6));
    REQUIRE(sw.verify(z33));
    for (int a = 0; a < ch.count(); ++a)
        for (int g = 0; g < z33.size(); ++g)
            CHECK(ch.value(ch.char_pullback(a, sw), g) ==
                  ch.value(a, sw.img[static_cast<size_t>(g)]));
}

TEST_CASE("two-cocycles: nondegenerate square case") {
    GroupTable v4 = table_of(4, {"(1 2)", "(3 4)"});
    TwoCocycle w = nondegenerate_two_cocycle(v4, CycField::get(4));
    CHECK(w.is_cocycle());
    CHECK(w.is_nondegenerate());
    const CycField* f = w.chars.F;
    Cyc minus1(f, -1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<long> ca = w.chars.decode(a), cb = w.chars.decode(b);
            Cyc expect = (ca[1] * cb[0]) % 2 == 1 ? minus1 : Cyc::one(f);
            CHECK(w(a, b) == expect);
        }

    GroupTable z33 = table_of(6, {"(1 2 3)", "(4 5 6)"});
    TwoCocycle w3 = nondegenerate_two_cocycle(z33, CycField::get(3));
    CHECK(w3.is_cocycle());
    CHECK(w3.is_nondegenerate());

    TwoCocycle t = trivial_two_cocycle(v4, CycField::get(4));
    CHECK(t.is_cocycle());
    CHECK_FALSE(t.is_nondegenerate());

    // Trivial group: the empty pairing is vacuously nondegenerate.
    TwoCocycle t1 = trivial_two_cocycle(table_of(2, {}), CycField::get(4));
    CHECK(t1.is_cocycle());
    CHECK(t1.is_nondegenerate());

    // No pairing when invariant factors cannot be split into equal pairs.
    GroupTable z4z2 = table_of(6, {"(1 2 3 4)", "(5 6)"});
    CHECK_THROWS_WITH(nondegenerate_two_cocycle(z4z2, CycField::get(4)),
                      Catch::Matchers::ContainsSubstring("decomposition"));
    GroupTable z6 = table_of(6, {"(1 2 3 4 5 6)"});
    CHECK_THROWS_AS(nondegenerate_two_cocycle(z6, CycField::get(12)), std::invalid_argument);
}

TEST_CASE("cocycle invariance under automorphisms") {
    // Klein four-group inside S4: every automorphism preserves the class of
    // the nondegenerate cocycle (its alternating form is the unique one).
    GroupTable v4 = table_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    TwoCocycle w4 = nondegenerate_two_cocycle(v4, CycField::get(4));
    GroupAut ad12 = GroupAut::conjugation(v4, perm_parse("(1 2)", 4));
    REQUIRE(ad12.verify(v4));
    CHECK(w4.invariant_under(ad12));

    // Z/3 x Z/3 with the coordinate swap: the symplectic form inverts, so the
    // cocycle class moves.
    GroupTable z33 = table_of(6, {"(1 2 3)", "(4 5 6)"});
    TwoCocycle w3 = nondegenerate_two_cocycle(z33, CycField::get(3));
    GroupAut sw = GroupAut::conjugation(z33, perm_parse("(1 4)(2 5)(3 6)", 6));
    REQUIRE(sw.verify(z33));
    CHECK_FALSE(w3.invariant_under(sw));
    CHECK(w3.invariant_under(GroupAut::identity(z33)));
}

TEST_CASE("inner automorphisms fixing a subgroup pointwise") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    std::vector<int> s = s4.closure({s4.index_of(perm_parse("(1 2)", 4)),
                                     s4.index_of(perm_parse("(3 4)", 4))});
    std::vector<GroupAut> fixers = inner_automorphisms_fixing(s4, s);
    CHECK(fixers.size() == 4);
    for (const GroupAut& f : fixers) {
        CHECK(f.verify(s4));
        CHECK(f.fixes(s));
    }
}

TEST_CASE("matched pair from factorizations of the symmetric group on three points") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});

    // Orientation with F the rotation subgroup: the action |> inverts.
    MatchedPair a = matched_pair_from_factorization(
        s3, PermGroup::from_strings(3, {"(1 2 3)"}), PermGroup::from_strings(3, {"(1 2)"}));
    REQUIRE(a.F.size() == 3);
    REQUIRE(a.G.size() == 2);
    CHECK(a.verify());
    int r = a.F.index_of(perm_parse("(1 2 3)", 3));
    int rr = a.F.index_of(perm_parse("(1 3 2)", 3));
    CHECK(a.lact(1, r) == rr);  // (1 2) |> (1 2 3) = (1 3 2)
    CHECK(a.ract(1, r) == 1);   // <| is trivial here
    bool lact_trivial = true;
    for (int x = 0; x < 3; ++x) lact_trivial = lact_trivial && a.lact(1, x) == x;
    CHECK_FALSE(lact_trivial);

    // Swapped orientation: |> is trivial (F has order two), <| conjugates.
    MatchedPair b = matched_pair_from_factorization(
        s3, PermGroup::from_strings(3, {"(1 2)"}), PermGroup::from_strings(3, {"(1 2 3)"}));
    CHECK(b.verify());
    for (int g = 0; g < 3; ++g)
        for (int x = 0; x < 2; ++x) CHECK(b.lact(g, x) == x);
    int c3 = b.G.index_of(perm_parse("(1 2 3)", 3));
    int c3i = b.G.index_of(perm_parse("(1 3 2)", 3));
    CHECK(b.ract(c3, 1) == c3i);  // (1 2)^-1 (1 2 3)(1 2) = (1 3 2)
}

TEST_CASE("matched pair from a factorization of the symmetric group on four points") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    MatchedPair mp = matched_pair_from_factorization(
        s4, PermGroup::from_strings(4, {"(1 2 3 4)", "(1 3)"}),
        PermGroup::from_strings(4, {"(1 2 3)"}));
    CHECK(mp.F.size() == 8);
    CHECK(mp.G.size() == 3);
    CHECK(mp.verify());

    // Reconstruction: g x = (g |> x)(g <| x) inside the big group.
    for (int g = 0; g < 3; ++g)
        for (int x = 0; x < 8; ++x) {
            Perm lhs = perm_mul(mp.G.elements[static_cast<size_t>(g)],
                                mp.F.elements[static_cast<size_t>(x)]);
            Perm rhs = perm_mul(mp.F.elements[static_cast<size_t>(mp.lact(g, x))],
                                mp.G.elements[static_cast<size_t>(mp.ract(g, x))]);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("factorization preconditions are enforced") {
    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    // Sizes multiply up but the factors overlap in (1 2).
    CHECK_THROWS_WITH(
        matched_pair_from_factorization(s4, PermGroup::from_strings(4, {"(1 2)", "(3 4)"}),
                                        PermGroup::from_strings(4, {"(1 2)", "(1 2 3)"})),
        Catch::Matchers::ContainsSubstring("intersect"));
    CHECK_THROWS_WITH(matched_pair_from_factorization(s4, PermGroup::from_strings(4, {"(1 2)"}),
                                                      PermGroup::from_strings(4, {"(1 2 3)"})),
                      Catch::Matchers::ContainsSubstring("exact factorization"));
}
