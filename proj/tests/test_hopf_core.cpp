#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hopf/fin_hopf.hpp"
#include "hopf/group.hpp"

using namespace hopf;

static GroupTable table_of(int degree, std::vector<std::string> gens) {
    return GroupTable::enumerate(PermGroup::from_strings(degree, gens));
}

TEST_CASE("group algebra satisfies every axiom") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    FinHopf H = group_algebra(s3, CycField::get(1));
    VerifyResult r = verify_hopf(H);
    INFO(r.witness);
    CHECK(r.ok);
    CHECK(H.dim == 6);
    CHECK_FALSE(is_commutative(H));
    CHECK(is_cocommutative(H));
    CHECK(H.labels[0] == "e");

    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    FinHopf K = group_algebra(s4, CycField::get(1));
    VerifyResult r4 = verify_hopf(K);
    INFO(r4.witness);
    CHECK(r4.ok);
}

TEST_CASE("function algebra satisfies every axiom") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    FinHopf H = dual_group_algebra(s3, CycField::get(1));
    VerifyResult r = verify_hopf(H);
    INFO(r.witness);
    CHECK(r.ok);
    CHECK(is_commutative(H));
    CHECK_FALSE(is_cocommutative(H));

    GroupTable s4 = table_of(4, {"(1 2)", "(1 2 3 4)"});
    FinHopf K = dual_group_algebra(s4, CycField::get(1));
    VerifyResult r4 = verify_hopf(K);
    INFO(r4.witness);
    CHECK(r4.ok);
}

TEST_CASE("cyclic group algebra is commutative and cocommutative") {
    FinHopf H = group_algebra(table_of(6, {"(1 2 3 4 5 6)"}), CycField::get(1));
    CHECK(verify_hopf(H).ok);
    CHECK(is_commutative(H));
    CHECK(is_cocommutative(H));
}

TEST_CASE("linear dual swaps multiplication and comultiplication") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    FinHopf kG = group_algebra(s3, CycField::get(1));
    FinHopf fG = dual_group_algebra(s3, CycField::get(1));

    FinHopf D = dual_hopf(kG);
    VerifyResult r = verify_hopf(D);
    INFO(r.witness);
    CHECK(r.ok);
    // The dual basis of the group basis is exactly the point-evaluation basis.
    CHECK(structure_equal(D, fG));

    // Double dual returns the original tensors on the same basis.
    CHECK(structure_equal(dual_hopf(dual_hopf(kG)), kG));
    CHECK(structure_equal(dual_hopf(dual_hopf(fG)), fG));
    CHECK(verify_hopf(dual_hopf(fG)).ok);
}

TEST_CASE("tensor product of Hopf algebras") {
    FinHopf A = group_algebra(table_of(2, {"(1 2)"}), CycField::get(1));
    FinHopf B = dual_group_algebra(table_of(3, {"(1 2)", "(1 2 3)"}), CycField::get(1));
    FinHopf T = tensor_hopf(A, B);
    CHECK(T.dim == 12);
    VerifyResult r = verify_hopf(T);
    INFO(r.witness);
    CHECK(r.ok);
    CHECK(is_commutative(T));
    CHECK_FALSE(is_cocommutative(T));

    FinHopf TT = tensor_hopf(group_algebra(table_of(3, {"(1 2)", "(1 2 3)"}), CycField::get(1)), A);
    CHECK(verify_hopf(TT).ok);
    CHECK_FALSE(is_commutative(TT));
}

TEST_CASE("element operations respect the Hopf structure maps") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    FinHopf H = group_algebra(s3, CycField::get(1));
    const CycField* F = H.F;

    Vec x = zero_vec(H), y = zero_vec(H);
    x[1] = Cyc(F, 2);
    x[3] = Cyc(F, Rat(-1, 3));
    y[0] = Cyc::one(F);
    y[5] = Cyc(F, 7);

    // Antipode is an anti-homomorphism (a consequence of the axioms).
    Vec lhs = antipode_vec(H, mul_vec(H, x, y));
    Vec rhs = mul_vec(H, antipode_vec(H, y), antipode_vec(H, x));
    CHECK(lhs == rhs);

    CHECK(counit_vec(H, mul_vec(H, x, y)) == counit_vec(H, x) * counit_vec(H, y));

    // Multiplying by the unit vector is the identity.
    CHECK(mul_vec(H, H.unit, x) == x);
    CHECK(mul_vec(H, x, H.unit) == x);

    // comult of a grouplike basis vector is diagonal.
    SVec d = comult_vec(H, basis_vec(H, 2));
    REQUIRE(d.size() == 1);
    CHECK(d.begin()->first == H.pair_index(2, 2));
}

TEST_CASE("verifier pinpoints corrupted structure") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    const CycField* F = CycField::get(1);

    FinHopf bad1 = group_algebra(s3, F);
    std::swap(bad1.antipode[1], bad1.antipode[2]);
    VerifyResult r1 = verify_hopf(bad1);
    CHECK_FALSE(r1.ok);
    CHECK(r1.witness.find("antipode") != std::string::npos);

    FinHopf bad2 = group_algebra(s3, F);
    bad2.mult[1 * 6 + 2] = {{0, Cyc::one(F)}};
    CHECK_FALSE(verify_hopf(bad2).ok);

    FinHopf bad3 = group_algebra(s3, F);
    bad3.comult[4] = {{bad3.pair_index(4, 0), Cyc::one(F)}};
    VerifyResult r3 = verify_hopf(bad3);
    CHECK_FALSE(r3.ok);

    FinHopf bad4 = group_algebra(s3, F);
    bad4.labels.pop_back();
    CHECK(verify_hopf(bad4).witness == "tensor shape mismatch");

    // Non-normalized cocycle-like defect: scale one comultiplication row.
    FinHopf bad5 = group_algebra(s3, F);
    bad5.comult[3] = {{bad5.pair_index(3, 3), Cyc(F, 2)}};
    CHECK_FALSE(verify_hopf(bad5).ok);
}

TEST_CASE("linear maps certify as morphisms or get rejected") {
    GroupTable s3 = table_of(3, {"(1 2)", "(1 2 3)"});
    const CycField* F = CycField::get(1);
    FinHopf H = group_algebra(s3, F);

    LinMap id = identity_map(H.dim, F);
    CHECK(is_hopf_iso(id, H, H));

    // A group automorphism induces a Hopf automorphism of the group algebra.
    GroupAut ad = GroupAut::conjugation(s3, s3.index_of(perm_parse("(1 2)", 3)));
    LinMap f;
    f.src_dim = f.dst_dim = H.dim;
    f.cols.resize(static_cast<size_t>(H.dim));
    for (int j = 0; j < H.dim; ++j) f.cols[static_cast<size_t>(j)] = {{ad.img[static_cast<size_t>(j)], Cyc::one(F)}};
    CHECK(is_hopf_iso(f, H, H));

    // Inversion is linear but not an algebra map on a nonabelian group.
    LinMap inv;
    inv.src_dim = inv.dst_dim = H.dim;
    inv.cols.resize(static_cast<size_t>(H.dim));
    for (int j = 0; j < H.dim; ++j) inv.cols[static_cast<size_t>(j)] = {{s3.inv(j), Cyc::one(F)}};
    CHECK(inv.is_bijective());
    CHECK_FALSE(is_algebra_map(inv, H, H));
    CHECK(is_coalgebra_map(inv, H, H));

    // On an abelian group inversion is a Hopf automorphism.
    GroupTable z6 = table_of(6, {"(1 2 3 4 5 6)"});
    FinHopf A = group_algebra(z6, F);
    LinMap ia;
    ia.src_dim = ia.dst_dim = A.dim;
    ia.cols.resize(static_cast<size_t>(A.dim));
    for (int j = 0; j < A.dim; ++j) ia.cols[static_cast<size_t>(j)] = {{z6.inv(j), Cyc::one(F)}};
    CHECK(is_hopf_iso(ia, A, A));

    // Rank-deficient map is rejected by bijectivity.
    LinMap proj = identity_map(H.dim, F);
    proj.cols[5] = {};
    CHECK_FALSE(proj.is_bijective());
    CHECK(proj.rank() == 5);

    // Composition of morphisms stays a morphism.
    CHECK(is_hopf_iso(compose(f, f), H, H));
}

TEST_CASE("echelon spans and dense solvers") {
    const CycField* F = CycField::get(4);
    Echelon e;
    SVec v1, v2, v3;
    sv_set(v1, 0, Cyc::one(F));
    sv_set(v1, 2, Cyc::zeta(F));
    sv_set(v2, 1, Cyc(F, 3));
    sv_set(v3, 0, Cyc(F, 2));
    sv_set(v3, 2, Cyc::zeta(F) * Cyc(F, 2));
    CHECK(e.insert(v1));
    CHECK(e.insert(v2));
    CHECK_FALSE(e.insert(v3));  // v3 = 2 v1
    CHECK(e.rank() == 2);
    CHECK(e.contains(v3));
    SVec v4;
    sv_set(v4, 2, Cyc::one(F));
    CHECK_FALSE(e.contains(v4));

    // Solve a 2x2 system with a cyclotomic coefficient.
    std::vector<std::vector<Cyc>> A = {{Cyc::one(F), Cyc::zeta(F)}, {Cyc::zero(F), Cyc(F, 2)}};
    std::vector<Cyc> b = {Cyc(F, 5), Cyc(F, 4)};
    auto x = linear_solve(A, b, F);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + Cyc::zeta(F) * (*x)[1] == Cyc(F, 5));
    CHECK(Cyc(F, 2) * (*x)[1] == Cyc(F, 4));

    // Inconsistent system.
    std::vector<std::vector<Cyc>> A2 = {{Cyc::one(F), Cyc::one(F)}, {Cyc::one(F), Cyc::one(F)}};
    std::vector<Cyc> b2 = {Cyc::one(F), Cyc(F, 2)};
    CHECK_FALSE(linear_solve(A2, b2, F).has_value());

    // Kernel of a rank-1 2x3 matrix has dimension 2; members annihilate.
    std::vector<std::vector<Cyc>> A3 = {{Cyc::one(F), Cyc(F, 2), Cyc(F, 3)},
                                        {Cyc(F, 2), Cyc(F, 4), Cyc(F, 6)}};
    auto ker = kernel_basis(A3, F);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        for (const auto& row : A3) {
            Cyc dot = Cyc::zero(F);
            for (size_t i = 0; i < 3; ++i) dot = dot + row[i] * v[i];
            CHECK(dot == Cyc::zero(F));
        }
    }
    CHECK(dense_rank(A3) == 1);
}
