#include <catch2/catch_amalgamated.hpp>

#include "hopf/cyclotomic.hpp"

using namespace hopf;

namespace {

// Deterministic xorshift so property failures reproduce exactly.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }
    Rat rat() {
        Rat r(range(-20, 20), range(1, 10));
        r.canonicalize();
        return r;
    }
    Cyc cyc(const CycField* F) {
        std::vector<Rat> c;
        for (int i = 0; i < F->deg; ++i) c.push_back(rat());
        return Cyc(F, std::move(c));
    }
};

std::vector<Rat> ipoly(std::initializer_list<long> cs) {
    std::vector<Rat> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical tables", "[scalars]") {
    CHECK(poly::cyclotomic(1) == ipoly({-1, 1}));
    CHECK(poly::cyclotomic(2) == ipoly({1, 1}));
    CHECK(poly::cyclotomic(3) == ipoly({1, 1, 1}));
    CHECK(poly::cyclotomic(4) == ipoly({1, 0, 1}));
    CHECK(poly::cyclotomic(6) == ipoly({1, -1, 1}));
    CHECK(poly::cyclotomic(8) == ipoly({1, 0, 0, 0, 1}));
    CHECK(poly::cyclotomic(12) == ipoly({1, 0, -1, 0, 1}));
    CHECK(CycField::get(48)->deg == 16);
}

TEST_CASE("root of unity arithmetic", "[scalars]") {
    const CycField* F4 = CycField::get(4);
    Cyc i = Cyc::zeta(F4);
    CHECK(i * i == Cyc(F4, -1));
    CHECK(i.pow(4) == Cyc::one(F4));
    CHECK(i.inv() == Cyc::root_of_unity(F4, 3));

    const CycField* F3 = CycField::get(3);
    Cyc w = Cyc::zeta(F3);
    // (1 + w)(1 + w^2) = 1 + w + w^2 + w^3 = 1 - 1 + 1 = 1
    CHECK((Cyc::one(F3) + w) * (Cyc::one(F3) + w * w) == Cyc::one(F3));

    for (long N : {1L, 2L, 3L, 4L, 6L, 8L, 12L}) {
        const CycField* F = CycField::get(N);
        Cyc z = Cyc::zeta(F);
        CHECK(z.pow(N) == Cyc::one(F));
        Cyc sum = Cyc::zero(F);
        for (long k = 0; k < N; ++k) sum += Cyc::root_of_unity(F, k);
        if (N == 1) CHECK(sum == Cyc::one(F));
        else CHECK(sum.is_zero());
        for (long k = 0; k < N; ++k)
            CHECK(Cyc::root_of_unity(F, k) * Cyc::root_of_unity(F, N - k) == Cyc::one(F));
    }
}

TEST_CASE("field axioms on random elements", "[scalars][property]") {
    Rng rng;
    for (long N : {1L, 2L, 3L, 4L, 8L, 12L}) {
        const CycField* F = CycField::get(N);
        for (int trial = 0; trial < 150; ++trial) {
            Cyc a = rng.cyc(F), b = rng.cyc(F), c = rng.cyc(F);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + Cyc::zero(F) == a);
            REQUIRE(a * Cyc::one(F) == a);
            if (!a.is_zero()) {
                REQUIRE(a * a.inv() == Cyc::one(F));
                REQUIRE((a / a) == Cyc::one(F));
            }
        }
    }
}

TEST_CASE("exact inverse examples", "[scalars]") {
    const CycField* F8 = CycField::get(8);
    Cyc z = Cyc::zeta(F8);
    CHECK(z * z == Cyc::root_of_unity(F8, 2));
    CHECK((Cyc(F8, 2)).inv() == Cyc(F8, Rat(1, 2)));
    Cyc mix = Cyc::one(F8) + z + z.pow(3);
    CHECK(mix * mix.inv() == Cyc::one(F8));
    CHECK_THROWS_AS(Cyc::zero(F8).inv(), std::domain_error);
}

TEST_CASE("serialization is canonical and round-trips", "[scalars]") {
    const CycField* F4 = CycField::get(4);
    Cyc i = Cyc::zeta(F4);
    CHECK(i.to_string() == "cyc(N=4)[0/1, 1/1]");
    CHECK(Cyc::parse("cyc(N=4)[0/1, 1/1]") == i);

    Rng rng;
    for (long N : {1L, 2L, 3L, 4L, 8L, 12L}) {
        const CycField* F = CycField::get(N);
        for (int trial = 0; trial < 50; ++trial) {
            Cyc a = rng.cyc(F);
            CHECK(Cyc::parse(a.to_string()) == a);
            CHECK(Cyc::parse(a.to_string()).to_string() == a.to_string());
        }
    }

    CHECK_THROWS_AS(Cyc::parse("cyc(N=4)[0/1]"), std::invalid_argument);
    CHECK_THROWS_AS(Cyc::parse("nonsense"), std::invalid_argument);
    const CycField* F3 = CycField::get(3);
    CHECK_THROWS_AS(Cyc::one(F3) + Cyc::one(F4), std::invalid_argument);
}
