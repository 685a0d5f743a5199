#include <doctest.h>

#include "toralab/automorphism.hpp"
#include "toralab/verify_algebra.hpp"

using namespace toralab;

TEST_CASE("shear matrix") {
    IntegralMatrix b1 = shear_matrix(1, 1, 2);
    CHECK(b1.at(0, 0) == 1);
    CHECK(b1.at(0, 1) == 1);
    CHECK(b1.at(1, 0) == 0);
    CHECK(b1.at(1, 1) == 1);
    for (long long a : {1, 2, 3, 7}) CHECK(shear_matrix(a, 1, 2).det() == 1);
    // inverse block [[1,-1],[1-a,a]]
    IntegralMatrix inv = shear_matrix(3, 1, 2).inverse();
    CHECK(inv.at(0, 0) == 1);
    CHECK(inv.at(0, 1) == -1);
    CHECK(inv.at(1, 0) == -2);
    CHECK(inv.at(1, 1) == 3);
    CHECK_THROWS(shear_matrix(0, 1, 2));
    // N=4 embeds the block at rows {m, 2m}
    IntegralMatrix b4 = shear_matrix(2, 2, 4);
    CHECK(b4.det() == 1);
    CHECK(b4.at(1, 1) == 2);
    CHECK(b4.at(1, 3) == 1);
    CHECK(b4.at(3, 1) == 1);
    CHECK(b4.at(3, 3) == 1);
    CHECK(b4.at(0, 0) == 1);
}

TEST_CASE("degree pullback of the shear") {
    IntegralMatrix B = shear_matrix(1, 1, 2);
    // B^{-1} (s1, s2) = (s1 - s2, (1-a)s1 + a s2) at a = 1
    CHECK(B.inverse().apply(Deg{5, 3}) == Deg{2, 3});
}

TEST_CASE("identity automorphism is the identity map") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::FullToroidal, 2, &g);
    IntegralMatrix I = IntegralMatrix::identity(2);
    for (const auto& gen : window_generators(spec, Window(1, 2)))
        CHECK(apply_automorphism(spec, I, gen.elem) == gen.elem);
}

TEST_CASE("dual pairing invariance (F u, B r) = (u, r)") {
    IntegralMatrix B = random_unimodular(4, 7);
    IntegralMatrix F = B.transpose().inverse();
    Window w(1, 4);
    for (size_t i = 0; i < w.size(); i += 5)
        for (size_t j = 0; j < w.size(); j += 7) {
            Deg u = w.at(i), r = w.at(j);
            CHECK(ipair(F.apply(u), B.apply(r)) == ipair(u, r));
        }
}

TEST_CASE("brackets preserved on tau~ and tauS") {
    const auto& g = build_sl(2);
    for (Family f : {Family::FullToroidal, Family::TauS}) {
        AlgebraSpec spec(f, 2, &g);
        for (long long a : {1, 2}) {
            auto rep = verify_automorphism(spec, shear_matrix(a, 1, 2), Window(1, 2));
            CHECK(rep.status == "pass");
        }
        auto rep = verify_automorphism(spec, random_unimodular(2, 42), Window(1, 2));
        CHECK(rep.status == "pass");
    }
}

TEST_CASE("tauH2 is stable under GL(2,Z)") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    auto rep = verify_automorphism(spec, shear_matrix(2, 1, 2), Window(1, 2));
    CHECK(rep.status == "pass");
}

TEST_CASE("K-span equality under B") {
    for (unsigned long long seed : {1ULL, 2ULL}) {
        auto rep = verify_kspan(4, random_unimodular(4, seed), Window(2, 4));
        CHECK(rep.status == "pass");
    }
    CHECK(verify_kspan(4, shear_matrix(2, 2, 4), Window(2, 4)).status == "pass");
}

TEST_CASE("non-unimodular matrices are rejected") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::FullToroidal, 2, &g);
    IntegralMatrix M = IntegralMatrix::identity(2);
    M.set(0, 0, 2);
    CHECK_FALSE(M.unimodular());
    Element x = element_of(spec, BasisSymbol::G(0, Deg{1, 0}));
    CHECK_THROWS(apply_automorphism(spec, M, x));
}

TEST_CASE("random unimodular matrices are unimodular and deterministic") {
    auto b1 = random_unimodular(4, 99);
    auto b2 = random_unimodular(4, 99);
    CHECK(b1 == b2);
    CHECK(b1.unimodular());
    CHECK(b1.inverse() * b1 == IntegralMatrix::identity(4));
}
