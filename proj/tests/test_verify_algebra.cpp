#include <doctest.h>

#include "toralab/verify_algebra.hpp"

using namespace toralab;

TEST_CASE("jacobi passes on small windows across families") {
    const auto& g = build_sl(2);
    SUBCASE("toroidal N=2 R=1") {
        AlgebraSpec spec(Family::Toroidal, 2, &g);
        auto rep = verify_jacobi(spec, Window(1, 2));
        CHECK(rep.status == "pass");
    }
    SUBCASE("full toroidal N=2 R=1") {
        AlgebraSpec spec(Family::FullToroidal, 2, &g);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
    SUBCASE("tauS N=2 R=1") {
        AlgebraSpec spec(Family::TauS, 2, &g);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
    SUBCASE("tauH N=2 R=1") {
        AlgebraSpec spec(Family::TauH, 2, &g);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
    SUBCASE("tauD M=3 R=1") {
        AlgebraSpec spec(Family::TauD, 3, &g);
        CHECK(verify_jacobi(spec, Window(1, 3)).status == "pass");
    }
    SUBCASE("minimal EALA N=2 R=1") {
        AlgebraSpec spec(Family::MinimalEALA, 2, &g);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
    SUBCASE("DerA N=2 R=1") {
        AlgebraSpec spec(Family::DerA, 2, nullptr);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
    SUBCASE("HN N=2 R=1") {
        AlgebraSpec spec(Family::HN, 2, nullptr);
        CHECK(verify_jacobi(spec, Window(1, 2)).status == "pass");
    }
}

TEST_CASE("antisymmetry sweep") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    auto rep = verify_antisymmetry(spec, Window(2, 2));
    CHECK(rep.status == "pass");
    CHECK(rep.details["generators"].get<size_t>() > 100);
}

TEST_CASE("closure of the N=2 decomposition") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    auto rep = verify_closure(spec, TriTag::N2, Window(2, 2));
    CHECK(rep.status == "pass");
}

TEST_CASE("closure of the general decomposition at N=4") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 4, &g);
    auto rep = verify_closure(spec, TriTag::GeneralN, Window(1, 4));
    CHECK(rep.status == "pass");
}

TEST_CASE("closure of the level-zero decomposition") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    auto rep = verify_closure(spec, TriTag::LevelZero, Window(1, 2));
    CHECK(rep.status == "pass");
}

TEST_CASE("parallel jacobi equals single-threaded") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    auto a = verify_jacobi(spec, Window(1, 2), 1);
    auto b = verify_jacobi(spec, Window(1, 2), 2);
    CHECK(a.comparable_body() == b.comparable_body());
}

TEST_CASE("report diff ignores timing, catches content") {
    VerificationReport r1;
    r1.check = "x";
    r1.seconds = 1.0;
    VerificationReport r2 = r1;
    r2.seconds = 2.0;
    CHECK(report_diff(r1.to_json(), r2.to_json()).empty());
    r2.status = "fail";
    CHECK(!report_diff(r1.to_json(), r2.to_json()).empty());
}
