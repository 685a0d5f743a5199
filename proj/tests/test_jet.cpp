#include <doctest.h>

#include "toralab/jet.hpp"

using namespace toralab;

namespace {
RatVec zero2() { return RatVec(2); }
SigmaProfile true_profile_m1() {
    // first profile found by calibration on a faithful m=1 fiber
    json info;
    static SigmaProfile p = calibrate_jet_coefficients(1, sp_defining(1), Window(2, 2), &info);
    return p;
}
}  // namespace

TEST_CASE("sp basis counts and closure") {
    CHECK(sp_basis(1).dim() == 3);
    CHECK(sp_basis(2).dim() == 10);
    CHECK(sp_basis(1).names[0] == "E[1,1]-E[2,2]");
    CHECK(sp_basis(1).names[1] == "E[1,2]");
    CHECK(sp_basis(1).names[2] == "E[2,1]");
    // closure: bracket of any two basis matrices lies in the span
    for (int m : {1, 2}) {
        const auto& b = sp_basis(m);
        const int n = 2 * m;
        for (int x = 0; x < b.dim(); ++x)
            for (int y = 0; y < b.dim(); ++y) {
                RatMatrix mx(n, n), my(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (b.mats[x][i][j] != 0) mx.at(i, j) = Rational(b.mats[x][i][j]);
                        if (b.mats[y][i][j] != 0) my.at(i, j) = Rational(b.mats[y][i][j]);
                    }
                CHECK_NOTHROW(b.coords_of(mx * my - my * mx));
            }
    }
}

TEST_CASE("sp representations validate") {
    CHECK(sp_trivial(2).dim == 1);
    CHECK(sp_defining(2).dim == 4);
    CHECK(sp_sl2_weight(2).dim == 3);
    CHECK(sp_sym_power(2, 2).dim == 10);
}

TEST_CASE("sigma is quadratic and vanishes at zero") {
    SigmaProfile p = SigmaProfile::printed();
    for (int m : {1, 2}) {
        Deg z(2 * m);
        for (const auto& c : sigma_coords(m, z, p)) CHECK(c.is_zero());
        Window w(1, 2 * m);
        for (size_t i = 0; i < w.size(); ++i) {
            Deg r = w.at(i);
            auto one = sigma_coords(m, r, p);
            auto two = sigma_coords(m, 2 * r, p);
            for (size_t k = 0; k < one.size(); ++k) CHECK(two[k] == Rational(4) * one[k]);
        }
    }
}

TEST_CASE("printed profile carries the r_i^2 E_{i,m+i} term") {
    // m=1, r=(1,0): the f2 family contributes r_1^2 E_{1,2}
    auto coords = sigma_coords(1, Deg{1, 0}, SigmaProfile::printed());
    CHECK(coords[1] == Rational(1));  // E[1,2] slot
}

TEST_CASE("calibration on the defining fiber") {
    json info;
    SigmaProfile p = calibrate_jet_coefficients(1, sp_defining(1), Window(2, 2), &info);
    // the constraint set pins c[1] = 1 and c[0] c[2] = -1
    CHECK(p.c[1] == Rational(1));
    CHECK(p.c[0] * p.c[2] == Rational(-1));
    CHECK(info["passing_profiles"].size() == 6);  // conjugate solutions in the search grid
    // stability across windows
    json info3;
    SigmaProfile p3 = calibrate_jet_coefficients(1, sp_defining(1), Window(3, 2), &info3);
    CHECK(p == p3);
    CHECK(info["passing_profiles"] == info3["passing_profiles"]);
    // the printed profile itself is not a solution
    CHECK(verify_sp_commutator(sp_defining(1), SigmaProfile::printed(), Window(2, 2)).status == "fail");
}

TEST_CASE("calibration on the trivial fiber accepts anything") {
    json info;
    SigmaProfile p = calibrate_jet_coefficients(1, sp_trivial(1), Window(2, 2), &info);
    CHECK(info["passing_profiles"].size() == 216);
    CHECK(p == SigmaProfile::printed());
}

TEST_CASE("sp commutator identity under the calibrated profile") {
    SigmaProfile p = true_profile_m1();
    CHECK(verify_sp_commutator(sp_defining(1), p, Window(3, 2)).status == "pass");
    CHECK(verify_sp_commutator(sp_sl2_weight(2), p, Window(2, 2)).status == "pass");
}

TEST_CASE("jet action basics") {
    JetModule J = make_jet(1, sp_trivial(1), zero2(), zero2(), SigmaProfile::printed());
    JetVec v = jet_basis(J, Deg{1, 0}, 0);
    // t^0 acts as the identity
    CHECK(jet_action(J, JetGen::tr(Deg{0, 0}), v) == v);
    // h_0 is the zero operator
    CHECK(jet_action(J, JetGen::hr(Deg{0, 0}), v).is_zero());
    // d_1 (v (x) t^{e_1}) = 1 * (v (x) t^{e_1}) at u = 0
    CHECK(jet_action(J, JetGen::di(0), v) == v);
    // u shifts d eigenvalues
    RatVec u(2);
    u[0] = Rational(1, 2);
    JetModule Ju = make_jet(1, sp_trivial(1), u, zero2(), SigmaProfile::printed());
    JetVec got = jet_action(Ju, JetGen::di(0), v);
    JetVec want;
    want.add(Deg{1, 0}, {Rational(3, 2)}, Rational(1));
    CHECK(got == want);
}

TEST_CASE("jet module verification") {
    SUBCASE("trivial fiber, u = w = 0") {
        JetModule J = make_jet(1, sp_trivial(1), zero2(), zero2(), SigmaProfile::printed());
        CHECK(verify_jet_module(J, Window(2, 2)).status == "pass");
    }
    SUBCASE("defining fiber with the calibrated profile") {
        JetModule J = make_jet(1, sp_defining(1), zero2(), zero2(), true_profile_m1());
        CHECK(verify_jet_module(J, Window(2, 2)).status == "pass");
    }
    SUBCASE("rational shifts u, w do not disturb the relations") {
        RatVec u(2), w(2);
        u[0] = Rational(1, 3);
        u[1] = Rational(-2);
        w[0] = Rational(5, 2);
        w[1] = Rational(1);
        JetModule J = make_jet(1, sp_defining(1), u, w, true_profile_m1());
        CHECK(verify_jet_module(J, Window(2, 2)).status == "pass");
    }
    SUBCASE("mis-scaled sigma fails with a nonzero residual") {
        JetModule J = make_jet(1, sp_defining(1), zero2(), zero2(),
                               SigmaProfile::scaled(true_profile_m1(), Rational(2)));
        auto rep = verify_jet_module(J, Window(2, 2));
        CHECK(rep.status == "fail");
        CHECK(!rep.witnesses.empty());
    }
}

TEST_CASE("jet manifest") {
    JetModule J = make_jet(1, sp_defining(1), zero2(), zero2(), true_profile_m1());
    json m = J.manifest(Window(1, 2));
    CHECK(m["kind"] == "jet");
    CHECK(m["graded_dims"]["(0,0)"] == 2);
}
