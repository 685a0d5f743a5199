#include <doctest.h>

#include "toralab/algebra.hpp"
#include "toralab/weights.hpp"

using namespace toralab;

namespace {
Weight basic(const SimpleLieDatum& g, int N) { return Weight(g, N); }
}  // namespace

TEST_CASE("weight pairing table") {
    const auto& g = build_sl(2);
    // <delta_r, delta_s> = 0
    Weight dr = basic(g, 2), ds = basic(g, 2);
    dr.delta[0] = Rational(1);
    dr.delta[1] = Rational(-2);
    ds.delta[0] = Rational(3);
    CHECK(weight_pairing(dr, ds) == Rational(0));
    // <delta_1, omega_1> = 1
    Weight om = basic(g, 2);
    om.omega[0] = Rational(1);
    Weight d1 = basic(g, 2);
    d1.delta[0] = Rational(1);
    CHECK(weight_pairing(d1, om) == Rational(1));
    CHECK(weight_pairing(om, d1) == Rational(1));
    // <alpha + delta_r, beta + delta_s> = <alpha, beta>
    RealRoot a{g.roots()[0].first, Deg{1, 0}};
    RealRoot b{g.roots()[1].first, Deg{0, 2}};
    Weight wa = a.as_weight(g, 2), wb = b.as_weight(g, 2);
    CHECK(weight_pairing(wa, wb) ==
          Rational(SimpleLieDatum::root_pairing(a.alpha, b.alpha)));
}

TEST_CASE("coroot evaluation") {
    const auto& g = build_sl(2);
    Deg alpha = g.roots()[0].first;  // positive root of sl2
    // gamma = alpha + delta_0: coroot is alpha^vee
    Weight lam = basic(g, 2);
    lam.alpha_fund[0] = Rational(1);  // lambda(alpha^vee) = 1
    lam.omega[0] = Rational(5);       // lambda(K_1) = 5
    CHECK(weight_eval(lam, coroot(g, RealRoot{alpha, Deg{0, 0}})) == Rational(1));
    // gamma = alpha + delta_1: lambda(gamma^vee) = 1 + c
    CHECK(weight_eval(lam, coroot(g, RealRoot{alpha, Deg{1, 0}})) == Rational(6));
}

TEST_CASE("coroot matches the sl2-triple bracket in tau") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::Toroidal, 2, &g);
    for (Deg r : {Deg{1, 0}, Deg{2, -1}, Deg{0, 0}}) {
        // [X_a(r), X_-a(-r)] = h_a + sum r_i K_i
        Element br = bracket(spec, element_of(spec, BasisSymbol::G(0, r)),
                             element_of(spec, BasisSymbol::G(1, -r)));
        CartanElt h = coroot(g, RealRoot{g.roots()[0].first, r});
        Element want;
        std::vector<long long> diag(g.n());
        for (int i = 0; i < g.n(); ++i) {
            CHECK(h.h_diag[i].is_integer());
            diag[i] = h.h_diag[i].num_small();
        }
        auto coords = g.cartan_coords_of_diag(diag);
        for (int k = 0; k + 1 < g.n(); ++k)
            want.add_g(g.cartan_start() + k, Deg{0, 0}, Rational(coords[k]));
        RatVec kv(2);
        for (int i = 0; i < 2; ++i) kv[i] = h.k_coeffs[i];
        want.add_k(Deg{0, 0}, kv);
        CHECK(br == want);
    }
}

TEST_CASE("reflection") {
    const auto& g = build_sl(2);
    Deg alpha = g.roots()[0].first;
    RealRoot gamma{alpha, Deg{1, 0}};
    Weight lam = basic(g, 2);
    lam.alpha_fund[0] = Rational(1);
    lam.omega[0] = Rational(3);  // c = 3

    Weight img = reflect(g, gamma, lam);
    // lambda - (1+c)(alpha + delta_1)
    Weight want = lam;
    Weight gw = gamma.as_weight(g, 2);
    want = want - Rational(4) * gw;
    CHECK(img == want);

    // involution
    CHECK(reflect(g, gamma, img) == lam);

    // fixed point at lambda(gamma^vee) = 0
    Weight fix = basic(g, 2);
    fix.alpha_fund[0] = Rational(1);
    fix.omega[0] = Rational(-1);
    CHECK(reflect(g, gamma, fix) == fix);

    // pairing preserved
    Weight mu = basic(g, 2);
    mu.alpha_fund[0] = Rational(1, 2);
    mu.delta[1] = Rational(2);
    mu.omega[0] = Rational(1, 3);
    CHECK(weight_pairing(reflect(g, gamma, lam), reflect(g, gamma, mu)) == weight_pairing(lam, mu));
}

TEST_CASE("weyl orbit") {
    const auto& g = build_sl(2);
    Deg alpha = g.roots()[0].first;
    Weight lam = basic(g, 2);
    lam.alpha_fund[0] = Rational(1);

    // finite generators only: {lambda, lambda - alpha}
    auto orb = weyl_orbit(g, lam, {RealRoot{alpha, Deg{0, 0}}}, 10);
    CHECK(orb.weights.size() == 2);
    CHECK_FALSE(orb.truncated);

    // zero weight is fixed
    auto orb0 = weyl_orbit(g, basic(g, 2), {RealRoot{alpha, Deg{0, 0}}, RealRoot{-alpha, Deg{1, 1}}}, 4);
    CHECK(orb0.weights.size() == 1);

    // affine reflections truncate with a nonzero level
    Weight lev = basic(g, 2);
    lev.alpha_fund[0] = Rational(1);
    lev.omega[0] = Rational(2);
    auto orbA = weyl_orbit(g, lev, {RealRoot{alpha, Deg{0, 0}}, RealRoot{alpha, Deg{1, 0}}}, 3);
    CHECK(orbA.truncated);
    CHECK(orbA.weights.size() > 2);

    // integrality of lambda(gamma^vee) is preserved along the orbit
    for (const auto& w : orbA.weights)
        CHECK(weight_eval(w, coroot(g, RealRoot{alpha, Deg{1, 0}})).is_integer());
}

TEST_CASE("order comparison") {
    const auto& g = build_sl(2);
    Weight lam = basic(g, 2);
    lam.alpha_fund[0] = Rational(1);

    // lambda - mu = delta_m
    Weight mu = lam;
    mu.delta[0] -= Rational(1);
    CHECK(order_compare(lam, mu, 1) == OrderVerdict::Less);
    CHECK(order_compare(mu, lam, 1) == OrderVerdict::Greater);

    // lambda - mu = alpha_1: condition (iii)
    Weight mu2 = lam;
    Weight alpha1 = RealRoot{g.simple_roots()[0], Deg{0, 0}}.as_weight(g, 2);
    mu2 = mu2 - alpha1;
    CHECK(order_compare(lam, mu2, 1) == OrderVerdict::Less);

    CHECK(order_compare(lam, lam, 1) == OrderVerdict::Equal);

    // omega difference: incomparable
    Weight mu3 = lam;
    mu3.omega[0] += Rational(1);
    CHECK(order_compare(lam, mu3, 1) == OrderVerdict::Incomparable);

    // non-integer delta coefficient: incomparable
    Weight mu4 = lam;
    mu4.delta[0] -= Rational(1, 2);
    CHECK(order_compare(lam, mu4, 1) == OrderVerdict::Incomparable);

    // delta_m = delta_2m > 0: condition (ii)
    Weight mu5 = lam;
    mu5.delta[0] -= Rational(2);
    mu5.delta[1] -= Rational(2);
    CHECK(order_compare(lam, mu5, 1) == OrderVerdict::Less);

    CHECK_THROWS(order_compare(lam, mu, 2));  // 2m > N
}

TEST_CASE("weight json round trip") {
    const auto& g = build_sl(3);
    Weight w(g, 2);
    w.alpha_fund[0] = Rational(1, 2);
    w.alpha_fund[1] = Rational(3);
    w.delta[1] = Rational(-2);
    w.omega[0] = Rational(7, 5);
    Weight back = Weight::from_json(g, w.to_json());
    CHECK(back == w);
}
