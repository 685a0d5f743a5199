#include <doctest.h>

#include "toralab/algebra.hpp"

using namespace toralab;

namespace {
RatVec rv(std::vector<long long> xs) {
    RatVec v(static_cast<int>(xs.size()));
    for (size_t i = 0; i < xs.size(); ++i) v[static_cast<int>(i)] = Rational(xs[i]);
    return v;
}
}  // namespace

TEST_CASE("spec parity constraints") {
    const auto& g = build_sl(2);
    CHECK_THROWS_AS(AlgebraSpec(Family::TauH, 3, &g), ArityError);
    CHECK_THROWS_AS(AlgebraSpec(Family::TauD, 4, &g), ArityError);
    CHECK_THROWS_AS(AlgebraSpec(Family::TauD, 1, &g), ArityError);
    CHECK_THROWS(AlgebraSpec(Family::Toroidal, 2, nullptr));
    CHECK_NOTHROW(AlgebraSpec(Family::DM, 3, nullptr));
}

TEST_CASE("toroidal bracket: [e(1,0), f(-1,0)] = h + K_1") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::Toroidal, 2, &g);
    auto e = BasisSymbol::G(0, Deg{1, 0});
    auto f = BasisSymbol::G(1, Deg{-1, 0});
    Element got = bracket(spec, e, f);

    Element want;
    want.add_g(g.cartan_start(), Deg{0, 0}, Rational(1));
    want.add_k(Deg{0, 0}, rv({1, 0}));
    CHECK(got == want);
}

TEST_CASE("Hamiltonian algebra: [h_r, h_s] = (bar r, s) h_{r+s}") {
    AlgebraSpec spec(Family::HN, 2, nullptr);
    Element hr = hamiltonian(spec, Deg{1, 0});
    Element hs = hamiltonian(spec, Deg{0, 1});
    Element got = bracket(spec, hr, hs);
    Element want = hamiltonian(spec, Deg{1, 1});
    want.negate();  // (bar r, s) = -1
    CHECK(got == want);

    // [h_r, h_-r] = 0, h_0 = 0
    CHECK(bracket(spec, hr, hamiltonian(spec, Deg{-1, 0})).is_zero());
    CHECK(hamiltonian(spec, Deg{0, 0}).is_zero());
}

TEST_CASE("h_0 brackets to zero in every family containing it") {
    const auto& g = build_sl(2);
    for (Family f : {Family::TauH, Family::HN}) {
        AlgebraSpec spec(f, 2, f == Family::TauH ? &g : nullptr);
        Element h0 = hamiltonian(spec, Deg{0, 0});
        CHECK(h0.is_zero());
        CHECK(bracket(spec, h0, hamiltonian(spec, Deg{1, 2})).is_zero());
    }
}

TEST_CASE("tauH bracket carries the abelian-extension central term") {
    // [h_(1,0), h_(0,1)] = -h_(1,1) - 1/2 K(bar(1,1), (1,1)), hand-evaluated
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    Element got = bracket(spec, hamiltonian(spec, Deg{1, 0}), hamiltonian(spec, Deg{0, 1}));
    Element want = hamiltonian(spec, Deg{1, 1});
    want.negate();
    RatVec u = rv({1, -1});
    u.scale(Rational(-1, 2));
    want.add_k(Deg{1, 1}, u);
    CHECK(got == want);
}

TEST_CASE("normal form in Z kills K(r,r)") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::Toroidal, 4, &g);
    Element e;
    e.add_k_int(Deg{1, 2, 0, -1}, Deg{1, 2, 0, -1}, Rational(1));
    normal_form(spec, e);
    CHECK(e.is_zero());
}

TEST_CASE("normal form in Z/K reduces to the K(bar r, r) line") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 4, &g);
    Deg r{1, 0, 0, 0};
    Element e;
    e.add_k(r, rv({0, 0, 1, 0}));
    normal_form(spec, e);
    // - K((0,0,-1,0) | r) is the canonical representative
    Element want;
    want.add_k_int(r, bar(r), Rational(-1));
    CHECK(e == want);
}

TEST_CASE("normal form in Z/K_M kills G degrees") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauD, 3, &g);
    Element e;
    e.add_k(Deg{1, -1, 1}, rv({3, 1, -2}));
    normal_form(spec, e);
    CHECK(e.is_zero());
}

TEST_CASE("normal form idempotent and linear on samples") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 4, &g);
    Element e;
    e.add_k(Deg{1, 1, 0, 0}, rv({1, 2, 3, 4}));
    e.add_k(Deg{0, 0, 0, 0}, rv({1, 0, 0, 1}));
    e.add_g(0, Deg{0, 1, 0, 0}, Rational(5, 3));
    Element nf = e;
    normal_form(spec, nf);
    Element nf2 = nf;
    normal_form(spec, nf2);
    CHECK(nf == nf2);

    // linearity: NF(2a + b) = 2 NF(a) + NF(b)
    Element b;
    b.add_k(Deg{1, 1, 0, 0}, rv({0, 1, 1, 0}));
    Element lhs;
    lhs.axpy(Rational(2), e);
    lhs.axpy(Rational(1), b);
    normal_form(spec, lhs);
    Element nb = b;
    normal_form(spec, nb);
    Element rhs;
    rhs.axpy(Rational(2), nf);
    rhs.axpy(Rational(1), nb);
    CHECK(lhs == rhs);
}

TEST_CASE("inadmissible symbols are rejected") {
    const auto& g = build_sl(2);
    AlgebraSpec dera(Family::DerA, 2, nullptr);
    Element k;
    k.add_k(Deg{1, 0}, rv({1, 0}));
    CHECK_THROWS_AS(normal_form(dera, k), InadmissibleElement);

    AlgebraSpec taus(Family::TauS, 2, &g);
    Element d;
    d.add_d(Deg{1, 0}, rv({1, 0}));  // (u, r) = 1 != 0
    CHECK_THROWS_AS(normal_form(taus, d), InadmissibleElement);

    AlgebraSpec tor(Family::Toroidal, 2, &g);
    Element dg;
    dg.add_d(Deg{1, 0}, rv({0, 1}));
    CHECK_THROWS_AS(normal_form(tor, dg), InadmissibleElement);

    AlgebraSpec taud(Family::TauD, 3, &g);
    Element dG;
    dG.add_d(Deg{1, -1, 1}, rv({1, 0, 0}));
    CHECK_THROWS_AS(normal_form(taud, dG), InadmissibleElement);

    AlgebraSpec tauh(Family::TauH, 4, &g);
    Element dh;
    dh.add_d(Deg{1, 0, 0, 0}, rv({1, 0, 0, 0}));  // not along bar(r)
    CHECK_THROWS_AS(normal_form(tauh, dh), InadmissibleElement);

    Element gsym;
    gsym.add_g(0, Deg{1, 0}, Rational(1));
    CHECK_THROWS_AS(normal_form(dera, gsym), InadmissibleElement);
}

TEST_CASE("minimal EALA bracket") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::MinimalEALA, 2, &g);
    auto e = BasisSymbol::G(0, Deg{2, -1});
    auto f = BasisSymbol::G(1, Deg{-2, 1});
    Element got = bracket(spec, e, f);
    Element want;
    want.add_g(g.cartan_start(), Deg{0, 0}, Rational(1));
    want.add_k(Deg{0, 0}, rv({2, -1}));
    CHECK(got == want);

    // r + s != 0: no central term
    Element got2 = bracket(spec, element_of(spec, e), element_of(spec, BasisSymbol::G(1, Deg{-1, 1})));
    Element want2;
    want2.add_g(g.cartan_start(), Deg{1, 0}, Rational(1));
    CHECK(got2 == want2);

    // K_i central, [d_i, K_j] = 0
    Element ki = element_of(spec, BasisSymbol::K(rv({1, 0}), Deg{0, 0}));
    Element di = element_of(spec, BasisSymbol::D(rv({0, 1}), Deg{0, 0}));
    CHECK(bracket(spec, ki, element_of(spec, e)).is_zero());
    CHECK(bracket(spec, di, ki).is_zero());
}

TEST_CASE("central symbols are central in g(x)A + Z") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::Toroidal, 2, &g);
    Element c = element_of(spec, BasisSymbol::K(rv({1, 2}), Deg{1, 1}));
    CHECK(bracket(spec, c, element_of(spec, BasisSymbol::G(0, Deg{0, 1}))).is_zero());
    CHECK(bracket(spec, c, element_of(spec, BasisSymbol::K(rv({1, 0}), Deg{0, 1}))).is_zero());
}

TEST_CASE("antisymmetry on mixed samples") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::FullToroidal, 2, &g);
    std::vector<Element> xs = {
        element_of(spec, BasisSymbol::G(0, Deg{1, 0})),
        element_of(spec, BasisSymbol::G(2, Deg{-1, 1})),
        element_of(spec, BasisSymbol::K(rv({0, 1}), Deg{1, 1})),
        element_of(spec, BasisSymbol::D(rv({1, 2}), Deg{0, -1})),
        element_of(spec, BasisSymbol::D(rv({3, 0}), Deg{1, -1})),
    };
    for (const auto& a : xs)
        for (const auto& b : xs) {
            Element ab = bracket(spec, a, b);
            Element ba = bracket(spec, b, a);
            ba.negate();
            CHECK(ab == ba);
        }
}

TEST_CASE("tauH closure of canonical derivation brackets") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 4, &g);
    Window w(1, 4);
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = 0; j < w.size(); j += 3) {
            Element a = hamiltonian(spec, w.at(i));
            Element b = hamiltonian(spec, w.at(j));
            CHECK_NOTHROW(bracket(spec, a, b));  // normal form would throw on escape
        }
}

TEST_CASE("component dimensions per quotient") {
    const auto& g = build_sl(2);
    AlgebraSpec tauh(Family::TauH, 4, &g);
    CHECK(component_dimension(tauh, SpaceTag::ZmodK, Deg{1, 1, 0, 0}) == 1);
    CHECK(component_dimension(tauh, SpaceTag::ZmodK, Deg{0, 0, 0, 0}) == 4);
    CHECK(component_dimension(tauh, SpaceTag::HN, Deg{1, 1, 0, 0}) == 1);
    CHECK(component_dimension(tauh, SpaceTag::HN, Deg{0, 0, 0, 0}) == 0);
    CHECK(component_dimension(tauh, SpaceTag::HNtilde, Deg{0, 0, 0, 0}) == 4);

    AlgebraSpec taud(Family::TauD, 3, &g);
    CHECK(component_dimension(taud, SpaceTag::ZmodKM, Deg{2, -2, 2}) == 0);
    CHECK(component_dimension(taud, SpaceTag::ZmodKM, Deg{1, 0, 0}) == 1);
    CHECK(component_dimension(taud, SpaceTag::ZmodKM, Deg{0, 0, 0}) == 3);
    CHECK(component_dimension(taud, SpaceTag::DM, Deg{1, -1, 1}) == 0);
    CHECK(component_dimension(taud, SpaceTag::DM, Deg{1, 0, 0}) == 1);
    CHECK(component_dimension(taud, SpaceTag::DM, Deg{0, 0, 0}) == 0);
    CHECK(component_dimension(taud, SpaceTag::DMtilde, Deg{0, 0, 0}) == 3);

    AlgebraSpec tor(Family::Toroidal, 4, &g);
    CHECK(component_dimension(tor, SpaceTag::Z, Deg{1, 2, 3, 4}) == 3);
    CHECK(component_dimension(tor, SpaceTag::Z, Deg{0, 0, 0, 0}) == 4);
    CHECK_THROWS(component_dimension(tor, SpaceTag::ZmodK, Deg{1, 0, 0, 0}));

    // full components
    CHECK(component_dimension(tauh, SpaceTag::Full, Deg{1, 0, 0, 0}) == 5);   // 3 + 1 + 1
    CHECK(component_dimension(tauh, SpaceTag::Full, Deg{0, 0, 0, 0}) == 11);  // 3 + 4 + 4
    CHECK(component_dimension(taud, SpaceTag::Full, Deg{1, -1, 1}) == 3);     // g only
}

TEST_CASE("triangular classification") {
    const auto& g = build_sl(2);
    AlgebraSpec h2(Family::TauH, 2, &g);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(0, Deg{2, 1})) == TriPart::PP);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(2, Deg{2, 1})) == TriPart::PP);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(1, Deg{1, 2})) == TriPart::MM);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(0, Deg{1, 1})) == TriPart::P);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(2, Deg{1, 1})) == TriPart::P);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(0, Deg{-1, -1})) == TriPart::M);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(0, Deg{0, 0})) == TriPart::P);   // e
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(1, Deg{0, 0})) == TriPart::M);   // f
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::G(2, Deg{0, 0})) == TriPart::Zero);
    CHECK(triangular_part(h2, TriTag::N2, BasisSymbol::D(rv({1, -1}), Deg{1, 1})) == TriPart::P);

    AlgebraSpec h4(Family::TauH, 4, &g);
    // r_m = r_{2m} = 0 puts h(r) in the zero part
    CHECK(triangular_part(h4, TriTag::GeneralN, BasisSymbol::G(2, Deg{1, 0, 2, 0})) == TriPart::Zero);
    CHECK(triangular_part(h4, TriTag::GeneralN, BasisSymbol::G(0, Deg{0, 1, 0, 0})) == TriPart::PP);
    CHECK(triangular_part(h4, TriTag::GeneralN, BasisSymbol::G(0, Deg{0, 1, 0, 1})) == TriPart::P);

    // level zero: only the g root vectors are charged
    CHECK(triangular_part(h4, TriTag::LevelZero, BasisSymbol::G(0, Deg{3, -1, 0, 2})) == TriPart::P);
    CHECK(triangular_part(h4, TriTag::LevelZero, BasisSymbol::G(1, Deg{0, 0, 0, 0})) == TriPart::M);
    CHECK(triangular_part(h4, TriTag::LevelZero, BasisSymbol::G(2, Deg{1, 1, 1, 1})) == TriPart::Zero);
    Deg r{1, 1, 0, 0};
    CHECK(triangular_part(h4, TriTag::LevelZero, BasisSymbol::D(RatVec(bar(r)), r)) == TriPart::Zero);

    CHECK_THROWS(triangular_part(h2, TriTag::N2, BasisSymbol::D(rv({1, 0}), Deg{1, 1})));
}

TEST_CASE("canonical generators counts") {
    const auto& g = build_sl(2);
    AlgebraSpec h4(Family::TauH, 4, &g);
    CHECK(canonical_generators(h4, Deg{1, 0, 0, 0}).size() == 5);
    CHECK(canonical_generators(h4, Deg{0, 0, 0, 0}).size() == 11);
    AlgebraSpec d3(Family::TauD, 3, &g);
    CHECK(canonical_generators(d3, Deg{1, -1, 1}).size() == 3);
    CHECK(canonical_generators(d3, Deg{1, 0, 0}).size() == 5);
    CHECK(canonical_generators(d3, Deg{0, 0, 0}).size() == 9);
    AlgebraSpec ts(Family::TauS, 4, &g);
    CHECK(canonical_generators(ts, Deg{1, 2, 0, 0}).size() == 3 + 3 + 3);
}

TEST_CASE("element printing") {
    const auto& g = build_sl(2);
    AlgebraSpec spec(Family::TauH, 2, &g);
    Element e = hamiltonian(spec, Deg{1, 0});
    CHECK(e.str() == "D((0,-1)|(1,0))");
    Element z;
    CHECK(z.str() == "0");
    CHECK(BasisSymbol::G(0, Deg{1, -2}).str() == "X[1](1,-2)");
}
