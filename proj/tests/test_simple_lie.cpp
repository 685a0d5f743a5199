#include <doctest.h>

#include "toralab/simple_lie.hpp"

using namespace toralab;

TEST_CASE("build_sl basic facts") {
    const auto& sl2 = build_sl(2);
    CHECK(sl2.rank() == 1);
    CHECK(sl2.roots().size() == 2);
    CHECK(sl2.dim() == 3);

    const auto& sl3 = build_sl(3);
    CHECK(sl3.rank() == 2);
    CHECK(sl3.roots().size() == 6);
    CHECK(sl3.dim() == 8);

    CHECK_THROWS(SimpleLieDatum(1));

    // <h_a, h_a> = 2 under the trace form for sl_2
    int h = sl2.cartan_start();
    CHECK(sl2.form(h, h) == 2);
}

TEST_CASE("sl2 structure") {
    const auto& g = build_sl(2);
    int e = 0;  // E[1,2]
    int f = 1;  // E[2,1]
    int h = g.cartan_start();
    CHECK(g.basis_name(e) == "E[1,2]");
    CHECK(g.basis_name(h) == "E[1,1]-E[2,2]");
    auto ef = g.bracket(e, f);
    REQUIRE(ef.size() == 1);
    CHECK(ef[0].first == h);
    CHECK(ef[0].second == 1);
    auto he = g.bracket(h, e);
    REQUIRE(he.size() == 1);
    CHECK(he[0].second == 2);
    CHECK(g.form(e, f) == 1);
    CHECK(g.form(e, e) == 0);
    CHECK(g.is_positive_root_vector(e));
    CHECK_FALSE(g.is_positive_root_vector(f));
}

TEST_CASE("highest root and simple roots") {
    const auto& g = build_sl(3);
    CHECK(g.simple_roots().size() == 2);
    Deg beta = g.highest_root();
    CHECK(beta == Deg{1, 0, -1});
    CHECK(g.root_vector_index(beta) >= 0);
    CHECK(SimpleLieDatum::root_pairing(beta, beta) == 2);
}

TEST_CASE("irrep sl2 family") {
    const auto& g = build_sl(2);
    auto v1 = irrep(g, {1});
    CHECK(v1.dim == 2);
    auto v2 = irrep(g, {2});
    CHECK(v2.dim == 3);
    // weights 2, 0, -2 on h
    std::vector<long long> hd = {1, -1};
    std::vector<long long> got;
    for (int i = 0; i < v2.dim; ++i) got.push_back(v2.weight_eval_diag(i, hd));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<long long>{-2, 0, 2});
    auto v0 = irrep(g, {0});
    CHECK(v0.dim == 1);
    for (const auto& m : v0.action) CHECK(m.is_zero());
}

TEST_CASE("irrep capability limits") {
    const auto& g3 = build_sl(3);
    CHECK(irrep(g3, {1, 0}).dim == 3);   // defining
    CHECK(irrep(g3, {0, 1}).dim == 3);   // dual defining
    CHECK(irrep(g3, {2, 0}).dim == 6);   // Sym^2
    CHECK_THROWS_AS(irrep(g3, {1, 1}), CapabilityError);  // adjoint unsupported
    CHECK_THROWS_AS(irrep(g3, {-1, 0}), CapabilityError);
    const auto& g4 = build_sl(4);
    CHECK(irrep(g4, {0, 1, 0}).dim == 6);  // Alt^2
}

TEST_CASE("module bracket compatibility exact") {
    const auto& g = build_sl(2);
    auto m = irrep(g, {3});
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
            RatMatrix lhs(m.dim, m.dim);
            for (const auto& [i, c] : g.bracket(a, b)) lhs = lhs + Rational(c) * m.action[i];
            CHECK(lhs == m.action[a] * m.action[b] - m.action[b] * m.action[a]);
        }
}

TEST_CASE("root vectors act nilpotently") {
    const auto& g = build_sl(3);
    auto m = irrep(g, {1, 0});
    for (const auto& [alpha, idx] : g.roots()) {
        RatMatrix p = RatMatrix::identity(m.dim);
        bool vanished = false;
        for (int k = 0; k < m.dim + 1; ++k) {
            p = m.action[idx] * p;
            if (p.is_zero()) { vanished = true; break; }
        }
        CHECK(vanished);
    }
}

TEST_CASE("weyl dimension formula") {
    const auto& g2 = build_sl(2);
    CHECK(weyl_dim(g2, {5}) == Rational(6));
    const auto& g3 = build_sl(3);
    CHECK(weyl_dim(g3, {1, 1}) == Rational(8));
    CHECK(weyl_dim(g3, {2, 0}) == Rational(6));
    const auto& g4 = build_sl(4);
    CHECK(weyl_dim(g4, {0, 1, 0}) == Rational(6));
}
