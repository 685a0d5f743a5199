#include <doctest.h>

#include "toralab/induce.hpp"
#include "toralab/lambda.hpp"
#include "toralab/replab.hpp"
#include "toralab/verify_algebra.hpp"

using namespace toralab;

namespace {
SigmaProfile calibrated() {
    static SigmaProfile p = calibrate_jet_coefficients(1, sp_defining(1), Window(2, 2));
    return p;
}
}  // namespace

TEST_CASE("lambda residual on the constant family") {
    Window w(2, 2);
    LambdaSystem L = thm91_family(Rational(1), Rational(1), Rational(1), w);
    // generic triple
    CHECK(lambda_residual(L, Deg{1, 0}, Deg{0, 1}, Deg{1, 1}).is_zero());
    // l = -(r+s)
    CHECK(lambda_residual(L, Deg{-1, -1}, Deg{1, 0}, Deg{0, 1}).is_zero());
    // s = -l: the c-entry coefficient (bar l, s) vanishes
    CHECK(lambda_residual(L, Deg{1, 0}, Deg{0, 1}, Deg{-1, 0}).is_zero());
    // out-of-window reference errors
    CHECK_THROWS_AS(lambda_residual(L, Deg{2, 0}, Deg{0, 1}, Deg{1, 1}), std::out_of_range);
    CHECK_THROWS(lambda_residual(L, Deg{0, 0}, Deg{0, 1}, Deg{1, 1}));
}

TEST_CASE("thm91 family verification") {
    SUBCASE("all ones") {
        auto rep = verify_thm91_family(Rational(1), Rational(1), Rational(1), Window(2, 2));
        CHECK(rep.status == "pass");
        CHECK(rep.details["associativity"] == "consistent");
    }
    SUBCASE("lambda=2 mu=4 c=1 satisfies lambda^2 = mu c") {
        auto rep = verify_thm91_family(Rational(2), Rational(4), Rational(1), Window(2, 2));
        CHECK(rep.status == "pass");
    }
    SUBCASE("lambda=1 mu=1 c=2 fails associativity with factor 1/2") {
        auto rep = verify_thm91_family(Rational(1), Rational(1), Rational(2), Window(2, 2));
        CHECK(rep.status == "fail");
        bool found = false;
        for (const auto& wit : rep.witnesses)
            if (wit.contains("factor") && wit["factor"] == "1/2") found = true;
        CHECK(found);
        // the functional equation itself still holds (it is linear)
        CHECK(rep.details["admissible_triples"].get<size_t>() > 0);
        size_t eq_failures = 0;
        for (const auto& wit : rep.witnesses)
            if (wit.contains("l")) ++eq_failures;
        CHECK(eq_failures == 0);
    }
    SUBCASE("N=4 window") {
        auto rep = verify_thm91_family(Rational(3), Rational(9), Rational(1), Window(2, 4));
        CHECK(rep.status == "pass");
    }
}

TEST_CASE("lambda nullspace contains the three-parameter family") {
    auto ns = lambda_nullspace(Window(2, 2));
    CHECK(ns.family_contained);
    CHECK(ns.basis.size() >= 3);
    CHECK(ns.rank + ns.basis.size() == ns.layout.size());
    // every basis vector satisfies every admissible relation
    Window w(2, 2);
    for (const auto& vec : ns.basis) {
        std::map<std::pair<Deg, Deg>, Rational> table;
        for (size_t i = 0; i < ns.layout.size(); ++i) table[ns.layout[i]] = vec[i];
        LambdaSystem L;
        L.window = w;
        L.values = table;
        for (size_t li = 0; li < w.size(); li += 3) {
            Deg l = w.at(li);
            if (l.is_zero()) continue;
            for (size_t ri = 0; ri < w.size(); ri += 5) {
                Deg r = w.at(ri);
                if (r.is_zero()) continue;
                for (size_t si = 0; si < w.size(); si += 7) {
                    Deg s = w.at(si);
                    if (s.is_zero()) continue;
                    if (!w.contains(s + l) || !w.contains(r + l)) continue;
                    CHECK(lambda_residual(L, l, r, s).is_zero());
                }
            }
        }
    }
    // symmetrized system still contains the family
    auto sym = lambda_nullspace(Window(2, 2), true);
    CHECK(sym.family_contained);
    CHECK(sym.basis.size() <= ns.basis.size());
}

TEST_CASE("step lemmas hold on the constant family vector") {
    Window w(2, 2);
    auto ns = lambda_nullspace(w);
    // build the lambda = mu = c = 1 vector in the layout
    std::vector<Rational> vec(ns.layout.size(), Rational(1));
    json detail;
    CHECK(nullspace_satisfies_step_lemmas(ns, vec, w, &detail));
    CHECK(detail["checked"].get<size_t>() > 0);
}

TEST_CASE("construct_k") {
    // orthogonal case
    CHECK(construct_k(Deg{0, 1, 0, 0}, Deg{1, 0, 0, 0}) == Deg{0, 0, 0, 1});
    // general case
    CHECK(construct_k(Deg{1, 1, 0, 0}, Deg{1, 0, 0, 0}) == Deg{0, 0, 0, -1});
    // preconditions
    CHECK_THROWS_AS(construct_k(Deg{1, 0}, Deg{0, 1}), ArityError);             // N = 2 rejected
    CHECK_THROWS(construct_k(Deg{2, 0, 0, 0}, Deg{1, 0, 0, 0}));                // proportional
    CHECK_THROWS(construct_k(Deg{0, 0, 1, 0}, Deg{1, 0, 0, 0}));                // (r, bar s) != 0
}

TEST_CASE("construct_k post-verifies on scattered inputs") {
    // sample admissible pairs: r in the orthocomplement of bar(s)
    int tested = 0;
    Window w(2, 4);
    for (size_t si = 0; si < w.size() && tested < 60; si += 11) {
        Deg s = w.at(si);
        if (s.is_zero()) continue;
        for (size_t ri = 0; ri < w.size() && tested < 60; ri += 7) {
            Deg r = w.at(ri);
            if (r.is_zero() || ipair(r, bar(s)) != 0) continue;
            bool prop = true;
            for (int i = 0; i < 4 && prop; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (r[i] * s[j] != r[j] * s[i]) { prop = false; break; }
            if (prop) continue;
            Deg k = construct_k(r, s);
            CHECK(ipair(r, bar(k)) != 0);
            CHECK(ipair(k, bar(s)) == 0);
            ++tested;
        }
    }
    CHECK(tested > 10);
}

TEST_CASE("extract_lambda on the jet shift is the all-ones system") {
    JetModule J = make_jet(1, sp_defining(1), RatVec(2), RatVec(2), calibrated());
    JetShiftSystem T(J, Window(1, 2));
    LambdaSystem L = extract_lambda(T, Window(1, 2));
    CHECK(L.constant_family);
    CHECK(L.lambda == Rational(1));
    CHECK(L.mu == Rational(1));
    CHECK(L.c == Rational(1));
}

namespace {
/// shift scaled by 2^{|r|}: extraction works, constancy fails
class ScaledShift : public ShiftSystem {
public:
    explicit ScaledShift(const Window& w) : win_(w) {}
    std::vector<Deg> grades() const override { return win_.all(); }
    int dim(const Deg&) const override { return 1; }
    ModuleElem apply(const Deg& r, const ModuleElem& v) const override {
        long long absr = 0;
        for (int i = 0; i < r.arity(); ++i) absr += r[i] < 0 ? -r[i] : r[i];
        ModuleElem out;
        for (const auto& [key, c] : v.c) out.add(key.first + r, key.second, c * rat_pow(Rational(2), absr));
        return out;
    }

private:
    Window win_;
};
}  // namespace

TEST_CASE("extract_lambda flags non-constant systems") {
    ScaledShift T(Window(1, 2));
    LambdaSystem L = extract_lambda(T, Window(1, 2));
    CHECK_FALSE(L.constant_family);
    // lambda_{r,s} = 2^{|r|+|s|-|r+s|}
    CHECK(L.at(Deg{1, 0}, Deg{-1, 0}) == Rational(4));
    CHECK(L.at(Deg{1, 0}, Deg{0, 1}) == Rational(1));
}

TEST_CASE("associativize the realization highest weight slice") {
    const auto& g = build_sl(2);
    auto mod = realization_module(g, {1}, sp_defining(1), RatVec(2), RatVec(2), calibrated(), Window(3, 2));
    GradedSubspace hw = highest_weight_space(mod, TriTag::LevelZero, Window(1, 2));
    SubspaceModule slice(mod, hw);
    Deg alpha = g.roots()[0].first;
    auto res = associativize(slice, alpha, Window(1, 2));
    CHECK(res.lambda_alpha == Rational(1));  // lambda(h_alpha) = 1 for the fundamental weight
    CHECK(res.mu_alpha == Rational(1));
    CHECK(res.c == Rational(1));
    CHECK(res.details["lambda_sq_equals_mu_c"] == true);
    // the recovered action is the tautological one: all-ones lambda system
    LambdaSystem L = extract_lambda(*res.taction, Window(1, 2));
    CHECK(L.constant_family);
    CHECK(L.lambda == Rational(1));
}

TEST_CASE("associativize evaluation slices") {
    const auto& g = build_sl(2);
    Deg alpha = g.roots()[0].first;

    SUBCASE("p=1, a=1: tautological") {
        EvaluationModule ev(g, 1, {RatVec{Rational(1)}}, {{1}}, RatVec(1), Window(3, 1));
        SubspaceModule slice(ev, highest_weight_space(ev, TriTag::LevelZero, Window(1, 1)));
        auto res = associativize(slice, alpha, Window(1, 1));
        CHECK(res.lambda_alpha == Rational(1));
    }
    SUBCASE("p=1, a=2: the recipe still closes, with a rescaled ring action") {
        EvaluationModule ev(g, 1, {RatVec{Rational(2)}}, {{1}}, RatVec(1), Window(3, 1));
        SubspaceModule slice(ev, highest_weight_space(ev, TriTag::LevelZero, Window(1, 1)));
        auto res = associativize(slice, alpha, Window(1, 1));
        CHECK(res.lambda_alpha == Rational(1));
        CHECK(res.mu_alpha == Rational(1));
        LambdaSystem L = extract_lambda(*res.taction, Window(1, 1));
        CHECK(L.constant_family);
    }
    SUBCASE("p=2, distinct points: non-associativizable") {
        EvaluationModule ev(g, 1, {RatVec{Rational(1)}, RatVec{Rational(2)}}, {{1}, {1}}, RatVec(1),
                            Window(3, 1));
        SubspaceModule slice(ev, highest_weight_space(ev, TriTag::LevelZero, Window(1, 1)));
        CHECK_THROWS_AS(associativize(slice, alpha, Window(1, 1)), NonAssociativizable);
    }
    SUBCASE("full module: h_alpha is not diagonal") {
        EvaluationModule ev(g, 1, {RatVec{Rational(1)}}, {{1}}, RatVec(1), Window(1, 1));
        CHECK_THROWS_AS(associativize(ev, alpha, Window(1, 1)), NonAssociativizable);
    }
}
