#pragma once

#include "toralab/assoc.hpp"

namespace toralab {

/// Windowed assignment (r, s) -> scalar for the products t^r t^s =
/// lambda_{r,s} t^{r+s}, with the distinguished constants of the
/// three-parameter family when they exist: lambda on generic pairs, mu on
/// opposite pairs, c when either argument is zero.
struct LambdaSystem {
    Window window;
    std::map<std::pair<Deg, Deg>, Rational> values;
    Rational lambda, mu, c;
    bool constant_family = false;  // the Thm-style constancy test passed

    const Rational& at(const Deg& r, const Deg& s) const;
    json to_json() const;  // {"(r|s)": "p/q", ..., "lambda", "mu", "c"}
};

/// The three-parameter family: generic pairs lambda, opposite pairs mu,
/// zero-argument pairs c.
LambdaSystem thm91_family(const Rational& lambda, const Rational& mu, const Rational& c, const Window& w);

/// (bar l, s) L(r, s+l) + (bar l, r) L(s, r+l) - (bar l, r+s) L(r, s)
/// for nonzero l, r, s; out-of-window references are errors.
Rational lambda_residual(const LambdaSystem& L, const Deg& l, const Deg& r, const Deg& s);

/// Builds the family, sweeps the functional equation over every admissible
/// window triple, and evaluates the two bracketings of t^{-r} t^r t^s t^{-s}
/// through the table: they agree exactly when lambda^2 = mu c, and the
/// report carries the mismatch factor lambda^2/(mu c) otherwise.
VerificationReport verify_thm91_family(const Rational& lambda, const Rational& mu, const Rational& c,
                                       const Window& w);

struct LambdaNullspace {
    std::vector<std::pair<Deg, Deg>> layout;  // unknown order
    std::vector<std::vector<Rational>> basis;  // kernel basis vectors
    size_t equations = 0;
    size_t rank = 0;
    bool family_contained = false;  // the three family vectors solve the system
};

/// Exact kernel of the functional equation over unknowns L(r,s), all window
/// pairs. With `symmetrized`, the relations L(r,s) = L(s,r) are added.
LambdaNullspace lambda_nullspace(const Window& w, bool symmetrized = false);

/// Lemma-style predicates over a computed nullspace element.
bool nullspace_satisfies_step_lemmas(const LambdaNullspace& ns, const std::vector<Rational>& vec,
                                     const Window& w, json* detail = nullptr);

/// Integral k with (r, bar k) != 0 and (k, bar s) = 0, for N even >= 4,
/// r not proportional to s, (r, bar s) = 0. Both conclusions are
/// post-verified on every call.
Deg construct_k(const Deg& r, const Deg& s);

struct NotOfJetType : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solves t^r t^s = lambda_{r,s} t^{r+s} on a spanning set for every window
/// pair; a non-proportional action raises NotOfJetType with a witness. The
/// Thm-style constancy test result is recorded in `constant_family`.
LambdaSystem extract_lambda(const ShiftSystem& T, const Window& w);

}  // namespace toralab
