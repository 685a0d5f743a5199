#pragma once

#include "toralab/report.hpp"
#include "toralab/simple_lie.hpp"

namespace toralab {

/// Element of the extended weight space h~* in the basis
/// { alpha_1..alpha_d, delta_1..delta_N, omega_1..omega_N }: a finite part
/// over the fundamental weights of g plus delta and omega coefficient rows.
struct Weight {
    const SimpleLieDatum* g = nullptr;
    std::vector<Rational> alpha_fund;  // rank(g) entries
    RatVec delta;                      // N entries
    RatVec omega;                      // N entries

    Weight() = default;
    Weight(const SimpleLieDatum& lie, int N)
        : g(&lie), alpha_fund(lie.rank()), delta(N), omega(N) {}

    int N() const { return delta.arity(); }
    /// Finite part in epsilon coordinates (trace-zero representative).
    std::vector<Rational> alpha_eps() const;

    friend Weight operator+(Weight a, const Weight& b);
    friend Weight operator-(Weight a, const Weight& b);
    friend Weight operator*(const Rational& c, Weight a);
    friend bool operator==(const Weight& a, const Weight& b);

    json to_json() const;
    static Weight from_json(const SimpleLieDatum& g, const json& j);
    std::string str() const { return to_json().dump(); }
};

/// Real root alpha + delta_r.
struct RealRoot {
    Deg alpha;  // epsilon coordinates, a root of g
    Deg r;      // Z^N part

    Weight as_weight(const SimpleLieDatum& g, int N) const;
};

/// Element of the extended Cartan h~ = h + Z_0 + D.
struct CartanElt {
    std::vector<Rational> h_diag;  // n entries, traceless
    RatVec k_coeffs;               // N entries
    RatVec d_coeffs;               // N entries
};

/// The symmetric form of the extended weight space:
/// <alpha, delta_i> = <alpha, omega_i> = 0, <delta_i, delta_j> =
/// <omega_i, omega_j> = 0, <delta_i, omega_j> = delta_ij, finite parts via g.
Rational weight_pairing(const Weight& a, const Weight& b);

/// lambda evaluated on an element of h~.
Rational weight_eval(const Weight& lam, const CartanElt& h);

/// Co-root of a real root: alpha^vee + (2/(alpha,alpha)) sum r_i K_i.
/// The sl2-triple law [X_a(r), X_-a(-r)] = coroot image is a mandatory test.
CartanElt coroot(const SimpleLieDatum& g, const RealRoot& gamma);

/// Reflection r_gamma(lambda) = lambda - lambda(gamma^vee) gamma.
Weight reflect(const SimpleLieDatum& g, const RealRoot& gamma, const Weight& lam);

struct OrbitResult {
    std::vector<Weight> weights;  // deterministic order (serialized form)
    bool truncated = false;
};

/// Closure of {lambda} under the given reflections, capped at `bound`
/// breadth-first rounds; the flag reports truncation.
OrbitResult weyl_orbit(const SimpleLieDatum& g, const Weight& lam,
                       const std::vector<RealRoot>& generators, int bound);

enum class OrderVerdict { Less, Greater, Equal, Incomparable };
std::string order_verdict_name(OrderVerdict v);

/// Four-valued partial-order comparison: Less means mu < lambda. The
/// difference must decompose over { alpha_1..alpha_d, delta_m, delta_2m }
/// with integer coefficients, otherwise the weights are incomparable.
/// The index m is supplied by the caller (1-based, 2m <= N).
OrderVerdict order_compare(const Weight& lam, const Weight& mu, int m);

}  // namespace toralab
