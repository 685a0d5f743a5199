#pragma once

#include <map>

#include "toralab/sp.hpp"

namespace toralab {

/// Weight-graded vector with fiber coordinates per grade.
struct JetVec {
    std::map<Deg, std::vector<Rational>> comps;

    void add(const Deg& grade, const std::vector<Rational>& v, const Rational& c);
    bool is_zero() const;
    friend bool operator==(const JetVec& a, const JetVec& b);
    std::string str() const;
};

/// Module for the Hamiltonian derivations plus degree operators on which the
/// Laurent ring acts associatively: fiber (x) one line per grade, with
///   d_i (v (x) t^s)  = (s_i + u_i) (v (x) t^s)
///   h_r (v (x) t^s)  = [(bar r, s) + L_w(r)] (v (x) t^{r+s}) + (sigma(r) v) (x) t^{r+s}
///   t^r (v (x) t^s)  = v (x) t^{r+s}
/// where L_w(r) = sum_i r_{m+i} w_{m+i} - sum_i r_i w_i.
struct JetModule {
    int m = 0;
    SpRep fiber;
    RatVec u;  // 2m rational shift for d_i
    RatVec w;  // 2m rational shift entering h_r
    SigmaProfile profile;

    int N() const { return 2 * m; }
    Rational d_scalar(int i, const Deg& s) const { return Rational(s[i]) + u[i]; }
    Rational h_scalar(const Deg& r, const Deg& s) const;
    RatMatrix sigma_op(const Deg& r) const { return fiber.act(sigma_coords(m, r, profile)); }

    json manifest(const Window& w) const;
};

JetModule make_jet(int m, SpRep fiber, RatVec u, RatVec w, SigmaProfile profile);

struct JetGen {
    enum Kind { Di, Hr, Tr } kind;
    int i = 0;  // Di index
    Deg r;      // Hr / Tr degree

    static JetGen di(int i) { return JetGen{Di, i, Deg()}; }
    static JetGen hr(const Deg& r) { return JetGen{Hr, 0, r}; }
    static JetGen tr(const Deg& r) { return JetGen{Tr, 0, r}; }
    std::string str() const;
};

/// Exact action of a generator on a module vector.
JetVec jet_action(const JetModule& J, const JetGen& g, const JetVec& v);
JetVec jet_basis(const JetModule& J, const Deg& grade, int i);

/// Checks, over all window degrees r, s and all window grades:
///   (a) [h_r, h_s] = (bar r, s) h_{r+s}
///   (b) t^r t^s = t^{r+s}
///   (c) [d_i, h_r] = r_i h_r
///   (d) [h_r, t^s] = (bar r, s) t^{r+s}
VerificationReport verify_jet_module(const JetModule& J, const Window& w);

}  // namespace toralab
