#include "toralab/jet.hpp"

#include <chrono>
#include <sstream>

namespace toralab {

void JetVec::add(const Deg& grade, const std::vector<Rational>& v, const Rational& c) {
    if (c.is_zero()) return;
    auto& slot = comps[grade];
    if (slot.empty()) slot.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) slot[i] += c * v[i];
}

bool JetVec::is_zero() const {
    for (const auto& [g, v] : comps) {
        (void)g;
        for (const auto& x : v)
            if (!x.is_zero()) return false;
    }
    return true;
}

bool operator==(const JetVec& a, const JetVec& b) {
    auto nonzero = [](const JetVec& j) {
        std::map<Deg, std::vector<Rational>> out;
        for (const auto& [g, v] : j.comps) {
            bool nz = false;
            for (const auto& x : v) nz = nz || !x.is_zero();
            if (nz) out[g] = v;
        }
        return out;
    };
    return nonzero(a) == nonzero(b);
}

std::string JetVec::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, v] : comps) {
        bool nz = false;
        for (const auto& x : v) nz = nz || !x.is_zero();
        if (!nz) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i].str();
        }
        os << ")t^" << g.str();
    }
    if (first) os << "0";
    return os.str();
}

Rational JetModule::h_scalar(const Deg& r, const Deg& s) const {
    Rational out(ipair(bar(r), s));
    for (int i = 0; i < m; ++i) {
        if (!w[m + i].is_zero()) out += Rational(r[m + i]) * w[m + i];
        if (!w[i].is_zero()) out -= Rational(r[i]) * w[i];
    }
    return out;
}

json JetModule::manifest(const Window& win) const {
    json j;
    j["kind"] = "jet";
    json params;
    params["m"] = m;
    params["fiber"] = fiber.name;
    params["fiber_dim"] = fiber.dim;
    json uu = json::array(), ww = json::array();
    for (int i = 0; i < 2 * m; ++i) uu.push_back(u[i].str());
    for (int i = 0; i < 2 * m; ++i) ww.push_back(w[i].str());
    params["u"] = uu;
    params["w"] = ww;
    params["profile"] = profile.to_json();
    j["parameters"] = params;
    j["window"] = win.radius;
    json dims = json::object();
    for (size_t i = 0; i < win.size(); ++i) dims[win.at(i).str()] = fiber.dim;
    j["graded_dims"] = dims;
    return j;
}

JetModule make_jet(int m, SpRep fiber, RatVec u, RatVec w, SigmaProfile profile) {
    if (fiber.m != m) throw std::invalid_argument("make_jet: fiber rank mismatch");
    if (u.arity() != 2 * m || w.arity() != 2 * m) throw ArityError("make_jet: shift arity mismatch");
    JetModule J;
    J.m = m;
    J.fiber = std::move(fiber);
    J.u = std::move(u);
    J.w = std::move(w);
    J.profile = profile;
    return J;
}

std::string JetGen::str() const {
    switch (kind) {
        case Di: return "d[" + std::to_string(i + 1) + "]";
        case Hr: return "h" + r.str();
        case Tr: return "t^" + r.str();
    }
    return "?";
}

JetVec jet_basis(const JetModule& J, const Deg& grade, int i) {
    JetVec v;
    std::vector<Rational> e(J.fiber.dim);
    e[i] = Rational(1);
    v.add(grade, e, Rational(1));
    return v;
}

JetVec jet_action(const JetModule& J, const JetGen& g, const JetVec& v) {
    JetVec out;
    switch (g.kind) {
        case JetGen::Di:
            for (const auto& [s, vec] : v.comps) out.add(s, vec, J.d_scalar(g.i, s));
            break;
        case JetGen::Tr:
            for (const auto& [s, vec] : v.comps) out.add(s + g.r, vec, Rational(1));
            break;
        case JetGen::Hr: {
            if (g.r.is_zero()) break;  // h_0 = 0
            RatMatrix sig = J.sigma_op(g.r);
            for (const auto& [s, vec] : v.comps) {
                out.add(s + g.r, vec, J.h_scalar(g.r, s));
                out.add(s + g.r, sig.apply(vec), Rational(1));
            }
            break;
        }
    }
    return out;
}

VerificationReport verify_jet_module(const JetModule& J, const Window& w) {
    if (w.arity != J.N()) throw ArityError("verify_jet_module: window arity mismatch");
    VerificationReport rep;
    rep.check = "jet-module";
    rep.config["m"] = J.m;
    rep.config["fiber"] = J.fiber.name;
    rep.config["window"] = w.radius;
    rep.config["profile"] = J.profile.to_json();
    auto t0 = std::chrono::steady_clock::now();

    auto degs = w.all();
    auto check_on_basis = [&](const char* name, const Deg& r, const Deg& s, auto&& lhs_fn, auto&& rhs_fn) {
        for (const Deg& k : degs) {
            for (int i = 0; i < J.fiber.dim; ++i) {
                JetVec e = jet_basis(J, k, i);
                JetVec lhs = lhs_fn(e);
                JetVec rhs = rhs_fn(e);
                if (!(lhs == rhs)) {
                    json wit;
                    wit["identity"] = name;
                    wit["r"] = r.str();
                    wit["s"] = s.str();
                    wit["grade"] = k.str();
                    wit["basis"] = i;
                    JetVec diff = lhs;
                    for (const auto& [gr, vec] : rhs.comps) {
                        std::vector<Rational> neg(vec.size());
                        for (size_t t = 0; t < vec.size(); ++t) neg[t] = -vec[t];
                        diff.add(gr, neg, Rational(1));
                    }
                    wit["residual"] = diff.str();
                    rep.fail_with(std::move(wit));
                    return;
                }
            }
        }
    };

    for (const Deg& r : degs) {
        for (const Deg& s : degs) {
            // (a) [h_r, h_s] = (bar r, s) h_{r+s}
            check_on_basis(
                "[h_r,h_s]=(bar r,s)h_{r+s}", r, s,
                [&](const JetVec& e) {
                    JetVec x = jet_action(J, JetGen::hr(s), e);
                    x = jet_action(J, JetGen::hr(r), x);
                    JetVec y = jet_action(J, JetGen::hr(r), e);
                    y = jet_action(J, JetGen::hr(s), y);
                    JetVec diff = x;
                    for (const auto& [gr, vec] : y.comps) {
                        std::vector<Rational> neg(vec.size());
                        for (size_t t = 0; t < vec.size(); ++t) neg[t] = -vec[t];
                        diff.add(gr, neg, Rational(1));
                    }
                    return diff;
                },
                [&](const JetVec& e) {
                    JetVec z = jet_action(J, JetGen::hr(r + s), e);
                    JetVec out;
                    Rational c(ipair(bar(r), s));
                    for (const auto& [gr, vec] : z.comps) out.add(gr, vec, c);
                    return out;
                });
            // (b) t^r t^s = t^{r+s}
            check_on_basis(
                "t^r t^s = t^{r+s}", r, s,
                [&](const JetVec& e) { return jet_action(J, JetGen::tr(r), jet_action(J, JetGen::tr(s), e)); },
                [&](const JetVec& e) { return jet_action(J, JetGen::tr(r + s), e); });
            // (d) [h_r, t^s] = (bar r, s) t^{r+s}
            check_on_basis(
                "[h_r,t^s]=(bar r,s)t^{r+s}", r, s,
                [&](const JetVec& e) {
                    JetVec x = jet_action(J, JetGen::hr(r), jet_action(J, JetGen::tr(s), e));
                    JetVec y = jet_action(J, JetGen::tr(s), jet_action(J, JetGen::hr(r), e));
                    JetVec diff = x;
                    for (const auto& [gr, vec] : y.comps) {
                        std::vector<Rational> neg(vec.size());
                        for (size_t t = 0; t < vec.size(); ++t) neg[t] = -vec[t];
                        diff.add(gr, neg, Rational(1));
                    }
                    return diff;
                },
                [&](const JetVec& e) {
                    JetVec z = jet_action(J, JetGen::tr(r + s), e);
                    JetVec out;
                    Rational c(ipair(bar(r), s));
                    for (const auto& [gr, vec] : z.comps) out.add(gr, vec, c);
                    return out;
                });
        }
        // (c) [d_i, h_r] = r_i h_r
        for (int i = 0; i < J.N(); ++i) {
            check_on_basis(
                "[d_i,h_r]=r_i h_r", r, Deg(J.N()),
                [&](const JetVec& e) {
                    JetVec x = jet_action(J, JetGen::di(i), jet_action(J, JetGen::hr(r), e));
                    JetVec y = jet_action(J, JetGen::hr(r), jet_action(J, JetGen::di(i), e));
                    JetVec diff = x;
                    for (const auto& [gr, vec] : y.comps) {
                        std::vector<Rational> neg(vec.size());
                        for (size_t t = 0; t < vec.size(); ++t) neg[t] = -vec[t];
                        diff.add(gr, neg, Rational(1));
                    }
                    return diff;
                },
                [&](const JetVec& e) {
                    JetVec z = jet_action(J, JetGen::hr(r), e);
                    JetVec out;
                    for (const auto& [gr, vec] : z.comps) out.add(gr, vec, Rational(r[i]));
                    return out;
                });
        }
    }
    rep.details["degree_pairs"] = degs.size() * degs.size();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace toralab
