#include "toralab/weights.hpp"

#include <deque>
#include <set>

namespace toralab {

std::vector<Rational> Weight::alpha_eps() const {
    const int n = g->n();
    std::vector<Rational> eps(n);
    for (int k = 1; k < n; ++k) {
        const Rational& c = alpha_fund[k - 1];
        if (c.is_zero()) continue;
        // omega_k = e_1 + .. + e_k - (k/n)(1,..,1)
        for (int i = 0; i < n; ++i) eps[i] += c * (Rational(i < k ? 1 : 0) - Rational(k, n));
    }
    return eps;
}

Weight operator+(Weight a, const Weight& b) {
    for (size_t i = 0; i < a.alpha_fund.size(); ++i) a.alpha_fund[i] += b.alpha_fund[i];
    a.delta.axpy(Rational(1), b.delta);
    a.omega.axpy(Rational(1), b.omega);
    return a;
}

Weight operator-(Weight a, const Weight& b) {
    for (size_t i = 0; i < a.alpha_fund.size(); ++i) a.alpha_fund[i] -= b.alpha_fund[i];
    a.delta.axpy(Rational(-1), b.delta);
    a.omega.axpy(Rational(-1), b.omega);
    return a;
}

Weight operator*(const Rational& c, Weight a) {
    for (auto& x : a.alpha_fund) x *= c;
    a.delta.scale(c);
    a.omega.scale(c);
    return a;
}

bool operator==(const Weight& a, const Weight& b) {
    return a.alpha_fund == b.alpha_fund && a.delta == b.delta && a.omega == b.omega;
}

json Weight::to_json() const {
    json j;
    json al = json::array();
    for (const auto& c : alpha_fund) al.push_back(c.str());
    json de = json::array(), om = json::array();
    for (int i = 0; i < delta.arity(); ++i) de.push_back(delta[i].str());
    for (int i = 0; i < omega.arity(); ++i) om.push_back(omega[i].str());
    j["alpha"] = al;
    j["delta"] = de;
    j["omega"] = om;
    return j;
}

Weight Weight::from_json(const SimpleLieDatum& g, const json& j) {
    Weight w(g, static_cast<int>(j.at("delta").size()));
    for (size_t i = 0; i < j.at("alpha").size(); ++i)
        w.alpha_fund[i] = Rational::from_string(j.at("alpha")[i].get<std::string>());
    for (size_t i = 0; i < j.at("delta").size(); ++i)
        w.delta[static_cast<int>(i)] = Rational::from_string(j.at("delta")[i].get<std::string>());
    for (size_t i = 0; i < j.at("omega").size(); ++i)
        w.omega[static_cast<int>(i)] = Rational::from_string(j.at("omega")[i].get<std::string>());
    return w;
}

Weight RealRoot::as_weight(const SimpleLieDatum& g, int N) const {
    Weight w(g, N);
    // fundamental coordinates of the finite root: m_k = (alpha, alpha_k)
    for (int k = 0; k < g.rank(); ++k)
        w.alpha_fund[k] = Rational(SimpleLieDatum::root_pairing(alpha, g.simple_roots()[k]));
    for (int i = 0; i < N; ++i) w.delta[i] = Rational(r[i]);
    return w;
}

Rational weight_pairing(const Weight& a, const Weight& b) {
    Rational out;
    auto ea = a.alpha_eps();
    auto eb = b.alpha_eps();
    for (size_t i = 0; i < ea.size(); ++i)
        if (!ea[i].is_zero() && !eb[i].is_zero()) out += ea[i] * eb[i];
    for (int i = 0; i < a.N(); ++i) {
        if (!a.delta[i].is_zero() && !b.omega[i].is_zero()) out += a.delta[i] * b.omega[i];
        if (!a.omega[i].is_zero() && !b.delta[i].is_zero()) out += a.omega[i] * b.delta[i];
    }
    return out;
}

Rational weight_eval(const Weight& lam, const CartanElt& h) {
    Rational out;
    auto eps = lam.alpha_eps();
    for (size_t i = 0; i < eps.size(); ++i)
        if (!eps[i].is_zero() && !h.h_diag[i].is_zero()) out += eps[i] * h.h_diag[i];
    for (int i = 0; i < lam.N(); ++i) {
        if (!h.k_coeffs[i].is_zero()) out += h.k_coeffs[i] * lam.omega[i];
        if (!h.d_coeffs[i].is_zero()) out += h.d_coeffs[i] * lam.delta[i];
    }
    return out;
}

CartanElt coroot(const SimpleLieDatum& g, const RealRoot& gamma) {
    if (g.root_vector_index(gamma.alpha) < 0) throw std::invalid_argument("coroot: not a real root");
    CartanElt h;
    h.h_diag.resize(g.n());
    auto diag = g.coroot_diag(gamma.alpha);
    for (int i = 0; i < g.n(); ++i) h.h_diag[i] = Rational(diag[i]);
    const int N = gamma.r.arity();
    h.k_coeffs = RatVec(N);
    h.d_coeffs = RatVec(N);
    Rational norm2 = Rational(2) / Rational(SimpleLieDatum::root_pairing(gamma.alpha, gamma.alpha));
    for (int i = 0; i < N; ++i) h.k_coeffs[i] = norm2 * Rational(gamma.r[i]);
    return h;
}

Weight reflect(const SimpleLieDatum& g, const RealRoot& gamma, const Weight& lam) {
    Rational c = weight_eval(lam, coroot(g, gamma));
    Weight gw = gamma.as_weight(g, lam.N());
    return lam - c * gw;
}

OrbitResult weyl_orbit(const SimpleLieDatum& g, const Weight& lam,
                       const std::vector<RealRoot>& generators, int bound) {
    if (bound < 1) throw std::invalid_argument("weyl_orbit: bound must be >= 1");
    OrbitResult res;
    std::set<std::string> seen;
    std::deque<std::pair<Weight, int>> queue;
    auto key = [](const Weight& w) { return w.to_json().dump(); };
    seen.insert(key(lam));
    queue.emplace_back(lam, 0);
    std::vector<Weight> all{lam};
    while (!queue.empty()) {
        auto [w, depth] = queue.front();
        queue.pop_front();
        if (depth >= bound) {
            // unexplored frontier: report truncation if any reflection escapes
            for (const auto& gen : generators) {
                Weight img = reflect(g, gen, w);
                if (!seen.count(key(img))) {
                    res.truncated = true;
                    break;
                }
            }
            continue;
        }
        for (const auto& gen : generators) {
            Weight img = reflect(g, gen, w);
            std::string k = key(img);
            if (seen.insert(k).second) {
                all.push_back(img);
                queue.emplace_back(std::move(img), depth + 1);
            }
        }
    }
    // deterministic order
    std::sort(all.begin(), all.end(),
              [&](const Weight& a, const Weight& b) { return key(a) < key(b); });
    res.weights = std::move(all);
    return res;
}

std::string order_verdict_name(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::Less: return "less";
        case OrderVerdict::Greater: return "greater";
        case OrderVerdict::Equal: return "equal";
        case OrderVerdict::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

// mu <= lambda in the sense of the (i)/(ii)/(iii) conditions; requires the
// difference to be integral over { alpha_i, delta_m, delta_2m }.
bool leq_via_conditions(const SimpleLieDatum& g, const Weight& lam, const Weight& mu, int m,
                        bool& expressible) {
    expressible = false;
    Weight diff = lam - mu;
    for (int i = 0; i < diff.N(); ++i)
        if (!diff.omega[i].is_zero()) return false;
    for (int i = 0; i < diff.N(); ++i) {
        if (i == m - 1 || i == 2 * m - 1) continue;
        if (!diff.delta[i].is_zero()) return false;
    }
    Rational ndm = diff.delta[m - 1];
    Rational nd2m = diff.delta[2 * m - 1];
    if (!ndm.is_integer() || !nd2m.is_integer()) return false;
    // finite part over simple roots: solve C x = f with C the Cartan matrix
    const int d = g.rank();
    RatMatrix C(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            C.at(i, j) = Rational(SimpleLieDatum::root_pairing(g.simple_roots()[j], g.simple_roots()[i]));
    auto x = C.solve(diff.alpha_fund);
    if (!x) return false;
    for (const auto& c : *x)
        if (!c.is_integer()) return false;
    expressible = true;
    Rational gap = ndm - nd2m;
    if (gap.sign() > 0) return true;                      // (i)
    if (!gap.is_zero()) return false;
    if (ndm.sign() > 0) return true;                      // (ii)
    if (!ndm.is_zero()) return false;
    for (const auto& c : *x)                              // (iii): in Q^+
        if (c.sign() < 0) return false;
    return true;
}

}  // namespace

OrderVerdict order_compare(const Weight& lam, const Weight& mu, int m) {
    const SimpleLieDatum& g = *lam.g;
    if (m < 1 || 2 * m > lam.N()) throw std::invalid_argument("order_compare: index m out of range");
    if (lam == mu) return OrderVerdict::Equal;
    bool expr = false;
    if (leq_via_conditions(g, lam, mu, m, expr)) return OrderVerdict::Less;     // mu < lambda
    if (leq_via_conditions(g, mu, lam, m, expr)) return OrderVerdict::Greater;  // lambda < mu
    return OrderVerdict::Incomparable;
}

}  // namespace toralab
