#include "toralab/replab.hpp"

namespace toralab {

Rational rat_pow(const Rational& a, long long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? a : a.inverse();
    long long n = e > 0 ? e : -e;
    Rational out(1);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

EvaluationModule::EvaluationModule(const SimpleLieDatum& g, int N, std::vector<RatVec> points,
                                   std::vector<std::vector<long long>> hw_fund, RatVec shift, Window win)
    : spec_(Family::Toroidal, N, &g), points_(std::move(points)), shift_(shift), win_(win) {
    if (points_.empty()) throw std::invalid_argument("EvaluationModule: need at least one point");
    if (points_.size() != hw_fund.size())
        throw std::invalid_argument("EvaluationModule: one highest weight per point");
    for (const auto& a : points_) {
        if (a.arity() != N) throw ArityError("EvaluationModule: point arity mismatch");
        for (int j = 0; j < N; ++j)
            if (a[j].is_zero()) throw std::invalid_argument("EvaluationModule: zero evaluation point");
    }
    for (size_t i = 0; i < points_.size(); ++i)
        for (size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw std::invalid_argument("EvaluationModule: evaluation points must be distinct");
    dim_ = 1;
    for (const auto& hw : hw_fund) {
        mods_.push_back(irrep(g, hw));
        dim_ *= mods_.back().dim;
    }
    strides_.assign(mods_.size(), 1);
    for (int i = static_cast<int>(mods_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * mods_[i + 1].dim;
}

Rational EvaluationModule::point_power(int i, const Deg& r) const {
    Rational out(1);
    for (int j = 0; j < r.arity(); ++j)
        if (r[j] != 0) out *= rat_pow(points_[i][j], r[j]);
    return out;
}

Weight EvaluationModule::weight_of(const Deg& grade, int idx) const {
    const SimpleLieDatum& g = *spec_.g;
    std::vector<Rational> eps(g.n());
    int rest = idx;
    for (size_t f = 0; f < mods_.size(); ++f) {
        int comp = rest / strides_[f];
        rest %= strides_[f];
        const Deg& w = mods_[f].weights[comp];
        for (int t = 0; t < g.n(); ++t) eps[t] += Rational(w[t]);
    }
    RatVec delta(spec_.N), omega(spec_.N);
    for (int t = 0; t < spec_.N; ++t) delta[t] = Rational(grade[t]) + shift_[t];
    return weight_from_eps(g, eps, delta, omega);
}

json EvaluationModule::parameters() const {
    json j;
    j["g"] = "sl" + std::to_string(spec_.g->n());
    j["N"] = spec_.N;
    json pts = json::array(), hws = json::array();
    for (const auto& p : points_) pts.push_back(p.str());
    for (const auto& m : mods_) {
        json hw = json::array();
        for (long long c : m.hw_fund) hw.push_back(c);
        hws.push_back(hw);
    }
    j["points"] = pts;
    j["highest_weights"] = hws;
    j["dim"] = dim_;
    return j;
}

void EvaluationModule::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int idx,
                                  ModuleElem& out) const {
    Deg target = grade + r;
    std::vector<int> comps(mods_.size());
    int rest = idx;
    for (size_t f = 0; f < mods_.size(); ++f) {
        comps[f] = rest / strides_[f];
        rest %= strides_[f];
    }
    for (size_t f = 0; f < mods_.size(); ++f) {
        Rational scale = c * point_power(static_cast<int>(f), r);
        const RatMatrix& act = mods_[f].action[gidx];
        for (int row = 0; row < mods_[f].dim; ++row) {
            const Rational& entry = act.at(row, comps[f]);
            if (entry.is_zero()) continue;
            int tidx = idx + (row - comps[f]) * strides_[f];
            out.add(target, tidx, scale * entry);
        }
    }
}

void EvaluationModule::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int idx,
                                  ModuleElem& out) const {
    if (!r.is_zero())
        throw InadmissibleElement("EvaluationModule: graded derivations are outside the algebra");
    Rational scale;
    for (int j = 0; j < spec_.N; ++j)
        if (!u[j].is_zero()) scale += u[j] * (Rational(grade[j]) + shift_[j]);
    out.add(grade, idx, scale);
}

json EvaluationModule::irreducibility_certificate(const Window& w) const {
    const SimpleLieDatum& g = *spec_.g;
    json j;
    bool ok = true;
    for (size_t wi = 0; wi < w.size() && ok; ++wi) {
        Deg r = w.at(wi);
        bool nonzero_somewhere = false;
        for (int k = 0; k + 1 < g.n() && !nonzero_somewhere; ++k) {
            std::vector<long long> diag(g.n(), 0);
            diag[k] = 1;
            diag[k + 1] = -1;
            Rational s;
            for (size_t f = 0; f < mods_.size(); ++f)
                s += Rational(mods_[f].weight_eval_diag(mods_[f].hw_index, diag)) *
                     point_power(static_cast<int>(f), r);
            nonzero_somewhere = !s.is_zero();
        }
        if (!nonzero_somewhere) {
            ok = false;
            j["failing_degree"] = r.str();
        }
    }
    j["status"] = ok ? "verified on window" : "not satisfied on window";
    j["window"] = w.radius;
    return j;
}

RealizationModule::RealizationModule(const SimpleLieDatum& g, FiniteModule vlam, JetModule jet, Window win)
    : spec_(Family::TauH, jet.N(), &g), vlam_(std::move(vlam)), jet_(std::move(jet)), win_(win) {
    if (win.arity != jet_.N()) throw ArityError("RealizationModule: window arity mismatch");
}

Weight RealizationModule::weight_of(const Deg& grade, int i) const {
    const SimpleLieDatum& g = *spec_.g;
    int a = i / jet_.fiber.dim;
    std::vector<Rational> eps(g.n());
    for (int t = 0; t < g.n(); ++t) eps[t] = Rational(vlam_.weights[a][t]);
    RatVec delta(spec_.N), omega(spec_.N);
    for (int t = 0; t < spec_.N; ++t) delta[t] = Rational(grade[t]) + jet_.u[t];
    return weight_from_eps(g, eps, delta, omega);
}

json RealizationModule::parameters() const {
    json j;
    j["g"] = "sl" + std::to_string(spec_.g->n());
    j["N"] = spec_.N;
    json hw = json::array();
    for (long long c : vlam_.hw_fund) hw.push_back(c);
    j["highest_weight"] = hw;
    j["fiber"] = jet_.fiber.name;
    j["fiber_dim"] = jet_.fiber.dim;
    j["profile"] = jet_.profile.to_json();
    return j;
}

void RealizationModule::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                                   ModuleElem& out) const {
    int a = i / jet_.fiber.dim;
    int b = i % jet_.fiber.dim;
    Deg target = grade + r;
    const RatMatrix& act = vlam_.action[gidx];
    for (int row = 0; row < vlam_.dim; ++row) {
        const Rational& entry = act.at(row, a);
        if (entry.is_zero()) continue;
        out.add(target, index_of(row, b), c * entry);
    }
}

void RealizationModule::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                                   ModuleElem& out) const {
    int a = i / jet_.fiber.dim;
    int b = i % jet_.fiber.dim;
    if (r.is_zero()) {
        Rational scale;
        for (int j = 0; j < spec_.N; ++j)
            if (!u[j].is_zero()) scale += u[j] * jet_.d_scalar(j, grade);
        out.add(grade, i, scale);
        return;
    }
    // u = lambda * bar(r): the Hamiltonian line
    Deg br = bar(r);
    Rational lam = pair(u, br) / Rational(ipair(br, br));
    if (lam.is_zero()) return;
    Deg target = grade + r;
    Rational scalar = lam * jet_.h_scalar(r, grade);
    if (!scalar.is_zero()) out.add(target, i, scalar);
    RatMatrix sig = jet_.sigma_op(r);
    for (int row = 0; row < jet_.fiber.dim; ++row) {
        const Rational& entry = sig.at(row, b);
        if (entry.is_zero()) continue;
        out.add(target, index_of(a, row), lam * entry);
    }
}

RealizationModule realization_module(const SimpleLieDatum& g, const std::vector<long long>& hw_fund,
                                     SpRep fiber, RatVec u, RatVec w, const SigmaProfile& profile,
                                     const Window& win) {
    int m = fiber.m;
    JetModule jet = make_jet(m, std::move(fiber), std::move(u), std::move(w), profile);
    return RealizationModule(g, irrep(g, hw_fund), std::move(jet), win);
}

}  // namespace toralab
