#include "toralab/modules.hpp"

#include <set>
#include <sstream>

#include "toralab/linalg.hpp"
#include "toralab/verify_algebra.hpp"

namespace toralab {

void ModuleElem::axpy(const Rational& k, const ModuleElem& o) {
    if (k.is_zero()) return;
    for (const auto& [key, v] : o.c) c[key] += k * v;
    exited = exited || o.exited;
}

void ModuleElem::scale(const Rational& k) {
    for (auto& [key, v] : c) {
        (void)key;
        v *= k;
    }
}

bool ModuleElem::is_zero() const {
    for (const auto& [key, v] : c) {
        (void)key;
        if (!v.is_zero()) return false;
    }
    return true;
}

void ModuleElem::compact() {
    std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
}

bool operator==(const ModuleElem& a, const ModuleElem& b) {
    ModuleElem d = a;
    d.axpy(Rational(-1), b);
    return d.is_zero();
}

std::string ModuleElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : c) {
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << v.str() << "*e[" << key.first.str() << "," << key.second << "]";
    }
    if (first) os << "0";
    if (exited) os << " (+out-of-window components)";
    return os.str();
}

ModuleElem WindowedModule::act(const Element& x, const ModuleElem& v) const {
    ModuleElem out;
    out.exited = v.exited;
    for (const auto& [key, coeff] : v.c) {
        if (coeff.is_zero()) continue;
        const auto& [grade, idx] = key;
        ModuleElem part;
        for (const auto& t : x.g_terms()) act_g_term(t.idx, t.deg, t.c, grade, idx, part);
        for (const auto& t : x.k_terms()) act_k_term(t.deg, t.u, grade, idx, part);
        for (const auto& t : x.d_terms()) act_d_term(t.deg, t.u, grade, idx, part);
        out.axpy(coeff, part);
    }
    out.compact();
    return out;
}

ModuleElem WindowedModule::basis(const Deg& grade, int i) const {
    ModuleElem v;
    v.add(grade, i, Rational(1));
    return v;
}

json WindowedModule::manifest() const {
    json j;
    j["kind"] = kind();
    j["parameters"] = parameters();
    json dims = json::object();
    for (const Deg& g : grades()) dims[g.str()] = dim(g);
    j["graded_dims"] = dims;
    return j;
}

std::string WindowedModule::action_csv(const BasisSymbol& s) const {
    Element x;
    x.add_symbol(s, Rational(1));
    normal_form(algebra(), x);
    std::ostringstream os;
    os << "source_grade,source_index,target_grade,target_index,coefficient\n";
    for (const Deg& g : grades()) {
        for (int i = 0; i < dim(g); ++i) {
            ModuleElem img = act(x, basis(g, i));
            for (const auto& [key, v] : img.c) {
                if (v.is_zero()) continue;
                os << g.str() << "," << i << "," << key.first.str() << "," << key.second << ","
                   << v.str() << "\n";
            }
        }
    }
    return os.str();
}

Weight weight_from_eps(const SimpleLieDatum& g, const std::vector<Rational>& eps, const RatVec& delta,
                       const RatVec& omega) {
    Weight w(g, delta.arity());
    for (int k = 0; k + 1 < g.n(); ++k) w.alpha_fund[k] = eps[k] - eps[k + 1];
    w.delta = delta;
    w.omega = omega;
    return w;
}

VerificationReport verify_representation(const WindowedModule& V, const Window& aw) {
    VerificationReport rep;
    rep.check = "representation";
    rep.config["module"] = V.kind();
    rep.config["family"] = family_name(V.algebra().family);
    rep.config["window"] = aw.radius;
    auto t0 = std::chrono::steady_clock::now();

    auto gens = window_generators(V.algebra(), aw);
    auto grades = V.grades();
    size_t checked = 0;
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = a; b < gens.size(); ++b) {
            Element br = bracket(V.algebra(), gens[a].elem, gens[b].elem);
            for (const Deg& g : grades) {
                for (int i = 0; i < V.dim(g); ++i) {
                    ModuleElem e = V.basis(g, i);
                    ModuleElem lhs = V.act(br, e);
                    ModuleElem xy = V.act(gens[a].elem, V.act(gens[b].elem, e));
                    ModuleElem yx = V.act(gens[b].elem, V.act(gens[a].elem, e));
                    xy.axpy(Rational(-1), yx);
                    ++checked;
                    if (!(lhs == xy)) {
                        json wit;
                        wit["inputs"] = json::array({gens[a].label, gens[b].label});
                        wit["grade"] = g.str();
                        wit["basis"] = i;
                        ModuleElem diff = lhs;
                        diff.axpy(Rational(-1), xy);
                        wit["residual"] = diff.str();
                        rep.fail_with(std::move(wit));
                        if (rep.witnesses.size() >= 5) goto done;
                    }
                }
            }
        }
    }
done:
    rep.details["checks"] = checked;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify_central_acts_trivially(const WindowedModule& V, const Window& w) {
    VerificationReport rep;
    rep.check = "central-quotient-trivial";
    rep.config["module"] = V.kind();
    rep.config["window"] = w.radius;
    auto grades = V.grades();
    for (size_t wi = 0; wi < w.size(); ++wi) {
        Deg r = w.at(wi);
        for (const auto& gen : canonical_generators(V.algebra(), r)) {
            if (gen.elem.k_terms().empty() || !gen.elem.g_terms().empty() || !gen.elem.d_terms().empty())
                continue;  // central generators only
            for (const Deg& g : grades)
                for (int i = 0; i < V.dim(g); ++i) {
                    ModuleElem img = V.act(gen.elem, V.basis(g, i));
                    if (!img.is_zero()) {
                        json wit;
                        wit["input"] = gen.label;
                        wit["grade"] = g.str();
                        wit["basis"] = i;
                        wit["image"] = img.str();
                        rep.fail_with(std::move(wit));
                    }
                }
        }
    }
    return rep;
}

GradedSubspace highest_weight_space(const WindowedModule& V, TriTag tag, const Window& genw) {
    GradedSubspace out;
    // positive generators of the decomposition within the generator window
    std::vector<Element> pos;
    for (const auto& gen : window_generators(V.algebra(), genw)) {
        auto syms = gen.elem.symbols();
        TriPart p = triangular_part(V.algebra(), tag, syms[0].first);
        if (p == TriPart::P || p == TriPart::PP) pos.push_back(gen.elem);
    }
    for (const Deg& g : V.grades()) {
        int d = V.dim(g);
        if (d == 0) continue;
        // stacked constraint rows, one per (positive generator, target slot)
        std::vector<std::map<size_t, Rational>> cols_per_basis(d);
        size_t nrows = 0;
        for (size_t xi = 0; xi < pos.size(); ++xi) {
            std::map<std::pair<Deg, int>, size_t> rows;
            for (int i = 0; i < d; ++i) {
                ModuleElem img = V.act(pos[xi], V.basis(g, i));
                if (img.exited) throw std::logic_error("highest_weight_space: action left the window");
                for (const auto& [key, v] : img.c) {
                    if (v.is_zero()) continue;
                    auto [it, fresh] = rows.try_emplace(key, nrows + rows.size());
                    (void)fresh;
                    cols_per_basis[i][it->second] += v;
                }
            }
            nrows += rows.size();
        }
        RatMatrix m(nrows, d);
        for (int i = 0; i < d; ++i)
            for (const auto& [row, v] : cols_per_basis[i]) m.at(row, i) = v;
        auto kernel = m.nullspace();
        if (!kernel.empty()) out.basis[g] = std::move(kernel);
    }
    return out;
}

VerificationReport verify_integrability(const WindowedModule& V, const Window& w, int bound) {
    if (bound < 1) throw std::invalid_argument("verify_integrability: bound >= 1");
    VerificationReport rep;
    rep.check = "integrability";
    rep.config["module"] = V.kind();
    rep.config["window"] = w.radius;
    rep.config["bound"] = bound;
    auto t0 = std::chrono::steady_clock::now();
    const AlgebraSpec& spec = V.algebra();
    const SimpleLieDatum& g = *spec.g;

    size_t nilpotent = 0, inconclusive = 0;
    auto in_window = [&](const ModuleElem& v) {
        for (const auto& [key, c] : v.c)
            if (!c.is_zero() && !w.contains(key.first)) return false;
        return true;
    };

    for (const auto& [alpha, xi] : g.roots()) {
        (void)alpha;
        for (size_t wi = 0; wi < w.size(); ++wi) {
            Element x = element_of(spec, BasisSymbol::G(xi, w.at(wi)));
            for (const Deg& gr : V.grades()) {
                for (int i = 0; i < V.dim(gr); ++i) {
                    ModuleElem v = V.basis(gr, i);
                    bool done = false;
                    for (int k = 0; k < bound && !done; ++k) {
                        v = V.act(x, v);
                        if (v.is_zero()) {
                            ++nilpotent;
                            done = true;
                        } else if (!in_window(v) || v.exited) {
                            ++inconclusive;
                            done = true;
                        }
                    }
                    if (!done) {
                        json wit;
                        wit["generator"] = g.basis_name(xi) + w.at(wi).str();
                        wit["grade"] = gr.str();
                        wit["basis"] = i;
                        wit["detail"] = "power stayed nonzero inside the window up to the bound";
                        rep.fail_with(std::move(wit));
                    }
                }
            }
        }
    }

    // lambda(gamma^vee) in Z over window weights
    size_t weight_checks = 0;
    std::map<std::string, int> mult;
    std::vector<std::pair<Deg, Weight>> wts;
    for (const Deg& gr : V.grades()) {
        for (int i = 0; i < V.dim(gr); ++i) {
            Weight lam = V.weight_of(gr, i);
            mult[lam.to_json().dump()] += 1;
            wts.emplace_back(gr, lam);
        }
    }
    for (const auto& [gr, lam] : wts) {
        (void)gr;
        for (const auto& [alpha, xi] : g.roots()) {
            (void)xi;
            for (size_t wi = 0; wi < w.size(); ++wi) {
                Rational v = weight_eval(lam, coroot(g, RealRoot{alpha, w.at(wi)}));
                ++weight_checks;
                if (!v.is_integer()) {
                    json wit;
                    wit["weight"] = lam.to_json();
                    wit["coroot_value"] = v.str();
                    rep.fail_with(std::move(wit));
                }
            }
        }
    }

    // dim V_lambda = dim V_{r_gamma lambda} for window-representable reflections
    std::set<std::string> materialized;
    for (const Deg& gr : V.grades()) materialized.insert(gr.str());
    size_t refl_checks = 0, refl_skipped = 0;
    for (const auto& [gr, lam] : wts) {
        for (const auto& [alpha, xi] : g.roots()) {
            (void)xi;
            for (size_t wi = 0; wi < w.size(); ++wi) {
                RealRoot gamma{alpha, w.at(wi)};
                Rational c = weight_eval(lam, coroot(g, gamma));
                if (!c.is_integer() || !c.is_small()) continue;  // witnessed by the integrality check
                Weight mu = reflect(g, gamma, lam);
                // the reflected weight sits at grade gr - c * r
                Deg target = gr;
                bool ok_shift = true;
                try {
                    for (int t = 0; t < gr.arity(); ++t)
                        target.set(t, gr[t] - c.num_small() * gamma.r[t]);
                } catch (const std::overflow_error&) {
                    ok_shift = false;
                }
                if (!ok_shift || !materialized.count(target.str())) {
                    ++refl_skipped;
                    continue;
                }
                ++refl_checks;
                auto it = mult.find(mu.to_json().dump());
                int target_mult = it == mult.end() ? 0 : it->second;
                if (target_mult != mult[lam.to_json().dump()]) {
                    json wit;
                    wit["weight"] = lam.to_json();
                    wit["reflected"] = mu.to_json();
                    wit["mult"] = mult[lam.to_json().dump()];
                    wit["reflected_mult"] = target_mult;
                    rep.fail_with(std::move(wit));
                }
            }
        }
    }

    rep.details["nilpotency_confirmed"] = nilpotent;
    rep.details["nilpotency_inconclusive"] = inconclusive;
    rep.details["weight_integrality_checks"] = weight_checks;
    rep.details["reflection_multiplicity_checks"] = refl_checks;
    rep.details["reflection_skipped_outside_window"] = refl_skipped;
    if (rep.status == "pass" && inconclusive > 0) rep.status = "inconclusive";
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SubspaceModule::SubspaceModule(const WindowedModule& parent, GradedSubspace sub)
    : parent_(&parent), sub_(std::move(sub)) {}

std::vector<Deg> SubspaceModule::grades() const {
    std::vector<Deg> out;
    for (const auto& [g, b] : sub_.basis) {
        (void)b;
        out.push_back(g);
    }
    return out;
}

Weight SubspaceModule::weight_of(const Deg& g, int i) const {
    const auto& vec = sub_.basis.at(g)[i];
    int lead = -1;
    for (size_t k = 0; k < vec.size(); ++k)
        if (!vec[k].is_zero()) { lead = static_cast<int>(k); break; }
    if (lead < 0) throw std::logic_error("SubspaceModule: zero basis vector");
    Weight w = parent_->weight_of(g, lead);
    for (size_t k = lead + 1; k < vec.size(); ++k)
        if (!vec[k].is_zero() && !(parent_->weight_of(g, static_cast<int>(k)) == w))
            throw std::logic_error("SubspaceModule: mixed-weight basis vector");
    return w;
}

json SubspaceModule::parameters() const {
    json j;
    j["parent"] = parent_->kind();
    j["total_dim"] = sub_.total();
    return j;
}

ModuleElem SubspaceModule::embed(const Deg& grade, int i) const {
    const auto& vec = sub_.basis.at(grade)[i];
    ModuleElem out;
    for (size_t k = 0; k < vec.size(); ++k) out.add(grade, static_cast<int>(k), vec[k]);
    return out;
}

void SubspaceModule::act_parent(const ModuleElem& img, ModuleElem& out) const {
    // decompose the parent image grade by grade over the subspace bases
    std::map<Deg, std::map<int, Rational>> by_grade;
    for (const auto& [key, v] : img.c) {
        if (!v.is_zero()) by_grade[key.first][key.second] += v;
    }
    for (const auto& [g, comp] : by_grade) {
        auto it = sub_.basis.find(g);
        if (it == sub_.basis.end())
            throw InadmissibleElement("SubspaceModule: action leaves the subspace at grade " + g.str());
        const auto& bas = it->second;
        size_t pdim = static_cast<size_t>(parent_->dim(g));
        RatMatrix m(pdim, bas.size());
        for (size_t b = 0; b < bas.size(); ++b)
            for (size_t r = 0; r < pdim; ++r) m.at(r, b) = bas[b][r];
        std::vector<Rational> rhs(pdim);
        for (const auto& [idx, v] : comp) rhs[static_cast<size_t>(idx)] = v;
        auto sol = m.solve(rhs);
        if (!sol) throw InadmissibleElement("SubspaceModule: action leaves the subspace at grade " + g.str());
        for (size_t b = 0; b < sol->size(); ++b) out.add(g, static_cast<int>(b), (*sol)[b]);
    }
    out.exited = out.exited || img.exited;
}

void SubspaceModule::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                                ModuleElem& out) const {
    ModuleElem img;
    ModuleElem e = embed(grade, i);
    for (const auto& [key, v] : e.c) parent_->act_g_term(gidx, r, c * v, key.first, key.second, img);
    act_parent(img, out);
}

void SubspaceModule::act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                                ModuleElem& out) const {
    ModuleElem img;
    ModuleElem e = embed(grade, i);
    for (const auto& [key, v] : e.c) {
        RatVec su = u;
        su.scale(v);
        parent_->act_k_term(r, su, key.first, key.second, img);
    }
    act_parent(img, out);
}

void SubspaceModule::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                                ModuleElem& out) const {
    ModuleElem img;
    ModuleElem e = embed(grade, i);
    for (const auto& [key, v] : e.c) {
        RatVec su = u;
        su.scale(v);
        parent_->act_d_term(r, su, key.first, key.second, img);
    }
    act_parent(img, out);
}

}  // namespace toralab
