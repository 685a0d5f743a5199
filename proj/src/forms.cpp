#include "toralab/forms.hpp"

#include <chrono>

#include "toralab/verify_algebra.hpp"

namespace toralab {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

json form_config(const FormSpec& fs, const Window& w) {
    json j;
    j["family"] = family_name(fs.spec.family);
    j["N"] = fs.spec.N;
    if (fs.spec.g) j["g"] = "sl" + std::to_string(fs.spec.g->n());
    j["window"] = w.radius;
    return j;
}

// (D(u,r) | K(v,s)) with r+s = 0 already established.
Rational dk_value(const FormSpec& fs, const RatVec& u, const Deg& r, const RatVec& v) {
    switch (fs.spec.family) {
        case Family::TauS:
            // (D(u,r) | K(v,s)) = delta (u,v)
            return pair(u, v);
        case Family::TauH:
            // canonical symbols are lambda D(bar r, r) and mu K(bar s, s);
            // the table value delta (bar r, bar s) extends bilinearly to (u,v)
            return pair(u, v);
        case Family::TauD:
            // same shape with underline(r); table value -( underline s, underline s)
            return pair(u, v);
        default: return Rational(0);
    }
    (void)r;
}

}  // namespace

Rational form(const FormSpec& fs, const Element& a, const Element& b) {
    Element na = a, nb = b;
    normal_form(fs.spec, na);
    normal_form(fs.spec, nb);
    Rational out;
    // (X(r) | Y(s)) = delta_{r+s,0} <X,Y>
    for (const auto& ta : na.g_terms())
        for (const auto& tb : nb.g_terms()) {
            if (!(ta.deg + tb.deg).is_zero()) continue;
            long long f = fs.spec.g->form(ta.idx, tb.idx);
            if (f != 0) out += ta.c * tb.c * Rational(f);
        }
    // (D | K) and (K | D)
    for (const auto& ta : na.d_terms())
        for (const auto& tb : nb.k_terms())
            if ((ta.deg + tb.deg).is_zero()) out += dk_value(fs, ta.u, ta.deg, tb.u);
    for (const auto& ta : na.k_terms())
        for (const auto& tb : nb.d_terms())
            if ((ta.deg + tb.deg).is_zero()) out += dk_value(fs, tb.u, tb.deg, ta.u);
    // all other pairs are zero
    return out;
}

VerificationReport verify_form_symmetry(const FormSpec& fs, const Window& w) {
    VerificationReport rep;
    rep.check = "form-symmetry";
    rep.config = form_config(fs, w);
    double t0 = now_seconds();
    auto gens = window_generators(fs.spec, w);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            Rational ab = form(fs, gens[i].elem, gens[j].elem);
            Rational ba = form(fs, gens[j].elem, gens[i].elem);
            if (ab != ba) {
                json wit;
                wit["inputs"] = json::array({gens[i].label, gens[j].label});
                wit["residual"] = (ab - ba).str();
                rep.fail_with(std::move(wit));
            }
        }
    rep.details["pairs"] = gens.size() * (gens.size() + 1) / 2;
    rep.seconds = now_seconds() - t0;
    return rep;
}

VerificationReport verify_form_gradedness(const FormSpec& fs, const Window& w) {
    VerificationReport rep;
    rep.check = "form-gradedness";
    rep.config = form_config(fs, w);
    double t0 = now_seconds();
    auto gens = window_generators(fs.spec, w);
    size_t offshell = 0;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            if ((gens[i].deg + gens[j].deg).is_zero()) continue;
            ++offshell;
            Rational v = form(fs, gens[i].elem, gens[j].elem);
            if (!v.is_zero()) {
                json wit;
                wit["inputs"] = json::array({gens[i].label, gens[j].label});
                wit["residual"] = v.str();
                rep.fail_with(std::move(wit));
            }
        }
    rep.details["offshell_pairs"] = offshell;
    rep.seconds = now_seconds() - t0;
    return rep;
}

VerificationReport verify_invariance(const FormSpec& fs, const Window& w) {
    VerificationReport rep;
    rep.check = "form-invariance";
    rep.config = form_config(fs, w);
    double t0 = now_seconds();
    auto gens = window_generators(fs.spec, w);

    // index generators by degree for the zero-sum shell
    std::vector<std::vector<size_t>> by_deg(w.size());
    auto deg_index = [&](const Deg& d) -> long long {
        if (!w.contains(d)) return -1;
        long long idx = 0;
        const long long base = 2 * w.radius + 1;
        for (int i = 0; i < d.arity(); ++i) idx = idx * base + (d[i] + w.radius);
        return idx;
    };
    for (size_t i = 0; i < gens.size(); ++i) by_deg[static_cast<size_t>(deg_index(gens[i].deg))].push_back(i);

    size_t onshell = 0;
    Element xy, yz;
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = 0; j < gens.size(); ++j) {
            Deg need = -(gens[i].deg + gens[j].deg);
            long long di = deg_index(need);
            if (di < 0) continue;
            xy.clear();
            bracket_raw(fs.spec, gens[i].elem, gens[j].elem, xy);
            normal_form(fs.spec, xy);
            for (size_t k : by_deg[static_cast<size_t>(di)]) {
                yz.clear();
                bracket_raw(fs.spec, gens[j].elem, gens[k].elem, yz);
                normal_form(fs.spec, yz);
                Rational lhs = form(fs, xy, gens[k].elem);
                Rational rhs = form(fs, gens[i].elem, yz);
                ++onshell;
                if (lhs != rhs) {
                    json wit;
                    wit["inputs"] = json::array({gens[i].label, gens[j].label, gens[k].label});
                    wit["residual"] = (lhs - rhs).str();
                    rep.fail_with(std::move(wit));
                }
            }
        }
    }
    // sample of off-shell triples through the full evaluation path
    size_t sampled = 0;
    for (size_t i = 0; i < gens.size() && sampled < 200; i += 7) {
        for (size_t j = 1; j < gens.size() && sampled < 200; j += 11) {
            size_t k = (i * 31 + j * 17) % gens.size();
            if ((gens[i].deg + gens[j].deg + gens[k].deg).is_zero()) continue;
            xy.clear();
            bracket_raw(fs.spec, gens[i].elem, gens[j].elem, xy);
            normal_form(fs.spec, xy);
            yz.clear();
            bracket_raw(fs.spec, gens[j].elem, gens[k].elem, yz);
            normal_form(fs.spec, yz);
            Rational lhs = form(fs, xy, gens[k].elem);
            Rational rhs = form(fs, gens[i].elem, yz);
            ++sampled;
            if (lhs != rhs) {
                json wit;
                wit["inputs"] = json::array({gens[i].label, gens[j].label, gens[k].label});
                wit["residual"] = (lhs - rhs).str();
                rep.fail_with(std::move(wit));
            }
        }
    }
    rep.details["onshell_triples"] = onshell;
    rep.details["offshell_sampled"] = sampled;
    rep.details["note"] = "off-shell triples vanish through the graded table; gradedness is verified separately";
    rep.seconds = now_seconds() - t0;
    return rep;
}

VerificationReport verify_nondegeneracy(const FormSpec& fs, const Window& w) {
    VerificationReport rep;
    rep.check = "form-nondegeneracy";
    rep.config = form_config(fs, w);
    double t0 = now_seconds();
    for (size_t wi = 0; wi < w.size(); ++wi) {
        Deg r = w.at(wi);
        auto rows = canonical_generators(fs.spec, r);
        auto cols = canonical_generators(fs.spec, -r);
        if (rows.empty()) continue;
        RatMatrix m(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = form(fs, rows[i].elem, cols[j].elem);
        if (m.rank() != rows.size()) {
            auto rad = m.transpose().nullspace();
            json wit;
            wit["degree"] = r.str();
            wit["dimension"] = rows.size();
            wit["rank"] = m.rank();
            json rvs = json::array();
            for (const auto& v : rad) {
                std::string combo;
                for (size_t i = 0; i < v.size(); ++i) {
                    if (v[i].is_zero()) continue;
                    if (!combo.empty()) combo += " + ";
                    combo += v[i].str() + "*" + rows[i].label;
                }
                rvs.push_back(combo);
            }
            wit["radical"] = rvs;
            rep.fail_with(std::move(wit));
        }
    }
    rep.details["degrees"] = w.size();
    rep.seconds = now_seconds() - t0;
    return rep;
}

VerificationReport verify_ea_axioms(const FormSpec& fs, const Window& w, int nilpotency_bound) {
    VerificationReport rep;
    rep.check = "ea-axioms";
    rep.config = form_config(fs, w);
    double t0 = now_seconds();
    const AlgebraSpec& spec = fs.spec;
    auto gens = window_generators(spec, w);

    // Cartan basis of h~ = h + Z_0 + D
    std::vector<Generator> cartan;
    for (auto& g : canonical_generators(spec, Deg(spec.N))) {
        auto syms = g.elem.symbols();
        bool diag = true;
        if (syms.size() == 1 && syms[0].first.kind == Kind::G && spec.g->is_root_vector(syms[0].first.gidx))
            diag = false;  // root vectors of g are not in h~
        if (diag) cartan.push_back(std::move(g));
    }

    // EA2 (restricted): h~ is abelian and acts diagonally on canonical generators
    auto lead_coeff = [](const Element& e) -> std::pair<bool, Rational> {
        if (!e.g_terms().empty()) return {true, e.g_terms()[0].c};
        for (const auto& t : e.k_terms())
            for (int i = 0; i < t.u.arity(); ++i)
                if (!t.u[i].is_zero()) return {true, t.u[i]};
        for (const auto& t : e.d_terms())
            for (int i = 0; i < t.u.arity(); ++i)
                if (!t.u[i].is_zero()) return {true, t.u[i]};
        return {false, Rational(0)};
    };
    size_t diag_checked = 0;
    for (size_t i = 0; i < cartan.size(); ++i)
        for (size_t j = i; j < cartan.size(); ++j) {
            Element br = bracket(spec, cartan[i].elem, cartan[j].elem);
            if (!br.is_zero()) {
                json wit;
                wit["axiom"] = "EA2";
                wit["inputs"] = json::array({cartan[i].label, cartan[j].label});
                wit["residual"] = br.str();
                rep.fail_with(std::move(wit));
            }
        }
    for (const auto& H : cartan) {
        for (const auto& gen : gens) {
            Element br = bracket(spec, H.elem, gen.elem);
            auto [has_b, lead_b] = lead_coeff(br);
            Rational lambda;
            if (has_b) {
                auto [has_g, lead_g] = lead_coeff(gen.elem);
                if (!has_g) continue;
                lambda = lead_b / lead_g;
            }
            Element residual = br;
            residual.axpy(-lambda, gen.elem);
            ++diag_checked;
            if (!residual.is_zero()) {
                json wit;
                wit["axiom"] = "EA2";
                wit["inputs"] = json::array({H.label, gen.label});
                wit["detail"] = "not an eigenvector of the Cartan element";
                rep.fail_with(std::move(wit));
            }
        }
    }

    // EA3 spot check: ad X_alpha(r) nilpotent on windowed generators
    size_t nilp_checked = 0;
    for (const auto& [alpha, xi] : spec.g->roots()) {
        (void)alpha;
        for (size_t wi = 0; wi < w.size(); wi += (w.size() > 9 ? 3 : 1)) {
            Element x = element_of(spec, BasisSymbol::G(xi, w.at(wi)));
            for (size_t gj = 0; gj < gens.size(); gj += (gens.size() > 60 ? 7 : 1)) {
                Element cur = gens[gj].elem;
                bool vanished = false;
                for (int it = 0; it < nilpotency_bound; ++it) {
                    Element nxt;
                    bracket_raw(spec, x, cur, nxt);
                    normal_form(spec, nxt);
                    cur = std::move(nxt);
                    if (cur.is_zero()) {
                        vanished = true;
                        break;
                    }
                }
                ++nilp_checked;
                if (!vanished) {
                    json wit;
                    wit["axiom"] = "EA3";
                    wit["inputs"] = json::array({spec.g->basis_name(xi) + w.at(wi).str(), gens[gj].label});
                    wit["detail"] = "ad power did not vanish within bound";
                    rep.fail_with(std::move(wit));
                }
            }
        }
    }

    // EA5(b): every isotropic delta_r admits alpha with sigma + alpha in R.
    // Witness: X_beta(r) for the highest root beta; confirm the degree
    // derivations see it at delta_r + beta, i.e. [d_i, X_beta(r)] = r_i X_beta(r).
    json ea5 = json::array();
    int bi = spec.g->root_vector_index(spec.g->highest_root());
    for (size_t wi = 0; wi < w.size(); ++wi) {
        Deg r = w.at(wi);
        Element x = element_of(spec, BasisSymbol::G(bi, r));
        bool ok = !x.is_zero();
        for (int i = 0; ok && i < spec.N; ++i) {
            Element di = element_of(spec, BasisSymbol::D(RatVec::unit(spec.N, i), Deg(spec.N)));
            Element br = bracket(spec, di, x);
            Element want = x;
            want.axpy(Rational(r[i] - 1), x);  // want = r_i * x
            br.axpy(Rational(-1), want);
            ok = br.is_zero();
        }
        if (!ok) {
            json wit;
            wit["axiom"] = "EA5b";
            wit["sigma"] = "delta" + r.str();
            rep.fail_with(std::move(wit));
        } else if (ea5.size() < 3) {
            ea5.push_back("sigma=delta" + r.str() + ": sigma + beta in R, witness X_beta" + r.str());
        }
    }

    rep.details["ea2_diagonal_checks"] = diag_checked;
    rep.details["ea3_nilpotency_checks"] = nilp_checked;
    rep.details["ea4"] = "satisfied by construction: roots lie in the lattice spanned by Delta and delta_i";
    rep.details["ea5_witnesses"] = ea5;
    rep.details["scope"] = "EA3 windowed spot check and EA4 structural observation only";
    if (rep.status == "pass") rep.status = "partial";
    rep.seconds = now_seconds() - t0;
    return rep;
}

}  // namespace toralab
