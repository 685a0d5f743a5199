#include "toralab/assoc.hpp"

namespace toralab {

ModuleElem JetShiftSystem::apply(const Deg& r, const ModuleElem& v) const {
    ModuleElem out;
    out.exited = v.exited;
    for (const auto& [key, c] : v.c) out.add(key.first + r, key.second, c);
    return out;
}

namespace {

/// solve img = lambda * ref exactly; false when no scalar works
bool solve_scalar(const ModuleElem& img, const ModuleElem& ref, Rational* lambda, bool* determined) {
    *determined = false;
    Rational cand;
    for (const auto& [key, v] : ref.c) {
        if (v.is_zero()) continue;
        auto it = img.c.find(key);
        Rational num = it == img.c.end() ? Rational(0) : it->second;
        Rational l = num / v;
        if (!*determined) {
            cand = l;
            *determined = true;
        } else if (!(cand == l)) {
            return false;
        }
    }
    // img must not have support outside ref
    for (const auto& [key, v] : img.c) {
        if (v.is_zero()) continue;
        auto it = ref.c.find(key);
        if (it == ref.c.end() || it->second.is_zero()) return false;
    }
    if (*determined) *lambda = cand;
    return true;
}

class NormalizedShift : public ShiftSystem {
public:
    NormalizedShift(const WindowedModule& V, Rational lambda, Rational c, const SimpleLieDatum& g,
                    std::vector<long long> cartan_coords)
        : mod_(&V), lambda_(std::move(lambda)), c_(std::move(c)), g_(&g),
          coords_(std::move(cartan_coords)) {}

    std::vector<Deg> grades() const override { return mod_->grades(); }
    int dim(const Deg& g) const override { return mod_->dim(g); }
    bool materializable(const Deg& g) const override { return mod_->materializable(g); }
    ModuleElem apply(const Deg& r, const ModuleElem& v) const override {
        Element op = h_alpha_at(r);
        ModuleElem out = mod_->act(op, v);
        out.scale(r.is_zero() ? c_.inverse() : lambda_.inverse());
        return out;
    }

    Element h_alpha_at(const Deg& r) const {
        Element e;
        for (size_t k = 0; k < coords_.size(); ++k)
            if (coords_[k] != 0)
                e.add_g(g_->cartan_start() + static_cast<int>(k), r, Rational(coords_[k]));
        return e;
    }

private:
    const WindowedModule* mod_;
    Rational lambda_, c_;
    const SimpleLieDatum* g_;
    std::vector<long long> coords_;
};

}  // namespace

AssocResult associativize(const WindowedModule& V, const Deg& alpha_root, const Window& w) {
    const SimpleLieDatum& g = *V.algebra().g;
    if (g.root_vector_index(alpha_root) < 0)
        throw std::invalid_argument("associativize: not a root of g");
    auto coords = g.cartan_coords_of_diag(g.coroot_diag(alpha_root));

    auto h_at = [&](const Deg& r) {
        Element e;
        for (size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) e.add_g(g.cartan_start() + static_cast<int>(k), r, Rational(coords[k]));
        return e;
    };
    auto T = [&](const Deg& r, const ModuleElem& v) { return V.act(h_at(r), v); };

    auto grades = V.grades();
    auto degs = w.all();

    // c: h_alpha acts as a nonzero scalar
    Rational c;
    bool c_found = false;
    Deg zero(w.arity);
    for (const Deg& gr : grades) {
        for (int i = 0; i < V.dim(gr); ++i) {
            ModuleElem e = V.basis(gr, i);
            ModuleElem img = T(zero, e);
            Rational lam;
            bool det = false;
            if (!solve_scalar(img, e, &lam, &det))
                throw NonAssociativizable("h_alpha does not act diagonally at " + gr.str());
            if (det) {
                if (c_found && !(c == lam))
                    throw NonAssociativizable("h_alpha acts by different scalars across the window");
                c = lam;
                c_found = true;
            }
        }
    }
    if (!c_found || c.is_zero()) throw NonAssociativizable("h_alpha acts as zero; lambda(h_alpha) = 0");

    auto usable = [&](const Deg& gr, std::initializer_list<Deg> targets) {
        for (const Deg& t : targets)
            if (!V.materializable(gr + t)) return false;
        return true;
    };

    // lambda_alpha from operator products T_r T_s = lambda T_{r+s}
    Rational lambda;
    bool lambda_found = false;
    size_t lambda_bases = 0;
    for (const Deg& r : degs) {
        if (r.is_zero()) continue;
        for (const Deg& s : degs) {
            if (s.is_zero() || (r + s).is_zero()) continue;
            for (const Deg& gr : grades) {
                if (!usable(gr, {s, r + s})) continue;
                ++lambda_bases;
                for (int i = 0; i < V.dim(gr); ++i) {
                    ModuleElem e = V.basis(gr, i);
                    ModuleElem lhs = T(r, T(s, e));
                    ModuleElem ref = T(r + s, e);
                    Rational lam;
                    bool det = false;
                    if (!solve_scalar(lhs, ref, &lam, &det))
                        throw NonAssociativizable("operators fail the proportionality law at r=" + r.str() +
                                                  " s=" + s.str() + " grade=" + gr.str() +
                                                  " basis=" + std::to_string(i));
                    if (det) {
                        if (lambda_found && !(lambda == lam))
                            throw NonAssociativizable("lambda_alpha is not constant: " + lambda.str() +
                                                      " vs " + lam.str() + " at r=" + r.str() +
                                                      " s=" + s.str());
                        lambda = lam;
                        lambda_found = true;
                    }
                }
            }
        }
    }
    if (!lambda_found || lambda.is_zero())
        throw NonAssociativizable("no nonzero lambda_alpha could be extracted");
    if (lambda_bases == 0) throw NonAssociativizable("window too small to extract lambda_alpha");

    // mu_alpha from T_r T_{-r} = mu_alpha * c
    Rational mu;
    bool mu_found = false;
    for (const Deg& r : degs) {
        if (r.is_zero()) continue;
        for (const Deg& gr : grades) {
            if (!usable(gr, {-r})) continue;
            for (int i = 0; i < V.dim(gr); ++i) {
                ModuleElem e = V.basis(gr, i);
                ModuleElem lhs = T(r, T(-r, e));
                Rational m;
                bool det = false;
                if (!solve_scalar(lhs, e, &m, &det))
                    throw NonAssociativizable("T_r T_{-r} is not scalar at r=" + r.str());
                if (det) {
                    Rational mval = m / c;
                    if (mu_found && !(mu == mval))
                        throw NonAssociativizable("mu_alpha is not constant across r");
                    mu = mval;
                    mu_found = true;
                }
            }
        }
    }
    if (!mu_found) throw NonAssociativizable("mu_alpha could not be extracted");

    auto ts = std::make_shared<NormalizedShift>(V, lambda, c, g, coords);

    // verify t^r t^s = t^{r+s} across the window
    for (const Deg& r : degs)
        for (const Deg& s : degs)
            for (const Deg& gr : grades) {
                if (!usable(gr, {s, r + s})) continue;
                for (int i = 0; i < V.dim(gr); ++i) {
                    ModuleElem e = V.basis(gr, i);
                    ModuleElem lhs = ts->apply(r, ts->apply(s, e));
                    ModuleElem rhs = ts->apply(r + s, e);
                    if (!(lhs == rhs))
                        throw NonAssociativizable("t^r t^s != t^{r+s} at r=" + r.str() + " s=" + s.str() +
                                                  "; lambda^2 = " + (lambda * lambda).str() +
                                                  ", mu*c = " + (mu * c).str());
                }
            }

    AssocResult out;
    out.lambda_alpha = lambda;
    out.mu_alpha = mu;
    out.c = c;
    out.taction = ts;
    out.details["lambda_alpha"] = lambda.str();
    out.details["mu_alpha"] = mu.str();
    out.details["c"] = c.str();
    out.details["lambda_sq_equals_mu_c"] = (lambda * lambda == mu * c);
    return out;
}

}  // namespace toralab
