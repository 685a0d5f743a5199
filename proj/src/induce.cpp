#include "toralab/induce.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "toralab/linalg.hpp"
#include "toralab/verify_algebra.hpp"

namespace toralab {

TrivialTop::TrivialTop(const AlgebraSpec& spec, Weight lam) : spec_(spec), lam_(std::move(lam)) {
    if (lam_.N() != spec.N) throw ArityError("TrivialTop: weight arity mismatch");
}

json TrivialTop::parameters() const {
    json j;
    j["weight"] = lam_.to_json();
    return j;
}

void TrivialTop::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                            ModuleElem& out) const {
    (void)grade;
    if (spec_.g->is_root_vector(gidx))
        throw std::logic_error("TrivialTop: root vectors are not zero-part symbols");
    if (!r.is_zero()) return;  // graded Cartan loops act as zero on the top line
    // Cartan basis element: evaluate the finite part of the weight
    std::vector<long long> diag(spec_.g->n(), 0);
    int k = gidx - spec_.g->cartan_start();
    diag[k] = 1;
    diag[k + 1] = -1;
    auto eps = lam_.alpha_eps();
    Rational v;
    for (int t = 0; t < spec_.g->n(); ++t)
        if (diag[t] != 0 && !eps[t].is_zero()) v += Rational(diag[t]) * eps[t];
    out.add(Deg(spec_.N), i, c * v);
}

void TrivialTop::act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                            ModuleElem& out) const {
    (void)grade;
    if (!r.is_zero()) return;
    Rational v;
    for (int t = 0; t < spec_.N; ++t)
        if (!u[t].is_zero()) v += u[t] * lam_.omega[t];
    out.add(Deg(spec_.N), i, v);
}

void TrivialTop::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                            ModuleElem& out) const {
    (void)grade;
    if (!r.is_zero()) return;
    Rational v;
    for (int t = 0; t < spec_.N; ++t)
        if (!u[t].is_zero()) v += u[t] * lam_.delta[t];
    out.add(Deg(spec_.N), i, v);
}

namespace {

// height of the positive root -alpha for a negative sl_n root alpha
int neg_root_height(const Deg& alpha) {
    int plus = -1, minus = -1;
    for (int i = 0; i < alpha.arity(); ++i) {
        if (alpha[i] == 1) plus = i;
        if (alpha[i] == -1) minus = i;
    }
    return plus - minus;  // alpha = eps_plus - eps_minus with plus > minus
}

std::string key_string(const InducedModule::BasisKey& k) {
    std::ostringstream os;
    for (int g : k.mon) os << g << ".";
    os << "|" << k.top_grade.str() << "|" << k.top_idx;
    return os.str();
}

}  // namespace

InducedModule::InducedModule(const AlgebraSpec& spec, TriTag tag, const WindowedModule& top, int depth,
                             const Window& genw)
    : spec_(spec), tag_(tag), top_(&top), depth_(depth), genw_(genw) {
    if (depth < 1) throw std::invalid_argument("InducedModule: depth >= 1 required");
    const SimpleLieDatum& g = *spec.g;
    // negative generators of the decomposition, window order
    for (auto& gen : window_generators(spec, genw)) {
        auto syms = gen.elem.symbols();
        TriPart p = triangular_part(spec, tag, syms[0].first);
        if (p != TriPart::M && p != TriPart::MM) continue;
        const BasisSymbol& s = syms[0].first;
        int w = 0;
        if (tag == TriTag::LevelZero) {
            w = neg_root_height(g.basis_root(s.gidx));
        } else {
            const int m = spec.N / 2;
            long long rm = s.deg[m - 1], r2m = s.deg[2 * m - 1];
            if (rm < r2m) {
                w = static_cast<int>(r2m - rm);
            } else if (rm < 0) {
                w = static_cast<int>(-rm);
            } else {
                w = neg_root_height(g.basis_root(s.gidx));
            }
        }
        Weight shift(g, spec.N);
        if (s.kind == Kind::G) {
            const Deg& alpha = g.basis_root(s.gidx);
            for (int k = 0; k < g.rank(); ++k)
                shift.alpha_fund[k] = Rational(SimpleLieDatum::root_pairing(alpha, g.simple_roots()[k]));
        }
        for (int t = 0; t < spec.N; ++t) shift.delta[t] = Rational(s.deg[t]);
        gens_.push_back(std::move(gen));
        gen_depth_.push_back(w);
        gen_weight_.push_back(std::move(shift));
    }

    // enumerate monomials up to the depth cap, times the top basis
    std::vector<std::vector<int>> mons;
    std::vector<int> cur;
    std::function<void(int, int)> build = [&](int start, int used) {
        mons.push_back(cur);
        for (int i = start; i < static_cast<int>(gens_.size()); ++i) {
            if (used + gen_depth_[i] > depth_) continue;
            cur.push_back(i);
            build(i, used + gen_depth_[i]);
            cur.pop_back();
        }
    };
    build(0, 0);

    for (const auto& mon : mons) {
        Deg shift(spec.N);
        for (int gi : mon) shift = shift + gens_[gi].deg;
        for (const Deg& tg : top_->grades()) {
            for (int ti = 0; ti < top_->dim(tg); ++ti) {
                BasisKey k{mon, tg, ti};
                Deg grade = tg + shift;
                index_[key_string(k)] = {grade, static_cast<int>(basis_[grade].size())};
                basis_[grade].push_back(std::move(k));
            }
        }
    }
}

int InducedModule::depth_of(const std::vector<int>& mon) const {
    int d = 0;
    for (int gi : mon) d += gen_depth_[gi];
    return d;
}

std::vector<Deg> InducedModule::grades() const {
    std::vector<Deg> out;
    for (const auto& [g, b] : basis_) {
        (void)b;
        out.push_back(g);
    }
    return out;
}

bool InducedModule::materializable(const Deg& g) const { return basis_.count(g) > 0; }

int InducedModule::dim(const Deg& g) const {
    auto it = basis_.find(g);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

Weight InducedModule::weight_of(const Deg& g, int i) const {
    const BasisKey& k = basis_.at(g)[i];
    Weight w = top_->weight_of(k.top_grade, k.top_idx);
    for (int gi : k.mon) w = w + gen_weight_[gi];
    return w;
}

json InducedModule::parameters() const {
    json j;
    j["decomposition"] = tag_ == TriTag::N2 ? "N2" : (tag_ == TriTag::GeneralN ? "generalN" : "levelzero");
    j["depth"] = depth_;
    j["generator_window"] = genw_.radius;
    j["negative_generators"] = gens_.size();
    j["top"] = top_->kind();
    return j;
}

const InducedModule::BasisKey& InducedModule::key_of(const Deg& grade, int i) const {
    return basis_.at(grade)[i];
}

std::vector<std::pair<Deg, int>> InducedModule::top_embedding() const {
    std::vector<std::pair<Deg, int>> out;
    for (const auto& [g, keys] : basis_)
        for (size_t i = 0; i < keys.size(); ++i)
            if (keys[i].mon.empty()) out.emplace_back(g, static_cast<int>(i));
    return out;
}

ModuleElem InducedModule::monomial_elem(const BasisKey& k, const Rational& c) const {
    ModuleElem out;
    auto it = index_.find(key_string(k));
    if (it == index_.end()) {
        out.exited = true;  // outside the truncation
        return out;
    }
    out.add(it->second.first, it->second.second, c);
    return out;
}

ModuleElem InducedModule::lift_top(const ModuleElem& tv, const std::vector<int>& mon) const {
    ModuleElem out;
    out.exited = tv.exited;
    for (const auto& [key, c] : tv.c) {
        if (c.is_zero()) continue;
        BasisKey k{mon, key.first, key.second};
        ModuleElem part = monomial_elem(k, c);
        out.axpy(Rational(1), part);
    }
    return out;
}

ModuleElem InducedModule::apply_symbol(const BasisSymbol& s, const Rational& coeff, const BasisKey& key) const {
    TriPart part = triangular_part(spec_, tag_, s);

    // try to read the symbol as a multiple of a listed negative generator
    auto match_gen = [&](int upper_bound, int* gi_out, Rational* lam_out) -> bool {
        if (part != TriPart::M && part != TriPart::MM) return false;
        for (int gi = 0; gi < static_cast<int>(gens_.size()); ++gi) {
            if (upper_bound >= 0 && gi > upper_bound) break;
            if (!(gens_[gi].deg == s.deg)) continue;
            auto gsym = gens_[gi].elem.symbols()[0].first;
            if (gsym.kind != s.kind) continue;
            if (s.kind == Kind::G) {
                if (gsym.gidx != s.gidx) continue;
                *gi_out = gi;
                *lam_out = Rational(1);
                return true;
            }
            // K/D: proportional coefficient vectors on a one-dimensional slot
            Rational denom = pair(gsym.u, gsym.u);
            Rational lam = pair(s.u, gsym.u) / denom;
            RatVec check = s.u;
            check.axpy(-lam, gsym.u);
            if (!check.is_zero()) continue;
            *gi_out = gi;
            *lam_out = lam;
            return true;
        }
        return false;
    };

    if (key.mon.empty()) {
        if (part == TriPart::P || part == TriPart::PP) return {};
        if (part == TriPart::Zero) {
            Element e;
            e.add_symbol(s, coeff);
            ModuleElem tv = top_->act(e, top_->basis(key.top_grade, key.top_idx));
            return lift_top(tv, {});
        }
        int gi = -1;
        Rational lam;
        if (!match_gen(-1, &gi, &lam)) {
            ModuleElem out;
            out.exited = true;  // negative symbol outside the generator window
            return out;
        }
        BasisKey nk{{gi}, key.top_grade, key.top_idx};
        return monomial_elem(nk, coeff * lam);
    }

    int head = key.mon[0];
    BasisKey rest{std::vector<int>(key.mon.begin() + 1, key.mon.end()), key.top_grade, key.top_idx};

    if (part == TriPart::M || part == TriPart::MM) {
        int gi = -1;
        Rational lam;
        if (match_gen(head, &gi, &lam)) {
            BasisKey nk = key;
            nk.mon.insert(nk.mon.begin(), gi);
            return monomial_elem(nk, coeff * lam);
        }
    }

    // commute past the head generator: s.(y.rest) = y.(s.rest) + [s, y].rest
    ModuleElem out;
    ModuleElem sub = apply_symbol(s, coeff, rest);
    // prepend head to every component of sub
    const BasisSymbol head_sym = gens_[head].elem.symbols()[0].first;
    for (const auto& [ck, cv] : sub.c) {
        if (cv.is_zero()) continue;
        ModuleElem part2 = apply_symbol(head_sym, cv, key_of(ck.first, ck.second));
        out.axpy(Rational(1), part2);
    }
    out.exited = out.exited || sub.exited;

    Element se;
    se.add_symbol(s, coeff);
    Element br;
    bracket_raw(spec_, se, gens_[head].elem, br);
    normal_form(spec_, br);
    for (const auto& [sym2, c2] : br.symbols()) {
        ModuleElem part3 = apply_symbol(sym2, c2, rest);
        out.axpy(Rational(1), part3);
    }
    out.compact();
    return out;
}

void InducedModule::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                               ModuleElem& out) const {
    ModuleElem part = apply_symbol(BasisSymbol::G(gidx, r), c, basis_.at(grade)[i]);
    out.axpy(Rational(1), part);
    out.exited = out.exited || part.exited;
}

void InducedModule::act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                               ModuleElem& out) const {
    ModuleElem part = apply_symbol(BasisSymbol::K(u, r), Rational(1), basis_.at(grade)[i]);
    out.axpy(Rational(1), part);
    out.exited = out.exited || part.exited;
}

void InducedModule::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                               ModuleElem& out) const {
    ModuleElem part = apply_symbol(BasisSymbol::D(u, r), Rational(1), basis_.at(grade)[i]);
    out.axpy(Rational(1), part);
    out.exited = out.exited || part.exited;
}

QuotientModule::QuotientModule(const InducedModule& parent, const Window& genw) : parent_(&parent) {
    // global layout
    for (const Deg& g : parent.grades())
        for (int i = 0; i < parent.dim(g); ++i) {
            col_of_[g.str() + "#" + std::to_string(i)] = layout_.size();
            layout_.emplace_back(g, i);
        }
    const size_t n = layout_.size();

    // top columns
    std::vector<bool> is_top(n, false);
    for (const auto& [g, i] : parent.top_embedding()) is_top[col_of_.at(g.str() + "#" + std::to_string(i))] = true;

    // action images of all window generators on all columns (in-window parts)
    auto gens = window_generators(parent.algebra(), genw);
    std::vector<std::vector<std::vector<Rational>>> img(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        img[gi].assign(n, {});
        for (size_t col = 0; col < n; ++col) {
            ModuleElem e = parent.act(gens[gi].elem, parent.basis(layout_[col].first, layout_[col].second));
            std::vector<Rational> v(n);
            for (const auto& [key, cv] : e.c) {
                auto it = col_of_.find(key.first.str() + "#" + std::to_string(key.second));
                if (it != col_of_.end()) v[it->second] += cv;
            }
            img[gi][col] = std::move(v);
        }
    }

    // U_0 = vectors supported away from the top
    RatMatrix U(0, n);
    for (size_t cidx = 0; cidx < n; ++cidx) {
        if (is_top[cidx]) continue;
        std::vector<Rational> row(n);
        row[cidx] = Rational(1);
        U.append_row(std::move(row));
    }
    std::vector<size_t> pivots = U.rref();

    // greatest invariant subspace inside U_0
    for (;;) {
        if (U.rows() == 0) break;
        auto reduce = [&](std::vector<Rational> v) {
            for (size_t k = 0; k < pivots.size(); ++k) {
                const Rational& f = v[pivots[k]];
                if (f.is_zero()) continue;
                Rational ff = f;
                for (size_t j = 0; j < n; ++j)
                    if (!U.at(k, j).is_zero()) v[j] -= ff * U.at(k, j);
            }
            return v;
        };
        // constraint matrix: rows = residual coordinates of A_g u_b
        RatMatrix constraints(0, U.rows());
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<std::vector<Rational>> residuals(U.rows());
            bool any = false;
            for (size_t b = 0; b < U.rows(); ++b) {
                std::vector<Rational> v(n);
                for (size_t col = 0; col < n; ++col) {
                    const Rational& c = U.at(b, col);
                    if (c.is_zero()) continue;
                    for (size_t j = 0; j < n; ++j)
                        if (!img[gi][col][j].is_zero()) v[j] += c * img[gi][col][j];
                }
                residuals[b] = reduce(std::move(v));
                for (const auto& x : residuals[b]) any = any || !x.is_zero();
            }
            if (!any) continue;
            for (size_t j = 0; j < n; ++j) {
                bool nz = false;
                for (size_t b = 0; b < U.rows(); ++b) nz = nz || !residuals[b][j].is_zero();
                if (!nz) continue;
                std::vector<Rational> row(U.rows());
                for (size_t b = 0; b < U.rows(); ++b) row[b] = residuals[b][j];
                constraints.append_row(std::move(row));
            }
        }
        if (constraints.rows() == 0) break;  // U already invariant
        auto kernel = constraints.nullspace();
        if (kernel.size() == U.rows()) break;
        RatMatrix next(0, n);
        for (const auto& combo : kernel) {
            std::vector<Rational> row(n);
            for (size_t b = 0; b < U.rows(); ++b) {
                if (combo[b].is_zero()) continue;
                for (size_t j = 0; j < n; ++j)
                    if (!U.at(b, j).is_zero()) row[j] += combo[b] * U.at(b, j);
            }
            next.append_row(std::move(row));
        }
        U = std::move(next);
        pivots = U.rref();
    }

    radical_rref_ = std::move(U);
    radical_pivots_ = pivots;
    removed_ = radical_rref_.rows();
    std::vector<bool> removed_col(n, false);
    for (size_t p : radical_pivots_) removed_col[p] = true;
    for (size_t c = 0; c < n; ++c) {
        if (removed_col[c]) continue;
        kept_columns_.push_back(c);
        kept_by_grade_[layout_[c].first].push_back(c);
    }
    for (const auto& [g, cols] : kept_by_grade_) quotient_dim_[g] = static_cast<int>(cols.size());
}

std::vector<Deg> QuotientModule::grades() const {
    std::vector<Deg> out;
    for (const auto& [g, d] : quotient_dim_) {
        (void)d;
        out.push_back(g);
    }
    return out;
}

int QuotientModule::dim(const Deg& g) const {
    auto it = quotient_dim_.find(g);
    return it == quotient_dim_.end() ? 0 : it->second;
}

Weight QuotientModule::weight_of(const Deg& g, int i) const {
    size_t col = kept_by_grade_.at(g)[i];
    return parent_->weight_of(layout_[col].first, layout_[col].second);
}

json QuotientModule::parameters() const {
    json j;
    j["parent"] = parent_->parameters();
    j["removed_dimension"] = removed_;
    j["label"] = "window-approximate simple quotient";
    return j;
}

ModuleElem QuotientModule::project(const ModuleElem& pv) const {
    const size_t n = layout_.size();
    std::vector<Rational> v(n);
    bool exited = pv.exited;
    for (const auto& [key, c] : pv.c) {
        auto it = col_of_.find(key.first.str() + "#" + std::to_string(key.second));
        if (it == col_of_.end()) {
            exited = true;
            continue;
        }
        v[it->second] += c;
    }
    for (size_t k = 0; k < radical_pivots_.size(); ++k) {
        const Rational f = v[radical_pivots_[k]];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
            if (!radical_rref_.at(k, j).is_zero()) v[j] -= f * radical_rref_.at(k, j);
    }
    ModuleElem out;
    out.exited = exited;
    for (const auto& [g, cols] : kept_by_grade_)
        for (size_t i = 0; i < cols.size(); ++i)
            if (!v[cols[i]].is_zero()) out.add(g, static_cast<int>(i), v[cols[i]]);
    return out;
}

bool QuotientModule::top_injective() const {
    auto tops = parent_->top_embedding();
    RatMatrix rows(0, kept_columns_.size());
    for (const auto& [g, i] : tops) {
        ModuleElem pr = project(parent_->basis(g, i));
        std::vector<Rational> row(kept_columns_.size());
        // linear layout: grade blocks in kept order
        size_t offset = 0;
        for (const auto& [gg, cols] : kept_by_grade_) {
            for (size_t k = 0; k < cols.size(); ++k) {
                auto it = pr.c.find({gg, static_cast<int>(k)});
                if (it != pr.c.end()) row[offset + k] = it->second;
            }
            offset += cols.size();
        }
        rows.append_row(std::move(row));
    }
    return rows.rank() == tops.size();
}

void QuotientModule::act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                                ModuleElem& out) const {
    size_t col = kept_by_grade_.at(grade)[i];
    ModuleElem pv;
    parent_->act_g_term(gidx, r, c, layout_[col].first, layout_[col].second, pv);
    out.axpy(Rational(1), project(pv));
}

void QuotientModule::act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                                ModuleElem& out) const {
    size_t col = kept_by_grade_.at(grade)[i];
    ModuleElem pv;
    parent_->act_k_term(r, u, layout_[col].first, layout_[col].second, pv);
    out.axpy(Rational(1), project(pv));
}

void QuotientModule::act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                                ModuleElem& out) const {
    size_t col = kept_by_grade_.at(grade)[i];
    ModuleElem pv;
    parent_->act_d_term(r, u, layout_[col].first, layout_[col].second, pv);
    out.axpy(Rational(1), project(pv));
}

}  // namespace toralab
