#include "toralab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace toralab {

std::string family_name(Family f) {
    switch (f) {
        case Family::Toroidal: return "toroidal";
        case Family::FullToroidal: return "fullToroidal";
        case Family::TauS: return "tauS";
        case Family::TauH: return "tauH";
        case Family::TauD: return "tauD";
        case Family::MinimalEALA: return "minimalEALA";
        case Family::HN: return "HN";
        case Family::SN: return "SN";
        case Family::DM: return "DM";
        case Family::DerA: return "DerA";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::Toroidal, Family::FullToroidal, Family::TauS, Family::TauH, Family::TauD,
                     Family::MinimalEALA, Family::HN, Family::SN, Family::DM, Family::DerA}) {
        if (family_name(f) == s) return f;
    }
    throw std::invalid_argument("unknown family: " + s);
}

AlgebraSpec::AlgebraSpec(Family f, int n, const SimpleLieDatum* lie) : family(f), N(n), g(lie) {
    if (n < 1 || n > kMaxArity) throw ArityError("AlgebraSpec: arity out of range");
    if ((f == Family::TauH || f == Family::HN) && (n % 2 != 0))
        throw ArityError(family_name(f) + " requires even N >= 2");
    if ((f == Family::TauD || f == Family::DM) && (n % 2 != 1 || n < 3))
        throw ArityError(family_name(f) + " requires odd N >= 3");
    if (has_g() && g == nullptr)
        throw std::invalid_argument(family_name(f) + " requires a simple Lie datum");
    if (!has_g()) g = nullptr;
}

bool AlgebraSpec::has_g() const {
    switch (family) {
        case Family::HN:
        case Family::SN:
        case Family::DM:
        case Family::DerA: return false;
        default: return true;
    }
}

bool AlgebraSpec::has_center() const { return has_g(); }

bool AlgebraSpec::has_graded_center() const { return has_g() && family != Family::MinimalEALA; }

bool AlgebraSpec::abelian_extension() const { return has_graded_center(); }

std::string AlgebraSpec::str() const {
    std::ostringstream os;
    os << family_name(family) << "(N=" << N;
    if (g) os << ",g=sl" << g->n();
    os << ")";
    return os.str();
}

std::string BasisSymbol::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::G: os << "X[" << gidx + 1 << "]" << deg.str(); break;
        case Kind::K: os << "K(" << u.str() << "|" << deg.str() << ")"; break;
        case Kind::D: os << "D(" << u.str() << "|" << deg.str() << ")"; break;
    }
    return os.str();
}

void Element::add_g(int idx, const Deg& d, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(g_.begin(), g_.end(), std::make_pair(idx, d),
                               [](const GTerm& t, const std::pair<int, Deg>& key) {
                                   if (t.idx != key.first) return t.idx < key.first;
                                   return t.deg < key.second;
                               });
    if (it != g_.end() && it->idx == idx && it->deg == d) {
        it->c += c;
        return;
    }
    g_.insert(it, GTerm{idx, d, c});
}

namespace {
void add_vterm(std::vector<Element::VTerm>& v, const Deg& d, const RatVec& u) {
    if (u.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), d,
                               [](const Element::VTerm& t, const Deg& key) { return t.deg < key; });
    if (it != v.end() && it->deg == d) {
        it->u.axpy(Rational(1), u);
        return;
    }
    v.insert(it, Element::VTerm{d, u});
}

void add_vterm_int(std::vector<Element::VTerm>& v, const Deg& d, const Deg& u, const Rational& scale) {
    if (scale.is_zero() || u.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), d,
                               [](const Element::VTerm& t, const Deg& key) { return t.deg < key; });
    if (it != v.end() && it->deg == d) {
        for (int i = 0; i < u.arity(); ++i)
            if (u[i] != 0) it->u[i] += scale * Rational(u[i]);
        return;
    }
    RatVec ru(u.arity());
    for (int i = 0; i < u.arity(); ++i)
        if (u[i] != 0) ru[i] = scale * Rational(u[i]);
    v.insert(it, Element::VTerm{d, ru});
}
}  // namespace

void Element::add_k(const Deg& d, const RatVec& u) { add_vterm(k_, d, u); }
void Element::add_d(const Deg& d, const RatVec& u) { add_vterm(d_, d, u); }
void Element::add_k_int(const Deg& d, const Deg& u, const Rational& s) { add_vterm_int(k_, d, u, s); }
void Element::add_d_int(const Deg& d, const Deg& u, const Rational& s) { add_vterm_int(d_, d, u, s); }

void Element::add_symbol(const BasisSymbol& s, const Rational& c) {
    if (c.is_zero()) return;
    switch (s.kind) {
        case Kind::G: add_g(s.gidx, s.deg, c); break;
        case Kind::K: {
            RatVec u = s.u;
            u.scale(c);
            add_k(s.deg, u);
            break;
        }
        case Kind::D: {
            RatVec u = s.u;
            u.scale(c);
            add_d(s.deg, u);
            break;
        }
    }
}

void Element::axpy(const Rational& c, const Element& o) {
    if (c.is_zero()) return;
    for (const auto& t : o.g_) add_g(t.idx, t.deg, c * t.c);
    for (const auto& t : o.k_) {
        RatVec u = t.u;
        u.scale(c);
        add_k(t.deg, u);
    }
    for (const auto& t : o.d_) {
        RatVec u = t.u;
        u.scale(c);
        add_d(t.deg, u);
    }
}

void Element::negate() {
    for (auto& t : g_) t.c = -t.c;
    for (auto& t : k_) t.u.scale(Rational(-1));
    for (auto& t : d_) t.u.scale(Rational(-1));
}

void Element::compact() {
    std::erase_if(g_, [](const GTerm& t) { return t.c.is_zero(); });
    std::erase_if(k_, [](const VTerm& t) { return t.u.is_zero(); });
    std::erase_if(d_, [](const VTerm& t) { return t.u.is_zero(); });
}

bool Element::is_zero() const {
    for (const auto& t : g_)
        if (!t.c.is_zero()) return false;
    for (const auto& t : k_)
        if (!t.u.is_zero()) return false;
    for (const auto& t : d_)
        if (!t.u.is_zero()) return false;
    return true;
}

bool operator==(const Element& a, const Element& b) {
    Element d = a;
    d.axpy(Rational(-1), b);
    return d.is_zero();
}

std::vector<std::pair<BasisSymbol, Rational>> Element::symbols() const {
    std::vector<std::pair<BasisSymbol, Rational>> out;
    for (const auto& t : g_)
        if (!t.c.is_zero()) out.emplace_back(BasisSymbol::G(t.idx, t.deg), t.c);
    for (const auto& t : k_)
        if (!t.u.is_zero()) out.emplace_back(BasisSymbol::K(t.u, t.deg), Rational(1));
    for (const auto& t : d_)
        if (!t.u.is_zero()) out.emplace_back(BasisSymbol::D(t.u, t.deg), Rational(1));
    return out;
}

std::string Element::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    for (const auto& t : g_) {
        if (t.c.is_zero()) continue;
        sep();
        if (!t.c.is_one()) os << t.c.str() << "*";
        os << "X[" << t.idx + 1 << "]" << t.deg.str();
    }
    for (const auto& t : k_) {
        if (t.u.is_zero()) continue;
        sep();
        os << "K(" << t.u.str() << "|" << t.deg.str() << ")";
    }
    for (const auto& t : d_) {
        if (t.u.is_zero()) continue;
        sep();
        os << "D(" << t.u.str() << "|" << t.deg.str() << ")";
    }
    if (first) os << "0";
    return os.str();
}

namespace {

/// Central coefficient vector at nonzero degree r, reduced to the family's
/// canonical representative. Returns false if the class is zero.
bool reduce_central(const AlgebraSpec& spec, const Deg& r, RatVec& u) {
    if (r.is_zero()) return !u.is_zero();
    switch (spec.family) {
        case Family::Toroidal:
        case Family::FullToroidal:
        case Family::TauS: {
            // Z = Omega/d_A: subtract the K(r,r) direction
            Rational t = pair(u, r);
            if (!t.is_zero()) {
                Rational lam = t / Rational(ipair(r, r));
                for (int i = 0; i < u.arity(); ++i)
                    if (r[i] != 0) u[i] -= lam * Rational(r[i]);
            }
            return !u.is_zero();
        }
        case Family::TauH: {
            Deg br = bar(r);
            Rational lam = pair(u, br) / Rational(ipair(br, br));
            u = RatVec(br);
            u.scale(lam);
            return !lam.is_zero();
        }
        case Family::TauD: {
            if (in_G(r)) {
                u = RatVec(r.arity());
                return false;
            }
            Deg ur = underline(r);
            Rational lam = pair(u, ur) / Rational(ipair(ur, ur));
            u = RatVec(ur);
            u.scale(lam);
            return !lam.is_zero();
        }
        case Family::MinimalEALA:
            throw InadmissibleElement("central symbol at nonzero degree in " + family_name(spec.family));
        default:
            throw InadmissibleElement("central symbol in derivation family " + family_name(spec.family));
    }
}

/// Validates a derivation coefficient vector against the family span.
void check_derivation(const AlgebraSpec& spec, const Deg& r, const RatVec& u) {
    if (u.is_zero()) return;
    switch (spec.family) {
        case Family::FullToroidal:
        case Family::DerA: return;
        case Family::Toroidal:
        case Family::MinimalEALA:
            if (!r.is_zero())
                throw InadmissibleElement("graded derivation in " + family_name(spec.family));
            return;
        case Family::TauS:
        case Family::SN:
            if (!pair(u, r).is_zero())
                throw InadmissibleElement("derivation outside S_N span: D(" + u.str() + "|" + r.str() + ")");
            return;
        case Family::TauH:
        case Family::HN: {
            if (r.is_zero()) return;
            Deg br = bar(r);
            Rational lam = pair(u, br) / Rational(ipair(br, br));
            for (int i = 0; i < u.arity(); ++i)
                if (u[i] != lam * Rational(br[i]))
                    throw InadmissibleElement("derivation outside H_N span: D(" + u.str() + "|" + r.str() + ")");
            return;
        }
        case Family::TauD:
        case Family::DM: {
            if (r.is_zero()) return;
            if (in_G(r))
                throw InadmissibleElement("derivation at G degree in " + family_name(spec.family) + ": D(" +
                                          u.str() + "|" + r.str() + ")");
            Deg ur = underline(r);
            Rational lam = pair(u, ur) / Rational(ipair(ur, ur));
            for (int i = 0; i < u.arity(); ++i)
                if (u[i] != lam * Rational(ur[i]))
                    throw InadmissibleElement("derivation outside D_M span: D(" + u.str() + "|" + r.str() + ")");
            return;
        }
    }
}

}  // namespace

void normal_form(const AlgebraSpec& spec, Element& e) {
    for (const auto& t : e.g_terms()) {
        if (!spec.has_g()) throw InadmissibleElement("g-symbol in " + family_name(spec.family));
        if (t.idx < 0 || t.idx >= spec.g->dim()) throw InadmissibleElement("g-basis index out of range");
        if (t.deg.arity() != spec.N) throw ArityError("g-symbol arity mismatch");
    }
    // reduction keeps each term's degree, so terms stay keyed and sorted
    for (auto& t : e.k_terms_mut()) {
        if (t.deg.arity() != spec.N) throw ArityError("central symbol arity mismatch");
        if (!spec.has_center()) throw InadmissibleElement("central symbol in " + family_name(spec.family));
        if (!reduce_central(spec, t.deg, t.u)) t.u = RatVec(spec.N);
    }
    for (const auto& t : e.d_terms()) {
        if (t.deg.arity() != spec.N) throw ArityError("derivation symbol arity mismatch");
        check_derivation(spec, t.deg, t.u);
    }
    e.compact();
}

namespace {

// [X(r), Y(s)] = [X,Y](r+s) + <X,Y> K(r, r+s)   (minimal EALA: only at r+s=0)
void bracket_g_g(const AlgebraSpec& spec, int xi, const Deg& r, const Rational& cx, int yi, const Deg& s,
                 const Rational& cy, Element& out) {
    Rational c = cx * cy;
    Deg rs = r + s;
    for (const auto& [zi, sc] : spec.g->bracket(xi, yi)) out.add_g(zi, rs, c * Rational(sc));
    long long f = spec.g->form(xi, yi);
    if (f == 0) return;
    if (spec.family == Family::MinimalEALA) {
        if (rs.is_zero()) out.add_k_int(rs, r, c * Rational(f));
    } else {
        out.add_k_int(rs, r, c * Rational(f));
    }
}

// [D(u,r), X(s)] = (u,s) X(r+s)
void bracket_d_g(const Deg& r, const RatVec& u, int yi, const Deg& s, const Rational& cy, bool flip,
                 Element& out) {
    Rational c = pair(u, s) * cy;
    if (c.is_zero()) return;
    if (flip) c = -c;
    out.add_g(yi, r + s, c);
}

// [D(u,r), D(v,s)] = D((u,s)v - (v,r)u, r+s) + (u,s)(v,r) K(r, r+s)
void bracket_d_d(const AlgebraSpec& spec, const Deg& r, const RatVec& u, const Deg& s, const RatVec& v,
                 Element& out) {
    Rational us = pair(u, s);
    Rational vr = pair(v, r);
    Deg rs = r + s;
    if (!us.is_zero() || !vr.is_zero()) {
        RatVec w(u.arity());
        if (!us.is_zero()) w.axpy(us, v);
        if (!vr.is_zero()) w.axpy(-vr, u);
        out.add_d(rs, w);
    }
    if (spec.abelian_extension()) {
        Rational c = us * vr;
        if (!c.is_zero()) out.add_k_int(rs, r, c);
    }
}

// [D(u,r), K(v,s)] = (u,s) K(v, r+s) + (u,v) K(r, r+s)
void bracket_d_k(const Deg& r, const RatVec& u, const Deg& s, const RatVec& v, bool flip, Element& out) {
    Deg rs = r + s;
    Rational us = pair(u, s);
    if (flip) us = -us;
    if (!us.is_zero()) {
        RatVec w = v;
        w.scale(us);
        out.add_k(rs, w);
    }
    Rational uv = pair(u, v);
    if (flip) uv = -uv;
    if (!uv.is_zero()) out.add_k_int(rs, r, uv);
}

}  // namespace

void bracket_raw(const AlgebraSpec& spec, const Element& a, const Element& b, Element& out) {
    for (const auto& ta : a.g_terms()) {
        if (ta.c.is_zero()) continue;
        for (const auto& tb : b.g_terms()) {
            if (!tb.c.is_zero()) bracket_g_g(spec, ta.idx, ta.deg, ta.c, tb.idx, tb.deg, tb.c, out);
        }
    }
    for (const auto& ta : a.d_terms()) {
        for (const auto& tb : b.g_terms()) {
            if (!tb.c.is_zero()) bracket_d_g(ta.deg, ta.u, tb.idx, tb.deg, tb.c, false, out);
        }
        for (const auto& tb : b.d_terms()) bracket_d_d(spec, ta.deg, ta.u, tb.deg, tb.u, out);
        for (const auto& tb : b.k_terms()) bracket_d_k(ta.deg, ta.u, tb.deg, tb.u, false, out);
    }
    for (const auto& ta : a.g_terms()) {
        if (ta.c.is_zero()) continue;
        for (const auto& tb : b.d_terms()) bracket_d_g(tb.deg, tb.u, ta.idx, ta.deg, ta.c, true, out);
    }
    for (const auto& ta : a.k_terms()) {
        for (const auto& tb : b.d_terms()) bracket_d_k(tb.deg, tb.u, ta.deg, ta.u, true, out);
    }
    // [K,K] = [G,K] = [K,G] = 0
}

Element bracket(const AlgebraSpec& spec, const Element& a, const Element& b) {
    Element na = a, nb = b;
    normal_form(spec, na);
    normal_form(spec, nb);
    Element out;
    bracket_raw(spec, na, nb, out);
    normal_form(spec, out);
    return out;
}

Element element_of(const AlgebraSpec& spec, const BasisSymbol& s) {
    Element e;
    e.add_symbol(s, Rational(1));
    normal_form(spec, e);
    return e;
}

Element bracket(const AlgebraSpec& spec, const BasisSymbol& a, const BasisSymbol& b) {
    return bracket(spec, element_of(spec, a), element_of(spec, b));
}

Element hamiltonian(const AlgebraSpec& spec, const Deg& r) {
    Element e;
    e.add_d_int(r, bar(r), Rational(1));
    normal_form(spec, e);
    return e;
}

Element contact(const AlgebraSpec& spec, const Deg& r) {
    Element e;
    e.add_d_int(r, underline(r), Rational(1));
    normal_form(spec, e);
    return e;
}

namespace {

// Integer basis of the hyperplane { u : (u, r) = 0 } for r != 0.
std::vector<Deg> hyperplane_basis(const Deg& r) {
    int js = -1;
    for (int i = 0; i < r.arity(); ++i)
        if (r[i] != 0) { js = i; break; }
    std::vector<Deg> out;
    for (int i = 0; i < r.arity(); ++i) {
        if (i == js) continue;
        Deg v(r.arity());
        v.set(i, r[js]);
        v.set(js, -r[i]);
        out.push_back(v);
    }
    return out;
}

std::string klabel(const Deg& u, const Deg& r) { return "K(" + u.str() + "|" + r.str() + ")"; }
std::string dlabel(const Deg& u, const Deg& r) { return "D(" + u.str() + "|" + r.str() + ")"; }

}  // namespace

std::vector<Generator> canonical_generators(const AlgebraSpec& spec, const Deg& r) {
    if (r.arity() != spec.N) throw ArityError("canonical_generators: arity mismatch");
    std::vector<Generator> out;
    auto push = [&](std::string label, Element e) {
        normal_form(spec, e);
        if (!e.is_zero()) out.push_back(Generator{std::move(label), r, std::move(e)});
    };

    if (spec.has_g()) {
        for (int i = 0; i < spec.g->dim(); ++i) {
            Element e;
            e.add_g(i, r, Rational(1));
            push(spec.g->basis_name(i) + r.str(), std::move(e));
        }
    }

    auto unit = [&](int i) {
        Deg u(spec.N);
        u.set(i, 1);
        return u;
    };

    // central part
    if (spec.has_center()) {
        if (r.is_zero()) {
            for (int i = 0; i < spec.N; ++i) {
                Element e;
                e.add_k_int(r, unit(i), Rational(1));
                push("K[" + std::to_string(i + 1) + "]", std::move(e));
            }
        } else if (spec.family == Family::Toroidal || spec.family == Family::FullToroidal ||
                   spec.family == Family::TauS) {
            for (const Deg& v : hyperplane_basis(r)) {
                Element e;
                e.add_k_int(r, v, Rational(1));
                push(klabel(v, r), std::move(e));
            }
        } else if (spec.family == Family::TauH) {
            Element e;
            e.add_k_int(r, bar(r), Rational(1));
            push(klabel(bar(r), r), std::move(e));
        } else if (spec.family == Family::TauD) {
            if (!in_G(r)) {
                Element e;
                e.add_k_int(r, underline(r), Rational(1));
                push(klabel(underline(r), r), std::move(e));
            }
        }
    }

    // derivation part
    switch (spec.family) {
        case Family::Toroidal:
        case Family::MinimalEALA:
            if (r.is_zero()) {
                for (int i = 0; i < spec.N; ++i) {
                    Element e;
                    e.add_d_int(r, unit(i), Rational(1));
                    push("d[" + std::to_string(i + 1) + "]", std::move(e));
                }
            }
            break;
        case Family::FullToroidal:
        case Family::DerA:
            for (int i = 0; i < spec.N; ++i) {
                Element e;
                e.add_d_int(r, unit(i), Rational(1));
                push(dlabel(unit(i), r), std::move(e));
            }
            break;
        case Family::TauS:
        case Family::SN:
            if (r.is_zero()) {
                for (int i = 0; i < spec.N; ++i) {
                    Element e;
                    e.add_d_int(r, unit(i), Rational(1));
                    push("d[" + std::to_string(i + 1) + "]", std::move(e));
                }
            } else {
                for (const Deg& v : hyperplane_basis(r)) {
                    Element e;
                    e.add_d_int(r, v, Rational(1));
                    push(dlabel(v, r), std::move(e));
                }
            }
            break;
        case Family::TauH:
        case Family::HN:
            if (r.is_zero()) {
                for (int i = 0; i < spec.N; ++i) {
                    Element e;
                    e.add_d_int(r, unit(i), Rational(1));
                    push("d[" + std::to_string(i + 1) + "]", std::move(e));
                }
            } else {
                Element e;
                e.add_d_int(r, bar(r), Rational(1));
                push("h" + r.str(), std::move(e));
            }
            break;
        case Family::TauD:
        case Family::DM:
            if (r.is_zero()) {
                for (int i = 0; i < spec.N; ++i) {
                    Element e;
                    e.add_d_int(r, unit(i), Rational(1));
                    push("d[" + std::to_string(i + 1) + "]", std::move(e));
                }
            } else if (!in_G(r)) {
                Element e;
                e.add_d_int(r, underline(r), Rational(1));
                push(dlabel(underline(r), r), std::move(e));
            }
            break;
    }
    return out;
}

SpaceTag parse_space_tag(const std::string& s) {
    if (s == "Z") return SpaceTag::Z;
    if (s == "Z/K") return SpaceTag::ZmodK;
    if (s == "Z/K_M") return SpaceTag::ZmodKM;
    if (s == "H_N") return SpaceTag::HN;
    if (s == "H~_N") return SpaceTag::HNtilde;
    if (s == "D_M") return SpaceTag::DM;
    if (s == "D~_M") return SpaceTag::DMtilde;
    if (s == "full") return SpaceTag::Full;
    throw std::invalid_argument("unknown space tag: " + s);
}

int component_dimension(const AlgebraSpec& spec, SpaceTag tag, const Deg& r) {
    if (r.arity() != spec.N) throw ArityError("component_dimension: arity mismatch");
    auto require = [&](std::initializer_list<Family> ok, const char* what) {
        for (Family f : ok)
            if (spec.family == f) return;
        throw std::invalid_argument(std::string("space tag ") + what + " does not live in " +
                                    family_name(spec.family));
    };
    // rank of the images of K(e_i, r) in the family's central quotient
    auto central_rank = [&]() {
        RatMatrix rows(0, spec.N);
        for (int i = 0; i < spec.N; ++i) {
            RatVec u = RatVec::unit(spec.N, i);
            if (!reduce_central(spec, r, u)) continue;
            std::vector<Rational> row(spec.N);
            for (int j = 0; j < spec.N; ++j) row[j] = u[j];
            rows.append_row(row);
        }
        return static_cast<int>(rows.rank());
    };
    auto line_rank = [&](const Deg& dirvec) { return dirvec.is_zero() ? 0 : 1; };

    switch (tag) {
        case SpaceTag::Z:
            require({Family::Toroidal, Family::FullToroidal, Family::TauS}, "Z");
            return central_rank();
        case SpaceTag::ZmodK:
            require({Family::TauH}, "Z/K");
            return central_rank();
        case SpaceTag::ZmodKM:
            require({Family::TauD}, "Z/K_M");
            return central_rank();
        case SpaceTag::HN:
            require({Family::TauH, Family::HN}, "H_N");
            return r.is_zero() ? 0 : line_rank(bar(r));
        case SpaceTag::HNtilde:
            require({Family::TauH, Family::HN}, "H~_N");
            return r.is_zero() ? spec.N : line_rank(bar(r));
        case SpaceTag::DM:
            require({Family::TauD, Family::DM}, "D_M");
            if (r.is_zero() || in_G(r)) return 0;
            return line_rank(underline(r));
        case SpaceTag::DMtilde:
            require({Family::TauD, Family::DM}, "D~_M");
            if (r.is_zero()) return spec.N;
            return in_G(r) ? 0 : line_rank(underline(r));
        case SpaceTag::Full: {
            // stack generator coordinates over (g-slot, K-vector, D-vector)
            const int gd = spec.has_g() ? spec.g->dim() : 0;
            RatMatrix rows(0, gd + 2 * spec.N);
            for (const auto& gen : canonical_generators(spec, r)) {
                std::vector<Rational> row(gd + 2 * spec.N);
                for (const auto& t : gen.elem.g_terms()) row[t.idx] += t.c;
                for (const auto& t : gen.elem.k_terms())
                    for (int j = 0; j < spec.N; ++j) row[gd + j] += t.u[j];
                for (const auto& t : gen.elem.d_terms())
                    for (int j = 0; j < spec.N; ++j) row[gd + spec.N + j] += t.u[j];
                rows.append_row(std::move(row));
            }
            return static_cast<int>(rows.rank());
        }
    }
    return 0;
}

std::string tri_part_name(TriPart p) {
    switch (p) {
        case TriPart::MM: return "--";
        case TriPart::M: return "-";
        case TriPart::Zero: return "0";
        case TriPart::P: return "+";
        case TriPart::PP: return "++";
    }
    return "?";
}

TriTag parse_tri_tag(const std::string& s) {
    if (s == "N2" || s == "n2") return TriTag::N2;
    if (s == "generalN" || s == "generaln") return TriTag::GeneralN;
    if (s == "levelzero") return TriTag::LevelZero;
    throw std::invalid_argument("unknown decomposition tag: " + s);
}

TriPart triangular_part(const AlgebraSpec& spec, TriTag tag, const BasisSymbol& s) {
    // the level-zero split only charges the g root vectors and applies to any
    // family with a g part; the five-part splits live on tauH
    if (tag == TriTag::LevelZero ? !spec.has_g() : spec.family != Family::TauH)
        throw std::invalid_argument("decomposition tag does not apply to " + family_name(spec.family));
    // validate the symbol against the ambient algebra
    (void)element_of(spec, s);
    if (tag == TriTag::LevelZero) {
        if (s.kind == Kind::G && spec.g->is_root_vector(s.gidx))
            return spec.g->is_positive_root_vector(s.gidx) ? TriPart::P : TriPart::M;
        return TriPart::Zero;
    }
    if (tag == TriTag::N2 && spec.N != 2) throw ArityError("N2 decomposition needs N = 2");
    const int m = spec.N / 2;
    long long rm = s.deg[m - 1];
    long long r2m = s.deg[2 * m - 1];
    if (rm > r2m) return TriPart::PP;
    if (rm < r2m) return TriPart::MM;
    if (rm > 0) return TriPart::P;
    if (rm < 0) return TriPart::M;
    // r_m = r_2m = 0
    if (s.kind == Kind::G && spec.g->is_root_vector(s.gidx))
        return spec.g->is_positive_root_vector(s.gidx) ? TriPart::P : TriPart::M;
    return TriPart::Zero;
}

}  // namespace toralab
