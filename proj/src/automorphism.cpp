#include "toralab/automorphism.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "toralab/linalg.hpp"
#include "toralab/verify_algebra.hpp"

namespace toralab {

IntegralMatrix IntegralMatrix::identity(int n) {
    IntegralMatrix m(n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

long long IntegralMatrix::det() const {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(a[i][j]);
    Rational d = m.det();
    if (!d.is_integer()) throw std::logic_error("integer determinant expected");
    return d.is_small() ? d.num_small() : throw std::overflow_error("determinant overflow");
}

IntegralMatrix IntegralMatrix::transpose() const {
    IntegralMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.a[j][i] = a[i][j];
    return t;
}

IntegralMatrix IntegralMatrix::inverse() const {
    if (!unimodular()) throw std::invalid_argument("inverse: matrix not unimodular");
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(a[i][j]);
    auto inv = m.inverse();
    IntegralMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& v = inv->at(i, j);
            if (!v.is_integer()) throw std::logic_error("unimodular inverse must be integral");
            out.a[i][j] = v.num_small();
        }
    return out;
}

IntegralMatrix operator*(const IntegralMatrix& x, const IntegralMatrix& y) {
    IntegralMatrix out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.a[i][k] == 0) continue;
            for (int j = 0; j < x.n; ++j) out.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return out;
}

bool operator==(const IntegralMatrix& x, const IntegralMatrix& y) {
    if (x.n != y.n) return false;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (x.a[i][j] != y.a[i][j]) return false;
    return true;
}

Deg IntegralMatrix::apply(const Deg& d) const {
    if (d.arity() != n) throw ArityError("IntegralMatrix::apply: arity mismatch");
    Deg out(n);
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += a[i][j] * d[j];
        out.set(i, s);
    }
    return out;
}

RatVec IntegralMatrix::apply(const RatVec& v) const {
    if (v.arity() != n) throw ArityError("IntegralMatrix::apply: arity mismatch");
    RatVec out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != 0 && !v[j].is_zero()) out[i] += Rational(a[i][j]) * v[j];
    return out;
}

std::string IntegralMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        os << (i ? ";[" : "[");
        for (int j = 0; j < n; ++j) {
            if (j) os << ",";
            os << a[i][j];
        }
        os << "]";
    }
    return os.str();
}

json IntegralMatrix::to_json() const {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(a[i][j]);
        rows.push_back(row);
    }
    return rows;
}

IntegralMatrix shear_matrix(long long a, int m, int N) {
    if (2 * a - 1 <= 0) throw std::invalid_argument("shear_matrix: requires 2a - 1 > 0");
    if (m < 1 || 2 * m > N) throw std::invalid_argument("shear_matrix: index m out of range");
    IntegralMatrix B = IntegralMatrix::identity(N);
    int i = m - 1, j = 2 * m - 1;
    B.set(i, i, a);
    B.set(i, j, 1);
    B.set(j, i, a - 1);
    B.set(j, j, 1);
    return B;
}

Element apply_automorphism(const AlgebraSpec& spec, const IntegralMatrix& B, const Element& x) {
    if (B.n != spec.N) throw ArityError("apply_automorphism: arity mismatch");
    if (!B.unimodular()) throw std::invalid_argument("apply_automorphism: matrix not unimodular");
    IntegralMatrix F = B.transpose().inverse();
    Element out;
    for (const auto& t : x.g_terms()) out.add_g(t.idx, B.apply(t.deg), t.c);
    for (const auto& t : x.k_terms()) out.add_k(B.apply(t.deg), B.apply(t.u));
    for (const auto& t : x.d_terms()) out.add_d(B.apply(t.deg), F.apply(t.u));
    normal_form(spec, out);
    return out;
}

VerificationReport verify_automorphism(const AlgebraSpec& spec, const IntegralMatrix& B, const Window& w) {
    VerificationReport rep;
    rep.check = "automorphism-bracket";
    rep.config["family"] = family_name(spec.family);
    rep.config["N"] = spec.N;
    rep.config["window"] = w.radius;
    rep.config["B"] = B.to_json();
    auto t0 = std::chrono::steady_clock::now();

    auto gens = window_generators(spec, w);
    std::vector<Element> images;
    images.reserve(gens.size());
    for (const auto& g : gens) images.push_back(apply_automorphism(spec, B, g.elem));

    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            Element lhs = bracket(spec, gens[i].elem, gens[j].elem);
            lhs = apply_automorphism(spec, B, lhs);
            Element rhs = bracket(spec, images[i], images[j]);
            rhs.negate();
            lhs.axpy(Rational(1), rhs);
            if (!lhs.is_zero()) {
                json wit;
                wit["inputs"] = json::array({gens[i].label, gens[j].label});
                wit["residual"] = lhs.str();
                rep.fail_with(std::move(wit));
            }
        }
    rep.details["pairs"] = gens.size() * (gens.size() + 1) / 2;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify_kspan(int N, const IntegralMatrix& B, const Window& w) {
    if (N % 2 != 0) throw ArityError("verify_kspan: N must be even");
    VerificationReport rep;
    rep.check = "kspan-equality";
    rep.config["N"] = N;
    rep.config["window"] = w.radius;
    rep.config["B"] = B.to_json();
    auto t0 = std::chrono::steady_clock::now();

    IntegralMatrix Binv = B.inverse();
    IntegralMatrix BinvT = Binv.transpose();

    auto hyperplane_rows = [&](const Deg& normal) {
        // integer basis of { u : (u, normal) = 0 }
        RatMatrix rows(0, N);
        int js = -1;
        for (int i = 0; i < N; ++i)
            if (normal[i] != 0) { js = i; break; }
        if (js < 0) throw std::logic_error("zero normal");
        for (int i = 0; i < N; ++i) {
            if (i == js) continue;
            std::vector<Rational> row(N);
            row[i] = Rational(normal[js]);
            row[js] = Rational(-normal[i]);
            rows.append_row(std::move(row));
        }
        return rows;
    };

    size_t degrees = 0;
    for (size_t wi = 0; wi < w.size(); ++wi) {
        Deg s = w.at(wi);
        if (s.is_zero()) continue;
        ++degrees;
        // B(K) at degree Bs: images of the K_s basis
        RatMatrix ks = hyperplane_rows(bar(s));
        RatMatrix imageK(0, N);
        for (size_t i = 0; i < ks.rows(); ++i) {
            RatVec u(N);
            for (int j = 0; j < N; ++j) u[j] = ks.at(i, j);
            RatVec bu = B.apply(u);
            std::vector<Rational> row(N);
            for (int j = 0; j < N; ++j) row[j] = bu[j];
            imageK.append_row(std::move(row));
        }
        // K_B at degree Bs: { v : (B^{-1} v, bar s) = 0 } = hyperplane of B^{-T} bar s
        RatMatrix kb = hyperplane_rows(BinvT.apply(bar(s)));
        if (!RatMatrix::same_row_span(imageK, kb)) {
            json wit;
            wit["degree"] = s.str();
            wit["image_degree"] = B.apply(s).str();
            rep.fail_with(std::move(wit));
        }
    }
    rep.details["degrees"] = degrees;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

IntegralMatrix random_unimodular(int N, unsigned long long seed, int ops, long long max_entry) {
    std::mt19937_64 rng(seed);
    IntegralMatrix B = IntegralMatrix::identity(N);
    std::uniform_int_distribution<int> pick(0, N - 1);
    std::uniform_int_distribution<long long> coef(-max_entry, max_entry);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int it = 0; it < ops; ++it) {
        int op = kind(rng);
        if (op == 0) {
            // add c times row j to row i
            int i = pick(rng), j = pick(rng);
            long long c = coef(rng);
            if (i == j) continue;
            IntegralMatrix E = IntegralMatrix::identity(N);
            E.set(i, j, c);
            B = E * B;
        } else if (op == 1) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            IntegralMatrix E(N);
            for (int k = 0; k < N; ++k) E.set(k, k, 1);
            E.set(i, i, 0);
            E.set(j, j, 0);
            E.set(i, j, 1);
            E.set(j, i, 1);
            B = E * B;
        } else {
            int i = pick(rng);
            IntegralMatrix E = IntegralMatrix::identity(N);
            E.set(i, i, -1);
            B = E * B;
        }
    }
    if (!B.unimodular()) throw std::logic_error("random_unimodular: construction failure");
    return B;
}

}  // namespace toralab
