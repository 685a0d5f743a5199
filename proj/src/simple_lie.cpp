#include "toralab/simple_lie.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace toralab {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat zero_mat(int n) { return Mat(n, std::vector<long long>(n, 0)); }

Mat commutator(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat c = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0 && b[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
        }
    return c;
}

long long trace_prod(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    long long t = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += a[i][k] * b[k][i];
    return t;
}

}  // namespace

SimpleLieDatum::SimpleLieDatum(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("sl_n requires n >= 2");
    if (n > kMaxArity) throw ArityError("sl_n: n exceeds supported arity");

    // Off-diagonal matrix units, then Cartan differences.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat m = zero_mat(n);
            m[i][j] = 1;
            basis_.push_back(m);
            std::ostringstream nm;
            nm << "E[" << i + 1 << "," << j + 1 << "]";
            names_.push_back(nm.str());
            Deg root(n);
            root.set(i, 1);
            root.set(j, -1);
            roots_of_basis_.push_back(root);
            delta_.emplace_back(root, static_cast<int>(basis_.size()) - 1);
        }
    cartan_start_ = static_cast<int>(basis_.size());
    for (int k = 0; k + 1 < n; ++k) {
        Mat m = zero_mat(n);
        m[k][k] = 1;
        m[k + 1][k + 1] = -1;
        basis_.push_back(m);
        std::ostringstream nm;
        nm << "E[" << k + 1 << "," << k + 1 << "]-E[" << k + 2 << "," << k + 2 << "]";
        names_.push_back(nm.str());
        roots_of_basis_.push_back(Deg(n));
    }

    for (int k = 0; k + 1 < n; ++k) {
        Deg a(n);
        a.set(k, 1);
        a.set(k + 1, -1);
        simple_roots_.push_back(a);
    }
    highest_root_ = Deg(n);
    highest_root_.set(0, 1);
    highest_root_.set(n - 1, -1);

    const int d = dim();
    brk_.resize(static_cast<size_t>(d) * d);
    form_.resize(static_cast<size_t>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat c = commutator(basis_[a], basis_[b]);
            // decompose: off-diagonal entries map straight onto matrix units,
            // the traceless diagonal onto partial sums of the Cartan basis
            std::vector<std::pair<int, long long>> terms;
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    if (c[i][j] != 0) terms.emplace_back(idx, c[i][j]);
                    ++idx;
                }
            long long partial = 0;
            for (int k = 0; k + 1 < n; ++k) {
                partial += c[k][k];
                if (partial != 0) terms.emplace_back(cartan_start_ + k, partial);
            }
            brk_[static_cast<size_t>(a) * d + b] = std::move(terms);
            form_[static_cast<size_t>(a) * d + b] = trace_prod(basis_[a], basis_[b]);
        }

    validate();
}

bool SimpleLieDatum::is_positive_root_vector(int idx) const {
    if (idx >= cartan_start_) return false;
    const Deg& r = roots_of_basis_[idx];
    for (int i = 0; i < r.arity(); ++i) {
        if (r[i] > 0) return true;
        if (r[i] < 0) return false;
    }
    return false;
}

int SimpleLieDatum::root_vector_index(const Deg& alpha) const {
    for (const auto& [root, idx] : delta_)
        if (root == alpha) return idx;
    return -1;
}

std::vector<long long> SimpleLieDatum::coroot_diag(const Deg& alpha) const {
    if (root_vector_index(alpha) < 0) throw std::invalid_argument("coroot_diag: not a root");
    std::vector<long long> diag(n_, 0);
    for (int i = 0; i < n_; ++i) diag[i] = alpha[i];
    return diag;
}

std::vector<long long> SimpleLieDatum::cartan_coords_of_diag(const std::vector<long long>& diag) const {
    long long sum = 0;
    for (long long v : diag) sum += v;
    if (sum != 0) throw std::invalid_argument("cartan_coords_of_diag: diagonal not traceless");
    std::vector<long long> coords(n_ - 1, 0);
    long long partial = 0;
    for (int k = 0; k + 1 < n_; ++k) {
        partial += diag[k];
        coords[k] = partial;
    }
    return coords;
}

long long SimpleLieDatum::root_eval_diag(const Deg& alpha, const std::vector<long long>& diag) {
    long long v = 0;
    for (int i = 0; i < alpha.arity(); ++i) v += alpha[i] * diag[i];
    return v;
}

void SimpleLieDatum::validate() const {
    const int d = dim();
    auto add_into = [&](std::map<int, long long>& acc, const std::vector<std::pair<int, long long>>& t,
                        long long scale) {
        for (const auto& [i, c] : t) acc[i] += scale * c;
    };
    // antisymmetry and Jacobi on the structure-constant table
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::map<int, long long> acc;
            add_into(acc, bracket(a, b), 1);
            add_into(acc, bracket(b, a), 1);
            for (const auto& [i, c] : acc)
                if (c != 0) throw std::logic_error("sl_n table: antisymmetry failure");
            if (form(a, b) != form(b, a)) throw std::logic_error("sl_n table: form not symmetric");
        }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                std::map<int, long long> acc;
                for (const auto& [i, ci] : bracket(a, b)) add_into(acc, bracket(i, c), ci);
                for (const auto& [i, ci] : bracket(b, c)) add_into(acc, bracket(i, a), ci);
                for (const auto& [i, ci] : bracket(c, a)) add_into(acc, bracket(i, b), ci);
                for (const auto& [i, v] : acc)
                    if (v != 0) throw std::logic_error("sl_n table: Jacobi failure");
                // invariance <[a,b],c> = <a,[b,c]>
                long long lhs = 0, rhs = 0;
                for (const auto& [i, ci] : bracket(a, b)) lhs += ci * form(i, c);
                for (const auto& [i, ci] : bracket(b, c)) rhs += ci * form(a, i);
                if (lhs != rhs) throw std::logic_error("sl_n table: form not invariant");
            }
    // form non-degenerate
    RatMatrix gram(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) gram.at(a, b) = Rational(form(a, b));
    if (gram.rank() != static_cast<size_t>(d)) throw std::logic_error("sl_n: degenerate form");
    // sl2 triples: [X_a, X_-a] = h_a, [h_a, X_a] = 2 X_a, <X_a, X_-a> = 2/(a,a) = 1
    for (const auto& [alpha, xi] : delta_) {
        int yi = root_vector_index(-alpha);
        if (yi < 0) throw std::logic_error("sl_n: missing opposite root");
        if (form(xi, yi) != 1) throw std::logic_error("sl_n: <X_a, X_-a> != 1");
        auto diag = coroot_diag(alpha);
        auto coords = cartan_coords_of_diag(diag);
        std::map<int, long long> acc;
        add_into(acc, bracket(xi, yi), 1);
        for (int k = 0; k + 1 < n_; ++k) acc[cartan_start_ + k] -= coords[k];
        for (const auto& [i, v] : acc)
            if (v != 0) throw std::logic_error("sl_n: [X_a, X_-a] != h_a");
        if (root_eval_diag(alpha, diag) != 2) throw std::logic_error("sl_n: alpha(h_a) != 2");
    }
}

const SimpleLieDatum& build_sl(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SimpleLieDatum>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<SimpleLieDatum>(n)).first;
    return *it->second;
}

RatMatrix FiniteModule::act(const std::vector<Rational>& g_coords) const {
    RatMatrix out(dim, dim);
    for (size_t a = 0; a < g_coords.size(); ++a) {
        if (g_coords[a].is_zero()) continue;
        out = out + g_coords[a] * action[a];
    }
    return out;
}

long long FiniteModule::weight_eval_diag(int vec, const std::vector<long long>& diag) const {
    long long v = 0;
    for (int i = 0; i < weights[vec].arity(); ++i) v += weights[vec][i] * diag[i];
    return v;
}

namespace {

// Basis of Sym^k: non-decreasing index tuples; of Lambda^k: increasing tuples.
void gen_tuples(int n, int k, int start, bool strict, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        gen_tuples(n, k, strict ? i + 1 : i, strict, cur, out);
        cur.pop_back();
    }
}

struct TensorPowerModule {
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, int> index;
    bool alternating;

    // E_ab acting as a derivation; returns image of basis vector v.
    void act_unit(int a, int b, int v, std::map<int, long long>& out) const {
        const std::vector<int>& tup = basis[v];
        for (size_t p = 0; p < tup.size(); ++p) {
            if (tup[p] != b) continue;
            std::vector<int> img = tup;
            img[p] = a;
            long long sign = 1;
            if (alternating) {
                // resort, counting transpositions; repeated index kills the term
                for (size_t q = 0; q < img.size(); ++q)
                    for (size_t r = q + 1; r < img.size(); ++r)
                        if (img[q] == img[r]) goto next_position;
                for (size_t q = 0; q < img.size(); ++q)
                    for (size_t r = q + 1; r < img.size(); ++r)
                        if (img[q] > img[r]) {
                            std::swap(img[q], img[r]);
                            sign = -sign;
                        }
            } else {
                std::sort(img.begin(), img.end());
            }
            out[index.at(img)] += sign;
        next_position:;
        }
    }
};

FiniteModule build_power(const SimpleLieDatum& g, int k, bool alternating, std::string name) {
    TensorPowerModule pw;
    pw.alternating = alternating;
    std::vector<int> cur;
    gen_tuples(g.n(), k, 0, alternating, cur, pw.basis);
    for (size_t i = 0; i < pw.basis.size(); ++i) pw.index[pw.basis[i]] = static_cast<int>(i);

    FiniteModule mod;
    mod.g = &g;
    mod.dim = static_cast<int>(pw.basis.size());
    mod.name = std::move(name);
    for (const auto& tup : pw.basis) {
        Deg w(g.n());
        for (int ix : tup) w.set(ix, w[ix] + 1);
        mod.weights.push_back(w);
    }
    for (int bi = 0; bi < g.dim(); ++bi) {
        RatMatrix m(pw.basis.size(), pw.basis.size());
        const auto& mat = g.basis_matrix(bi);
        for (int v = 0; v < mod.dim; ++v) {
            std::map<int, long long> img;
            for (int a = 0; a < g.n(); ++a)
                for (int b = 0; b < g.n(); ++b) {
                    if (mat[a][b] == 0) continue;
                    if (a == b) {
                        long long count = 0;
                        for (int ix : pw.basis[v])
                            if (ix == a) ++count;
                        img[v] += mat[a][b] * count;
                    } else {
                        std::map<int, long long> part;
                        pw.act_unit(a, b, v, part);
                        for (const auto& [w, c] : part) img[w] += mat[a][b] * c;
                    }
                }
            for (const auto& [w, c] : img)
                if (c != 0) m.at(w, v) = Rational(c);
        }
        mod.action.push_back(std::move(m));
    }
    // highest weight vector: all indices as low as possible
    std::vector<int> top;
    for (int i = 0; i < k; ++i) top.push_back(alternating ? i : 0);
    mod.hw_index = pw.index.at(top);
    mod.hw_fund.assign(g.rank(), 0);
    const Deg& w = mod.weights[mod.hw_index];
    for (int i = 0; i + 1 < g.n(); ++i) mod.hw_fund[i] = w[i] - w[i + 1];
    return mod;
}

void validate_module(const FiniteModule& m) {
    const SimpleLieDatum& g = *m.g;
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
            RatMatrix lhs(m.dim, m.dim);
            for (const auto& [i, c] : g.bracket(a, b)) lhs = lhs + Rational(c) * m.action[i];
            RatMatrix rhs = m.action[a] * m.action[b] - m.action[b] * m.action[a];
            if (!(lhs == rhs)) throw std::logic_error("module: bracket compatibility failure");
        }
    Rational wd = weyl_dim(g, m.hw_fund);
    if (wd != Rational(m.dim)) throw std::logic_error("module: Weyl dimension mismatch");
}

}  // namespace

FiniteModule irrep(const SimpleLieDatum& g, const std::vector<long long>& fund) {
    if (static_cast<int>(fund.size()) != g.rank())
        throw std::invalid_argument("irrep: fundamental coordinate count != rank");
    for (long long v : fund)
        if (v < 0) throw CapabilityError("irrep: weight not dominant integral");

    FiniteModule mod;
    bool all_zero = std::all_of(fund.begin(), fund.end(), [](long long v) { return v == 0; });
    int nonzero = 0, pos = -1;
    for (size_t i = 0; i < fund.size(); ++i)
        if (fund[i] != 0) { ++nonzero; pos = static_cast<int>(i); }

    if (all_zero) {
        mod = build_power(g, 0, false, "trivial");
    } else if (pos == 0) {
        std::ostringstream nm;
        nm << "Sym^" << fund[0] << "(defining)";
        if (nonzero == 1) mod = build_power(g, static_cast<int>(fund[0]), false, nm.str());
        else throw CapabilityError("irrep: unsupported highest weight for sl_" + std::to_string(g.n()));
    } else if (nonzero == 1 && fund[pos] == 1) {
        std::ostringstream nm;
        nm << "Alt^" << pos + 1 << "(defining)";
        mod = build_power(g, pos + 1, true, nm.str());
    } else {
        throw CapabilityError("irrep: unsupported highest weight for sl_" + std::to_string(g.n()));
    }
    validate_module(mod);
    return mod;
}

Rational weyl_dim(const SimpleLieDatum& g, const std::vector<long long>& fund) {
    // lambda + rho in epsilon coordinates; rho = half sum of positive roots
    int n = g.n();
    std::vector<Rational> lam(n), rho(n);
    // fundamental weight omega_k = e_1 + .. + e_k - (k/n) * (1,..,1)
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            Rational coef = Rational(i < k ? 1 : 0) - Rational(k, n);
            if (fund[k - 1] != 0) lam[i] += Rational(fund[k - 1]) * coef;
        }
    }
    for (int i = 0; i < n; ++i) rho[i] = Rational(n - 1 - 2 * i, 2);
    Rational num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= (lam[i] + rho[i]) - (lam[j] + rho[j]);
            den *= rho[i] - rho[j];
        }
    return num / den;
}

}  // namespace toralab
