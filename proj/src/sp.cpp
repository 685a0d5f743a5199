#include "toralab/sp.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace toralab {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat zero_mat(int n) { return Mat(n, std::vector<long long>(n, 0)); }

std::string unit_name(int i, int j) {
    std::ostringstream os;
    os << "E[" << i + 1 << "," << j + 1 << "]";
    return os.str();
}

}  // namespace

const SpBasis& sp_basis(int m) {
    if (m < 1 || 2 * m > kMaxArity) throw std::invalid_argument("sp_basis: m out of range");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SpBasis>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto b = std::make_unique<SpBasis>();
    b->m = m;
    const int n = 2 * m;
    // A block
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Mat x = zero_mat(n);
            x[i][j] += 1;
            x[m + j][m + i] -= 1;
            b->mats.push_back(std::move(x));
            b->names.push_back(unit_name(i, j) + "-" + unit_name(m + j, m + i));
        }
    // B block
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Mat x = zero_mat(n);
            if (i == j) {
                x[i][m + i] = 1;
                b->names.push_back(unit_name(i, m + i));
            } else {
                x[i][m + j] = 1;
                x[j][m + i] = 1;
                b->names.push_back(unit_name(i, m + j) + "+" + unit_name(j, m + i));
            }
            b->mats.push_back(std::move(x));
        }
    // C block
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Mat x = zero_mat(n);
            if (i == j) {
                x[m + i][i] = 1;
                b->names.push_back(unit_name(m + i, i));
            } else {
                x[m + i][j] = 1;
                x[m + j][i] = 1;
                b->names.push_back(unit_name(m + i, j) + "+" + unit_name(m + j, i));
            }
            b->mats.push_back(std::move(x));
        }
    if (b->dim() != m * (2 * m + 1)) throw std::logic_error("sp basis count mismatch");
    return *cache.emplace(m, std::move(b)).first->second;
}

std::vector<Rational> SpBasis::coords_of(const RatMatrix& x) const {
    const int n = 2 * m;
    if (x.rows() != static_cast<size_t>(n) || x.cols() != static_cast<size_t>(n))
        throw std::invalid_argument("coords_of: shape mismatch");
    std::vector<Rational> coords(dim());
    // A block entries determine coefficients directly; then B/C blocks.
    int idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) coords[idx++] = x.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) coords[idx++] = x.at(i, m + j);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) coords[idx++] = x.at(m + i, j);
    // verify the reconstruction: guards against arguments outside sp
    RatMatrix rec(n, n);
    for (int k = 0; k < dim(); ++k) {
        if (coords[k].is_zero()) continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (mats[k][a][b] != 0) rec.at(a, b) += coords[k] * Rational(mats[k][a][b]);
    }
    if (!(rec == x)) throw std::invalid_argument("coords_of: matrix not in sp_{2m}");
    return coords;
}

RatMatrix SpRep::act(const std::vector<Rational>& coords) const {
    RatMatrix out(dim, dim);
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        out = out + coords[k] * action[k];
    }
    return out;
}

namespace {

void validate_rep(const SpRep& rep) {
    const SpBasis& b = sp_basis(rep.m);
    const int n = 2 * rep.m;
    for (int x = 0; x < b.dim(); ++x)
        for (int y = 0; y < b.dim(); ++y) {
            // [b_x, b_y] in sp coordinates
            RatMatrix mx(n, n), my(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (b.mats[x][i][j] != 0) mx.at(i, j) = Rational(b.mats[x][i][j]);
                    if (b.mats[y][i][j] != 0) my.at(i, j) = Rational(b.mats[y][i][j]);
                }
            auto coords = b.coords_of(mx * my - my * mx);
            RatMatrix lhs = rep.action[x] * rep.action[y] - rep.action[y] * rep.action[x];
            RatMatrix rhs = rep.act(coords);
            if (!(lhs == rhs)) throw std::logic_error("sp rep: bracket compatibility failure");
        }
}

}  // namespace

SpRep sp_trivial(int m) {
    SpRep rep;
    rep.m = m;
    rep.dim = 1;
    rep.name = "trivial";
    rep.action.assign(sp_basis(m).dim(), RatMatrix(1, 1));
    return rep;
}

SpRep sp_defining(int m) {
    const SpBasis& b = sp_basis(m);
    SpRep rep;
    rep.m = m;
    rep.dim = 2 * m;
    rep.name = "defining";
    for (const auto& mat : b.mats) {
        RatMatrix a(rep.dim, rep.dim);
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j)
                if (mat[i][j] != 0) a.at(i, j) = Rational(mat[i][j]);
        rep.action.push_back(std::move(a));
    }
    validate_rep(rep);
    return rep;
}

SpRep sp_sl2_weight(long long k) {
    // sp_2 basis order: A = E11-E22 (h), B = E12 (e), C = E21 (f)
    if (k < 0) throw std::invalid_argument("sp_sl2_weight: k >= 0 required");
    SpRep rep;
    rep.m = 1;
    rep.dim = static_cast<int>(k) + 1;
    rep.name = "sl2-weight-" + std::to_string(k);
    RatMatrix h(rep.dim, rep.dim), e(rep.dim, rep.dim), f(rep.dim, rep.dim);
    for (int j = 0; j <= k; ++j) {
        h.at(j, j) = Rational(k - 2 * j);
        if (j > 0) e.at(j - 1, j) = Rational(k - j + 1);
        if (j < k) f.at(j + 1, j) = Rational(j + 1);
    }
    rep.action = {h, e, f};
    validate_rep(rep);
    return rep;
}

SpRep sp_sym_power(int m, int k) {
    // monomial basis of Sym^k(C^{2m}) with derivation action
    const SpBasis& b = sp_basis(m);
    const int n = 2 * m;
    std::vector<std::vector<int>> basis;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            basis.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            gen(i);
            cur.pop_back();
        }
    };
    gen(0);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    SpRep rep;
    rep.m = m;
    rep.dim = static_cast<int>(basis.size());
    rep.name = "sym^" + std::to_string(k) + "(defining)";
    for (const auto& mat : b.mats) {
        RatMatrix a(rep.dim, rep.dim);
        for (int v = 0; v < rep.dim; ++v) {
            for (size_t p = 0; p < basis[v].size(); ++p) {
                int col = basis[v][p];
                for (int row = 0; row < n; ++row) {
                    if (mat[row][col] == 0) continue;
                    std::vector<int> img = basis[v];
                    img[p] = row;
                    std::sort(img.begin(), img.end());
                    a.at(index.at(img), v) += Rational(mat[row][col]);
                }
            }
        }
        rep.action.push_back(std::move(a));
    }
    validate_rep(rep);
    return rep;
}

std::vector<Rational> sigma_coords(int m, const Deg& r, const SigmaProfile& p) {
    if (r.arity() != 2 * m) throw ArityError("sigma_coords: arity mismatch");
    const SpBasis& b = sp_basis(m);
    std::vector<Rational> coords(b.dim());
    auto a_idx = [&](int i, int j) { return i * m + j; };
    auto b_idx = [&](int i, int j) {  // i <= j
        return m * m + i * m - i * (i - 1) / 2 + (j - i);
    };
    auto c_idx = [&](int i, int j) {
        return m * m + m * (m + 1) / 2 + i * m - i * (i - 1) / 2 + (j - i);
    };
    for (int i = 0; i < m; ++i) {
        // f0: r_{m+i}^2 E_{m+i,i}
        coords[c_idx(i, i)] += p.c[0] * Rational(r[m + i] * r[m + i]);
        // f1: r_i r_{m+i} (E_ii - E_{m+i,m+i})
        coords[a_idx(i, i)] += p.c[1] * Rational(r[i] * r[m + i]);
        // f2: r_i^2 E_{i,m+i}
        coords[b_idx(i, i)] += p.c[2] * Rational(r[i] * r[i]);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            // f3: r_{m+i} r_{m+j} (E_{m+j,i} + E_{m+i,j})
            coords[c_idx(i, j)] += p.c[3] * Rational(r[m + i] * r[m + j]);
            // f5: - r_i r_j (E_{i,m+j} + E_{j,m+i})
            coords[b_idx(i, j)] -= p.c[5] * Rational(r[i] * r[j]);
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            // f4: r_i r_{m+j} (E_ij - E_{m+j,m+i})
            coords[a_idx(i, j)] += p.c[4] * Rational(r[i] * r[m + j]);
        }
    return coords;
}

RatMatrix sigma_matrix(int m, const Deg& r, const SigmaProfile& p) {
    const SpBasis& b = sp_basis(m);
    auto coords = sigma_coords(m, r, p);
    const int n = 2 * m;
    RatMatrix out(n, n);
    for (int k = 0; k < b.dim(); ++k) {
        if (coords[k].is_zero()) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b.mats[k][i][j] != 0) out.at(i, j) += coords[k] * Rational(b.mats[k][i][j]);
    }
    return out;
}

namespace {

bool sp_commutator_holds(const SpRep& fiber, const SigmaProfile& p, const Window& w, json* witness) {
    const int m = fiber.m;
    std::vector<RatMatrix> sig;
    sig.reserve(w.size());
    std::vector<Deg> degs = w.all();
    for (const Deg& r : degs) sig.push_back(fiber.act(sigma_coords(m, r, p)));
    Window w2(2 * w.radius, w.arity);
    std::map<std::string, RatMatrix> sums;  // sigma at degree sums outside the window
    auto sigma_at = [&](const Deg& d) -> RatMatrix {
        std::string k = d.str();
        auto it = sums.find(k);
        if (it == sums.end()) it = sums.emplace(k, fiber.act(sigma_coords(m, d, p))).first;
        return it->second;
    };
    for (size_t i = 0; i < degs.size(); ++i)
        for (size_t j = i; j < degs.size(); ++j) {
            const Deg& r = degs[i];
            const Deg& s = degs[j];
            Rational a(ipair(bar(r), s));
            RatMatrix lhs = sig[i] * sig[j] - sig[j] * sig[i];
            RatMatrix rhs = a * (sigma_at(r + s) - sig[i] - sig[j]);
            if (!(lhs == rhs)) {
                if (witness) {
                    (*witness)["r"] = r.str();
                    (*witness)["s"] = s.str();
                    (*witness)["residual"] = (lhs - rhs).str();
                }
                return false;
            }
        }
    return true;
}

}  // namespace

VerificationReport verify_sp_commutator(const SpRep& fiber, const SigmaProfile& p, const Window& w) {
    VerificationReport rep;
    rep.check = "sp-commutator";
    rep.config["m"] = fiber.m;
    rep.config["fiber"] = fiber.name;
    rep.config["window"] = w.radius;
    rep.config["profile"] = p.to_json();
    json wit;
    if (!sp_commutator_holds(fiber, p, w, &wit)) rep.fail_with(std::move(wit));
    rep.details["pairs"] = w.size() * (w.size() + 1) / 2;
    return rep;
}

SigmaProfile calibrate_jet_coefficients(int m, const SpRep& fiber, const Window& w, json* info) {
    if (w.radius < 2) throw std::invalid_argument("calibrate_jet_coefficients: window radius >= 2 required");
    if (w.arity != 2 * m) throw ArityError("calibrate_jet_coefficients: window arity must be 2m");
    const std::array<Rational, 6> values = {Rational(1),     Rational(-1), Rational(1, 2),
                                            Rational(-1, 2), Rational(2),  Rational(-2)};
    const int active = (m == 1) ? 3 : 6;
    long long total = 1;
    for (int i = 0; i < active; ++i) total *= 6;

    std::vector<SigmaProfile> passing;
    json best_witness;
    for (long long code = 0; code < total; ++code) {
        SigmaProfile p = SigmaProfile::printed();
        long long c = code;
        for (int k = 0; k < active; ++k) {
            p.c[k] = values[c % 6];
            c /= 6;
        }
        json wit;
        if (sp_commutator_holds(fiber, p, w, &wit)) {
            passing.push_back(p);
        } else if (best_witness.empty()) {
            best_witness = wit;
        }
    }
    if (info) {
        json profs = json::array();
        for (const auto& p : passing) profs.push_back(p.to_json());
        (*info)["passing_profiles"] = profs;
        (*info)["searched"] = total;
        (*info)["active_families"] = active;
    }
    if (passing.empty()) {
        throw CalibrationError("no profile in the search set satisfies the sp-commutator identity; "
                               "sample residual: " + best_witness.dump());
    }
    return passing.front();
}

}  // namespace toralab
