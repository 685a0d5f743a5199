#include "toralab/verify_algebra.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace toralab {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

json window_config(const AlgebraSpec& spec, const Window& w) {
    json j;
    j["family"] = family_name(spec.family);
    j["N"] = spec.N;
    if (spec.g) j["g"] = "sl" + std::to_string(spec.g->n());
    j["window"] = w.radius;
    return j;
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct IndexedWitness {
    size_t i, j, k;
    json body;
    bool operator<(const IndexedWitness& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return k < o.k;
    }
};

}  // namespace

std::vector<Generator> window_generators(const AlgebraSpec& spec, const Window& w) {
    if (w.arity != spec.N) throw ArityError("window_generators: arity mismatch");
    std::vector<Generator> gens;
    for (size_t i = 0; i < w.size(); ++i) {
        auto part = canonical_generators(spec, w.at(i));
        for (auto& g : part) gens.push_back(std::move(g));
    }
    return gens;
}

VerificationReport verify_antisymmetry(const AlgebraSpec& spec, const Window& w, int threads) {
    VerificationReport rep;
    rep.check = "bracket-antisymmetry";
    rep.config = window_config(spec, w);
    double t0 = now_seconds();

    std::vector<Generator> gens = window_generators(spec, w);
    const size_t n = gens.size();
    const int nt = thread_count(threads);
    std::atomic<size_t> next{0};
    std::vector<std::vector<IndexedWitness>> found(nt);

    auto worker = [&](int tid) {
        Element lhs;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            for (size_t j = i; j < n; ++j) {
                lhs.clear();
                bracket_raw(spec, gens[i].elem, gens[j].elem, lhs);
                bracket_raw(spec, gens[j].elem, gens[i].elem, lhs);
                normal_form(spec, lhs);
                if (!lhs.is_zero()) {
                    json wit;
                    wit["inputs"] = json::array({gens[i].label, gens[j].label});
                    wit["residual"] = lhs.str();
                    found[tid].push_back(IndexedWitness{i, j, 0, std::move(wit)});
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();

    std::vector<IndexedWitness> all;
    for (auto& v : found)
        for (auto& x : v) all.push_back(std::move(x));
    std::sort(all.begin(), all.end());
    for (auto& x : all) rep.fail_with(std::move(x.body));

    rep.details["generators"] = n;
    rep.details["pairs"] = n * (n + 1) / 2;
    rep.seconds = now_seconds() - t0;
    return rep;
}

VerificationReport verify_jacobi(const AlgebraSpec& spec, const Window& w, int threads) {
    VerificationReport rep;
    rep.check = "jacobi";
    rep.config = window_config(spec, w);
    double t0 = now_seconds();

    std::vector<Generator> gens = window_generators(spec, w);
    const size_t n = gens.size();
    const int nt = thread_count(threads);
    std::atomic<size_t> next{0};
    std::vector<std::vector<IndexedWitness>> found(nt);

    auto worker = [&](int tid) {
        Element ab, bc, ca, res;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            const Element& a = gens[i].elem;
            for (size_t j = i; j < n; ++j) {
                const Element& b = gens[j].elem;
                ab.clear();
                bracket_raw(spec, a, b, ab);
                for (size_t k = j; k < n; ++k) {
                    const Element& c = gens[k].elem;
                    res.clear();
                    bracket_raw(spec, ab, c, res);
                    bc.clear();
                    bracket_raw(spec, b, c, bc);
                    bracket_raw(spec, bc, a, res);
                    ca.clear();
                    bracket_raw(spec, c, a, ca);
                    bracket_raw(spec, ca, b, res);
                    normal_form(spec, res);
                    if (!res.is_zero()) {
                        json wit;
                        wit["inputs"] = json::array({gens[i].label, gens[j].label, gens[k].label});
                        wit["residual"] = res.str();
                        found[tid].push_back(IndexedWitness{i, j, k, std::move(wit)});
                    }
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();

    std::vector<IndexedWitness> all;
    for (auto& v : found)
        for (auto& x : v) all.push_back(std::move(x));
    std::sort(all.begin(), all.end());
    for (auto& x : all) rep.fail_with(std::move(x.body));

    rep.details["generators"] = n;
    rep.details["triples"] = n * (n + 1) * (n + 2) / 6;
    rep.seconds = now_seconds() - t0;
    return rep;
}

namespace {

// Allowed output parts for a bracket of the given parts; empty = unconstrained.
std::vector<TriPart> closure_rule(TriTag tag, TriPart a, TriPart b) {
    if (a == b) return {a};
    if (a == TriPart::Zero) return {b};
    if (b == TriPart::Zero) return {a};
    if (tag != TriTag::LevelZero) {
        auto extreme = [](TriPart p) { return p == TriPart::PP || p == TriPart::MM; };
        auto middle = [](TriPart p) { return p == TriPart::P || p == TriPart::M; };
        if (extreme(a) && middle(b)) return {a};
        if (extreme(b) && middle(a)) return {b};
    }
    return {};
}

}  // namespace

VerificationReport verify_closure(const AlgebraSpec& spec, TriTag tag, const Window& w) {
    VerificationReport rep;
    rep.check = "triangular-closure";
    rep.config = window_config(spec, w);
    rep.config["decomposition"] = tag == TriTag::N2 ? "N2" : (tag == TriTag::GeneralN ? "generalN" : "levelzero");
    double t0 = now_seconds();

    std::vector<Generator> gens = window_generators(spec, w);
    std::vector<TriPart> parts;
    parts.reserve(gens.size());
    for (const auto& g : gens) {
        auto syms = g.elem.symbols();
        if (syms.size() != 1) throw std::logic_error("canonical generator is not a single symbol");
        parts.push_back(triangular_part(spec, tag, syms[0].first));
    }

    size_t checked = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i; j < gens.size(); ++j) {
            std::vector<TriPart> allowed = closure_rule(tag, parts[i], parts[j]);
            if (allowed.empty()) continue;
            Element br;
            bracket_raw(spec, gens[i].elem, gens[j].elem, br);
            normal_form(spec, br);
            ++checked;
            for (const auto& [sym, coeff] : br.symbols()) {
                (void)coeff;
                TriPart p = triangular_part(spec, tag, sym);
                bool ok = false;
                for (TriPart q : allowed) ok = ok || (p == q);
                if (!ok) {
                    json wit;
                    wit["inputs"] = json::array({gens[i].label, gens[j].label});
                    wit["parts"] = json::array({tri_part_name(parts[i]), tri_part_name(parts[j])});
                    wit["offending_term"] = sym.str();
                    wit["term_part"] = tri_part_name(p);
                    rep.fail_with(std::move(wit));
                }
            }
        }
    }
    rep.details["generators"] = gens.size();
    rep.details["constrained_pairs"] = checked;
    rep.seconds = now_seconds() - t0;
    return rep;
}

}  // namespace toralab
