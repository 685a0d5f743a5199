#pragma once

#include "toralab/modules.hpp"

namespace toralab {

/// One-dimensional module over the zero part of a decomposition of tauH:
/// the Cartan acts through the given weight, every graded zero-part symbol
/// acts as zero, and the K_i act by the weight's omega row (the level).
class TrivialTop : public WindowedModule {
public:
    TrivialTop(const AlgebraSpec& spec, Weight lam);

    std::string kind() const override { return "trivial-top"; }
    const AlgebraSpec& algebra() const override { return spec_; }
    std::vector<Deg> grades() const override { return {Deg(spec_.N)}; }
    bool materializable(const Deg& g) const override { return g.is_zero(); }
    int dim(const Deg& g) const override { return g.is_zero() ? 1 : 0; }
    Weight weight_of(const Deg&, int) const override { return lam_; }
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;

private:
    AlgebraSpec spec_;
    Weight lam_;
};

/// Verma-style induction from a zero-part module, truncated at a fixed depth
/// of the grading strictly lowered by the negative part. Basis vectors are
/// PBW monomials over the negative window generators applied to top vectors;
/// actions are computed by straightening, and products that leave the
/// truncation or the generator window surface as `exited` components.
class InducedModule : public WindowedModule {
public:
    InducedModule(const AlgebraSpec& spec, TriTag tag, const WindowedModule& top, int depth,
                  const Window& genw);

    std::string kind() const override { return "induced"; }
    const AlgebraSpec& algebra() const override { return spec_; }
    std::vector<Deg> grades() const override;
    bool materializable(const Deg& g) const override;
    int dim(const Deg& g) const override;
    Weight weight_of(const Deg& g, int i) const override;
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;

    /// Global basis bookkeeping.
    struct BasisKey {
        std::vector<int> mon;  // ascending generator indices
        Deg top_grade;
        int top_idx;
        bool operator<(const BasisKey& o) const {
            if (mon != o.mon) return mon < o.mon;
            if (!(top_grade == o.top_grade)) return top_grade < o.top_grade;
            return top_idx < o.top_idx;
        }
    };
    int depth_of(const std::vector<int>& mon) const;
    const std::vector<Generator>& neg_gens() const { return gens_; }
    const WindowedModule& top() const { return *top_; }
    /// (grade, index) pairs of the embedded top vectors.
    std::vector<std::pair<Deg, int>> top_embedding() const;
    const BasisKey& key_of(const Deg& grade, int i) const;

private:
    ModuleElem apply_symbol(const BasisSymbol& s, const Rational& coeff, const BasisKey& k) const;
    ModuleElem lift_top(const ModuleElem& tv, const std::vector<int>& mon) const;
    ModuleElem monomial_elem(const BasisKey& k, const Rational& c) const;

    AlgebraSpec spec_;
    TriTag tag_;
    const WindowedModule* top_;
    int depth_;
    Window genw_;
    std::vector<Generator> gens_;      // negative generators, deterministic order
    std::vector<int> gen_depth_;       // truncation weight per generator
    std::vector<Weight> gen_weight_;   // weight shift per generator
    std::map<Deg, std::vector<BasisKey>> basis_;
    std::map<std::string, std::pair<Deg, int>> index_;  // key-string -> (grade, idx)
};

/// Quotient of an induced module by the largest window-invariant graded
/// subspace meeting the top trivially, computed by iterated exact linear
/// algebra over the window-admissible action maps. Labeled window-approximate.
class QuotientModule : public WindowedModule {
public:
    QuotientModule(const InducedModule& parent, const Window& genw);

    std::string kind() const override { return "window-approximate simple quotient"; }
    const AlgebraSpec& algebra() const override { return parent_->algebra(); }
    std::vector<Deg> grades() const override;
    bool materializable(const Deg& g) const override { return quotient_dim_.count(g) > 0; }
    int dim(const Deg& g) const override;
    Weight weight_of(const Deg& g, int i) const override;
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;

    size_t removed_dimension() const { return removed_; }
    /// Projection of a parent vector into quotient coordinates.
    ModuleElem project(const ModuleElem& parent_vec) const;
    /// True if the top maps injectively into the quotient.
    bool top_injective() const;

private:
    const InducedModule* parent_;
    // global column layout over the parent basis
    std::vector<std::pair<Deg, int>> layout_;
    std::map<std::string, size_t> col_of_;
    RatMatrix radical_rref_;           // rows span the removed subspace, in RREF
    std::vector<size_t> radical_pivots_;
    std::vector<size_t> kept_columns_;  // parent columns representing the quotient
    std::map<Deg, std::vector<size_t>> kept_by_grade_;
    std::map<Deg, int> quotient_dim_;
    size_t removed_ = 0;
};

}  // namespace toralab
