#pragma once

#include "toralab/modules.hpp"

namespace toralab {

Rational rat_pow(const Rational& a, long long e);

/// Tensor product of finite-dimensional highest weight modules evaluated at
/// nonzero pairwise-distinct rational points, looped over N variables:
///   (X (x) t^r) (v_1 (x) .. (x) v_p (x) t^q)
///      = sum_i a_i^r v_1 (x) .. (x) X.v_i (x) .. (x) t^{q+r}
/// with a_i^r = prod_j a_{i,j}^{r_j}. Central symbols act as zero; degree
/// derivations act by q_i + shift_i.
class EvaluationModule : public WindowedModule {
public:
    EvaluationModule(const SimpleLieDatum& g, int N, std::vector<RatVec> points,
                     std::vector<std::vector<long long>> hw_fund, RatVec shift, Window win);

    std::string kind() const override { return "evaluation"; }
    const AlgebraSpec& algebra() const override { return spec_; }
    std::vector<Deg> grades() const override { return win_.all(); }
    bool materializable(const Deg&) const override { return true; }
    int dim(const Deg&) const override { return dim_; }
    Weight weight_of(const Deg& grade, int i) const override;
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg&, const RatVec&, const Deg&, int, ModuleElem&) const override {}
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                    ModuleElem& out) const override;

    int factors() const { return static_cast<int>(mods_.size()); }
    const FiniteModule& factor(int i) const { return mods_[i]; }
    Rational point_power(int i, const Deg& r) const;

    /// Thm-style irreducibility certificate: at every window degree r the
    /// functional sum_i lambda_i(.) a_i^r is nonzero on some Cartan element.
    json irreducibility_certificate(const Window& w) const;

private:
    AlgebraSpec spec_;
    std::vector<RatVec> points_;
    std::vector<FiniteModule> mods_;
    RatVec shift_;
    Window win_;
    int dim_;
    std::vector<int> strides_;
};

/// V(lambda-bar) (x) V_N (x) A with the Hamiltonian part acting through the
/// jet prescription on the fiber, g (x) A shifting the first factor, and the
/// central quotient acting as zero.
class RealizationModule : public WindowedModule {
public:
    RealizationModule(const SimpleLieDatum& g, FiniteModule vlam, JetModule jet, Window win);

    std::string kind() const override { return "realization"; }
    const AlgebraSpec& algebra() const override { return spec_; }
    std::vector<Deg> grades() const override { return win_.all(); }
    bool materializable(const Deg&) const override { return true; }
    int dim(const Deg&) const override { return vlam_.dim * jet_.fiber.dim; }
    Weight weight_of(const Deg& grade, int i) const override;
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg&, const RatVec&, const Deg&, int, ModuleElem&) const override {}
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                    ModuleElem& out) const override;

    const FiniteModule& vlam() const { return vlam_; }
    const JetModule& jet() const { return jet_; }
    int index_of(int a, int b) const { return a * jet_.fiber.dim + b; }

private:
    AlgebraSpec spec_;
    FiniteModule vlam_;
    JetModule jet_;
    Window win_;
};

RealizationModule realization_module(const SimpleLieDatum& g, const std::vector<long long>& hw_fund,
                                     SpRep fiber, RatVec u, RatVec w, const SigmaProfile& profile,
                                     const Window& win);

}  // namespace toralab
