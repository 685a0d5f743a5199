#pragma once

#include <map>
#include <memory>

#include "toralab/algebra.hpp"
#include "toralab/jet.hpp"
#include "toralab/report.hpp"
#include "toralab/weights.hpp"

namespace toralab {

/// Sparse module vector over (grade, basis index). `exited` records that some
/// component fell outside the materialized grades and was dropped (windowed
/// truncation); exact modules defined by formulas never set it.
struct ModuleElem {
    std::map<std::pair<Deg, int>, Rational> c;
    bool exited = false;

    void add(const Deg& grade, int i, const Rational& v) {
        if (v.is_zero()) return;
        c[{grade, i}] += v;
    }
    void axpy(const Rational& k, const ModuleElem& o);
    void scale(const Rational& k);
    bool is_zero() const;
    void compact();
    friend bool operator==(const ModuleElem& a, const ModuleElem& b);
    std::string str() const;
};

/// Weight module materialized over a degree window, with exact single-symbol
/// action maps. Grades outside the window may still be materializable when
/// the module is defined by global formulas.
class WindowedModule {
public:
    virtual ~WindowedModule() = default;
    virtual std::string kind() const = 0;
    virtual const AlgebraSpec& algebra() const = 0;
    virtual std::vector<Deg> grades() const = 0;
    virtual bool materializable(const Deg& grade) const = 0;
    virtual int dim(const Deg& grade) const = 0;
    virtual Weight weight_of(const Deg& grade, int i) const = 0;
    virtual json parameters() const = 0;

    virtual void act_g_term(int gidx, const Deg& r, const Rational& coeff, const Deg& grade, int i,
                            ModuleElem& out) const = 0;
    virtual void act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                            ModuleElem& out) const = 0;
    virtual void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i,
                            ModuleElem& out) const = 0;

    ModuleElem act(const Element& x, const ModuleElem& v) const;
    ModuleElem basis(const Deg& grade, int i) const;
    /// {kind, parameters, window, graded-dims}
    json manifest() const;
    /// Exact rational CSV rows of the action of one symbol on the window basis.
    std::string action_csv(const BasisSymbol& s) const;
};

/// Helper for weights given in epsilon coordinates.
Weight weight_from_eps(const SimpleLieDatum& g, const std::vector<Rational>& eps, const RatVec& delta,
                       const RatVec& omega);

/// action([x,y]) = [action(x), action(y)] over all unordered pairs of window
/// generators, on every materialized basis vector.
VerificationReport verify_representation(const WindowedModule& V, const Window& algebra_window);

/// The canonical graded central generators act as zero.
VerificationReport verify_central_acts_trivially(const WindowedModule& V, const Window& w);

/// Graded subspace presented by explicit coordinate bases per grade.
struct GradedSubspace {
    std::map<Deg, std::vector<std::vector<Rational>>> basis;
    int dim(const Deg& grade) const {
        auto it = basis.find(grade);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    }
    size_t total() const {
        size_t t = 0;
        for (const auto& [g, b] : basis) t += b.size();
        return t;
    }
};

/// Exact kernel of the stacked positive-part actions of the decomposition.
GradedSubspace highest_weight_space(const WindowedModule& V, TriTag tag, const Window& genw);

/// Integrability diagnostics: local nilpotency of real root vectors within
/// the window and iteration bound (exits are inconclusive, first-class),
/// integrality of lambda(gamma^vee) over window weights, and Weyl-reflection
/// symmetry of weight multiplicities for window-representable reflections.
VerificationReport verify_integrability(const WindowedModule& V, const Window& w, int bound);

/// Restriction of a module to an invariant graded subspace; actions that
/// leave the subspace surface as errors.
class SubspaceModule : public WindowedModule {
public:
    SubspaceModule(const WindowedModule& parent, GradedSubspace sub);

    std::string kind() const override { return "subspace(" + parent_->kind() + ")"; }
    const AlgebraSpec& algebra() const override { return parent_->algebra(); }
    std::vector<Deg> grades() const override;
    bool materializable(const Deg& g) const override { return sub_.basis.count(g) > 0; }
    int dim(const Deg& g) const override { return sub_.dim(g); }
    Weight weight_of(const Deg& g, int i) const override;
    json parameters() const override;

    void act_g_term(int gidx, const Deg& r, const Rational& c, const Deg& grade, int i,
                    ModuleElem& out) const override;
    void act_k_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;
    void act_d_term(const Deg& r, const RatVec& u, const Deg& grade, int i, ModuleElem& out) const override;

    /// Parent-space representative of a subspace basis vector.
    ModuleElem embed(const Deg& grade, int i) const;

private:
    void act_parent(const ModuleElem& parent_img, ModuleElem& out) const;
    const WindowedModule* parent_;
    GradedSubspace sub_;
};

}  // namespace toralab
