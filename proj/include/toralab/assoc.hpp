#pragma once

#include "toralab/modules.hpp"

namespace toralab {

struct NonAssociativizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Family of grade-shift operators t^r over a graded space.
class ShiftSystem {
public:
    virtual ~ShiftSystem() = default;
    virtual std::vector<Deg> grades() const = 0;
    virtual int dim(const Deg& grade) const = 0;
    virtual bool materializable(const Deg&) const { return true; }
    virtual ModuleElem apply(const Deg& r, const ModuleElem& v) const = 0;
    ModuleElem basis(const Deg& grade, int i) const {
        ModuleElem v;
        v.add(grade, i, Rational(1));
        return v;
    }
};

/// The literal shift action of the Laurent ring on a jet module.
class JetShiftSystem : public ShiftSystem {
public:
    JetShiftSystem(const JetModule& J, const Window& w) : jet_(&J), win_(w) {}
    std::vector<Deg> grades() const override { return win_.all(); }
    int dim(const Deg&) const override { return jet_->fiber.dim; }
    ModuleElem apply(const Deg& r, const ModuleElem& v) const override;

private:
    const JetModule* jet_;
    Window win_;
};

struct AssocResult {
    Rational lambda_alpha;
    Rational mu_alpha;
    Rational c;  // scalar of h_alpha at t^0
    std::shared_ptr<ShiftSystem> taction;
    json details;
};

/// Recovers an associative Laurent-ring action from the operators
/// h_alpha (x) t^r on a module where h_alpha acts by the nonzero scalar c:
/// extracts lambda_alpha and mu_alpha from operator products, sets
/// t^r = (h_alpha (x) t^r)/lambda_alpha and t^0 = h_alpha/c, and verifies
/// t^r t^s = t^{r+s} across the window. Non-proportional products or a
/// failing product law raise NonAssociativizable with a witness.
AssocResult associativize(const WindowedModule& V, const Deg& alpha_root, const Window& w);

}  // namespace toralab
