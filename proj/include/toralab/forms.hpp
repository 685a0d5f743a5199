#pragma once

#include "toralab/algebra.hpp"
#include "toralab/report.hpp"

namespace toralab {

/// Graded invariant bilinear form carried by tauS, tauH and tauD. Values are
/// given by a per-family table over symbol-pair classes; every unlisted pair
/// is zero, and every listed value carries the delta_{r+s,0} factor.
struct FormSpec {
    AlgebraSpec spec;

    explicit FormSpec(const AlgebraSpec& s) : spec(s) {
        if (s.family != Family::TauS && s.family != Family::TauH && s.family != Family::TauD)
            throw std::invalid_argument("FormSpec: no invariant form table for " + family_name(s.family));
    }
};

/// Bilinear extension of the family table; inputs are normalized first.
Rational form(const FormSpec& fs, const Element& a, const Element& b);

/// form(a,b) = form(b,a) over all window generator pairs.
VerificationReport verify_form_symmetry(const FormSpec& fs, const Window& w);

/// form(a,b) = 0 whenever deg a + deg b != 0, over all window pairs.
VerificationReport verify_form_gradedness(const FormSpec& fs, const Window& w);

/// ([x,y]|z) = (x|[y,z]) over window generator triples. Triples whose degrees
/// do not sum to zero vanish through the graded table; the sweep evaluates
/// every triple on the zero-sum shell exactly and samples the rest.
VerificationReport verify_invariance(const FormSpec& fs, const Window& w);

/// Exact full-rank check of the degree r vs degree -r pairing matrix for
/// every window degree; witnesses are radical vectors.
VerificationReport verify_nondegeneracy(const FormSpec& fs, const Window& w);

/// Decidable slices of the EALA axioms: the Cartan acts diagonally with the
/// expected eigenvalues (EA2, restricted), ad-nilpotency of real root vectors
/// on windowed slices (EA3, spot check), discreteness by construction (EA4)
/// and isotropic-root irreducibility witnesses (EA5(b)). The report is
/// labeled partial: EA3/EA4 are not decidable in full.
VerificationReport verify_ea_axioms(const FormSpec& fs, const Window& w, int nilpotency_bound = 8);

}  // namespace toralab
