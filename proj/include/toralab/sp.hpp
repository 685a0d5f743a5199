#pragma once

#include <string>
#include <vector>

#include "toralab/degree.hpp"
#include "toralab/linalg.hpp"
#include "toralab/report.hpp"

namespace toralab {

/// Basis of sp_{2m} for the form with blocks [[0, I], [-I, 0]]:
///   A block:  E_ij - E_{m+j,m+i}            (all i, j <= m)
///   B block:  E_{i,m+j} + E_{j,m+i} (i < j)  and  E_{i,m+i}
///   C block:  E_{m+i,j} + E_{m+j,i} (i < j)  and  E_{m+i,i}
/// Count m(2m+1).
struct SpBasis {
    int m = 0;
    std::vector<std::vector<std::vector<long long>>> mats;  // 2m x 2m integer matrices
    std::vector<std::string> names;

    int dim() const { return static_cast<int>(mats.size()); }
    /// Coordinates of a 2m x 2m matrix over the basis; throws if outside sp.
    std::vector<Rational> coords_of(const RatMatrix& x) const;
};

const SpBasis& sp_basis(int m);

/// Finite-dimensional sp_{2m} module with exact action matrices, one per
/// basis element. Bracket compatibility is validated at construction.
struct SpRep {
    int m = 0;
    int dim = 0;
    std::string name;
    std::vector<RatMatrix> action;

    RatMatrix act(const std::vector<Rational>& coords) const;
};

SpRep sp_trivial(int m);
SpRep sp_defining(int m);
/// m = 1 only: sp_2 = sl_2 highest weight k (dimension k+1).
SpRep sp_sl2_weight(long long k);
/// Sym^k of the defining module.
SpRep sp_sym_power(int m, int k);

/// Multipliers on the six summand families of the quadratic sp-valued map;
/// the printed form corresponds to all multipliers equal to 1:
///   f0: sum_i r_{m+i}^2 E_{m+i,i}
///   f1: sum_i r_i r_{m+i} (E_ii - E_{m+i,m+i})
///   f2: sum_i r_i^2 E_{i,m+i}
///   f3: sum_{i<j} r_{m+i} r_{m+j} (E_{m+j,i} + E_{m+i,j})
///   f4: sum_{i!=j} r_i r_{m+j} (E_ij - E_{m+j,m+i})
///   f5: sum_{i<j} - r_i r_j (E_{i,m+j} + E_{j,m+i})
/// Families f3..f5 are empty for m = 1.
struct SigmaProfile {
    std::array<Rational, 6> c;

    static SigmaProfile printed() {
        SigmaProfile p;
        for (auto& x : p.c) x = Rational(1);
        return p;
    }
    static SigmaProfile scaled(const SigmaProfile& base, const Rational& k) {
        SigmaProfile p = base;
        for (auto& x : p.c) x *= k;
        return p;
    }
    bool operator==(const SigmaProfile& o) const { return c == o.c; }
    json to_json() const {
        json j = json::array();
        for (const auto& x : c) j.push_back(x.str());
        return j;
    }
};

/// Coordinates of sigma(r) over sp_basis(m) under the profile; quadratic in r.
std::vector<Rational> sigma_coords(int m, const Deg& r, const SigmaProfile& p);

/// sigma(r) as a 2m x 2m matrix (defining representation).
RatMatrix sigma_matrix(int m, const Deg& r, const SigmaProfile& p);

/// Exact check of [sigma(r), sigma(s)] = (bar r, s)(sigma(r+s) - sigma(r) -
/// sigma(s)) as operators on the fiber, over all window pairs.
VerificationReport verify_sp_commutator(const SpRep& fiber, const SigmaProfile& p, const Window& w);

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Searches multipliers in {1, -1, 1/2, -1/2, 2, -2} per active summand
/// family and returns the first profile (in deterministic search order)
/// whose sp-commutator identity holds on the fiber over the window. The
/// full passing set is reported in `info`.
SigmaProfile calibrate_jet_coefficients(int m, const SpRep& fiber, const Window& w, json* info = nullptr);

}  // namespace toralab
