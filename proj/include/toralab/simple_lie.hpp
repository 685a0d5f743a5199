#pragma once

#include <string>
#include <vector>

#include "toralab/degree.hpp"
#include "toralab/linalg.hpp"

namespace toralab {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Concrete realization of a finite-dimensional simple Lie algebra: sl_n on
/// the traceless matrix basis with the trace form, so every structure
/// constant is an integer and all roots are long.
///
/// Basis order: matrix units E_ij (i != j, row-major over pairs), then the
/// Cartan elements E_kk - E_{k+1,k+1}.
class SimpleLieDatum {
public:
    explicit SimpleLieDatum(int n);

    int n() const { return n_; }
    int rank() const { return n_ - 1; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int cartan_start() const { return cartan_start_; }

    const std::string& basis_name(int idx) const { return names_[idx]; }
    /// Root of a basis vector in epsilon coordinates (zero Deg for Cartan).
    const Deg& basis_root(int idx) const { return roots_of_basis_[idx]; }
    bool is_root_vector(int idx) const { return idx < cartan_start_; }
    bool is_positive_root_vector(int idx) const;

    /// [basis a, basis b] as a sparse list of (basis idx, integer coeff).
    const std::vector<std::pair<int, long long>>& bracket(int a, int b) const {
        return brk_[static_cast<size_t>(a) * basis_.size() + b];
    }
    /// Trace form <a, b>.
    long long form(int a, int b) const { return form_[static_cast<size_t>(a) * basis_.size() + b]; }

    /// All roots (epsilon coordinates) with their root-vector basis index.
    const std::vector<std::pair<Deg, int>>& roots() const { return delta_; }
    const std::vector<Deg>& simple_roots() const { return simple_roots_; }
    const Deg& highest_root() const { return highest_root_; }

    int root_vector_index(const Deg& alpha) const;  // -1 if not a root
    /// Co-root h_alpha of alpha = eps_i - eps_j, as an integer diagonal.
    std::vector<long long> coroot_diag(const Deg& alpha) const;
    /// Coordinates of a traceless integer diagonal over the Cartan basis slots.
    std::vector<long long> cartan_coords_of_diag(const std::vector<long long>& diag) const;
    /// alpha(h) for a diagonal h.
    static long long root_eval_diag(const Deg& alpha, const std::vector<long long>& diag);

    /// (alpha, beta) under the form induced on h^* (here the standard dot of
    /// epsilon coordinates).
    static long long root_pairing(const Deg& alpha, const Deg& beta) { return ipair(alpha, beta); }

    /// Basis matrices as integer n x n arrays (row-major).
    const std::vector<std::vector<long long>>& basis_matrix(int idx) const { return basis_[idx]; }

private:
    void validate() const;  // antisymmetry, Jacobi, form invariance, sl2 triples

    int n_;
    int cartan_start_;
    std::vector<std::vector<std::vector<long long>>> basis_;
    std::vector<std::string> names_;
    std::vector<Deg> roots_of_basis_;
    std::vector<std::vector<std::pair<int, long long>>> brk_;
    std::vector<long long> form_;
    std::vector<std::pair<Deg, int>> delta_;
    std::vector<Deg> simple_roots_;
    Deg highest_root_;
};

/// Builds sl_n; n >= 2.
const SimpleLieDatum& build_sl(int n);

/// Finite-dimensional module with exact action matrices, one per g-basis
/// element, and a weight attached to every basis vector (epsilon coordinates).
struct FiniteModule {
    const SimpleLieDatum* g = nullptr;
    int dim = 0;
    std::string name;
    std::vector<Deg> weights;          // per basis vector, arity n
    std::vector<RatMatrix> action;     // per g-basis element
    std::vector<long long> hw_fund;    // highest weight, fundamental coordinates
    int hw_index = 0;                  // basis vector carrying the highest weight

    RatMatrix act(const std::vector<Rational>& g_coords) const;  // sum of actions
    long long weight_eval_diag(int vec, const std::vector<long long>& diag) const;
};

/// Highest-weight irreducibles. Supported: any m >= 0 for sl_2; for sl_n the
/// trivial module, Sym^k of the defining module (m = (k,0,..,0)) and exterior
/// powers (m = a single fundamental weight). Anything else raises
/// CapabilityError rather than building a wrong module.
FiniteModule irrep(const SimpleLieDatum& g, const std::vector<long long>& fund_coords);

/// Exact Weyl dimension formula for a dominant integral weight.
Rational weyl_dim(const SimpleLieDatum& g, const std::vector<long long>& fund_coords);

}  // namespace toralab
