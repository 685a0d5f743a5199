#pragma once

#include "toralab/algebra.hpp"
#include "toralab/report.hpp"

namespace toralab {

/// All canonical generators with degrees in the window, in degree order.
std::vector<Generator> window_generators(const AlgebraSpec& spec, const Window& w);

/// [a,b] + [b,a] = 0 over all unordered generator pairs in the window.
VerificationReport verify_antisymmetry(const AlgebraSpec& spec, const Window& w, int threads = 0);

/// Cyclic Jacobi sum reduces to zero in normal form, over every unordered
/// triple of canonical window generators. Combined with the exhaustive
/// antisymmetry pass this covers all ordered triples (the residual is an
/// alternating trilinear form).
VerificationReport verify_jacobi(const AlgebraSpec& spec, const Window& w, int threads = 0);

/// Bracket lands in the parts dictated by the decomposition: each part is
/// closed, the zero part normalizes every part, and the extreme parts absorb
/// the middle ones (five-part decompositions only).
VerificationReport verify_closure(const AlgebraSpec& spec, TriTag tag, const Window& w);

}  // namespace toralab
