#pragma once

#include <vector>

#include "cecoh/matrix.hpp"

namespace cecoh {

/// Betti numbers b_0..b_N of a space of dimension N.
using BettiVector = std::vector<long>;

long euler_characteristic(const BettiVector& b);

/// Per-degree matrices of an automorphism acting on cohomology;
/// on_degree[k] must be square of size b_k.
struct AutomorphismAction {
    std::vector<QMatrix> on_degree;
};

/// Betti numbers of the blow-up of X (dimension 2N) along Y of codimension
/// 2k: b_m(X~) = b_m(X) + Σ_{i=1}^{k-1} b_{m-2i}(Y), out-of-range terms zero.
/// The correction module is free over H*(Y) with one generator in each
/// dimension 2i, 1 ≤ i ≤ k-1; codim 2 contributes nothing.
BettiVector blowup_betti(const BettiVector& ambient, const BettiVector& sub, int codim);

/// Betti numbers of the mapping torus of an automorphism:
/// b_k = dim ker(A_k - Id) + dim coker(A_{k-1} - Id).
BettiVector mapping_torus_betti(const BettiVector& b, const AutomorphismAction& action);

/// Product Betti numbers by convolution.
BettiVector kunneth_betti(const BettiVector& a, const BettiVector& b);

}  // namespace cecoh
