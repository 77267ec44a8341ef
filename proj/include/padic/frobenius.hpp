#pragma once

#include "padic/newton.hpp"

namespace padic {

// Components of f along the splitting K(T~) = sum_k K(T~^p) * T~^k:
// f(T~) = sum_{k=0}^{p-1} components[k](T~^p) * T~^k.
struct Decomposition {
  std::vector<RatFunc> components;
};

Decomposition decompose(const RatFunc& f, long p);

// Matrix of multiplication by f on the basis 1, T~, ..., T~^{p-1} over
// K(T), T = T~^p: entry (i,j) = f_{i-j} for i >= j, T * f_{p+i-j} below.
MatrixRF mult_matrix(const RatFunc& f, long p);

// Matrix of multiplication by g(T~) / (p T~^{p-1}), the per-entry factor of
// the pushed connection; equals mult_matrix(g) * mult_matrix(T~) / (p T).
MatrixRF phi_star_entry(const RatFunc& g, long p);

// Push-forward along T -> T~^p: rank multiplies by p, the connection
// becomes H = phi_star(G) - D with D the diagonal d(T~^k) correction
// k/(pT) on the T~^k component of every block row; the module lives at the
// pushed point t' = p*t.
std::pair<DiffModule, PointSpec> pushforward(const DiffModule& m, const PointSpec& pt);

// The exact slope transform of the push-forward, log_p units, all-exact
// input at pt = (p, t):
//   lambda <= C:  p copies of lambda - 1 + (p-1)t
//   lambda >  C:  one copy of p*lambda and p-1 junk copies of pt - p/(p-1).
SlopeMultiset forward_slopes(const SlopeMultiset& s);

// Inverts the transform: reconstructs the rank-many constraints at the
// original point from p*rank constraints at the pushed point, resolving
// slopes that sat exactly on the Young cutoff by the junk-count identity.
// Throws std::invalid_argument on multiset shapes no push-forward output
// can have (corrupted input or an upstream bug).
SlopeMultiset invert_slopes(const SlopeMultiset& s, Index original_rank);

}  // namespace padic
