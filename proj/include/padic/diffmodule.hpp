#pragma once

#include <string>
#include <vector>

#include "padic/matrix.hpp"

namespace padic {

// A differential module over (K(T), d/dT) presented by its connection
// matrix: on coordinate vectors, nabla(y) = y' - G y, so horizontal
// sections solve y' = G y.  Every other module inherits this one sign
// convention; the companion/operator round-trip test pins it.
struct DiffModule {
  MatrixRF G;

  explicit DiffModule(MatrixRF g) : G(std::move(g)) {
    if (G.rows() != G.cols() || G.rows() < 1)
      throw std::invalid_argument("DiffModule: connection matrix must be square, rank >= 1");
  }
  Index rank() const { return G.rows(); }
};

// Monic differential operator d^r + g_1 d^{r-1} + ... + g_r (g_0 = 1).
struct DiffOperator {
  std::vector<RatFunc> g;  // g[i] holds g_{i+1}

  Index order() const { return static_cast<Index>(g.size()); }
  // Coefficient g_i for i = 1..r.
  const RatFunc& coeff(Index i) const { return g.at(static_cast<size_t>(i - 1)); }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.g == b.g; }
};

VectorRF nabla_apply(const DiffModule& m, const VectorRF& y);

// Katz candidate built on the standard basis:
//   c(e, T-a) = sum_j ((T-a)^j / j!) sum_k (-1)^k binom(j,k) nabla^k(e_{j-k}).
VectorRF katz_candidate(const DiffModule& m, const Rat& a);

// The candidate basis [c | nabla c | ... | nabla^{r-1} c] when it is one.
std::optional<MatrixRF> is_cyclic(const DiffModule& m, const VectorRF& c);

struct FindCyclicOptions {
  // Katz constants tried are offset, offset+1, ..., offset+r(r-1): any
  // r(r-1)+1 distinct constants carry the guarantee, so shifting the window
  // forces a different (still certain) choice.
  long katz_offset = 0;
  // Explicit override of the Katz constant list (tests only; an arbitrary
  // list loses the guarantee).
  std::optional<std::vector<Rat>> katz_constants;
  // Probe vectors tried before the Katz sweep, then seeded random constant
  // vectors, as a cheap shortcut on modules with obvious cyclic vectors.
  std::vector<VectorRF> probe_vectors;
  long random_probes = 0;
  unsigned long seed = 1;
};

struct CyclicVector {
  VectorRF c;
  MatrixRF basis;          // columns c, nabla c, ..., nabla^{r-1} c
  std::string candidate;   // e.g. "katz:2" or "probe:0"
  long candidate_index;    // position in the tried sequence
};

CyclicVector find_cyclic(const DiffModule& m, const FindCyclicOptions& opts = {});

// Reads off the operator of a cyclic basis: with c_i = nabla^i(c) and
// nabla^r(c) = sum f_i c_i, the coefficients are g_{r-i} = -f_i.
DiffOperator operator_from_cyclic(const DiffModule& m, const VectorRF& c);

// Module of the quotient by the operator, basis (classes of) 1, d, ...,
// d^{r-1}; emits G = -A where A is the companion matrix of that action.
DiffModule companion_module(const DiffOperator& op);

DiffModule direct_sum(const DiffModule& a, const DiffModule& b);

}  // namespace padic
