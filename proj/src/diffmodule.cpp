#include "padic/diffmodule.hpp"

#include <random>

namespace padic {

VectorRF nabla_apply(const DiffModule& m, const VectorRF& y) {
  if (y.rows() != m.rank()) throw std::invalid_argument("nabla_apply: dimension mismatch");
  return derivative(y) - m.G * y;
}

VectorRF katz_candidate(const DiffModule& m, const Rat& a) {
  const Index r = m.rank();
  // nab[k] has nabla^k(e_i) as column i.
  std::vector<MatrixRF> nab(static_cast<size_t>(r));
  nab[0] = MatrixRF::Identity(r, r);
  for (Index k = 1; k < r; ++k) {
    nab[static_cast<size_t>(k)] = MatrixRF(r, r);
    for (Index i = 0; i < r; ++i)
      nab[static_cast<size_t>(k)].col(i) = nabla_apply(m, nab[static_cast<size_t>(k - 1)].col(i));
  }
  const RatFunc shifted = RatFunc::variable() - RatFunc(a);
  RatFunc shifted_pow(1);
  VectorRF c = VectorRF::Zero(r);
  Int factorial(1);
  for (Index j = 0; j < r; ++j) {
    if (j > 0) {
      shifted_pow *= shifted;
      factorial *= j;
    }
    VectorRF inner = VectorRF::Zero(r);
    for (Index k = 0; k <= j; ++k) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
      Rat sign_binom = (k % 2 == 0) ? Rat(binom) : Rat(-binom);
      inner += RatFunc(sign_binom) * nab[static_cast<size_t>(k)].col(j - k);
    }
    c += shifted_pow * RatFunc(make_rat(1, factorial)) * inner;
  }
  return c;
}

std::optional<MatrixRF> is_cyclic(const DiffModule& m, const VectorRF& c) {
  if (c.rows() != m.rank()) throw std::invalid_argument("is_cyclic: dimension mismatch");
  const Index r = m.rank();
  MatrixRF basis(r, r);
  basis.col(0) = c;
  for (Index k = 1; k < r; ++k) basis.col(k) = nabla_apply(m, basis.col(k - 1));
  if (det(basis).is_zero()) return std::nullopt;
  return basis;
}

CyclicVector find_cyclic(const DiffModule& m, const FindCyclicOptions& opts) {
  const Index r = m.rank();
  long index = 0;

  auto try_candidate = [&](const VectorRF& c, const std::string& label)
      -> std::optional<CyclicVector> {
    auto basis = is_cyclic(m, c);
    if (basis) return CyclicVector{c, std::move(*basis), label, index};
    ++index;
    return std::nullopt;
  };

  for (size_t i = 0; i < opts.probe_vectors.size(); ++i) {
    if (auto hit = try_candidate(opts.probe_vectors[i], "probe:" + std::to_string(i)))
      return *hit;
  }
  if (opts.random_probes > 0) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (long i = 0; i < opts.random_probes; ++i) {
      VectorRF c(r);
      for (Index j = 0; j < r; ++j) c(j) = RatFunc(dist(rng));
      if (auto hit = try_candidate(c, "random:" + std::to_string(i))) return *hit;
    }
  }

  std::vector<Rat> constants;
  if (opts.katz_constants) {
    constants = *opts.katz_constants;
  } else {
    for (long a = 0; a <= r * (r - 1); ++a) constants.emplace_back(opts.katz_offset + a);
  }
  for (const Rat& a : constants) {
    if (auto hit = try_candidate(katz_candidate(m, a), "katz:" + to_string(a))) return *hit;
  }
  if (opts.katz_constants)
    throw std::runtime_error("find_cyclic: no cyclic vector among the supplied candidates");
  // r(r-1)+1 distinct constants always contain a cyclic Katz candidate, so
  // reaching this line means the arithmetic above is broken.
  throw std::logic_error("find_cyclic: Katz sweep exhausted; arithmetic bug");
}

DiffOperator operator_from_cyclic(const DiffModule& m, const VectorRF& c) {
  const Index r = m.rank();
  auto basis = is_cyclic(m, c);
  if (!basis) throw std::invalid_argument("operator_from_cyclic: vector is not cyclic");
  VectorRF top = nabla_apply(m, basis->col(r - 1));
  auto f = solve(*basis, top);
  if (!f) throw std::invalid_argument("operator_from_cyclic: singular cyclic basis");
  DiffOperator op;
  op.g.resize(static_cast<size_t>(r));
  for (Index i = 0; i < r; ++i) op.g[static_cast<size_t>(r - i - 1)] = -(*f)(i);
  return op;
}

DiffModule companion_module(const DiffOperator& op) {
  const Index r = op.order();
  if (r < 1) throw std::invalid_argument("companion_module: order must be >= 1");
  MatrixRF g = MatrixRF::Zero(r, r);
  for (Index j = 0; j + 1 < r; ++j) g(j + 1, j) = RatFunc(-1);
  for (Index i = 0; i < r; ++i) g(i, r - 1) = op.coeff(r - i);
  return DiffModule(std::move(g));
}

DiffModule direct_sum(const DiffModule& a, const DiffModule& b) {
  const Index n = a.rank(), m = b.rank();
  MatrixRF g = MatrixRF::Zero(n + m, n + m);
  g.topLeftCorner(n, n) = a.G;
  g.bottomRightCorner(m, m) = b.G;
  return DiffModule(std::move(g));
}

}  // namespace padic
