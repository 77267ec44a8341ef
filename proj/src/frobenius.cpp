#include "padic/frobenius.hpp"

#include <map>

namespace padic {

namespace {

// Multiplication matrix on 1, T~, ..., T~^{p-1} from ready components.
MatrixRF matrix_from_components(const std::vector<RatFunc>& comp, long p) {
  const RatFunc tvar = RatFunc::variable();
  MatrixRF mu(p, p);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j)
      mu(i, j) = i >= j ? comp[static_cast<size_t>(i - j)]
                        : tvar * comp[static_cast<size_t>(p + i - j)];
  return mu;
}

// Norm of den from K(T~) down to K(T): det of the multiplication matrix of
// den over Q[T].  den(T~) divides norm(T~^p) exactly, which is what makes
// the component split stay inside Q[T].
Poly norm_poly(const Poly& den, long p) {
  std::vector<Poly> comp = den.split_residues(p);
  MatrixRF mu(p, p);
  const RatFunc tvar = RatFunc::variable();
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j)
      mu(i, j) = i >= j ? RatFunc(comp[static_cast<size_t>(i - j)])
                        : tvar * RatFunc(comp[static_cast<size_t>(p + i - j)]);
  RatFunc d = det(mu);
  if (!d.den().is_one()) throw std::logic_error("norm_poly: non-polynomial norm");
  return d.num();
}

}  // namespace

Decomposition decompose(const RatFunc& f, long p) {
  Decomposition out;
  out.components.assign(static_cast<size_t>(p), RatFunc());
  if (f.is_zero()) return out;
  if (f.den().is_one()) {
    std::vector<Poly> parts = f.num().split_residues(p);
    for (long k = 0; k < p; ++k) out.components[static_cast<size_t>(k)] = RatFunc(parts[static_cast<size_t>(k)]);
    return out;
  }
  Poly norm = norm_poly(f.den(), p);
  Poly cofactor = exact_div(norm.dilate(p), f.den());
  std::vector<Poly> parts = (f.num() * cofactor).split_residues(p);
  for (long k = 0; k < p; ++k)
    out.components[static_cast<size_t>(k)] = RatFunc(parts[static_cast<size_t>(k)], norm);
  return out;
}

MatrixRF mult_matrix(const RatFunc& f, long p) {
  return matrix_from_components(decompose(f, p).components, p);
}

MatrixRF phi_star_entry(const RatFunc& g, long p) {
  // Components of g*T~ are the components of g shifted once, with the top
  // one wrapping around multiplied by T; dividing by pT then realizes
  // multiplication by g / (p T~^{p-1}).
  std::vector<RatFunc> comp = decompose(g, p).components;
  std::vector<RatFunc> shifted(static_cast<size_t>(p));
  shifted[0] = RatFunc::variable() * comp[static_cast<size_t>(p - 1)];
  for (long k = 1; k < p; ++k) shifted[static_cast<size_t>(k)] = comp[static_cast<size_t>(k - 1)];
  const RatFunc inv_pt = RatFunc(Poly(make_rat(1, p)), Poly::variable());
  return matrix_from_components(shifted, p) * inv_pt;
}

std::pair<DiffModule, PointSpec> pushforward(const DiffModule& m, const PointSpec& pt) {
  const long p = pt.p;
  const Index r = m.rank();
  MatrixRF h(r * p, r * p);
  for (Index bi = 0; bi < r; ++bi)
    for (Index bj = 0; bj < r; ++bj)
      h.block(bi * p, bj * p, p, p) = phi_star_entry(m.G(bi, bj), p);
  // d(T~^k) = k T~^{k-1} d(T~) contributes k/(pT) on each component line.
  for (Index bi = 0; bi < r; ++bi)
    for (long k = 1; k < p; ++k)
      h(bi * p + k, bi * p + k) -= RatFunc(Poly(make_rat(k, p)), Poly::variable());
  return {DiffModule(std::move(h)), pt.pushed()};
}

SlopeMultiset forward_slopes(const SlopeMultiset& s) {
  const PointSpec& pt = s.point;
  const Rat cutoff = pt.cutoff();
  const Rat junk = pt.junk_threshold();
  const Rat small_shift = Rat(pt.p - 1) * pt.t - 1;
  SlopeMultiset out{pt.pushed(), {}};
  for (const SlopeEntry& e : s.entries) {
    if (!e.exact())
      throw std::invalid_argument("forward_slopes: requires an all-exact multiset");
    if (e.value <= cutoff) {
      for (long i = 0; i < pt.p; ++i)
        out.entries.push_back(SlopeEntry::make_exact(Rat(e.value + small_shift)));
    } else {
      out.entries.push_back(SlopeEntry::make_exact(Rat(Rat(pt.p) * e.value)));
      for (long i = 0; i + 1 < pt.p; ++i) out.entries.push_back(SlopeEntry::make_exact(junk));
    }
  }
  out.sort_canonical();
  return out;
}

SlopeMultiset invert_slopes(const SlopeMultiset& s, Index original_rank) {
  const long p = s.point.p;
  const PointSpec orig(p, Rat(s.point.t / p));
  const Rat junk = orig.junk_threshold();          // p*t - p/(p-1)
  const Rat pushed_cutoff = s.point.cutoff();      // p*t - 1/(p-1)
  const Rat small_unshift = Rat(1) - Rat(p - 1) * orig.t;

  if (static_cast<Index>(s.entries.size()) != original_rank * p)
    throw std::invalid_argument("invert_slopes: entry count is not p * rank");

  std::map<Rat, long> small_groups;
  long at_junk = 0;
  SlopeMultiset out{orig, {}};
  long recovered_large = 0;
  for (const SlopeEntry& e : s.entries) {
    if (e.exact()) {
      if (e.value < junk) {
        ++small_groups[e.value];
      } else if (e.value == junk) {
        ++at_junk;
      } else {
        out.entries.push_back(SlopeEntry::make_exact(Rat(e.value / p)));
        ++recovered_large;
      }
    } else {
      if (e.value < pushed_cutoff)
        throw std::invalid_argument("invert_slopes: censored bound below the pushed cutoff");
      out.entries.push_back(SlopeEntry::at_least(Rat(e.value / p)));
      ++recovered_large;
    }
  }

  long n_small = 0;
  for (const auto& [value, count] : small_groups) {
    if (count % p != 0)
      throw std::invalid_argument("invert_slopes: small-slope multiplicity not divisible by p");
    for (long i = 0; i < count / p; ++i)
      out.entries.push_back(SlopeEntry::make_exact(Rat(value + small_unshift)));
    n_small += count / p;
  }

  // Slopes that sat exactly on the Young cutoff C land on the junk value
  // p-fold; everything larger contributes p-1 junk copies.  Counting junk
  // entries therefore pins how many original slopes equal C.
  long boundary = at_junk - (p - 1) * (original_rank - n_small);
  if (boundary < 0)
    throw std::invalid_argument("invert_slopes: junk count below the censored demand");
  for (long i = 0; i < boundary; ++i)
    out.entries.push_back(SlopeEntry::make_exact(orig.cutoff()));

  if (n_small + boundary + recovered_large != original_rank)
    throw std::invalid_argument("invert_slopes: recovered count mismatch");
  out.sort_canonical();
  return out;
}

}  // namespace padic
