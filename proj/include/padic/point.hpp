#pragma once

#include "padic/rational.hpp"

namespace padic {

// The Gauss point xi_rho of the disk |T| <= rho = p^t, carried around as the
// prime together with t = log_p(rho).  All valuations downstream are in
// -log_p units and all radii in +log_p units, so every derived threshold is
// an exact rational.
struct PointSpec {
  long p;
  Rat t;

  // Defaults to the Gauss point of the unit disk.
  PointSpec() : p(2), t(0) {}
  PointSpec(long prime, Rat log_radius) : p(prime), t(std::move(log_radius)) {
    if (!is_prime(p)) throw std::invalid_argument("PointSpec: p must be prime");
  }

  // -log_p(omega) where omega = |p|^{1/(p-1)}.
  Rat omega_shift() const { return make_rat(1, Int(p) - 1); }
  // C = log_p(omega * rho); Young's comparison is blind at and above C.
  Rat cutoff() const { return t - omega_shift(); }
  // log_p(omega^p * rho^p): the value of the junk slopes contributed by the
  // push-forward at the pushed point.
  Rat junk_threshold() const { return Rat(p) * t - make_rat(Int(p), Int(p) - 1); }
  // The point xi_{rho^p} seen by the pushed-forward module.
  PointSpec pushed() const { return PointSpec(p, Rat(Rat(p) * t)); }

  friend bool operator==(const PointSpec& a, const PointSpec& b) {
    return a.p == b.p && a.t == b.t;
  }
  friend bool operator!=(const PointSpec& a, const PointSpec& b) { return !(a == b); }
};

}  // namespace padic
