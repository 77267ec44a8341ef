#pragma once

#include "padic/point.hpp"
#include "padic/poly.hpp"

namespace padic {

// Rational function num/den over Q in one variable T, kept canonical:
// gcd(num, den) = 1 and den monic, so equality is structural.  K(T) is a
// field and every operation used by the pipeline stays inside it.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(Rat c) : num_(std::move(c)), den_(1) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
  RatFunc(Poly num, Poly den);
  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

// Prints the canonical expression string.
std::ostream& operator<<(std::ostream& out, const RatFunc& f);

// Gauss valuation -log_p |f|_rho at rho = p^t: for a polynomial,
// min_i (vp(a_i) - i*t); for a fraction, V(num) - V(den); V(0) = +infinity.
ExtVal gauss_val(const Poly& f, const PointSpec& pt);
ExtVal gauss_val(const RatFunc& f, const PointSpec& pt);

}  // namespace padic
