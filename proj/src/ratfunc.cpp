#include "padic/ratfunc.hpp"

namespace padic {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.is_monic()) {
    Rat inv = 1 / den_.leading();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-reduce first so the gcds in canonicalize() see small inputs.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? exact_div(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? exact_div(o.den_, g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? exact_div(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? exact_div(den_, g2) : den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  return *this * RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::derivative() const {
  if (den_.is_one()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

ExtVal gauss_val(const Poly& f, const PointSpec& pt) {
  ExtVal best = ExtVal::infinity();
  for (long i = 0; i <= f.degree(); ++i) {
    const Rat& a = f.coeff(i);
    if (a == 0) continue;
    ExtVal v = vp(a, pt.p) - Rat(Rat(i) * pt.t);
    if (v < best) best = v;
  }
  return best;
}

ExtVal gauss_val(const RatFunc& f, const PointSpec& pt) {
  if (f.is_zero()) return ExtVal::infinity();
  return ExtVal(Rat(gauss_val(f.num(), pt).value() - gauss_val(f.den(), pt).value()));
}

}  // namespace padic
