#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace padic {

// Exact scalars. Rat is kept canonical by GMP: reduced, denominator > 0,
// so structural equality is value equality.
using Int = mpz_class;
using Rat = mpq_class;

// Builds a reduced rational from an arbitrary num/den pair.
Rat make_rat(const Int& num, const Int& den);

// Accepts "a" or "a/b" with an optional leading minus, nothing else.
Rat parse_rat(const std::string& text);

// Canonical "a" / "a/b" rendering.
std::string to_string(const Rat& x);

bool is_prime(long p);

// A valuation value: a rational, or +infinity (the valuation of 0).
// PlusInfinity is absorbing for addition and maximal for ordering.
class ExtVal {
 public:
  ExtVal() : finite_(true), v_(0) {}
  ExtVal(Rat v) : finite_(true), v_(std::move(v)) {}
  ExtVal(long v) : finite_(true), v_(v) {}
  static ExtVal infinity() {
    ExtVal e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::logic_error("ExtVal: value() of +infinity");
    return v_;
  }

  ExtVal operator+(const ExtVal& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtVal(Rat(v_ + o.v_));
  }
  ExtVal operator-(const Rat& shift) const {
    if (!finite_) return infinity();
    return ExtVal(Rat(v_ - shift));
  }

  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
  friend bool operator<(const ExtVal& a, const ExtVal& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
  friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
  friend bool operator>=(const ExtVal& a, const ExtVal& b) { return !(a < b); }

 private:
  bool finite_;
  Rat v_;
};

inline ExtVal min(const ExtVal& a, const ExtVal& b) { return a < b ? a : b; }

std::string to_string(const ExtVal& v);

inline std::ostream& operator<<(std::ostream& out, const ExtVal& v) {
  return out << to_string(v);
}

// p-adic valuation of a nonzero integer.
long vp(const Int& n, long p);

// p-adic valuation of a rational; vp(0) = +infinity.
ExtVal vp(const Rat& x, long p);

// Legendre's formula: v_p(n!) = sum_{i>=1} floor(n/p^i).
unsigned long vp_factorial(unsigned long n, long p);

}  // namespace padic
