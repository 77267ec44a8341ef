#pragma once

#include <utility>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

// Raised when a product would exceed the configured degree cap.  The
// Frobenius push-forward inflates degrees stage by stage; failing loudly
// beats stalling on runaway coefficient growth.
class DegreeCapError : public std::runtime_error {
 public:
  explicit DegreeCapError(long degree);
  long degree;
};

long poly_degree_cap();
void set_poly_degree_cap(long cap);

// Dense univariate polynomial over Rat in the variable T.
// Canonical: no trailing zero coefficient; degree() of zero is -1.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(Rat(c)) {}
  Poly(Rat c);
  explicit Poly(std::vector<Rat> coeffs);
  static Poly variable();
  static Poly monomial(Rat c, long k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Coefficient of T^i, zero outside the stored range.
  const Rat& coeff(long i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;
  bool is_monic() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Poly monic() const;
  Rat eval(const Rat& x) const;

  // f(T) -> f(T^p).
  Poly dilate(long p) const;
  // Splits by exponent residue: f(T) = sum_{k=0}^{p-1} comp[k](T^p) * T^k.
  std::vector<Poly> split_residues(long p) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Prints the canonical expression string.
std::ostream& operator<<(std::ostream& out, const Poly& f);

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
// Quotient of an exact division; throws std::logic_error on a nonzero
// remainder (used as an internal consistency guard).
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd over Q[T] (primitive PRS over Z underneath).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& base, unsigned long e);

}  // namespace padic
