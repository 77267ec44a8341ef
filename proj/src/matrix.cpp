#include "padic/matrix.hpp"

namespace padic {

namespace {

// Positive rational content of a polynomial: gcd of coefficient numerators
// over lcm of denominators; content(0) = 0.
Rat content(const Poly& f) {
  Int num(0), den(1);
  for (const Rat& c : f.coeffs()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (num == 0) return Rat(0);
  return make_rat(num, den);
}

Rat content_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return b;
  if (b == 0) return a;
  Int num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return make_rat(num, den);
}

// Denominator-cleared, content-stripped polynomial lift of a matrix (plus
// an optional right-hand-side column).  det(A) = det(cells) * det_factor.
struct PolyGrid {
  Index rows, cols;
  std::vector<Poly> cells;
  RatFunc det_factor;
  Poly& at(Index i, Index j) { return cells[static_cast<size_t>(i * cols + j)]; }
};

PolyGrid clear_denominators(const MatrixRF& a, const VectorRF* extra) {
  PolyGrid g;
  g.rows = a.rows();
  g.cols = a.cols() + (extra ? 1 : 0);
  g.cells.assign(static_cast<size_t>(g.rows * g.cols), Poly());
  Poly den_product(1);
  Rat content_product(1);
  for (Index i = 0; i < g.rows; ++i) {
    Poly d(1);
    for (Index j = 0; j < a.cols(); ++j) d = lcm(d, a(i, j).den());
    if (extra) d = lcm(d, (*extra)(i).den());
    for (Index j = 0; j < a.cols(); ++j)
      g.at(i, j) = a(i, j).num() * exact_div(d, a(i, j).den());
    if (extra) g.at(i, a.cols()) = (*extra)(i).num() * exact_div(d, (*extra)(i).den());

    Rat row_content(0);
    for (Index j = 0; j < g.cols; ++j) row_content = content_gcd(row_content, content(g.at(i, j)));
    if (row_content == 0) row_content = Rat(1);
    Rat inv = 1 / row_content;
    for (Index j = 0; j < g.cols; ++j) g.at(i, j) = g.at(i, j) * inv;

    den_product *= d;
    content_product *= row_content;
  }
  g.det_factor = RatFunc(Poly(content_product), den_product);
  return g;
}

// Fraction-free forward elimination; returns the sign of the row
// permutation, or nullopt when a pivot column is entirely zero (singular).
std::optional<int> bareiss_forward(PolyGrid& g, Index n) {
  int sign = 1;
  Poly prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (g.at(k, k).is_zero()) {
      Index m = k + 1;
      while (m < n && g.at(m, k).is_zero()) ++m;
      if (m == n) return std::nullopt;
      for (Index j = 0; j < g.cols; ++j) std::swap(g.at(k, j), g.at(m, j));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < g.cols; ++j)
        g.at(i, j) = exact_div(g.at(k, k) * g.at(i, j) - g.at(i, k) * g.at(k, j), prev);
      g.at(i, k) = Poly();
    }
    prev = g.at(k, k);
  }
  return sign;
}

}  // namespace

RatFunc det(const MatrixRF& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const Index n = a.rows();
  if (n == 0) return RatFunc(1);
  PolyGrid g = clear_denominators(a, nullptr);
  auto sign = bareiss_forward(g, n);
  if (!sign) return RatFunc();
  Poly top = g.at(n - 1, n - 1);
  if (*sign < 0) top = -top;
  return RatFunc(top) * g.det_factor;
}

std::optional<VectorRF> solve(const MatrixRF& a, const VectorRF& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  const Index n = a.rows();
  VectorRF x(n);
  if (n == 0) return x;
  PolyGrid g = clear_denominators(a, &b);
  if (!bareiss_forward(g, n)) return std::nullopt;
  const Poly& last_pivot = g.at(n - 1, n - 1);
  if (last_pivot.is_zero()) return std::nullopt;
  // Fraction-free back substitution: by Cramer each x_j times the
  // determinant (the last pivot) is a polynomial, and the recurrence below
  // computes it with exact divisions only; one fraction per variable.
  std::vector<Poly> y(static_cast<size_t>(n));
  y[static_cast<size_t>(n - 1)] = g.at(n - 1, n);
  for (Index i = n - 2; i >= 0; --i) {
    Poly acc = g.at(i, n) * last_pivot;
    for (Index j = i + 1; j < n; ++j) acc -= g.at(i, j) * y[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = exact_div(acc, g.at(i, i));
  }
  for (Index i = 0; i < n; ++i) x(i) = RatFunc(y[static_cast<size_t>(i)], last_pivot);
  return x;
}

}  // namespace padic
