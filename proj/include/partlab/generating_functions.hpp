#pragma once

#include "partlab/paths.hpp"
#include "partlab/series.hpp"

#include <vector>

namespace partlab {

namespace detail {

inline TruncatedSeries poly(std::vector<Rational> coeffs, int order) {
  return TruncatedSeries::polynomial(std::move(coeffs), order);
}

/// beta_{j,j} = 1 and beta_{i,j} = j x prod_{s=i+1}^{j-1} (s x - 1) for i < j.
inline TruncatedSeries beta(int i, int j, int order) {
  if (i == j) return TruncatedSeries::constant(1, order);
  TruncatedSeries b = TruncatedSeries::monomial(j, 1, order);
  for (int s = i + 1; s <= j - 1; ++s) b *= poly({-1, s}, order);
  return b;
}

}  // namespace detail

/// Generating function of 12...k12-avoiding partitions:
///
///   ( x^{k-1} y / (1 - x y) + sum_{j=0}^{k-2} sum_{i=0}^{j} (-1)^{i+j} x^i beta_{i,j} )
///   / ( 1 - sum_{j=0}^{k-2} sum_{i=0}^{j} (-1)^{i+j} i x beta_{i,j} )
///
/// with y = (1 - (k-2)x - sqrt((1-kx)^2 - 4x^2)) / (2x(1 - (k-2)x)).
inline TruncatedSeries gf_fk(int k, int order) {
  if (k < 2) throw DomainError("gf_fk needs k >= 2");
  if (order < 0) throw DomainError("negative series order");
  // y loses one order to the division by x.
  const int work = order + 1;
  const auto x = TruncatedSeries::x(work);
  const auto one = TruncatedSeries::constant(1, work);
  const auto lin = detail::poly({1, -(k - 2)}, work);  // 1 - (k-2)x
  const auto disc = detail::poly({1, -k}, work) * detail::poly({1, -k}, work) -
                    TruncatedSeries::monomial(4, 2, work);
  const auto y = (lin - sqrt(disc)) / (Rational(2) * x * lin);

  const int o = y.order();
  const auto xo = x.truncated(o);
  TruncatedSeries numerator = TruncatedSeries::monomial(1, k - 1, o) * y / (one.truncated(o) - xo * y);
  TruncatedSeries denominator = TruncatedSeries::constant(1, o);
  for (int j = 0; j <= k - 2; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Rational sign = (i + j) % 2 == 0 ? 1 : -1;
      const auto b = detail::beta(i, j, o);
      numerator += sign * (TruncatedSeries::monomial(1, i, o) * b);
      denominator -= (sign * i) * (xo * b);
    }
  }
  return (numerator / denominator).truncated(order);
}

/// (3 - 3x - sqrt(1 - 6x + 5x^2)) / (2(1 - x)): 2-distant noncrossing partitions.
inline TruncatedSeries gf_d2(int order) {
  const auto root = sqrt(detail::poly({1, -6, 5}, order));
  return (detail::poly({3, -3}, order) - root) / detail::poly({2, -2}, order);
}

/// (2 - 3x + x^2 - x sqrt(1 - 6x + x^2)) / (2(1 - 3x + 3x^2)): 3-distant
/// noncrossing partitions.
inline TruncatedSeries gf_e3(int order) {
  const auto root = sqrt(detail::poly({1, -6, 1}, order));
  return (detail::poly({2, -3, 1}, order) - TruncatedSeries::x(order) * root) /
         detail::poly({2, -6, 6}, order);
}

/// D = sum_n (e_{n+1} - e_n) x^n in closed form:
/// (1 - 2x - x^2 - (1 - x) sqrt(1 - 6x + x^2)) / (2(1 - 3x + 3x^2)).
inline TruncatedSeries gf_e3_difference(int order) {
  const auto root = sqrt(detail::poly({1, -6, 1}, order));
  return (detail::poly({1, -2, -1}, order) - detail::poly({1, -1}, order) * root) /
         detail::poly({2, -6, 6}, order);
}

/// (1 - 3x + 3x^2) D^2 - (1 - 2x - x^2) D + x; vanishes for the D above.
inline TruncatedSeries e3_difference_residual(const TruncatedSeries& d) {
  const int o = d.order();
  return detail::poly({1, -3, 3}, o) * d * d - detail::poly({1, -2, -1}, o) * d +
         TruncatedSeries::x(o);
}

/// Path-weight generating function A_0 of a weight scheme, from the fixed
/// points A_h = 1 + b_h x A_h + lambda_{h+1} x^2 A_{h+1} A_h. Heights at or
/// above the stable height share one series, which satisfies the quadratic
/// A = 1 + b x A + lambda x^2 A^2. Each substitution round fixes at least one
/// more coefficient, so order + 1 rounds per level suffice.
inline TruncatedSeries motzkin_gf(const WeightScheme& scheme, int order) {
  if (order < 0) throw DomainError("negative series order");
  const auto x = TruncatedSeries::x(order);
  const auto one = TruncatedSeries::constant(1, order);
  auto x2 = x * x;
  const int top = scheme.stable_height();

  TruncatedSeries above = one;
  {
    const Rational b = scheme.horizontal(top);
    const Rational lambda = scheme.down(top + 1);
    for (int round = 0; round <= order; ++round) {
      above = one + b * (x * above) + lambda * (x2 * above * above);
    }
  }
  for (int h = top - 1; h >= 0; --h) {
    const Rational b = scheme.horizontal(h);
    const Rational lambda = scheme.down(h + 1);
    TruncatedSeries level = one;
    for (int round = 0; round <= order; ++round) {
      level = one + b * (x * level) + lambda * (x2 * above * level);
    }
    above = level;
  }
  return above;
}

/// Weighted Motzkin generating function for b = (1, 2, 3, 3, ...),
/// lambda = (1, 2, 2, ...). The levels are
///   A_2 = 1 + 3x A_2 + 2x^2 A_2^2,
///   A_1 = 1 + 2x A_1 + 2x^2 A_2 A_1,
///   A   = 1 +  x A   +  x^2 A_1 A.
inline TruncatedSeries gf_motzkin_weighted(int order) {
  return motzkin_gf(WeightScheme::three_distant(), order);
}

/// exp(m x + e^x - 1): coefficient n times n! counts partitions of [m+n]
/// whose first m elements are heads.
inline TruncatedSeries egf_p_heads(int m, int order) {
  if (m < 0) throw DomainError("egf_p_heads needs m >= 0");
  const auto x = TruncatedSeries::x(order);
  const auto ex_minus_one = exp(x) - TruncatedSeries::constant(1, order);
  return exp(Rational(m) * x + ex_minus_one);
}

}  // namespace partlab
