#pragma once

#include "partlab/numeric.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partlab {

/// A formal power series known exactly up to x^order, with rational
/// coefficients. Binary operations keep the smaller of the two orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : coeffs_(checked_size(order)) {}

  TruncatedSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static TruncatedSeries constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series x (zero when order is 0).
  static TruncatedSeries x(int order) { return monomial(1, 1, order); }

  static TruncatedSeries monomial(const Rational& c, int power, int order) {
    TruncatedSeries s(order);
    if (power >= 0 && power <= order) s.coeffs_[power] = c;
    return s;
  }

  /// Polynomial with the given low-to-high coefficients, truncated to order.
  static TruncatedSeries polynomial(std::vector<Rational> coeffs, int order) {
    return TruncatedSeries(std::move(coeffs), order);
  }

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Rational& operator[](int i) const { return coeffs_.at(i); }

  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  [[nodiscard]] std::optional<int> valuation() const {
    for (int i = 0; i <= order(); ++i) {
      if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
  }

  [[nodiscard]] bool is_zero() const { return !valuation().has_value(); }

  [[nodiscard]] TruncatedSeries truncated(int order) const {
    if (order > this->order()) {
      throw ArithmeticError("cannot extend a series from order " + std::to_string(this->order()) +
                            " to " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1),
                           order);
  }

  /// Multiplication by x^k; the result is exact to order + k.
  [[nodiscard]] TruncatedSeries shifted_up(int k) const {
    TruncatedSeries s(order() + k);
    for (int i = 0; i <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
  }

  /// Division by x^k; the first k coefficients must vanish.
  [[nodiscard]] TruncatedSeries shifted_down(int k) const {
    if (k > order()) throw ArithmeticError("shift exceeds the series order");
    for (int i = 0; i < k; ++i) {
      if (coeffs_[i] != 0) {
        throw ArithmeticError("cannot divide by x^" + std::to_string(k) + ": coefficient " +
                              std::to_string(i) + " is nonzero");
      }
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()), order() - k);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries s(a.order());
    for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = -a.coeffs_[i];
    return s;
  }

  /// Cauchy product truncated to the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= s.order(); ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return s;
  }

  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries s(a.order());
    for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = c * a.coeffs_[i];
    return s;
  }

  /// Exact quotient. Leading zeros of the divisor are cancelled against the
  /// dividend, so the result order drops by valuation(b).
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto vb = b.valuation();
    if (!vb) throw ArithmeticError("division by the zero series");
    const auto va = a.valuation();
    if (va && *va < *vb) {
      throw ArithmeticError("dividend valuation " + std::to_string(*va) +
                            " is below divisor valuation " + std::to_string(*vb));
    }
    const int order = std::min(a.order(), b.order()) - *vb;
    if (order < 0) throw ArithmeticError("divisor valuation exceeds the available order");
    const Rational& lead = b.coeffs_[*vb];
    TruncatedSeries q(order);
    for (int n = 0; n <= order; ++n) {
      Rational value = a.coeffs_[n + *vb];
      for (int i = 1; i <= n; ++i) value -= b.coeffs_[i + *vb] * q.coeffs_[n - i];
      q.coeffs_[n] = value / lead;
    }
    return q;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "c0 + c1*x + ... + cN*x^N" including zero terms.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (int i = 0; i <= order(); ++i) {
      std::string c = coeffs_[i].str();
      if (i == 0) {
        out = c;
        continue;
      }
      const bool negative = !c.empty() && c[0] == '-';
      out += negative ? " - " : " + ";
      out += negative ? c.substr(1) : c;
      out += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    return out;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw ArithmeticError("negative series order");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Rational> coeffs_;
};

/// Square root of a series with constant term 1.
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a[0] != 1) throw ArithmeticError("sqrt needs constant term 1, got " + a[0].str());
  std::vector<Rational> s(a.order() + 1);
  s[0] = 1;
  for (int n = 1; n <= a.order(); ++n) {
    Rational value = a[n];
    for (int i = 1; i < n; ++i) value -= s[i] * s[n - i];
    s[n] = value / 2;
  }
  return TruncatedSeries(std::move(s), a.order());
}

/// exp of a series with constant term 0, from e' = a' e.
inline TruncatedSeries exp(const TruncatedSeries& a) {
  if (a[0] != 0) throw ArithmeticError("exp needs constant term 0, got " + a[0].str());
  std::vector<Rational> e(a.order() + 1);
  e[0] = 1;
  for (int n = 1; n <= a.order(); ++n) {
    Rational value = 0;
    for (int k = 1; k <= n; ++k) value += Rational(k) * a[k] * e[n - k];
    e[n] = value / n;
  }
  return TruncatedSeries(std::move(e), a.order());
}

/// Coefficients as integers; throws if any coefficient is fractional.
inline std::vector<BigInt> integer_coefficients(const TruncatedSeries& s) {
  std::vector<BigInt> out;
  for (int i = 0; i <= s.order(); ++i) {
    if (boost::multiprecision::denominator(s[i]) != 1) {
      throw ArithmeticError("coefficient " + std::to_string(i) + " is not an integer: " + s[i].str());
    }
    out.push_back(boost::multiprecision::numerator(s[i]));
  }
  return out;
}

}  // namespace partlab
