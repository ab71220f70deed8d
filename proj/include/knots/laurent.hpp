#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "knots/errors.hpp"

namespace knots {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in one formal variable with integer exponents
/// and arbitrary-precision integer coefficients.  Terms are kept sorted by
/// exponent with no stored zeros.  The same type is used for polynomials in
/// the bracket variable A and (reinterpreted) for polynomials in t with
/// exponents in quarter-t units.
class Laurent {
public:
  Laurent() = default;
  static Laurent monomial(int exp, BigInt coeff = 1);
  static Laurent one() { return monomial(0); }

  /// Weight of one closed circle in the bracket state sum: -A^2 - A^-2.
  static const Laurent& circle_weight();

  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;
  BigInt coeff(int exp) const;
  const std::vector<std::pair<int, BigInt>>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent operator+(const Laurent& rhs) const;
  Laurent operator-(const Laurent& rhs) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& rhs) const;
  bool operator==(const Laurent& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }

  /// this += p * coeff * x^shift, the workhorse of the state-sum engines.
  void add_scaled(const Laurent& p, int shift, const BigInt& coeff);

  Laurent times_monomial(int shift, const BigInt& coeff) const;

  /// Exact division; throws DivisionNotExact when the remainder is nonzero.
  Laurent div_exact(const Laurent& divisor) const;

  /// Substitute x -> x^-1 (negate all exponents).
  Laurent reversed() const;

  /// Substitute x -> x^k for integer k >= 1 (scale all exponents).
  Laurent stretched(int k) const;

  /// Evaluate at x = exp(i * angle), one floating conversion at the end.
  std::complex<double> eval_unit(double angle) const;

  /// Render like "-A^3 + 2 - A^-2"; exponents are divided by exp_unit
  /// (use 4 to print quarter-t-unit polynomials in t; fractional powers
  /// print as t^(k/4) or t^(k/2)).
  std::string to_string(const std::string& var, int exp_unit = 1) const;

private:
  // ascending exponent, no zero coefficients
  std::vector<std::pair<int, BigInt>> terms_;
  void normalize();
};

}  // namespace knots
