#pragma once

#include "canstrip/rational.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace canstrip {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients[i] is the coefficient of t^i. The representation is always
/// normalised: the highest stored coefficient is nonzero. The zero polynomial
/// stores no coefficients and reports degree() == kZeroDegree. Every
/// operation in this module is exact; nothing here rounds.
class ExactPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rat> coefficients);
  /// Convenience for literals; element i is the coefficient of t^i, so
  /// {"3", "7/3", "2"} is 2t^2 + (7/3)t + 3.
  static ExactPolynomial from_strings(std::initializer_list<const char*> coeffs);
  static ExactPolynomial monomial(unsigned power, const Rat& scale = Rat(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  const Rat& coeff(size_t i) const;
  const Rat& leading() const;

  Rat operator()(const Rat& t) const;  // exact Horner evaluation

  ExactPolynomial derivative() const;

  bool operator==(const ExactPolynomial&) const = default;

 private:
  std::vector<Rat> coeffs_;
  void normalize();
};

/// Exact integer values of a function on consecutive integer arguments:
/// values[k] is the value at offset + k.
struct ValueTable {
  std::vector<Int> values;
  long offset = 0;
};

/// Unique polynomial of degree <= degree through the first degree+1 table
/// entries, by Newton forward differences in the binomial basis
/// C(t - offset, j). Surplus entries are verified against the result;
/// disagreement means the true degree exceeds the claim.
ExactPolynomial interpolate(const ValueTable& table, int degree);

/// q(t) = p(t - j), exactly.
ExactPolynomial shift(const ExactPolynomial& p, long j);

/// Exact coefficient-wise combination sum_i terms[i].first * terms[i].second,
/// with leading cancellation handled by renormalisation.
ExactPolynomial linear_combine(
    const std::vector<std::pair<Rat, ExactPolynomial>>& terms);

/// Synthetic division by (t - root). If root is an exact root, returns the
/// quotient and true; otherwise returns p unchanged and false.
std::pair<ExactPolynomial, bool> exact_divide_by_root(const ExactPolynomial& p,
                                                      const Rat& root);

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
ExactPolynomial operator*(const Rat& s, const ExactPolynomial& p);

/// JSON form shared by all CLI subcommands:
/// {"coefficients": ["num/den", ...]}, index i = coefficient of t^i,
/// decimal-free canonical rational strings. The zero polynomial serialises
/// to an empty list.
nlohmann::json to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace canstrip
