#include "canstrip/polynomial.hpp"

#include "canstrip/errors.hpp"

#include <algorithm>

namespace canstrip {

namespace {
const Rat kZero(0);
}

ExactPolynomial::ExactPolynomial(std::vector<Rat> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

ExactPolynomial ExactPolynomial::from_strings(
    std::initializer_list<const char*> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const char* s : coeffs) c.push_back(parse_rational(s));
  return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::monomial(unsigned power, const Rat& scale) {
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = scale;
  return ExactPolynomial(std::move(c));
}

void ExactPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& ExactPolynomial::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rat& ExactPolynomial::leading() const {
  if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat ExactPolynomial::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (degree() < 1) return ExactPolynomial();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return ExactPolynomial(std::move(d));
}

ExactPolynomial interpolate(const ValueTable& table, int degree) {
  if (degree < 0) throw InsufficientPoints("interpolation degree must be >= 0");
  const size_t need = static_cast<size_t>(degree) + 1;
  if (table.values.size() < need)
    throw InsufficientPoints("need " + std::to_string(need) + " points, have " +
                             std::to_string(table.values.size()));

  // Forward differences of the leading degree+1 entries stay integral.
  std::vector<Int> diff(table.values.begin(), table.values.begin() + need);
  std::vector<Int> newton(need);
  newton[0] = diff[0];
  for (size_t j = 1; j < need; ++j) {
    for (size_t i = 0; i + j < need; ++i) diff[i] = diff[i + 1] - diff[i];
    newton[j] = diff[0];
  }

  // Accumulate sum_j newton[j] * C(t - offset, j) in the monomial basis.
  std::vector<Rat> acc(need, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // C(t - offset, 0)
  for (size_t j = 0; j < need; ++j) {
    if (j > 0) {
      // basis *= (t - offset - (j-1)) / j
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      const Rat a(-(table.offset + static_cast<long>(j) - 1));
      for (size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] += a * basis[i];
      }
      const Rat inv_j(1, static_cast<unsigned long>(j));
      for (auto& c : next) c *= inv_j;
      basis = std::move(next);
    }
    const Rat w(newton[j]);
    for (size_t i = 0; i < basis.size(); ++i) acc[i] += w * basis[i];
  }
  ExactPolynomial p(std::move(acc));

  for (size_t k = need; k < table.values.size(); ++k) {
    const Rat expected(table.values[k]);
    if (p(Rat(table.offset + static_cast<long>(k))) != expected)
      throw DegreeOverflow("surplus point " + std::to_string(table.offset + static_cast<long>(k)) +
                           " disagrees: true degree exceeds " + std::to_string(degree));
  }
  return p;
}

ExactPolynomial shift(const ExactPolynomial& p, long j) {
  if (p.is_zero() || j == 0) return p;
  // Horner in (t - j): binomial expansion without explicit binomials.
  const Rat a(-j);
  std::vector<Rat> acc;
  for (int i = p.degree(); i >= 0; --i) {
    // acc = acc * (t - j) + c_i
    std::vector<Rat> next(acc.size() + 1, Rat(0));
    for (size_t m = 0; m < acc.size(); ++m) {
      next[m + 1] += acc[m];
      next[m] += a * acc[m];
    }
    if (next.empty()) next.push_back(Rat(0));
    next[0] += p.coeff(static_cast<size_t>(i));
    acc = std::move(next);
  }
  return ExactPolynomial(std::move(acc));
}

ExactPolynomial linear_combine(
    const std::vector<std::pair<Rat, ExactPolynomial>>& terms) {
  size_t len = 0;
  for (const auto& [s, p] : terms)
    len = std::max(len, p.coefficients().size());
  std::vector<Rat> acc(len, Rat(0));
  for (const auto& [s, p] : terms)
    for (size_t i = 0; i < p.coefficients().size(); ++i)
      acc[i] += s * p.coefficients()[i];
  return ExactPolynomial(std::move(acc));
}

std::pair<ExactPolynomial, bool> exact_divide_by_root(const ExactPolynomial& p,
                                                      const Rat& root) {
  if (p.is_zero()) throw ZeroPolynomial("cannot divide the zero polynomial");
  if (p.degree() == 0) return {p, false};
  std::vector<Rat> q(static_cast<size_t>(p.degree()), Rat(0));
  Rat carry = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    q[static_cast<size_t>(i)] = carry;
    carry = p.coeff(static_cast<size_t>(i)) + root * carry;
  }
  if (carry != 0) return {p, false};
  return {ExactPolynomial(std::move(q)), true};
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  return linear_combine({{Rat(1), a}, {Rat(1), b}});
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return linear_combine({{Rat(1), a}, {Rat(-1), b}});
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ExactPolynomial();
  std::vector<Rat> acc(a.coefficients().size() + b.coefficients().size() - 1, Rat(0));
  for (size_t i = 0; i < a.coefficients().size(); ++i)
    for (size_t j = 0; j < b.coefficients().size(); ++j)
      acc[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return ExactPolynomial(std::move(acc));
}

ExactPolynomial operator*(const Rat& s, const ExactPolynomial& p) {
  return linear_combine({{s, p}});
}

nlohmann::json to_json(const ExactPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rat& c : p.coefficients()) coeffs.push_back(to_string(c));
  return nlohmann::json{{"coefficients", std::move(coeffs)}};
}

ExactPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw ParseError("polynomial JSON must be {\"coefficients\": [...]}");
  std::vector<Rat> c;
  for (const auto& e : j["coefficients"]) {
    if (!e.is_string()) throw ParseError("polynomial coefficients must be rational strings");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  return ExactPolynomial(std::move(c));
}

}  // namespace canstrip
