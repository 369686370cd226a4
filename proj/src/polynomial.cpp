#include "pp/polynomial.hpp"

#include <stdexcept>

namespace pp {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::string> RationalPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(rational_to_string(c));
  return out;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  trim(r.coeffs);
  return r;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  trim(r.coeffs);
  return r;
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  RationalPolynomial r = a;
  for (auto& x : r.coeffs) x *= c;
  trim(r.coeffs);
  return r;
}

RationalPolynomial interpolate_at_naturals(const std::vector<Int>& values) {
  if (values.empty()) throw std::invalid_argument("interpolation needs at least one value");
  RationalPolynomial result;
  for (std::size_t i = 0; i < values.size(); ++i) {
    RationalPolynomial term;
    term.coeffs = {Rational(values[i])};
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j == i) continue;
      RationalPolynomial lin;  // (x - j) / (i - j)
      Rational denom = Rational((Int)i - (Int)j);
      lin.coeffs = {Rational(-(Int)j) / denom, Rational(1) / denom};
      term = term * lin;
    }
    result = result + term;
  }
  return result;
}

RationalPolynomial binomial_basis(int shift, int k) {
  RationalPolynomial r;
  r.coeffs = {Rational(1)};
  Rational kfact = 1;
  for (int t = 0; t < k; ++t) {
    RationalPolynomial lin;  // (x + shift - t)
    lin.coeffs = {Rational(shift - t), Rational(1)};
    r = r * lin;
    kfact *= (t + 1);
  }
  return (Rational(1) / kfact) * r;
}

}  // namespace pp
