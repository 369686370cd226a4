#pragma once

#include <string>
#include <vector>

#include "pp/types.hpp"

namespace pp {

// Dense univariate polynomial with exact rational coefficients, ascending
// powers, trailing zeros trimmed.
struct RationalPolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return (int)coeffs.size() - 1; }  // -1 for the zero polynomial
  Rational eval(const Rational& x) const;
  std::vector<std::string> coefficient_strings() const;

  bool operator==(const RationalPolynomial& o) const { return coeffs == o.coeffs; }
};

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);

// Unique polynomial of degree < values.size() through (i, values[i]), i = 0,1,...
RationalPolynomial interpolate_at_naturals(const std::vector<Int>& values);

// Binomial coefficient C(x + shift, k) as a polynomial in x.
RationalPolynomial binomial_basis(int shift, int k);

}  // namespace pp
