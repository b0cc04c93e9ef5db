#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclofield/field.hpp"

namespace cyclofield {

/// Univariate polynomial over a finite field, as ascending coefficient codes
/// with no trailing zeros. The zero polynomial has an empty coefficient list.
struct Poly {
    std::vector<Field::Elem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

Poly make_poly(const Field& F, std::vector<Field::Elem> coeffs);

/// Parses "c0,c1,...,ck" (ascending coefficients), e.g. "1,1" = T+1.
Poly parse_poly(const Field& F, const std::string& text);
std::string poly_str(const Poly& a);

Field::Elem poly_eval(const Field& F, const Poly& a, Field::Elem x);
Poly poly_derivative(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, Poly a, const Poly& b);
/// Monic greatest common divisor.
Poly poly_gcd(const Field& F, Poly a, Poly b);
bool poly_is_squarefree(const Field& F, const Poly& a);

/// Throws std::invalid_argument unless all polynomials are non-constant,
/// squarefree and pairwise coprime.
void require_weil_polys(const Field& F, std::span<const Poly> polys);

}  // namespace cyclofield
