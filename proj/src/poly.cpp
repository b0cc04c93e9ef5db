#include "cyclofield/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclofield {

namespace {

void trim(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly monic(const Field& F, Poly a) {
    trim(a);
    if (a.is_zero()) return a;
    const Field::Elem lead = a.c.back();
    if (lead != 1) {
        const Field::Elem s = F.inv(lead);
        for (auto& ci : a.c) ci = F.mul(ci, s);
    }
    return a;
}

}  // namespace

Poly make_poly(const Field& F, std::vector<Field::Elem> coeffs) {
    for (auto ci : coeffs)
        if (ci >= F.q()) throw std::invalid_argument("poly: coefficient out of range");
    Poly a{std::move(coeffs)};
    trim(a);
    return a;
}

Poly parse_poly(const Field& F, const std::string& text) {
    std::vector<Field::Elem> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coeffs.push_back(static_cast<Field::Elem>(std::stoul(item)));
        } catch (const std::exception&) {
            throw std::invalid_argument("poly: cannot parse coefficient '" + item + "'");
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("poly: empty coefficient list");
    return make_poly(F, std::move(coeffs));
}

std::string poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(a.c[i]);
    }
    return out;
}

Field::Elem poly_eval(const Field& F, const Poly& a, Field::Elem x) {
    Field::Elem v = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) v = F.add(F.mul(v, x), a.c[i]);
    return v;
}

Poly poly_derivative(const Field& F, const Poly& a) {
    Poly out;
    for (std::size_t i = 1; i < a.c.size(); ++i) out.c.push_back(F.mul(F.from_int(i), a.c[i]));
    trim(out);
    return out;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    trim(out);
    return out;
}

Poly poly_mod(const Field& F, Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
    trim(a);
    const Field::Elem lead_inv = F.inv(b.c.back());
    while (a.c.size() >= b.c.size()) {
        const Field::Elem coef = F.mul(a.c.back(), lead_inv);
        const std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = F.sub(a.c[shift + i], F.mul(coef, b.c[i]));
        trim(a);
    }
    return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.is_zero()) {
        Poly r = poly_mod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, std::move(a));
}

bool poly_is_squarefree(const Field& F, const Poly& a) {
    if (a.degree() < 1) return !a.is_zero();
    const Poly d = poly_derivative(F, a);
    if (d.is_zero()) return false;
    return poly_gcd(F, a, d).degree() == 0;
}

void require_weil_polys(const Field& F, std::span<const Poly> polys) {
    if (polys.empty()) throw std::invalid_argument("polys: at least one polynomial required");
    for (const auto& Q : polys) {
        if (Q.degree() < 1) throw std::invalid_argument("polys: all polynomials must be non-constant");
        if (!poly_is_squarefree(F, Q))
            throw std::invalid_argument("polys: '" + poly_str(Q) + "' is not squarefree");
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (poly_gcd(F, polys[i], polys[j]).degree() != 0)
                throw std::invalid_argument("polys: '" + poly_str(polys[i]) + "' and '" + poly_str(polys[j]) +
                                            "' are not coprime");
        }
    }
}

}  // namespace cyclofield
