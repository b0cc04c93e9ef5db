#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclofield/field.hpp"
#include "cyclofield/poly.hpp"
#include "cyclofield/rational.hpp"

namespace cyclofield {

/// Multiplicative characters are encoded by their exponent k in {0..q-2}
/// relative to the designated root: chi_k(omega^e) = zeta_(q-1)^(k e), with
/// chi_k(0) = 0. k = 0 is the principal character.
using CharIndex = std::uint64_t;

using cplx = std::complex<double>;

/// chi_k(x); 0 when x = 0.
cplx char_eval(const Field& F, CharIndex k, Field::Elem x);
/// (q-1)/gcd(k, q-1).
std::uint64_t char_order(const Field& F, CharIndex k);

/// The two equivalent character-sum expressions for the indicator of the
/// order-e elements: a Moebius sum over divisors of e (Divisor) and a sum
/// grouped by exact character order (ExactOrder).
enum class FeForm { Divisor, ExactOrder };

/// f_e(xi): 1 if xi != 0 and ord(xi) = e, else 0, evaluated as the chosen
/// character sum in complex arithmetic. Requires e | q-1.
cplx order_indicator_sum(const Field& F, std::uint64_t e, Field::Elem xi, FeForm form);
/// order_indicator_sum for every element of the field at once.
std::vector<cplx> order_indicator_table(const Field& F, std::uint64_t e, FeForm form);

/// g_{d,i}(xi) = (1/d) sum_{ord(chi)|d} chi(omega)^{-i} chi(xi): 1 if xi != 0
/// and dlog(xi) = i (mod d), else 0. Requires d | q-1.
cplx coset_indicator_sum(const Field& F, std::uint32_t d, std::int64_t i, Field::Elem xi);
std::vector<cplx> coset_indicator_table(const Field& F, std::uint32_t d, std::int64_t i);

/// S(Q,chi) = sum_xi prod_i chi_i(Q_i(xi)) over non-constant, squarefree,
/// pairwise coprime polynomials.
cplx weil_sum(const Field& F, std::span<const Poly> polys, std::span<const CharIndex> chars);

/// |S| <= (sum deg Q_i - 1) sqrt(q) + 1e-6; requires at least one
/// non-principal character.
bool weil_bound_holds(const Field& F, std::span<const Poly> polys, std::span<const CharIndex> chars);

/// Number of xi with Q_i(xi) != 0 and ord(Q_i(xi)) = e_i for all i, by a
/// direct loop over the field.
std::uint64_t count_with_orders(const Field& F, std::span<const Poly> polys,
                                std::span<const std::uint64_t> e_list, unsigned workers = 1);

/// Number of xi with Q_i(xi) != 0, ord(Q_i(xi)) = (q-1)/d_i and
/// dlog(Q_i(xi)) = j_i (mod d) for all i. Requires lcm(d_list) | d | q-1 and
/// gcd(j_i, d) = d_i.
std::uint64_t count_with_orders_and_logs(const Field& F, std::span<const Poly> polys,
                                         std::span<const std::uint64_t> d_list,
                                         std::span<const std::int64_t> j_list, std::uint32_t d,
                                         unsigned workers = 1);

/// The same count evaluated through the indicator character sums
/// sum_xi prod_i f_{(q-1)/d_i}(Q_i(xi)) g_{d,j_i}(Q_i(xi)); throws if the
/// complex total strays farther than 1e-6 from an integer.
std::uint64_t count_via_indicators(const Field& F, std::span<const Poly> polys,
                                   std::span<const std::uint64_t> d_list,
                                   std::span<const std::int64_t> j_list, std::uint32_t d);

/// The exact rational constant
/// c(d_1,...,d_r,d) = d^-r prod_i sum_{z|d} mu(z/gcd(z,d_i))^2 phi(z) / phi(z/gcd(z,d_i))^2,
/// which lies in [1/d^r, 1]. Requires lcm(d_list) | d.
Rational c_constant(std::span<const std::uint64_t> d_list, std::uint64_t d);

/// Sum of all primitive n-th roots of unity; equals mu(n).
cplx primitive_root_of_unity_sum(std::uint64_t n);

}  // namespace cyclofield
