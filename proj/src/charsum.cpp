#include "cyclofield/charsum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cyclofield/numtheory.hpp"

namespace cyclofield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_divisor(std::uint64_t d, std::uint64_t n, const char* what) {
    if (d == 0 || n % d != 0)
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(d) + " does not divide " +
                                    std::to_string(n));
}

void require_char(const Field& F, CharIndex k) {
    if (k >= F.q() - 1 && !(F.q() == 2 && k == 0))
        throw std::invalid_argument("char: exponent " + std::to_string(k) + " out of range");
}

// zeta_(q-1)^t
cplx root_of_unity(const Field& F, std::uint64_t t) {
    return std::polar(1.0, kTwoPi * static_cast<double>(t % (F.q() - 1)) / static_cast<double>(F.q() - 1));
}

// Sum over the characters of order dividing m of chi(xi), shifted by the
// character value at omega^{-i}: sum_{ord(chi)|m} chi(omega)^{-i} chi(xi).
// Characters of order dividing m are chi_k with k a multiple of (q-1)/m.
cplx char_sum_order_dividing(const Field& F, std::uint64_t m, std::int64_t i, Field::Elem xi) {
    if (xi == 0) return 0.0;
    const std::uint64_t n = F.q() - 1;
    const std::uint64_t step = n / m;
    const std::uint64_t lg = F.dlog(xi);
    std::int64_t shift = (static_cast<std::int64_t>(lg) - i) % static_cast<std::int64_t>(n);
    if (shift < 0) shift += static_cast<std::int64_t>(n);
    cplx acc = 0.0;
    for (std::uint64_t j = 0; j < m; ++j)
        acc += root_of_unity(F, j * step % n * static_cast<std::uint64_t>(shift) % n);
    return acc;
}

// Sum over the characters of exact order z of chi(xi).
cplx char_sum_order_exactly(const Field& F, std::uint64_t z, Field::Elem xi) {
    if (xi == 0) return 0.0;
    const std::uint64_t n = F.q() - 1;
    const std::uint64_t step = n / z;
    const std::uint64_t lg = F.dlog(xi);
    cplx acc = 0.0;
    for (std::uint64_t j = 0; j < z; ++j) {
        if (std::gcd(j, z) != 1 && z != 1) continue;
        acc += root_of_unity(F, j * step % n * lg % n);
    }
    return acc;
}

template <typename Fn>
std::uint64_t parallel_count_range(std::uint64_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n < 1024) return fn(0, n);
    workers = std::min<unsigned>(workers, std::thread::hardware_concurrency() > 0
                                              ? 4 * std::thread::hardware_concurrency()
                                              : workers);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, n);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, n);
        pool.emplace_back([&, w, lo, hi] { partial[w] = fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace

cplx char_eval(const Field& F, CharIndex k, Field::Elem x) {
    require_char(F, k);
    if (x == 0) return 0.0;
    return root_of_unity(F, k % (F.q() - 1) * F.dlog(x) % (F.q() - 1));
}

std::uint64_t char_order(const Field& F, CharIndex k) {
    require_char(F, k);
    return (F.q() - 1) / std::gcd(k, static_cast<std::uint64_t>(F.q() - 1));
}

cplx order_indicator_sum(const Field& F, std::uint64_t e, Field::Elem xi, FeForm form) {
    const std::uint64_t n = F.q() - 1;
    require_divisor(e, n, "f_e");
    if (xi >= F.q()) throw std::invalid_argument("f_e: element out of range");
    if (form == FeForm::Divisor) {
        // (e/(q-1)) sum_{t|e} (mu(t)/t) sum_{ord(chi) | t(q-1)/e} chi(xi)
        cplx acc = 0.0;
        for (std::uint64_t t : divisors(e)) {
            const int mu = mobius(t);
            if (mu == 0) continue;
            acc += (static_cast<double>(mu) / static_cast<double>(t)) *
                   char_sum_order_dividing(F, t * (n / e), 0, xi);
        }
        return acc * (static_cast<double>(e) / static_cast<double>(n));
    }
    // (phi(e)/(q-1)) sum_{z|q-1} mu(z/gcd(z,(q-1)/e))/phi(z/gcd(z,(q-1)/e)) sum_{ord(chi)=z} chi(xi)
    cplx acc = 0.0;
    for (std::uint64_t z : divisors(n)) {
        const std::uint64_t w = z / std::gcd(z, n / e);
        const int mu = mobius(w);
        if (mu == 0) continue;
        acc += (static_cast<double>(mu) / static_cast<double>(totient(w))) * char_sum_order_exactly(F, z, xi);
    }
    return acc * (static_cast<double>(totient(e)) / static_cast<double>(n));
}

std::vector<cplx> order_indicator_table(const Field& F, std::uint64_t e, FeForm form) {
    std::vector<cplx> out(F.q());
    for (Field::Elem x = 0; x < F.q(); ++x) out[x] = order_indicator_sum(F, e, x, form);
    return out;
}

cplx coset_indicator_sum(const Field& F, std::uint32_t d, std::int64_t i, Field::Elem xi) {
    require_divisor(d, F.q() - 1, "g_di");
    if (xi >= F.q()) throw std::invalid_argument("g_di: element out of range");
    return char_sum_order_dividing(F, d, i, xi) / static_cast<double>(d);
}

std::vector<cplx> coset_indicator_table(const Field& F, std::uint32_t d, std::int64_t i) {
    std::vector<cplx> out(F.q());
    for (Field::Elem x = 0; x < F.q(); ++x) out[x] = coset_indicator_sum(F, d, i, x);
    return out;
}

cplx weil_sum(const Field& F, std::span<const Poly> polys, std::span<const CharIndex> chars) {
    require_weil_polys(F, polys);
    if (polys.size() != chars.size())
        throw std::invalid_argument("weil: need one character per polynomial");
    for (CharIndex k : chars) require_char(F, k);
    cplx acc = 0.0;
    for (Field::Elem xi = 0; xi < F.q(); ++xi) {
        cplx term = 1.0;
        for (std::size_t i = 0; i < polys.size() && term != 0.0; ++i)
            term *= char_eval(F, chars[i], poly_eval(F, polys[i], xi));
        acc += term;
    }
    return acc;
}

bool weil_bound_holds(const Field& F, std::span<const Poly> polys, std::span<const CharIndex> chars) {
    bool any_nonprincipal = false;
    for (CharIndex k : chars) any_nonprincipal = any_nonprincipal || (k % (F.q() - 1) != 0);
    if (!any_nonprincipal)
        throw std::invalid_argument("weil: bound requires at least one non-principal character");
    const cplx s = weil_sum(F, polys, chars);
    std::uint64_t degsum = 0;
    for (const auto& Q : polys) degsum += static_cast<std::uint64_t>(Q.degree());
    return std::abs(s) <= static_cast<double>(degsum - 1) * std::sqrt(static_cast<double>(F.q())) + 1e-6;
}

std::uint64_t count_with_orders(const Field& F, std::span<const Poly> polys,
                                std::span<const std::uint64_t> e_list, unsigned workers) {
    require_weil_polys(F, polys);
    if (polys.size() != e_list.size()) throw std::invalid_argument("count: need one order per polynomial");
    for (std::uint64_t e : e_list) require_divisor(e, F.q() - 1, "count");
    return parallel_count_range(F.q(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t xi = lo; xi < hi; ++xi) {
            bool ok = true;
            for (std::size_t i = 0; i < polys.size() && ok; ++i) {
                const Field::Elem v = poly_eval(F, polys[i], static_cast<Field::Elem>(xi));
                ok = v != 0 && F.order(v) == e_list[i];
            }
            c += ok ? 1 : 0;
        }
        return c;
    });
}

namespace {

void require_gen_args(const Field& F, std::span<const Poly> polys, std::span<const std::uint64_t> d_list,
                      std::span<const std::int64_t> j_list, std::uint32_t d) {
    require_weil_polys(F, polys);
    require_divisor(d, F.q() - 1, "count_gen");
    if (polys.size() != d_list.size() || polys.size() != j_list.size())
        throw std::invalid_argument("count_gen: need one (d_i, j_i) pair per polynomial");
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < d_list.size(); ++i) {
        if (d_list[i] == 0) throw std::invalid_argument("count_gen: d_i must be positive");
        l = std::lcm(l, d_list[i]);
        std::int64_t j = j_list[i] % static_cast<std::int64_t>(d);
        if (j < 0) j += d;
        const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d));
        const std::uint64_t expect = j == 0 ? d : g;
        if (expect != d_list[i])
            throw std::invalid_argument("count_gen: gcd(j_i, d) = " + std::to_string(expect) +
                                        " differs from d_i = " + std::to_string(d_list[i]));
    }
    if (d % l != 0) throw std::invalid_argument("count_gen: lcm(d_list) does not divide d");
}

}  // namespace

std::uint64_t count_with_orders_and_logs(const Field& F, std::span<const Poly> polys,
                                         std::span<const std::uint64_t> d_list,
                                         std::span<const std::int64_t> j_list, std::uint32_t d,
                                         unsigned workers) {
    require_gen_args(F, polys, d_list, j_list, d);
    const std::uint64_t n = F.q() - 1;
    return parallel_count_range(F.q(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t xi = lo; xi < hi; ++xi) {
            bool ok = true;
            for (std::size_t i = 0; i < polys.size() && ok; ++i) {
                const Field::Elem v = poly_eval(F, polys[i], static_cast<Field::Elem>(xi));
                ok = v != 0 && F.order(v) == n / d_list[i] &&
                     static_cast<std::int64_t>(F.dlog(v) % d) ==
                         ((j_list[i] % static_cast<std::int64_t>(d)) + d) % d;
            }
            c += ok ? 1 : 0;
        }
        return c;
    });
}

std::uint64_t count_via_indicators(const Field& F, std::span<const Poly> polys,
                                   std::span<const std::uint64_t> d_list,
                                   std::span<const std::int64_t> j_list, std::uint32_t d) {
    require_gen_args(F, polys, d_list, j_list, d);
    const std::uint64_t n = F.q() - 1;
    std::vector<std::vector<cplx>> f_tab, g_tab;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        f_tab.push_back(order_indicator_table(F, n / d_list[i], FeForm::Divisor));
        g_tab.push_back(coset_indicator_table(F, d, j_list[i]));
    }
    cplx acc = 0.0;
    for (Field::Elem xi = 0; xi < F.q(); ++xi) {
        cplx term = 1.0;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const Field::Elem v = poly_eval(F, polys[i], xi);
            term *= f_tab[i][v] * g_tab[i][v];
        }
        acc += term;
    }
    const double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > 1e-6 || std::abs(acc.imag()) > 1e-6)
        throw std::runtime_error("count_via_indicators: sum is not near an integer");
    return static_cast<std::uint64_t>(rounded);
}

Rational c_constant(std::span<const std::uint64_t> d_list, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("c_constant: d must be positive");
    std::uint64_t l = 1;
    for (std::uint64_t di : d_list) {
        if (di == 0) throw std::invalid_argument("c_constant: d_i must be positive");
        l = std::lcm(l, di);
    }
    if (d % l != 0) throw std::invalid_argument("c_constant: lcm(d_list) does not divide d");
    Rational c(1);
    const auto divs = divisors(d);
    for (std::uint64_t di : d_list) {
        Rational inner(0);
        for (std::uint64_t z : divs) {
            const std::uint64_t w = z / std::gcd(z, di);
            const int mu = mobius(w);
            if (mu == 0) continue;
            const std::int64_t phi_w = static_cast<std::int64_t>(totient(w));
            inner = inner + Rational(static_cast<std::int64_t>(totient(z)), phi_w * phi_w);
        }
        c = c * inner * Rational(1, static_cast<std::int64_t>(d));
    }
    return c;
}

cplx primitive_root_of_unity_sum(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("primitive_root_of_unity_sum: n must be positive");
    cplx acc = 0.0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        acc += std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }
    return acc;
}

}  // namespace cyclofield
