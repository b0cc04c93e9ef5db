#include "doctest.h"

#include <cmath>
#include <random>

#include "cyclofield/charsum.hpp"
#include "cyclofield/numtheory.hpp"

using namespace cyclofield;

namespace {

constexpr double kTol = 1e-9;

bool near(cplx z, double re, double im = 0.0) {
    return std::abs(z - cplx(re, im)) < kTol;
}

}  // namespace

TEST_CASE("character evaluation") {
    const auto F = Field::make(7);
    for (Field::Elem x = 1; x < 7; ++x) CHECK(near(char_eval(*F, 0, x), 1.0));
    CHECK(near(char_eval(*F, 3, 6), -1.0));  // log 6 = 3, exp(pi*i*3) = -1
    CHECK(near(char_eval(*F, 2, 0), 0.0));
    CHECK(char_order(*F, 0) == 1);
    CHECK(char_order(*F, 3) == 2);
    CHECK(char_order(*F, 1) == 6);
    CHECK_THROWS_AS(char_eval(*F, 6, 1), std::invalid_argument);
}

TEST_CASE("order indicator examples in F_7") {
    const auto F = Field::make(7);
    for (FeForm form : {FeForm::Divisor, FeForm::ExactOrder}) {
        CHECK(near(order_indicator_sum(*F, 3, 2, form), 1.0));  // ord(2) = 3
        CHECK(near(order_indicator_sum(*F, 3, 3, form), 0.0));  // ord(3) = 6
        CHECK(near(order_indicator_sum(*F, 6, 0, form), 0.0));
    }
    CHECK_THROWS_AS(order_indicator_sum(*F, 4, 1, FeForm::Divisor), std::invalid_argument);
}

TEST_CASE("coset indicator examples in F_7") {
    const auto F = Field::make(7);
    CHECK(near(coset_indicator_sum(*F, 2, 0, 2), 1.0));  // log 2 = 2
    CHECK(near(coset_indicator_sum(*F, 2, 0, 3), 0.0));  // log 3 = 1
    CHECK(near(coset_indicator_sum(*F, 2, 0, 0), 0.0));
    CHECK_THROWS_AS(coset_indicator_sum(*F, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("indicator identities sweep over small fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 13u, 16u, 25u}) {
        const auto fac = factorize(q);
        const auto F = Field::make(static_cast<std::uint32_t>(fac[0].first),
                                   static_cast<std::uint32_t>(fac[0].second));
        const std::uint64_t n = q - 1;
        for (std::uint64_t e : divisors(n)) {
            const auto ta = order_indicator_table(*F, e, FeForm::Divisor);
            const auto tb = order_indicator_table(*F, e, FeForm::ExactOrder);
            for (Field::Elem x = 0; x < q; ++x) {
                const double want = (x != 0 && F->order(x) == e) ? 1.0 : 0.0;
                CHECK(std::abs(ta[x] - cplx(want)) < kTol);
                CHECK(std::abs(ta[x] - tb[x]) < kTol);
            }
        }
        for (std::uint64_t d : divisors(n)) {
            std::vector<cplx> partition(q, 0.0);
            for (std::uint32_t i = 0; i < d; ++i) {
                const auto td = coset_indicator_table(*F, static_cast<std::uint32_t>(d), i);
                for (Field::Elem x = 0; x < q; ++x) {
                    const double want = (x != 0 && F->dlog(x) % d == i) ? 1.0 : 0.0;
                    CHECK(std::abs(td[x] - cplx(want)) < kTol);
                    partition[x] += td[x];
                }
            }
            for (Field::Elem x = 0; x < q; ++x)
                CHECK(std::abs(partition[x] - cplx(x == 0 ? 0.0 : 1.0)) < kTol);
        }
    }
}

TEST_CASE("weil sums in F_7") {
    const auto F = Field::make(7);
    const std::vector<Poly> tq{parse_poly(*F, "0,1"), parse_poly(*F, "1,1")};  // T, T+1
    const CharIndex quad = 3;  // the quadratic character (order 2)
    CHECK(near(weil_sum(*F, tq, std::vector<CharIndex>{quad, quad}), -1.0));
    CHECK(near(weil_sum(*F, tq, std::vector<CharIndex>{0, 0}), 5.0));  // q - |Null| = 7 - 2
    const std::vector<Poly> t1{parse_poly(*F, "0,1")};
    CHECK(near(weil_sum(*F, t1, std::vector<CharIndex>{2}), 0.0));  // orthogonality
    CHECK(weil_bound_holds(*F, tq, std::vector<CharIndex>{quad, quad}));
    CHECK_THROWS_AS(weil_bound_holds(*F, tq, std::vector<CharIndex>{0, 0}), std::invalid_argument);
    // precondition violations
    CHECK_THROWS_AS(weil_sum(*F, std::vector<Poly>{parse_poly(*F, "3")}, std::vector<CharIndex>{1}),
                    std::invalid_argument);  // constant
    CHECK_THROWS_AS(weil_sum(*F, std::vector<Poly>{parse_poly(*F, "0,1"), parse_poly(*F, "0,2")},
                             std::vector<CharIndex>{1, 1}),
                    std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(weil_sum(*F, std::vector<Poly>{parse_poly(*F, "0,0,1")}, std::vector<CharIndex>{1}),
                    std::invalid_argument);  // T^2 not squarefree
}

TEST_CASE("weil bound on a three-polynomial instance in F_13") {
    const auto F = Field::make(13);
    const std::vector<Poly> ps{parse_poly(*F, "0,1"), parse_poly(*F, "1,1"), parse_poly(*F, "2,1")};
    const CharIndex quad = 6;
    CHECK(weil_bound_holds(*F, ps, std::vector<CharIndex>{quad, quad, quad}));
}

TEST_CASE("order-counting examples in F_7") {
    const auto F = Field::make(7);
    const std::vector<Poly> t{parse_poly(*F, "0,1")};
    const std::vector<Poly> tq{parse_poly(*F, "0,1"), parse_poly(*F, "1,1")};
    CHECK(count_with_orders(*F, t, std::vector<std::uint64_t>{6}) == 2);
    CHECK(count_with_orders(*F, tq, std::vector<std::uint64_t>{6, 6}) == 0);
    CHECK(count_with_orders(*F, t, std::vector<std::uint64_t>{1}) == 1);
}

TEST_CASE("order-and-log counting examples in F_7") {
    const auto F = Field::make(7);
    const std::vector<Poly> t{parse_poly(*F, "0,1")};
    CHECK(count_with_orders_and_logs(*F, t, std::vector<std::uint64_t>{1},
                                     std::vector<std::int64_t>{1}, 2) == 2);
    CHECK(count_with_orders_and_logs(*F, t, std::vector<std::uint64_t>{2},
                                     std::vector<std::int64_t>{0}, 2) == 2);
    CHECK_THROWS_AS(count_with_orders_and_logs(*F, t, std::vector<std::uint64_t>{1},
                                               std::vector<std::int64_t>{2}, 2),
                    std::invalid_argument);  // gcd(2,2) = 2 != 1
    CHECK(count_via_indicators(*F, t, std::vector<std::uint64_t>{1}, std::vector<std::int64_t>{1}, 2) == 2);
    CHECK(count_via_indicators(*F, t, std::vector<std::uint64_t>{2}, std::vector<std::int64_t>{0}, 2) == 2);
}

TEST_CASE("counting via indicators agrees with the direct loop on random instances") {
    std::mt19937_64 rng(0x5EED);
    const auto pool = prime_powers_upto(49);
    int done = 0;
    while (done < 30) {
        const auto pp = pool[rng() % pool.size()];
        if (pp.q < 5) continue;
        bool builtin = pp.f == 1;
        for (std::uint32_t b : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u}) builtin = builtin || pp.q == b;
        if (!builtin) continue;
        const auto F = Field::make(pp.p, pp.f);
        const auto divs = divisors(pp.q - 1);
        const std::uint32_t d = static_cast<std::uint32_t>(divs[rng() % divs.size()]);
        const std::size_t r = 1 + rng() % 2;
        std::vector<Poly> polys;
        std::vector<std::uint64_t> d_list;
        std::vector<std::int64_t> j_list;
        // linear polynomials T + c with distinct c are pairwise coprime and squarefree
        std::vector<Field::Elem> cs;
        while (cs.size() < r) {
            const Field::Elem c = static_cast<Field::Elem>(rng() % pp.q);
            if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
        }
        for (std::size_t i = 0; i < r; ++i) {
            polys.push_back(make_poly(*F, {cs[i], 1}));
            const std::int64_t j = static_cast<std::int64_t>(rng() % d);
            j_list.push_back(j);
            d_list.push_back(j == 0 ? d : std::gcd<std::uint64_t>(static_cast<std::uint64_t>(j), d));
        }
        const auto direct = count_with_orders_and_logs(*F, polys, d_list, j_list, d);
        const auto indirect = count_via_indicators(*F, polys, d_list, j_list, d);
        CHECK(direct == indirect);
        ++done;
    }
}

TEST_CASE("c constant") {
    for (std::uint64_t d = 1; d <= 12; ++d)
        CHECK(c_constant(std::vector<std::uint64_t>{d}, d) == Rational(1));
    CHECK(c_constant(std::vector<std::uint64_t>{1}, 4) == Rational(1, 2));
    CHECK_THROWS_AS(c_constant(std::vector<std::uint64_t>{3}, 4), std::invalid_argument);
    // bounds 1/d^r <= c <= 1 as exact rational comparisons
    for (std::uint64_t d = 1; d <= 12; ++d) {
        const auto divs = divisors(d);
        for (std::uint64_t d1 : divs) {
            for (std::uint64_t d2 : divs) {
                const std::vector<std::uint64_t> dl{d1, d2};
                const Rational c = c_constant(dl, d);
                CHECK(Rational(1, static_cast<std::int64_t>(d * d)) <= c);
                CHECK(c <= Rational(1));
            }
        }
    }
}

TEST_CASE("primitive root of unity sums equal the Moebius function") {
    CHECK(near(primitive_root_of_unity_sum(1), 1.0));
    CHECK(near(primitive_root_of_unity_sum(4), 0.0));
    CHECK(near(primitive_root_of_unity_sum(6), 1.0));
    for (std::uint64_t n = 1; n <= 60; ++n)
        CHECK(std::abs(primitive_root_of_unity_sum(n) - cplx(mobius(n))) < kTol);
}
