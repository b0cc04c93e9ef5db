#include "doctest.h"

#include <numeric>

#include "cyclofield/field.hpp"
#include "cyclofield/numtheory.hpp"

using namespace cyclofield;

TEST_CASE("prime field construction picks the smallest primitive root") {
    const auto F = Field::make(7);
    CHECK(F->p() == 7);
    CHECK(F->q() == 7);
    CHECK(F->omega() == 3);  // 2 has order 3, 3 has order 6
    CHECK(F->label() == "7");
}

TEST_CASE("F_25 from the modulus T^2-T+2 has the root as omega") {
    const auto F = Field::make(5, 2, {2, 4, 1});
    CHECK(F->q() == 25);
    CHECK(F->omega() == 5);  // the residue class of T
    CHECK(F->order(5) == 24);
    CHECK(F->label() == "5^2");
}

TEST_CASE("built-in moduli cover the small extension fields") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        const auto fac = factorize(q);
        const auto F = Field::make(static_cast<std::uint32_t>(fac[0].first),
                                   static_cast<std::uint32_t>(fac[0].second));
        CHECK(F->q() == q);
        CHECK(F->order(F->omega()) == q - 1);
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4), std::invalid_argument);  // 4 is not prime
    CHECK_THROWS_AS(Field::make(11, 2), std::invalid_argument);  // no built-in modulus
    CHECK_THROWS_AS(Field::make(5, 2, {1, 0, 1}), std::invalid_argument);   // T^2+1 has root 2 mod 5
    CHECK_THROWS_AS(Field::make(5, 2, {2, 4, 1, 0}), std::invalid_argument);  // wrong degree
    CHECK_THROWS_AS(Field::make(5, 2, {2, 4, 2}), std::invalid_argument);   // not monic
    CHECK_THROWS_AS(Field::make(7, 1, {1, 1}), std::invalid_argument);      // modulus for prime field
}

TEST_CASE("user-supplied modulus whose root is not primitive falls back to smallest code") {
    // T^2+1 is irreducible over F_7 (-1 is a non-square); its root has order 4
    const auto F = Field::make(7, 2, {1, 0, 1});
    CHECK(F->q() == 49);
    CHECK(F->order(F->omega()) == 48);
    CHECK(F->order(7) == 4);  // the residue class of T
    // omega is the smallest full-order code
    for (Field::Elem x = 1; x < F->omega(); ++x) CHECK(F->order(x) != 48);
}

TEST_CASE("element orders in F_7") {
    const auto F = Field::make(7);
    CHECK(F->order(1) == 1);
    CHECK(F->order(3) == 6);
    CHECK(F->order(2) == 3);
    CHECK_THROWS_AS(F->order(0), std::invalid_argument);
}

TEST_CASE("discrete logs in F_7 with omega = 3") {
    const auto F = Field::make(7);
    CHECK(F->dlog(1) == 0);
    CHECK(F->dlog(2) == 2);  // 3^2 = 9 = 2
    CHECK(F->dlog(6) == 3);  // 3^3 = 27 = 6
    CHECK_THROWS_AS(F->dlog(0), std::invalid_argument);
}

TEST_CASE("primitive root lists") {
    const auto F7 = Field::make(7);
    CHECK(F7->primitive_roots() == std::vector<Field::Elem>{3, 5});
    const auto F5 = Field::make(5);
    CHECK(F5->primitive_roots() == std::vector<Field::Elem>{2, 3});
    CHECK(F7->primitive_roots().size() == totient(6));
}

TEST_CASE("coset index in F_7") {
    const auto F = Field::make(7);
    CHECK(F->coset_index(2, 2) == 0);
    CHECK(F->coset_index(2, 3) == 1);
    CHECK_THROWS_AS(F->coset_index(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(F->coset_index(4, 3), std::invalid_argument);  // 4 does not divide 6
}

TEST_CASE("field laws and log identities on a sample of fields") {
    for (std::uint32_t q : {2u, 3u, 9u, 16u, 25u, 27u, 31u, 49u}) {
        const auto fac = factorize(q);
        const auto F = Field::make(static_cast<std::uint32_t>(fac[0].first),
                                   static_cast<std::uint32_t>(fac[0].second));
        const std::uint32_t n = q - 1;
        for (Field::Elem x = 1; x < q; ++x) {
            CHECK(F->omega_pow(static_cast<std::int64_t>(F->dlog(x))) == x);
            CHECK(F->order(x) * std::gcd<std::uint64_t>(F->dlog(x), n) == n);
            CHECK(F->mul(x, F->inv(x)) == 1);
        }
        // additive group sanity
        for (Field::Elem x = 0; x < q; ++x) {
            CHECK(F->add(x, F->neg(x)) == 0);
            for (Field::Elem y = 0; y < q; ++y) {
                CHECK(F->add(x, y) == F->add(y, x));
                CHECK(F->mul(x, F->add(y, 1)) == F->add(F->mul(x, y), x));
            }
        }
    }
}

TEST_CASE("primitive root counts match the totient for q <= 4096") {
    for (std::uint32_t q : {4093u, 4091u, 4079u, 101u, 257u}) {
        const auto F = Field::make(q);
        CHECK(F->primitive_roots().size() == totient(q - 1));
    }
    for (std::uint32_t q : {49u, 64u, 27u, 25u}) {
        const auto fac = factorize(q);
        const auto F = Field::make(static_cast<std::uint32_t>(fac[0].first),
                                   static_cast<std::uint32_t>(fac[0].second));
        CHECK(F->primitive_roots().size() == totient(q - 1));
    }
}

TEST_CASE("coset index is a homomorphism") {
    const auto F = Field::make(31);
    for (std::uint32_t d : {2u, 3u, 5u, 6u, 10u, 15u}) {
        for (Field::Elem x = 1; x < 31; ++x) {
            for (Field::Elem y = 1; y < 31; ++y) {
                CHECK(F->coset_index(d, F->mul(x, y)) ==
                      (F->coset_index(d, x) + F->coset_index(d, y)) % d);
            }
        }
    }
}

TEST_CASE("rebase moves the log tables consistently") {
    const auto F = Field::make(7);
    const auto G = F->rebase(5);
    CHECK(G->omega() == 5);
    CHECK(G->order(5) == 6);
    for (Field::Elem x = 1; x < 7; ++x) {
        CHECK(G->omega_pow(static_cast<std::int64_t>(G->dlog(x))) == x);
        CHECK(G->mul(3, x) == F->mul(3, x));  // arithmetic is base-independent
    }
    CHECK_THROWS_AS(F->rebase(2), std::invalid_argument);  // order 3
}

TEST_CASE("field spec parsing") {
    CHECK(Field::parse("7")->q() == 7);
    CHECK(Field::parse("5^2")->q() == 25);
    CHECK_THROWS_AS(Field::parse("abc"), std::invalid_argument);
}
