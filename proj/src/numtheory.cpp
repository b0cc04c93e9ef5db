#include "cyclofield/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclofield {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, exp] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= exp; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::uint64_t n) {
    int sign = 1;
    for (const auto& [prime, exp] : factorize(n)) {
        (void)prime;
        if (exp > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [prime, exp] : factorize(n)) {
        (void)exp;
        phi -= phi / prime;
    }
    return phi;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    unsigned __int128 acc = 1, b = base % m;
    while (e > 0) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

std::vector<PrimePower> prime_powers_upto(std::uint32_t n) {
    std::vector<PrimePower> out;
    for (std::uint32_t p : primes_upto(n)) {
        std::uint64_t q = p;
        std::uint32_t f = 1;
        while (q <= n) {
            out.push_back({p, f, static_cast<std::uint32_t>(q)});
            q *= p;
            ++f;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
    return out;
}

namespace {

void partitions_rec(std::uint32_t rest, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t part = std::min(rest, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(rest - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partitions_desc(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace cyclofield
