#include "cyclofield/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclofield/numtheory.hpp"

namespace cyclofield {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 22;  // log/exp tables stay affordable

// Built-in monic irreducible moduli (ascending coefficients). These are the
// standard Conway polynomials, so the residue class of T is primitive and
// becomes the designated root.
const std::vector<std::uint32_t>* builtin_modulus(std::uint32_t p, std::uint32_t f) {
    static const std::vector<std::uint32_t> m_4{1, 1, 1};           // T^2+T+1
    static const std::vector<std::uint32_t> m_8{1, 1, 0, 1};        // T^3+T+1
    static const std::vector<std::uint32_t> m_16{1, 1, 0, 0, 1};    // T^4+T+1
    static const std::vector<std::uint32_t> m_32{1, 0, 1, 0, 0, 1}; // T^5+T^2+1
    static const std::vector<std::uint32_t> m_64{1, 1, 0, 1, 1, 0, 1};
    static const std::vector<std::uint32_t> m_9{2, 2, 1};           // T^2+2T+2
    static const std::vector<std::uint32_t> m_27{1, 2, 0, 1};       // T^3+2T+1
    static const std::vector<std::uint32_t> m_25{2, 4, 1};          // T^2-T+2
    static const std::vector<std::uint32_t> m_49{3, 6, 1};          // T^2-T+3
    if (p == 2 && f == 2) return &m_4;
    if (p == 2 && f == 3) return &m_8;
    if (p == 2 && f == 4) return &m_16;
    if (p == 2 && f == 5) return &m_32;
    if (p == 2 && f == 6) return &m_64;
    if (p == 3 && f == 2) return &m_9;
    if (p == 3 && f == 3) return &m_27;
    if (p == 5 && f == 2) return &m_25;
    if (p == 7 && f == 2) return &m_49;
    return nullptr;
}

// --- dense polynomial helpers over F_p (integer coefficient vectors), used
// --- only for the irreducibility check at construction time.

using IPoly = std::vector<std::uint32_t>;

void itrim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly imod(IPoly a, const IPoly& m, std::uint32_t p) {
    // m is monic
    itrim(a);
    while (a.size() >= m.size()) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t v = a[shift + i] + static_cast<std::uint64_t>(p) * p - c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>(v % p);
        }
        itrim(a);
    }
    return a;
}

IPoly imulmod(const IPoly& a, const IPoly& b, const IPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    IPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return imod(std::move(prod), m, p);
}

IPoly ipowmod(IPoly base, std::uint64_t e, const IPoly& m, std::uint32_t p) {
    IPoly acc{1};
    base = imod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) acc = imulmod(acc, base, m, p);
        base = imulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

IPoly igcd(IPoly a, IPoly b, std::uint32_t p) {
    itrim(a);
    itrim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        const std::uint64_t lead_inv = mod_inverse(b.back(), p);
        IPoly bm = b;
        for (auto& c : bm) c = static_cast<std::uint32_t>(c * lead_inv % p);
        a = imod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool irreducible_over_fp(const IPoly& m, std::uint32_t p) {
    const std::uint32_t f = static_cast<std::uint32_t>(m.size()) - 1;
    if (f <= 3) {
        // a polynomial of degree <= 3 is reducible iff it has a root
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // Frobenius test: T^{p^f} == T mod m, and gcd(T^{p^{f/l}} - T, m) = 1 for
    // every prime l | f.
    const IPoly t{0, 1};
    auto frob_iter = [&](std::uint32_t k) {  // T^{p^k} mod m
        IPoly r = t;
        for (std::uint32_t i = 0; i < k; ++i) r = ipowmod(std::move(r), p, m, p);
        return r;
    };
    IPoly top = frob_iter(f);
    itrim(top);
    if (top != t) return false;
    for (const auto& [l, e] : factorize(f)) {
        (void)e;
        IPoly r = frob_iter(f / static_cast<std::uint32_t>(l));
        // r - T
        if (r.size() < 2) r.resize(2, 0);
        r[1] = static_cast<std::uint32_t>((r[1] + p - 1) % p);
        itrim(r);
        IPoly g = igcd(m, r, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    if (f < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field: q exceeds the supported table size");
    }
    p_ = p;
    f_ = f;
    q_ = static_cast<std::uint32_t>(q);

    if (f == 1) {
        if (!modulus.empty()) throw std::invalid_argument("field: modulus given for a prime field");
    } else {
        if (modulus.empty()) {
            const auto* builtin = builtin_modulus(p, f);
            if (builtin == nullptr)
                throw std::invalid_argument("field: no built-in modulus for " + std::to_string(p) + "^" +
                                            std::to_string(f) + "; pass one explicitly");
            modulus = *builtin;
        }
        if (modulus.size() != static_cast<std::size_t>(f) + 1)
            throw std::invalid_argument("field: modulus must have degree f");
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("field: modulus coefficients must be reduced mod p");
        if (modulus.back() != 1) throw std::invalid_argument("field: modulus must be monic");
        if (!irreducible_over_fp(modulus, p))
            throw std::invalid_argument("field: modulus is reducible over F_p");
        modulus_ = std::move(modulus);
    }

    ppow_.resize(f_ + 1);
    ppow_[0] = 1;
    for (std::uint32_t i = 1; i <= f_; ++i) ppow_[i] = ppow_[i - 1] * p_;

    // Designated primitive root: the residue class of T when primitive
    // (true for the Conway moduli), otherwise the smallest-coded element of
    // order q-1.
    const auto fac = factorize(q_ - 1);
    auto has_full_order = [&](Elem x) {
        for (const auto& [l, e] : fac) {
            (void)e;
            if (pow_raw(x, (q_ - 1) / l) == 1) return false;
        }
        return true;
    };
    omega_ = 0;
    if (q_ == 2) {
        omega_ = 1;
    } else if (f_ > 1 && has_full_order(static_cast<Elem>(p_))) {
        omega_ = static_cast<Elem>(p_);
    } else {
        for (Elem x = 1; x < q_; ++x) {
            if (has_full_order(x)) {
                omega_ = x;
                break;
            }
        }
    }
    if (omega_ == 0) throw std::runtime_error("field: no primitive root found");
    build_tables();
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (e > 0 && cur == 1) throw std::runtime_error("field: designated root has deficient order");
        exp_[e] = cur;
        log_[cur] = e;
        cur = mul_raw(cur, omega_);
    }
    if (cur != 1) throw std::runtime_error("field: power table did not close");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus) {
    return std::make_shared<const Field>(p, f, std::move(modulus));
}

FieldPtr Field::parse(const std::string& spec, std::vector<std::uint32_t> modulus) {
    const auto caret = spec.find('^');
    std::uint32_t p = 0, f = 1;
    try {
        if (caret == std::string::npos) {
            p = static_cast<std::uint32_t>(std::stoul(spec));
        } else {
            p = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret)));
            f = static_cast<std::uint32_t>(std::stoul(spec.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("field: cannot parse field spec '" + spec + "'");
    }
    return make(p, f, std::move(modulus));
}

std::string Field::label() const {
    if (f_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(f_);
}

void Field::check_elem(Elem a) const {
    if (a >= q_) throw std::invalid_argument("field: element code " + std::to_string(a) + " out of range");
}

Field::Elem Field::add(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    if (f_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem out = 0;
    for (std::uint32_t i = 0; i < f_ && (a != 0 || b != 0); ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * ppow_[i];
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    check_elem(a);
    if (f_ == 1) return a == 0 ? 0 : p_ - a;
    Elem out = 0;
    for (std::uint32_t i = 0; i < f_ && a != 0; ++i) {
        const std::uint32_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * ppow_[i];
    }
    return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul_raw(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (f_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::uint32_t da[24] = {0}, db[24] = {0};
    std::uint64_t prod[47] = {0};
    for (std::uint32_t i = 0; i < f_; ++i, a /= p_) da[i] = a % p_;
    for (std::uint32_t i = 0; i < f_; ++i, b /= p_) db[i] = b % p_;
    for (std::uint32_t i = 0; i < f_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < f_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // reduce by the monic modulus
    for (std::uint32_t k = 2 * f_ - 2; k >= f_; --k) {
        const std::uint64_t c = prod[k] % p_;
        if (c != 0) {
            for (std::uint32_t j = 0; j < f_; ++j) {
                prod[k - f_ + j] += static_cast<std::uint64_t>(p_) * p_ - c * (modulus_[j] % p_) % p_;
            }
        }
        prod[k] = 0;
        if (k == f_) break;
    }
    Elem out = 0;
    for (std::uint32_t i = 0; i < f_; ++i) out += static_cast<Elem>(prod[i] % p_) * ppow_[i];
    return out;
}

Field::Elem Field::pow_raw(Elem a, std::uint64_t e) const {
    Elem acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul_raw(acc, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return acc;
}

Field::Elem Field::mul(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

Field::Elem Field::inv(Elem a) const {
    check_elem(a);
    if (a == 0) throw std::invalid_argument("field: inverse of 0");
    const std::uint64_t e = log_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    check_elem(a);
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[log_[a] * (e % (q_ - 1)) % (q_ - 1)];
}

Field::Elem Field::omega_pow(std::int64_t e) const {
    const std::int64_t m = static_cast<std::int64_t>(q_) - 1;
    std::int64_t r = e % m;
    if (r < 0) r += m;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint64_t Field::dlog(Elem x) const {
    check_elem(x);
    if (x == 0) throw std::invalid_argument("field: discrete log of 0");
    return log_[x];
}

std::uint64_t Field::order(Elem x) const {
    return (q_ - 1) / std::gcd(dlog(x), static_cast<std::uint64_t>(q_ - 1));
}

std::uint32_t Field::coset_index(std::uint32_t d, Elem x) const {
    if (d == 0 || (q_ - 1) % d != 0)
        throw std::invalid_argument("field: d = " + std::to_string(d) + " does not divide q-1");
    return static_cast<std::uint32_t>(dlog(x) % d);
}

std::vector<Field::Elem> Field::primitive_roots() const {
    std::vector<Elem> out;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (std::gcd<std::uint64_t>(e, q_ - 1) == 1) out.push_back(exp_[e]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldPtr Field::rebase(Elem new_omega) const {
    if (order(new_omega) != q_ - 1)
        throw std::invalid_argument("field: rebase target is not a primitive root");
    auto out = std::make_shared<Field>(*this);
    out->omega_ = new_omega;
    const std::uint64_t t = log_[new_omega];
    for (std::uint64_t e = 0; e < q_ - 1; ++e) {
        const Elem x = exp_[t * e % (q_ - 1)];
        out->exp_[e] = x;
        out->log_[x] = static_cast<std::uint32_t>(e);
    }
    return out;
}

}  // namespace cyclofield
