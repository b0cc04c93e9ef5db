#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cyclofield {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete finite field F_q (q = p^f) with a designated primitive root
/// omega and a precomputed discrete-log table.
///
/// Elements are canonical integer codes in {0,...,q-1}: the base-p packing of
/// the coefficient vector of the element relative to the modulus (for f = 1
/// simply the residue). Multiplication goes through the log/exp tables, so it
/// is O(1) regardless of the extension degree.
///
/// Instances are immutable after construction and safe to share between
/// threads; every operation is a pure read.
class Field {
public:
    using Elem = std::uint32_t;

    /// Prime field F_p.
    explicit Field(std::uint32_t p) : Field(p, 1, {}) {}

    /// F_{p^f}. For f > 1, `modulus` lists the ascending coefficients of a
    /// monic irreducible degree-f polynomial over F_p; when empty, a built-in
    /// Conway polynomial is used if one is on file for q (q in {4, 8, 9, 16,
    /// 25, 27, 32, 49, 64}). The designated root omega is the smallest-coded
    /// element of full order, except that the residue class of T itself is
    /// preferred when it is primitive (as for the Conway moduli).
    Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);

    static FieldPtr make(std::uint32_t p, std::uint32_t f = 1, std::vector<std::uint32_t> modulus = {});

    /// Parses "q" (a prime) or "p^f".
    static FieldPtr parse(const std::string& spec, std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return f_; }
    std::uint32_t q() const { return q_; }
    /// Modulus coefficients (ascending, monic); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem omega() const { return omega_; }
    /// "7" or "5^2".
    std::string label() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// The scalar n*1, i.e. n mod p embedded into the prime subfield.
    Elem from_int(std::uint64_t n) const { return static_cast<Elem>(n % p_); }
    /// omega^e for a possibly negative exponent.
    Elem omega_pow(std::int64_t e) const;

    /// Discrete log base omega, in {0..q-2}; throws on 0.
    std::uint64_t dlog(Elem x) const;
    /// Multiplicative order, (q-1)/gcd(dlog(x), q-1); throws on 0.
    std::uint64_t order(Elem x) const;
    /// Index i with x in omega^i C, where C is the index-d subgroup of the
    /// multiplicative group; requires d | q-1 and x != 0.
    std::uint32_t coset_index(std::uint32_t d, Elem x) const;
    /// All elements of order q-1, ascending by code; there are phi(q-1).
    std::vector<Elem> primitive_roots() const;

    /// The same field with a different designated primitive root. The element
    /// codes (and hence add/mul) are unchanged; only dlog/coset_index and the
    /// omega-relative operations move.
    FieldPtr rebase(Elem new_omega) const;

private:
    void check_elem(Elem a) const;
    Elem mul_raw(Elem a, Elem b) const;  // coefficient arithmetic, no tables
    Elem pow_raw(Elem a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_ = 0, f_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem omega_ = 0;
    std::vector<std::uint32_t> log_;  // element code -> exponent (log_[0] unused)
    std::vector<Elem> exp_;           // exponent -> element code, size q-1
    std::vector<std::uint32_t> ppow_; // p^0..p^f
};

}  // namespace cyclofield
