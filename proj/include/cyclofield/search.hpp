#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclofield/cyclomap.hpp"
#include "cyclofield/field.hpp"
#include "cyclofield/poly.hpp"

namespace cyclofield {

/// A function F_q -> F_q as an image array indexed by element code.
struct PermTable {
    FieldPtr field;
    std::vector<Field::Elem> img;
};

bool is_permutation(const PermTable& t);
/// Number of x with t(x) = x.
std::uint32_t fixed_point_count(const PermTable& t);
PermTable to_table(const CyclotomicMap& m);
/// x -> x + b.
PermTable shift_table(FieldPtr F, Field::Elem b);
/// Permutation given by one cycle (elements not on the cycle are fixed).
PermTable table_from_cycle(FieldPtr F, std::span<const Field::Elem> cycle);
/// Canonical cycle notation, e.g. "(0,6,4,1,3,5,2)"; fixed points included.
std::string cycle_notation(const PermTable& t);

/// Both t and x -> t(x)+x are bijections.
bool is_complete(const PermTable& t);
/// Both t and x -> t(x)-x are bijections.
bool is_orthomorphism(const PermTable& t);
/// t(x+y) = t(x)+t(y) for all pairs (full quadratic check).
bool is_additive(const PermTable& t);
/// t permutes F_q in a single q-cycle and x -> t(x)+x decomposes as one fixed
/// point plus one (q-1)-cycle.
bool is_special(const PermTable& t);

/// Outcome of a deterministic exhaustive scan. `found` implies the witness
/// fields carry a payload that has passed independent re-verification;
/// `exhausted` means the full candidate space was scanned without success.
struct SearchReport {
    bool found = false;
    bool exhausted = false;
    std::uint64_t candidates_tested = 0;

    std::uint64_t count = 0;                                // enumerate_special
    std::optional<Field::Elem> xi;                          // element witnesses
    std::optional<Field::Elem> omega;                       // chosen primitive root
    std::optional<std::uint64_t> u;                         // odd-unit witness
    std::optional<std::uint64_t> o;                         // exponent u*d-(d-1)
    std::optional<CyclotomicMap> map;                       // constructed mapping
    std::optional<std::vector<Field::Elem>> gamma;          // per-coset generators
    std::optional<Field::Elem> weak_omega;                  // see find_complete_cyclotomic
    std::optional<std::vector<Field::Elem>> witness_cycle;  // enumerate_special (first/all)
    std::vector<std::vector<Field::Elem>> all_witnesses;    // enumerate_special (all)
};

/// Smallest xi (by code) with Q_i(xi) != 0 and ord(Q_i(xi)) = (q-1)/d_i for
/// all i.
SearchReport find_element_with_orders(const Field& F, std::span<const Poly> polys,
                                      std::span<const std::uint64_t> d_list);

/// As above with the extra congruences dlog(Q_i(xi)) = j_i (mod d).
SearchReport find_element_with_orders_and_logs(const Field& F, std::span<const Poly> polys,
                                               std::span<const std::uint64_t> d_list,
                                               std::span<const std::int64_t> j_list, std::uint32_t d);

/// Scans primitive roots omega in ascending code order, builds the canonical
/// permutation construct_f_omega(h) for each, and accepts the first omega for
/// which every translate constant (omega + c and the per-cycle terminal
/// constants plus c) lands in the index-d subgroup C. A returned map is
/// re-verified: its cycle type equals gamma_h(q) and every translate by a c
/// in the list is a permutation. Zero c entries are dropped and duplicates
/// removed. weak_omega records the first root whose translates are all
/// permutations even though some constant misses C.
SearchReport find_complete_cyclotomic(const Field& F, const PsiFunction& h,
                                      std::vector<Field::Elem> c_list);

/// Realizes prescribed coset behavior: finds branch constants b_i*gamma_i
/// with (f + c_j id)(C_i) = C_{sigma_j(i)} for all i, j. The first c is
/// normalized to 0 by shifting; each gamma_i is scanned over the generators
/// of C in ascending code order.
SearchReport realize_coset_maps(const Field& F, std::uint32_t d, std::vector<Field::Elem> c_list,
                                const std::vector<std::vector<std::uint32_t>>& sigmas);

/// Smallest odd u > 1 with gcd(u, (q-1)/d) = 1, u != e(d-1) (mod p) for
/// e = d^-1 (mod p), and u != 1 (mod (q-1)/d). Without an explicit bound the
/// scan covers one full period lcm(2, p, (q-1)/d) of the constraints, which
/// decides existence; with a bound, finding nothing below it is an error.
SearchReport choose_odd_unit(std::uint32_t q, std::uint32_t p, std::uint32_t d,
                             std::optional<std::uint64_t> bound = std::nullopt);

/// All valid u of choose_odd_unit in ascending order (full period scan).
std::vector<std::uint64_t> odd_unit_candidates(std::uint32_t q, std::uint32_t p, std::uint32_t d,
                                               std::optional<std::uint64_t> bound = std::nullopt);

/// For a fixed u (o = u*d - (d-1)): smallest primitive xi with
/// ord((xi+1)^(d-1) (xi^o+1)) = (q-1)/d and log_xi(xi+1), log_xi(xi^o+1) both
/// congruent to 1 mod d. Returns the xi and the number of (u, xi) candidates
/// examined.
std::optional<Field::Elem> scan_cyclic_witness(const Field& F, std::uint32_t d, std::uint64_t u,
                                               std::uint64_t* candidates = nullptr);

/// Searches pairs (u ascending, xi ascending) for a non-additive complete
/// mapping f with f(0) = 0 such that f and f+id both permute the nonzero
/// elements in a single (q-1)-cycle; f multiplies the first d-1 cosets of the
/// rebased field by xi and the last one by xi^o. The witness is re-verified
/// before being reported.
SearchReport find_cyclic_complete_mapping(const Field& F, std::uint32_t d);

enum class EnumMode { Count, First, All };

/// Exact count (or first/all witnesses) of special complete mappings of F_q,
/// by backtracking over q-cycles written from 0, pruning any partial whose
/// partial f+id already repeats a value. Even q yields count 0 immediately.
/// Field sizes above 64 are rejected. Counting may be split across workers;
/// the result is independent of the worker count.
SearchReport enumerate_special(const Field& F, EnumMode mode = EnumMode::Count, unsigned workers = 1);

/// All pruned-search prefixes of the given length, in scan order; the count
/// of special complete mappings is the sum of the subtree counts of these
/// prefixes. Used for checkpoint files and work partitioning.
std::vector<std::vector<Field::Elem>> enumerate_special_frontier(const Field& F, std::uint32_t depth);

/// Count of special complete mappings whose cycle starts with the prefix.
std::uint64_t enumerate_special_from_prefix(const Field& F, std::span<const Field::Elem> prefix);

void write_checkpoint(const std::string& path, const std::vector<std::vector<Field::Elem>>& prefixes);
std::vector<std::vector<Field::Elem>> read_checkpoint(const std::string& path);

/// The special complete mapping x -> x+b of F_p for primes p having 2 as a
/// primitive root; throws otherwise or when b = 0.
PermTable shift_special_mapping(std::uint32_t p, Field::Elem b);

/// One row of the reference table of special complete mapping counts.
struct Table1Row {
    std::uint32_t q;
    std::int64_t count;  // -1 when no exhaustive count is on record
    enum class Exemplar { ShiftByOne, Cycle, None } exemplar;
    std::vector<Field::Elem> cycle;  // full q-cycle when exemplar == Cycle
};

/// Reference data for q in {3,5,7,9,11,13,17,19,23,25}; the F_25 entry uses
/// the modulus T^2-T+2.
const std::vector<Table1Row>& table1_rows();
FieldPtr table1_field(const Table1Row& row);
/// The exemplary mapping of a row (throws for the q = 9 row, which has none).
PermTable table1_exemplar(const Table1Row& row, FieldPtr F);

}  // namespace cyclofield
