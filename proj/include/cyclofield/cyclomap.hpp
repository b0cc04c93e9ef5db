#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclofield/field.hpp"

namespace cyclofield {

/// Cycle type of a permutation: multiset {cycle length -> multiplicity},
/// i.e. the monomial prod_l x_l^{k_l}.
struct CycleType {
    std::map<std::uint64_t, std::uint64_t> mult;

    void add(std::uint64_t length, std::uint64_t count) {
        if (count > 0) mult[length] += count;
    }
    /// Sum of length * multiplicity (the number of moved-or-fixed points).
    std::uint64_t total() const;
    bool operator==(const CycleType&) const = default;
    /// {"1":1,"8":3,"3":4} -- length 1 first, then descending lengths.
    std::string json() const;
};

/// A permutation psi of {0..d-1} given by its cycles together with a positive
/// integer value per cycle. Canonical form: each cycle starts at its minimum
/// element and cycles are sorted by minimum element.
struct PsiFunction {
    std::uint32_t degree = 0;
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<std::uint64_t> values;  // parallel to cycles

    /// Image array of the underlying permutation.
    std::vector<std::uint32_t> permutation() const;
    std::uint64_t lcm_values() const;
    std::uint64_t max_value() const;
    /// Whether the underlying permutation is special: cycles occupy
    /// consecutive index intervals in decreasing length order.
    bool is_special() const;

    bool operator==(const PsiFunction&) const = default;

    /// Text format "(0,1)(2); h=3,4" -- cycles in canonical order, values in
    /// the same order.
    static PsiFunction parse(const std::string& text);
    std::string str() const;

    /// Builds the canonical form from an image array and a value for each
    /// cycle (indexed by the cycle's minimum element order of discovery).
    static PsiFunction from_permutation(const std::vector<std::uint32_t>& perm,
                                        const std::vector<std::uint64_t>& values_by_cycle);
};

/// Index-d first-order cyclotomic mapping: fixes 0 and multiplies the coset
/// omega^i C by the branch constant a[i] (which may be 0, in which case the
/// map is not a permutation).
struct CyclotomicMap {
    FieldPtr field;
    std::uint32_t d = 1;
    std::vector<Field::Elem> a;

    Field::Elem eval(Field::Elem x) const;
};

/// Validates d | q-1 and |a| = d.
CyclotomicMap make_cyclotomic(FieldPtr F, std::uint32_t d, std::vector<Field::Elem> a);

/// The permutation psi of the cosets with f(C_i) = C_psi(i), present exactly
/// when the map is a permutation of F_q.
std::optional<std::vector<std::uint32_t>> induced_coset_perm(const CyclotomicMap& m);

/// Exact cycle type from the coset permutation and the branch-product orders
/// (one x_1 factor accounts for the fixed point 0). Throws if the map is not
/// a permutation.
CycleType cycle_type(const CyclotomicMap& m);

/// Cycle type by explicit orbit traversal over all q elements; an independent
/// cross-check for cycle_type. Throws if the map is not a permutation.
CycleType cycle_type_by_orbits(const CyclotomicMap& m);

/// The value function of the map: each cycle zeta of psi gets
/// (q-1)/(d*ord(pi(zeta))) where pi(zeta) is the product of the branch
/// constants along zeta.
PsiFunction sym_function_of(const CyclotomicMap& m);

/// Whether d*lcm(ran(h)) divides q-1.
bool is_admissible(const PsiFunction& h, std::uint64_t q);

/// The cycle type x_1 prod_zeta x_{l(zeta)(q-1)/(d h(zeta))}^{h(zeta)}
/// attached to an admissible q (equal lengths merged).
CycleType gamma_h(const PsiFunction& h, std::uint64_t q);

/// A cyclotomic permutation f with sym_function_of(f) = h, built with
/// b_zeta = omega^(d*h(zeta)) placed at the maximal index of each cycle.
CyclotomicMap construct_from_h(FieldPtr F, const PsiFunction& h);

/// The permutation of {0..d-1} whose cycles are the consecutive intervals of
/// the given descending lengths (which must sum to d).
std::vector<std::uint32_t> special_perm(const std::vector<std::uint32_t>& lengths);

/// For h over a special psi: branch constants omega off terminal indices and
/// omega^(-l(zeta)+1+d*h(zeta)) at the terminal index of each cycle, so that
/// pi(zeta) = omega^(d*h(zeta)) for every cycle.
CyclotomicMap construct_f_omega(FieldPtr F, const PsiFunction& h);

/// The map x -> f(x) + c*x, again first-order cyclotomic with branch
/// constants a_i + c (zero branches are kept, not rejected).
CyclotomicMap translate(const CyclotomicMap& m, Field::Elem c);

/// All PsiFunctions over special permutations of degree d with every value in
/// {1..max_value}. Partitions are generated in reverse lexicographic order
/// and value tuples in lexicographic order.
std::vector<PsiFunction> enumerate_sym_functions(std::uint32_t d, std::uint64_t max_value);

}  // namespace cyclofield
