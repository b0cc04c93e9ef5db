// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cyclofield/charsum.hpp"
#include "cyclofield/cyclomap.hpp"
#include "cyclofield/field.hpp"
#include "cyclofield/numtheory.hpp"
#include "cyclofield/search.hpp"

using namespace cyclofield;

namespace {

struct Failure {
    std::string msg;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure{msg};
}

// Orthomorphism bookkeeping: every orthomorphism any criterion produces is
// funneled through here and must have exactly one fixed point.
std::uint64_t g_ortho_checked = 0;
std::uint64_t g_ortho_bad = 0;

void record_orthomorphism(const PermTable& g) {
    ++g_ortho_checked;
    if (!is_orthomorphism(g) || fixed_point_count(g) != 1) ++g_ortho_bad;
}

PermTable plus_id(const PermTable& t) {
    PermTable g{t.field, std::vector<Field::Elem>(t.img.size())};
    for (Field::Elem x = 0; x < t.img.size(); ++x) g.img[x] = t.field->add(t.img[x], x);
    return g;
}

FieldPtr field_for(std::uint32_t q) {
    const auto fac = factorize(q);
    return Field::make(static_cast<std::uint32_t>(fac[0].first),
                       static_cast<std::uint32_t>(fac[0].second));
}

bool has_builtin_modulus(std::uint32_t q) {
    for (std::uint32_t b : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u})
        if (q == b) return true;
    return false;
}

std::vector<PrimePower> field_pool(std::uint32_t qmax, std::uint32_t qmin = 2) {
    std::vector<PrimePower> out;
    for (const auto& pp : prime_powers_upto(qmax)) {
        if (pp.q >= qmin && (pp.f == 1 || has_builtin_modulus(pp.q))) out.push_back(pp);
    }
    return out;
}

unsigned hw_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// --- criteria -------------------------------------------------------------

void crit1_table1_counts() {
    const std::vector<std::pair<std::uint32_t, std::uint64_t>> expect{
        {3, 2}, {5, 4}, {7, 36}, {9, 0}, {11, 760}, {13, 22212}};
    for (const auto& [q, want] : expect) {
        const auto F = field_for(q);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = enumerate_special(*F, EnumMode::Count, q == 13 ? hw_workers() : 1);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(r.count == want, "N_" + std::to_string(q) + " = " + std::to_string(r.count) +
                                     ", expected " + std::to_string(want));
        const double limit = q == 13 ? 600.0 : 1.0;
        require(secs <= limit, "q = " + std::to_string(q) + " took " + std::to_string(secs) + " s");
        if (q != 9) {
            const auto first = enumerate_special(*F, EnumMode::First);
            require(first.found && first.witness_cycle.has_value(),
                    "no witness at q = " + std::to_string(q));
            const auto t = table_from_cycle(F, *first.witness_cycle);
            require(is_special(t), "witness fails is_special at q = " + std::to_string(q));
            record_orthomorphism(plus_id(t));
        }
    }
}

void crit2_table1_exemplars() {
    std::uint32_t verified = 0;
    for (const auto& row : table1_rows()) {
        if (row.exemplar == Table1Row::Exemplar::None) continue;
        const auto F = table1_field(row);
        const auto t = table1_exemplar(row, F);
        require(is_special(t), "exemplar fails is_special at q = " + std::to_string(row.q));
        record_orthomorphism(plus_id(t));
        ++verified;
    }
    require(verified == 9, "expected 9 exemplary mappings, saw " + std::to_string(verified));
}

void crit3_char_identities() {
    for (const auto& pp : prime_powers_upto(64)) {
        const auto F = Field::make(pp.p, pp.f);
        const std::uint64_t n = pp.q - 1;
        for (std::uint64_t e : divisors(n)) {
            const auto ta = order_indicator_table(*F, e, FeForm::Divisor);
            const auto tb = order_indicator_table(*F, e, FeForm::ExactOrder);
            for (Field::Elem x = 0; x < pp.q; ++x) {
                const cplx want = (x != 0 && F->order(x) == e) ? 1.0 : 0.0;
                require(std::abs(ta[x] - want) < 1e-9, "f_e divisor form off at q=" + std::to_string(pp.q));
                require(std::abs(tb[x] - want) < 1e-9, "f_e order form off at q=" + std::to_string(pp.q));
            }
        }
        for (std::uint64_t d : divisors(n)) {
            for (std::uint64_t i = 0; i < d; ++i) {
                const auto td = coset_indicator_table(*F, static_cast<std::uint32_t>(d),
                                                      static_cast<std::int64_t>(i));
                for (Field::Elem x = 0; x < pp.q; ++x) {
                    const cplx want = (x != 0 && F->dlog(x) % d == i) ? 1.0 : 0.0;
                    require(std::abs(td[x] - want) < 1e-9,
                            "g_{d,i} off at q=" + std::to_string(pp.q) + " d=" + std::to_string(d));
                }
            }
        }
    }
}

std::vector<Poly> random_weil_polys(const Field& F, std::mt19937_64& rng, std::size_t r,
                                    std::uint32_t max_total_deg) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Poly> polys;
        std::uint32_t left = max_total_deg;
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i) {
            const std::uint32_t deg_cap = left - (static_cast<std::uint32_t>(r - i) - 1);
            const std::uint32_t deg = 1 + static_cast<std::uint32_t>(rng() % std::min(3u, deg_cap));
            left -= deg;
            std::vector<Field::Elem> c(deg + 1);
            for (auto& ci : c) ci = static_cast<Field::Elem>(rng() % F.q());
            while (c.back() == 0) c.back() = static_cast<Field::Elem>(rng() % F.q());
            polys.push_back(make_poly(F, c));
            ok = ok && poly_is_squarefree(F, polys.back());
        }
        if (!ok) continue;
        try {
            require_weil_polys(F, polys);
            return polys;
        } catch (const std::invalid_argument&) {
        }
    }
    throw Failure{"could not sample valid polynomials"};
}

void crit4_weil_bound() {
    std::mt19937_64 rng(0x4A11);
    const auto pool = field_pool(101, 3);
    for (int it = 0; it < 1000; ++it) {
        const auto& pp = pool[rng() % pool.size()];
        const auto F = Field::make(pp.p, pp.f);
        const std::size_t r = 1 + rng() % 3;
        const auto polys = random_weil_polys(*F, rng, r, 6);
        std::vector<CharIndex> chars(r);
        bool any_np = false;
        for (auto& k : chars) {
            k = rng() % (pp.q - 1);
            any_np = any_np || k != 0;
        }
        if (!any_np) chars[rng() % r] = 1 + rng() % (pp.q - 2 > 0 ? pp.q - 2 : 1);
        require(weil_bound_holds(*F, polys, chars),
                "Weil bound violated at q = " + std::to_string(pp.q));
    }
    // all-principal instances: the sum counts the non-roots exactly
    for (int it = 0; it < 200; ++it) {
        const auto& pp = pool[rng() % pool.size()];
        const auto F = Field::make(pp.p, pp.f);
        const std::size_t r = 1 + rng() % 3;
        const auto polys = random_weil_polys(*F, rng, r, 6);
        const std::vector<CharIndex> chars(r, 0);
        const cplx s = weil_sum(*F, polys, chars);
        std::uint64_t null_count = 0;
        for (Field::Elem x = 0; x < pp.q; ++x) {
            for (const auto& Q : polys) {
                if (poly_eval(*F, Q, x) == 0) {
                    ++null_count;
                    break;
                }
            }
        }
        require(std::abs(s - cplx(static_cast<double>(pp.q - null_count))) < 1e-6,
                "all-principal sum mismatch at q = " + std::to_string(pp.q));
    }
}

void crit5_count_crosscheck() {
    // F_7 anchors
    const auto F7 = Field::make(7);
    const std::vector<Poly> t{parse_poly(*F7, "0,1")};
    const std::vector<Poly> tq{parse_poly(*F7, "0,1"), parse_poly(*F7, "1,1")};
    const auto anchor = [&](std::span<const Poly> polys, std::vector<std::uint64_t> dl,
                            std::vector<std::int64_t> jl, std::uint32_t d, std::uint64_t want) {
        const auto direct = count_with_orders_and_logs(*F7, polys, dl, jl, d);
        const auto ind = count_via_indicators(*F7, polys, dl, jl, d);
        require(direct == want && ind == want, "anchor count mismatch");
    };
    anchor(t, {1}, {1}, 2, 2);
    anchor(t, {2}, {0}, 2, 2);
    anchor(tq, {1, 1}, {1, 1}, 2, 0);

    std::mt19937_64 rng(0xC0DE);
    const auto pool = field_pool(49, 5);
    int done = 0;
    while (done < 100) {
        const auto& pp = pool[rng() % pool.size()];
        const auto F = Field::make(pp.p, pp.f);
        const auto divs = divisors(pp.q - 1);
        const std::uint32_t d = static_cast<std::uint32_t>(divs[rng() % divs.size()]);
        const std::size_t r = 1 + rng() % 2;
        const auto polys = random_weil_polys(*F, rng, r, 4);
        std::vector<std::uint64_t> d_list(r);
        std::vector<std::int64_t> j_list(r);
        for (std::size_t i = 0; i < r; ++i) {
            j_list[i] = static_cast<std::int64_t>(rng() % d);
            d_list[i] = j_list[i] == 0
                            ? d
                            : std::gcd<std::uint64_t>(static_cast<std::uint64_t>(j_list[i]), d);
        }
        const auto direct = count_with_orders_and_logs(*F, polys, d_list, j_list, d);
        const auto ind = count_via_indicators(*F, polys, d_list, j_list, d);
        require(direct == ind, "indicator count mismatch at q = " + std::to_string(pp.q));
        ++done;
    }
}

void crit6_cycle_type_oracle() {
    std::mt19937_64 rng(0x0C1E);
    const auto pool = field_pool(5000, 5);
    int done = 0;
    while (done < 200) {
        const auto& pp = pool[rng() % pool.size()];
        std::vector<std::uint32_t> ds;
        for (std::uint32_t d = 1; d <= 12; ++d)
            if ((pp.q - 1) % d == 0) ds.push_back(d);
        const std::uint32_t d = ds[rng() % ds.size()];
        const auto F = Field::make(pp.p, pp.f);
        std::vector<std::uint32_t> psi(d);
        for (std::uint32_t i = 0; i < d; ++i) psi[i] = i;
        std::shuffle(psi.begin(), psi.end(), rng);
        std::vector<Field::Elem> a(d);
        for (std::uint32_t i = 0; i < d; ++i) {
            const std::int64_t e =
                static_cast<std::int64_t>(psi[i]) - i +
                static_cast<std::int64_t>(d) * static_cast<std::int64_t>(rng() % ((pp.q - 1) / d));
            a[i] = F->omega_pow(e);
        }
        const auto m = make_cyclotomic(F, d, a);
        require(cycle_type(m) == cycle_type_by_orbits(m),
                "cycle type mismatch at q = " + std::to_string(pp.q) + ", d = " + std::to_string(d));
        require(cycle_type(m).total() == pp.q, "cycle type total wrong");
        ++done;
    }
}

void crit7_construction_roundtrips() {
    std::mt19937_64 rng(0x0707);
    const auto pool = field_pool(2000, 3);
    int done = 0;
    while (done < 50) {
        const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % 5);
        const auto parts = partitions_desc(d);
        const auto& lengths = parts[rng() % parts.size()];
        PsiFunction h;
        h.degree = d;
        std::uint32_t start = 0;
        for (auto len : lengths) {
            std::vector<std::uint32_t> cyc(len);
            for (std::uint32_t i = 0; i < len; ++i) cyc[i] = start + i;
            h.cycles.push_back(cyc);
            h.values.push_back(1 + rng() % 4);
            start += len;
        }
        std::vector<const PrimePower*> qs;
        for (const auto& pp : pool)
            if (is_admissible(h, pp.q)) qs.push_back(&pp);
        if (qs.empty()) continue;
        const auto& pp = *qs[rng() % qs.size()];
        const auto F = Field::make(pp.p, pp.f);
        const auto m = construct_from_h(F, h);
        require(sym_function_of(m) == h, "construct_from_h: sym function mismatch");
        require(cycle_type(m) == gamma_h(h, pp.q), "construct_from_h: cycle type mismatch");
        const auto mw = construct_f_omega(F, h);
        require(sym_function_of(mw) == h, "construct_f_omega: sym function mismatch");
        for (std::size_t k = 0; k < h.cycles.size(); ++k) {
            Field::Elem prod = 1;
            for (auto i : h.cycles[k]) prod = F->mul(prod, mw.a[i]);
            require(prod == F->omega_pow(static_cast<std::int64_t>(d) *
                                         static_cast<std::int64_t>(h.values[k])),
                    "construct_f_omega: branch product off");
        }
        ++done;
    }
}

void crit8_c_constant() {
    for (std::uint64_t d = 1; d <= 12; ++d) {
        for (std::size_t r = 1; r <= 3; ++r) {
            const std::vector<std::uint64_t> dl(r, d);
            require(c_constant(dl, d) == Rational(1), "c(d,...,d;d) != 1 at d = " + std::to_string(d));
        }
    }
    require(c_constant(std::vector<std::uint64_t>{1}, 4) == Rational(1, 2), "c([1],4) != 1/2");
    for (std::uint64_t d = 1; d <= 12; ++d) {
        const auto divs = divisors(d);
        std::vector<std::vector<std::uint64_t>> tuples{{}};
        for (std::size_t r = 1; r <= 3; ++r) {
            std::vector<std::vector<std::uint64_t>> next;
            for (const auto& tup : tuples) {
                for (std::uint64_t di : divs) {
                    auto t2 = tup;
                    t2.push_back(di);
                    next.push_back(t2);
                    const Rational c = c_constant(t2, d);
                    std::int64_t dr = 1;
                    for (std::size_t i = 0; i < t2.size(); ++i) dr *= static_cast<std::int64_t>(d);
                    require(Rational(1, dr) <= c && c <= Rational(1),
                            "c out of [1/d^r, 1] at d = " + std::to_string(d));
                }
            }
            tuples = std::move(next);
        }
    }
}

void crit9_thm3_witness() {
    const auto F = Field::make(17);
    const auto r = find_cyclic_complete_mapping(*F, 2);
    require(r.found, "no witness at q = 17");
    require(r.u == 3 && r.o == 5 && r.xi == 10, "witness differs from the deterministic order");
    require(r.map.has_value(), "missing witness map");
    const auto t = to_table(*r.map);
    require(t.img[0] == 0, "f(0) != 0");
    require(!is_additive(t), "witness is additive");
    CycleType want;
    want.add(1, 1);
    want.add(16, 1);
    require(cycle_type_by_orbits(*r.map) == want, "f is not a 16-cycle plus fixed point");
    require(cycle_type_by_orbits(translate(*r.map, 1)) == want, "f+id is not a 16-cycle plus fixed point");
    // direct re-check of the defining conditions at (u, xi)
    const std::uint64_t o = *r.o;
    const Field::Elem xi = *r.xi;
    require(F->order(xi) == 16, "condition (1) fails");
    const Field::Elem y1 = F->add(xi, 1), y2 = F->add(F->pow(xi, o), 1);
    require(F->order(F->mul(y1, y2)) == 8, "condition (2) fails");
    const auto Fx = F->rebase(xi);
    require(Fx->dlog(y1) % 2 == 1, "condition (3) fails");
    require(Fx->dlog(y2) % 2 == 1, "condition (4) fails");
    record_orthomorphism(plus_id(t));
}

void crit10_shift_mappings() {
    for (std::uint32_t p : {3u, 5u, 11u, 13u, 19u, 29u}) {
        const auto t = shift_special_mapping(p, 1);
        require(is_special(t), "x+1 not special over F_" + std::to_string(p));
        record_orthomorphism(plus_id(t));
    }
}

void crit11_orthomorphism_fixed_points() {
    require(g_ortho_checked >= 20, "too few orthomorphisms were produced by the suites");
    require(g_ortho_bad == 0, std::to_string(g_ortho_bad) + " orthomorphisms had != 1 fixed point");
}

void crit12_desk_behavior() {
    const auto h = PsiFunction::parse("(0,1)(2); h=3,4");
    for (std::uint32_t q : {37u, 73u, 109u}) {
        const auto F = Field::make(q);
        const auto r = find_complete_cyclotomic(*F, h, {1});
        if (!r.found) {
            require(r.exhausted, "neither found nor exhausted at q = " + std::to_string(q));
            require(r.candidates_tested == totient(q - 1), "scan did not cover all roots");
            continue;
        }
        require(r.map.has_value() && r.omega.has_value(), "found without witness");
        CycleType want;
        want.add(1, 1);
        want.add(2 * (q - 1) / 9, 3);
        want.add((q - 1) / 12, 4);
        require(cycle_type_by_orbits(*r.map) == want, "witness cycle type off at q = " + std::to_string(q));
        const auto t = to_table(*r.map);
        require(is_complete(t), "witness is not a complete mapping");
        record_orthomorphism(plus_id(t));
    }
    // all 16 coset-behavior prescriptions for d = 2 at q = 13
    const auto F13 = Field::make(13);
    const std::vector<std::vector<std::uint32_t>> funcs{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    int found = 0, exhausted = 0;
    for (const auto& s1 : funcs) {
        for (const auto& s2 : funcs) {
            const auto r = realize_coset_maps(*F13, 2, {0, 1}, {s1, s2});
            if (!r.found) {
                require(r.exhausted, "realize_coset_maps neither found nor exhausted");
                ++exhausted;
                continue;
            }
            ++found;
            require(r.map.has_value(), "realize_coset_maps: found without map");
            for (Field::Elem x = 1; x < 13; ++x) {
                const Field::Elem y1 = r.map->eval(x);
                const Field::Elem y2 = translate(*r.map, 1).eval(x);
                require(y1 != 0 && F13->coset_index(2, y1) == s1[F13->coset_index(2, x)],
                        "coset image of f wrong");
                require(y2 != 0 && F13->coset_index(2, y2) == s2[F13->coset_index(2, x)],
                        "coset image of f+id wrong");
            }
        }
    }
    require(found + exhausted == 16, "missing sigma pairs");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void()> fn;
        double limit_secs;
    };
    const std::vector<Criterion> criteria{
        {1, "table1-counts-exact", crit1_table1_counts, 600.0},
        {2, "table1-exemplars-verify", crit2_table1_exemplars, 1.0},
        {3, "character-identity-sweep", crit3_char_identities, 60.0},
        {4, "weil-bound", crit4_weil_bound, 60.0},
        {5, "counting-cross-check", crit5_count_crosscheck, 60.0},
        {6, "cycle-type-oracle-equivalence", crit6_cycle_type_oracle, 30.0},
        {7, "constructive-round-trips", crit7_construction_roundtrips, 30.0},
        {8, "c-constant", crit8_c_constant, 5.0},
        {9, "thm3-desk-witness", crit9_thm3_witness, 1.0},
        {10, "shift-special-mappings", crit10_shift_mappings, 1.0},
        {11, "orthomorphism-fixed-point", crit11_orthomorphism_fixed_points, 1.0},
        {12, "thm1-thm2-desk-behavior", crit12_desk_behavior, 10.0},
    };
    int passed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            c.fn();
        } catch (const Failure& f) {
            err = f.msg;
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (err.empty() && secs > c.limit_secs) {
            err = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_secs) + " s";
        }
        if (err.empty()) {
            std::printf("[PASS] %2d %-32s (%.2f s)\n", c.id, c.name, secs);
            ++passed;
        } else {
            std::printf("[FAIL] %2d %-32s (%.2f s): %s\n", c.id, c.name, secs, err.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
