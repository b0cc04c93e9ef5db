#include "cyclofield/search.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclofield/numtheory.hpp"

namespace cyclofield {

bool is_permutation(const PermTable& t) {
    const std::uint32_t q = t.field->q();
    if (t.img.size() != q) return false;
    std::vector<bool> hit(q, false);
    for (Field::Elem y : t.img) {
        if (y >= q || hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

std::uint32_t fixed_point_count(const PermTable& t) {
    std::uint32_t n = 0;
    for (Field::Elem x = 0; x < t.img.size(); ++x) n += t.img[x] == x ? 1 : 0;
    return n;
}

PermTable to_table(const CyclotomicMap& m) {
    PermTable t{m.field, std::vector<Field::Elem>(m.field->q())};
    for (Field::Elem x = 0; x < m.field->q(); ++x) t.img[x] = m.eval(x);
    return t;
}

PermTable shift_table(FieldPtr F, Field::Elem b) {
    PermTable t{F, std::vector<Field::Elem>(F->q())};
    for (Field::Elem x = 0; x < F->q(); ++x) t.img[x] = F->add(x, b);
    return t;
}

PermTable table_from_cycle(FieldPtr F, std::span<const Field::Elem> cycle) {
    PermTable t{F, std::vector<Field::Elem>(F->q())};
    for (Field::Elem x = 0; x < F->q(); ++x) t.img[x] = x;
    std::vector<bool> seen(F->q(), false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Field::Elem x = cycle[i];
        if (x >= F->q() || seen[x]) throw std::invalid_argument("cycle: invalid or repeated element");
        seen[x] = true;
        t.img[x] = cycle[(i + 1) % cycle.size()];
    }
    return t;
}

std::string cycle_notation(const PermTable& t) {
    const std::uint32_t q = t.field->q();
    std::vector<bool> seen(q, false);
    std::string out;
    for (Field::Elem x = 0; x < q; ++x) {
        if (seen[x]) continue;
        out += "(";
        bool first = true;
        for (Field::Elem y = x; !seen[y]; y = t.img[y]) {
            seen[y] = true;
            if (!first) out += ",";
            first = false;
            out += std::to_string(y);
        }
        out += ")";
    }
    return out;
}

bool is_complete(const PermTable& t) {
    if (!is_permutation(t)) return false;
    const Field& F = *t.field;
    std::vector<bool> hit(F.q(), false);
    for (Field::Elem x = 0; x < F.q(); ++x) {
        const Field::Elem y = F.add(t.img[x], x);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool is_orthomorphism(const PermTable& t) {
    if (!is_permutation(t)) return false;
    const Field& F = *t.field;
    std::vector<bool> hit(F.q(), false);
    for (Field::Elem x = 0; x < F.q(); ++x) {
        const Field::Elem y = F.sub(t.img[x], x);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool is_additive(const PermTable& t) {
    const Field& F = *t.field;
    if (t.img[0] != 0) return false;
    for (Field::Elem x = 0; x < F.q(); ++x) {
        for (Field::Elem y = x; y < F.q(); ++y) {
            if (t.img[F.add(x, y)] != F.add(t.img[x], t.img[y])) return false;
        }
    }
    return true;
}

bool is_special(const PermTable& t) {
    if (!is_permutation(t)) return false;
    const Field& F = *t.field;
    const std::uint32_t q = F.q();
    if (q < 2) return false;
    std::uint32_t len = 0;
    Field::Elem x = 0;
    do {
        x = t.img[x];
        ++len;
    } while (x != 0 && len <= q);
    if (len != q) return false;
    // f+id must be a permutation with one fixed point and a (q-1)-cycle
    std::vector<Field::Elem> g(q);
    std::vector<bool> hit(q, false);
    std::uint32_t fixed = 0;
    for (Field::Elem v = 0; v < q; ++v) {
        g[v] = F.add(t.img[v], v);
        if (hit[g[v]]) return false;
        hit[g[v]] = true;
        fixed += g[v] == v ? 1 : 0;
    }
    if (fixed != 1) return false;
    if (g[0] == 0) return false;
    len = 0;
    x = 0;
    do {
        x = g[x];
        ++len;
    } while (x != 0 && len <= q);
    return len == q - 1;
}

SearchReport find_element_with_orders(const Field& F, std::span<const Poly> polys,
                                      std::span<const std::uint64_t> d_list) {
    require_weil_polys(F, polys);
    if (polys.size() != d_list.size())
        throw std::invalid_argument("find_xi: need one d_i per polynomial");
    for (std::uint64_t di : d_list) {
        if (di == 0 || (F.q() - 1) % di != 0)
            throw std::invalid_argument("find_xi: d_i must divide q-1");
    }
    SearchReport r;
    for (Field::Elem xi = 0; xi < F.q(); ++xi) {
        ++r.candidates_tested;
        bool ok = true;
        for (std::size_t i = 0; i < polys.size() && ok; ++i) {
            const Field::Elem v = poly_eval(F, polys[i], xi);
            ok = v != 0 && F.order(v) == (F.q() - 1) / d_list[i];
        }
        if (ok) {
            r.found = true;
            r.xi = xi;
            return r;
        }
    }
    r.exhausted = true;
    return r;
}

SearchReport find_element_with_orders_and_logs(const Field& F, std::span<const Poly> polys,
                                               std::span<const std::uint64_t> d_list,
                                               std::span<const std::int64_t> j_list, std::uint32_t d) {
    require_weil_polys(F, polys);
    if (d == 0 || (F.q() - 1) % d != 0) throw std::invalid_argument("find_xi: d must divide q-1");
    if (polys.size() != d_list.size() || polys.size() != j_list.size())
        throw std::invalid_argument("find_xi: need one (d_i, j_i) pair per polynomial");
    std::uint64_t l = 1;
    std::vector<std::uint32_t> jmod(j_list.size());
    for (std::size_t i = 0; i < d_list.size(); ++i) {
        if (d_list[i] == 0) throw std::invalid_argument("find_xi: d_i must be positive");
        l = std::lcm(l, d_list[i]);
        std::int64_t j = j_list[i] % static_cast<std::int64_t>(d);
        if (j < 0) j += d;
        jmod[i] = static_cast<std::uint32_t>(j);
        const std::uint64_t g = std::gcd<std::uint64_t>(jmod[i], d);
        if ((jmod[i] == 0 ? d : g) != d_list[i])
            throw std::invalid_argument("find_xi: gcd(j_i, d) must equal d_i");
    }
    if (d % l != 0) throw std::invalid_argument("find_xi: lcm(d_list) does not divide d");
    SearchReport r;
    for (Field::Elem xi = 0; xi < F.q(); ++xi) {
        ++r.candidates_tested;
        bool ok = true;
        for (std::size_t i = 0; i < polys.size() && ok; ++i) {
            const Field::Elem v = poly_eval(F, polys[i], xi);
            ok = v != 0 && F.order(v) == (F.q() - 1) / d_list[i] && F.dlog(v) % d == jmod[i];
        }
        if (ok) {
            r.found = true;
            r.xi = xi;
            return r;
        }
    }
    r.exhausted = true;
    return r;
}

SearchReport find_complete_cyclotomic(const Field& F, const PsiFunction& h,
                                      std::vector<Field::Elem> c_list) {
    if (!h.is_special())
        throw std::invalid_argument("find_complete: h must live over a special permutation");
    if (!is_admissible(h, F.q()))
        throw std::invalid_argument("find_complete: q = " + std::to_string(F.q()) + " is not admissible");
    // zero translates are trivially permutations; duplicates add nothing
    std::vector<Field::Elem> cs;
    for (Field::Elem c : c_list) {
        if (c == 0 || c >= F.q()) {
            if (c >= F.q()) throw std::invalid_argument("find_complete: c out of range");
            continue;
        }
        if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
    const std::uint32_t d = h.degree;
    const CycleType want = gamma_h(h, F.q());
    bool has_nonterminal = false;
    for (const auto& cyc : h.cycles) has_nonterminal = has_nonterminal || cyc.size() >= 2;

    SearchReport r;
    for (Field::Elem w : F.primitive_roots()) {
        ++r.candidates_tested;
        const FieldPtr Fw = F.rebase(w);
        const CyclotomicMap fw = construct_f_omega(Fw, h);
        const auto in_C = [&](Field::Elem v) { return v != 0 && Fw->dlog(v) % d == 0; };
        bool strong = true;
        for (Field::Elem c : cs) {
            if (has_nonterminal && !in_C(Fw->add(w, c))) {
                strong = false;
                break;
            }
            for (std::size_t k = 0; k < h.cycles.size() && strong; ++k) {
                const std::int64_t e = -static_cast<std::int64_t>(h.cycles[k].size()) + 1 +
                                       static_cast<std::int64_t>(d) * static_cast<std::int64_t>(h.values[k]);
                strong = in_C(Fw->add(Fw->omega_pow(e), c));
            }
            if (!strong) break;
        }
        const auto translates_permute = [&] {
            for (Field::Elem c : cs) {
                if (!induced_coset_perm(translate(fw, c))) return false;
            }
            return true;
        };
        if (strong) {
            if (cycle_type(fw) != want || !translates_permute())
                throw std::runtime_error("find_complete: witness failed re-verification");
            r.found = true;
            r.omega = w;
            r.map = fw;
            return r;
        }
        if (!r.weak_omega && translates_permute()) r.weak_omega = w;
    }
    r.exhausted = true;
    return r;
}

SearchReport realize_coset_maps(const Field& F, std::uint32_t d, std::vector<Field::Elem> c_list,
                                const std::vector<std::vector<std::uint32_t>>& sigmas) {
    if (d == 0 || (F.q() - 1) % d != 0)
        throw std::invalid_argument("realize_cosets: d does not divide q-1");
    if (c_list.empty() || c_list.size() != sigmas.size())
        throw std::invalid_argument("realize_cosets: need one coset function per translate constant");
    for (std::size_t i = 0; i < c_list.size(); ++i) {
        if (c_list[i] >= F.q()) throw std::invalid_argument("realize_cosets: c out of range");
        for (std::size_t j = i + 1; j < c_list.size(); ++j) {
            if (c_list[i] == c_list[j])
                throw std::invalid_argument("realize_cosets: translate constants must be distinct");
        }
        if (sigmas[i].size() != d) throw std::invalid_argument("realize_cosets: sigma must have d entries");
        for (std::uint32_t v : sigmas[i]) {
            if (v >= d) throw std::invalid_argument("realize_cosets: sigma value out of range");
        }
    }
    const std::uint32_t q = F.q();
    const Field::Elem shift = c_list[0];
    std::vector<Field::Elem> cshift(c_list.size());
    for (std::size_t j = 0; j < c_list.size(); ++j) cshift[j] = F.sub(c_list[j], shift);

    // generators of the index-d subgroup C, ascending by code
    std::vector<Field::Elem> gens;
    for (Field::Elem x = 1; x < q; ++x) {
        if (F.order(x) == (q - 1) / d) gens.push_back(x);
    }

    SearchReport r;
    std::vector<Field::Elem> chosen(d, 0);
    bool all_found = true;
    for (std::uint32_t i = 0; i < d; ++i) {
        const std::int64_t delta = static_cast<std::int64_t>(sigmas[0][i]) - static_cast<std::int64_t>(i);
        const Field::Elem b = F.omega_pow(delta);
        bool found_i = false;
        for (Field::Elem gam : gens) {
            ++r.candidates_tested;
            bool ok = true;
            for (std::size_t j = 1; j < cshift.size() && ok; ++j) {
                const Field::Elem v = F.add(F.mul(b, gam), cshift[j]);
                if (v == 0) {
                    ok = false;
                    break;
                }
                std::int64_t need = (static_cast<std::int64_t>(sigmas[j][i]) - static_cast<std::int64_t>(i)) %
                                    static_cast<std::int64_t>(d);
                if (need < 0) need += d;
                ok = static_cast<std::int64_t>(F.dlog(v) % d) == need;
            }
            if (ok) {
                chosen[i] = F.mul(b, gam);
                found_i = true;
                break;
            }
        }
        if (!found_i) all_found = false;
    }
    if (!all_found) {
        r.exhausted = true;
        return r;
    }
    std::vector<Field::Elem> a(d);
    for (std::uint32_t i = 0; i < d; ++i) a[i] = F.sub(chosen[i], shift);
    CyclotomicMap m = make_cyclotomic(std::make_shared<Field>(F), d, a);
    // verify (f + c_j id)(C_i) = C_{sigma_j(i)} through the branch constants
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < c_list.size(); ++j) {
            const Field::Elem v = F.add(a[i], c_list[j]);
            if (v == 0 || (i + F.dlog(v)) % d != sigmas[j][i] % d)
                throw std::runtime_error("realize_cosets: witness failed re-verification");
        }
    }
    r.found = true;
    r.map = std::move(m);
    std::vector<Field::Elem> gam_list(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        const std::int64_t delta = static_cast<std::int64_t>(sigmas[0][i]) - static_cast<std::int64_t>(i);
        gam_list[i] = F.mul(F.inv(F.omega_pow(delta)), chosen[i]);
    }
    r.gamma = std::move(gam_list);
    return r;
}

namespace {

struct OddUnitParams {
    std::uint64_t m;          // (q-1)/d
    std::uint64_t forbidden;  // e(d-1) mod p
    std::uint64_t period;     // lcm(2, p, m)
};

OddUnitParams odd_unit_params(std::uint32_t q, std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw std::invalid_argument("choose_u: p must be prime");
    std::uint64_t qq = q;
    while (qq > 1 && qq % p == 0) qq /= p;
    if (qq != 1) throw std::invalid_argument("choose_u: q must be a power of p");
    if (d <= 1 || (q - 1) % d != 0) throw std::invalid_argument("choose_u: need d > 1 dividing q-1");
    if (d % p == 0) throw std::invalid_argument("choose_u: p divides d, no inverse of d mod p");
    OddUnitParams out;
    out.m = (q - 1) / d;
    const std::uint64_t e = mod_inverse(d % p, p);
    out.forbidden = e * ((d - 1) % p) % p;
    out.period = std::lcm<std::uint64_t>(std::lcm<std::uint64_t>(2, p), out.m);
    return out;
}

bool odd_unit_ok(std::uint64_t u, std::uint32_t p, const OddUnitParams& pr) {
    return std::gcd(u, pr.m) == 1 && u % p != pr.forbidden && u % pr.m != 1 % pr.m;
}

}  // namespace

SearchReport choose_odd_unit(std::uint32_t q, std::uint32_t p, std::uint32_t d,
                             std::optional<std::uint64_t> bound) {
    const OddUnitParams pr = odd_unit_params(q, p, d);
    std::uint64_t hi = 1 + pr.period;
    if (bound) hi = std::min(hi, *bound == 0 ? 0 : *bound - 1);
    SearchReport r;
    for (std::uint64_t u = 3; u <= hi; u += 2) {
        ++r.candidates_tested;
        if (odd_unit_ok(u, p, pr)) {
            r.found = true;
            r.u = u;
            return r;
        }
    }
    if (bound) throw std::invalid_argument("choose_u: no candidate below the bound");
    r.exhausted = true;
    return r;
}

std::vector<std::uint64_t> odd_unit_candidates(std::uint32_t q, std::uint32_t p, std::uint32_t d,
                                               std::optional<std::uint64_t> bound) {
    const OddUnitParams pr = odd_unit_params(q, p, d);
    std::uint64_t hi = 1 + pr.period;
    if (bound) hi = std::min(hi, *bound == 0 ? 0 : *bound - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 3; u <= hi; u += 2) {
        if (odd_unit_ok(u, p, pr)) out.push_back(u);
    }
    return out;
}

std::optional<Field::Elem> scan_cyclic_witness(const Field& F, std::uint32_t d, std::uint64_t u,
                                               std::uint64_t* candidates) {
    const std::uint64_t n = F.q() - 1;
    if (d <= 1 || n % d != 0) throw std::invalid_argument("thm3: need d > 1 dividing q-1");
    const std::uint64_t o = u * d - (d - 1);
    for (Field::Elem xi = 1; xi < F.q(); ++xi) {
        if (candidates != nullptr) ++*candidates;
        const std::uint64_t t = F.dlog(xi);
        if (std::gcd(t, n) != 1) continue;  // (1) ord(xi) = q-1
        const std::uint64_t tinv = mod_inverse(t, n);
        const Field::Elem y1 = F.add(xi, 1);
        if (y1 == 0) continue;
        if (tinv * F.dlog(y1) % n % d != 1) continue;  // (3) log_xi(xi+1) = 1 (mod d)
        const Field::Elem y2 = F.add(F.pow(xi, o), 1);
        if (y2 == 0) continue;
        if (tinv * F.dlog(y2) % n % d != 1) continue;  // (4) log_xi(xi^o+1) = 1 (mod d)
        const Field::Elem w = F.mul(F.pow(y1, d - 1), y2);
        if (F.order(w) != n / d) continue;  // (2)
        return xi;
    }
    return std::nullopt;
}

SearchReport find_cyclic_complete_mapping(const Field& F, std::uint32_t d) {
    const std::uint32_t q = F.q();
    if (d <= 1 || (q - 1) % d != 0) throw std::invalid_argument("thm3: need d > 1 dividing q-1");
    const auto us = odd_unit_candidates(q, F.p(), d);
    SearchReport r;
    for (std::uint64_t u : us) {
        const std::optional<Field::Elem> xi = scan_cyclic_witness(F, d, u, &r.candidates_tested);
        if (!xi) continue;
        const std::uint64_t o = u * d - (d - 1);
        const FieldPtr Fx = F.rebase(*xi);
        std::vector<Field::Elem> a(d, *xi);
        a[d - 1] = Fx->pow(*xi, o);
        CyclotomicMap m = make_cyclotomic(Fx, d, a);
        CycleType want;
        want.add(1, 1);
        want.add(q - 1, 1);
        if (cycle_type_by_orbits(m) != want || cycle_type_by_orbits(translate(m, 1)) != want ||
            is_additive(to_table(m)))
            throw std::runtime_error("thm3: witness failed re-verification");
        r.found = true;
        r.u = u;
        r.o = o;
        r.xi = *xi;
        r.omega = *xi;
        r.map = std::move(m);
        return r;
    }
    r.exhausted = true;
    return r;
}

// ---------------------------------------------------------------------------
// Special complete mapping enumeration.
//
// A special complete mapping is represented by its q-cycle written from 0:
// (0, v_1, ..., v_{q-1}) with f(v_i) = v_{i+1 mod q}. The search extends the
// cycle one element at a time and prunes as soon as the partial f+id repeats
// a value; closing the cycle makes v_{q-1} the unique fixed point of f+id,
// and a leaf counts when the remaining q-1 elements of f+id form one cycle.
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kMaxEnumQ = 64;

struct SpecialScan {
    const Field& F;
    std::uint32_t q;
    std::vector<std::uint8_t> addtab;  // q*q
    EnumMode mode = EnumMode::Count;
    std::uint32_t frontier_depth = 0;  // 0 = full search
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    bool stop = false;
    std::vector<Field::Elem> path;
    std::vector<Field::Elem> gbuf;
    std::vector<std::vector<Field::Elem>>* frontier = nullptr;
    std::vector<std::vector<Field::Elem>>* sink = nullptr;
    std::optional<std::vector<Field::Elem>> first;

    explicit SpecialScan(const Field& field) : F(field), q(field.q()) {
        if (q > kMaxEnumQ)
            throw std::invalid_argument("enumerate_special: q > " + std::to_string(kMaxEnumQ) +
                                        " is beyond the exhaustive search limit");
        addtab.resize(static_cast<std::size_t>(q) * q);
        for (Field::Elem x = 0; x < q; ++x) {
            for (Field::Elem y = 0; y < q; ++y)
                addtab[static_cast<std::size_t>(x) * q + y] = static_cast<std::uint8_t>(F.add(x, y));
        }
        path.reserve(q);
        gbuf.resize(q);
    }

    std::uint8_t plus(Field::Elem x, Field::Elem y) const {
        return addtab[static_cast<std::size_t>(x) * q + y];
    }

    void leaf(std::uint64_t usedG) {
        const Field::Elem last = path.back();
        if (usedG >> last & 1) return;  // g(v_{q-1}) = v_{q-1} must be fresh
        for (std::uint32_t i = 0; i + 1 < q; ++i) gbuf[path[i]] = plus(path[i], path[i + 1]);
        gbuf[last] = last;
        std::uint32_t len = 0;
        Field::Elem x = 0;
        do {
            x = gbuf[x];
            ++len;
        } while (x != 0);
        if (len != q - 1) return;
        ++count;
        if (mode == EnumMode::First) {
            first = path;
            stop = true;
        } else if (mode == EnumMode::All) {
            sink->push_back(path);
        }
    }

    void rec(std::uint64_t usedV, std::uint64_t usedG) {
        if (stop) return;
        if (frontier_depth != 0 && path.size() == frontier_depth) {
            frontier->push_back(path);
            return;
        }
        if (path.size() == q) {
            leaf(usedG);
            return;
        }
        const Field::Elem last = path.back();
        std::uint64_t rem = ~usedV & ((q == 64 ? ~0ull : (1ull << q) - 1)) & ~1ull;
        while (rem != 0) {
            const Field::Elem cand = static_cast<Field::Elem>(std::countr_zero(rem));
            rem &= rem - 1;
            ++nodes;
            const std::uint8_t g = plus(last, cand);
            if (usedG >> g & 1) continue;
            path.push_back(cand);
            rec(usedV | (1ull << cand), usedG | (1ull << g));
            path.pop_back();
            if (stop) return;
        }
    }

    // Replays a prefix, returning the masks; throws on an invalid prefix.
    std::pair<std::uint64_t, std::uint64_t> replay(std::span<const Field::Elem> prefix) {
        if (prefix.empty() || prefix[0] != 0)
            throw std::invalid_argument("enumerate_special: prefix must start at 0");
        std::uint64_t usedV = 1, usedG = 0;
        path.assign(prefix.begin(), prefix.end());
        for (std::size_t i = 1; i < prefix.size(); ++i) {
            const Field::Elem v = prefix[i];
            if (v == 0 || v >= q || (usedV >> v & 1))
                throw std::invalid_argument("enumerate_special: invalid prefix element");
            const std::uint8_t g = plus(prefix[i - 1], v);
            if (usedG >> g & 1) throw std::invalid_argument("enumerate_special: prefix violates f+id");
            usedV |= 1ull << v;
            usedG |= 1ull << g;
        }
        return {usedV, usedG};
    }
};

}  // namespace

SearchReport enumerate_special(const Field& F, EnumMode mode, unsigned workers) {
    SearchReport r;
    if (F.q() % 2 == 0) {
        r.exhausted = true;
        return r;
    }
    if (mode == EnumMode::Count && workers > 1 && F.q() >= 11) {
        const std::uint32_t depth = 4;
        SpecialScan fs(F);
        std::vector<std::vector<Field::Elem>> frontier;
        fs.frontier = &frontier;
        fs.frontier_depth = depth;
        fs.path.assign(1, 0);
        fs.rec(1, 0);
        r.candidates_tested = fs.nodes;
        workers = static_cast<unsigned>(
            std::min<std::size_t>(workers, std::max<std::size_t>(1, frontier.size())));
        std::vector<std::uint64_t> counts(workers, 0), nodes(workers, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                SpecialScan scan(F);
                for (std::size_t i = w; i < frontier.size(); i += workers) {
                    const auto [usedV, usedG] = scan.replay(frontier[i]);
                    scan.rec(usedV, usedG);
                }
                counts[w] = scan.count;
                nodes[w] = scan.nodes;
            });
        }
        for (auto& t : pool) t.join();
        for (unsigned w = 0; w < workers; ++w) {
            r.count += counts[w];
            r.candidates_tested += nodes[w];
        }
        r.found = r.count > 0;
        r.exhausted = true;
        return r;
    }
    SpecialScan scan(F);
    scan.mode = mode;
    std::vector<std::vector<Field::Elem>> all;
    scan.sink = &all;
    scan.path.assign(1, 0);
    scan.rec(1, 0);
    r.count = scan.count;
    r.candidates_tested = scan.nodes;
    r.found = scan.count > 0;
    r.exhausted = !(mode == EnumMode::First && scan.stop);
    const FieldPtr Fp = std::make_shared<Field>(F);
    if (scan.first) {
        if (!is_special(table_from_cycle(Fp, *scan.first)))
            throw std::runtime_error("enumerate_special: witness failed re-verification");
        r.witness_cycle = std::move(scan.first);
    }
    if (mode == EnumMode::All) {
        for (const auto& cyc : all) {
            if (!is_special(table_from_cycle(Fp, cyc)))
                throw std::runtime_error("enumerate_special: witness failed re-verification");
        }
        r.all_witnesses = std::move(all);
    }
    return r;
}

std::vector<std::vector<Field::Elem>> enumerate_special_frontier(const Field& F, std::uint32_t depth) {
    if (F.q() % 2 == 0) return {};
    if (depth < 2 || depth >= F.q())
        throw std::invalid_argument("enumerate_special: frontier depth out of range");
    SpecialScan scan(F);
    std::vector<std::vector<Field::Elem>> frontier;
    scan.frontier = &frontier;
    scan.frontier_depth = depth;
    scan.path.assign(1, 0);
    scan.rec(1, 0);
    return frontier;
}

std::uint64_t enumerate_special_from_prefix(const Field& F, std::span<const Field::Elem> prefix) {
    if (F.q() % 2 == 0) return 0;
    SpecialScan scan(F);
    const auto [usedV, usedG] = scan.replay(prefix);
    scan.rec(usedV, usedG);
    return scan.count;
}

void write_checkpoint(const std::string& path, const std::vector<std::vector<Field::Elem>>& prefixes) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("checkpoint: cannot open '" + path + "' for writing");
    for (const auto& pre : prefixes) {
        for (std::size_t i = 0; i < pre.size(); ++i) {
            if (i > 0) out << ",";
            out << pre[i];
        }
        out << "\n";
    }
}

std::vector<std::vector<Field::Elem>> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("checkpoint: cannot open '" + path + "'");
    std::vector<std::vector<Field::Elem>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Field::Elem> pre;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) pre.push_back(static_cast<Field::Elem>(std::stoul(item)));
        out.push_back(std::move(pre));
    }
    return out;
}

PermTable shift_special_mapping(std::uint32_t p, Field::Elem b) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("prop74: p must be an odd prime");
    const FieldPtr F = Field::make(p);
    if (F->order(2 % p) != p - 1)
        throw std::invalid_argument("prop74: 2 is not a primitive root mod " + std::to_string(p));
    if (b == 0 || b >= p) throw std::invalid_argument("prop74: b must be a nonzero residue");
    return shift_table(F, b);
}

const std::vector<Table1Row>& table1_rows() {
    using E = Table1Row::Exemplar;
    static const std::vector<Table1Row> rows{
        {3, 2, E::ShiftByOne, {}},
        {5, 4, E::ShiftByOne, {}},
        {7, 36, E::Cycle, {0, 6, 4, 1, 3, 5, 2}},
        {9, 0, E::None, {}},
        {11, 760, E::ShiftByOne, {}},
        {13, 22212, E::ShiftByOne, {}},
        {17, -1, E::Cycle, {0, 3, 9, 10, 13, 5, 11, 14, 12, 2, 8, 16, 1, 4, 7, 6, 15}},
        {19, -1, E::ShiftByOne, {}},
        {23, -1, E::Cycle, {0, 20, 7, 14, 18, 5,  6, 11, 8,  2, 10, 15,
                            9, 13, 16, 21, 17, 22, 19, 12, 1, 4, 3}},
        // over F_25 = F_5[T]/(T^2-T+2) with codes c0 + 5*c1 for c0 + c1*w
        {25, -1, E::Cycle, {0, 21, 24, 5,  9,  6,  4,  8,  11, 15, 7,  23, 1,
                            2, 16, 17, 19, 22, 20, 14, 18, 3,  10, 13, 12}},
    };
    return rows;
}

FieldPtr table1_field(const Table1Row& row) {
    if (row.q == 9) return Field::make(3, 2);
    if (row.q == 25) return Field::make(5, 2, {2, 4, 1});
    return Field::make(row.q);
}

PermTable table1_exemplar(const Table1Row& row, FieldPtr F) {
    switch (row.exemplar) {
        case Table1Row::Exemplar::ShiftByOne:
            return shift_table(std::move(F), 1);
        case Table1Row::Exemplar::Cycle:
            return table_from_cycle(std::move(F), row.cycle);
        case Table1Row::Exemplar::None:
            break;
    }
    throw std::invalid_argument("table1: no exemplary mapping for q = " + std::to_string(row.q));
}

}  // namespace cyclofield
