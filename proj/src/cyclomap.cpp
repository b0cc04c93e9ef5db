#include "cyclofield/cyclomap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclofield/numtheory.hpp"

namespace cyclofield {

std::uint64_t CycleType::total() const {
    std::uint64_t t = 0;
    for (const auto& [len, k] : mult) t += len * k;
    return t;
}

std::string CycleType::json() const {
    std::string out = "{";
    bool first = true;
    auto emit = [&](std::uint64_t len, std::uint64_t k) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(len) + "\":" + std::to_string(k);
    };
    if (auto it = mult.find(1); it != mult.end()) emit(1, it->second);
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (it->first != 1) emit(it->first, it->second);
    }
    return out + "}";
}

std::vector<std::uint32_t> PsiFunction::permutation() const {
    std::vector<std::uint32_t> perm(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return perm;
}

std::uint64_t PsiFunction::lcm_values() const {
    std::uint64_t l = 1;
    for (std::uint64_t v : values) {
        l = std::lcm(l, v);
        if (l > (1ull << 40)) return l;  // far beyond any desk-scale q-1
    }
    return l;
}

std::uint64_t PsiFunction::max_value() const {
    std::uint64_t m = 0;
    for (std::uint64_t v : values) m = std::max(m, v);
    return m;
}

bool PsiFunction::is_special() const {
    std::uint32_t next_start = 0;
    std::uint32_t prev_len = degree + 1;
    for (const auto& cyc : cycles) {
        if (cyc.size() > prev_len) return false;
        prev_len = static_cast<std::uint32_t>(cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] != next_start + i) return false;
        }
        next_start += static_cast<std::uint32_t>(cyc.size());
    }
    return next_start == degree;
}

PsiFunction PsiFunction::from_permutation(const std::vector<std::uint32_t>& perm,
                                          const std::vector<std::uint64_t>& values_by_cycle) {
    const std::uint32_t d = static_cast<std::uint32_t>(perm.size());
    std::vector<bool> seen(d, false);
    PsiFunction h;
    h.degree = d;
    for (std::uint32_t i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::vector<std::uint32_t> cyc;
        for (std::uint32_t j = i; !seen[j]; j = perm[j]) {
            if (perm[j] >= d) throw std::invalid_argument("psi: image out of range");
            seen[j] = true;
            cyc.push_back(j);
        }
        h.cycles.push_back(std::move(cyc));
    }
    if (values_by_cycle.size() != h.cycles.size())
        throw std::invalid_argument("psi: one value per cycle required");
    for (std::uint64_t v : values_by_cycle)
        if (v == 0) throw std::invalid_argument("psi: values must be positive");
    h.values = values_by_cycle;
    return h;
}

PsiFunction PsiFunction::parse(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("psi: missing '; h=' part");
    const std::string cyc_part = text.substr(0, semi);
    std::string val_part = text.substr(semi + 1);
    const auto eq = val_part.find('=');
    if (eq == std::string::npos || val_part.find('h') == std::string::npos)
        throw std::invalid_argument("psi: missing '; h=' part");
    val_part = val_part.substr(eq + 1);

    PsiFunction h;
    std::size_t pos = 0;
    std::uint32_t max_elem = 0;
    std::vector<bool> seen;
    while (pos < cyc_part.size()) {
        if (std::isspace(static_cast<unsigned char>(cyc_part[pos]))) {
            ++pos;
            continue;
        }
        if (cyc_part[pos] != '(') throw std::invalid_argument("psi: expected '('");
        const auto close = cyc_part.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("psi: unbalanced '('");
        std::vector<std::uint32_t> cyc;
        std::stringstream ss(cyc_part.substr(pos + 1, close - pos - 1));
        std::string item;
        while (std::getline(ss, item, ',')) cyc.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        if (cyc.empty()) throw std::invalid_argument("psi: empty cycle");
        for (std::uint32_t e : cyc) {
            if (e >= seen.size()) seen.resize(e + 1, false);
            if (seen[e]) throw std::invalid_argument("psi: repeated element in cycles");
            seen[e] = true;
            max_elem = std::max(max_elem, e);
        }
        h.cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    if (h.cycles.empty()) throw std::invalid_argument("psi: no cycles");
    h.degree = max_elem + 1;
    for (std::uint32_t e = 0; e < h.degree; ++e) {
        if (!seen[e]) throw std::invalid_argument("psi: cycles must cover {0..d-1}");
    }
    std::stringstream vs(val_part);
    std::string item;
    while (std::getline(vs, item, ',')) h.values.push_back(std::stoull(item));
    if (h.values.size() != h.cycles.size()) throw std::invalid_argument("psi: one value per cycle required");
    for (std::uint64_t v : h.values)
        if (v == 0) throw std::invalid_argument("psi: values must be positive");
    // canonicalize: rotate each cycle to its minimum, sort cycles by minimum
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> paired;
    for (std::size_t i = 0; i < h.cycles.size(); ++i) {
        auto& cyc = h.cycles[i];
        const auto min_it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), min_it, cyc.end());
        paired.emplace_back(std::move(cyc), h.values[i]);
    }
    std::sort(paired.begin(), paired.end(),
              [](const auto& x, const auto& y) { return x.first.front() < y.first.front(); });
    h.cycles.clear();
    h.values.clear();
    for (auto& [cyc, v] : paired) {
        h.cycles.push_back(std::move(cyc));
        h.values.push_back(v);
    }
    return h;
}

std::string PsiFunction::str() const {
    std::string out;
    for (const auto& cyc : cycles) {
        out += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(cyc[i]);
        }
        out += ")";
    }
    out += "; h=";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

Field::Elem CyclotomicMap::eval(Field::Elem x) const {
    if (x == 0) return 0;
    return field->mul(a[field->coset_index(d, x)], x);
}

CyclotomicMap make_cyclotomic(FieldPtr F, std::uint32_t d, std::vector<Field::Elem> a) {
    if (d == 0 || (F->q() - 1) % d != 0)
        throw std::invalid_argument("cyclomap: index " + std::to_string(d) + " does not divide q-1");
    if (a.size() != d) throw std::invalid_argument("cyclomap: need exactly d branch constants");
    for (auto ai : a)
        if (ai >= F->q()) throw std::invalid_argument("cyclomap: branch constant out of range");
    return CyclotomicMap{std::move(F), d, std::move(a)};
}

std::optional<std::vector<std::uint32_t>> induced_coset_perm(const CyclotomicMap& m) {
    const Field& F = *m.field;
    std::vector<std::uint32_t> psi(m.d);
    std::vector<bool> hit(m.d, false);
    for (std::uint32_t i = 0; i < m.d; ++i) {
        if (m.a[i] == 0) return std::nullopt;
        const std::uint32_t image = static_cast<std::uint32_t>((i + F.dlog(m.a[i])) % m.d);
        if (hit[image]) return std::nullopt;
        hit[image] = true;
        psi[i] = image;
    }
    return psi;
}

namespace {

// Cycles of psi (canonical order) with the product of branch constants along
// each cycle.
struct CosetCycles {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<Field::Elem> pi;
};

CosetCycles coset_cycles(const CyclotomicMap& m) {
    const auto psi = induced_coset_perm(m);
    if (!psi) throw std::invalid_argument("cyclomap: not a permutation of F_q");
    CosetCycles out;
    std::vector<bool> seen(m.d, false);
    for (std::uint32_t i = 0; i < m.d; ++i) {
        if (seen[i]) continue;
        std::vector<std::uint32_t> cyc;
        Field::Elem prod = 1;
        for (std::uint32_t j = i; !seen[j]; j = (*psi)[j]) {
            seen[j] = true;
            cyc.push_back(j);
            prod = m.field->mul(prod, m.a[j]);
        }
        out.cycles.push_back(std::move(cyc));
        out.pi.push_back(prod);
    }
    return out;
}

}  // namespace

CycleType cycle_type(const CyclotomicMap& m) {
    const Field& F = *m.field;
    const std::uint64_t q = F.q();
    const auto cc = coset_cycles(m);
    CycleType ct;
    ct.add(1, 1);  // the fixed point 0
    for (std::size_t k = 0; k < cc.cycles.size(); ++k) {
        const std::uint64_t len = cc.cycles[k].size();
        const std::uint64_t ord = F.order(cc.pi[k]);
        if ((q - 1) % (m.d * ord) != 0)
            throw std::runtime_error("cyclomap: branch product left its coset");
        ct.add(len * ord, (q - 1) / (m.d * ord));
    }
    return ct;
}

CycleType cycle_type_by_orbits(const CyclotomicMap& m) {
    const Field& F = *m.field;
    const std::uint32_t q = F.q();
    std::vector<Field::Elem> img(q);
    std::vector<bool> hit(q, false);
    for (Field::Elem x = 0; x < q; ++x) {
        img[x] = m.eval(x);
        if (hit[img[x]]) throw std::invalid_argument("cyclomap: not a permutation of F_q");
        hit[img[x]] = true;
    }
    CycleType ct;
    std::vector<bool> seen(q, false);
    for (Field::Elem x = 0; x < q; ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        for (Field::Elem y = x; !seen[y]; y = img[y]) {
            seen[y] = true;
            ++len;
        }
        ct.add(len, 1);
    }
    return ct;
}

PsiFunction sym_function_of(const CyclotomicMap& m) {
    const Field& F = *m.field;
    const auto cc = coset_cycles(m);
    PsiFunction h;
    h.degree = m.d;
    h.cycles = cc.cycles;
    for (std::size_t k = 0; k < cc.cycles.size(); ++k)
        h.values.push_back((F.q() - 1) / (m.d * F.order(cc.pi[k])));
    return h;
}

bool is_admissible(const PsiFunction& h, std::uint64_t q) {
    if (h.degree == 0) throw std::invalid_argument("psi: empty function");
    const std::uint64_t need = h.degree * h.lcm_values();
    return q >= 2 && (q - 1) % need == 0;
}

CycleType gamma_h(const PsiFunction& h, std::uint64_t q) {
    if (!is_admissible(h, q))
        throw std::invalid_argument("gamma_h: q = " + std::to_string(q) + " is not admissible");
    CycleType ct;
    ct.add(1, 1);
    for (std::size_t k = 0; k < h.cycles.size(); ++k) {
        const std::uint64_t len = h.cycles[k].size() * ((q - 1) / (h.degree * h.values[k]));
        ct.add(len, h.values[k]);
    }
    return ct;
}

CyclotomicMap construct_from_h(FieldPtr F, const PsiFunction& h) {
    if (!is_admissible(h, F->q()))
        throw std::invalid_argument("construct_from_h: q is not admissible for h");
    const std::uint32_t d = h.degree;
    const auto perm = h.permutation();
    std::vector<Field::Elem> a(d);
    for (std::size_t k = 0; k < h.cycles.size(); ++k) {
        const auto& cyc = h.cycles[k];
        const std::uint32_t anchor = *std::max_element(cyc.begin(), cyc.end());
        const Field::Elem b = F->omega_pow(static_cast<std::int64_t>(d) * static_cast<std::int64_t>(h.values[k]));
        for (std::uint32_t i : cyc) {
            const std::int64_t step = static_cast<std::int64_t>(perm[i]) - static_cast<std::int64_t>(i);
            a[i] = F->omega_pow(step);
            if (i == anchor) a[i] = F->mul(a[i], b);
        }
    }
    return make_cyclotomic(std::move(F), d, std::move(a));
}

std::vector<std::uint32_t> special_perm(const std::vector<std::uint32_t>& lengths) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] == 0) throw std::invalid_argument("special_perm: zero length");
        if (i > 0 && lengths[i] > lengths[i - 1])
            throw std::invalid_argument("special_perm: lengths must be descending");
        sum += lengths[i];
    }
    std::vector<std::uint32_t> perm(sum);
    std::uint32_t start = 0;
    for (std::uint32_t len : lengths) {
        for (std::uint32_t i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

CyclotomicMap construct_f_omega(FieldPtr F, const PsiFunction& h) {
    if (!h.is_special()) throw std::invalid_argument("construct_f_omega: psi must be special");
    if (!is_admissible(h, F->q()))
        throw std::invalid_argument("construct_f_omega: q is not admissible for h");
    const std::uint32_t d = h.degree;
    std::vector<Field::Elem> a(d, F->omega());
    for (std::size_t k = 0; k < h.cycles.size(); ++k) {
        const auto& cyc = h.cycles[k];
        const std::uint32_t terminal = cyc.front() + static_cast<std::uint32_t>(cyc.size()) - 1;
        const std::int64_t e = -static_cast<std::int64_t>(cyc.size()) + 1 +
                               static_cast<std::int64_t>(d) * static_cast<std::int64_t>(h.values[k]);
        a[terminal] = F->omega_pow(e);
    }
    return make_cyclotomic(std::move(F), d, std::move(a));
}

CyclotomicMap translate(const CyclotomicMap& m, Field::Elem c) {
    std::vector<Field::Elem> a(m.d);
    for (std::uint32_t i = 0; i < m.d; ++i) a[i] = m.field->add(m.a[i], c);
    return CyclotomicMap{m.field, m.d, std::move(a)};
}

std::vector<PsiFunction> enumerate_sym_functions(std::uint32_t d, std::uint64_t max_value) {
    if (d == 0 || max_value == 0) throw std::invalid_argument("enumerate_sym_functions: d, max_value >= 1");
    std::vector<PsiFunction> out;
    for (const auto& lengths : partitions_desc(d)) {
        PsiFunction base;
        base.degree = d;
        std::uint32_t start = 0;
        for (std::uint32_t len : lengths) {
            std::vector<std::uint32_t> cyc(len);
            for (std::uint32_t i = 0; i < len; ++i) cyc[i] = start + i;
            base.cycles.push_back(std::move(cyc));
            start += len;
        }
        std::vector<std::uint64_t> vals(lengths.size(), 1);
        while (true) {
            base.values = vals;
            out.push_back(base);
            // odometer, last position fastest
            std::size_t pos = vals.size();
            while (pos > 0 && vals[pos - 1] == max_value) vals[--pos] = 1;
            if (pos == 0) break;
            ++vals[pos - 1];
        }
    }
    return out;
}

}  // namespace cyclofield
