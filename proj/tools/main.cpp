// Command-line front end: every library operation is reachable through a
// subcommand, results are printed as single-line JSON objects (use --text for
// an indented dump). Exit codes: 0 = success / witness found, 1 = search
// exhausted / nothing found, 2 = invalid input.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclofield/charsum.hpp"
#include "cyclofield/cyclomap.hpp"
#include "cyclofield/field.hpp"
#include "cyclofield/numtheory.hpp"
#include "cyclofield/search.hpp"

using json = nlohmann::ordered_json;
using namespace cyclofield;

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if constexpr (std::is_signed_v<T>) {
            out.push_back(static_cast<T>(std::stoll(item)));
        } else {
            out.push_back(static_cast<T>(std::stoull(item)));
        }
    }
    return out;
}

std::vector<Poly> parse_polys(const Field& F, const std::vector<std::string>& specs) {
    std::vector<Poly> out;
    for (const auto& spec : specs) {
        std::stringstream ss(spec);
        std::string one;
        while (std::getline(ss, one, ';')) {
            if (!one.empty()) out.push_back(parse_poly(F, one));
        }
    }
    return out;
}

json cycle_type_json(const CycleType& ct) {
    json j = json::object();
    if (auto it = ct.mult.find(1); it != ct.mult.end()) j[std::to_string(1)] = it->second;
    for (auto it = ct.mult.rbegin(); it != ct.mult.rend(); ++it) {
        if (it->first != 1) j[std::to_string(it->first)] = it->second;
    }
    return j;
}

std::string perm_cycles_str(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::string out;
    for (std::uint32_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        out += "(";
        bool first = true;
        for (std::uint32_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            if (!first) out += ",";
            first = false;
            out += std::to_string(j);
        }
        out += ")";
    }
    return out;
}

std::string elems_cycle_str(const std::vector<Field::Elem>& cycle) {
    std::string out = "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(cycle[i]);
    }
    return out + ")";
}

json map_json(const CyclotomicMap& m) {
    json j;
    j["field"] = m.field->label();
    j["omega"] = m.field->omega();
    j["d"] = m.d;
    j["a"] = m.a;
    if (induced_coset_perm(m)) {
        j["cycle_type"] = cycle_type_json(cycle_type(m));
        j["cycles"] = cycle_notation(to_table(m));
    }
    return j;
}

json report_json(const SearchReport& r) {
    json j;
    j["found"] = r.found;
    j["exhausted"] = r.exhausted;
    j["candidates_tested"] = r.candidates_tested;
    if (r.xi) j["xi"] = *r.xi;
    if (r.omega) j["omega"] = *r.omega;
    if (r.u) j["u"] = *r.u;
    if (r.o) j["o"] = *r.o;
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.weak_omega) j["weak_omega"] = *r.weak_omega;
    if (r.map) j["map"] = map_json(*r.map);
    if (r.witness_cycle) j["cycle"] = elems_cycle_str(*r.witness_cycle);
    return j;
}

struct Output {
    bool text = false;
    int emit(const json& j, int code) const {
        std::cout << (text ? j.dump(2) : j.dump()) << "\n";
        return code;
    }
};

unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order cyclotomic mappings of finite fields: exact cycle types,\n"
                 "multiplicative character sums, and complete-mapping searches"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print help");  // keep --h free for value functions

    Output out;
    app.add_flag("--text", out.text, "indent the JSON output");
    bool json_flag = true;
    app.add_flag("--json", json_flag, "JSON output (the default)");

    std::string field_spec;
    std::string modulus_str;
    std::string h_str, psi_str;
    std::string a_str, c_str, elist_str, dlist_str, jlist_str, chars_str;
    std::uint32_t d = 0;
    std::vector<std::string> poly_specs, sigma_specs;
    std::uint32_t p_arg = 0;
    std::uint32_t f_arg = 1;
    std::uint32_t b_arg = 1;
    unsigned workers = 1;
    std::string mode_str = "count";
    std::string checkpoint_in, checkpoint_out;
    std::uint32_t frontier_depth = 4;
    std::uint32_t qmax = 11;
    bool allow_long = false;

    const auto add_sub = [&](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };
    const auto add_field_opts = [&](CLI::App* sub) {
        sub->add_option("--q", field_spec, "field spec: a prime or p^f");
        sub->add_option("--p", p_arg, "field characteristic (alternative to --q)");
        sub->add_option("--f", f_arg, "extension degree (with --p)");
        sub->add_option("--modulus", modulus_str,
                        "ascending monic modulus coefficients, e.g. 2,4,1 for T^2-T+2");
    };
    const auto make_field = [&]() {
        if (!field_spec.empty())
            return Field::parse(field_spec, parse_list<std::uint32_t>(modulus_str));
        if (p_arg != 0) return Field::make(p_arg, f_arg, parse_list<std::uint32_t>(modulus_str));
        throw std::invalid_argument("no field given: use --q or --p/--f");
    };
    // --h is either the full "(0,1)(2); h=3,4" text, or just the values when
    // the cycles come separately through --psi
    const auto make_h = [&]() {
        if (psi_str.empty()) return PsiFunction::parse(h_str);
        return PsiFunction::parse(psi_str + "; h=" + h_str);
    };
    const auto add_h_opts = [&](CLI::App* sub) {
        sub->add_option("--h", h_str, "value function, e.g. \"(0,1)(2); h=3,4\"")->required();
        sub->add_option("--psi", psi_str, "cycles, e.g. \"(0,1)(2)\" (then --h lists only values)");
    };

    auto* sc_field = add_sub("field-info", "field parameters and designated root");
    add_field_opts(sc_field);

    auto* sc_ctype = add_sub("ctype", "cycle type of a cyclotomic mapping");
    add_field_opts(sc_ctype);
    sc_ctype->add_option("--d", d, "index (divisor of q-1)")->required();
    sc_ctype->add_option("--a", a_str, "branch constants a_0,...,a_{d-1}")->required();

    auto* sc_gamma = add_sub("gamma-h", "cycle type gamma_h(q) of a value function");
    add_h_opts(sc_gamma);
    add_field_opts(sc_gamma);

    auto* sc_ch = add_sub("construct-h", "cyclotomic permutation realizing a value function");
    add_h_opts(sc_ch);
    add_field_opts(sc_ch);

    auto* sc_cf = add_sub("construct-fomega",
                          "canonical permutation for a value function over a special psi");
    add_h_opts(sc_cf);
    add_field_opts(sc_cf);

    auto* sc_cv = add_sub("charsum-verify",
                                     "check the order/coset indicator identities over one field");
    add_field_opts(sc_cv);

    auto* sc_weil = add_sub("weil", "character sum over polynomial evaluations");
    add_field_opts(sc_weil);
    sc_weil->add_option("--polys", poly_specs, "ascending coefficients, e.g. 0,1 for T")->required();
    sc_weil->add_option("--chars", chars_str, "character exponents k, comma separated")->required();

    auto* sc_count = add_sub("count", "count xi with prescribed orders of Q_i(xi)");
    add_field_opts(sc_count);
    sc_count->add_option("--polys", poly_specs)->required();
    sc_count->add_option("--elist", elist_str, "required orders e_i (divisors of q-1)")->required();
    sc_count->add_option("--workers", workers);

    auto* sc_cg = add_sub("count-gen", "count with order and discrete-log conditions");
    add_field_opts(sc_cg);
    sc_cg->add_option("--polys", poly_specs)->required();
    sc_cg->add_option("--dlist", dlist_str, "order cofactors d_i")->required();
    sc_cg->add_option("--jlist", jlist_str, "log residues j_i")->required();
    sc_cg->add_option("--d", d, "log modulus")->required();
    sc_cg->add_option("--workers", workers);

    auto* sc_cc = add_sub("c-constant", "the exact rational main-term constant");
    sc_cc->add_option("--dlist", dlist_str)->required();
    sc_cc->add_option("--d", d)->required();

    auto* sc_fx = add_sub("find-xi", "smallest xi meeting order (and log) conditions");
    add_field_opts(sc_fx);
    sc_fx->add_option("--polys", poly_specs)->required();
    sc_fx->add_option("--dlist", dlist_str)->required();
    sc_fx->add_option("--jlist", jlist_str, "log residues (enables the log conditions)");
    sc_fx->add_option("--d", d, "log modulus (with --jlist)");

    auto* sc_fc = add_sub("find-complete",
                                     "cyclotomic permutation with permutation translates, scanning roots");
    add_field_opts(sc_fc);
    add_h_opts(sc_fc);
    sc_fc->add_option("--c", c_str, "translate constants, comma separated");

    auto* sc_rc = add_sub("realize-cosets", "prescribe coset behavior of all translates");
    add_field_opts(sc_rc);
    sc_rc->add_option("--d", d)->required();
    sc_rc->add_option("--c", c_str, "pairwise distinct translate constants")->required();
    sc_rc->add_option("--s", sigma_specs, "coset function images, one option per translate")->required();

    auto* sc_t3 = add_sub("thm3", "non-additive complete mapping with f and f+id full cycles");
    add_field_opts(sc_t3);
    sc_t3->add_option("--d", d)->required();

    auto* sc_sp = add_sub("special-count", "count special complete mappings");
    add_field_opts(sc_sp);
    sc_sp->add_option("--mode", mode_str)->check(CLI::IsMember({"count", "first", "all"}));
    sc_sp->add_option("--workers", workers, "0 = all hardware threads");
    sc_sp->add_option("--checkpoint-out", checkpoint_out, "write the search frontier and exit");
    sc_sp->add_option("--frontier-depth", frontier_depth, "prefix length for --checkpoint-out");
    sc_sp->add_option("--checkpoint-in", checkpoint_in, "count only the subtrees listed in this file");

    auto* sc_t1 = add_sub("table1", "reproduce the special-complete-mapping count table");
    sc_t1->add_option("--qmax", qmax, "largest q to count exhaustively (11 or 13)");
    sc_t1->add_flag("--allow-long", allow_long, "permit the q = 13 run");
    sc_t1->add_option("--workers", workers, "0 = all hardware threads");

    auto* sc_p74 = add_sub("prop74", "the shift x -> x+b over F_p, 2 a primitive root mod p");
    sc_p74->add_option("--p", p_arg)->required();
    sc_p74->add_option("--b", b_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sc_field)) {
            const auto F = make_field();
            json j;
            j["q"] = F->q();
            j["p"] = F->p();
            j["f"] = F->degree();
            if (!F->modulus().empty()) j["modulus"] = F->modulus();
            j["omega"] = F->omega();
            j["primitive_root_count"] = totient(F->q() - 1);
            if (F->q() <= 256) j["primitive_roots"] = F->primitive_roots();
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_ctype)) {
            const auto F = make_field();
            const auto m = make_cyclotomic(F, d, parse_list<Field::Elem>(a_str));
            json j;
            j["field"] = F->label();
            j["d"] = d;
            j["a"] = m.a;
            const auto psi = induced_coset_perm(m);
            j["permutation"] = psi.has_value();
            if (!psi) return out.emit(j, 1);
            j["psi"] = perm_cycles_str(*psi);
            j["h"] = sym_function_of(m).str();
            j["cycle_type"] = cycle_type_json(cycle_type(m));
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_gamma)) {
            const auto h = make_h();
            const auto F = make_field();
            json j;
            j["h"] = h.str();
            j["q"] = F->q();
            j["gamma"] = cycle_type_json(gamma_h(h, F->q()));
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_ch) || app.got_subcommand(sc_cf)) {
            const auto h = make_h();
            const auto F = make_field();
            const auto m = app.got_subcommand(sc_ch) ? construct_from_h(F, h) : construct_f_omega(F, h);
            json j = map_json(m);
            j["h"] = sym_function_of(m).str();
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_cv)) {
            const auto F = make_field();
            const std::uint64_t n = F->q() - 1;
            double max_err = 0.0;
            std::uint64_t checks = 0;
            for (std::uint64_t e : divisors(n)) {
                const auto ta = order_indicator_table(*F, e, FeForm::Divisor);
                const auto tb = order_indicator_table(*F, e, FeForm::ExactOrder);
                for (Field::Elem x = 0; x < F->q(); ++x) {
                    const double want = (x != 0 && F->order(x) == e) ? 1.0 : 0.0;
                    max_err = std::max(max_err, std::abs(ta[x] - cplx(want)));
                    max_err = std::max(max_err, std::abs(tb[x] - cplx(want)));
                    checks += 2;
                }
            }
            for (std::uint64_t dd : divisors(n)) {
                for (std::uint64_t i = 0; i < dd; ++i) {
                    const auto td = coset_indicator_table(*F, static_cast<std::uint32_t>(dd),
                                                          static_cast<std::int64_t>(i));
                    for (Field::Elem x = 0; x < F->q(); ++x) {
                        const double want = (x != 0 && F->dlog(x) % dd == i) ? 1.0 : 0.0;
                        max_err = std::max(max_err, std::abs(td[x] - cplx(want)));
                        ++checks;
                    }
                }
            }
            json j;
            j["q"] = F->q();
            j["checks"] = checks;
            j["max_error"] = max_err;
            j["ok"] = max_err < 1e-9;
            return out.emit(j, max_err < 1e-9 ? 0 : 1);
        }

        if (app.got_subcommand(sc_weil)) {
            const auto F = make_field();
            const auto polys = parse_polys(*F, poly_specs);
            const auto chars = parse_list<CharIndex>(chars_str);
            const cplx s = weil_sum(*F, polys, chars);
            json j;
            j["q"] = F->q();
            j["sum_re"] = s.real();
            j["sum_im"] = s.imag();
            j["abs"] = std::abs(s);
            bool any_np = false;
            for (CharIndex k : chars) any_np = any_np || k % (F->q() - 1) != 0;
            if (any_np) {
                std::uint64_t degsum = 0;
                for (const auto& Q : polys) degsum += static_cast<std::uint64_t>(Q.degree());
                j["bound"] = static_cast<double>(degsum - 1) * std::sqrt(static_cast<double>(F->q()));
                j["within_bound"] = weil_bound_holds(*F, polys, chars);
            } else {
                std::uint64_t null_count = 0;
                for (Field::Elem x = 0; x < F->q(); ++x) {
                    for (const auto& Q : polys) {
                        if (poly_eval(*F, Q, x) == 0) {
                            ++null_count;
                            break;
                        }
                    }
                }
                j["exact"] = F->q() - null_count;
            }
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_count)) {
            const auto F = make_field();
            const auto polys = parse_polys(*F, poly_specs);
            const auto e_list = parse_list<std::uint64_t>(elist_str);
            json j;
            j["q"] = F->q();
            j["count"] = count_with_orders(*F, polys, e_list, resolve_workers(workers));
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_cg)) {
            const auto F = make_field();
            const auto polys = parse_polys(*F, poly_specs);
            const auto d_list = parse_list<std::uint64_t>(dlist_str);
            const auto j_list = parse_list<std::int64_t>(jlist_str);
            json j;
            j["q"] = F->q();
            j["count"] = count_with_orders_and_logs(*F, polys, d_list, j_list, d, resolve_workers(workers));
            j["indicator_count"] = count_via_indicators(*F, polys, d_list, j_list, d);
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_cc)) {
            const auto d_list = parse_list<std::uint64_t>(dlist_str);
            json j;
            j["c"] = c_constant(d_list, d).str();
            return out.emit(j, 0);
        }

        if (app.got_subcommand(sc_fx)) {
            const auto F = make_field();
            const auto polys = parse_polys(*F, poly_specs);
            const auto d_list = parse_list<std::uint64_t>(dlist_str);
            SearchReport r;
            if (jlist_str.empty()) {
                r = find_element_with_orders(*F, polys, d_list);
            } else {
                r = find_element_with_orders_and_logs(*F, polys, d_list,
                                                      parse_list<std::int64_t>(jlist_str), d);
            }
            return out.emit(report_json(r), r.found ? 0 : 1);
        }

        if (app.got_subcommand(sc_fc)) {
            const auto F = make_field();
            const auto h = make_h();
            const auto r = find_complete_cyclotomic(*F, h, parse_list<Field::Elem>(c_str));
            json j = report_json(r);
            j["h"] = h.str();
            return out.emit(j, r.found ? 0 : 1);
        }

        if (app.got_subcommand(sc_rc)) {
            const auto F = make_field();
            std::vector<std::vector<std::uint32_t>> sigmas;
            for (const auto& s : sigma_specs) sigmas.push_back(parse_list<std::uint32_t>(s));
            const auto r = realize_coset_maps(*F, d, parse_list<Field::Elem>(c_str), sigmas);
            return out.emit(report_json(r), r.found ? 0 : 1);
        }

        if (app.got_subcommand(sc_t3)) {
            const auto F = make_field();
            const auto r = find_cyclic_complete_mapping(*F, d);
            json j = report_json(r);
            if (r.map) {
                j["f_cycle_type"] = cycle_type_json(cycle_type_by_orbits(*r.map));
                j["g_cycle_type"] = cycle_type_json(cycle_type_by_orbits(translate(*r.map, 1)));
                j["additive"] = is_additive(to_table(*r.map));
            }
            return out.emit(j, r.found ? 0 : 1);
        }

        if (app.got_subcommand(sc_sp)) {
            const auto F = make_field();
            if (!checkpoint_out.empty()) {
                const auto frontier = enumerate_special_frontier(*F, frontier_depth);
                write_checkpoint(checkpoint_out, frontier);
                json j;
                j["q"] = F->q();
                j["prefixes"] = frontier.size();
                j["checkpoint"] = checkpoint_out;
                return out.emit(j, 0);
            }
            if (!checkpoint_in.empty()) {
                const auto prefixes = read_checkpoint(checkpoint_in);
                std::uint64_t total = 0;
                for (const auto& pre : prefixes) total += enumerate_special_from_prefix(*F, pre);
                json j;
                j["q"] = F->q();
                j["count"] = total;
                j["prefixes"] = prefixes.size();
                return out.emit(j, 0);
            }
            const EnumMode mode = mode_str == "first"  ? EnumMode::First
                                  : mode_str == "all" ? EnumMode::All
                                                      : EnumMode::Count;
            const auto r = enumerate_special(*F, mode, resolve_workers(workers));
            json j;
            j["q"] = F->q();
            j["count"] = r.count;
            if (mode == EnumMode::Count) return out.emit(j, 0);
            j["found"] = r.found;
            if (r.witness_cycle) j["cycle"] = elems_cycle_str(*r.witness_cycle);
            if (mode == EnumMode::All) {
                json cycles = json::array();
                for (const auto& cyc : r.all_witnesses) cycles.push_back(elems_cycle_str(cyc));
                j["witnesses"] = cycles;
            }
            return out.emit(j, r.found ? 0 : 1);
        }

        if (app.got_subcommand(sc_t1)) {
            if (qmax > 13) throw std::invalid_argument("table1: exhaustive counts stop at q = 13");
            if (qmax >= 13 && !allow_long)
                throw std::invalid_argument("table1: the q = 13 count needs --allow-long");
            json rows = json::array();
            for (const auto& row : table1_rows()) {
                const auto F = table1_field(row);
                json j;
                j["q"] = row.q;
                if (row.q <= qmax) {
                    j["count"] = enumerate_special(*F, EnumMode::Count, resolve_workers(workers)).count;
                } else {
                    j["count"] = "unknown";
                }
                j["reference"] = row.count >= 0 ? json(row.count) : json("unknown");
                if (row.exemplar == Table1Row::Exemplar::None) {
                    j["exemplar"] = nullptr;
                    j["exemplar_special"] = nullptr;
                } else {
                    const auto t = table1_exemplar(row, F);
                    j["exemplar"] = cycle_notation(t);
                    j["exemplar_special"] = is_special(t);
                }
                rows.push_back(j);
            }
            return out.emit(rows, 0);
        }

        if (app.got_subcommand(sc_p74)) {
            const auto t = shift_special_mapping(p_arg, b_arg);
            json j;
            j["p"] = p_arg;
            j["b"] = b_arg;
            j["special"] = is_special(t);
            j["cycles"] = cycle_notation(t);
            return out.emit(j, 0);
        }
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
