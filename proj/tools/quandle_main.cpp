// Command-line surface: construct tables, check properties, inspect spin
// sets, and recover groups from spins. Exit codes: 0 all verdicts pass,
// 1 a verdict failed (or the input is unusable for the request),
// 2 usage or parse error. Output is deterministic: identical inputs give
// byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quandle/constructions.hpp"
#include "quandle/errors.hpp"
#include "quandle/groups.hpp"
#include "quandle/io.hpp"
#include "quandle/properties.hpp"
#include "quandle/representations.hpp"
#include "quandle/spins.hpp"
#include "quandle/translations.hpp"

namespace {

using nlohmann::json;
using namespace quandle;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t max_order() {
    const char* env = std::getenv("QUANDLE_MAX_N");
    if (!env || !*env) return 64;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 1)
        throw UsageError("QUANDLE_MAX_N must be a positive integer");
    return static_cast<std::size_t>(v);
}

void enforce_cap(std::size_t n) {
    const std::size_t cap = max_order();
    if (n > cap)
        throw UsageError("order " + std::to_string(n) + " exceeds QUANDLE_MAX_N (" +
                         std::to_string(cap) + ")");
}

Table load_table(const std::string& path) {
    Table t = [&] {
        if (path.empty() || path == "-") return parse_table(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open '" + path + "'");
        return parse_table(in);
    }();
    enforce_cap(t.order());
    return t;
}

void write_table(const Table& t, const std::string& path) {
    const std::string text = serialize_table(t);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

// ------------------------------------------------------------------ check

struct PropLine {
    std::string name;
    bool pass;
    std::string detail;   // rendered after FAIL
    json extra;           // witness / reason for --json
};

std::string kv(const char* k, Elem v) {
    return std::string(k) + "=" + std::to_string(v);
}

// Renders a witness tuple with per-clause variable names.
std::string render_witness(const std::vector<std::string>& names,
                           const std::vector<Elem>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size() && i < names.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += kv(names[i].c_str(), w[i]);
    }
    return out;
}

json witness_json(const std::vector<std::string>& names, const std::vector<Elem>& w) {
    json j = json::object();
    for (std::size_t i = 0; i < w.size() && i < names.size(); ++i)
        j[names[i]] = w[i];
    return j;
}

const std::vector<std::string>& clause_vars(const std::string& clause) {
    static const std::vector<std::string> x = {"x"};
    static const std::vector<std::string> y = {"y"};
    static const std::vector<std::string> xy = {"x", "y"};
    static const std::vector<std::string> abc = {"a", "b", "c"};
    static const std::vector<std::string> axy = {"a", "x", "y"};
    static const std::vector<std::string> wxyz = {"w", "x", "y", "z"};
    static const std::vector<std::string> ix = {"i", "x"};
    if (clause == "unique-left-divisor" || clause == "right-division") return y;
    if (clause == "right-distributive-q") return abc;
    if (clause == "left-distributive" || clause == "right-distributive") return axy;
    if (clause == "lip" || clause == "rip" || clause == "cip" || clause == "ip" ||
        clause == "commutative")
        return xy;
    if (clause == "medial") return wxyz;
    if (clause == "lemma") return ix;
    return x;
}

PropLine from_report(const std::string& prop, const PropertyReport& rep,
                     bool quandle_axioms = false) {
    for (const auto& [clause, v] : rep) {
        if (v.ok) continue;
        const std::string key =
            (quandle_axioms && clause == "right-distributive") ? "right-distributive-q"
                                                               : clause;
        const auto& vars = clause_vars(key);
        PropLine line{prop, false, clause + " " + render_witness(vars, v.witness), {}};
        line.extra = json{{"clause", clause}, {"witness", witness_json(vars, v.witness)}};
        return line;
    }
    return {prop, true, "", {}};
}

PropLine check_one(const std::string& prop, const Table& t) {
    auto fail_precondition = [&](const char* why) {
        return PropLine{prop, false, why, json{{"error", why}}};
    };
    try {
        if (prop == "latin") {
            return {prop, is_latin(t), "", {}};
        } else if (prop == "quandle") {
            return from_report(prop, is_quandle(t), /*quandle_axioms=*/true);
        } else if (prop == "latin-quandle") {
            return from_report(prop, is_latin_quandle(t));
        } else if (prop == "commutative" || prop == "medial") {
            const Verdict v = prop == "commutative" ? is_commutative(t)
                                                    : is_abelian_quandle(t);
            if (v.ok) return {prop, true, "", {}};
            const auto& vars = clause_vars(prop);
            return {prop, false, render_witness(vars, v.witness),
                    json{{"witness", witness_json(vars, v.witness)}}};
        } else if (prop == "lip" || prop == "rip" || prop == "cip" || prop == "ip") {
            const PropertyReport profile = involutory_profile(t);
            const Verdict& v = profile.at(prop);
            if (v.ok) return {prop, true, "", {}};
            return {prop, false, render_witness(clause_vars(prop), v.witness),
                    json{{"witness", witness_json(clause_vars(prop), v.witness)}}};
        } else if (prop == "lemma2.1") {
            const PropertyReport rep = check_translation_identities(t);
            for (const auto& [clause, v] : rep) {
                if (v.ok) continue;
                return {prop, false,
                        "clause=" + clause + " " + render_witness(clause_vars("lemma"), v.witness),
                        json{{"clause", clause},
                             {"witness", witness_json(clause_vars("lemma"), v.witness)}}};
            }
            return {prop, true, "", {}};
        } else if (prop == "thm2.16") {
            const bool ip = involutory_profile(t).passed("ip");
            const bool rep_comm = rep_is_commutative(t).ok;
            if (ip == rep_comm) return {prop, true, "", {}};
            const std::string d = std::string("ip=") + (ip ? "true" : "false") +
                                  " lambda-eq-phi=" + (rep_comm ? "true" : "false");
            return {prop, false, d, json{{"ip", ip}, {"lambda-eq-phi", rep_comm}}};
        }
        throw UsageError("unknown property '" + prop + "'");
    } catch (const precondition_error&) {
        return fail_precondition("not-a-latin-quandle");
    } catch (const not_latin_error&) {
        return fail_precondition("not-latin");
    }
}

const std::vector<std::string> kAllProps = {
    "latin", "quandle", "latin-quandle", "commutative", "medial",
    "lip",   "rip",     "cip",           "ip",          "lemma2.1", "thm2.16"};

int cmd_check(const std::string& file, const std::string& props_arg, bool as_json) {
    const Table t = load_table(file);

    std::vector<std::string> props;
    if (props_arg.empty() || props_arg == "all") {
        props = kAllProps;
    } else {
        std::stringstream ss(props_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) props.push_back(item);
        if (props.empty()) throw UsageError("--props needs at least one property");
    }

    bool all_pass = true;
    for (const std::string& prop : props) {
        const PropLine line = check_one(prop, t);
        all_pass = all_pass && line.pass;
        if (as_json) {
            json j{{"prop", line.name}, {"verdict", line.pass ? "PASS" : "FAIL"}};
            if (!line.pass && !line.extra.is_null()) j.update(line.extra);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "PROP " << line.name << (line.pass ? " PASS" : " FAIL");
            if (!line.pass && !line.detail.empty()) std::cout << " " << line.detail;
            std::cout << "\n";
        }
    }
    return all_pass ? kExitOk : kExitFail;
}

// -------------------------------------------------------------- construct

int cmd_construct(const std::string& kind, std::size_t n, std::size_t k,
                  const std::string& side, const std::string& out_path) {
    Table t = [&] {
        if (kind == "cyclic") {
            enforce_cap(n);
            return cyclic_group(n);
        }
        if (kind == "abelian3" || kind == "ipq") {
            std::size_t order = 1;
            for (std::size_t i = 0; i < k; ++i) order *= 3;
            enforce_cap(order);
            const Table g = elementary_abelian_3(k);
            return kind == "ipq" ? build_ipq(g, 0) : g;
        }
        enforce_cap(n);   // core-cyclic
        const Table g = cyclic_group(n);
        return core(g, 0, side == "right" ? CoreSide::right : CoreSide::left);
    }();

    const bool latin = is_latin(t);
    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    summary << "CONSTRUCT kind=" << kind;
    if (kind == "abelian3" || kind == "ipq") summary << " k=" << k;
    else summary << " n=" << n;
    if (kind == "core-cyclic") summary << " side=" << side;
    summary << " order=" << t.order() << " latin=" << (latin ? "true" : "false") << "\n";
    if (!latin) summary << "WARN not latin\n";

    write_table(t, out_path);
    return kExitOk;
}

// ------------------------------------------------------------------ spins

void export_spins(const SpinSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    for (const Perm& p : s.members) {
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (x) out << ' ';
            out << p(x);
        }
        out << '\n';
    }
}

int cmd_spins(const std::string& file, const std::string& side_arg, bool coincide,
              const std::string& export_path, bool as_json) {
    const Table t = load_table(file);
    if (!is_latin(t)) {
        std::cerr << "ERROR table is not latin\n";
        return kExitFail;
    }

    if (!export_path.empty() && side_arg == "both")
        throw UsageError("--export needs a single --side");

    std::vector<SpinSide> sides;
    if (side_arg == "both") sides = {SpinSide::left, SpinSide::right};
    else sides = {side_arg == "left" ? SpinSide::left : SpinSide::right};

    bool any_fail = false;
    for (const SpinSide side : sides) {
        const char* sname = side == SpinSide::left ? "left" : "right";
        const SpinSet s = spin_set(t, side);
        const GroupReport g = check_spin_group(s);

        std::optional<PropertyReport> lemma;
        try {
            lemma = check_lemma_3_3(t, side);
        } catch (const precondition_error&) {
            // reported below as skipped
        }

        if (as_json) {
            std::cout << json{{"spin", "set"}, {"side", sname}, {"size", s.members.size()}}.dump()
                      << "\n";
            std::cout << json{{"spin", "group"},
                              {"side", sname},
                              {"closed", g.closed},
                              {"identity", g.has_identity},
                              {"inverses", g.inverse_closed},
                              {"commutative", g.commutative},
                              {"cyclic", g.cyclic},
                              {"order", g.order}}.dump()
                      << "\n";
            if (g.is_group() && g.commutative && !g.cyclic)
                std::cout << json{{"spin", "note"},
                                  {"side", sname},
                                  {"note", "commutative-but-not-cyclic"}}.dump()
                          << "\n";
            json lj{{"spin", "lemma3.3"}, {"side", sname}};
            if (lemma) {
                json clauses = json::object();
                for (const auto& [name, v] : *lemma) clauses[name] = v.ok ? "PASS" : "FAIL";
                lj["clauses"] = clauses;
            } else {
                lj["skipped"] = "not-involutory";
            }
            std::cout << lj.dump() << "\n";
        } else {
            std::cout << "SPIN side=" << sname << " size=" << s.members.size() << "\n";
            std::cout << "SPIN group side=" << sname << " closed=" << (g.closed ? "true" : "false")
                      << " identity=" << (g.has_identity ? "true" : "false")
                      << " inverses=" << (g.inverse_closed ? "true" : "false")
                      << " commutative=" << (g.commutative ? "true" : "false")
                      << " cyclic=" << (g.cyclic ? "true" : "false") << " order=" << g.order
                      << "\n";
            if (g.is_group() && g.commutative && !g.cyclic)
                std::cout << "SPIN note side=" << sname << " commutative-but-not-cyclic\n";
            std::cout << "SPIN lemma3.3 side=" << sname;
            if (lemma) {
                for (const auto& [name, v] : *lemma)
                    std::cout << " " << name << "=" << (v.ok ? "PASS" : "FAIL");
            } else {
                std::cout << " skipped=not-involutory";
            }
            std::cout << "\n";
        }
        if (lemma && !lemma->all_pass()) any_fail = true;
        if (!export_path.empty()) export_spins(s, export_path);
    }

    if (coincide) {
        const Verdict v = spins_coincide(t);
        if (as_json) {
            json j{{"spin", "coincide"}, {"value", v.ok}};
            if (!v.ok) j["witness"] = json{{"i", v.witness[0]}, {"j", v.witness[1]}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "SPIN coincide=" << (v.ok ? "true" : "false");
            if (!v.ok) std::cout << " i=" << v.witness[0] << " j=" << v.witness[1];
            std::cout << "\n";
        }
        if (!v.ok) any_fail = true;
    }
    return any_fail ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------- recover

int cmd_recover(const std::string& file, const std::string& side_arg, long base_arg,
                const std::string& out_path, const std::string& against, bool as_json) {
    const Table t = load_table(file);
    if (base_arg < 0 || static_cast<std::size_t>(base_arg) >= t.order())
        throw UsageError("--base " + std::to_string(base_arg) +
                         " out of range for order " + std::to_string(t.order()));
    const Elem base = static_cast<Elem>(base_arg);
    const SpinSide side = side_arg == "left" ? SpinSide::left : SpinSide::right;

    Table g = [&] {
        try {
            return recover_group(t, side, base);
        } catch (const recovery_error& e) {
            std::cerr << "ERROR " << e.what() << "\n";
            std::exit(kExitFail);
        }
    }();

    const GroupCheck gc = group_check(g);
    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    if (as_json) {
        json j{{"recover", "table"},
               {"side", side_arg},
               {"base", base},
               {"order", g.order()},
               {"group", gc.is_group}};
        if (gc.identity) j["identity"] = *gc.identity;
        summary << j.dump() << "\n";
    } else {
        summary << "RECOVER side=" << side_arg << " base=" << base << " order=" << g.order()
                << " group=" << (gc.is_group ? "true" : "false");
        if (gc.identity) summary << " identity=" << *gc.identity;
        summary << "\n";
    }

    int rc = kExitOk;
    if (!against.empty()) {
        const Table target = load_table(against);
        const IsoResult iso = quandle_isomorphic(g, target);
        if (as_json)
            summary << json{{"recover", "isomorphic"}, {"value", iso.isomorphic}}.dump() << "\n";
        else
            summary << "RECOVER isomorphic=" << (iso.isomorphic ? "true" : "false") << "\n";
        if (!iso.isomorphic) rc = kExitFail;
    }

    write_table(g, out_path);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite latin quandle construction, verification and spin analysis"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a table and write it");
    construct->require_subcommand(1);
    std::size_t arg_n = 0, arg_k = 0;
    std::string arg_side = "left", arg_out;
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("-o,--out", arg_out, "output file (default: stdout)");
    };
    auto* c_cyc = construct->add_subcommand("cyclic", "addition table of Z_n");
    c_cyc->add_option("--n", arg_n, "order")->required();
    add_out(c_cyc);
    auto* c_ab = construct->add_subcommand("abelian3", "(Z_3)^k addition table");
    c_ab->add_option("--k", arg_k, "exponent count")->required();
    add_out(c_ab);
    auto* c_core = construct->add_subcommand("core-cyclic", "core of Z_n");
    c_core->add_option("--n", arg_n, "order")->required();
    c_core->add_option("--side", arg_side, "left|right")
        ->check(CLI::IsMember({"left", "right"}));
    add_out(c_core);
    auto* c_ipq = construct->add_subcommand("ipq", "involutory quandle from (Z_3)^k");
    c_ipq->add_option("--k", arg_k, "exponent count")->required();
    add_out(c_ipq);

    // check
    auto* check = app.add_subcommand("check", "verify properties of a table");
    std::string arg_file, arg_props = "all";
    bool arg_json = false;
    check->add_option("file", arg_file, "table file ('-' or absent: stdin)");
    check->add_option("--props", arg_props,
                      "comma list: latin,quandle,latin-quandle,commutative,medial,"
                      "lip,rip,cip,ip,lemma2.1,thm2.16 (default: all)");
    check->add_flag("--json", arg_json, "one JSON object per verdict");

    // spins
    auto* spins = app.add_subcommand("spins", "spin sets of a latin table");
    std::string arg_spin_side = "right", arg_export;
    bool arg_coincide = false;
    spins->add_option("file", arg_file, "table file ('-' or absent: stdin)");
    spins->add_option("--side", arg_spin_side, "left|right|both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    spins->add_flag("--coincide", arg_coincide, "compare l-spins and r-spins");
    spins->add_option("--export", arg_export, "write spin permutations to a file");
    spins->add_flag("--json", arg_json, "JSON output");

    // recover
    auto* recover = app.add_subcommand("recover", "recover a group from a spin set");
    std::string arg_rec_side = "right", arg_against;
    long arg_base = 0;
    recover->add_option("file", arg_file, "table file ('-' or absent: stdin)");
    recover->add_option("--side", arg_rec_side, "left|right")
        ->check(CLI::IsMember({"left", "right"}));
    recover->add_option("--base", arg_base, "base element (default 0)");
    recover->add_option("-o,--out", arg_out, "output file for the group table");
    recover->add_option("--against", arg_against, "table to compare for isomorphism");
    recover->add_flag("--json", arg_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) {
            const std::string kind = construct->get_subcommands().front()->get_name();
            return cmd_construct(kind, arg_n, arg_k, arg_side, arg_out);
        }
        if (check->parsed()) return cmd_check(arg_file, arg_props, arg_json);
        if (spins->parsed())
            return cmd_spins(arg_file, arg_spin_side, arg_coincide, arg_export, arg_json);
        if (recover->parsed())
            return cmd_recover(arg_file, arg_rec_side, arg_base, arg_out, arg_against, arg_json);
    } catch (const UsageError& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "ERROR parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const too_large_error& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
