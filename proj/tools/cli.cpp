#include "cli.hpp"

#include "moncoh/bar.hpp"
#include "moncoh/cohomology.hpp"
#include "moncoh/cyclic.hpp"
#include "moncoh/descriptors.hpp"
#include "moncoh/grillet.hpp"
#include "moncoh/groupoid.hpp"
#include "moncoh/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>

namespace moncoh::cli {

namespace {

using json = nlohmann::ordered_json;

// Signals a failed verification (exit 1).
struct VerificationFailed {};

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json group_json(const AbGroupInvariants& g) {
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(integer_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", t}};
}

struct Options {
    std::string monoid;
    std::string coeff = "Z";
    std::string cocycle;
    int level = 1;
    int degree = 0;
    int index = 0;
    int period = 1;
    int max_degree = 4;
    int entry_bound = 5;
    bool infinite = false;
    bool automorphisms = false;
    bool as_json = false;
};

std::shared_ptr<const FiniteCommutativeMonoid> require_finite(std::shared_ptr<const Monoid> m, const char* what) {
    auto f = std::dynamic_pointer_cast<const FiniteCommutativeMonoid>(m);
    if (!f) throw DescriptorError("--monoid", std::string(what) + " needs a finite monoid");
    return f;
}

void require_cyclic_parameters(const Options& o) {
    if (o.index < 0) throw DescriptorError("--index", "must be nonnegative");
    if (o.period < 1) throw DescriptorError("--period", "must be positive");
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
    if (o.as_json)
        out << j.dump() << '\n';
    else
        out << text;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    if (o.level < 1) throw DescriptorError("--level", "must be at least 1");
    if (o.degree < 0) throw DescriptorError("--degree", "must be nonnegative");
    auto m = parse_monoid(o.monoid);
    const HModule a = parse_coefficients(o.coeff, m);
    AbGroupInvariants h;
    if (m->is_finite()) {
        if (o.level >= 2 && o.degree > max_cohomology_degree(o.level))
            throw DescriptorError("--degree", "level " + std::to_string(o.level) + " is available up to degree " +
                                                  std::to_string(max_cohomology_degree(o.level)));
        h = cohomology_group(m, o.level, o.degree, a);
    } else {
        h = infinite_cyclic_groups(o.level, o.degree, a);
    }
    emit(out, o, group_json(h),
         "H^" + std::to_string(o.degree) + "(" + m->name() + ", " + std::to_string(o.level) + "; " + o.coeff +
             ") = " + h.to_string() + "\n");
    return 0;
}

int cmd_cells(const Options& o, std::ostream& out) {
    if (o.level < 1) throw DescriptorError("--level", "must be at least 1");
    if (o.degree < 0) throw DescriptorError("--degree", "must be nonnegative");
    auto m = require_finite(parse_monoid(o.monoid), "cells");
    auto dga = iterated_bar(m, o.level, o.degree);
    json cells = json::array();
    std::string text;
    for (const auto& w : dga->basis(o.degree)) {
        const std::string s = dga->render(w);
        cells.push_back(s);
        text += s + "  -> " + std::to_string(dga->projection(w)) + "\n";
    }
    json j{{"level", o.level}, {"degree", o.degree}, {"count", cells.size()}, {"cells", cells}};
    emit(out, o, j, text + std::to_string(cells.size()) + " cells\n");
    return 0;
}

int cmd_verify_contraction(const Options& o, std::ostream& out) {
    if (o.max_degree < 0) throw DescriptorError("--max-degree", "must be nonnegative");
    ContractionReport r;
    if (o.infinite) {
        if (o.entry_bound < 1) throw DescriptorError("--entry-bound", "must be positive");
        r = verify_contraction_inf(o.max_degree, o.entry_bound);
    } else {
        require_cyclic_parameters(o);
        r = verify_contraction(o.index, o.period, o.max_degree);
    }
    json checks = json::array();
    std::string text;
    for (const auto& c : r.checks) {
        json item{{"identity", c.identity}, {"passed", c.passed}, {"checked", c.checked}};
        if (c.witness) item["witness"] = *c.witness;
        checks.push_back(item);
        text += (c.passed ? "PASS " : "FAIL ") + c.identity + " (" + std::to_string(c.checked) + " checks)" +
                (c.witness ? " at " + *c.witness : "") + "\n";
    }
    emit(out, o, json{{"passed", r.passed()}, {"checks", checks}}, text);
    if (!r.passed()) throw VerificationFailed{};
    return 0;
}

int cmd_verify_bar(const Options& o, std::ostream& out) {
    if (o.level < 1) throw DescriptorError("--level", "must be at least 1");
    auto m = require_finite(parse_monoid(o.monoid), "verify bar");
    auto dga = iterated_bar(m, o.level, o.max_degree);
    const auto violation = validate_dga(*dga, o.max_degree);
    json j{{"passed", !violation.has_value()}};
    std::string text = violation ? "FAIL " + violation->law + ": " + violation->message + "\n" : "PASS all DGA laws\n";
    if (violation) j["law"] = violation->law, j["message"] = violation->message;
    emit(out, o, j, text);
    if (violation) throw VerificationFailed{};
    return 0;
}

int cmd_grillet(const Options& o, std::ostream& out) {
    auto m = require_finite(parse_monoid(o.monoid), "grillet");
    const HModule a = parse_coefficients(o.coeff, m);
    json groups = json::object();
    std::string text;
    for (int n = 1; n <= 3; ++n) {
        const auto h = grillet_cohomology(m, a, n);
        groups["H" + std::to_string(n)] = group_json(h);
        text += "H^" + std::to_string(n) + "_G = " + h.to_string() + "\n";
    }
    const InclusionReport r = inclusion_chainmap(m, a);
    json inc{{"commutes", r.commutes},
             {"degree1_isomorphism", r.degree1_isomorphism},
             {"degree2_isomorphism", r.degree2_isomorphism},
             {"degree3_injective", r.degree3_injective}};
    if (r.failure) inc["failure"] = *r.failure;
    text += std::string("inclusion into the level-3 complex: ") + (r.ok() ? "verified" : "FAILED") +
            (r.failure ? " (" + *r.failure + ")" : "") + "\n";
    emit(out, o, json{{"groups", groups}, {"inclusion", inc}}, text);
    if (!r.ok()) throw VerificationFailed{};
    return 0;
}

int cmd_cyclic_groups(const Options& o, std::ostream& out) {
    require_cyclic_parameters(o);
    auto m = make_cyclic(o.index, o.period);
    const HModule a = parse_coefficients(o.coeff, m);
    const auto l2 = level2_groups_cyclic(o.index, o.period, a);
    const auto h5 = level3_top(o.index, o.period, a);
    json j{{"H2(2)", group_json(l2.h2)}, {"H3(2)", group_json(l2.h3)}, {"H4(2)", group_json(l2.h4)},
           {"H5(3)", group_json(h5)}};
    std::string text = "H^2(C,2) = " + l2.h2.to_string() + "\nH^3(C,2) = " + l2.h3.to_string() +
                       "\nH^4(C,2) = " + l2.h4.to_string() + "\nH^5(C,3) = " + h5.to_string() + "\n";
    emit(out, o, j, text);
    return 0;
}

int cmd_groupoid_check(const Options& o, std::ostream& out) {
    auto m = require_finite(parse_monoid(o.monoid), "groupoid");
    const HModule a = parse_coefficients(o.coeff, m);
    if (o.cocycle.empty()) throw DescriptorError("--cocycle", "required");
    const FiveCochain c = parse_cocycle(o.cocycle.front() == '@' || o.cocycle.front() == '{' ? o.cocycle : "@" + o.cocycle);
    const bool is_cocycle = cocycle_check(a, c.g, c.mu);
    const CoherenceReport report = check_coherence(crossed_product(a, c.g, c.mu));
    json items = json::array();
    std::string text = std::string("cocycle: ") + (is_cocycle ? "yes" : "no") + "\n";
    for (const auto& i : report.items) {
        json item{{"condition", i.name}, {"passed", i.passed}, {"checked", i.checked}};
        std::string w;
        if (i.witness) {
            for (Element x : *i.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
            item["witness"] = w;
        }
        items.push_back(item);
        text += (i.passed ? "PASS " : "FAIL ") + i.name + (i.witness ? " at (" + w + ")" : "") + "\n";
    }
    emit(out, o, json{{"cocycle", is_cocycle}, {"coherent", report.coherent()}, {"conditions", items}}, text);
    if (!is_cocycle || !report.coherent()) throw VerificationFailed{};
    return 0;
}

int cmd_groupoid_classify(const Options& o, std::ostream& out) {
    auto m = require_finite(parse_monoid(o.monoid), "groupoid");
    const HModule a = parse_coefficients(o.coeff, m);
    const Classification c = classify_crossed_products(a, o.automorphisms);
    json j{{"candidates", c.candidates}, {"cocycles", c.cocycles}, {"classes", c.classes}};
    emit(out, o, j,
         std::to_string(c.cocycles) + " of " + std::to_string(c.candidates) + " pairs are cocycles, " +
             std::to_string(c.classes) + " isomorphism classes\n");
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    auto m = require_finite(parse_monoid(o.monoid), "oracle");
    const HModule a = parse_coefficients(o.coeff, m);
    const BruteForceResult b = brute_force_cohomology(m, o.level, o.degree, a);
    const AbGroupInvariants s = cohomology_group(m, o.level, o.degree, a);
    const bool agree = b.invariants == s;
    json j{{"cochains", b.cochain_count}, {"cocycles", b.cocycle_count}, {"coboundaries", b.coboundary_count},
           {"brute_force", group_json(b.invariants)}, {"smith", group_json(s)}, {"agree", agree}};
    emit(out, o, j,
         "brute force: " + b.invariants.to_string() + " (" + std::to_string(b.cocycle_count) + " cocycles, " +
             std::to_string(b.coboundary_count) + " coboundaries)\nsmith normal form: " + s.to_string() + "\n" +
             (agree ? "agree\n" : "DISAGREE\n"));
    if (!agree) throw VerificationFailed{};
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology of commutative monoids at higher levels", "moncoh"};
    app.require_subcommand(1);
    Options o;

    auto add_monoid = [&](CLI::App* c) { c->add_option("--monoid", o.monoid, "cyclic:m,q, infinite-cyclic or @file.json")->required(); };
    auto add_coeff = [&](CLI::App* c) { c->add_option("--coeff", o.coeff, "Z, Z/n, Z^r, Z/n+Z/m or @file.json"); };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "Print JSON"); };
    auto add_level_degree = [&](CLI::App* c) {
        c->add_option("--level", o.level)->required();
        c->add_option("--degree", o.degree)->required();
    };

    auto* coh = app.add_subcommand("cohomology", "H^n(M, r; A)");
    add_monoid(coh), add_coeff(coh), add_level_degree(coh), add_json(coh);

    auto* cells = app.add_subcommand("cells", "Generic cells of B^r(ZM) in one degree");
    add_monoid(cells), add_level_degree(cells), add_json(cells);

    auto* verify = app.add_subcommand("verify", "Identity checks");
    verify->require_subcommand(1);
    auto* contraction = verify->add_subcommand("contraction", "Contraction onto the small resolution of a cyclic monoid");
    contraction->add_option("--index", o.index);
    contraction->add_option("--period", o.period);
    contraction->add_flag("--infinite", o.infinite, "Use the infinite cyclic monoid");
    contraction->add_option("--max-degree", o.max_degree);
    contraction->add_option("--entry-bound", o.entry_bound, "Largest cell entry over the infinite cyclic monoid");
    add_json(contraction);
    auto* bar_cmd = verify->add_subcommand("bar", "DGA laws of the iterated bar construction");
    add_monoid(bar_cmd);
    bar_cmd->add_option("--level", o.level)->required();
    bar_cmd->add_option("--max-degree", o.max_degree);
    add_json(bar_cmd);

    auto* grillet = app.add_subcommand("grillet", "Symmetric cochain cohomology and its inclusion");
    add_monoid(grillet), add_coeff(grillet), add_json(grillet);

    auto* cyclic = app.add_subcommand("cyclic", "Cyclic monoid computations");
    cyclic->require_subcommand(1);
    auto* groups = cyclic->add_subcommand("groups", "Low-degree groups from the small complexes");
    groups->add_option("--index", o.index)->required();
    groups->add_option("--period", o.period)->required();
    add_coeff(groups), add_json(groups);

    auto* groupoid = app.add_subcommand("groupoid", "Crossed product groupoids");
    groupoid->require_subcommand(1);
    auto* check = groupoid->add_subcommand("check", "Coherence of one crossed product");
    add_monoid(check), add_coeff(check), add_json(check);
    check->add_option("--cocycle", o.cocycle, "JSON file with g and mu")->required();
    auto* classify = groupoid->add_subcommand("classify", "Isomorphism classes over all cocycles");
    add_monoid(classify), add_coeff(classify), add_json(classify);
    classify->add_flag("--automorphisms", o.automorphisms, "Also allow monoid automorphisms");

    auto* oracle = app.add_subcommand("oracle", "Brute-force cohomology next to the Smith normal form result");
    add_monoid(oracle), add_coeff(oracle), add_level_degree(oracle), add_json(oracle);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        int code = 0;
        if (coh->parsed()) code = cmd_cohomology(o, out);
        else if (cells->parsed()) code = cmd_cells(o, out);
        else if (contraction->parsed()) code = cmd_verify_contraction(o, out);
        else if (bar_cmd->parsed()) code = cmd_verify_bar(o, out);
        else if (grillet->parsed()) code = cmd_grillet(o, out);
        else if (groups->parsed()) code = cmd_cyclic_groups(o, out);
        else if (check->parsed()) code = cmd_groupoid_check(o, out);
        else if (classify->parsed()) code = cmd_groupoid_classify(o, out);
        else if (oracle->parsed()) code = cmd_oracle(o, out);
        if (!o.as_json) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            out << "(" << dt.count() << " s)\n";
        }
        return code;
    } catch (const VerificationFailed&) {
        return 1;
    } catch (const DescriptorError& e) {
        err << "error in " << e.what() << '\n';
        return 2;
    } catch (const MonoidLawError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace moncoh::cli
