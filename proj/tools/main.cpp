// orbitcalc: partition-level calculus of nilpotent orbits for the
// classical groups. See README.md for the command reference.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitcalc/derivative.hpp"
#include "orbitcalc/group.hpp"
#include "orbitcalc/oracle.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/pl.hpp"
#include "orbitcalc/poset.hpp"
#include "orbitcalc/version.hpp"

namespace {

using nlohmann::json;
using namespace orbitcalc;

// Bad command-line values (as opposed to domain errors) exit with 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool as_json = false;
    int cap = kDefaultEnumerationCap;
};

int env_cap() {
    if (const char* env = std::getenv("ORBITCALC_CAP"))
        if (int v = std::atoi(env); v > 0) return v;
    return kDefaultEnumerationCap;
}

struct OrbitArg {
    Partition partition;
    std::optional<VeryEvenLabel> label;
};

// "7,3,1" or, for very-even SO orbits, "2,2:I" / "2,2:II".
OrbitArg parse_orbit_arg(const std::string& text) {
    try {
        std::optional<VeryEvenLabel> label;
        std::string body = text;
        if (auto colon = text.find(':'); colon != std::string::npos) {
            const std::string suffix = text.substr(colon + 1);
            if (suffix == "I")
                label = VeryEvenLabel::I;
            else if (suffix == "II")
                label = VeryEvenLabel::II;
            else
                throw ParseError("label must be I or II, got \"" + suffix + "\"");
            body = text.substr(0, colon);
        }
        return {parse_partition(body), label};
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

GroupKind parse_group(const std::string& family, int dim) {
    try {
        return GroupKind(parse_group_family(family), dim);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

json report_skeleton(const std::string& command, json inputs) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"results", json::object()},
                {"version", kVersion}};
}

void emit(const Options& opt, json report, const std::string& text) {
    if (opt.as_json)
        std::cout << report.dump() << "\n";
    else
        std::cout << text;
}

json partition_list(const std::vector<Partition>& list) {
    json out = json::array();
    for (const auto& p : list) out.push_back(to_string(p));
    return out;
}

std::string orbit_display(const GroupKind& group, const OrbitArg& arg) {
    std::string s = to_string(group) + ":" + to_string(arg.partition);
    if (arg.label) s += ":" + to_string(*arg.label);
    return s;
}

// ---------------------------------------------------------------- orbit

void cmd_orbit_info(const Options& opt, const std::string& family, int dim,
                    const std::string& partition_arg) {
    const GroupKind group = parse_group(family, dim);
    const OrbitArg arg = parse_orbit_arg(partition_arg);
    const Partition& lambda = arg.partition;
    const bool valid = is_valid_partition(group, lambda);  // throws UnequalWeight
    const bool very_even = is_very_even(lambda);
    const int orbit_rank = group.dim - lambda.length();
    const int orbit_depth = lambda.part(1);
    const auto om = om_set(lambda);

    json report = report_skeleton(
        "orbit info", {{"group", to_string(group)}, {"partition", to_string(lambda)}});
    report["results"] = {{"valid", valid},
                         {"very_even", very_even},
                         {"rank", orbit_rank},
                         {"depth", orbit_depth},
                         {"om", om},
                         {"is_pl", valid ? json(is_pl(group, lambda)) : json()}};
    std::string text = "orbit " + orbit_display(group, arg) + "\n";
    text += "  valid: " + std::string(valid ? "true" : "false") + "\n";
    text += "  very_even: " + std::string(very_even ? "true" : "false") + "\n";
    text += "  rank: " + std::to_string(orbit_rank) + "\n";
    text += "  depth: " + std::to_string(orbit_depth) + "\n";
    text += "  om:";
    for (int p : om) text += " " + std::to_string(p);
    text += "\n";
    text += "  is_pl: ";
    text += valid ? (is_pl(group, lambda) ? "true" : "false") : "undefined";
    text += "\n";
    emit(opt, std::move(report), text);
}

void cmd_orbit_compare(const Options& opt, const std::string& family, int dim,
                       const std::vector<std::string>& partition_args) {
    if (partition_args.size() != 2)
        throw UsageError("orbit compare needs exactly two --partition values");
    const GroupKind group = parse_group(family, dim);
    const OrbitArg a = parse_orbit_arg(partition_args[0]);
    const OrbitArg b = parse_orbit_arg(partition_args[1]);
    const Orbit lhs(group, a.partition, a.label);
    const Orbit rhs(group, b.partition, b.label);
    const bool leq = closure_leq(lhs, rhs);
    const bool geq = closure_leq(rhs, lhs);
    json report = report_skeleton("orbit compare", {{"group", to_string(group)},
                                                    {"lhs", to_string(lhs)},
                                                    {"rhs", to_string(rhs)}});
    report["results"] = {{"leq", leq},
                         {"geq", geq},
                         {"equal", lhs == rhs},
                         {"comparable", leq || geq}};
    std::string text;
    text += "leq: " + std::string(leq ? "true" : "false") + "\n";
    text += "geq: " + std::string(geq ? "true" : "false") + "\n";
    emit(opt, std::move(report), text);
}

// ------------------------------------------------------------------- pl

void cmd_pl_set(const Options& opt, const std::string& family, int dim,
                const std::string& partition_arg) {
    const GroupKind group = parse_group(family, dim);
    const OrbitArg arg = parse_orbit_arg(partition_arg);
    PLSet s = pl_set(group, arg.partition, opt.cap);
    s.label = arg.label;
    json report = report_skeleton(
        "pl set", {{"group", to_string(group)}, {"partition", to_string(arg.partition)}});
    report["results"] = {{"members", partition_list(s.members)},
                         {"label", s.label ? json(to_string(*s.label)) : json()}};
    std::string text;
    for (const auto& m : s.members) text += to_string(m) + "\n";
    emit(opt, std::move(report), text);
}

void cmd_pl_reconstruct(const Options& opt, const std::string& family, int dim,
                        const std::string& file,
                        const std::vector<std::string>& member_args) {
    const GroupKind group = parse_group(family, dim);
    std::vector<Partition> members;
    for (const auto& text : member_args)
        members.push_back(parse_orbit_arg(text).partition);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open \"" + file + "\"");
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                                     line.back() == '\r'))
                line.pop_back();
            size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            members.push_back(parse_partition(line.substr(start)));
        }
    }
    if (members.empty())
        throw UsageError("pl reconstruct needs member partitions (args or --file)");
    std::sort(members.begin(), members.end(), std::greater<Partition>());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const Partition lambda = reconstruct(group, PLSet{group, members, std::nullopt});
    json report = report_skeleton("pl reconstruct", {{"group", to_string(group)},
                                                     {"members", partition_list(members)}});
    report["results"] = {{"partition", to_string(lambda)}};
    emit(opt, std::move(report), to_string(lambda) + "\n");
}

void cmd_pl_counterexamples(const Options& opt, const std::string& family, int dim) {
    const GroupKind group = parse_group(family, dim);
    const auto triples = find_related_unions(group, opt.cap);
    json rows = json::array();
    std::string text;
    for (const auto& t : triples) {
        rows.push_back({{"lambda", to_string(t.whole)},
                        {"mu", to_string(t.left)},
                        {"nu", to_string(t.right)}});
        text += to_string(t.whole) + " = " + to_string(t.left) + " + " +
                to_string(t.right) + "\n";
    }
    json report = report_skeleton("pl counterexamples", {{"group", to_string(group)}});
    report["results"] = {{"triples", std::move(rows)}};
    emit(opt, std::move(report), text);
}

// ------------------------------------------------------------ derivative

void cmd_deriv_bk(const Options& opt, const std::vector<std::string>& partition_args,
                  int k) {
    std::vector<Partition> inputs;
    for (const auto& text : partition_args)
        inputs.push_back(parse_orbit_arg(text).partition);
    const int n = inputs.front().n();
    for (const auto& p : inputs)
        if (p.n() != n)
            throw UnequalWeight("orbit-set members must share one weight");
    const GroupKind group(GroupFamily::GL, n);
    std::vector<Orbit> orbits;
    for (auto& p : inputs) orbits.emplace_back(group, std::move(p));
    const OrbitSet image = b_k_orbit_set(OrbitSet(group, std::move(orbits)), k);
    std::vector<Partition> results;
    for (const auto& orbit : image.maximal()) results.push_back(orbit.partition());
    json report = report_skeleton(
        "deriv bk", {{"partitions", json::array()}, {"k", k}});
    for (const auto& text : partition_args) report["inputs"]["partitions"].push_back(text);
    report["results"] = {{"group", to_string(image.group())},
                         {"orbits", partition_list(results)}};
    std::string text;
    for (const auto& p : results) text += to_string(p) + "\n";
    emit(opt, std::move(report), text);
}

void cmd_whittaker_support(const Options& opt, const std::string& partition_arg,
                           const std::vector<int>& composition) {
    if (partition_arg.empty() == composition.empty())
        throw UsageError("whittaker support needs exactly one of --partition, --composition");
    WhittakerSupport support = [&] {
        if (!partition_arg.empty())
            return whittaker_support(parse_orbit_arg(partition_arg).partition);
        for (int a : composition)
            if (a < 1) throw UsageError("composition entries must be positive");
        return composition_support(composition);
    }();
    const Partition jordan = jordan_type(matrix_of_support(support));
    json inputs = json::object();
    if (!partition_arg.empty()) inputs["partition"] = partition_arg;
    if (!composition.empty()) inputs["composition"] = composition;
    json report = report_skeleton("whittaker support", std::move(inputs));
    report["results"] = {{"n", support.n},
                         {"support", support.support},
                         {"jordan_type", to_string(jordan)}};
    emit(opt, std::move(report), to_string(support) + "\n");
}

// ----------------------------------------------------------------- poset

json poset_payload(const LabeledPoset& poset) {
    json nodes = json::array();
    for (const auto& node : poset.nodes())
        nodes.push_back({{"name", node.name},
                         {"special", node.special},
                         {"pl", node.pl}});
    json covers = json::array();
    for (auto [lo, hi] : poset.covers())
        covers.push_back({poset.node(lo).name, poset.node(hi).name});
    return json{{"name", poset.name()}, {"nodes", nodes}, {"covers", covers}};
}

void cmd_poset_export(const Options& opt, const std::string& family, int dim,
                      const std::string& format) {
    const GroupKind group = parse_group(family, dim);
    const LabeledPoset poset = classical_orbit_poset(group, opt.cap);
    if (opt.as_json || format == "json") {
        json report = report_skeleton("poset export", {{"group", to_string(group)},
                                                       {"format", "json"}});
        report["results"] = poset_payload(poset);
        std::cout << report.dump() << "\n";
    } else if (format == "dot") {
        std::cout << to_dot(poset);
    } else if (format == "poset" || format == "text") {
        std::cout << to_poset_format(poset);
    } else {
        throw UsageError("unknown format \"" + format + "\" (text, json, dot, poset)");
    }
}

json classes_payload(const std::vector<RelatedClass>& classes) {
    json rows = json::array();
    for (const auto& cls : classes) {
        json orbits = json::array();
        for (const auto& [name, special] : cls.orbits)
            orbits.push_back({{"name", name}, {"special", special}});
        rows.push_back({{"group", cls.group}, {"orbits", orbits}});
    }
    return rows;
}

std::string classes_text(const std::vector<RelatedClass>& classes) {
    std::string text;
    for (const auto& cls : classes) {
        text += cls.group + ":";
        for (size_t i = 0; i < cls.orbits.size(); ++i) {
            text += i ? ", " : " ";
            text += cls.orbits[i].first;
            if (cls.orbits[i].second) text += "*";
        }
        text += "\n";
    }
    return text;
}

void cmd_poset_related(const Options& opt, const std::string& file) {
    const LabeledPoset poset = load_poset_file(file);
    for (const auto& warning : poset.warnings())
        std::cerr << "warning: " << warning << "\n";
    const auto classes = related_classes(poset);
    // Exceptional ingestions must agree with the embedded table.
    verify_against_embedded(poset, classes);
    json report = report_skeleton("poset related", {{"file", file}});
    report["results"] = {{"classes", classes_payload(classes)},
                         {"group", poset.name()},
                         {"verified_against_table",
                          is_exceptional_group_name(poset.name())}};
    emit(opt, std::move(report), classes_text(classes));
}

void cmd_exceptional_related(const Options& opt, const std::string& group) {
    std::vector<RelatedClass> classes;
    if (group.empty()) {
        classes = embedded_related_table();
    } else {
        if (!is_exceptional_group_name(group))
            throw UsageError("expected one of G2, F4, E6, E7, E8; got \"" + group + "\"");
        classes = embedded_related_table(group);
    }
    json inputs = json::object();
    if (!group.empty()) inputs["group"] = group;
    json report = report_skeleton("exceptional related", std::move(inputs));
    report["results"] = {{"classes", classes_payload(classes)}};
    emit(opt, std::move(report), classes_text(classes));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition calculus of nilpotent orbits for classical groups"};
    app.set_version_flag("--version", std::string("orbitcalc ") + kVersion);
    app.require_subcommand(1);

    Options opt;
    opt.cap = env_cap();
    app.add_flag("--json", opt.as_json, "emit a deterministic JSON report");
    app.add_option("--cap", opt.cap, "enumeration cap (env ORBITCALC_CAP)");

    std::string family, partition_arg, file, format = "text", exc_group;
    int dim = 0, k = 0;
    std::vector<std::string> partition_args;
    std::vector<int> composition;
    std::function<void()> action;

    auto* orbit = app.add_subcommand("orbit", "single-orbit queries");
    orbit->require_subcommand(1);
    auto* orbit_info = orbit->add_subcommand("info", "validity, rank, depth, OM, PL");
    orbit_info->add_option("--group", family)->required();
    orbit_info->add_option("--dim", dim)->required();
    orbit_info->add_option("--partition", partition_arg)->required();
    orbit_info->callback([&] {
        action = [&] { cmd_orbit_info(opt, family, dim, partition_arg); };
    });
    auto* orbit_compare = orbit->add_subcommand("compare", "closure order between two orbits");
    orbit_compare->add_option("--group", family)->required();
    orbit_compare->add_option("--dim", dim)->required();
    orbit_compare->add_option("--partition", partition_args)->required();
    orbit_compare->callback([&] {
        action = [&] { cmd_orbit_compare(opt, family, dim, partition_args); };
    });

    auto* pl = app.add_subcommand("pl", "principal-in-Levi orbit theory");
    pl->require_subcommand(1);
    auto* pl_set_cmd = pl->add_subcommand("set", "PL orbits below an orbit");
    pl_set_cmd->add_option("--group", family)->required();
    pl_set_cmd->add_option("--dim", dim)->required();
    pl_set_cmd->add_option("--partition", partition_arg)->required();
    pl_set_cmd->callback([&] {
        action = [&] { cmd_pl_set(opt, family, dim, partition_arg); };
    });
    auto* pl_rec = pl->add_subcommand("reconstruct", "recover an orbit from its PL set");
    pl_rec->add_option("--group", family)->required();
    pl_rec->add_option("--dim", dim)->required();
    pl_rec->add_option("--file", file, "one partition per line, '#' comments");
    pl_rec->add_option("members", partition_args, "member partitions");
    pl_rec->callback([&] {
        action = [&] { cmd_pl_reconstruct(opt, family, dim, file, partition_args); };
    });
    auto* pl_cx = pl->add_subcommand("counterexamples",
                                     "triples with PL(lambda) = PL(mu) u PL(nu)");
    pl_cx->add_option("--group", family)->required();
    pl_cx->add_option("--dim", dim)->required();
    pl_cx->callback([&] {
        action = [&] { cmd_pl_counterexamples(opt, family, dim); };
    });

    auto* deriv = app.add_subcommand("deriv", "derivative calculus on GL orbit sets");
    deriv->require_subcommand(1);
    auto* deriv_bk = deriv->add_subcommand("bk", "k-th derivative of an orbit set");
    deriv_bk->add_option("--partition", partition_args)->required();
    deriv_bk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    deriv_bk->callback([&] {
        action = [&] { cmd_deriv_bk(opt, partition_args, k); };
    });

    auto* whittaker = app.add_subcommand("whittaker", "degenerate Whittaker supports");
    whittaker->require_subcommand(1);
    auto* wh_support = whittaker->add_subcommand("support", "superdiagonal support and Jordan type");
    wh_support->add_option("--partition", partition_arg);
    wh_support->add_option("--composition", composition)->delimiter(',');
    wh_support->callback([&] {
        action = [&] { cmd_whittaker_support(opt, partition_arg, composition); };
    });

    auto* poset = app.add_subcommand("poset", "orbit posets");
    poset->require_subcommand(1);
    auto* poset_export = poset->add_subcommand("export", "closure poset of a classical group");
    poset_export->add_option("--group", family)->required();
    poset_export->add_option("--dim", dim)->required();
    poset_export->add_option("--format", format, "text, json, dot or poset");
    poset_export->callback([&] {
        action = [&] { cmd_poset_export(opt, family, dim, format); };
    });
    auto* poset_related = poset->add_subcommand("related", "related classes of an ingested poset");
    poset_related->add_option("--file", file)->required();
    poset_related->callback([&] {
        action = [&] { cmd_poset_related(opt, file); };
    });

    auto* exceptional = app.add_subcommand("exceptional", "exceptional-group reference data");
    exceptional->require_subcommand(1);
    auto* exc_related = exceptional->add_subcommand("related", "embedded related-orbit table");
    exc_related->add_option("--group", exc_group, "G2, F4, E6, E7 or E8");
    exc_related->callback([&] {
        action = [&] { cmd_exceptional_related(opt, exc_group); };
    });

    try {
        app.parse(argc, argv);
        if (action) action();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
