#include "altres/cli.hpp"

#include "altres/mullineux.hpp"
#include "altres/permmod.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace altres {

using nlohmann::json;

json to_json(const Partition& lambda) { return json(lambda.parts()); }

json to_json(const Node& a) { return json{{"row", a.row}, {"col", a.col}}; }

json to_json(const Verdict& v) {
    json ev = json::object();
    json nodes = json::array();
    for (const auto& a : v.evidence.normal_nodes) nodes.push_back(to_json(a));
    if (!v.evidence.normal_nodes.empty()) ev["normal_nodes"] = nodes;
    if (v.evidence.js) ev["js"] = *v.evidence.js;
    if (v.evidence.multiplicity_exponent) ev["multiplicity_exponent"] = *v.evidence.multiplicity_exponent;
    if (v.evidence.label) ev["label"] = to_json(*v.evidence.label);
    if (!v.evidence.note.empty()) ev["note"] = v.evidence.note;
    json out{{"outcome", to_string(v.outcome)}, {"evidence", ev}};
    if (!v.clause.empty()) out["clause"] = v.clause;
    return out;
}

json to_json(const RemovalSequence& seq) {
    json steps = json::array();
    for (const auto& s : seq.steps) steps.push_back({{"node", to_json(s.node)}, {"after", to_json(s.after)}});
    return json{{"origin", to_json(seq.origin)}, {"steps", steps}};
}

json to_json(const VerifyReport& r) {
    return json{{"suite", r.suite},       {"property", r.property}, {"max_n", r.max_n},
                {"primes", r.primes},     {"checked", r.checked},   {"failures", r.failures},
                {"exempt", r.exempt},     {"notes", r.notes},       {"passed", r.passed()}};
}

namespace {

struct Options {
    bool json_mode = false;
    bool strict = false;
    int threads = 1;
    int p = 2;
    std::string lambda;
    std::string subgroup;
    std::string generators;
    std::string module = "perm";
    std::string cls = "splitting";
    int n = 0;
    int k = 1;
    int m = -1;
    std::string suite;
    int max_n = 0;
    std::vector<int> primes;
    std::string out_file;
    bool list = false;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
    if (o.json_mode)
        out << j.dump() << '\n';
    else
        out << text;
}

std::string nodes_text(const std::vector<Node>& v) {
    std::string s;
    for (const auto& a : v) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(a.row) + "," + std::to_string(a.col) + ")";
    return s;
}

int cmd_classify(const Options& o, std::ostream& out) {
    RestrictionQuery q{o.p, parse_partition(o.lambda), parse_subgroup(o.subgroup)};
    const Verdict v = classify(q);
    json j = to_json(v);
    j["p"] = o.p;
    j["lambda"] = to_json(q.lambda);
    j["subgroup"] = to_string(q.subgroup);
    std::ostringstream t;
    t << to_string(v.outcome);
    if (!v.clause.empty()) t << " [" << v.clause << "]";
    t << '\n';
    const auto& ev = v.evidence;
    if (!ev.normal_nodes.empty()) t << "normal nodes: " << nodes_text(ev.normal_nodes) << '\n';
    if (ev.js) t << "JS: " << (*ev.js ? "yes" : "no") << '\n';
    if (ev.multiplicity_exponent) t << "multiplicity: 2^" << *ev.multiplicity_exponent << '\n';
    if (ev.label) t << "label: " << *ev.label << '\n';
    if (!ev.note.empty()) t << "note: " << ev.note << '\n';
    emit(out, o, j, t.str());
    return o.strict && v.outcome != Outcome::Irreducible ? kNegative : kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.n < 0 || o.n > 80) throw std::out_of_range("n must lie in [0, 80]");
    require_prime(o.p);
    std::vector<Partition> items;
    if (o.cls == "regular") {
        items = enumerate_p_regular(o.n, o.p);
    } else if (o.cls == "splitting") {
        for (auto& l : enumerate_splitting(o.n, o.p))
            if (is_p_regular(l, o.p)) items.push_back(std::move(l));
    } else if (o.cls == "js") {
        for (auto& l : enumerate_p_regular(o.n, o.p))
            if (is_js(l, o.p)) items.push_back(std::move(l));
    } else {
        throw std::invalid_argument("unknown class: " + o.cls);
    }
    json arr = json::array();
    std::string text;
    for (const auto& l : items) {
        arr.push_back(to_json(l));
        text += to_string(l) + '\n';
    }
    emit(out, o, json{{"n", o.n}, {"p", o.p}, {"class", o.cls}, {"partitions", arr}}, text);
    return o.strict && items.empty() ? kNegative : kOk;
}

std::vector<Permutation> parse_generators(int n, const std::string& text) {
    std::vector<Permutation> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(' ') != std::string::npos) gens.push_back(Permutation::parse(n, item));
    for (const auto& g : gens)
        if (!g.is_even()) throw std::invalid_argument("generator " + to_string(g) + " is odd");
    return gens;
}

int cmd_invariants(const Options& o, std::ostream& out) {
    ModuleSpec spec;
    spec.n = o.n;
    spec.p = o.p;
    spec.k = o.k;
    if (o.module == "perm") spec.kind = ModuleKind::Permutation;
    else if (o.module == "s1") spec.kind = ModuleKind::S1Star;
    else if (o.module == "s2") spec.kind = ModuleKind::S2Star;
    else throw std::invalid_argument("unknown module: " + o.module);
    validate(spec);
    if (o.subgroup.empty() == o.generators.empty())
        throw std::invalid_argument("give exactly one of --subgroup and --generators");

    std::vector<Permutation> gens;
    json j{{"n", o.n}, {"p", o.p}, {"module", o.module}, {"dimension", spec.dimension()}};
    if (spec.kind == ModuleKind::Permutation) j["k"] = o.k;
    std::ostringstream t;
    if (!o.subgroup.empty()) {
        const auto d = parse_subgroup(o.subgroup);
        validate(d, o.n);
        if (d.kind == SubgroupKind::Primitive) throw std::invalid_argument("primitive subgroups have no generators here");
        gens = generators(d, o.n);
        j["subgroup"] = to_string(d);
        j["order"] = subgroup_order(d, o.n);
    } else {
        gens = parse_generators(o.n, o.generators);
        const auto orb = orbits(gens, o.n);
        json sizes = json::array();
        Composition nu;
        for (const auto& x : orb) nu.push_back(static_cast<int>(x.size()));
        for (int s : nu) sizes.push_back(s);
        j["orbit_sizes"] = sizes;
        if (nu.size() > 1) {
            std::sort(nu.begin(), nu.end(), std::greater<>());
            j["contained_in"] = "young:" + to_string(nu);
        }
        t << "orbits on points: " << to_string(nu) << '\n';
        if (nu.size() > 1) t << "contained in young:" << to_string(nu) << '\n';
    }
    const int inv = invariant_dim(spec, gens);
    j["invariants"] = inv;
    json counts = json::object();
    for (int m = 1; m <= 3 && 2 * m <= o.n; ++m) counts["i" + std::to_string(m)] = orbit_count(gens, o.n, m);
    j["orbit_counts"] = counts;
    t << "module dimension: " << spec.dimension() << '\n' << "invariants: " << inv << '\n';
    for (auto it = counts.begin(); it != counts.end(); ++it) t << it.key() << ": " << it.value().get<int>() << '\n';
    emit(out, o, j, t.str());
    return o.strict && inv == 0 ? kNegative : kOk;
}

int cmd_mullineux(const Options& o, std::ostream& out) {
    const Partition l = parse_partition(o.lambda);
    require_prime(o.p);
    if (!is_p_regular(l, o.p)) throw std::invalid_argument("partition is not p-regular");
    const Partition m = mullineux_map(l, o.p);
    json sym = json::array();
    for (auto [a, r] : mullineux_symbol(l, o.p)) sym.push_back({a, r});
    emit(out, o, json{{"p", o.p}, {"lambda", to_json(l)}, {"image", to_json(m)}, {"symbol", sym}, {"fixed", m == l}},
         to_string(m) + '\n');
    return kOk;
}

int cmd_jstrunc(const Options& o, std::ostream& out) {
    const Partition l = parse_partition(o.lambda);
    if (!is_p_regular(l, 2)) throw std::invalid_argument("partition is not 2-regular");
    const Partition t = js_truncation(l);
    emit(out, o, json{{"lambda", to_json(l)}, {"truncation", to_json(t)}, {"size", t.size()}}, to_string(t) + '\n');
    return kOk;
}

int cmd_reachable(const Options& o, std::ostream& out) {
    const Partition l = parse_partition(o.lambda);
    require_prime(o.p);
    if (!is_p_regular(l, o.p)) throw std::invalid_argument("partition is not p-regular");
    if (o.m < 0 || o.m > l.size()) throw std::out_of_range("--m must lie in [0, |lambda|]");
    const ReachableSet rs = reachable(l, o.p, o.m);
    json members = json::array();
    std::ostringstream t;
    for (const auto& [mu, seq] : rs.members) {
        members.push_back({{"partition", to_json(mu)}, {"witness", to_json(seq)}});
        std::vector<Node> removed;
        for (const auto& s : seq.steps) removed.push_back(s.node);
        t << to_string(mu) << ": " << nodes_text(removed) << '\n';
    }
    emit(out, o, json{{"p", o.p}, {"lambda", to_json(l)}, {"m", o.m}, {"members", members}}, t.str());
    return o.strict && rs.members.empty() ? kNegative : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.list) {
        json arr = json::array();
        std::string text;
        for (const auto& s : suites()) {
            arr.push_back({{"name", s.name}, {"property", s.property}, {"default_max_n", s.default_max_n},
                           {"limit_max_n", s.limit_max_n}, {"primes", s.default_primes}});
            text += s.name + ": " + s.property + '\n';
        }
        emit(out, o, arr, text);
        return kOk;
    }
    if (o.suite.empty()) throw std::invalid_argument("verify needs a suite name, 'all' or --list");
    std::vector<std::string> names;
    if (o.suite == "all")
        for (const auto& s : suites()) names.push_back(s.name);
    else
        names.push_back(suite_info(o.suite).name);

    VerifyBounds b{o.max_n, o.primes, o.threads};
    json reports = json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto& name : names) {
        VerifyBounds bb = b;
        if (o.suite == "all") bb.max_n = 0;
        const VerifyReport r = run_suite(name, bb);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
        t << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (max-n " << r.max_n << "): " << r.checked
          << " checked, " << r.failures.size() << " failed, " << r.exempt.size() << " exempt\n";
        for (const auto& f : r.failures) t << "  failure: " << f << '\n';
        for (const auto& e : r.exempt) t << "  exempt: " << e << '\n';
        for (const auto& n : r.notes) t << "  note: " << n << '\n';
    }
    const json j = names.size() == 1 ? reports.front() : json{{"suites", reports}, {"passed", ok}};
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) throw std::invalid_argument("cannot write " + o.out_file);
        f << j.dump(2) << '\n';
    }
    emit(out, o, j, t.str());
    return ok ? kOk : kInternal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Irreducible restrictions of alternating-group modules to subgroups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_mode, "Emit canonical JSON");
    app.add_flag("--strict", o.strict, "Exit 1 on a reducible verdict or empty result");
    app.add_option("--threads", o.threads, "Worker threads for verify")->check(CLI::Range(1, 256));

    auto* classify_cmd = app.add_subcommand("classify", "Decide irreducibility of a restriction");
    classify_cmd->add_option("--p", o.p, "Characteristic")->check(CLI::Range(2, 65521));
    classify_cmd->add_option("--lambda", o.lambda, "Partition, comma separated")->required();
    classify_cmd->add_option("--subgroup", o.subgroup, "point-stabilizer | young:a,b,.. | intransitive:a,b | wreath:axb | full | primitive")
        ->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List partitions of n");
    enumerate_cmd->add_option("--n", o.n)->required();
    enumerate_cmd->add_option("--p", o.p)->check(CLI::Range(2, 65521));
    enumerate_cmd->add_option("--class", o.cls, "splitting | regular | js");

    auto* invariants_cmd = app.add_subcommand("invariants", "Fixed-point dimension of a permutation module");
    invariants_cmd->add_option("--n", o.n)->required();
    invariants_cmd->add_option("--p", o.p)->check(CLI::Range(2, 65521));
    invariants_cmd->add_option("--module", o.module, "perm | s1 | s2");
    invariants_cmd->add_option("--k", o.k, "Subset size for perm");
    invariants_cmd->add_option("--subgroup", o.subgroup);
    invariants_cmd->add_option("--generators", o.generators, "Even permutations separated by ';', e.g. \"(1,2,3);(1,2)(4,5)\"");

    auto* mullineux_cmd = app.add_subcommand("mullineux", "Mullineux image of a p-regular partition");
    mullineux_cmd->add_option("--p", o.p)->check(CLI::Range(2, 65521));
    mullineux_cmd->add_option("--lambda", o.lambda)->required();

    auto* jstrunc_cmd = app.add_subcommand("jstrunc", "JS truncation of a 2-regular partition");
    jstrunc_cmd->add_option("--lambda", o.lambda)->required();

    auto* reachable_cmd = app.add_subcommand("reachable", "Labels reachable by removing normal nodes");
    reachable_cmd->add_option("--p", o.p)->check(CLI::Range(2, 65521));
    reachable_cmd->add_option("--lambda", o.lambda)->required();
    reachable_cmd->add_option("--m", o.m, "Target size")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run a named property suite");
    verify_cmd->add_option("suite", o.suite, "Suite name or 'all'");
    verify_cmd->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--p", o.primes, "Primes, comma separated")->delimiter(',');
    verify_cmd->add_option("--out", o.out_file, "Write the JSON report to a file");
    verify_cmd->add_flag("--list", o.list, "List suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(o, out);
        if (*enumerate_cmd) return cmd_enumerate(o, out);
        if (*invariants_cmd) return cmd_invariants(o, out);
        if (*mullineux_cmd) return cmd_mullineux(o, out);
        if (*jstrunc_cmd) return cmd_jstrunc(o, out);
        if (*reachable_cmd) return cmd_reachable(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace altres
