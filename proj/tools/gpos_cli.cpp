// gpos: compute position invariants, generate families, build reduction
// instances and run the theorem sweeps.
//
// Exit codes: 0 ok / all pass, 1 verification failure, 2 usage or bad input,
// 3 solver capacity exceeded, 4 a conjecture check needs investigation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gpos/errors.hpp"
#include "gpos/families.hpp"
#include "gpos/io.hpp"
#include "gpos/reduction.hpp"
#include "gpos/solvers.hpp"
#include "gpos/verify.hpp"

namespace {

using namespace gpos;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvestigate = 4;

const std::vector<std::string> kInvariants{"gp",    "gp-",    "geodetic", "mp",  "mp-",   "omega",
                                           "omega-", "iuc",   "ids",      "lines", "universal-line"};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::optional<GraphFormat> parse_format(const std::string& f) {
    if (f.empty()) return std::nullopt;
    return f == "g6" ? GraphFormat::graph6 : GraphFormat::edges;
}

std::string emit(const Graph& g, const std::string& format) {
    return format == "edges" ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

std::vector<std::int64_t> parse_params(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("bad parameter '" + item + "'");
        }
    }
    return out;
}

void print_report(const InvariantReport& r, const std::vector<std::string>* labels, bool json) {
    if (json) {
        std::cout << to_json(r, labels).dump() << "\n";
        return;
    }
    std::cout << r.invariant << " = " << (r.value ? std::to_string(*r.value) : "undefined") << "\n"
              << "witness: " << r.witness.str();
    if (labels != nullptr) {
        std::cout << " [";
        bool first = true;
        r.witness.for_each([&](Vertex v) {
            std::cout << (first ? "" : " ") << (*labels)[v];
            first = false;
        });
        std::cout << "]";
    }
    std::cout << "\nnodes explored: " << r.nodes_explored << "\n";
}

struct ComputeArgs {
    std::string invariant;
    std::string in;
    std::string format;
    std::string family;
    std::string params;
    bool json = false;
    std::size_t mono_cap = kDefaultMonophonicCap;
};

int run_compute(const ComputeArgs& a) {
    Graph g;
    std::vector<std::string> labels;
    if (!a.family.empty()) {
        Family f = make_family(a.family, parse_params(a.params));
        g = std::move(f.graph);
        labels = std::move(f.labels);
    } else {
        g = read_graph_document(slurp(a.in), parse_format(a.format), a.in, GraphDocument::Source::file).graph;
    }
    const auto* lab = labels.empty() ? nullptr : &labels;
    SolverOptions opt;
    opt.monophonic_cap = a.mono_cap;

    const std::string& inv = a.invariant;
    std::vector<InvariantReport> reports;
    if (inv == "gp") reports.push_back(gp_number(g, opt));
    else if (inv == "gp-") reports.push_back(lower_gp_number(g, opt));
    else if (inv == "geodetic") reports.push_back(geodetic_number(g, opt));
    else if (inv == "mp") reports.push_back(mp_number(g, opt));
    else if (inv == "mp-") reports.push_back(lower_mp_number(g, opt));
    else if (inv == "omega") reports.push_back(clique_numbers(g, opt).largest);
    else if (inv == "omega-") reports.push_back(clique_numbers(g, opt).smallest);
    else if (inv == "iuc") {
        auto both = iuc_numbers(g, opt);
        reports.push_back(std::move(both.largest));
        reports.push_back(std::move(both.smallest));
    } else if (inv == "ids") reports.push_back(min_independent_dominating_set(g, opt));
    else if (inv == "lines") {
        InvariantReport r;
        r.invariant = "lines";
        r.value = count_distinct_lines(g);
        r.witness = VertexSet(g.order());
        reports.push_back(std::move(r));
    } else {
        InvariantReport r;
        r.invariant = "universal-line";
        r.witness = VertexSet(g.order());
        const auto pair = universal_line(g);
        r.value = pair ? 1 : 0;
        if (pair) {
            r.witness.set(pair->first);
            r.witness.set(pair->second);
        }
        reports.push_back(std::move(r));
    }
    for (const auto& r : reports) print_report(r, lab, a.json);
    return 0;
}

struct GenerateArgs {
    std::string family;
    std::string params;
    std::string out;
    std::string format = "g6";
};

int run_generate(const GenerateArgs& a) {
    const Family f = make_family(a.family, parse_params(a.params));
    const std::string spec = to_json(f.spec).dump();
    if (a.out.empty()) {
        std::cout << emit(f.graph, a.format);
        std::cerr << spec << "\n";
    } else {
        spill(a.out, emit(f.graph, a.format));
        std::cout << spec << "\n";
    }
    return 0;
}

struct ReduceArgs {
    std::string in;
    std::string format;
    std::size_t k = 0;
    std::string out;
};

int run_reduce(const ReduceArgs& a) {
    const Graph g = read_graph_document(slurp(a.in), parse_format(a.format), a.in, GraphDocument::Source::file).graph;
    const auto inst = build_lgp_instance(g, a.k);
    nlohmann::json j;
    j["n"] = inst.target.order();
    j["k_prime"] = inst.target_k;
    j["graph6"] = emit_graph6(inst.target);
    auto roles = nlohmann::json::array();
    for (auto r : inst.roles) roles.push_back(to_string(r));
    j["roles"] = std::move(roles);
    if (!a.out.empty()) spill(a.out, emit_graph6(inst.target) + "\n");
    std::cout << j.dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string theorem;
    std::optional<std::size_t> max_n;
    bool json = false;
    bool serial = false;
    std::size_t mono_cap = kSweepMonophonicCap;
};

std::string params_text(const std::vector<std::int64_t>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

int run_verify(const VerifyArgs& a) {
    SweepOptions opt;
    opt.max_n = a.max_n;
    opt.monophonic_cap = a.mono_cap;
    opt.execution = a.serial ? Execution::serial : Execution::parallel;
    std::vector<std::string> names;
    if (a.theorem == "all") names = theorem_names();
    else names.push_back(a.theorem);

    std::size_t failures = 0, investigate = 0, total = 0;
    for (const auto& name : names) {
        for (const auto& r : run_theorem(name, opt)) {
            ++total;
            failures += r.status == RecordStatus::fail;
            investigate += r.status == RecordStatus::investigate;
            if (a.json) {
                std::cout << to_json(r).dump() << "\n";
                continue;
            }
            auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "undefined"; };
            std::cout << (r.status == RecordStatus::pass ? "PASS " : r.status == RecordStatus::fail ? "FAIL " : "INVESTIGATE ")
                      << r.theorem << " " << r.quantity << " " << params_text(r.params) << " expected=" << show(r.expected)
                      << " computed=" << show(r.computed);
            if (!r.pass && !r.detail.empty()) std::cout << " [" << r.detail << "]";
            std::cout << "\n";
        }
        std::cout.flush();
    }
    if (!a.json)
        std::cout << total << " records, " << failures << " failed, " << investigate << " to investigate\n";
    if (failures > 0) return kExitFailure;
    return investigate > 0 ? kExitInvestigate : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact general-position and related graph invariants"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute one invariant with a witness");
    compute->add_option("--invariant", ca.invariant, "Invariant")->required()->check(CLI::IsMember(kInvariants));
    auto* in_opt = compute->add_option("--in", ca.in, "Graph file ('-' for stdin)");
    auto* fam_opt = compute->add_option("--family", ca.family, "Generate the graph instead of reading it");
    compute->add_option("--params", ca.params, "Family parameters, comma separated");
    in_opt->excludes(fam_opt);
    compute->add_option("--format", ca.format, "Input format (default: detect)")->check(CLI::IsMember({"g6", "edges"}));
    compute->add_flag("--json", ca.json, "One JSON object per report");
    compute->add_option("--mono-cap", ca.mono_cap, "Largest order accepted by monophonic solvers");

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Emit a family member and its expected values");
    generate->add_option("--family", ga.family, "Family name")->required()->check(CLI::IsMember(family_names()));
    generate->add_option("--params", ga.params, "Parameters, comma separated");
    generate->add_option("--out", ga.out, "Write the graph here; the spec goes to stdout");
    generate->add_option("--format", ga.format, "Output format")->check(CLI::IsMember({"g6", "edges"}));

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Map an independent-domination instance to a lower-gp instance");
    reduce->add_option("--in", ra.in, "Graph file ('-' for stdin)")->required();
    reduce->add_option("--format", ra.format, "Input format (default: detect)")->check(CLI::IsMember({"g6", "edges"}));
    reduce->add_option("--k", ra.k, "Threshold")->required();
    reduce->add_option("--out", ra.out, "Also write G' (graph6) here");

    VerifyArgs va;
    std::vector<std::string> theorem_choices = theorem_names();
    theorem_choices.emplace_back("all");
    auto* verify = app.add_subcommand("verify", "Run a theorem sweep");
    verify->footer("Default ranges:\n" + theorem_ranges());
    verify->add_option("--theorem", va.theorem, "Theorem name or 'all'")->required()->check(CLI::IsMember(theorem_choices));
    verify->add_option("--max-n", va.max_n, "Override the sweep's main size parameter");
    verify->add_flag("--json", va.json, "One JSON record per line");
    verify->add_flag("--serial", va.serial, "Single-threaded reference run");
    verify->add_option("--mono-cap", va.mono_cap, "Largest order accepted by monophonic solvers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute) {
            if (ca.in.empty() && ca.family.empty()) throw InputError("compute needs --in or --family");
            return run_compute(ca);
        }
        if (*generate) return run_generate(ga);
        if (*reduce) return run_reduce(ra);
        return run_verify(va);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    }
}
