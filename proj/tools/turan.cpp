// Command-line front door. graph6 streams on stdin/stdout, JSON results on
// stdout, certificate summaries on stderr. Exit codes: 0 ok, 2 usage or
// parse error, 3 internal certification failure, 4 incomplete search.

#include <chrono>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/bounds.hpp"
#include "turan/clique.hpp"
#include "turan/constructions.hpp"
#include "turan/gf.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"
#include "turan/pattern.hpp"
#include "turan/version.hpp"

using json = nlohmann::ordered_json;
using namespace turan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;
constexpr int kExitIncomplete = 4;

struct Emitter {
    bool pretty = false;
    bool record = false;
    std::string command;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void payload(const json& result, const json& seeds = nullptr) const {
        json out = result;
        if (record) {
            double wall =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            out = json{{"command", command},
                       {"version", kVersion},
                       {"seed", seeds},
                       {"wall_ms", wall},
                       {"result", result}};
        }
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
    }
};

std::vector<std::string> stdin_lines() {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

const char* method_name(SearchMethod m) {
    return m == SearchMethod::CanonicalAugmentation ? "canonical-augmentation" : "naive-labeled";
}

json witness_json(const Witness& w) {
    json arr = json::array();
    for (const auto& e : w.embeddings) arr.push_back(e);
    return arr;
}

int run_gen(const std::string& kind, std::int64_t q, int a, int t, int n, int k, double p,
            bool have_p, std::uint64_t seed, const std::string& pattern_text) {
    if (kind == "norm") {
        Graph g = norm_graph(q, a);
        std::cout << to_graph6(g) << "\n";
        std::cerr << "norm graph: q=" << q << " a=" << a << " n=" << g.n() << "\n";
        return kExitOk;
    }
    if (kind == "join-kab") {
        Graph g = lower_bound_kab(t, q, a);
        std::cout << to_graph6(g) << "\n";
        long long b = 1;
        for (int i = 2; i <= a - 1; ++i) b *= i;
        std::cerr << "certified: free of " << (t + 1) << "*K(" << a << "," << b + 1 << ")\n";
        return kExitOk;
    }
    if (kind == "join-c2k") {
        auto lines = stdin_lines();
        if (lines.empty()) {
            std::cerr << "join-c2k: expected a graph6 host graph on stdin\n";
            return kExitUsage;
        }
        Graph h = from_graph6(lines.front());
        Graph g = lower_bound_c2k(t, h, k);
        std::cout << to_graph6(g) << "\n";
        std::cerr << "certified: free of " << (t + 1) << "*C" << 2 * k << "\n";
        return kExitOk;
    }
    if (kind == "rand-c2kfree") {
        double prob = have_p ? p : default_c2kfree_probability(n, k);
        RandomC2kFree out = random_c2kfree(n, k, prob, seed);
        std::cout << to_graph6(out.graph) << "\n";
        json cert{{"certified", "C" + std::to_string(2 * k) + "-free"},
                  {"trace", out.trace.to_key_value()}};
        std::cerr << cert.dump() << "\n";
        return kExitOk;
    }
    if (kind == "basic") {
        Pattern pat = parse_pattern(pattern_text);
        Graph g = disjoint_union(pat.copies, pat.base_graph());
        std::cout << to_graph6(g) << "\n";
        std::cerr << "basic: " << pat.to_string() << " on " << g.n() << " vertices\n";
        return kExitOk;
    }
    std::cerr << "gen: unknown kind '" << kind << "'\n";
    return kExitUsage;
}

int run_bound(const std::string& which, long long n, int t, int r, int a, int b,
              const std::string& ex_values_text, const std::string& ex_values_file,
              bool override_regime, const Emitter& em) {
    if (which == "thm1-upper" || which == "thm1-lower" || which == "as") {
        BoundValue v;
        if (which == "as")
            v = as_bound(n, r, a, b, override_regime);
        else {
            KabBoundParams params{n, t, r, a, b};
            v = which == "thm1-upper" ? thm1_upper(params, override_regime)
                                      : thm1_lower(params, override_regime);
        }
        json out{{"which", which},
                 {"value", double(v.value)},
                 {"asymptotic_envelope", v.asymptotic_envelope}};
        if (v.out_of_regime) out["out_of_regime"] = true;
        em.payload(out);
        return kExitOk;
    }
    if (which == "thm2-upper" || which == "thm2-lower") {
        C2kBoundInputs in;
        in.t = t;
        in.r = r;
        std::string text = ex_values_text;
        if (!ex_values_file.empty()) {
            std::ifstream f(ex_values_file);
            if (!f) {
                std::cerr << "bound: cannot open " << ex_values_file << "\n";
                return kExitUsage;
            }
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        if (text.empty()) {
            std::cerr << "bound: " << which << " needs --ex-values or --ex-values-file\n";
            return kExitUsage;
        }
        if (text.find('[') != std::string::npos) {
            for (auto v : json::parse(text)) in.ex_values.push_back(v.get<long long>());
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) in.ex_values.push_back(std::stoll(item));
        }
        long long v = which == "thm2-upper" ? thm2_upper(in) : thm2_lower(in);
        em.payload(json{{"which", which}, {"value", v}, {"exact", true}});
        return kExitOk;
    }
    std::cerr << "bound: unknown --which '" << which << "'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Turan workbench"};
    app.require_subcommand(1);

    Emitter em;
    for (int i = 0; i < argc; ++i) em.command += (i ? " " : "") + std::string(argv[i]);
    app.add_flag("--pretty", em.pretty, "indent JSON output");
    app.add_flag("--record", em.record, "wrap results in a run record");

    // gen
    auto* gen = app.add_subcommand("gen", "emit graphs as graph6");
    std::string gen_kind, gen_pattern;
    std::int64_t gen_q = 3;
    int gen_a = 3, gen_t = 1, gen_n = 0, gen_k = 2;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "norm | join-kab | join-c2k | rand-c2kfree | basic")
        ->required();
    gen->add_option("--q", gen_q, "prime power");
    gen->add_option("--a", gen_a, "bipartite side parameter");
    gen->add_option("--t", gen_t, "join clique size");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--k", gen_k, "half cycle length");
    auto* popt = gen->add_option("--p", gen_p, "edge probability (default n^(-1+1/(2k-1)))");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--pattern", gen_pattern, "pattern DSL for 'basic'");

    // count / profile / check on graph6 stdin
    auto* count = app.add_subcommand("count", "count r-cliques of graph6 input");
    int count_r = 2;
    count->add_option("--r", count_r, "clique size")->required();

    auto* profile = app.add_subcommand("profile", "clique profile of graph6 input");
    int profile_rmax = kDefaultProfileMax;
    profile->add_option("--rmax", profile_rmax, "largest clique size");

    auto* check = app.add_subcommand("check", "pattern-freeness of graph6 input");
    std::string check_pattern;
    check->add_option("--pattern", check_pattern, "pattern DSL, e.g. K(2,2), C4, 2*C4")->required();

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate bound expressions");
    std::string bound_which, bound_ex, bound_ex_file;
    long long bound_n = 0;
    int bound_t = 0, bound_r = 0, bound_a = 0, bound_b = 0;
    bool bound_override = false;
    bound->add_option("--which", bound_which, "thm1-upper|thm1-lower|as|thm2-upper|thm2-lower")
        ->required();
    bound->add_option("--n", bound_n, "total vertex count");
    bound->add_option("--t", bound_t, "join clique size");
    bound->add_option("--r", bound_r, "counted clique size");
    bound->add_option("--a", bound_a, "bipartite side a");
    bound->add_option("--b", bound_b, "bipartite side b");
    bound->add_option("--ex-values", bound_ex, "comma list or JSON array, indices 0..r");
    bound->add_option("--ex-values-file", bound_ex_file, "file with a JSON array");
    bound->add_flag("--override", bound_override, "evaluate outside the theorem regime");

    // search
    auto* search = app.add_subcommand("search", "exact extremal search");
    int search_n = 0, search_r = 2;
    std::string search_forbid;
    bool search_naive = false;
    double search_timeout = 0.0;
    search->add_option("--n", search_n, "vertex count")->required();
    search->add_option("--r", search_r, "counted clique size")->required();
    search->add_option("--forbid", search_forbid, "forbidden pattern DSL")->required();
    search->add_flag("--naive", search_naive, "enumerate all labeled graphs instead");
    search->add_option("--timeout", search_timeout, "wall-clock budget in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_kind, gen_q, gen_a, gen_t, gen_n, gen_k, gen_p, popt->count() > 0,
                           gen_seed, gen_pattern);

        if (count->parsed()) {
            for (const auto& line : stdin_lines()) {
                Graph g = from_graph6(line);
                em.payload(json{{"k", count_r}, {"count", count_cliques(g, count_r)}});
            }
            return kExitOk;
        }

        if (profile->parsed()) {
            for (const auto& line : stdin_lines()) {
                Graph g = from_graph6(line);
                em.payload(json(clique_profile(g, profile_rmax).counts));
            }
            return kExitOk;
        }

        if (check->parsed()) {
            Pattern pat = parse_pattern(check_pattern);
            for (const auto& line : stdin_lines()) {
                Graph g = from_graph6(line);
                auto w = contains(g, pat);
                json out{{"free", !w.has_value()}};
                if (w) out["witness"] = witness_json(*w);
                em.payload(out);
            }
            return kExitOk;
        }

        if (bound->parsed())
            return run_bound(bound_which, bound_n, bound_t, bound_r, bound_a, bound_b, bound_ex,
                             bound_ex_file, bound_override, em);

        if (search->parsed()) {
            Pattern pat = parse_pattern(search_forbid);
            OracleOptions opts;
            opts.timeout_seconds = search_timeout;
            SearchResult res = search_naive ? extremal_number_naive(search_n, search_r, pat, opts)
                                            : extremal_number(search_n, search_r, pat, opts);
            em.payload(json{{"value", res.value},
                            {"witness", to_graph6(res.witness)},
                            {"method", method_name(res.method)},
                            {"nodes", res.nodes_explored},
                            {"elapsed_ms", res.elapsed_seconds * 1000.0},
                            {"complete", res.complete}});
            return res.complete ? kExitOk : kExitIncomplete;
        }
    } catch (const CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
