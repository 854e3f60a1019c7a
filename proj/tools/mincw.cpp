// mincw: minimal-codeword toolbox for binary linear codes.
//
// Subcommands: analyze, bounds, search, graph, gtable, verify.
// Exit codes: 0 success, 2 input error, 3 invariant/verification failure,
// 4 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mincw/bounds.hpp"
#include "mincw/codes.hpp"
#include "mincw/cyclegraph.hpp"
#include "mincw/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitBudget = 4;

int default_workers() {
    if (const char* env = std::getenv("MINCW_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

int run_analyze(const std::string& path, bool oracle, bool minimal_list, bool json_out) {
    const mincw::codes::LinearCode code = mincw::codes::read_code_file(path);
    const int n = code.n();
    const int k = code.k();
    const int d = mincw::codes::min_distance(code);
    const mincw::codes::MinimalSet minimal = mincw::codes::minimal_codewords(code);
    const bool intersecting = mincw::codes::is_intersecting(code);

    if (oracle) {
        const mincw::codes::MinimalSet check = mincw::codes::minimal_codewords_oracle(code);
        if (check.members != minimal.members) {
            std::cerr << "oracle mismatch: sieve " << minimal.count() << " vs oracle " << check.count() << "\n";
            return kExitInvariant;
        }
    }

    const mincw::bounds::GTable g = mincw::bounds::GTable::embedded();
    const auto agrell = mincw::bounds::agrell_upper(n, k);

    if (json_out) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["min_distance"] = d;
        j["m"] = minimal.count();
        j["intersecting"] = intersecting;
        j["trivial_upper"] = mincw::bounds::trivial_upper(n, k);
        if (g.known(n)) j["refined_trivial_upper"] = mincw::bounds::refined_trivial_upper(n, k, g);
        j["matroid_upper"] = mincw::bounds::matroid_upper(n, k);
        if (agrell) j["agrell_upper"] = *agrell;
        if (minimal_list) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& w : minimal.members) rows.push_back(mincw::codes::to_binary_string(w.bits, n));
            j["minimal_codewords"] = rows;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "code [" << n << "," << k << "] d=" << d << "\n";
    std::cout << "M = " << minimal.count() << ", intersecting = " << (intersecting ? "true" : "false") << "\n";
    std::cout << "trivial " << mincw::bounds::trivial_upper(n, k);
    if (g.known(n)) std::cout << ", refined_trivial " << mincw::bounds::refined_trivial_upper(n, k, g);
    std::cout << ", matroid " << mincw::bounds::matroid_upper(n, k) << ", agrell ";
    if (agrell) std::cout << *agrell;
    else std::cout << "n/a";
    std::cout << "\n";
    if (minimal_list) {
        for (const auto& w : minimal.members) std::cout << mincw::codes::to_binary_string(w.bits, n) << "\n";
    }
    return kExitOk;
}

std::map<std::pair<int, int>, std::uint64_t> read_nk_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mincw::codes::ParseError("cannot open " + path);
    std::map<std::pair<int, int>, std::uint64_t> out;
    std::string line;
    while (mincw::codes::next_content_line(in, line)) {
        std::istringstream row(line);
        int n = 0, k = 0;
        std::uint64_t v = 0;
        if (!(row >> n >> k >> v)) throw mincw::codes::ParseError("bad line in " + path + ": " + line);
        out[{n, k}] = v;
    }
    return out;
}

int run_bounds(int N, int K, const std::string& search_lower_file, const std::string& d_table_file,
               const std::string& certs_dir) {
    std::map<std::pair<int, int>, std::uint64_t> search_lower;
    if (!search_lower_file.empty()) search_lower = read_nk_value_file(search_lower_file);
    std::map<std::pair<int, int>, std::uint64_t> d_table_raw;
    if (!d_table_file.empty()) d_table_raw = read_nk_value_file(d_table_file);

    if (!certs_dir.empty()) {
        for (const auto& entry : std::filesystem::directory_iterator(certs_dir)) {
            if (!entry.is_regular_file()) continue;
            const auto cert = mincw::search::read_certificate_file(entry.path().string());
            if (!mincw::search::verify_certificate(cert)) {
                std::cerr << "certificate failed verification: " << entry.path() << "\n";
                return kExitInvariant;
            }
            auto& slot = search_lower[{cert.n, cert.k}];
            slot = std::max(slot, cert.claimed_m);
        }
    }

    const mincw::bounds::GTable g = mincw::bounds::GTable::embedded();
    const auto recursion = mincw::bounds::recursion_upper_table(N, K);

    // first pass: per-cell best lower bounds
    std::map<std::pair<int, int>, mincw::bounds::BoundsCell> cells;
    std::map<std::pair<int, int>, std::uint64_t> lowers;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1; k <= std::min(n, K); ++k) {
            std::optional<std::uint64_t> sl;
            if (const auto it = search_lower.find({n, k}); it != search_lower.end()) sl = it->second;
            std::optional<int> d;
            if (const auto it = d_table_raw.find({n, k}); it != d_table_raw.end()) d = static_cast<int>(it->second);
            const auto cell = mincw::bounds::best_bounds(n, k, g, sl, d, recursion.at({n, k}));
            cells[{n, k}] = cell;
            lowers[{n, k}] = cell.lower;
        }
    }

    // monotone + superadditive closure over the rectangle
    const auto closed = mincw::bounds::closure_lower(lowers);
    for (auto& [nk, cell] : cells) {
        if (closed.lower.at(nk) > cell.lower) {
            cell.lower = closed.lower.at(nk);
            cell.lower_src = closed.source.at(nk);
        }
    }

    std::cout << "# n\tk\tlower\tlower_src\tupper\tupper_src\texact\n";
    for (const auto& [nk, cell] : cells) {
        if (cell.lower > cell.upper) {
            std::cerr << "bound crossing at (" << nk.first << "," << nk.second << ")\n";
            return kExitInvariant;
        }
        std::cout << nk.first << '\t' << nk.second << '\t' << cell.lower << '\t' << cell.lower_src
                  << '\t' << cell.upper << '\t' << cell.upper_src << '\t'
                  << (cell.exact() ? "yes" : "no") << "\n";
    }
    for (const auto& [n, k] : mincw::bounds::published_matroid_discrepancies()) {
        if (n <= N && k <= K) {
            std::cout << "# note: published table prints " << mincw::bounds::matroid_upper(n, k) - 1
                      << " at (" << n << "," << k << "); the matroid bound C(n,k-1) is "
                      << mincw::bounds::matroid_upper(n, k) << "\n";
        }
    }
    return kExitOk;
}

int run_search(int n, int k, bool exhaustive, std::uint64_t seed, int workers,
               std::uint64_t max_candidates, int restarts, const std::string& out_path) {
    mincw::search::SearchBudget budget;
    budget.seed = seed;
    budget.workers = workers;
    budget.max_candidates = max_candidates;
    budget.restarts = restarts;

    const mincw::search::SearchCertificate cert =
        exhaustive ? mincw::search::exhaustive_max_M(n, k, budget)
                   : mincw::search::heuristic_max_M(n, k, budget);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitInput;
        }
        mincw::search::write_certificate(out, cert);
    }
    std::cout << "M(" << n << "," << k << ") >= " << cert.claimed_m << " (" << cert.method
              << ", " << cert.candidates_examined << " candidates)\n";
    if (exhaustive && cert.method != "exhaustive") return kExitBudget;
    return kExitOk;
}

int run_graph(const std::string& path, bool json_out) {
    const mincw::cyclegraph::Graph g = mincw::cyclegraph::read_graph_file(path);
    mincw::cyclegraph::CycleReport report;
    try {
        report = mincw::cyclegraph::verify_cycle_correspondence(g);
    } catch (const mincw::cyclegraph::AcyclicGraph&) {
        if (json_out) {
            nlohmann::json j;
            j["p"] = g.p;
            j["q"] = g.q();
            j["acyclic"] = true;
            j["cycles"] = 0;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "p " << g.p << ", q " << g.q() << ": acyclic: 0 cycles, no cycle code\n";
        }
        return kExitOk;
    }

    if (json_out) {
        nlohmann::json j;
        j["p"] = report.p;
        j["q"] = report.q;
        j["dimension"] = report.dimension;
        j["cycles_via_code"] = report.cycles_via_code;
        j["cycles_via_backtracking"] = report.cycles_via_backtracking;
        if (report.bound_new) j["bound_new"] = *report.bound_new;
        j["bound_old"] = report.bound_old;
        j["agree"] = report.agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "p " << report.p << ", q " << report.q << ", cycle code [" << report.q << ","
                  << report.dimension << "]\n";
        std::cout << "cycles " << report.cycles_via_code << " (code) = "
                  << report.cycles_via_backtracking << " (backtracking)\n";
        std::cout << "bound_new ";
        if (report.bound_new) std::cout << *report.bound_new;
        else std::cout << "n/a";
        std::cout << ", bound_old " << report.bound_old << "\n";
    }
    if (!report.agree) {
        std::cerr << "cycle count disagreement\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int run_gtable(int N) {
    const mincw::bounds::GTable embedded = mincw::bounds::GTable::embedded();
    bool mismatch = false;
    std::cout << "# n\tg\tstatus\n";
    for (int n = 3; n <= N; ++n) {
        if (n <= 12) {
            const mincw::search::GResult computed = mincw::search::compute_g(n);
            const bool known = embedded.known(n);
            const bool ok = !known || computed.value == embedded.at(n);
            std::cout << n << '\t' << computed.value << '\t'
                      << (computed.exhaustive ? (ok ? "computed" : "MISMATCH") : "truncated") << "\n";
            if (computed.exhaustive && !ok) mismatch = true;
        } else if (embedded.known(n)) {
            std::cout << n << '\t' << embedded.at(n) << '\t' << "embedded" << "\n";
        }
    }
    return mismatch ? kExitInvariant : kExitOk;
}

int run_verify(const std::string& path) {
    const mincw::search::SearchCertificate cert = mincw::search::read_certificate_file(path);
    if (!mincw::search::verify_certificate(cert)) {
        std::cerr << "certificate verification failed\n";
        return kExitInvariant;
    }
    std::cout << "ok: M(" << cert.n << "," << cert.k << ") >= " << cert.claimed_m << " ("
              << cert.method << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal codewords of binary linear codes"};
    app.require_subcommand(1);

    std::string code_file, graph_file, cert_file, out_path;
    std::string search_lower_file, d_table_file, certs_dir;
    bool oracle = false, minimal_list = false, json_out = false, exhaustive = false, heuristic = false;
    int n = 0, k = 0, N = 15, K = 13, workers = default_workers(), restarts = 64;
    std::uint64_t seed = 1, max_candidates = ~std::uint64_t{0};

    auto* analyze = app.add_subcommand("analyze", "analyze a code file");
    analyze->add_option("code_file", code_file)->required();
    analyze->add_flag("--oracle", oracle, "cross-check with the pairwise oracle");
    analyze->add_flag("--minimal-list", minimal_list, "dump the minimal codewords");
    analyze->add_flag("--json", json_out);

    auto* bounds_cmd = app.add_subcommand("bounds", "emit the bounds table");
    bounds_cmd->add_option("N", N);
    bounds_cmd->add_option("K", K);
    bounds_cmd->add_option("--search-lower", search_lower_file, "file of \"n k lower\" lines");
    bounds_cmd->add_option("--d-table", d_table_file, "file of \"n k d\" lines");
    bounds_cmd->add_option("--certs", certs_dir, "directory of certificate files");

    auto* search_cmd = app.add_subcommand("search", "search for codes maximizing M");
    search_cmd->add_option("n", n)->required();
    search_cmd->add_option("k", k)->required();
    search_cmd->add_flag("--exhaustive", exhaustive);
    search_cmd->add_flag("--heuristic", heuristic);
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--workers", workers);
    search_cmd->add_option("--max-candidates", max_candidates);
    search_cmd->add_option("--restarts", restarts);
    search_cmd->add_option("--out", out_path, "certificate output file");

    auto* graph_cmd = app.add_subcommand("graph", "analyze the cycle code of a graph");
    graph_cmd->add_option("graph_file", graph_file)->required();
    bool report = false;
    graph_cmd->add_flag("--json", json_out);
    graph_cmd->add_flag("--report", report, "full report (default)");

    auto* gtable_cmd = app.add_subcommand("gtable", "recompute g(n) and compare with the known table");
    gtable_cmd->add_option("N", N);

    auto* verify_cmd = app.add_subcommand("verify", "verify a search certificate");
    verify_cmd->add_option("cert_file", cert_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(code_file, oracle, minimal_list, json_out);
        if (*bounds_cmd) return run_bounds(N, K, search_lower_file, d_table_file, certs_dir);
        if (*search_cmd) {
            if (exhaustive == heuristic) {
                std::cerr << "choose exactly one of --exhaustive / --heuristic\n";
                return kExitInput;
            }
            return run_search(n, k, exhaustive, seed, workers, max_candidates, restarts, out_path);
        }
        if (*graph_cmd) return run_graph(graph_file, json_out);
        if (*gtable_cmd) return run_gtable(N);
        if (*verify_cmd) return run_verify(cert_file);
    } catch (const mincw::codes::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
