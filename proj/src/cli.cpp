#include "setfam/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "setfam/asymptotics.hpp"
#include "setfam/constructions.hpp"
#include "setfam/core.hpp"
#include "setfam/search.hpp"
#include "setfam/shifting.hpp"
#include "setfam/spectral.hpp"

namespace setfam::cli {

namespace {

using nlohmann::ordered_json;

constexpr long long kEnumerationCap = 1'000'000;
constexpr std::size_t kWitnessSetCap = 50'000;

std::string fmt_double(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string rat_str(const ExactRatio& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

std::string bool_str(bool value) { return value ? "true" : "false"; }

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    return (end != nullptr && *end == '\0') ? parsed : fallback;
}

int env_int(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    return (end != nullptr && *end == '\0') ? static_cast<int>(parsed) : fallback;
}

// One set per line as comma-separated 1-based elements; '#' starts a
// comment, blank lines are skipped.
Family read_family_file(const std::string& path, int ground_n) {
    std::ifstream input(path);
    if (!input) {
        throw std::invalid_argument("cannot open family file: " + path);
    }
    std::vector<std::uint64_t> masks;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::vector<int> elements;
        std::stringstream fields(line);
        std::string field;
        bool any = false;
        while (std::getline(fields, field, ',')) {
            std::size_t pos = 0;
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) {
                ++pos;
            }
            std::size_t end = field.size();
            while (end > pos && std::isspace(static_cast<unsigned char>(field[end - 1]))) {
                --end;
            }
            if (pos == end) {
                continue;
            }
            any = true;
            int value = 0;
            const std::string token = field.substr(pos, end - pos);
            try {
                std::size_t used = 0;
                value = std::stoi(token, &used);
                if (used != token.size()) {
                    throw std::invalid_argument(token);
                }
            } catch (const std::exception&) {
                throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                            ": bad element '" + token + "'");
            }
            if (value < 1 || value > ground_n) {
                throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                            ": element " + std::to_string(value) +
                                            " outside [1," + std::to_string(ground_n) + "]");
            }
            elements.push_back(value);
        }
        if (any) {
            masks.push_back(mask_from_elements(elements, ground_n));
        }
    }
    return Family(ground_n, masks);
}

void require_enumerable(const BigCount& member_count) {
    if (member_count > kEnumerationCap) {
        throw resource_error(
            "this command materializes every member set; the requested family has " +
            member_count.str() + " members (cap " + std::to_string(kEnumerationCap) + ")");
    }
}

ordered_json render_witnesses(const std::vector<Family>& families) {
    std::size_t total = 0;
    for (const Family& family : families) {
        total += family.size();
    }
    ordered_json rendered = ordered_json::array();
    if (total > kWitnessSetCap) {
        return rendered;
    }
    for (const Family& family : families) {
        ordered_json sets = ordered_json::array();
        for (std::size_t i = 0; i < family.size(); ++i) {
            sets.push_back(family.member(i).elements());
        }
        rendered.push_back(std::move(sets));
    }
    return rendered;
}

struct Outcome {
    std::string command;
    ordered_json params = ordered_json::object();
    std::string status = "ok";
    ordered_json values = ordered_json::object();
    std::vector<Family> witnesses;
};

int exit_code_for(const std::string& status) {
    if (status == "ok" || status == "verified") {
        return 0;
    }
    if (status == "refuted") {
        return 2;
    }
    if (status == "exhausted-budget") {
        return 3;
    }
    return 1;
}

RunResult finish(const Outcome& outcome, std::int64_t elapsed_ms,
                 const std::string& diagnostics) {
    ordered_json report;
    report["command"] = outcome.command;
    report["params"] = outcome.params;
    report["status"] = outcome.status;
    report["values"] = outcome.values;
    report["witnesses"] = render_witnesses(outcome.witnesses);
    report["elapsed_ms"] = elapsed_ms;
    return RunResult{exit_code_for(outcome.status), report.dump(2) + "\n", diagnostics};
}

std::string search_status(SearchStatus status) { return to_string(status); }

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact verification toolkit for intersecting set families"};
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    int t = 0;
    int r = 0;
    double alpha = 0.0;
    double tol = 1e-12;
    SearchBudget budget;
    budget.max_nodes = env_u64("SETFAM_MAX_NODES", budget.max_nodes);
    budget.worker_count = env_int("SETFAM_WORKERS", budget.worker_count);
    std::vector<std::string> family_files;

    Outcome outcome;

    auto echo_int = [&outcome](const char* name, int value) {
        outcome.params[name] = std::to_string(value);
    };
    auto echo_files = [&outcome, &family_files] {
        outcome.params["family_file"] = family_files;
    };

    auto* construct = app.add_subcommand("construct", "build named families");
    construct->require_subcommand(1);

    auto* star_split_cmd =
        construct->add_subcommand("star-split", "halve the star at element 1 by rank");
    star_split_cmd->add_option("--n", n, "ground set size")->required();
    star_split_cmd->add_option("--k", k, "member set size")->required();
    star_split_cmd->callback([&] {
        outcome.command = "construct star-split";
        echo_int("n", n);
        echo_int("k", k);
        require_enumerable(binom(n - 1, k - 1));
        const auto [a, b] = star_split(n, k, 1);
        outcome.values["a_size"] = std::to_string(a.size());
        outcome.values["b_size"] = std::to_string(b.size());
        outcome.witnesses = {a, b};
    });

    auto* threshold_cmd = construct->add_subcommand(
        "threshold", "disjoint cross-intersecting pair from a window threshold");
    threshold_cmd->add_option("--n", n, "ground set size")->required();
    threshold_cmd->add_option("--k", k, "member set size")->required();
    threshold_cmd->add_option("--t", t, "window size minus one")->required();
    threshold_cmd->callback([&] {
        outcome.command = "construct threshold";
        echo_int("n", n);
        echo_int("k", k);
        echo_int("t", t);
        require_enumerable(binom(n, k));
        const ThresholdPair pair = threshold_pair(n, k, t);
        outcome.values["a_size"] = pair.a_size.str();
        outcome.values["b_size"] = pair.b_size.str();
        outcome.values["min_size"] = std::min(pair.a_size, pair.b_size).str();
        outcome.witnesses = {pair.a_family, pair.b_family};
    });

    auto* pairing_cmd = construct->add_subcommand(
        "pairing", "assign whole complement pairs of C([2k],k) to alternating sides");
    pairing_cmd->add_option("--k", k, "member set size (ground set is [2k])")->required();
    pairing_cmd->callback([&] {
        outcome.command = "construct pairing";
        echo_int("k", k);
        require_enumerable(binom(2 * k, k));
        const auto [a, b] = complement_pairing(k);
        outcome.values["a_size"] = std::to_string(a.size());
        outcome.values["b_size"] = std::to_string(b.size());
        outcome.values["min_size"] = std::to_string(std::min(a.size(), b.size()));
        outcome.witnesses = {a, b};
    });

    auto* d_family_cmd = construct->add_subcommand(
        "d-family", "k-sets meeting [2r+1] in more than half of it");
    d_family_cmd->add_option("--n", n, "ground set size")->required();
    d_family_cmd->add_option("--k", k, "member set size")->required();
    d_family_cmd->add_option("--r", r, "window parameter")->required();
    d_family_cmd->callback([&] {
        outcome.command = "construct d-family";
        echo_int("n", n);
        echo_int("k", k);
        echo_int("r", r);
        require_enumerable(binom(n, k));
        const Family family = d_family(n, k, r);
        outcome.values["size"] = std::to_string(family.size());
        outcome.values["diversity"] = diversity(family).str();
        outcome.witnesses = {family};
    });

    auto* q_family_cmd = construct->add_subcommand(
        "q-family", "subsets of [2k+1] of size at least k+1");
    q_family_cmd->add_option("--k", k, "half of the ground set size minus one")->required();
    q_family_cmd->callback([&] {
        outcome.command = "construct q-family";
        echo_int("k", k);
        if (k > 9) {
            throw resource_error("q-family enumeration limited to k <= 9");
        }
        const Family family = q_family(k);
        outcome.values["size"] = std::to_string(family.size());
        outcome.values["diversity"] = diversity(family).str();
        outcome.values["formula"] = q_diversity_formula(k).str();
        outcome.witnesses = {family};
    });

    auto* g_lift_cmd = construct->add_subcommand(
        "g-lift", "lift of the 10-triple window family through its upward closure");
    g_lift_cmd->add_option("--n", n, "ground set size")->required();
    g_lift_cmd->add_option("--k", k, "member set size")->required();
    g_lift_cmd->callback([&] {
        outcome.command = "construct g-lift";
        echo_int("n", n);
        echo_int("k", k);
        require_enumerable(binom(n, k));
        const Family closure = upward_closure(g_base(), 6);
        const Family lifted = lift_family(closure, 6, n, k);
        outcome.values["window_size"] = std::to_string(closure.size());
        outcome.values["size"] = std::to_string(lifted.size());
        outcome.values["diversity"] = diversity(lifted).str();
        outcome.witnesses = {lifted};
    });

    auto* verify = app.add_subcommand("verify", "check properties of input families");
    verify->require_subcommand(1);

    auto* verify_cross = verify->add_subcommand("cross", "every member of A meets every member of B");
    verify_cross->add_option("--n", n, "ground set size")->required();
    verify_cross->add_option("--family-file", family_files, "two family files")
        ->required()
        ->expected(2);
    verify_cross->callback([&] {
        outcome.command = "verify cross";
        echo_int("n", n);
        echo_files();
        const Family a = read_family_file(family_files[0], n);
        const Family b = read_family_file(family_files[1], n);
        outcome.values["a_size"] = std::to_string(a.size());
        outcome.values["b_size"] = std::to_string(b.size());
        outcome.status = are_cross_intersecting(a, b) ? "verified" : "refuted";
    });

    auto* verify_disjoint =
        verify->add_subcommand("disjoint", "no member set appears in both families");
    verify_disjoint->add_option("--n", n, "ground set size")->required();
    verify_disjoint->add_option("--family-file", family_files, "two family files")
        ->required()
        ->expected(2);
    verify_disjoint->callback([&] {
        outcome.command = "verify disjoint";
        echo_int("n", n);
        echo_files();
        const Family a = read_family_file(family_files[0], n);
        const Family b = read_family_file(family_files[1], n);
        outcome.values["a_size"] = std::to_string(a.size());
        outcome.values["b_size"] = std::to_string(b.size());
        outcome.status = are_disjoint_families(a, b) ? "verified" : "refuted";
    });

    auto* verify_intersecting =
        verify->add_subcommand("intersecting", "every two members share an element");
    verify_intersecting->add_option("--n", n, "ground set size")->required();
    verify_intersecting->add_option("--family-file", family_files, "one family file")
        ->required()
        ->expected(1);
    verify_intersecting->callback([&] {
        outcome.command = "verify intersecting";
        echo_int("n", n);
        echo_files();
        const Family family = read_family_file(family_files[0], n);
        outcome.values["size"] = std::to_string(family.size());
        outcome.status = is_intersecting(family) ? "verified" : "refuted";
    });

    auto* verify_shift = verify->add_subcommand(
        "shift-window",
        "compress the pair, then check cross-intersection inside the initial window");
    verify_shift->add_option("--n", n, "ground set size")->required();
    verify_shift->add_option("--family-file", family_files, "two family files")
        ->required()
        ->expected(2);
    auto* window_opt =
        verify_shift->add_option("--t", t, "window size (default: max |a| + max |b|, clamped to n)");
    verify_shift->callback([&] {
        outcome.command = "verify shift-window";
        const Family a = read_family_file(family_files[0], n);
        const Family b = read_family_file(family_files[1], n);
        int window = t;
        if (window_opt->count() == 0) {
            int max_a = 0;
            int max_b = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                max_a = std::max(max_a, a.member(i).cardinality());
            }
            for (std::size_t i = 0; i < b.size(); ++i) {
                max_b = std::max(max_b, b.member(i).cardinality());
            }
            window = std::min(n, max_a + max_b);
        }
        echo_int("n", n);
        echo_int("t", window);
        echo_files();
        const auto [ca, cb] = compress_pair(a, b);
        outcome.values["a_size"] = std::to_string(ca.size());
        outcome.values["b_size"] = std::to_string(cb.size());
        outcome.values["window_t"] = std::to_string(window);
        outcome.status = window_intersection_check(ca, cb, window) ? "verified" : "refuted";
        outcome.witnesses = {ca, cb};
    });

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "disjointness-graph eigenvalues with multiplicities");
    spectrum_cmd->add_option("--n", n, "ground set size")->required();
    spectrum_cmd->add_option("--k", k, "member set size")->required();
    spectrum_cmd->callback([&] {
        outcome.command = "spectrum";
        echo_int("n", n);
        echo_int("k", k);
        const std::vector<SpectrumEntry> entries = kneser_spectrum(n, k);
        std::string listing = "[";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i > 0) {
                listing += ", ";
            }
            listing += entries[i].eigenvalue.str() + ":" + entries[i].multiplicity.str();
        }
        listing += "]";
        outcome.values["eigenvalues"] = listing;
        if (binom(n, k) <= 500) {
            bool all_match = true;
            for (int p = 0; p <= 4 && all_match; ++p) {
                BigCount weighted = 0;
                for (const SpectrumEntry& entry : entries) {
                    BigCount power = 1;
                    for (int step = 0; step < p; ++step) {
                        power *= entry.eigenvalue;
                    }
                    weighted += entry.multiplicity * power;
                }
                all_match = weighted == trace_moment(n, k, p);
            }
            outcome.values["trace_check"] = all_match ? "pass" : "fail";
        } else {
            outcome.values["trace_check"] = "skipped";
        }
    });

    auto* bound = app.add_subcommand("bound", "closed-form bounds and certificates");
    bound->require_subcommand(1);

    auto* thm2_cmd = bound->add_subcommand(
        "thm2", "ratio bound on min size of a disjoint cross-intersecting pair");
    thm2_cmd->add_option("--n", n, "ground set size")->required();
    thm2_cmd->add_option("--k", k, "member set size")->required();
    thm2_cmd->callback([&] {
        outcome.command = "bound thm2";
        echo_int("n", n);
        echo_int("k", k);
        const Theorem2Bound result = theorem2_bound(n, k);
        outcome.values["spectral_form"] = rat_str(result.spectral_form);
        outcome.values["closed_form"] = rat_str(result.closed_form);
    });

    auto* cubic_cmd = bound->add_subcommand(
        "cubic", "k^2-weighted comparison against half the star size");
    cubic_cmd->add_option("--n", n, "ground set size")->required();
    cubic_cmd->add_option("--k", k, "member set size")->required();
    cubic_cmd->callback([&] {
        outcome.command = "bound cubic";
        echo_int("n", n);
        echo_int("k", k);
        const CubicWarmupBound result = cubic_warmup_bound(n, k);
        outcome.values["bound"] = result.bound.str();
        outcome.values["half_star"] = rat_str(result.half_star);
        outcome.values["holds"] = bool_str(result.holds);
    });

    auto* thm3_cmd = bound->add_subcommand(
        "thm3", "lifted-closure diversity versus binom(n-3,k-2)");
    thm3_cmd->add_option("--n", n, "ground set size")->required();
    thm3_cmd->add_option("--k", k, "member set size")->required();
    thm3_cmd->callback([&] {
        outcome.command = "bound thm3";
        echo_int("n", n);
        echo_int("k", k);
        const Theorem3Certificate cert = theorem3_certificate(n, k);
        outcome.values["diversity_lb"] = cert.diversity_lb.str();
        outcome.values["target"] = cert.target.str();
        outcome.values["beats"] = bool_str(cert.beats);
    });

    auto* asymptotics_cmd = app.add_subcommand("asymptotics", "limit objects and roots");
    asymptotics_cmd->require_subcommand(1);

    auto* roots_cmd = asymptotics_cmd->add_subcommand(
        "roots", "bisection roots of the two cubic balance equations");
    roots_cmd->add_option("--tol", tol, "bisection interval tolerance (default 1e-12)");
    roots_cmd->callback([&] {
        outcome.command = "asymptotics roots";
        outcome.params["tol"] = fmt_double(tol);
        const auto g1 = [](double a) { return f1(a) - a * a * (1.0 - a); };
        const auto g2 = [](double a) { return f2(a) - a * a * (1.0 - a); };
        const double root1 = bisect_root(g1, 0.05, 0.9, tol);
        const double root2 = bisect_root(g2, 0.05, 0.9, tol);
        outcome.values["f1_root"] = fmt_double(root1);
        outcome.values["f1_reference"] = fmt_double(2.0 - std::sqrt(3.0));
        outcome.values["f2_root"] = fmt_double(root2);
        outcome.values["f2_reference"] = fmt_double((9.0 - std::sqrt(57.0)) / 12.0);
    });

    auto* limits_cmd = asymptotics_cmd->add_subcommand(
        "limits", "limits of the two threshold-family density ratios");
    limits_cmd->add_option("--alpha", alpha, "limit of k/n, in (0, 1/2)")->required();
    limits_cmd->add_option("--t", t, "window size minus one")->required();
    limits_cmd->callback([&] {
        outcome.command = "asymptotics limits";
        outcome.params["alpha"] = fmt_double(alpha);
        echo_int("t", t);
        const auto [a_limit, b_limit] = threshold_limits(alpha, t);
        outcome.values["a_limit"] = fmt_double(a_limit);
        outcome.values["b_limit"] = fmt_double(b_limit);
    });

    auto* search_cmd = app.add_subcommand("search", "exhaustive engines");
    search_cmd->require_subcommand(1);

    auto* maxmin_cmd = search_cmd->add_subcommand(
        "maxmin", "maximize min(|A|,|B|) over disjoint cross-intersecting pairs");
    maxmin_cmd->add_option("--n", n, "ground set size")->required();
    maxmin_cmd->add_option("--k", k, "member set size")->required();
    maxmin_cmd->add_option("--max-nodes", budget.max_nodes, "node budget");
    maxmin_cmd->add_option("--max-seconds", budget.max_seconds, "time budget");
    maxmin_cmd->add_option("--workers", budget.worker_count, "worker threads");
    maxmin_cmd->callback([&] {
        outcome.command = "search maxmin";
        echo_int("n", n);
        echo_int("k", k);
        outcome.params["max_nodes"] = std::to_string(budget.max_nodes);
        outcome.params["max_seconds"] = std::to_string(budget.max_seconds);
        outcome.params["workers"] = std::to_string(budget.worker_count);
        const SearchReport report = max_min_disjoint_cross(n, k, budget);
        outcome.status = search_status(report.status);
        outcome.values["optimum"] = report.optimum.str();
        outcome.values["nodes_explored"] = std::to_string(report.nodes_explored);
        outcome.witnesses = report.witnesses;
    });

    auto* diversity_cmd = search_cmd->add_subcommand(
        "diversity", "maximize diversity over intersecting families");
    diversity_cmd->add_option("--n", n, "ground set size")->required();
    auto* diversity_k_opt =
        diversity_cmd->add_option("--k", k, "member set size (omit for non-uniform)");
    diversity_cmd->callback([&] {
        outcome.command = "search diversity";
        echo_int("n", n);
        SearchReport report;
        if (diversity_k_opt->count() > 0) {
            echo_int("k", k);
            report = max_diversity_uniform(n, k);
        } else {
            report = max_diversity_nonuniform(n);
        }
        outcome.status = search_status(report.status);
        outcome.values["optimum"] = report.optimum.str();
        outcome.values["nodes_explored"] = std::to_string(report.nodes_explored);
        outcome.witnesses = report.witnesses;
    });

    auto* maximal_cmd = search_cmd->add_subcommand(
        "maximal", "enumerate maximal intersecting families of 2^[n]");
    maximal_cmd->add_option("--n", n, "ground set size")->required();
    maximal_cmd->callback([&] {
        outcome.command = "search maximal";
        echo_int("n", n);
        const std::vector<Family> families = maximal_intersecting_families(n);
        outcome.values["count"] = std::to_string(families.size());
        outcome.witnesses = {families.front()};
    });

    auto* conjecture_cmd = app.add_subcommand("conjecture", "small-ground-set checks");
    conjecture_cmd->require_subcommand(1);

    auto* odd_cmd = conjecture_cmd->add_subcommand(
        "odd", "maximum diversity on [2k+1] against the large-half formula");
    odd_cmd->add_option("--k", k, "half of the ground set size")->required();
    odd_cmd->callback([&] {
        outcome.command = "conjecture odd";
        echo_int("k", k);
        const SearchReport report = check_conjecture_odd(k);
        outcome.status = search_status(report.status);
        outcome.values["max_diversity"] = report.optimum.str();
        outcome.values["formula"] = q_diversity_formula(k).str();
        outcome.witnesses = report.witnesses;
    });

    auto* even_cmd = conjecture_cmd->add_subcommand(
        "even", "maximum diversity on [2k] against the half-binomial formula");
    even_cmd->add_option("--k", k, "half of the ground set size")->required();
    even_cmd->callback([&] {
        outcome.command = "conjecture even";
        echo_int("k", k);
        const SearchReport report = check_conjecture_even(k);
        outcome.status = search_status(report.status);
        outcome.values["max_diversity"] = report.optimum.str();
        outcome.values["formula"] = even_diversity_formula(k).str();
        outcome.witnesses = report.witnesses;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("setfam");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }

    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&started] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return RunResult{0, app.help(), ""};
    } catch (const CLI::CallForAllHelp&) {
        return RunResult{0, app.help("", CLI::AppFormatMode::All), ""};
    } catch (const CLI::ParseError& error) {
        Outcome failed;
        failed.command = outcome.command;
        failed.status = "error";
        return finish(failed, elapsed(), std::string("usage error: ") + error.what() + "\n");
    } catch (const resource_error& error) {
        outcome.status = "error";
        outcome.values = ordered_json::object();
        outcome.witnesses.clear();
        return finish(outcome, elapsed(), std::string("resource limit: ") + error.what() + "\n");
    } catch (const std::exception& error) {
        outcome.status = "error";
        outcome.values = ordered_json::object();
        outcome.witnesses.clear();
        return finish(outcome, elapsed(), std::string("error: ") + error.what() + "\n");
    }

    return finish(outcome, elapsed(), "");
}

}  // namespace setfam::cli
