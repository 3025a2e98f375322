// qgreedy: command-line front end for the rank 2 quantum greedy and triangular bases.

#include "qgreedy/bases.hpp"
#include "qgreedy/errors.hpp"
#include "qgreedy/scan.hpp"
#include "qgreedy/serialize.hpp"
#include "qgreedy/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace qgreedy;

enum class Format { Text, Json, Latex };

// Exit statuses.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int b = 1;
    int c = 1;
    std::vector<int> a;
    int m = 1;
    Format format = Format::Text;
    int bound = 0;
    std::vector<std::string> checks;
    int cluster_range = 0;
    unsigned threads = 0;
    std::string cache_dir;
    std::string basis = "greedy";
    std::string suite;
    std::string cache_action;
};

IndexVector pointing(const Options& o) { return {o.a.at(0), o.a.at(1)}; }

std::string index_str(IndexVector a) { return "[" + std::to_string(a.a1) + "," + std::to_string(a.a2) + "]"; }

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) return all_checks();
    std::vector<Check> out;
    for (const std::string& list : names) {
        std::stringstream ss(list);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto check = parse_check(name);
            if (!check) throw UsageError("--checks: unknown check \"" + name + "\"");
            out.push_back(*check);
        }
    }
    return out;
}

void print_json(const Json& j) { std::cout << j.dump() << '\n'; }

void reject_latex(const Options& o, const std::string& verb) {
    if (o.format == Format::Latex) throw UsageError("--format latex is not available for " + verb);
}

void print_torus(const Options& o, const std::string& label, const TorusElement& f) {
    switch (o.format) {
    case Format::Json: print_json(to_json(f)); break;
    case Format::Latex: std::cout << label << " = " << to_latex(f) << '\n'; break;
    case Format::Text: std::cout << label << " = " << to_string(f) << '\n'; break;
    }
}

void print_pointed(const Options& o, const PointedElement& x) {
    if (o.format == Format::Json) return print_json(to_json(x));
    const std::string label = "X" + index_str({x.a1(), x.a2()});
    if (o.format == Format::Latex) {
        std::cout << "% " << label << " for (b,c) = (" << x.b() << "," << x.c() << ")\n";
        for (const auto& [pt, coeff] : x.grid())
            std::cout << "e(" << pt.p << "," << pt.q << ") &= " << to_latex(coeff) << "\\\\\n";
        return;
    }
    std::cout << label << " for (b,c) = (" << x.b() << "," << x.c() << "), pointed at (" << x.a1() << "," << x.a2()
              << ")\n";
    for (const auto& [pt, coeff] : x.grid())
        std::cout << "  e(" << pt.p << "," << pt.q << ") = " << to_string(coeff) << '\n';
}

void print_expansion(const Options& o, const BasisExpansion& e) {
    if (o.format == Format::Json) return print_json(to_json(e));
    const std::string basis = e.target == BasisTag::Standard ? "M" : "X";
    const std::string head = (e.target == BasisTag::Standard ? "X" : "C") + index_str(e.pointing);
    std::cout << head << " = sum over " << e.coeffs.size() << " term(s) in the " << to_string(e.target) << " basis\n";
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) {
        const std::string coeff = o.format == Format::Latex ? to_latex(it->second) : to_string(it->second);
        std::cout << "  " << basis << index_str(it->first) << ": " << coeff << '\n';
    }
}

std::string witness_str(const Json& w) { return w.empty() ? "" : " " + w.dump(); }

int print_entries(const Options& o, const std::vector<ScanEntry>& entries) {
    bool ok = true;
    for (const ScanEntry& e : entries) {
        ok = ok && e.pass;
        if (o.format == Format::Text)
            std::cout << (e.pass ? "PASS " : "FAIL ") << index_str(e.a) << ' ' << to_string(e.check)
                      << witness_str(e.pass ? Json::object() : e.witness) << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

int run_check(const Options& o, ClusterCache& cache) {
    reject_latex(o, "check");
    ScanOptions so{o.b, o.c, 0, parse_checks(o.checks), o.cluster_range, 1};
    const std::vector<ScanEntry> entries = run_checks(so, pointing(o), cache);
    if (o.format == Format::Json) {
        ScanReport r{o.b, o.c, 0, so.checks, entries, {}};
        Json j = to_json(r)["results"];
        print_json(j);
    }
    return print_entries(o, entries);
}

int run_scan(const Options& o, ClusterCache& cache) {
    reject_latex(o, "scan");
    ScanOptions so{o.b, o.c, o.bound, parse_checks(o.checks), o.cluster_range, o.threads};
    const ScanReport report = scan(so, cache);
    if (o.format == Format::Json) {
        print_json(to_json(report));
        return report.all_pass() ? kOk : kCheckFailed;
    }
    std::cout << "scan (b,c) = (" << o.b << "," << o.c << "), 0 <= a1, a2 <= " << o.bound << ", clusters";
    for (int m : report.clusters_covered) std::cout << ' ' << m;
    std::cout << '\n';
    for (Check check : report.checks) {
        std::size_t total = 0;
        for (const ScanEntry& e : report.results) total += e.check == check;
        const auto failures = report.failures(check);
        std::cout << to_string(check) << ": " << failures.size() << " failure(s) in " << total << " cell(s)\n";
    }
    for (const ScanEntry& e : report.results)
        if (!e.pass) std::cout << "  FAIL " << index_str(e.a) << ' ' << to_string(e.check) << witness_str(e.witness) << '\n';
    return report.all_pass() ? kOk : kCheckFailed;
}

int run_verify(const Options& o, ClusterCache& cache) {
    reject_latex(o, "verify");
    const VerifyResult result = verify(o.suite, cache, o.threads);
    if (o.format == Format::Json) {
        print_json(to_json(result));
    } else {
        for (const VerifyItem& item : result.items) {
            const char* tag = item.evidence ? "INFO " : item.pass ? "PASS " : "FAIL ";
            std::cout << tag << item.name << (item.pass && !item.evidence ? "" : witness_str(item.witness)) << '\n';
        }
        std::cout << result.suite << ": " << (result.pass() ? "passed" : "FAILED") << '\n';
    }
    if (const VerifyItem* failure = result.first_failure()) {
        std::cerr << "first failure: " << failure->name << witness_str(failure->witness) << '\n';
        return kCheckFailed;
    }
    return kOk;
}

int run_cache(const Options& o, ClusterCache& cache) {
    reject_latex(o, "cache");
    if (!cache.directory()) throw UsageError("cache: no cache directory (use --cache-dir or QGREEDY_CACHE_DIR)");
    if (o.cache_action == "clear") cache.clear();
    const std::size_t entries = cache.size();
    if (o.format == Format::Json)
        print_json(Json{{"directory", cache.directory()->string()}, {"entries", entries}});
    else
        std::cout << "cache " << cache.directory()->string() << ": " << entries << " entries\n";
    return kOk;
}

std::unique_ptr<ClusterCache> open_cache(const Options& o) {
    std::string dir = o.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("QGREEDY_CACHE_DIR")) dir = env;
    if (dir.empty()) return nullptr;
    return std::make_unique<ClusterCache>(dir);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Rank 2 quantum greedy bases, triangular bases and cluster variables"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
    app.add_option("--format", o.format, "Output format: text, json or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--cache-dir", o.cache_dir, "Directory of the on-disk cluster-variable cache")
        ->envname("QGREEDY_CACHE_DIR");
    app.add_option("--threads", o.threads, "Worker threads for scans (default: available cores)");

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("-b", o.b, "Exchange exponent b")->required()->check(CLI::PositiveNumber);
        sub->add_option("-c", o.c, "Exchange exponent c")->required()->check(CLI::PositiveNumber);
    };
    auto add_pointing = [&](CLI::App* sub) {
        sub->add_option("-a", o.a, "Pointing vector a1 a2")->required()->expected(2)->allow_extra_args(false);
    };
    auto add_checks = [&](CLI::App* sub) {
        sub->add_option("--checks", o.checks, "Comma-separated checks (default: all)")->delimiter(',');
        sub->add_option("--cluster-range", o.cluster_range, "Also check positivity in clusters |m| <= N")
            ->check(CLI::NonNegativeNumber);
    };

    auto* greedy = app.add_subcommand("greedy", "Quantum greedy element X[a1,a2]");
    add_params(greedy);
    add_pointing(greedy);

    auto* cluster_var = app.add_subcommand("cluster-var", "Cluster variable X_m in the initial cluster");
    add_params(cluster_var);
    cluster_var->add_option("-m", o.m, "Cluster index m")->required();

    auto* standard = app.add_subcommand("standard", "Standard monomial M[a1,a2]");
    add_params(standard);
    add_pointing(standard);

    auto* triangular = app.add_subcommand("triangular", "Triangular basis element C[a1,a2]");
    add_params(triangular);
    add_pointing(triangular);

    auto* expand = app.add_subcommand("expand", "Expand X[a1,a2] in standard monomials or C[a1,a2] in greedy elements");
    add_params(expand);
    add_pointing(expand);
    expand->add_option("--basis", o.basis, "greedy (q-coefficients) or triangular (r-coefficients)")
        ->check(CLI::IsMember({"greedy", "triangular"}));

    auto* check = app.add_subcommand("check", "Run checks on one pointing vector");
    add_params(check);
    add_pointing(check);
    add_checks(check);

    auto* scan_cmd = app.add_subcommand("scan", "Run checks on 0 <= a1, a2 <= bound");
    add_params(scan_cmd);
    add_checks(scan_cmd);
    scan_cmd->add_option("--bound", o.bound, "Largest a1 and a2")->required()->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));

    auto* cache_cmd = app.add_subcommand("cache", "Administer the cluster-variable cache");
    cache_cmd->add_option("action", o.cache_action, "clear or stats")->required()->check(CLI::IsMember({"clear", "stats"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        std::unique_ptr<ClusterCache> owned = open_cache(o);
        ClusterCache& cache = owned ? *owned : ClusterCache::process_default();
        const auto* sub = app.get_subcommands().front();
        const std::string verb = sub->get_name();
        if (verb == "greedy") {
            print_pointed(o, quantum_greedy(o.b, o.c, o.a[0], o.a[1]));
        } else if (verb == "cluster-var") {
            print_torus(o, "X_" + std::to_string(o.m), cluster_variable(o.b, o.c, o.m, cache));
        } else if (verb == "standard") {
            print_torus(o, "M" + index_str(pointing(o)), standard_monomial(o.b, o.c, o.a[0], o.a[1], cache));
        } else if (verb == "triangular") {
            BasesContext ctx(o.b, o.c, cache);
            print_torus(o, "C" + index_str(pointing(o)), ctx.triangular(pointing(o)));
        } else if (verb == "expand") {
            BasesContext ctx(o.b, o.c, cache);
            print_expansion(o, o.basis == "greedy" ? ctx.q_table(pointing(o)) : ctx.r_table(pointing(o)));
        } else if (verb == "check") {
            return run_check(o, cache);
        } else if (verb == "scan") {
            return run_scan(o, cache);
        } else if (verb == "verify") {
            return run_verify(o, cache);
        } else if (verb == "cache") {
            return run_cache(o, cache);
        }
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
}
