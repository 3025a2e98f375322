#include "qgreedy/errors.hpp"
#include "qgreedy/scan.hpp"
#include "qgreedy/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

using namespace qgreedy;
namespace fs = std::filesystem;

namespace {

ScanOptions positivity(int b, int c, int bound) {
    ScanOptions o;
    o.b = b;
    o.c = c;
    o.bound = bound;
    o.checks = {Check::GreedyPositivity};
    return o;
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("qgreedy-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("check names") {
    for (Check check : all_checks()) CHECK(parse_check(to_string(check)) == check);
    CHECK(to_string(Check::GreedyPositivity) == "greedy-positivity");
    CHECK_FALSE(parse_check("positivity").has_value());
}

TEST_CASE("bound zero covers only the origin") {
    ScanOptions o = positivity(2, 3, 0);
    o.checks = all_checks();
    const ScanReport r = scan(o);
    REQUIRE(r.results.size() == all_checks().size());
    for (const ScanEntry& e : r.results) CHECK(e.a == IndexVector{0, 0});
    CHECK(r.all_pass());
}

TEST_CASE("positivity scans") {
    SUBCASE("(3,3) has no failures up to 8") {
        const ScanReport r = scan(positivity(3, 3, 8));
        CHECK(r.results.size() == 81);
        CHECK(r.all_pass());
    }
    SUBCASE("(2,3) failures up to 8") {
        const ScanReport r = scan(positivity(2, 3, 8));
        const std::vector<IndexVector> expected{{3, 4}, {3, 5}, {5, 4}, {5, 7}, {5, 8}, {7, 5}};
        CHECK(r.failures(Check::GreedyPositivity) == expected);
        for (const ScanEntry& e : r.results)
            if (!e.pass) {
                CHECK(e.witness["cluster"] == 1);
                CHECK(e.witness.contains("coefficient"));
            }
    }
}

TEST_CASE("reports are sorted and independent of the thread count") {
    ScanOptions o = positivity(2, 3, 5);
    o.checks = {Check::Support, Check::GreedyPositivity, Check::Divisibility};
    o.threads = 1;
    const ScanReport serial = scan(o);
    o.threads = 4;
    const ScanReport parallel = scan(o);
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
    CHECK(std::is_sorted(serial.results.begin(), serial.results.end(),
                         [](const ScanEntry& x, const ScanEntry& y) { return x.a < y.a; }));
    CHECK(serial.results[0].check == Check::Support);
    CHECK(serial.results[1].check == Check::GreedyPositivity);
}

TEST_CASE("cluster range") {
    ScanOptions o = positivity(1, 1, 3);
    o.cluster_range = 2;
    const ScanReport r = scan(o);
    CHECK(r.clusters_covered == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(r.all_pass());
    // X[3,4] for (2,3) is already negative in the initial cluster.
    o = positivity(2, 3, 0);
    o.cluster_range = 3;
    const auto entries = run_checks(o, {3, 4});
    REQUIRE(entries.size() == 1);
    CHECK_FALSE(entries[0].pass);
}

TEST_CASE("scan report JSON") {
    ScanOptions o = positivity(2, 3, 4);
    o.checks = all_checks();
    const ScanReport r = scan(o);
    const std::string text = to_json(r).dump();
    const ScanReport back = scan_report_from_json(Json::parse(text));
    CHECK(to_json(back).dump() == text);
    CHECK(back.failures(Check::GreedyPositivity) == r.failures(Check::GreedyPositivity));
}

TEST_CASE("imaginary-only checks are marked not applicable") {
    ScanOptions o = positivity(2, 3, 0);
    o.checks = {Check::Support, Check::Divisibility};
    for (const ScanEntry& e : run_checks(o, {1, 0})) {
        CHECK(e.pass);
        CHECK(e.witness["applicable"] == false);
    }
}

TEST_CASE("verify suites") {
    CHECK_THROWS_AS((void)verify("nonsense"), InvalidArgument);
    const VerifyResult r = verify("paper-examples");
    CHECK(r.pass());
    CHECK(r.first_failure() == nullptr);
    const Json j = to_json(r);
    CHECK(j["suite"] == "paper-examples");
    CHECK(j["pass"] == true);
    CHECK(verify("finite-type").pass());
}

TEST_CASE("verify axioms detects a corrupted cache") {
    TempDir dir;
    SUBCASE("wrong but well-formed entry") {
        {
            ClusterCache cache(dir.path);
            (void)cluster_variable(2, 3, 3, cache);
        }
        // Replace X_3 by X_3 + 1.
        ClusterCache writer(dir.path);
        writer.store(2, 3, 3, cluster_variable(2, 3, 3, writer) + TorusElement(1));
        ClusterCache cache(dir.path);
        const VerifyResult r = verify("axioms", cache, 1);
        CHECK_FALSE(r.pass());
        REQUIRE(r.first_failure() != nullptr);
        CHECK_FALSE(r.first_failure()->witness.empty());
    }
    SUBCASE("unparseable entry") {
        ClusterCache cache(dir.path);
        const fs::path entry = cache.entry_path(2, 3, 2);
        fs::create_directories(entry.parent_path());
        std::ofstream(entry) << "{not json";
        const VerifyResult r = verify("axioms", cache, 1);
        CHECK_FALSE(r.pass());
        REQUIRE(r.first_failure() != nullptr);
        CHECK(r.first_failure()->witness.dump().find("corrupted") != std::string::npos);
    }
}
