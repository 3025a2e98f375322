#include "generators.hpp"

#include "qgreedy/errors.hpp"
#include "qgreedy/scan.hpp"
#include "qgreedy/serialize.hpp"

#include <doctest.h>

#include <fstream>
#include <iterator>

using namespace qgreedy;
using qgreedy::testing::v;

namespace {

// Re-serializing a parsed document reproduces it byte for byte.
template <class Parse>
void check_reserialization(const Json& j, Parse parse) {
    const std::string text = j.dump();
    CHECK(to_json(parse(Json::parse(text))).dump() == text);
}

} // namespace

TEST_CASE("Laurent polynomial JSON") {
    const LaurentV f = v(2) - 1 + v(-2);
    CHECK(to_json(f).dump() == R"({"terms":[[-2,"1"],[0,"-1"],[2,"1"]]})");
    CHECK(laurent_from_json(to_json(f)) == f);
    const LaurentV big = LaurentV(Integer("123456789012345678901234567890")) * v(-3);
    CHECK(laurent_from_json(to_json(big)) == big);
    CHECK(to_json(LaurentV{}).dump() == R"({"terms":[]})");
}

TEST_CASE("round trips of random values") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentV f = qgreedy::testing::random_laurent(rng);
        CHECK(laurent_from_json(to_json(f)) == f);
        check_reserialization(to_json(f), laurent_from_json);
        const TorusElement t = qgreedy::testing::random_torus(rng);
        CHECK(torus_from_json(to_json(t)) == t);
        check_reserialization(to_json(t), torus_from_json);
    }
    for (auto [b, c] : {std::pair{1, 1}, {2, 3}})
        for (int a1 = -2; a1 <= 4; ++a1)
            for (int a2 = -2; a2 <= 4; ++a2) {
                const PointedElement x = quantum_greedy(b, c, a1, a2);
                CHECK(pointed_from_json(to_json(x)) == x);
                check_reserialization(to_json(x), pointed_from_json);
            }
}

TEST_CASE("pointed element JSON layout") {
    const Json j = to_json(quantum_greedy(2, 3, 3, 4));
    CHECK(j["b"] == 2);
    CHECK(j["c"] == 3);
    CHECK(j["a"] == Json::array({3, 4}));
    bool found = false;
    for (const Json& entry : j["grid"])
        if (entry[0] == 2 && entry[1] == 1) {
            found = true;
            CHECK(laurent_from_json(entry[2]) == v(2) - 1 + v(-2));
        }
    CHECK(found);
}

TEST_CASE("basis expansion JSON") {
    BasesContext ctx(2, 3);
    const BasisExpansion& q = ctx.q_table({3, 4});
    const BasisExpansion back = basis_expansion_from_json(to_json(q));
    CHECK(back.target == BasisTag::Standard);
    CHECK(back.pointing == q.pointing);
    CHECK(back.coeffs == q.coeffs);
    check_reserialization(to_json(q), basis_expansion_from_json);
    const BasisExpansion& r = ctx.r_table({2, 2});
    CHECK(basis_expansion_from_json(to_json(r)).target == BasisTag::Greedy);
    check_reserialization(to_json(r), basis_expansion_from_json);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"terms":[[0,1]]})")), InvalidArgument);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"terms":[[0,"1x"]]})")), InvalidArgument);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"terms":[[0.5,"1"]]})")), InvalidArgument);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"term":[]})")), InvalidArgument);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"([1,2])")), InvalidArgument);
    CHECK_THROWS_AS(torus_from_json(Json::parse(R"({"terms":[[0,{"terms":[]}]]})")), InvalidArgument);
    CHECK_THROWS_AS(pointed_from_json(Json::parse(R"({"b":2,"c":3,"a":[1],"grid":[]})")), InvalidArgument);
    // The corner coefficient must be 1.
    CHECK_THROWS_AS(pointed_from_json(Json::parse(R"({"b":2,"c":3,"a":[1,1],"grid":[]})")), InvalidArgument);
    CHECK_THROWS_AS(basis_expansion_from_json(Json::parse(R"({"target":"other","pointing":[0,0],"coeffs":[]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(scan_report_from_json(Json::parse(R"({"b":1})")), InvalidArgument);
}

TEST_CASE("CLI JSON fixtures re-serialize byte for byte") {
    auto read = [](const std::string& name) {
        std::ifstream in(std::string(QGREEDY_GOLDEN_DIR) + "/" + name);
        REQUIRE(in);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        REQUIRE(!text.empty());
        REQUIRE(text.back() == '\n');
        text.pop_back();
        return text;
    };
    for (const char* name : {"greedy_2_3_3_4.json", "greedy_2_3_m2_m5.json"}) {
        const std::string text = read(name);
        CHECK(to_json(pointed_from_json(Json::parse(text))).dump() == text);
    }
    {
        const std::string text = read("cluster_var_2_3_4.json");
        CHECK(to_json(torus_from_json(Json::parse(text))).dump() == text);
    }
    {
        const std::string text = read("expand_triangular_2_2_2_2.json");
        CHECK(to_json(basis_expansion_from_json(Json::parse(text))).dump() == text);
    }
    {
        const std::string text = read("scan_2_3_4.json");
        CHECK(to_json(scan_report_from_json(Json::parse(text))).dump() == text);
    }
}
