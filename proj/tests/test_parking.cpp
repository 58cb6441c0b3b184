#include <doctest.h>

#include "fixtures.hpp"
#include "omstat/parking.hpp"
#include "oracles.hpp"

#include <set>

using namespace omstat;

namespace {

ParkingFunction pf(std::vector<int> cols, std::vector<int> labels) { return {DyckPath{std::move(cols)}, std::move(labels)}; }

}  // namespace

TEST_CASE("golden parking function")
{
    auto j = load_fixture("golden_pf.json");
    auto p = pf(j["cols"].get<std::vector<int>>(), j["labels"].get<std::vector<int>>());
    CHECK(is_valid_pf(p));
    CHECK(area(p) == j["area"].get<long>());
    CHECK(dinv(p) == j["dinv"].get<long>());
    CHECK(dinv_vector(p) == j["dinv_vector"].get<std::vector<int>>());
}

TEST_CASE("rise and valley sets")
{
    auto p = pf({0, 0, 0, 1, 1, 3, 4}, {2, 3, 4, 2, 5, 1, 3});
    CHECK(area_vector(p) == std::vector<int>{0, 1, 2, 2, 3, 2, 2});
    CHECK(rise_set(p) == std::set<int>{2, 3, 5});
    CHECK(val_set(p) == std::set<int>{6, 7});
    CHECK(valley_set(p) == std::set<int>{6});
    CHECK(blank_eligible_rows(p) == std::set<int>{4, 6, 7});
}

TEST_CASE("residual statistics reject foreign marks")
{
    auto p = pf({0, 0, 0, 1, 1, 3, 4}, {2, 3, 4, 2, 5, 1, 3});
    CHECK(area_minus(p, {2, 5}) == area(p) - 1 - 3);
    CHECK_THROWS_AS(area_minus(p, {4}), std::invalid_argument);
    CHECK(dinv_minus(p, {6, 7}) == dinv(p) - 2 - dinv_vector(p)[5] - dinv_vector(p)[6]);
    CHECK_THROWS_AS(dinv_minus(p, {2}), std::invalid_argument);
}

TEST_CASE("validity")
{
    CHECK_FALSE(DyckPath{{0, 2}}.valid());
    CHECK_FALSE(is_valid_pf(pf({0, 0}, {2, 1})));
    CHECK(is_valid_pf(pf({0, 1}, {1, 0})));
    CHECK_FALSE(is_valid_pf(pf({0, 0}, {1, 0})));
    CHECK_FALSE(is_valid_pf(pf({0, 1}, {0, 1})));
    CHECK(is_valid_pf(pf({0, 1}, {0, 1}), true));
}

TEST_CASE("enumeration matches the brute-force tuple oracle")
{
    for (int r = 0; r <= 2; ++r)
        for (int n = 1; n + r <= 5; ++n)
            for (const auto& beta : strong_compositions(n)) {
                std::set<std::pair<std::vector<int>, std::vector<int>>> mine, theirs;
                for_each_pf(Content{beta, r}, [&](const ParkingFunction& p) {
                    CHECK(is_valid_pf(p));
                    CHECK(pf_content(p) == Content{beta, r});
                    CHECK(dinv_vector(p) == oracle::dinv_vec({p.path.cols, p.labels}));
                    mine.insert({p.path.cols, p.labels});
                });
                for (const auto& o : oracle::pfs(r, beta.parts())) theirs.insert({o.cols, o.labels});
                CHECK(mine == theirs);
            }
}

TEST_CASE("Dyck path counts are Catalan")
{
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        int c = 0;
        for_each_dyck_path(n, [&](const DyckPath& d) {
            CHECK(d.valid());
            ++c;
        });
        CHECK(c == catalan[n]);
    }
}

TEST_CASE("locked parking function counts")
{
    for (const auto& e : load_fixture("locked_polynomials.json")["pf_counts"]) {
        Composition beta(e["beta"].get<std::vector<int>>());
        int r = e["r"];
        std::size_t count = e["count"];
        CHECK(oracle::pfs(r, beta.parts()).size() == count);
        std::size_t mine = 0;
        for_each_pf(Content{beta, r}, [&](const ParkingFunction&) { ++mine; });
        CHECK(mine == count);
    }
}

TEST_CASE("locked generating functions")
{
    for (const auto& e : load_fixture("locked_polynomials.json")["gf"]) {
        Composition beta(e["beta"].get<std::vector<int>>());
        int n = e["n"], k = e["k"], r = e["r"];
        bool rise = e["version"] == "rise";
        auto want = e["poly"].get<std::string>();
        auto oracle_poly = rise ? oracle::rise_gf(r, beta.parts(), n - k - 1) : oracle::val_gf(r, beta.parts(), n - k - 1);
        CHECK(oracle_poly.to_string() == want);
        CHECK((rise ? rise_gf(n, k, r, beta) : val_gf(n, k, r, beta)).to_string() == want);
    }
}

TEST_CASE("generating functions agree with the oracle on small contents")
{
    for (int r = 0; r <= 2; ++r)
        for (int n = 1; n + r <= 5; ++n)
            for (const auto& beta : strong_compositions(n))
                for (int k = 0; k < n; ++k) {
                    CHECK(rise_gf(n, k, r, beta) == oracle::rise_gf(r, beta.parts(), n - k - 1));
                    CHECK(val_gf(n, k, r, beta) == oracle::val_gf(r, beta.parts(), n - k - 1));
                }
}

TEST_CASE("generating function argument checks")
{
    CHECK(val_gf(1, 0, 0, Composition{1}).to_string() == "1");
    CHECK_THROWS(rise_gf(2, 2, 0, Composition{1, 1}));
    CHECK_THROWS(rise_gf(3, 1, 0, Composition{1, 1}));
}

TEST_CASE("decorations")
{
    auto p = pf({0, 0, 0, 1, 1, 3, 4}, {2, 3, 4, 2, 5, 1, 3});
    CHECK(enumerate_decorations(p, DecorationKind::rise, 2).size() == 3);
    CHECK(enumerate_decorations(p, DecorationKind::valley, 1).size() == 2);
}

TEST_CASE("json round trip")
{
    DecoratedParkingFunction d{pf({0, 1, 1}, {1, 2, 3}), DecorationKind::valley, {3}};
    auto j = to_json(d);
    CHECK(j["kind"] == "valley");
    CHECK(decorated_from_json(j) == d);
    j["kind"] = "other";
    CHECK_THROWS_AS(decorated_from_json(j), std::invalid_argument);
}
