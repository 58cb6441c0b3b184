#include <doctest.h>

#include "fixtures.hpp"
#include "omstat/bijections.hpp"
#include "omstat/statistics.hpp"

#include <set>

using namespace omstat;

TEST_CASE("golden objects")
{
    struct Golden {
        const char* file;
        DecoratedParkingFunction (*map)(const OMP&);
    };
    for (const Golden& f : {Golden{"gamma_dinv.json", gamma_dinv}, Golden{"gamma_maj.json", gamma_maj}, Golden{"gamma_inv.json", gamma_inv}}) {
        auto j = load_fixture(f.file);
        auto got = f.map(parse_omp(j["input"].get<std::string>()));
        CHECK(to_json(got) == j["object"]);
    }
    auto j7 = load_fixture("gamma_dinv.json");
    CHECK(dinv(decorated_from_json(j7["object"]).pf) == j7["dinv"].get<long>());
    auto j8 = load_fixture("gamma_maj.json");
    auto d8 = decorated_from_json(j8["object"]);
    CHECK(area_minus(d8.pf, d8.marks) == j8["area_minus"].get<long>());
    auto j9 = load_fixture("gamma_inv.json");
    auto d9 = decorated_from_json(j9["object"]);
    CHECK(dinv_minus(d9.pf, d9.marks) == j9["dinv_minus"].get<long>());
}

TEST_CASE("minimaj stages")
{
    auto j = load_fixture("gamma_minimaj.json");
    auto pi = parse_omp(j["input"].get<std::string>());
    auto stages = gamma_minimaj_stages(pi);
    REQUIRE(stages.size() == j["stages"].size());
    for (std::size_t i = 0; i < stages.size(); ++i) CHECK(to_json(stages[i]) == j["stages"][i]);
    CHECK(gamma_minimaj(pi) == stages.back());
    CHECK(area(stages.back().pf) == j["area"].get<long>());
}

TEST_CASE("statistic contracts and injectivity")
{
    for (int r = 0; r <= 2; ++r)
        for (int n = 1; n + r <= 5; ++n)
            for (const auto& beta : strong_compositions(n))
                for (int k = 1; k <= n + r; ++k) {
                    auto key = [](const DecoratedParkingFunction& d) { return std::tuple(d.pf.path.cols, d.pf.labels, d.marks); };
                    std::set<decltype(key(DecoratedParkingFunction{}))> keys[4];
                    std::size_t count = 0;
                    for_each_omp(Content{beta, r}, k, false, [&](const OMP& p) {
                        ++count;
                        auto gd = gamma_dinv(p), gm = gamma_maj(p), gi = gamma_inv(p), gn = gamma_minimaj(p);
                        CHECK(dinv(gd.pf) == dinv(p));
                        CHECK(area_minus(gd.pf, gd.marks) == 0);
                        CHECK(dinv(gm.pf) == 0);
                        CHECK(area_minus(gm.pf, gm.marks) == maj(p));
                        CHECK(area(gi.pf) == 0);
                        CHECK(dinv_minus(gi.pf, gi.marks) == inv(p));
                        CHECK(area(gn.pf) == minimaj(p));
                        CHECK(dinv_minus(gn.pf, gn.marks) == 0);
                        int idx = 0;
                        for (const auto* d : {&gd, &gm, &gi, &gn}) {
                            CHECK(d->pf.labels.front() == p.block(p.k() - 1).min());
                            CHECK(static_cast<int>(d->marks.size()) == n + r - k);
                            CHECK(pf_content(d->pf) == Content{beta, r});
                            CHECK(is_valid_pf(d->pf, true));
                            keys[idx++].insert(key(*d));
                        }
                    });
                    for (const auto& s : keys) CHECK(s.size() == count);
                }
}
