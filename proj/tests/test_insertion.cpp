#include <doctest.h>

#include "fixtures.hpp"
#include "omstat/insertion.hpp"
#include "omstat/statistics.hpp"

#include <set>

using namespace omstat;

namespace {

InsertionInput example_input(const nlohmann::json& j)
{
    return InsertionInput{parse_omp(j.at("pi").get<std::string>()), j.at("U").get<std::vector<int>>(),
                          j.at("B").get<std::vector<int>>()};
}

}  // namespace

TEST_CASE("worked examples")
{
    auto j = load_fixture("insertion_examples.json");
    auto in = example_input(j);
    int r = j.at("r");
    Composition beta(j.at("beta").get<std::vector<int>>());
    int k = j.at("k");
    Content c{beta, r};

    CHECK(serialize(phi_maj(in, r, beta, k)) == j["reference"]["phi-maj"].get<std::string>());
    CHECK(serialize(phi_dinv(in, r, beta, k)) == j["reference"]["phi-dinv"].get<std::string>());

    // The reference phi-inv image drops a zero and lies outside the target set.
    auto ref = parse_omp(j["reference"]["phi-inv"].get<std::string>());
    CHECK_FALSE(validate(ref, c, k, true));
    auto got = phi_inv(in, r, beta, k);
    CHECK(validate(got, c, k, true));
    CHECK(serialize(got) == "4/2,3,4/0,1,2,3/0,1,2,4/4");
    int differing = 0;
    for (int i = 0; i < k; ++i)
        if (got.block(i) != ref.block(i)) {
            ++differing;
            auto e = got.block(i).elements();
            e.erase(e.begin());
            CHECK(e == ref.block(i).elements());
        }
    CHECK(differing == 1);
}

TEST_CASE("domain violations are rejected")
{
    Composition beta{1, 1};
    CHECK_THROWS_AS(check_insertion_domain(InsertionInput{parse_omp("1/2"), {5}, {}}, 0, beta, 2), DomainError);
    CHECK_THROWS_AS(phi_inv(InsertionInput{parse_omp("1,2"), {0, 0}, {}}, 0, Composition{1, 2}, 1), DomainError);
}

TEST_CASE("increments and bijectivity on small domains")
{
    using Map = OMP (*)(const InsertionInput&, int, const Composition&, int);
    struct Named {
        Map f;
        long (*stat)(const OMP&);
    };
    const Named maps[] = {{phi_inv, inv}, {phi_maj, maj}, {phi_dinv, dinv}};
    for (int r = 0; r <= 2; ++r)
        for (int n = 1; n + r <= 5; ++n)
            for (const auto& beta : strong_compositions(n))
                for (int k = 1; k <= n + r; ++k) {
                    Content c{beta, r};
                    auto target = enumerate_omps(c, k, true);
                    for (const auto& m : maps) {
                        std::set<OMP> image;
                        std::size_t count = 0;
                        for (int ell = 0; ell <= k; ++ell)
                            for_each_insertion_input(beta, r, k, ell, [&](const InsertionInput& in) {
                                auto out = m.f(in, r, beta, k);
                                CHECK(validate(out, c, k, true));
                                CHECK(m.stat(out) - m.stat(in.pi) == insertion_weight(in));
                                image.insert(out);
                                ++count;
                            });
                        CHECK(image.size() == count);
                        CHECK(image.size() == target.size());
                    }
                }
}
