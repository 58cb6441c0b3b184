#include "fixtures.hpp"
#include "omstat/bijections.hpp"
#include "omstat/insertion.hpp"
#include "omstat/parking.hpp"
#include "omstat/qseries.hpp"
#include "omstat/statistics.hpp"
#include "omstat/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace omstat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
};

int g_threads = 0;

SuiteReport suite(const std::string& name, int max_size, int max_r)
{
    SuiteOptions o;
    o.max_size = max_size;
    o.max_r = max_r;
    o.threads = g_threads;
    return run_suite(name, o);
}

std::string counts(const SuiteReport& r)
{
    return r.suite + " " + std::to_string(r.passed) + "/" + std::to_string(r.passed + r.failed);
}

Outcome golden_statistics()
{
    Outcome o;
    auto p = parse_omp("134/268/57");
    o.expect(inv(p) == 4, "inv(134/268/57) = " + std::to_string(inv(p)));
    o.expect(dinv(p) == 4, "dinv(134/268/57) = " + std::to_string(dinv(p)));
    o.expect(maj(p) == 4, "maj(134/268/57) = " + std::to_string(maj(p)));
    o.expect(word_to_string(sigma_word(p)) == "43186275", "sigma = " + word_to_string(sigma_word(p)));
    o.expect(word_to_string(ind_word(p)) == "00011122", "ind = " + word_to_string(ind_word(p)));
    auto mw = word_to_string(miniword(parse_omp("2/34/13/13/2")).word);
    o.expect(mw == "23413312", "miniword = " + mw);
    if (o.pass) o.detail = "inv=dinv=maj=4, sigma 43186275, ind 00011122, miniword 23413312";
    return o;
}

Outcome golden_parking()
{
    Outcome o;
    auto j = load_fixture("golden_pf.json");
    ParkingFunction p{DyckPath{j["cols"].get<std::vector<int>>()}, j["labels"].get<std::vector<int>>()};
    o.expect(area(p) == 13, "area " + std::to_string(area(p)));
    o.expect(dinv(p) == 2, "dinv " + std::to_string(dinv(p)));
    o.expect(dinv_vector(p) == std::vector<int>{0, 0, 0, 1, 1, 0, 0}, "d-vector differs");
    if (o.pass) o.detail = "area 13, dinv 2, d=(0,0,0,1,1,0,0)";
    return o;
}

Outcome insertion_examples()
{
    Outcome o;
    auto j = load_fixture("insertion_examples.json");
    InsertionInput in{parse_omp(j["pi"].get<std::string>()), j["U"].get<std::vector<int>>(), j["B"].get<std::vector<int>>()};
    int r = j["r"], k = j["k"];
    Composition beta(j["beta"].get<std::vector<int>>());
    o.expect(in.pi.k() == j["ell"].get<int>(), "ell mismatch");
    struct M {
        const char* name;
        OMP (*f)(const InsertionInput&, int, const Composition&, int);
    };
    for (const M& m : {M{"phi-inv", phi_inv}, M{"phi-maj", phi_maj}, M{"phi-dinv", phi_dinv}}) {
        auto want = parse_omp(j["reference"][m.name].get<std::string>());
        auto got = m.f(in, r, beta, k);
        std::string why = std::string(m.name) + " gives " + serialize(got) + ", reference " + serialize(want);
        if (!validate(want, Content{beta, r}, k, true)) why += " (reference value is not in the target set)";
        o.expect(got == want, why);
    }
    if (o.pass) o.detail = "all three images match";
    return o;
}

Outcome assertive(const std::vector<SuiteReport>& reps)
{
    Outcome o;
    for (const auto& r : reps) {
        o.expect(r.failed == 0, counts(r));
        if (r.failed == 0) o.detail += (o.detail.empty() ? "" : ", ") + counts(r);
    }
    return o;
}

Outcome bijections()
{
    Outcome o;
    struct F {
        const char* file;
        DecoratedParkingFunction (*map)(const OMP&);
    };
    for (const F& f : {F{"gamma_dinv.json", gamma_dinv}, F{"gamma_maj.json", gamma_maj}, F{"gamma_inv.json", gamma_inv}}) {
        auto j = load_fixture(f.file);
        o.expect(to_json(f.map(parse_omp(j["input"].get<std::string>()))) == j["object"], std::string(f.file) + " differs");
    }
    auto j10 = load_fixture("gamma_minimaj.json");
    auto stages = gamma_minimaj_stages(parse_omp(j10["input"].get<std::string>()));
    bool same = stages.size() == j10["stages"].size();
    for (std::size_t i = 0; same && i < stages.size(); ++i) same = to_json(stages[i]) == j10["stages"][i];
    o.expect(same, "minimaj stages differ");
    auto s = assertive({suite("bijections", 5, 5)});
    o.expect(s.pass, s.detail);
    if (o.pass) o.detail = "golden gamma objects exact, " + s.detail;
    return o;
}

Outcome lemmas()
{
    Outcome o;
    auto rep = suite("lemmas", 6, 6);
    std::map<std::string, std::pair<long, long>> by;  // check -> (passed, failed)
    std::map<int, long> fail_by_r;
    for (const auto& c : rep.cases) {
        auto check = c.key.substr(0, c.key.find(';'));
        (c.pass ? by[check].first : by[check].second)++;
        if (!c.pass) {
            auto p = c.key.find(";r=") + 3;
            fail_by_r[std::stoi(c.key.substr(p))]++;
        }
    }
    std::ostringstream d;
    for (const auto& [name, pf] : by) {
        d << (d.tellp() ? ", " : "") << name << " " << pf.first << "/" << pf.first + pf.second;
        o.pass = o.pass && pf.second == 0;
    }
    if (!fail_by_r.empty()) {
        d << "; failures by r:";
        for (const auto& [r, n] : fail_by_r) d << " r=" << r << ":" << n;
    }
    o.detail = d.str();
    return o;
}

Outcome reports()
{
    Outcome o;
    auto a = suite("rise-val-symmetry", 6, 6), q = suite("qstirling", 7, 0);
    SuiteOptions one;
    one.threads = 1;
    one.max_size = 6;
    one.max_r = 6;
    auto a1 = run_suite("rise-val-symmetry", one);
    one.max_size = 7;
    one.max_r = 0;
    auto q1 = run_suite("qstirling", one);
    o.expect(a.to_json(true).dump() == a1.to_json(true).dump(), "rise-val-symmetry report not byte-stable");
    o.expect(q.to_json(true).dump() == q1.to_json(true).dump(), "qstirling report not byte-stable");
    long plain_fail = 0, scaled_fail = 0, plain = 0;
    for (const auto& c : q.cases) {
        bool scaled = c.key.find("[k]!") != std::string::npos;
        if (!scaled) ++plain;
        (scaled ? scaled_fail : plain_fail) += !c.pass;
    }
    o.expect(a.ok() && q.ok(), "report suite did not complete");
    o.detail += "rise-val-symmetry " + std::to_string(a.passed) + "/" + std::to_string(a.cases.size()) + " equal";
    o.detail += ", D=S holds in " + std::to_string(plain - plain_fail) + "/" + std::to_string(plain);
    o.detail += ", D=[k]!S holds in " + std::to_string(plain - scaled_fail) + "/" + std::to_string(plain);
    o.detail += ", reports byte-stable";
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    app.add_option("--threads", g_threads);
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, 1, golden_statistics},
        {2, 1, golden_parking},
        {3, 1, insertion_examples},
        {4, 300, [] { return assertive({suite("insertion", 6, 2)}); }},
        {5, 300, bijections},
        {6, 600, [] { return assertive({suite("combor", 7, 7)}); }},
        {7, 600, [] { return assertive({suite("equidistribution", 7, 2)}); }},
        {8, 300,
         [] {
             return assertive({suite("recursion-shape", 6, 6), suite("recursion-inv", 6, 6), suite("recursion-minimaj", 6, 6),
                               suite("mahonian", 6, 6)});
         }},
        {9, 300, lemmas},
        {10, 300, reports},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.limit_s) o.expect(false, "time limit exceeded");
        if (!o.pass) failed.insert(c.id);
        std::printf("criterion %2d: %s  [%.2fs / %.0fs]  %s\n", c.id, o.pass ? "PASS" : "FAIL", s, c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (!only.empty()) std::erase_if(expected, [&](int id) { return std::find(only.begin(), only.end(), id) == only.end(); });
    if (failed != expected) {
        std::printf("failing criteria differ from the expected set\n");
        return 1;
    }
    return 0;
}
