#include "omstat/suites.hpp"

#include "omstat/bijections.hpp"
#include "omstat/core.hpp"
#include "omstat/insertion.hpp"
#include "omstat/parking.hpp"
#include "omstat/qseries.hpp"
#include "omstat/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace omstat {

namespace {

using Task = std::function<std::vector<CaseRecord>()>;

std::vector<CaseRecord> run_tasks(const std::vector<Task>& tasks, int threads)
{
    std::vector<std::vector<CaseRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) slots[i] = tasks[i]();
    };
    int n = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n = std::min<int>(n, static_cast<int>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<CaseRecord> out;
    for (auto& s : slots)
        for (auto& c : s) out.push_back(std::move(c));
    return out;
}

struct ContentCase {
    int r;
    Composition beta;
    int total() const { return r + beta.size(); }
    std::string key() const { return "r=" + std::to_string(r) + ";beta=" + beta.to_string(); }
};

// Strong beta, total |beta|+r <= max_size, r <= max_r.
std::vector<ContentCase> contents(int max_size, int max_r)
{
    std::vector<ContentCase> out;
    for (int s = 0; s <= max_size; ++s)
        for (int r = 0; r <= std::min(max_r, s); ++r)
            for (auto& b : strong_compositions(s - r)) out.push_back({r, b});
    return out;
}

CaseRecord poly_case(std::string key, const QTPoly& expected, const QTPoly& actual)
{
    return {std::move(key), expected.to_string(), actual.to_string(), expected == actual};
}

const char* variant_name(Variant v) { return v == Variant::tail_positive ? "tail" : "all"; }

std::vector<Task> equidistribution(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r))
        for (int k = 0; k <= c.total(); ++k)
            for (Variant v : {Variant::tail_positive, Variant::all})
                tasks.push_back([c, k, v] {
                    std::vector<CaseRecord> out;
                    std::string base = c.key() + ";k=" + std::to_string(k) + ";variant=" + variant_name(v);
                    QTPoly ref = brute_force_D({c.r, c.beta, k, v, Stat::inv, {}});
                    for (Stat s : {Stat::maj, Stat::dinv, Stat::minimaj})
                        out.push_back(poly_case(base + ";inv=" + stat_name(s), ref, brute_force_D({c.r, c.beta, k, v, s, {}})));
                    return out;
                });
    return tasks;
}

std::vector<Task> insertion(const SuiteOptions& o)
{
    using Phi = OMP (*)(const InsertionInput&, int, const Composition&, int);
    static const std::vector<std::pair<Stat, Phi>> maps = {
        {Stat::inv, phi_inv}, {Stat::maj, phi_maj}, {Stat::dinv, phi_dinv}};
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r)) {
        if (c.beta.empty()) continue;
        for (int k = 1; k <= c.total(); ++k)
            tasks.push_back([c, k] {
                std::vector<CaseRecord> out;
                long target = 0;
                for_each_omp(Content{c.beta, c.r}, k, true, [&](const OMP&) { ++target; });
                for (auto [stat, phi] : maps) {
                    long domain = 0, bad = 0, collisions = 0;
                    std::set<std::string> images;
                    for (int ell = 0; ell <= k; ++ell)
                        for_each_insertion_input(c.beta, c.r, k, ell, [&](const InsertionInput& in) {
                            ++domain;
                            try {
                                OMP img = phi(in, c.r, c.beta, k);
                                if (!validate(img, Content{c.beta, c.r}, k, true) ||
                                    evaluate(stat, img) != evaluate(stat, in.pi) + insertion_weight(in))
                                    ++bad;
                                if (!images.insert(serialize(img)).second) ++collisions;
                            } catch (const std::exception&) {
                                ++bad;
                            }
                        });
                    auto fmt = [](long d, long im, long b, long col) {
                        return "domain=" + std::to_string(d) + ";images=" + std::to_string(im) +
                               ";violations=" + std::to_string(b) + ";collisions=" + std::to_string(col);
                    };
                    std::string exp = fmt(target, target, 0, 0);
                    std::string act = fmt(domain, static_cast<long>(images.size()), bad, collisions);
                    out.push_back({c.key() + ";k=" + std::to_string(k) + ";map=phi-" + stat_name(stat), exp, act, exp == act});
                }
                return out;
            });
    }
    return tasks;
}

struct GammaSpec {
    Stat stat;
    DecoratedParkingFunction (*gamma)(const OMP&);
};

// Statistic contract of one gamma image; returns false on any violation.
bool gamma_contract(Stat stat, const OMP& pi, const DecoratedParkingFunction& d, const Content& content)
{
    const auto& pf = d.pf;
    if (!is_valid_pf(pf, true)) return false;
    if (pf.labels.empty() || pf.labels[0] != pi.blocks().back().min()) return false;
    if (pf_content(pf) != content) return false;
    if (static_cast<int>(d.marks.size()) != pf.rows() - pi.k()) return false;
    bool rise = stat == Stat::dinv || stat == Stat::maj;
    if (d.kind != (rise ? DecorationKind::rise : DecorationKind::valley)) return false;
    const auto allowed = rise ? rise_set(pf) : val_set(pf);
    if (!std::includes(allowed.begin(), allowed.end(), d.marks.begin(), d.marks.end())) return false;
    switch (stat) {
    case Stat::dinv: return area_minus(pf, d.marks) == 0 && dinv(pf) == dinv(pi);
    case Stat::maj: return dinv(pf) == 0 && area_minus(pf, d.marks) == maj(pi);
    case Stat::inv: return area(pf) == 0 && dinv_minus(pf, d.marks) == inv(pi);
    case Stat::minimaj: return dinv_minus(pf, d.marks) == 0 && area(pf) == minimaj(pi);
    }
    return false;
}

// Number of decorated objects with residual statistic 0, read off the generating functions.
long gamma_target(Stat stat, const ContentCase& c, int K)
{
    int n = c.beta.size();
    int k = K - c.r - 1;
    if (n < 1 || k < 0 || k >= n) return 0;
    QTPoly p;
    switch (stat) {
    case Stat::dinv: p = rise_gf(n, k, c.r, c.beta).at_t0(); break;
    case Stat::maj: p = rise_gf(n, k, c.r, c.beta).at_q0(); break;
    case Stat::inv: p = val_gf(n, k, c.r, c.beta).at_t0(); break;
    case Stat::minimaj: p = val_gf(n, k, c.r, c.beta).at_q0(); break;
    }
    return p.eval_at(1, 1).get_si();
}

std::vector<Task> bijections(const SuiteOptions& o)
{
    static const std::vector<GammaSpec> maps = {
        {Stat::dinv, gamma_dinv}, {Stat::maj, gamma_maj}, {Stat::inv, gamma_inv}, {Stat::minimaj, gamma_minimaj}};
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r)) {
        for (int K = 1; K <= c.total(); ++K)
            tasks.push_back([c, K] {
                std::vector<CaseRecord> out;
                Content content{c.beta, c.r};
                for (const auto& g : maps) {
                    long bad = 0, collisions = 0, tail = 0;
                    std::set<std::string> images;
                    for_each_omp(content, K, false, [&](const OMP& pi) {
                        try {
                            auto d = g.gamma(pi);
                            if (!gamma_contract(g.stat, pi, d, content)) ++bad;
                            if ((d.pf.labels[0] == 0) == pi.tail_positive()) ++bad;
                            if (!images.insert(to_json(d).dump()).second) ++collisions;
                            if (pi.tail_positive()) ++tail;
                        } catch (const std::exception&) {
                            ++bad;
                        }
                    });
                    auto fmt = [](long t, long b, long col) {
                        return "tail_images=" + std::to_string(t) + ";violations=" + std::to_string(b) +
                               ";collisions=" + std::to_string(col);
                    };
                    std::string exp = fmt(gamma_target(g.stat, c, K), 0, 0);
                    std::string act = fmt(tail, bad, collisions);
                    out.push_back({c.key() + ";blocks=" + std::to_string(K) + ";map=gamma-" + stat_name(g.stat), exp, act,
                                   exp == act});
                }
                return out;
            });
    }
    return tasks;
}

std::vector<Task> combor(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r)) {
        int n = c.beta.size();
        for (int k = 0; k < n; ++k)
            tasks.push_back([c, n, k] {
                std::vector<CaseRecord> out;
                int K = k + c.r + 1;
                std::string base = c.key() + ";n=" + std::to_string(n) + ";k=" + std::to_string(k);
                auto D = [&](Stat s) { return brute_force_D({c.r, c.beta, K, Variant::tail_positive, s, {}}); };
                QTPoly rise = rise_gf(n, k, c.r, c.beta), val = val_gf(n, k, c.r, c.beta);
                out.push_back(poly_case(base + ";rise@t=0~dinv", D(Stat::dinv), rise.at_t0()));
                out.push_back(poly_case(base + ";rise@q=0~maj", D(Stat::maj), rise.at_q0().swap_qt()));
                out.push_back(poly_case(base + ";val@t=0~inv", D(Stat::inv), val.at_t0()));
                out.push_back(poly_case(base + ";val@q=0~minimaj", D(Stat::minimaj), val.at_q0().swap_qt()));
                return out;
            });
    }
    return tasks;
}

template <class F>
std::vector<Task> per_block_count(const SuiteOptions& o, F f)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r))
        for (int k = 0; k <= c.total(); ++k)
            tasks.push_back([c, k, f] { return f(c, k); });
    return tasks;
}

std::vector<Task> recursion_inv(const SuiteOptions& o)
{
    return per_block_count(o, [](const ContentCase& c, int k) {
        return std::vector<CaseRecord>{poly_case(c.key() + ";k=" + std::to_string(k),
                                                 brute_force_D({c.r, c.beta, k, Variant::tail_positive, Stat::inv, {}}),
                                                 I_recursive(c.r, c.beta, k))};
    });
}

std::vector<Task> recursion_minimaj(const SuiteOptions& o)
{
    return per_block_count(o, [](const ContentCase& c, int k) {
        return std::vector<CaseRecord>{poly_case(c.key() + ";k=" + std::to_string(k),
                                                 brute_force_D({c.r, c.beta, k, Variant::tail_positive, Stat::minimaj, {}}),
                                                 M_recursive(c.r, c.beta, k))};
    });
}

std::vector<Task> mahonian(const SuiteOptions& o)
{
    return per_block_count(o, [](const ContentCase& c, int k) {
        std::string base = c.key() + ";k=" + std::to_string(k);
        DistributionKey all{c.r, c.beta, k, Variant::all, Stat::inv, {}};
        return std::vector<CaseRecord>{
            poly_case(base + ";recursion", brute_force_D({c.r, c.beta, k, Variant::tail_positive, Stat::inv, {}}),
                      D_mahonian_recursive(c.r, c.beta, k)),
            poly_case(base + ";plus", brute_force_D(all), D_plus(all))};
    });
}

std::vector<Task> recursion_shape(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r))
        for (const auto& alpha : strong_compositions(c.total()))
            tasks.push_back([c, alpha] {
                DistributionKey key{c.r, c.beta, alpha.length(), Variant::tail_positive, Stat::inv, alpha};
                return std::vector<CaseRecord>{
                    poly_case(c.key() + ";alpha=" + alpha.to_string(), brute_force_D(key), I_shape_recursive(c.r, c.beta, alpha))};
            });
    return tasks;
}

std::vector<Task> qstirling(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (int n = 1; n <= o.max_size; ++n)
        for (int k = 1; k <= n; ++k)
            tasks.push_back([n, k] {
                QTPoly d = brute_force_D({0, Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), k,
                                          Variant::tail_positive, Stat::inv, {}});
                QTPoly s = q_stirling(n, k);
                std::string base = "n=" + std::to_string(n) + ";k=" + std::to_string(k);
                return std::vector<CaseRecord>{poly_case(base + ";D~S", d, s),
                                               poly_case(base + ";D~[k]!S", d, q_factorial(k) * s)};
            });
    return tasks;
}

CaseRecord count_case(std::string key, long checked, long bad)
{
    std::string exp = "checked=" + std::to_string(checked) + ";failures=0";
    std::string act = "checked=" + std::to_string(checked) + ";failures=" + std::to_string(bad);
    return {std::move(key), exp, act, bad == 0};
}

std::vector<Task> lemmas(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r)) {
        const int modulus = c.beta.length() + 1;
        // cyclic action commutes with segmentation when the last block is a singleton
        for (const auto& alpha : strong_compositions(c.total())) {
            if (alpha.empty() || alpha.last() != 1) continue;
            tasks.push_back([c, alpha, modulus] {
                long checked = 0, bad = 0;
                for_each_omp_shape(Content{c.beta, c.r}, alpha, false, [&](const OMP& mu) {
                    ++checked;
                    if (miniword(cyclic_decrement(mu, modulus)) != cyclic_decrement(miniword(mu), modulus)) ++bad;
                });
                std::vector<CaseRecord> out{count_case("segmentation;" + c.key() + ";alpha=" + alpha.to_string(), checked, bad)};
                bool eq = lemma_l36_check(c.r, c.beta, alpha);
                out.push_back({"last-singleton;" + c.key() + ";alpha=" + alpha.to_string(), "equal", eq ? "equal" : "differ", eq});
                bool eq2 = lemma_l36_unpermuted_check(c.r, c.beta, alpha);
                out.push_back({"last-singleton-unpermuted;" + c.key() + ";alpha=" + alpha.to_string(), "equal",
                               eq2 ? "equal" : "differ", eq2});
                return out;
            });
        }
        // maj(c.w) = maj(w) + r over words not ending in 0
        tasks.push_back([c, modulus] {
            Word w;
            auto mult = Content{c.beta, c.r}.multiplicities();
            for (std::size_t x = 0; x < mult.size(); ++x) w.insert(w.end(), static_cast<std::size_t>(mult[x]), static_cast<Letter>(x));
            long checked = 0, bad = 0;
            do {
                if (w.empty() || w.back() == 0) continue;
                ++checked;
                if (maj_of_word(cyclic_decrement(w, modulus)) != maj_of_word(w) + c.r) ++bad;
            } while (std::next_permutation(w.begin(), w.end()));
            return std::vector<CaseRecord>{count_case("cyclic-maj;" + c.key(), checked, bad)};
        });
        for (int k = 1; k <= c.total(); ++k)
            tasks.push_back([c, k] {
                std::vector<CaseRecord> out;
                // only the minimum of the last block matters
                long checked = 0, bad = 0;
                for_each_omp(Content{c.beta, c.r}, k, false, [&](const OMP& mu) {
                    ++checked;
                    auto blocks = mu.blocks();
                    blocks.back() = Block({blocks.back().min()});
                    if (minimaj(mu) != minimaj(OMP(blocks))) ++bad;
                });
                out.push_back(count_case("last-block-min;" + c.key() + ";k=" + std::to_string(k), checked, bad));
                // all-variant minimaj distribution is symmetric in (r, beta)
                std::vector<int> full{c.r};
                full.insert(full.end(), c.beta.parts().begin(), c.beta.parts().end());
                QTPoly ref = brute_force_D({c.r, c.beta, k, Variant::all, Stat::minimaj, {}});
                std::vector<int> perm = full;
                std::sort(perm.begin(), perm.end());
                long rearr = 0, diff = 0;
                do {
                    ++rearr;
                    QTPoly p = brute_force_D({perm[0], Composition(std::vector<int>(perm.begin() + 1, perm.end())), k,
                                              Variant::all, Stat::minimaj, {}});
                    if (!(p == ref)) ++diff;
                } while (std::next_permutation(perm.begin(), perm.end()));
                out.push_back(count_case("rearrangement;" + c.key() + ";k=" + std::to_string(k), rearr, diff));
                return out;
            });
    }
    return tasks;
}

std::vector<Task> rise_val_symmetry(const SuiteOptions& o)
{
    std::vector<Task> tasks;
    for (const auto& c : contents(o.max_size, o.max_r)) {
        int n = c.beta.size();
        for (int k = 0; k < n; ++k)
            tasks.push_back([c, n, k] {
                QTPoly rise = rise_gf(n, k, c.r, c.beta), val = val_gf(n, k, c.r, c.beta);
                std::string base = c.key() + ";n=" + std::to_string(n) + ";k=" + std::to_string(k);
                return std::vector<CaseRecord>{poly_case(base + ";rise~val", rise, val),
                                               poly_case(base + ";rise~swap(rise)", rise, rise.swap_qt())};
            });
    }
    return tasks;
}

using Builder = std::vector<Task> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Builder>>& registry()
{
    static const std::vector<std::pair<std::string, Builder>> r = {
        {"equidistribution", equidistribution},
        {"insertion", insertion},
        {"bijections", bijections},
        {"combor", combor},
        {"recursion-inv", recursion_inv},
        {"recursion-minimaj", recursion_minimaj},
        {"recursion-shape", recursion_shape},
        {"mahonian", mahonian},
        {"qstirling", qstirling},
        {"lemmas", lemmas},
        {"rise-val-symmetry", rise_val_symmetry},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, b] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

bool is_report_suite(const std::string& name) { return name == "qstirling" || name == "rise-val-symmetry"; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    if (opts.max_size < 0 || opts.max_r < 0) throw std::invalid_argument("bounds must be non-negative");
    const auto& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
    if (it == reg.end()) throw std::invalid_argument("unknown suite: " + name);
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = name;
    rep.options = opts;
    rep.report_only = is_report_suite(name);
    rep.cases = run_tasks(it->second(opts), opts.threads);
    for (const auto& c : rep.cases) (c.pass ? rep.passed : rep.failed)++;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::json SuiteReport::to_json(bool reproducible) const
{
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cases)
        cs.push_back({{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return nlohmann::json{{"suite", suite},
                          {"params", {{"max_size", options.max_size}, {"max_r", options.max_r}, {"report_only", report_only}}},
                          {"cases", cs},
                          {"passed", passed},
                          {"failed", failed},
                          {"elapsed_ms", reproducible ? 0.0 : elapsed_ms},
                          {"version", kVersion}};
}

}  // namespace omstat
