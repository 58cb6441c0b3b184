#include "omstat/bijections.hpp"
#include "omstat/core.hpp"
#include "omstat/insertion.hpp"
#include "omstat/parking.hpp"
#include "omstat/qseries.hpp"
#include "omstat/statistics.hpp"
#include "omstat/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace omstat;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    return out;
}

void print_witness(const OMP& pi, Stat s)
{
    switch (s) {
    case Stat::inv:
        for (const auto& p : inversion_pairs(pi))
            std::cout << "  (" << p.a << "," << p.b << ") blocks " << p.block_a + 1 << "<" << p.block_b + 1 << "\n";
        break;
    case Stat::dinv:
        for (const auto& t : dinv_triples(pi))
            std::cout << "  h=" << t.h << " i=" << t.i + 1 << " j=" << t.j + 1 << (t.secondary ? " secondary" : " primary") << "\n";
        break;
    case Stat::maj: {
        auto sw = descent_starred(pi);
        std::cout << "  sigma=" << word_to_string(sigma_word(pi)) << " ind=" << word_to_string(ind_word(pi)) << " stars={";
        bool first = true;
        for (int x : sw.stars) {
            std::cout << (first ? "" : ",") << x;
            first = false;
        }
        std::cout << "}\n";
        break;
    }
    case Stat::minimaj: {
        auto mw = miniword(pi);
        std::cout << "  miniword=";
        auto segs = mw.segments();
        for (std::size_t i = 0; i < segs.size(); ++i) std::cout << (i ? "." : "") << word_to_string(segs[i]);
        std::cout << "\n";
        break;
    }
    }
}

int cmd_stat(const std::string& text, const std::string& stat, bool verbose)
{
    OMP pi = parse_omp(text);
    Stat s = parse_stat(stat);
    std::cout << evaluate(s, pi) << "\n";
    if (verbose) print_witness(pi, s);
    return 0;
}

int cmd_map(const std::string& name, const std::string& omp_text, const std::string& pi_text, const std::string& u_text,
            const std::string& b_text, const std::string& beta_text, int k)
{
    if (name.rfind("gamma-", 0) == 0) {
        if (omp_text.empty()) throw DomainError("gamma maps need a partition argument");
        OMP pi = parse_omp(omp_text);
        Stat s = parse_stat(name.substr(6));
        DecoratedParkingFunction d;
        long lhs = evaluate(s, pi), rhs = 0, residual = 0;
        const char* image_stat = "";
        const char* residual_stat = "";
        switch (s) {
        case Stat::dinv:
            d = gamma_dinv(pi);
            rhs = dinv(d.pf), residual = area_minus(d.pf, d.marks);
            image_stat = "dinv", residual_stat = "area_minus";
            break;
        case Stat::maj:
            d = gamma_maj(pi);
            rhs = area_minus(d.pf, d.marks), residual = dinv(d.pf);
            image_stat = "area_minus", residual_stat = "dinv";
            break;
        case Stat::inv:
            d = gamma_inv(pi);
            rhs = dinv_minus(d.pf, d.marks), residual = area(d.pf);
            image_stat = "dinv_minus", residual_stat = "area";
            break;
        case Stat::minimaj:
            d = gamma_minimaj(pi);
            rhs = area(d.pf), residual = dinv_minus(d.pf, d.marks);
            image_stat = "area", residual_stat = "dinv_minus";
            break;
        }
        std::cout << to_json(d).dump() << "\n";
        bool ok = lhs == rhs && residual == 0;
        std::cout << "contract: " << stat_name(s) << "=" << lhs << " " << image_stat << "=" << rhs << " " << residual_stat
                  << "=" << residual << (ok ? " ok" : " VIOLATED") << "\n";
        return ok ? 0 : kExitFail;
    }
    if (name.rfind("phi-", 0) != 0) throw CLI::ValidationError("map", "unknown map " + name);
    Stat s = parse_stat(name.substr(4));
    if (s == Stat::minimaj) throw CLI::ValidationError("map", "no insertion map for minimaj");
    InsertionInput in{parse_omp(pi_text), parse_int_list(u_text), parse_int_list(b_text)};
    std::sort(in.B.begin(), in.B.end());
    Composition beta(parse_int_list(beta_text));
    int r = 0;
    for (const auto& b : in.pi.blocks()) r += b.contains(0) ? 1 : 0;
    OMP img = s == Stat::inv ? phi_inv(in, r, beta, k) : s == Stat::maj ? phi_maj(in, r, beta, k) : phi_dinv(in, r, beta, k);
    std::cout << serialize(img) << "\n";
    long before = evaluate(s, in.pi), w = insertion_weight(in), after = evaluate(s, img);
    bool ok = after == before + w;
    std::cout << "contract: " << stat_name(s) << " " << before << " + " << w << " = " << after << (ok ? " ok" : " VIOLATED")
              << "\n";
    return ok ? 0 : kExitFail;
}

int cmd_gf(const std::string& version, int n, int k, int r, const std::string& content, const std::string& at)
{
    Composition beta(parse_int_list(content));
    QTPoly p;
    if (version == "rise")
        p = rise_gf(n, k, r, beta);
    else if (version == "val")
        p = val_gf(n, k, r, beta);
    else
        throw CLI::ValidationError("gf", "version must be rise or val");
    if (at == "t=0")
        p = p.at_t0();
    else if (at == "q=0")
        p = p.at_q0();
    else if (!at.empty())
        throw CLI::ValidationError("--at", "expected t=0 or q=0");
    std::cout << p.to_string() << "\n";
    return 0;
}

int cmd_dist(int r, const std::string& beta, int k, const std::string& stat, const std::string& variant, const std::string& shape)
{
    DistributionKey key;
    key.r = r;
    key.beta = Composition(parse_int_list(beta));
    key.k = k;
    key.stat = parse_stat(stat);
    if (variant == "all")
        key.variant = Variant::all;
    else if (variant != "tail")
        throw CLI::ValidationError("--variant", "expected tail or all");
    if (!shape.empty()) key.shape = Composition(parse_int_list(shape));
    std::cout << brute_force_D(key).to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& json_path, bool reproducible)
{
    SuiteReport rep = run_suite(suite, opts);
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot write " + json_path);
        f << rep.to_json(reproducible).dump(2) << "\n";
    }
    std::cout << suite << ": " << rep.passed << " passed, " << rep.failed << " failed"
              << (rep.report_only ? " (report only)" : "") << "\n";
    for (const auto& c : rep.cases)
        if (!c.pass && !rep.report_only) std::cout << "  FAIL " << c.key << " expected " << c.expected << " got " << c.actual << "\n";
    return rep.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Statistics, insertion maps and bijections on extended ordered multiset partitions"};
    app.require_subcommand(1);

    auto* stat = app.add_subcommand("stat", "Evaluate inv, dinv, maj or minimaj on a partition");
    std::string stat_omp, stat_name_arg;
    bool verbose = false;
    stat->add_option("partition", stat_omp, "e.g. 1,3,4/2,6,8/5,7")->required();
    stat->add_option("statistic", stat_name_arg, "inv | dinv | maj | minimaj")->required();
    stat->add_flag("-v,--verbose", verbose, "print the witness structure");

    auto* map = app.add_subcommand("map", "Apply an insertion map or a bijection");
    std::string map_name, map_omp, pi_text, u_text, b_text, beta_text;
    int map_k = 0;
    map->add_option("name", map_name, "phi-inv | phi-maj | phi-dinv | gamma-dinv | gamma-maj | gamma-inv | gamma-minimaj")
        ->required();
    map->add_option("partition", map_omp, "input partition for gamma maps");
    map->add_option("--pi", pi_text, "partition for phi maps");
    map->add_option("--U", u_text, "comma-separated set U");
    map->add_option("--B", b_text, "comma-separated multiset B (B' when pi's last block holds 0)");
    map->add_option("--beta", beta_text, "target content beta");
    map->add_option("--k", map_k, "target block count");

    auto* gf = app.add_subcommand("gf", "Content-restricted Rise / Val generating function");
    std::string gf_version, gf_content, gf_at;
    int gf_n = 0, gf_k = 0, gf_r = 0;
    gf->add_option("version", gf_version, "rise | val")->required();
    gf->add_option("--n", gf_n)->required();
    gf->add_option("--k", gf_k)->required();
    gf->add_option("--r", gf_r)->default_val(0);
    gf->add_option("--content", gf_content, "beta, e.g. 1,1,1")->required();
    gf->add_option("--at", gf_at, "t=0 | q=0");

    auto* dist = app.add_subcommand("dist", "Brute-force distribution of a statistic");
    std::string d_beta, d_stat = "inv", d_variant = "tail", d_shape;
    int d_r = 0, d_k = 0;
    dist->add_option("--r", d_r)->default_val(0);
    dist->add_option("--beta", d_beta)->required();
    dist->add_option("--k", d_k)->required();
    dist->add_option("--stat", d_stat)->default_val("inv");
    dist->add_option("--variant", d_variant, "tail | all")->default_val("tail");
    dist->add_option("--shape", d_shape);

    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    std::string suite, json_path;
    SuiteOptions opts;
    bool reproducible = false;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-size", opts.max_size)->default_val(6)->check(CLI::NonNegativeNumber);
    verify->add_option("--max-r", opts.max_r)->default_val(2)->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", opts.threads)->default_val(0)->check(CLI::NonNegativeNumber);
    verify->add_option("--json", json_path, "write the report here");
    verify->add_flag("--reproducible", reproducible, "write elapsed_ms as 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stat) return cmd_stat(stat_omp, stat_name_arg, verbose);
        if (*map) return cmd_map(map_name, map_omp, pi_text, u_text, b_text, beta_text, map_k);
        if (*gf) return cmd_gf(gf_version, gf_n, gf_k, gf_r, gf_content, gf_at);
        if (*dist) return cmd_dist(d_r, d_beta, d_k, d_stat, d_variant, d_shape);
        if (*verify) return cmd_verify(suite, opts, json_path, reproducible);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
