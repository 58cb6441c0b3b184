#include "omstat/parking.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace omstat {

bool DyckPath::valid() const
{
    if (cols.empty()) return true;
    if (cols[0] != 0) return false;
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i] < cols[i - 1] || cols[i] > static_cast<int>(i)) return false;
    return true;
}

bool is_valid_pf(const ParkingFunction& pf, bool allow_zero_in_first_row)
{
    const auto& c = pf.path.cols;
    const auto& l = pf.labels;
    if (c.size() != l.size() || !pf.path.valid()) return false;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] < 0) return false;
        if (i == 0) {
            if (l[0] == 0 && !allow_zero_in_first_row) return false;
            continue;
        }
        if (c[i] == c[i - 1] && l[i] <= l[i - 1]) return false;
        if (l[i] == 0 && c[i] == c[i - 1]) return false;
    }
    return true;
}

std::vector<int> area_vector(const ParkingFunction& pf)
{
    std::vector<int> a;
    for (std::size_t i = 0; i < pf.path.cols.size(); ++i) a.push_back(static_cast<int>(i) - pf.path.cols[i]);
    return a;
}

std::vector<int> dinv_vector(const ParkingFunction& pf)
{
    auto a = area_vector(pf);
    const auto& l = pf.labels;
    std::size_t n = a.size();
    std::vector<int> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i] == a[j] && l[i] < l[j]) ++d[i];
            if (a[i] == a[j] + 1 && l[i] > l[j]) ++d[i];
        }
    return d;
}

long area(const ParkingFunction& pf)
{
    long s = 0;
    for (int x : area_vector(pf)) s += x;
    return s;
}

long dinv(const ParkingFunction& pf)
{
    long s = 0;
    for (int x : dinv_vector(pf)) s += x;
    return s;
}

namespace {

template <class Pred>
std::set<int> rows_where(const ParkingFunction& pf, Pred pred)
{
    auto a = area_vector(pf);
    std::set<int> out;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (pred(a[i], a[i - 1], pf.labels[i], pf.labels[i - 1])) out.insert(static_cast<int>(i + 1));
    return out;
}

bool subset(const std::set<int>& a, const std::set<int>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::set<int> rise_set(const ParkingFunction& pf)
{
    return rows_where(pf, [](int ai, int ap, Letter, Letter) { return ai == ap + 1; });
}

std::set<int> val_set(const ParkingFunction& pf)
{
    return rows_where(pf, [](int ai, int ap, Letter li, Letter lp) { return ai < ap || (ai == ap && li > lp); });
}

std::set<int> valley_set(const ParkingFunction& pf)
{
    return rows_where(pf, [](int ai, int ap, Letter, Letter) { return ai < ap; });
}

std::set<int> blank_eligible_rows(const ParkingFunction& pf)
{
    return rows_where(pf, [](int ai, int ap, Letter, Letter) { return ai <= ap; });
}

long area_minus(const ParkingFunction& pf, const std::set<int>& R)
{
    if (!subset(R, rise_set(pf))) throw std::invalid_argument("marks are not double rises");
    auto a = area_vector(pf);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!R.count(static_cast<int>(i + 1))) s += a[i];
    return s;
}

long dinv_minus(const ParkingFunction& pf, const std::set<int>& V)
{
    if (!subset(V, val_set(pf))) throw std::invalid_argument("marks are not contractible valleys");
    auto d = dinv_vector(pf);
    long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!V.count(static_cast<int>(i + 1))) s += d[i];
    return s - static_cast<long>(V.size());
}

Content pf_content(const ParkingFunction& pf)
{
    Letter m = 0;
    for (Letter x : pf.labels) m = std::max(m, x);
    std::vector<int> mult(static_cast<std::size_t>(m + 1), 0);
    for (Letter x : pf.labels) ++mult[static_cast<std::size_t>(x)];
    return Content::from_multiplicities(mult);
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit)
{
    if (n <= 0) {
        if (n == 0) visit(DyckPath{});
        return;
    }
    DyckPath p;
    p.cols.assign(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            visit(p);
            return;
        }
        for (int c = p.cols[static_cast<std::size_t>(i - 1)]; c <= i; ++c) {
            p.cols[static_cast<std::size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(1);
}

void for_each_pf(const Content& content, const std::function<void(const ParkingFunction&)>& visit)
{
    auto mult = content.multiplicities();
    int n = content.total();
    for_each_dyck_path(n, [&](const DyckPath& path) {
        ParkingFunction pf{path, std::vector<Letter>(static_cast<std::size_t>(n), 0)};
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                visit(pf);
                return;
            }
            auto ui = static_cast<std::size_t>(i);
            bool same_col = i > 0 && path.cols[ui] == path.cols[ui - 1];
            for (std::size_t x = 0; x < mult.size(); ++x) {
                if (!mult[x]) continue;
                if (x == 0 && (i == 0 || same_col)) continue;
                if (same_col && static_cast<Letter>(x) <= pf.labels[ui - 1]) continue;
                --mult[x];
                pf.labels[ui] = static_cast<Letter>(x);
                rec(i + 1);
                ++mult[x];
            }
        };
        rec(0);
    });
}

std::vector<ParkingFunction> enumerate_pfs(int n_cars, int r, const std::optional<Composition>& content)
{
    std::vector<ParkingFunction> out;
    auto push = [&](const ParkingFunction& pf) { out.push_back(pf); };
    if (content) {
        if (content->size() != n_cars) return out;
        for_each_pf(Content{*content, r}, push);
    } else {
        for (const auto& beta : weak_compositions(n_cars, n_cars)) for_each_pf(Content{beta, r}, push);
    }
    return out;
}

std::vector<DecoratedParkingFunction> enumerate_decorations(const ParkingFunction& pf, DecorationKind kind, int count)
{
    auto base = kind == DecorationKind::rise ? rise_set(pf) : val_set(pf);
    std::vector<int> rows(base.begin(), base.end());
    std::vector<DecoratedParkingFunction> out;
    if (count < 0 || count > static_cast<int>(rows.size())) return out;
    std::set<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == count) {
            out.push_back({pf, kind, cur});
            return;
        }
        for (std::size_t i = from; i < rows.size(); ++i) {
            cur.insert(rows[i]);
            rec(i + 1);
            cur.erase(rows[i]);
        }
    };
    rec(0);
    return out;
}

namespace {

struct GfTables {
    std::vector<QTPoly> rise, val;  // indexed by mark count
};

// Dense accumulator over (marks, e_q, e_t).
struct Acc {
    int M, Q, T, qoff;
    std::vector<long long> v;
    Acc(int n) : M(n + 1), Q(n * n + 2 * n + 2), T(n * n + 1), qoff(n + 1), v(static_cast<std::size_t>(M) * Q * T, 0) {}
    long long& at(int m, int eq, int et)
    {
        return v[(static_cast<std::size_t>(m) * Q + static_cast<std::size_t>(eq + qoff)) * T + static_cast<std::size_t>(et)];
    }
    std::vector<QTPoly> polys()
    {
        std::vector<QTPoly> out(static_cast<std::size_t>(M));
        for (int m = 0; m < M; ++m)
            for (int eq = -qoff; eq < Q - qoff; ++eq)
                for (int et = 0; et < T; ++et)
                    if (long long c = at(m, eq, et)) out[static_cast<std::size_t>(m)].add_term(mpz_class(std::to_string(c)), eq, et);
        return out;
    }
};

GfTables compute_tables(int r, const Composition& beta)
{
    Content content{beta, r};
    int N = content.total();
    Acc rise(N), val(N);
    std::vector<std::vector<long long>> dp;
    for_each_pf(content, [&](const ParkingFunction& pf) {
        auto a = area_vector(pf);
        auto d = dinv_vector(pf);
        int tot_d = 0, tot_a = 0;
        for (int x : d) tot_d += x;
        for (int x : a) tot_a += x;
        // rise: each double rise contributes t^{a_i} or a mark
        {
            std::vector<std::map<int, long long>> cur(1);
            cur[0][0] = 1;
            int base = tot_a;
            for (std::size_t i = 1; i < a.size(); ++i) {
                if (a[i] != a[i - 1] + 1) continue;
                base -= a[i];
                std::vector<std::map<int, long long>> nxt(cur.size() + 1);
                for (std::size_t m = 0; m < cur.size(); ++m)
                    for (auto [e, c] : cur[m]) {
                        nxt[m][e + a[i]] += c;
                        nxt[m + 1][e] += c;
                    }
                cur = std::move(nxt);
            }
            for (std::size_t m = 0; m < cur.size(); ++m)
                for (auto [e, c] : cur[m]) rise.at(static_cast<int>(m), tot_d, base + e) += c;
        }
        // val: each contractible valley contributes q^{d_i} or a mark with q^{-1}
        {
            auto V = val_set(pf);
            std::vector<std::map<int, long long>> cur(1);
            cur[0][0] = 1;
            int base = tot_d;
            for (int row : V) {
                int di = d[static_cast<std::size_t>(row - 1)];
                base -= di;
                std::vector<std::map<int, long long>> nxt(cur.size() + 1);
                for (std::size_t m = 0; m < cur.size(); ++m)
                    for (auto [e, c] : cur[m]) {
                        nxt[m][e + di] += c;
                        nxt[m + 1][e - 1] += c;
                    }
                cur = std::move(nxt);
            }
            for (std::size_t m = 0; m < cur.size(); ++m)
                for (auto [e, c] : cur[m]) val.at(static_cast<int>(m), base + e, tot_a) += c;
        }
    });
    return {rise.polys(), val.polys()};
}

const GfTables& tables(int r, const Composition& beta)
{
    static std::mutex mu;
    static std::map<std::pair<int, Composition>, GfTables> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({r, beta});
        if (it != memo.end()) return it->second;
    }
    GfTables t = compute_tables(r, beta);
    std::lock_guard<std::mutex> lock(mu);
    return memo.try_emplace({r, beta}, std::move(t)).first->second;
}

const QTPoly& select(const std::vector<QTPoly>& v, int marks)
{
    static const QTPoly zero;
    if (marks < 0 || marks >= static_cast<int>(v.size())) return zero;
    return v[static_cast<std::size_t>(marks)];
}

void check_gf_args(int n, int k, int r, const Composition& beta)
{
    if (n < 1 || k < 0 || k >= n) throw DomainError("need 0 <= k < n");
    if (r < 0) throw DomainError("need r >= 0");
    if (beta.size() != n) throw DomainError("content size must equal n");
}

}  // namespace

QTPoly rise_gf(int n, int k, int r, const Composition& beta)
{
    check_gf_args(n, k, r, beta);
    return select(tables(r, beta).rise, n - k - 1);
}

QTPoly val_gf(int n, int k, int r, const Composition& beta)
{
    check_gf_args(n, k, r, beta);
    return select(tables(r, beta).val, n - k - 1);
}

const char* kind_name(DecorationKind k) { return k == DecorationKind::rise ? "rise" : "valley"; }

nlohmann::json to_json(const DecoratedParkingFunction& d)
{
    return nlohmann::json{{"cols", d.pf.path.cols},
                          {"labels", d.pf.labels},
                          {"marks", std::vector<int>(d.marks.begin(), d.marks.end())},
                          {"kind", kind_name(d.kind)}};
}

DecoratedParkingFunction decorated_from_json(const nlohmann::json& j)
{
    DecoratedParkingFunction d;
    d.pf.path.cols = j.at("cols").get<std::vector<int>>();
    d.pf.labels = j.at("labels").get<std::vector<Letter>>();
    auto m = j.at("marks").get<std::vector<int>>();
    d.marks = std::set<int>(m.begin(), m.end());
    auto kind = j.at("kind").get<std::string>();
    if (kind == "rise")
        d.kind = DecorationKind::rise;
    else if (kind == "valley")
        d.kind = DecorationKind::valley;
    else
        throw std::invalid_argument("unknown decoration kind: " + kind);
    return d;
}

}  // namespace omstat
