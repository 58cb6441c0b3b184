#include "omstat/qseries.hpp"

#include "omstat/statistics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace omstat {

const char* stat_name(Stat s)
{
    switch (s) {
    case Stat::inv: return "inv";
    case Stat::maj: return "maj";
    case Stat::dinv: return "dinv";
    case Stat::minimaj: return "minimaj";
    }
    return "?";
}

Stat parse_stat(const std::string& s)
{
    if (s == "inv") return Stat::inv;
    if (s == "maj") return Stat::maj;
    if (s == "dinv") return Stat::dinv;
    if (s == "minimaj") return Stat::minimaj;
    throw std::invalid_argument("unknown statistic: " + s);
}

long evaluate(Stat s, const OMP& omp)
{
    switch (s) {
    case Stat::inv: return inv(omp);
    case Stat::maj: return maj(omp);
    case Stat::dinv: return dinv(omp);
    case Stat::minimaj: return minimaj(omp);
    }
    return 0;
}

namespace {

// Thread-safe memo table; values are pure so a racing double computation is harmless.
template <class K, class V>
class Memo {
public:
    template <class F>
    V get(const K& key, F&& compute)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        V v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> table_;
};

QTPoly from_counts(const std::vector<long>& counts)
{
    QTPoly p;
    for (std::size_t e = 0; e < counts.size(); ++e)
        if (counts[e]) p.add_term(counts[e], static_cast<int>(e));
    return p;
}

}  // namespace

QTPoly q_int(int n)
{
    QTPoly p;
    for (int i = 0; i < n; ++i) p.add_term(1, i);
    return p;
}

QTPoly q_factorial(int n)
{
    QTPoly p = 1;
    for (int i = 2; i <= n; ++i) p *= q_int(i);
    return p;
}

QTPoly q_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) return {};
    if (k == 0 || k == n) return 1;
    static Memo<std::pair<int, int>, QTPoly> memo;
    return memo.get({n, k}, [&] { return q_binomial(n - 1, k - 1) + QTPoly::q(k) * q_binomial(n - 1, k); });
}

QTPoly q_stirling(int n, int k)
{
    if (n < 0 || k < 0 || k > n) return {};
    if (n == 0) return 1;
    if (k == 0) return {};
    static Memo<std::pair<int, int>, QTPoly> memo;
    return memo.get({n, k}, [&] { return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k); });
}

QTPoly brute_force_D(const DistributionKey& key)
{
    static Memo<DistributionKey, QTPoly> memo;
    return memo.get(key, [&] {
        std::vector<long> counts;
        auto visit = [&](const OMP& pi) {
            auto v = static_cast<std::size_t>(evaluate(key.stat, pi));
            if (counts.size() <= v) counts.resize(v + 1, 0);
            ++counts[v];
        };
        Content c{key.beta, key.r};
        bool tail = key.variant == Variant::tail_positive;
        if (key.shape) {
            if (key.shape->length() != key.k) return QTPoly{};
            for_each_omp_shape(c, *key.shape, tail, visit);
        } else {
            for_each_omp(c, key.k, tail, visit);
        }
        return from_counts(counts);
    });
}

QTPoly D_plus(const DistributionKey& key)
{
    if (key.variant != Variant::all) throw DomainError("D_plus needs the all variant");
    std::vector<int> parts{key.r};
    parts.insert(parts.end(), key.beta.parts().begin(), key.beta.parts().end());
    DistributionKey shifted = key;
    shifted.r = 0;
    shifted.beta = Composition(parts);
    shifted.variant = Variant::tail_positive;
    return brute_force_D(shifted);
}

namespace {

// Subsets S of the index range [lo, c.size()) with chi_S <= c, optionally of fixed size.
template <class F>
void for_each_subset(const std::vector<int>& c, std::size_t lo, int size, F&& f)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = lo; i < c.size(); ++i)
        if (c[i] > 0) idx.push_back(i);
    const std::size_t a = idx.size();
    for (unsigned long mask = 1; mask < (1ul << a); ++mask) {
        if (size >= 0 && __builtin_popcountl(mask) != size) continue;
        std::vector<int> rest = c;
        std::size_t mn = c.size();
        for (std::size_t j = 0; j < a; ++j)
            if (mask & (1ul << j)) {
                --rest[idx[j]];
                mn = std::min(mn, idx[j]);
            }
        int e = 0;
        for (std::size_t i = mn + 1; i < c.size(); ++i) e += rest[i];
        f(rest, e);
    }
}

bool all_zero(const std::vector<int>& c)
{
    for (int x : c)
        if (x) return false;
    return true;
}

std::vector<int> extended(int r, const Composition& beta)
{
    std::vector<int> c{r};
    c.insert(c.end(), beta.parts().begin(), beta.parts().end());
    return c;
}

// Recursion over the last block on the full content vector (letter 0 included).
QTPoly I_all_shape(const std::vector<int>& c, const std::vector<int>& alpha)
{
    if (alpha.empty()) return all_zero(c) ? QTPoly(1) : QTPoly();
    static Memo<std::pair<std::vector<int>, std::vector<int>>, QTPoly> memo;
    return memo.get({c, alpha}, [&] {
        QTPoly sum;
        std::vector<int> head(alpha.begin(), alpha.end() - 1);
        for_each_subset(c, 0, alpha.back(),
                        [&](const std::vector<int>& rest, int e) { sum += QTPoly::q(e) * I_all_shape(rest, head); });
        return sum;
    });
}

QTPoly I_all_blocks(const std::vector<int>& c, int k)
{
    if (k == 0) return all_zero(c) ? QTPoly(1) : QTPoly();
    static Memo<std::pair<std::vector<int>, int>, QTPoly> memo;
    return memo.get({c, k}, [&] {
        QTPoly sum;
        for_each_subset(c, 0, -1, [&](const std::vector<int>& rest, int e) { sum += QTPoly::q(e) * I_all_blocks(rest, k - 1); });
        return sum;
    });
}

Composition beta_of(const std::vector<int>& c) { return Composition(std::vector<int>(c.begin() + 1, c.end())); }

}  // namespace

QTPoly I_shape_recursive(int r, const Composition& beta, const Composition& alpha)
{
    if (!alpha.strong()) throw DomainError("shape must be a strong composition");
    auto c = extended(r, beta);
    if (alpha.empty()) return all_zero(c) ? QTPoly(1) : QTPoly();
    QTPoly sum;
    auto head = alpha.drop_last().parts();
    for_each_subset(c, 1, alpha.last(), [&](const std::vector<int>& rest, int e) { sum += QTPoly::q(e) * I_all_shape(rest, head); });
    return sum;
}

QTPoly I_recursive(int r, const Composition& beta, int k)
{
    auto c = extended(r, beta);
    if (k == 0) return all_zero(c) ? QTPoly(1) : QTPoly();
    QTPoly sum;
    for_each_subset(c, 1, -1, [&](const std::vector<int>& rest, int e) { sum += QTPoly::q(e) * I_all_blocks(rest, k - 1); });
    return sum;
}

QTPoly M_recursive(int r, const Composition& beta, int k)
{
    auto c = extended(r, beta);
    if (k == 0) return all_zero(c) ? QTPoly(1) : QTPoly();
    QTPoly sum;
    for_each_subset(c, 1, -1, [&](const std::vector<int>& rest, int e) {
        DistributionKey key{rest[0], beta_of(rest), k - 1, Variant::all, Stat::minimaj, {}};
        sum += QTPoly::q(e) * brute_force_D(key);
    });
    return sum;
}

QTPoly D_mahonian_recursive(int r, const Composition& beta, int k)
{
    if (k < 0) return {};
    if (beta.empty()) return (r == 0 && k == 0) ? QTPoly(1) : QTPoly();
    static Memo<std::tuple<int, Composition, int>, QTPoly> memo;
    return memo.get({r, beta, k}, [&] {
        const int bn = beta.last();
        const Composition head = beta.drop_last();
        std::vector<int> plus_parts{r};
        plus_parts.insert(plus_parts.end(), head.parts().begin(), head.parts().end());
        const Composition plus(plus_parts);
        QTPoly sum;
        for (int ell = 0; ell <= k; ++ell) {
            const int s = bn - k + ell;
            if (s < 0 || s > ell) continue;
            QTPoly d = D_mahonian_recursive(r, head, ell);
            QTPoly inner = q_binomial(k, ell) * d;
            if (r > 0 && k > 0) inner += q_binomial(k - 1, ell) * (D_mahonian_recursive(0, plus, ell) - d);
            sum += QTPoly::q(s * (s - 1) / 2) * q_binomial(ell, s) * inner;
        }
        return sum;
    });
}

namespace {

QTPoly l36_lhs(int r, const Composition& beta, const Composition& alpha)
{
    if (alpha.empty() || alpha.last() != 1) throw DomainError("lemma needs a last shape part equal to 1");
    if (!alpha.strong() || alpha.size() != beta.size() + r) throw DomainError("shape does not match content");
    return brute_force_D({r, beta, alpha.length(), Variant::tail_positive, Stat::minimaj, alpha});
}

}  // namespace

bool lemma_l36_unpermuted_check(int r, const Composition& beta, const Composition& alpha)
{
    if (alpha.empty() && beta.size() + r == 0) return true;
    QTPoly lhs = l36_lhs(r, beta, alpha);
    const int k = alpha.length();
    const auto& b = beta.parts();
    const int m = beta.length();
    QTPoly rhs;
    for (int j = 1; j <= m; ++j) {
        if (b[static_cast<std::size_t>(j - 1)] == 0) continue;
        int e = 0;
        for (int i = j + 1; i <= m; ++i) e += b[static_cast<std::size_t>(i - 1)];
        int zeros = r;
        std::vector<int> rest;
        if (j == m) {
            rest = b;
        } else {
            zeros = b[static_cast<std::size_t>(j)];
            rest.assign(b.begin() + j + 1, b.end());
            rest.push_back(r);
            rest.insert(rest.end(), b.begin(), b.begin() + j);
        }
        rest.back() -= 1;
        rhs += QTPoly::q(e) * brute_force_D({zeros, Composition(rest), k - 1, Variant::all, Stat::minimaj, alpha.drop_last()});
    }
    return lhs == rhs;
}

bool lemma_l36_check(int r, const Composition& beta, const Composition& alpha)
{
    if (alpha.empty() && beta.size() + r == 0) return true;
    QTPoly lhs = l36_lhs(r, beta, alpha);
    const int k = alpha.length();
    QTPoly rhs;
    const auto& b = beta.parts();
    const int m = beta.length();
    for (int i = 0; i < m; ++i) {
        if (b[static_cast<std::size_t>(i)] == 0) continue;
        std::vector<int> rot(b.begin() + i + 1, b.end());
        rot.insert(rot.end(), b.begin(), b.begin() + i + 1);
        rot.back() -= 1;
        int e = 0;
        for (int j = i + 1; j < m; ++j) e += b[static_cast<std::size_t>(j)];
        rhs += QTPoly::q(e) * brute_force_D({r, Composition(rot), k - 1, Variant::all, Stat::minimaj, alpha.drop_last()});
    }
    return lhs == rhs;
}

}  // namespace omstat
