#include "omstat/insertion.hpp"

#include "omstat/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace omstat {

namespace {

std::vector<int> effective_b(const InsertionInput& in)
{
    std::vector<int> b = in.B;
    if (in.branch_b()) b.insert(b.begin(), 0);
    return b;
}

// Values in removal order: largest first, ties resolved toward `first_u`.
std::vector<std::pair<int, bool>> removal_order(const std::vector<int>& u, const std::vector<int>& b, bool u_first)
{
    std::vector<std::pair<int, bool>> vals;  // (value, from U)
    for (int x : u) vals.emplace_back(x, true);
    for (int x : b) vals.emplace_back(x, false);
    std::stable_sort(vals.begin(), vals.end(), [u_first](const auto& a, const auto& c) {
        if (a.first != c.first) return a.first > c.first;
        return u_first ? (a.second && !c.second) : (!a.second && c.second);
    });
    return vals;
}

}  // namespace

long insertion_weight(const InsertionInput& in)
{
    auto b = effective_b(in);
    return std::accumulate(in.U.begin(), in.U.end(), 0L) + std::accumulate(b.begin(), b.end(), 0L);
}

void check_insertion_domain(const InsertionInput& in, int r, const Composition& beta, int k)
{
    if (beta.length() == 0) throw DomainError("beta must have at least one part");
    int n = beta.length();
    int ell = in.pi.k();
    Content pc{beta.drop_last(), r};
    if (!validate(in.pi, pc, ell, false))
        throw DomainError("pi does not have content " + pc.to_string());
    if (in.pi.max_letter() >= n) throw DomainError("pi contains a letter >= " + std::to_string(n));
    if (ell > k) throw DomainError("pi has more than k blocks");
    int usize = beta.last() - k + ell;
    if (usize < 0) throw DomainError("beta_n - k + l is negative");
    if (static_cast<int>(in.U.size()) != usize)
        throw DomainError("|U| must be " + std::to_string(usize));
    for (std::size_t i = 0; i < in.U.size(); ++i) {
        if (in.U[i] < 0 || in.U[i] > ell - 1) throw DomainError("U must lie in [0, l-1]");
        if (i && in.U[i - 1] >= in.U[i]) throw DomainError("U must be strictly increasing");
    }
    int bsize = k - ell - (in.branch_b() ? 1 : 0);
    if (bsize < 0) throw DomainError("multiset B has negative size");
    if (static_cast<int>(in.B.size()) != bsize)
        throw DomainError("|B| must be " + std::to_string(bsize) + (in.branch_b() ? " (branch B)" : " (branch A)"));
    for (std::size_t i = 0; i < in.B.size(); ++i) {
        if (in.B[i] < 0 || in.B[i] > ell) throw DomainError("B must lie in [0, l]");
        if (i && in.B[i - 1] > in.B[i]) throw DomainError("B must be weakly increasing");
    }
}

OMP phi_inv(const InsertionInput& in, int r, const Composition& beta, int k)
{
    check_insertion_domain(in, r, beta, k);
    const Letter n = beta.length();
    const int ell = in.pi.k();
    // slot[j] holds the (possibly extended) original block labelled j, plus the
    // singletons inserted right of it; slot ell is the far-left space.
    std::vector<std::vector<Letter>> blocks(static_cast<std::size_t>(ell));
    for (int j = 0; j < ell; ++j) blocks[static_cast<std::size_t>(j)] = in.pi.block(ell - 1 - j).elements();
    std::vector<int> singles(static_cast<std::size_t>(ell + 1), 0);
    for (auto [v, from_u] : removal_order(in.U, effective_b(in), true)) {
        if (from_u)
            blocks[static_cast<std::size_t>(v)].push_back(n);
        else
            ++singles[static_cast<std::size_t>(v)];
    }
    std::vector<std::vector<Letter>> out;
    for (int j = ell; j >= 0; --j) {
        if (j < ell) out.push_back(blocks[static_cast<std::size_t>(j)]);
        for (int s = 0; s < singles[static_cast<std::size_t>(j)]; ++s) out.push_back({n});
    }
    return OMP::from_lists(out);
}

OMP phi_dinv(const InsertionInput& in, int r, const Composition& beta, int k)
{
    check_insertion_domain(in, r, beta, k);
    const Letter n = beta.length();
    const int ell = in.pi.k();
    std::vector<int> order(static_cast<std::size_t>(ell));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return in.pi.block(a).size() > in.pi.block(b).size(); });
    std::vector<std::vector<Letter>> blocks;
    for (const auto& b : in.pi.blocks()) blocks.push_back(b.elements());
    // gap g sits left of block ell-g
    std::vector<int> gap(static_cast<std::size_t>(ell + 1), 0);
    for (auto [v, from_u] : removal_order(in.U, effective_b(in), true)) {
        if (from_u)
            blocks[static_cast<std::size_t>(order[static_cast<std::size_t>(v)])].push_back(n);
        else
            ++gap[static_cast<std::size_t>(ell - v)];
    }
    std::vector<std::vector<Letter>> out;
    for (int p = 0; p <= ell; ++p) {
        for (int s = 0; s < gap[static_cast<std::size_t>(p)]; ++s) out.push_back({n});
        if (p < ell) out.push_back(blocks[static_cast<std::size_t>(p)]);
    }
    return OMP::from_lists(out);
}

namespace {

bool is_descent(const Word& w, int p)
{
    return p >= 1 && p < static_cast<int>(w.size()) &&
           w[static_cast<std::size_t>(p - 1)] > w[static_cast<std::size_t>(p)];
}

// gap positions 0..N indexed by label
std::vector<int> maj_labels(const Word& w, const std::set<int>& stars)
{
    int len = static_cast<int>(w.size());
    std::vector<int> pos{len};
    for (int p = len - 1; p >= 1; --p)
        if (!stars.count(p) && is_descent(w, p)) pos.push_back(p);
    for (int p = 0; p < len; ++p)
        if (!stars.count(p) && !is_descent(w, p)) pos.push_back(p);
    return pos;
}

}  // namespace

OMP phi_maj(const InsertionInput& in, int r, const Composition& beta, int k)
{
    check_insertion_domain(in, r, beta, k);
    const Letter n = beta.length();
    StarredWord sw = descent_starred(in.pi);
    std::vector<int> uplus;
    for (int u : in.U) uplus.push_back(u + 1);
    for (auto [v, from_u] : removal_order(uplus, effective_b(in), false)) {
        auto labels = maj_labels(sw.word, sw.stars);
        if (v >= static_cast<int>(labels.size())) throw DomainError("insertion label out of range");
        int p0 = labels[static_cast<std::size_t>(v)];
        sw.word.insert(sw.word.begin() + p0, n);
        std::set<int> stars;
        for (int s : sw.stars) {
            if (s < p0) {
                stars.insert(s);
                continue;
            }
            int t = s + 1;
            do --t;
            while (t > 0 && !is_descent(sw.word, t));
            stars.insert(t);
        }
        if (from_u) {
            int t = static_cast<int>(sw.word.size()) - 1;
            while (t > 0 && !is_descent(sw.word, t)) --t;
            stars.insert(t);
        }
        sw.stars = std::move(stars);
    }
    return from_starred(sw);
}

void for_each_insertion_input(const Composition& beta, int r, int k, int ell,
                              const std::function<void(const InsertionInput&)>& visit)
{
    if (beta.length() == 0 || ell < 0 || ell > k) return;
    int usize = beta.last() - k + ell;
    if (usize < 0 || usize > ell) return;
    std::vector<std::vector<int>> us;
    {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == usize) {
                us.push_back(cur);
                return;
            }
            for (int x = from; x < ell; ++x) {
                cur.push_back(x);
                rec(x + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    auto multisets = [ell](int size) {
        std::vector<std::vector<int>> out;
        if (size < 0) return out;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == size) {
                out.push_back(cur);
                return;
            }
            for (int x = from; x <= ell; ++x) {
                cur.push_back(x);
                rec(x);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };
    auto bs_a = multisets(k - ell);
    auto bs_b = multisets(k - ell - 1);
    for (const OMP& pi : enumerate_omps(Content{beta.drop_last(), r}, ell, false)) {
        const auto& bs = pi.tail_positive() ? bs_a : bs_b;
        for (const auto& u : us)
            for (const auto& b : bs) visit(InsertionInput{pi, u, b});
    }
}

std::vector<InsertionInput> enumerate_insertion_domain(const Composition& beta, int r, int k, int ell)
{
    std::vector<InsertionInput> out;
    for_each_insertion_input(beta, r, k, ell, [&](const InsertionInput& in) { out.push_back(in); });
    return out;
}

}  // namespace omstat
