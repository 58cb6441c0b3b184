#include "omstat/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace omstat {

std::vector<Word> SegmentedWord::segments() const
{
    std::vector<Word> out;
    std::size_t at = 0;
    for (int p : shape.parts()) {
        out.emplace_back(word.begin() + static_cast<long>(at), word.begin() + static_cast<long>(at + p));
        at += static_cast<std::size_t>(p);
    }
    return out;
}

std::vector<InversionPair> inversion_pairs(const OMP& omp)
{
    std::vector<InversionPair> out;
    for (int j = 0; j < omp.k(); ++j) {
        Letter b = omp.block(j).min();
        for (int i = 0; i < j; ++i)
            for (Letter a : omp.block(i).elements())
                if (a > b) out.push_back({a, b, i, j});
    }
    return out;
}

long inv(const OMP& omp)
{
    long s = 0;
    for (int j = 0; j < omp.k(); ++j) {
        Letter b = omp.block(j).min();
        for (int i = 0; i < j; ++i) {
            const auto& e = omp.block(i).elements();
            s += e.end() - std::upper_bound(e.begin(), e.end(), b);
        }
    }
    return s;
}

std::vector<DinvTriple> dinv_triples(const OMP& omp)
{
    std::vector<DinvTriple> out;
    for (int i = 0; i < omp.k(); ++i) {
        const Block& bi = omp.block(i);
        for (int j = i + 1; j < omp.k(); ++j) {
            const Block& bj = omp.block(j);
            for (int h = 1; h <= bi.size(); ++h) {
                if (h <= bj.size() && bi.nth(h) > bj.nth(h)) out.push_back({h, i, j, false});
                if (h + 1 <= bj.size() && bi.nth(h) < bj.nth(h + 1)) out.push_back({h, i, j, true});
            }
        }
    }
    return out;
}

long dinv(const OMP& omp) { return static_cast<long>(dinv_triples(omp).size()); }

Word sigma_word(const OMP& omp)
{
    Word w;
    for (const auto& b : omp.blocks()) w.insert(w.end(), b.elements().rbegin(), b.elements().rend());
    return w;
}

Word ind_word(const OMP& omp)
{
    Word w;
    for (int i = 0; i < omp.k(); ++i) w.insert(w.end(), static_cast<std::size_t>(omp.block(i).size()), i);
    return w;
}

long maj(const OMP& omp)
{
    Word s = sigma_word(omp), ind = ind_word(omp);
    long m = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) m += ind[i + 1];
    return m;
}

long maj_of_word(const Word& w)
{
    long m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m += static_cast<long>(i + 1);
    return m;
}

SegmentedWord miniword(const OMP& omp)
{
    int k = omp.k();
    std::vector<Word> segs(static_cast<std::size_t>(k));
    if (k == 0) return {};
    segs.back() = omp.blocks().back().elements();
    for (int i = k - 2; i >= 0; --i) {
        Letter f = segs[static_cast<std::size_t>(i + 1)].front();
        const auto& e = omp.block(i).elements();
        auto split = std::upper_bound(e.begin(), e.end(), f);
        Word s(split, e.end());
        s.insert(s.end(), e.begin(), split);
        segs[static_cast<std::size_t>(i)] = std::move(s);
    }
    SegmentedWord out;
    std::vector<int> shape;
    for (auto& s : segs) {
        shape.push_back(static_cast<int>(s.size()));
        out.word.insert(out.word.end(), s.begin(), s.end());
    }
    out.shape = Composition(shape);
    return out;
}

long minimaj(const OMP& omp) { return maj_of_word(miniword(omp).word); }

StarredWord descent_starred(const OMP& omp)
{
    StarredWord sw;
    sw.word = sigma_word(omp);
    int pos = 0;
    for (const auto& b : omp.blocks()) {
        for (int h = 1; h < b.size(); ++h) sw.stars.insert(pos + h);
        pos += b.size();
    }
    return sw;
}

OMP from_starred(const StarredWord& sw)
{
    std::vector<std::vector<Letter>> blocks;
    std::vector<Letter> cur;
    int n = static_cast<int>(sw.word.size());
    for (int s : sw.stars) {
        if (s < 1 || s >= n) throw std::invalid_argument("star outside the word");
        if (sw.word[static_cast<std::size_t>(s - 1)] <= sw.word[static_cast<std::size_t>(s)])
            throw std::invalid_argument("star on a non-descent");
    }
    for (int i = 0; i < n; ++i) {
        cur.push_back(sw.word[static_cast<std::size_t>(i)]);
        if (i == n - 1 || !sw.stars.count(i + 1)) {
            std::reverse(cur.begin(), cur.end());
            blocks.push_back(cur);
            cur.clear();
        }
    }
    return OMP::from_lists(blocks);
}

Word cyclic_decrement(const Word& w, int modulus)
{
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (x < 0 || x >= modulus) throw std::invalid_argument("letter out of range for modulus");
        out.push_back((x + modulus - 1) % modulus);
    }
    return out;
}

OMP cyclic_decrement(const OMP& omp, int modulus)
{
    std::vector<std::vector<Letter>> blocks;
    for (const auto& b : omp.blocks()) {
        Word w = cyclic_decrement(b.elements(), modulus);
        std::sort(w.begin(), w.end());
        blocks.push_back(std::move(w));
    }
    return OMP::from_lists(blocks);
}

SegmentedWord cyclic_decrement(const SegmentedWord& w, int modulus)
{
    return {cyclic_decrement(w.word, modulus), w.shape};
}

std::string word_to_string(const Word& w)
{
    bool small = std::all_of(w.begin(), w.end(), [](Letter x) { return x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace omstat
