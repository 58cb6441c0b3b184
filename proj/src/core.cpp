#include "omstat/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace omstat {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition part must be non-negative");
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::strong() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Composition Composition::drop_last() const
{
    if (parts_.empty()) throw std::invalid_argument("drop_last of empty composition");
    return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

std::string Composition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<int> Content::multiplicities() const
{
    std::vector<int> m{r};
    m.insert(m.end(), beta.parts().begin(), beta.parts().end());
    return m;
}

std::string Content::to_string() const
{
    return "r=" + std::to_string(r) + ";beta=" + beta.to_string();
}

Content Content::from_multiplicities(const std::vector<int>& mult)
{
    if (mult.empty()) return Content{};
    return Content{Composition(std::vector<int>(mult.begin() + 1, mult.end())), mult[0]};
}

Block::Block(std::vector<Letter> elems) : elems_(std::move(elems))
{
    if (elems_.empty()) throw std::invalid_argument("empty block");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 0) throw std::invalid_argument("negative letter");
        if (i && elems_[i - 1] >= elems_[i])
            throw std::invalid_argument("block must be strictly increasing");
    }
}

bool Block::contains(Letter x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

OrderedMultisetPartition::OrderedMultisetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

OrderedMultisetPartition OrderedMultisetPartition::from_lists(const std::vector<std::vector<Letter>>& blocks)
{
    std::vector<Block> bs;
    bs.reserve(blocks.size());
    for (const auto& b : blocks) bs.emplace_back(b);
    return OrderedMultisetPartition(std::move(bs));
}

int OrderedMultisetPartition::total_size() const
{
    int s = 0;
    for (const auto& b : blocks_) s += b.size();
    return s;
}

Composition OrderedMultisetPartition::shape() const
{
    std::vector<int> a;
    for (const auto& b : blocks_) a.push_back(b.size());
    return Composition(a);
}

Letter OrderedMultisetPartition::max_letter() const
{
    Letter m = -1;
    for (const auto& b : blocks_) m = std::max(m, b.max());
    return m;
}

std::vector<int> OrderedMultisetPartition::letter_counts() const
{
    std::vector<int> c(static_cast<std::size_t>(max_letter() + 1), 0);
    for (const auto& b : blocks_)
        for (Letter x : b.elements()) ++c[static_cast<std::size_t>(x)];
    return c;
}

bool OrderedMultisetPartition::tail_positive() const
{
    return blocks_.empty() || !blocks_.back().contains(0);
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
{
}

bool validate(const OMP& omp, const Content& content, int k, bool tail_positive)
{
    if (omp.k() != k) return false;
    if (tail_positive && !omp.tail_positive()) return false;
    auto want = content.multiplicities();
    auto have = omp.letter_counts();
    // trailing zero multiplicities are irrelevant
    while (!want.empty() && want.back() == 0) want.pop_back();
    while (!have.empty() && have.back() == 0) have.pop_back();
    return want == have;
}

namespace {

struct Enumerator {
    std::vector<int> mult;
    bool tail_positive;
    const std::vector<int>* shape = nullptr;
    const std::function<void(const OMP&)>* visit;
    std::vector<std::vector<Letter>> cur;

    void run(int blocks_left, int remaining)
    {
        if (blocks_left == 0) {
            if (remaining) return;
            if (tail_positive && !cur.empty() && cur.back().front() == 0) return;
            (*visit)(OMP::from_lists(cur));
            return;
        }
        if (remaining < blocks_left) return;
        std::vector<Letter> avail;
        for (std::size_t x = 0; x < mult.size(); ++x) {
            if (mult[x] > blocks_left) return;
            if (mult[x] > 0) avail.push_back(static_cast<Letter>(x));
        }
        int a = static_cast<int>(avail.size());
        int want = shape ? (*shape)[shape->size() - static_cast<std::size_t>(blocks_left)] : -1;
        for (unsigned mask = 1; mask < (1u << a); ++mask) {
            int sz = __builtin_popcount(mask);
            if (want >= 0 && sz != want) continue;
            std::vector<Letter> b;
            for (int i = 0; i < a; ++i)
                if (mask & (1u << i)) b.push_back(avail[static_cast<std::size_t>(i)]);
            for (Letter x : b) --mult[static_cast<std::size_t>(x)];
            cur.push_back(std::move(b));
            run(blocks_left - 1, remaining - sz);
            for (Letter x : cur.back()) ++mult[static_cast<std::size_t>(x)];
            cur.pop_back();
        }
    }
};

}  // namespace

void for_each_omp(const Content& content, int k, bool tail_positive,
                  const std::function<void(const OMP&)>& visit)
{
    if (k < 0) return;
    Enumerator e{content.multiplicities(), tail_positive, nullptr, &visit, {}};
    e.run(k, content.total());
}

void for_each_omp_shape(const Content& content, const Composition& shape, bool tail_positive,
                        const std::function<void(const OMP&)>& visit)
{
    if (shape.size() != content.total() || !shape.strong()) return;
    Enumerator e{content.multiplicities(), tail_positive, &shape.parts(), &visit, {}};
    e.run(shape.length(), content.total());
}

std::vector<OMP> enumerate_omps(const Content& content, int k, bool tail_positive)
{
    std::vector<std::pair<std::string, OMP>> keyed;
    for_each_omp(content, k, tail_positive, [&](const OMP& p) { keyed.emplace_back(serialize(p), p); });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<OMP> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

std::string serialize(const OMP& omp)
{
    std::string s;
    bool any_comma = false, multi_digit = false;
    for (const auto& b : omp.blocks()) {
        if (b.size() > 1) any_comma = true;
        if (b.max() >= 10) multi_digit = true;
    }
    for (int i = 0; i < omp.k(); ++i) {
        if (i) s += '/';
        const auto& e = omp.block(i).elements();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(e[j]);
        }
        // keep the text in comma mode so a multi-digit singleton is not read digit by digit
        if (i == 0 && !any_comma && multi_digit) s += ',';
    }
    return s;
}

OMP parse_omp(std::string_view text)
{
    std::string t;
    std::vector<std::size_t> pos;  // original offset of each kept char
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        t += text[i];
        pos.push_back(i);
    }
    if (t.empty()) return OMP{};
    auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : text.size(); };
    bool comma_mode = t.find(',') != std::string::npos;

    std::vector<std::vector<Letter>> blocks;
    std::size_t i = 0;
    while (true) {
        std::size_t start = i;
        std::vector<Letter> b;
        while (i < t.size() && t[i] != '/') {
            char c = t[i];
            if (comma_mode) {
                if (c == ',') {
                    if (i == start || t[i - 1] == ',') throw ParseError("empty element", at(i));
                    ++i;
                    continue;
                }
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(std::string("unexpected character '") + c + "'", at(i));
                long v = 0;
                std::size_t s = i;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
                    v = v * 10 + (t[i] - '0');
                    if (v > 1000000) throw ParseError("letter too large", at(s));
                    ++i;
                }
                if (i < t.size() && t[i] != ',' && t[i] != '/')
                    throw ParseError(std::string("unexpected character '") + t[i] + "'", at(i));
                if (std::find(b.begin(), b.end(), v) != b.end())
                    throw ParseError("repeated element in block", at(s));
                b.push_back(static_cast<Letter>(v));
            } else {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(std::string("unexpected character '") + c + "'", at(i));
                Letter v = c - '0';
                if (std::find(b.begin(), b.end(), v) != b.end())
                    throw ParseError("repeated element in block", at(i));
                b.push_back(v);
                ++i;
            }
        }
        if (b.empty()) throw ParseError("empty block", at(start));
        std::sort(b.begin(), b.end());
        blocks.push_back(std::move(b));
        if (i == t.size()) break;
        ++i;  // skip '/'
        if (i == t.size()) throw ParseError("empty block", at(i));
    }
    return OMP::from_lists(blocks);
}

std::vector<Composition> strong_compositions(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> weak_compositions(int n, int len)
{
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 0) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        for (int p = 0; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p, slots - 1);
            cur.pop_back();
        }
    };
    rec(n, len);
    return out;
}

}  // namespace omstat
