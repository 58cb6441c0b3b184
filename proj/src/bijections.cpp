#include "omstat/bijections.hpp"

#include "omstat/statistics.hpp"

#include <list>
#include <stdexcept>

namespace omstat {

namespace {

void require_nonempty(const OMP& pi)
{
    if (pi.empty()) throw DomainError("partition must have at least one block");
}

}  // namespace

DecoratedParkingFunction gamma_dinv(const OMP& pi)
{
    require_nonempty(pi);
    DecoratedParkingFunction d;
    d.kind = DecorationKind::rise;
    int col = 0;
    for (int i = pi.k() - 1; i >= 0; --i) {
        const Block& b = pi.block(i);
        for (int h = 0; h < b.size(); ++h) {
            d.pf.path.cols.push_back(col);
            d.pf.labels.push_back(b.elements()[static_cast<std::size_t>(h)]);
            if (h) d.marks.insert(d.pf.rows());
        }
        col += b.size();
    }
    return d;
}

DecoratedParkingFunction gamma_maj(const OMP& pi)
{
    require_nonempty(pi);
    StarredWord sw = descent_starred(pi);
    const Word& s = sw.word;
    DecoratedParkingFunction d;
    d.kind = DecorationKind::rise;
    int n = static_cast<int>(s.size());
    int col = 0;
    for (int i = n; i >= 1; --i) {
        Letter x = s[static_cast<std::size_t>(i - 1)];
        if (i < n && x <= s[static_cast<std::size_t>(i)]) ++col;
        d.pf.path.cols.push_back(col);
        d.pf.labels.push_back(x);
        if (sw.stars.count(i)) d.marks.insert(d.pf.rows());
    }
    return d;
}

DecoratedParkingFunction gamma_inv(const OMP& pi)
{
    require_nonempty(pi);
    DecoratedParkingFunction d;
    d.kind = DecorationKind::valley;
    for (int i = pi.k() - 1; i >= 0; --i) {
        const auto& e = pi.block(i).elements();
        for (std::size_t h = 0; h < e.size(); ++h) {
            d.pf.path.cols.push_back(d.pf.rows());
            d.pf.labels.push_back(e[h]);
            if (h) d.marks.insert(d.pf.rows());
        }
    }
    return d;
}

namespace {

// A lattice path kept as a list of steps so rows can be spliced in.
struct Row {
    Letter label;
    bool star;
    int run;
};

struct Step {
    bool north;
    Row row;
};

using Path = std::list<Step>;

DecoratedParkingFunction to_decorated(const Path& path)
{
    DecoratedParkingFunction d;
    d.kind = DecorationKind::valley;
    int col = 0;
    for (const Step& s : path) {
        if (!s.north) {
            ++col;
            continue;
        }
        d.pf.path.cols.push_back(col);
        d.pf.labels.push_back(s.row.label);
        if (s.row.star) d.marks.insert(d.pf.rows());
    }
    return d;
}

// Inserts (NE)^|w| before pos; returns iterators to the new north steps.
std::vector<Path::iterator> insert_staircase(Path& path, Path::iterator pos, const Word& w, int run, bool star_first)
{
    std::vector<Path::iterator> rows;
    for (std::size_t h = 0; h < w.size(); ++h) {
        rows.push_back(path.insert(pos, Step{true, Row{w[h], h > 0 || star_first, run}}));
        path.insert(pos, Step{false, {}});
    }
    return rows;
}

std::vector<DecoratedParkingFunction> run_minimaj(const OMP& pi, bool keep_stages)
{
    require_nonempty(pi);
    auto segs = miniword(pi).segments();
    const int K = static_cast<int>(segs.size());
    std::vector<DecoratedParkingFunction> stages;
    Path path;
    int run = 0;
    insert_staircase(path, path.end(), segs.back(), 0, false);
    Path::iterator cursor = path.end();
    std::vector<Path::iterator> qrows;
    Path::iterator plast{};
    bool fresh = false;
    if (keep_stages) stages.push_back(to_decorated(path));

    for (int si = K - 2; si >= 0; --si) {
        Letter f = segs[static_cast<std::size_t>(si + 1)].front();
        Word P, Q;
        for (Letter x : segs[static_cast<std::size_t>(si)]) (x > f ? P : Q).push_back(x);
        if (P.empty()) {
            // a whole block inside the current run
            if (fresh) {
                Path::iterator anchor = path.end();
                for (auto it : qrows)
                    if (it->row.label < Q.front()) anchor = it;
                if (anchor != path.end())
                    cursor = std::next(anchor);
                else
                    cursor = std::next(plast, 2);
                fresh = false;
            }
            insert_staircase(path, cursor, Q, run, false);
        } else {
            // topmost row of the current run below P's first letter
            Path::iterator pivot = path.end();
            for (auto it = path.begin(); it != path.end(); ++it)
                if (it->north && it->row.run == run && it->row.label < P.front()) pivot = it;
            if (pivot == path.end()) throw std::logic_error("no pivot row for a miniword segment");
            Path::iterator east = std::next(pivot);
            auto prow = insert_staircase(path, east, P, run + 1, false);
            qrows = insert_staircase(path, std::next(east), Q, run, true);
            plast = prow.back();
            ++run;
            fresh = true;
        }
        if (keep_stages) stages.push_back(to_decorated(path));
    }
    if (!keep_stages) stages.push_back(to_decorated(path));
    return stages;
}

}  // namespace

DecoratedParkingFunction gamma_minimaj(const OMP& pi) { return run_minimaj(pi, false).back(); }

std::vector<DecoratedParkingFunction> gamma_minimaj_stages(const OMP& pi) { return run_minimaj(pi, true); }

}  // namespace omstat
