#include "dyckcat/snake.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dyckcat {

GridEdge::GridEdge(GridPoint p, GridPoint q) {
    if (q < p) std::swap(p, q);
    a = p;
    b = q;
}

SnakeGraph::SnakeGraph(std::vector<Dirn> steps) : steps_(std::move(steps)) {
    GridPoint at{0, 0};
    origins_.push_back(at);
    for (Dirn d : steps_) {
        if (d == Dirn::R)
            ++at.x;
        else
            ++at.y;
        origins_.push_back(at);
    }
}

SnakeGraph::SnakeGraph(std::vector<Dirn> steps, std::vector<GridPoint> origins)
    : steps_(std::move(steps)), origins_(std::move(origins)) {
    if (origins_.empty() || steps_.size() + 1 != origins_.size())
        throw invalid_input_error("snake steps and tiles disagree");
}

Dirn SnakeGraph::step(int t) const {
    if (t < 1 || t > tiles() - 1) throw invalid_input_error("snake step index out of range");
    return steps_[t - 1];
}

GridPoint SnakeGraph::tile_origin(int t) const {
    if (t < 1 || t > tiles()) throw invalid_input_error("tile index out of range");
    return origins_[t - 1];
}

std::vector<GridEdge> SnakeGraph::tile_edges(int t) const {
    GridPoint o = tile_origin(t);
    GridPoint ne{o.x + 1, o.y + 1};
    return {GridEdge({o.x, o.y}, {o.x + 1, o.y}), GridEdge({o.x, o.y}, {o.x, o.y + 1}),
            GridEdge({o.x + 1, o.y}, ne), GridEdge({o.x, o.y + 1}, ne)};
}

GridEdge SnakeGraph::shared_edge(int t) const {
    GridPoint o = tile_origin(t);
    if (step(t) == Dirn::R)
        return GridEdge({o.x + 1, o.y}, {o.x + 1, o.y + 1});  // east edge of tile t
    return GridEdge({o.x, o.y + 1}, {o.x + 1, o.y + 1});      // north edge of tile t
}

std::vector<GridEdge> SnakeGraph::all_edges() const {
    std::set<GridEdge> es;
    for (int t = 1; t <= tiles(); ++t)
        for (const GridEdge& e : tile_edges(t)) es.insert(e);
    return {es.begin(), es.end()};
}

std::vector<GridPoint> SnakeGraph::all_vertices() const {
    std::set<GridPoint> vs;
    for (const GridEdge& e : all_edges()) {
        vs.insert(e.a);
        vs.insert(e.b);
    }
    return {vs.begin(), vs.end()};
}

bool SnakeGraph::geometry_valid() const {
    for (int i = 1; i <= tiles(); ++i)
        for (int j = i + 1; j <= tiles(); ++j) {
            GridPoint a = origins_[i - 1], b = origins_[j - 1];
            int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
            int shared_edges = 0, shared_pts = 0;
            if ((dx == 1 && dy == 0) || (dx == 0 && dy == 1)) shared_edges = 1;
            else if (dx == 1 && dy == 1) shared_pts = 1;
            else if (dx == 0 && dy == 0) return false;
            if (j == i + 1 && shared_edges != 1) return false;
            if (j >= i + 2 && shared_edges != 0) return false;
            if (j >= i + 3 && shared_pts != 0) return false;
        }
    return true;
}

SnakeGraph snake_from_subchain(const AdmissibleSubchain& c) {
    c.require_valid();
    int d = c.n - 1;
    std::set<int> mem;
    for (int x : c.members()) mem.insert(x);
    std::vector<Dirn> steps;
    if (d >= 2) {
        steps.push_back(Dirn::R);
        for (int i = 2; i <= d - 1; ++i) {
            Dirn prev = steps.back();
            bool straight = mem.count(i) > 0;
            steps.push_back(straight ? prev : (prev == Dirn::R ? Dirn::U : Dirn::R));
        }
    }
    return SnakeGraph(std::move(steps));
}

SnakeGraph sub_snake(const SnakeGraph& g, int l, int r) {
    if (l < 1 || r > g.tiles() || l > r) throw invalid_input_error("sub-snake range out of bounds");
    std::vector<Dirn> steps;
    std::vector<GridPoint> origins;
    for (int t = l; t <= r; ++t) origins.push_back(g.tile_origin(t));
    for (int t = l; t <= r - 1; ++t) steps.push_back(g.step(t));
    return SnakeGraph(std::move(steps), std::move(origins));
}

namespace {

void extend_matchings(const std::vector<GridEdge>& edges, const std::vector<GridPoint>& verts,
                      std::map<GridPoint, int>& vid, std::vector<bool>& used, size_t covered,
                      size_t first, PerfectMatching& cur, std::vector<PerfectMatching>& out) {
    if (covered == verts.size()) {
        out.push_back(cur);
        return;
    }
    // Branch on the lowest uncovered vertex to keep the tree small.
    size_t pivot = 0;
    while (pivot < verts.size() && used[pivot]) ++pivot;
    for (size_t i = first; i < edges.size(); ++i) {
        int ia = vid[edges[i].a], ib = vid[edges[i].b];
        if (static_cast<size_t>(std::min(ia, ib)) != pivot) continue;
        if (used[ia] || used[ib]) continue;
        used[ia] = used[ib] = true;
        cur.push_back(edges[i]);
        extend_matchings(edges, verts, vid, used, covered + 2, 0, cur, out);
        cur.pop_back();
        used[ia] = used[ib] = false;
    }
}

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
    std::vector<GridEdge> edges = g.all_edges();
    std::vector<GridPoint> verts = g.all_vertices();
    std::map<GridPoint, int> vid;
    for (size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = static_cast<int>(i);
    std::vector<bool> used(verts.size(), false);
    PerfectMatching cur;
    std::vector<PerfectMatching> out;
    extend_matchings(edges, verts, vid, used, 0, 0, cur, out);
    for (PerfectMatching& p : out) std::sort(p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long count_matchings_transfer(const SnakeGraph& g) {
    // f = matchings of the prefix; h = matchings of the prefix minus the two
    // endpoints of its open interface edge.
    unsigned long long f = 2, h = 1;
    for (int t = 2; t <= g.tiles(); ++t) {
        unsigned long long nf = f + h;
        unsigned long long nh;
        if (t == g.tiles())
            nh = 0;  // unused
        else
            nh = (g.step(t - 1) == g.step(t)) ? f : h;
        f = nf;
        h = nh;
    }
    return g.tiles() == 1 ? 2 : f;
}

std::string HLetter::str() const {
    switch (type) {
        case Type::E: return "E";
        case Type::U1: return "U1^" + std::to_string(i);
        case Type::U2: return "U2^" + std::to_string(i);
    }
    throw internal_error("bad HLetter");
}

bool HLetter::operator<(const HLetter& o) const {
    if (type != o.type) return static_cast<int>(type) < static_cast<int>(o.type);
    return type != Type::E && i < o.i;
}

std::string HWord::str() const {
    if (letters.empty()) return "";
    std::ostringstream os;
    for (size_t t = 0; t < letters.size(); ++t) {
        if (t > 0) os << '.';
        os << letters[t].str();
    }
    return os.str();
}

bool HWord::operator<(const HWord& o) const {
    if (n != o.n) return n < o.n;
    return letters < o.letters;
}

DyckPath letter_path(const HLetter& sym, int n) {
    if (n < 1) throw invalid_input_error("n must be positive");
    std::string s;
    switch (sym.type) {
        case HLetter::Type::E:
            s = std::string(n, 'U') + std::string(n, 'D');
            break;
        case HLetter::Type::U1: {
            if (sym.i < 1 || sym.i > n - 2) throw invalid_input_error("letter superscript out of range");
            s = std::string(sym.i + 1, 'U') + std::string(sym.i + 1, 'D');
            for (int k = 0; k < n - sym.i - 1; ++k) s += "UD";
            break;
        }
        case HLetter::Type::U2: {
            if (sym.i < 1 || sym.i > n - 2) throw invalid_input_error("letter superscript out of range");
            for (int k = 0; k < sym.i; ++k) s += "UD";
            s += std::string(n - sym.i, 'U') + std::string(n - sym.i, 'D');
            break;
        }
    }
    return DyckPath::parse(s);
}

namespace {

// Letter at position t of a matching of tiles lo..hi: E when the junction
// edge e_t is used, otherwise U1/U2 according to the side whose edges cover
// the endpoints of e_t.
HLetter detect_letter(const SnakeGraph& g, int lo, int hi, const std::set<GridEdge>& matched,
                      const std::map<GridPoint, GridEdge>& cover, int t) {
    GridEdge et = g.shared_edge(t);
    if (matched.count(et)) return HLetter{HLetter::Type::E, 0};

    auto side_of = [&](const GridEdge& e) {
        // Which tiles of the range contain this edge?
        int kmin = 0, kmax = 0;
        for (int k = lo; k <= hi; ++k) {
            const auto te = g.tile_edges(k);
            if (std::find(te.begin(), te.end(), e) != te.end()) {
                if (kmin == 0) kmin = k;
                kmax = k;
            }
        }
        if (kmin == 0) throw internal_error("covering edge outside the snake range");
        if (kmax <= t) return HLetter::Type::U1;
        if (kmin >= t + 1) return HLetter::Type::U2;
        throw internal_error("covering edge straddles its own junction");
    };

    auto ca = cover.find(et.a);
    auto cb = cover.find(et.b);
    if (ca == cover.end() || cb == cover.end()) throw internal_error("matching misses a junction vertex");
    HLetter::Type sa = side_of(ca->second);
    HLetter::Type sb = side_of(cb->second);
    if (sa != sb) throw internal_error("junction endpoints covered from opposite sides");
    return HLetter{sa, t};
}

HWord word_for_range(const SnakeGraph& g, int lo, int hi, int n, const PerfectMatching& p) {
    std::set<GridEdge> matched(p.begin(), p.end());
    std::map<GridPoint, GridEdge> cover;
    for (const GridEdge& e : p) {
        cover.emplace(e.a, e);
        cover.emplace(e.b, e);
    }
    HWord w;
    w.n = n;
    w.letters.assign(std::max(0, n - 2), HLetter{HLetter::Type::E, 0});
    int first = std::max(1, lo - 1);
    int last = std::min(n - 2, hi);
    for (int t = first; t <= last; ++t)
        w.letters[t - 1] = detect_letter(g, lo, hi, matched, cover, t);
    return w;
}

void require_matching_of(const PerfectMatching& p, const SnakeGraph& g) {
    std::set<GridEdge> legal;
    for (const GridEdge& e : g.all_edges()) legal.insert(e);
    std::set<GridPoint> covered;
    for (const GridEdge& e : p) {
        if (!legal.count(e)) throw invalid_input_error("edge not in the snake graph");
        if (!covered.insert(e.a).second || !covered.insert(e.b).second)
            throw invalid_input_error("vertex covered twice");
    }
    if (covered.size() != g.all_vertices().size())
        throw invalid_input_error("not a perfect matching of the snake graph");
}

}  // namespace

HWord word_from_matching(const PerfectMatching& p, const SnakeGraph& g, const AdmissibleSubchain& c) {
    c.require_valid();
    if (g.tiles() != c.n - 1) throw invalid_input_error("snake and subchain disagree on n");
    require_matching_of(p, g);
    return word_for_range(g, 1, g.tiles(), c.n, p);
}

std::vector<HWord> words_X_C(const AdmissibleSubchain& c) {
    c.require_valid();
    SnakeGraph g = snake_from_subchain(c);
    std::vector<HWord> out;
    for (const PerfectMatching& p : enumerate_matchings(g))
        out.push_back(word_for_range(g, 1, g.tiles(), c.n, p));
    return out;
}

std::vector<HWord> restricted_words(const PeakPath& y, const AdmissibleSubchain& c) {
    c.require_valid();
    if (y.n != c.n) throw invalid_input_error("peak path and subchain disagree on n");
    SnakeGraph g = snake_from_subchain(c);
    SnakeGraph sub = sub_snake(g, y.l, y.r);
    std::vector<HWord> out;
    for (const PerfectMatching& p : enumerate_matchings(sub))
        out.push_back(word_for_range(g, y.l, y.r, c.n, p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace dyckcat
