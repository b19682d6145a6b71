/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/graphs.hh>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::vector;

using namespace gdm;

struct Graph::Data
{
    vector<vector<Vertex>> adj;
    vector<string> names;
    int m = 0;
};

Graph::Graph() :
    _data(std::make_shared<const Data>())
{
}

auto Graph::order() const -> int
{
    return static_cast<int>(_data->adj.size());
}

auto Graph::size() const -> int
{
    return _data->m;
}

auto Graph::neighbors(Vertex v) const -> span<const Vertex>
{
    return _data->adj.at(static_cast<std::size_t>(v));
}

auto Graph::degree(Vertex v) const -> int
{
    return static_cast<int>(neighbors(v).size());
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
}

auto Graph::name(Vertex v) const -> const string &
{
    return _data->names.at(static_cast<std::size_t>(v));
}

auto Graph::names() const -> const vector<string> &
{
    return _data->names;
}

auto Graph::find(const string & name) const -> optional<Vertex>
{
    for (Vertex v = 0; v < order(); ++v)
        if (_data->names[static_cast<std::size_t>(v)] == name)
            return v;
    return nullopt;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto gdm::from_edges(int n, span<const Edge> edges, vector<string> names) -> Graph
{
    if (n < 0)
        throw FormatError("negative vertex count");
    if (! names.empty() && names.size() != static_cast<std::size_t>(n))
        throw FormatError("name list length does not match vertex count");

    auto data = std::make_shared<Graph::Data>();
    data->adj.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw FormatError("loop at vertex " + std::to_string(u));
        data->adj[static_cast<std::size_t>(u)].push_back(v);
        data->adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto & a : data->adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        data->m += static_cast<int>(a.size());
    }
    data->m /= 2;

    if (names.empty())
        for (int v = 0; v < n; ++v)
            names.push_back("v" + std::to_string(v));
    std::set<string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw FormatError("duplicate vertex names");
    data->names = std::move(names);

    Graph g;
    g._data = std::move(data);
    return g;
}

namespace
{
    auto xy_names(int nx, int ny) -> vector<string>
    {
        vector<string> names;
        for (int i = 0; i < nx; ++i)
            names.push_back("x_" + std::to_string(i));
        for (int i = 0; i < ny; ++i)
            names.push_back("y_" + std::to_string(i));
        return names;
    }

    auto gp_edges(int n, int k) -> vector<Edge>
    {
        vector<Edge> e;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(n + i, n + (i + k) % n);
            e.emplace_back(i, n + i);
        }
        return e;
    }
}

auto gdm::gp(int n, int k) -> Graph
{
    if (k < 1 || 2 * k >= n)
        throw DomainError("GP(" + std::to_string(n) + "," + std::to_string(k) + ") needs 1 <= k < n/2");
    auto e = gp_edges(n, k);
    return from_edges(2 * n, e, xy_names(n, n));
}

auto gdm::builtin(const string & name) -> Graph
{
    if (name == "k33") {
        vector<Edge> e;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b)
                e.emplace_back(a, b);
        return from_edges(6, e, {"a_0", "a_1", "a_2", "b_0", "b_1", "b_2"});
    }
    if (name == "k4") {
        vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        return from_edges(4, e);
    }
    if (name == "q3") {
        vector<Edge> e;
        for (int v = 0; v < 8; ++v)
            for (int b = 0; b < 3; ++b)
                if (v < (v ^ (1 << b)))
                    e.emplace_back(v, v ^ (1 << b));
        return from_edges(8, e);
    }
    if (name == "tietze") {
        // x_0..x_8 then y_0..y_2
        auto y = [](int j) { return 9 + j; };
        vector<Edge> e;
        for (int i = 0; i < 9; ++i)
            e.emplace_back(i, (i + 1) % 9);
        e.insert(e.end(), {{y(0), y(1)}, {y(1), y(2)}, {y(2), y(0)}});
        e.insert(e.end(), {{0, y(0)}, {3, y(1)}, {6, y(2)}});
        e.insert(e.end(), {{1, 5}, {2, 7}, {4, 8}});
        return from_edges(12, e, xy_names(9, 3));
    }
    if (name == "x12") {
        // x_0..x_7 then y_0..y_3
        auto y = [](int j) { return 8 + j; };
        vector<Edge> e;
        for (int i = 0; i < 8; ++i)
            e.emplace_back(i, (i + 1) % 8);
        e.insert(e.end(), {{1, y(0)}, {2, y(0)}, {3, y(1)}, {4, y(1)}, {5, y(2)}, {6, y(2)}, {7, y(3)}, {0, y(3)}});
        e.insert(e.end(), {{y(0), y(2)}, {y(1), y(3)}});
        return from_edges(12, e, xy_names(8, 4));
    }
    throw DomainError("unknown builtin graph '" + name + "'");
}

auto gdm::disjoint_union(const Graph & g, int t) -> Graph
{
    if (t < 1)
        throw DomainError("disjoint union needs t >= 1");
    if (t == 1)
        return g;
    int n = g.order();
    vector<Edge> e;
    vector<string> names;
    auto base = g.edges();
    for (int j = 0; j < t; ++j) {
        for (auto [u, v] : base)
            e.emplace_back(j * n + u, j * n + v);
        for (int v = 0; v < n; ++v)
            names.push_back(g.name(v) + "^" + std::to_string(j + 1));
    }
    return from_edges(n * t, e, std::move(names));
}

auto gdm::regular_valency(const Graph & g) -> optional<int>
{
    if (g.order() == 0)
        return 0;
    int r = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != r)
            return nullopt;
    return r;
}

auto gdm::has_4cycle(const Graph & g) -> bool
{
    // a 4-cycle exists iff two distinct vertices share two common neighbors
    for (Vertex u = 0; u < g.order(); ++u) {
        std::map<Vertex, int> common;
        for (auto w : g.neighbors(u))
            for (auto v : g.neighbors(w))
                if (v > u && ++common[v] >= 2)
                    return true;
    }
    return false;
}

auto gdm::components(const Graph & g) -> vector<vector<Vertex>>
{
    vector<vector<Vertex>> result;
    vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            comp.push_back(v);
            for (auto w : g.neighbors(v))
                if (! seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

auto gdm::is_connected(const Graph & g) -> bool
{
    return components(g).size() <= 1;
}

auto gdm::is_union_of_k33(const Graph & g) -> bool
{
    if (g.order() == 0 || regular_valency(g) != 3)
        return false;
    for (auto & comp : components(g)) {
        if (comp.size() != 6)
            return false;
        // in K3,3 the side of v is exactly the set of vertices sharing its neighborhood
        auto side = g.neighbors(comp[0]);
        for (auto v : side)
            for (auto w : side)
                if (g.adjacent(v, w))
                    return false;
        auto other = g.neighbors(side[0]);
        for (auto v : side)
            if (! std::equal(other.begin(), other.end(), g.neighbors(v).begin(), g.neighbors(v).end()))
                return false;
    }
    return true;
}

auto gdm::recognize_gp(const Graph & g, int k) -> optional<GpShape>
{
    if (g.order() % 2 != 0)
        return nullopt;
    int n = g.order() / 2;
    if (k < 1 || 2 * k >= n)
        return nullopt;

    GpShape shape{n, k, vector<Vertex>(static_cast<std::size_t>(n)), vector<Vertex>(static_cast<std::size_t>(n))};
    bool named = true;
    for (int i = 0; i < n && named; ++i) {
        auto x = g.find("x_" + std::to_string(i));
        auto y = g.find("y_" + std::to_string(i));
        if (! x || ! y)
            named = false;
        else {
            shape.x[static_cast<std::size_t>(i)] = *x;
            shape.y[static_cast<std::size_t>(i)] = *y;
        }
    }
    if (! named)
        for (int i = 0; i < n; ++i) {
            shape.x[static_cast<std::size_t>(i)] = i;
            shape.y[static_cast<std::size_t>(i)] = n + i;
        }

    if (g.size() != 3 * n)
        return nullopt;
    auto map = [&](Vertex v) { return v < n ? shape.x[static_cast<std::size_t>(v)] : shape.y[static_cast<std::size_t>(v - n)]; };
    for (auto [u, v] : gp_edges(n, k))
        if (! g.adjacent(map(u), map(v)))
            return nullopt;
    return shape;
}

auto VertexPartition::members(int part) const -> vector<Vertex>
{
    vector<Vertex> result;
    for (Vertex v = 0; v < static_cast<Vertex>(part_of.size()); ++v)
        if (part_of[static_cast<std::size_t>(v)] == part)
            result.push_back(v);
    return result;
}

auto gdm::is_partition(const Graph & g, const VertexPartition & p) -> bool
{
    if (p.parts < 1 || p.part_of.size() != static_cast<std::size_t>(g.order()))
        return false;
    vector<int> count(static_cast<std::size_t>(p.parts), 0);
    for (auto i : p.part_of) {
        if (i < 0 || i >= p.parts)
            return false;
        ++count[static_cast<std::size_t>(i)];
    }
    return std::all_of(count.begin(), count.end(), [](int c) { return c > 0; });
}

auto gdm::is_equitable(const Graph & g, const VertexPartition & p) -> bool
{
    if (! is_partition(g, p))
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        vector<int> count(static_cast<std::size_t>(p.parts), 0);
        for (auto w : g.neighbors(v))
            ++count[static_cast<std::size_t>(p.part_of[static_cast<std::size_t>(w)])];
        if (std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>{}) != count.end())
            return false;
    }
    return true;
}

auto gdm::lift_partition(const VertexPartition & p, int copies) -> VertexPartition
{
    VertexPartition result{p.parts, {}};
    for (int j = 0; j < copies; ++j)
        result.part_of.insert(result.part_of.end(), p.part_of.begin(), p.part_of.end());
    return result;
}
