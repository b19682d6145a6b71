/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/io.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

using namespace gdm;

namespace
{
    auto strip(const string & line) -> string
    {
        auto s = line.substr(0, line.find('#'));
        auto b = s.find_first_not_of(" \t\r");
        if (b == string::npos)
            return {};
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    auto to_int(const string & s, const string & what) -> long long
    {
        long long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw FormatError("expected an integer for " + what + ", got '" + s + "'");
        return v;
    }

    auto split(const string & s, char sep) -> vector<string>
    {
        vector<string> out;
        std::stringstream ss(s);
        string item;
        while (std::getline(ss, item, sep))
            out.push_back(item);
        return out;
    }
}

auto gdm::read_graph(std::istream & in) -> Graph
{
    string line;
    int n = -1;
    long long m = -1;
    vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = strip(line);
        if (s.empty())
            continue;
        std::istringstream ls(s);
        string a, b, extra;
        if (! (ls >> a >> b) || (ls >> extra))
            throw FormatError("line " + to_string(lineno) + ": expected two integers");
        if (n < 0) {
            n = static_cast<int>(to_int(a, "n"));
            m = to_int(b, "m");
            if (n < 0 || m < 0)
                throw FormatError("line " + to_string(lineno) + ": negative header");
        }
        else
            edges.emplace_back(static_cast<Vertex>(to_int(a, "endpoint")), static_cast<Vertex>(to_int(b, "endpoint")));
    }
    if (n < 0)
        throw FormatError("missing `n m` header");
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError("header promises " + to_string(m) + " edges, found " + to_string(edges.size()));
    return from_edges(n, edges);
}

void gdm::write_graph(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto gdm::read_file(const string & path) -> string
{
    std::ifstream f(path);
    if (! f)
        throw FormatError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

auto gdm::select_graph(const string & selector) -> Graph
{
    auto parts = split(selector, ':');
    if (parts.size() == 3 && parts[0] == "gp")
        return gp(static_cast<int>(to_int(parts[1], "n")), static_cast<int>(to_int(parts[2], "k")));
    if (parts.size() >= 3 && parts[0] == "t") {
        auto rest = selector.substr(parts[0].size() + parts[1].size() + 2);
        return disjoint_union(select_graph(rest), static_cast<int>(to_int(parts[1], "count")));
    }
    for (auto name : {"k33", "tietze", "x12", "k4", "q3"})
        if (selector == name)
            return builtin(selector);
    std::istringstream in(read_file(selector));
    return read_graph(in);
}

auto gdm::read_labeling(std::istream & in, const Graph & g) -> Labeling
{
    string line;
    std::optional<AbelianGroup> group;
    vector<std::optional<GroupElement>> values(static_cast<size_t>(g.order()));
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = strip(line);
        if (s.empty())
            continue;
        auto where = "line " + to_string(lineno) + ": ";
        if (! group) {
            if (s.rfind("group ", 0) != 0)
                throw FormatError(where + "expected `group <spec>`");
            group = parse_group(strip(s.substr(6)));
            continue;
        }
        auto eq = s.find('=');
        if (eq == string::npos)
            throw FormatError(where + "expected `<vertex> = (..)`");
        auto name = strip(s.substr(0, eq));
        auto v = g.find(name);
        if (! v)
            throw FormatError(where + "unknown vertex '" + name + "'");
        auto & slot = values[static_cast<size_t>(*v)];
        if (slot)
            throw FormatError(where + "vertex '" + name + "' labeled twice");
        slot = parse_element(*group, strip(s.substr(eq + 1)));
    }
    if (! group)
        throw FormatError("missing `group <spec>` header");
    vector<GroupElement> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (! values[static_cast<size_t>(v)])
            throw FormatError("vertex '" + g.name(v) + "' has no label");
        out.push_back(*values[static_cast<size_t>(v)]);
    }
    return Labeling{g, *group, std::move(out)};
}

void gdm::write_labeling(std::ostream & out, const Labeling & l)
{
    out << "group " << l.group.to_string() << '\n';
    vector<Vertex> order(static_cast<size_t>(l.graph.order()));
    for (Vertex v = 0; v < l.graph.order(); ++v)
        order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return l.graph.name(a) < l.graph.name(b); });
    for (auto v : order)
        out << l.graph.name(v) << " = " << l[v].to_string() << '\n';
}

auto gdm::read_partition(std::istream & in, const Graph & g) -> VertexPartition
{
    VertexPartition p;
    p.part_of.assign(static_cast<size_t>(g.order()), -1);
    string line;
    while (std::getline(in, line)) {
        auto s = strip(line);
        if (s.empty())
            continue;
        std::istringstream ls(s);
        string name;
        while (ls >> name) {
            auto v = g.find(name);
            if (! v)
                throw FormatError("unknown vertex '" + name + "' in partition");
            if (p.part_of[static_cast<size_t>(*v)] != -1)
                throw FormatError("vertex '" + name + "' appears twice in partition");
            p.part_of[static_cast<size_t>(*v)] = p.parts;
        }
        ++p.parts;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (p.part_of[static_cast<size_t>(v)] == -1)
            throw FormatError("vertex '" + g.name(v) + "' missing from partition");
    return p;
}

void gdm::write_partition(std::ostream & out, const Graph & g, const VertexPartition & p)
{
    for (int i = 0; i < p.parts; ++i) {
        auto m = p.members(i);
        for (size_t j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << g.name(m[j]);
        out << '\n';
    }
}
