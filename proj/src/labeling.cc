/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/labeling.hh>

#include <algorithm>
#include <map>

using std::int64_t;
using std::nullopt;
using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

using namespace gdm;

Labeling::Labeling(Graph g, AbelianGroup a, vector<GroupElement> v) :
    graph(std::move(g)),
    group(std::move(a)),
    values(std::move(v))
{
    if (values.size() != static_cast<size_t>(graph.order()))
        throw DomainError("labeling must assign a value to every vertex");
    for (auto & x : values)
        if (! (x.group() == group))
            throw StructuralError("label " + x.to_string() + " is not an element of " + group.to_string());
}

auto Labeling::is_bijective() const -> bool
{
    if (group.order() != graph.order())
        return false;
    vector<char> seen(static_cast<size_t>(group.order()), 0);
    for (auto & x : values) {
        auto i = static_cast<size_t>(x.index());
        if (seen[i])
            return false;
        seen[i] = 1;
    }
    return true;
}

auto gdm::weight(const Labeling & l, Vertex x) -> GroupElement
{
    auto w = GroupElement::zero(l.group);
    for (auto y : l.graph.neighbors(x))
        w = w + l[y];
    return w;
}

auto MagicDefect::describe(const Graph & g) const -> string
{
    switch (kind) {
    case Kind::OrderMismatch:
        return "OrderMismatch";
    case Kind::DuplicateLabel:
        return "DuplicateLabel vertex=" + g.name(*vertex) + " other=" + g.name(*other_vertex) + " label=" + label->to_string();
    case Kind::WeightMismatch:
        return "WeightMismatch vertex=" + g.name(*vertex) + " weight=" + weight->to_string() + " expected=" + expected->to_string();
    }
    return "?";
}

auto gdm::verify_magic(const Labeling & l) -> Verification
{
    Verification result;
    if (l.group.order() != l.graph.order()) {
        result.defect = MagicDefect{MagicDefect::Kind::OrderMismatch, nullopt, nullopt, nullopt, nullopt, nullopt};
        return result;
    }

    vector<int> owner(static_cast<size_t>(l.group.order()), -1);
    for (Vertex v = 0; v < l.graph.order(); ++v) {
        auto i = static_cast<size_t>(l[v].index());
        if (owner[i] != -1) {
            result.defect = MagicDefect{MagicDefect::Kind::DuplicateLabel, v, owner[i], l[v], nullopt, nullopt};
            return result;
        }
        owner[i] = v;
    }
    // a duplicate-free total map between equal-size sets is onto, so nothing is missing here

    if (l.graph.order() == 0) {
        result.certificate = MagicCertificate{l, GroupElement::zero(l.group)};
        return result;
    }

    auto mu = weight(l, 0);
    for (Vertex v = 1; v < l.graph.order(); ++v) {
        auto w = weight(l, v);
        if (! (w == mu)) {
            result.defect = MagicDefect{MagicDefect::Kind::WeightMismatch, v, nullopt, nullopt, w, mu};
            return result;
        }
    }
    result.certificate = MagicCertificate{l, mu};
    return result;
}

auto gdm::tag_name(NonMagicTag t) -> string
{
    switch (t) {
    case NonMagicTag::OddRegularUniqueInvolution: return "OddRegularUniqueInvolution";
    case NonMagicTag::OrderTwoMod4: return "OrderTwoMod4";
    case NonMagicTag::PowerOfTwoHypercubeArgument: return "PowerOfTwoHypercubeArgument";
    case NonMagicTag::FourCycleConnectedCubic: return "FourCycleConnectedCubic";
    case NonMagicTag::GPFamily: return "GPFamily";
    case NonMagicTag::ExhaustiveSearch: return "ExhaustiveSearch";
    }
    return "?";
}

auto NonMagicReason::applies(NonMagicTag t) const -> bool
{
    return std::find(applicable.begin(), applicable.end(), t) != applicable.end();
}

auto gdm::decide(const Graph & g, const AbelianGroup & group, const MagicFinder & finder) -> Decision
{
    if (g.order() != group.order())
        throw DomainError("graph has " + std::to_string(g.order()) + " vertices but " + group.to_string() + " has order "
            + std::to_string(group.order()));

    auto n = g.order();
    auto r = regular_valency(g);
    auto invs = involution_count(group);
    bool odd_regular = r && *r % 2 == 1;
    bool cubic = r == 3;

    vector<std::pair<NonMagicTag, string>> found;
    if (odd_regular && invs == 1)
        found.emplace_back(NonMagicTag::OddRegularUniqueInvolution, "r=" + std::to_string(*r) + " odd, |I|=1");
    if (odd_regular && n % 4 == 2)
        found.emplace_back(NonMagicTag::OrderTwoMod4, "r=" + std::to_string(*r) + " odd, n=" + std::to_string(n) + " = 2 mod 4");
    if (cubic && ! group.is_trivial()
        && std::all_of(group.factors().begin(), group.factors().end(), [](auto & f) { return f.order == 2; }))
        found.emplace_back(NonMagicTag::PowerOfTwoHypercubeArgument, "cubic, group " + group.to_string());
    bool connected = is_connected(g);
    if (cubic && connected && has_4cycle(g))
        found.emplace_back(NonMagicTag::FourCycleConnectedCubic, "connected cubic with a 4-cycle");
    for (int k : {1, 2})
        if (auto shape = recognize_gp(g, k))
            found.emplace_back(NonMagicTag::GPFamily,
                "GP(" + std::to_string(shape->n) + "," + std::to_string(k) + ")");

    Decision d{Decision::Kind::Unknown, nullopt, nullopt, false};
    if (! found.empty()) {
        NonMagicReason reason{found.front().first, found.front().second, {}};
        for (auto & [t, _] : found)
            reason.applicable.push_back(t);
        d.kind = Decision::Kind::NotMagic;
        d.reason = std::move(reason);
        return d;
    }

    if (is_union_of_k33(g) && invs >= 2) {
        d.predicted_magic = true;
        if (finder)
            if (auto c = finder(g, group)) {
                d.kind = Decision::Kind::Magic;
                d.certificate = std::move(c);
            }
    }
    return d;
}

auto gdm::retarget_constant(const MagicCertificate & c, span<const size_t> factors, const GroupElement & target) -> MagicCertificate
{
    auto & l = c.labeling;
    auto r = regular_valency(l.graph);
    if (! r)
        throw DomainError("retargeting the magic constant needs a regular graph");

    auto a = l.group.sub_product(factors);
    if (! (target.group() == a))
        throw StructuralError("target must be an element of the sub-product " + a.to_string());
    if (gcd(a.order(), *r) != 1)
        throw NotInvertible("gcd(|A|=" + std::to_string(a.order()) + ", r=" + std::to_string(*r) + ") != 1");

    vector<int64_t> mu_a;
    for (auto i : factors)
        mu_a.push_back(c.mu[i]);
    auto shift_a = solve_scalar(*r, target - GroupElement{a, mu_a});

    vector<int64_t> shift(l.group.rank(), 0);
    for (size_t k = 0; k < factors.size(); ++k)
        shift[factors[k]] = shift_a[k];
    GroupElement s{l.group, shift};

    vector<GroupElement> values;
    for (auto & x : l.values)
        values.push_back(x + s);
    Labeling moved{l.graph, l.group, std::move(values)};
    auto v = verify_magic(moved);
    if (! v)
        throw Error("retarget produced a non-magic labeling: " + v.defect->describe(l.graph));
    return *v.certificate;
}

auto BinaryLabeling::ones() const -> int
{
    return static_cast<int>(std::count(values.begin(), values.end(), 1));
}

auto BinaryLabeling::is_balanced() const -> bool
{
    return graph.order() % 2 == 0 && 2 * ones() == graph.order();
}

auto BinaryLabeling::is_zero_neighborhood() const -> bool
{
    for (Vertex v = 0; v < graph.order(); ++v) {
        int s = 0;
        for (auto w : graph.neighbors(v))
            s += values[static_cast<size_t>(w)];
        if (s % 2 != 0)
            return false;
    }
    return true;
}

auto gdm::project_binary(const MagicCertificate & c) -> BinaryLabeling
{
    auto & group = c.labeling.group;
    if (group.rank() == 0 || group.factors()[0].order != 2)
        throw DomainError("projection needs a leading Z2 factor, group is " + group.to_string());
    if (c.mu[0] != 0)
        throw DomainError("projection needs mu with first coordinate 0, mu is " + c.mu.to_string());

    BinaryLabeling b{c.labeling.graph, {}};
    for (auto & x : c.labeling.values)
        b.values.push_back(static_cast<std::uint8_t>(x[0]));
    return b;
}

auto gdm::classify_types(const BinaryLabeling & b) -> VertexTypes
{
    if (regular_valency(b.graph) != 3)
        throw DomainError("vertex types are defined on cubic graphs");
    if (! b.is_zero_neighborhood())
        throw DomainError("vertex types need a zero-neighborhood labeling");

    VertexTypes result;
    for (Vertex v = 0; v < b.graph.order(); ++v) {
        int ones = 0;
        for (auto w : b.graph.neighbors(v))
            ones += b.values[static_cast<size_t>(w)];
        (ones == 0 ? result.type1 : result.type2).push_back(v);
    }
    return result;
}
