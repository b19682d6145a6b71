/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/kotzig.hh>
#include <gdm/unions.hh>

#include <algorithm>
#include <numeric>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

using namespace gdm;

namespace
{
    auto verified(Labeling l, const GroupElement & expected_mu, const string & what) -> MagicCertificate
    {
        auto v = verify_magic(l);
        if (! v)
            throw Error(what + " produced a non-magic labeling: " + v.defect->describe(l.graph));
        if (! (v.certificate->mu == expected_mu))
            throw Error(what + " produced constant " + v.certificate->mu.to_string() + ", expected " + expected_mu.to_string());
        return std::move(*v.certificate);
    }

    auto require_equitable(const Graph & g, const VertexPartition & part) -> int
    {
        auto r = regular_valency(g);
        if (! r)
            throw PreconditionError("graph is not regular");
        if (part.part_of.size() != static_cast<size_t>(g.order()) || ! is_partition(g, part))
            throw PreconditionError("not a partition of the graph's vertices");
        if (! is_equitable(g, part))
            throw PreconditionError("partition is not equitable");
        return *r;
    }
}

auto gdm::lemgl(const MagicCertificate & cert, const VertexPartition & part, const AbelianGroup & b) -> MagicCertificate
{
    auto & base = cert.labeling;
    require_equitable(base.graph, part);
    if (auto why = group_kotzig_obstruction(part.parts, b))
        throw PreconditionError("no " + to_string(part.parts) + "-row Kotzig array over " + b.to_string() + ": " + *why);

    auto k = build_group(part.parts, b);
    auto t = static_cast<int>(b.order());
    auto n = base.graph.order();
    auto sum = direct_sum(base.group, b);

    vector<GroupElement> values;
    values.reserve(static_cast<size_t>(n) * static_cast<size_t>(t));
    for (int j = 0; j < t; ++j)
        for (Vertex x = 0; x < n; ++x) {
            vector<int64_t> c = base[x].coords();
            auto & kij = k.at(part.part_of[static_cast<size_t>(x)], j);
            c.insert(c.end(), kij.coords().begin(), kij.coords().end());
            values.emplace_back(sum, std::move(c));
        }

    auto mu = cert.mu.coords();
    mu.resize(static_cast<size_t>(sum.rank()), 0);
    return verified(Labeling{disjoint_union(base.graph, t), sum, std::move(values)}, GroupElement{sum, mu}, "lemgl");
}

auto gdm::lemgl2(const MagicCertificate & cert, const VertexPartition & part, int64_t t, int64_t m) -> MagicCertificate
{
    auto & base = cert.labeling;
    auto r = require_equitable(base.graph, part);
    if (t < 1 || m < 1)
        throw PreconditionError("t and m must be positive");
    if (base.group.rank() == 0 || base.group.factors().back().order != t * m)
        throw PreconditionError("last factor of " + base.group.to_string() + " does not have order t*m = " + to_string(t * m));
    auto last = base.group.rank() - 1;
    for (Vertex x = 0; x < base.graph.order(); ++x)
        if (base[x][last] % t != 0)
            throw PreconditionError("label of " + base.graph.name(x) + " is not supported on <" + to_string(t) + ">");
    if (auto why = integer_kotzig_obstruction(part.parts, static_cast<int>(t)))
        throw PreconditionError("no integer Kotzig array with " + to_string(part.parts) + " rows and " + to_string(t) + " columns: " + *why);

    auto k = build_integer(part.parts, static_cast<int>(t));
    auto n = base.graph.order();
    vector<GroupElement> values;
    for (int j = 0; j < static_cast<int>(t); ++j)
        for (Vertex x = 0; x < n; ++x) {
            vector<int64_t> c = base[x].coords();
            c[last] += k.at(part.part_of[static_cast<size_t>(x)], j);
            values.emplace_back(base.group, std::move(c));
        }

    auto mu = cert.mu.coords();
    mu[last] += static_cast<int64_t>(r) * (t + 1) / 2;
    return verified(Labeling{disjoint_union(base.graph, static_cast<int>(t)), base.group, std::move(values)},
        GroupElement{base.group, mu}, "lemgl2");
}

auto gdm::obsgl(const MagicCertificate & cert, const AbelianGroup & b) -> MagicCertificate
{
    auto & base = cert.labeling;
    auto r = regular_valency(base.graph);
    if (! r || b.order() != *r)
        throw DomainError("|B| = " + to_string(b.order()) + " must equal the valency of a regular graph");

    auto sum = direct_sum(base.group, b);
    auto bs = elements(b);
    vector<GroupElement> values;
    for (auto & bj : bs)
        for (Vertex x = 0; x < base.graph.order(); ++x) {
            vector<int64_t> c = base[x].coords();
            c.insert(c.end(), bj.coords().begin(), bj.coords().end());
            values.emplace_back(sum, std::move(c));
        }

    auto mu = cert.mu.coords();
    mu.resize(static_cast<size_t>(sum.rank()), 0);
    return verified(Labeling{disjoint_union(base.graph, *r), sum, std::move(values)}, GroupElement{sum, mu}, "obsgl");
}

auto gdm::action_name(UnionStep::Action a) -> string
{
    switch (a) {
    case UnionStep::Action::Skip: return "skip";
    case UnionStep::Action::Lemgl: return "lemgl";
    case UnionStep::Action::Lemgl2: return "lemgl2";
    }
    return "?";
}

namespace
{
    // slots with modulus 1 are not yet present
    auto active_group(const vector<int64_t> & modulus) -> AbelianGroup
    {
        vector<int64_t> orders;
        for (auto q : modulus)
            if (q > 1)
                orders.push_back(q);
        return AbelianGroup{orders};
    }
}

auto gdm::plan_union(const Graph & g, const MagicCertificate & cert, const VertexPartition & part,
    const AbelianGroup & target) -> UnionPlan
{
    if (g.order() != cert.labeling.graph.order() || g.edges() != cert.labeling.graph.edges())
        throw PreconditionError("certificate is not for the given graph");
    require_equitable(g, part);
    auto h = cert.labeling.group;
    auto emb = embeds(h, target);
    if (! emb)
        throw PreconditionError(h.to_string() + " does not embed in " + target.to_string());
    if (target.order() % h.order() != 0)
        throw PreconditionError("|H| does not divide the target order");
    auto copies = target.order() / h.order();
    if (part.parts % 2 != 0 && copies % 2 == 0)
        throw PreconditionError("p = " + to_string(part.parts) + " is odd and t = " + to_string(copies) + " is even");

    auto & tf = target.factors();
    vector<int> beta(tf.size(), 0);
    vector<int64_t> modulus(tf.size(), 1);
    for (size_t i = 0; i < h.rank(); ++i) {
        beta[emb->factor_map[i]] = h.factors()[i].exponent;
        modulus[emb->factor_map[i]] = h.factors()[i].order;
    }

    vector<size_t> slots(tf.size());
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(), [&](size_t a, size_t b) {
        if (tf[a].prime != tf[b].prime)
            return tf[a].prime < tf[b].prime;
        return tf[a].exponent > tf[b].exponent;
    });

    UnionPlan plan{cert, part, target, *emb, {}, copies};
    int64_t running = 1;
    for (auto s : slots) {
        UnionStep step{tf[s].prime, tf[s].exponent, beta[s], UnionStep::Action::Skip, s, 1, 0, {}};
        if (beta[s] == 0)
            step.action = UnionStep::Action::Lemgl;
        else if (beta[s] < tf[s].exponent)
            step.action = UnionStep::Action::Lemgl2;
        step.t = tf[s].order / modulus[s];
        modulus[s] = tf[s].order;
        running *= step.t;
        step.copies = running;
        step.group = active_group(modulus);
        plan.steps.push_back(std::move(step));
    }
    if (running != copies)
        throw Error("union plan copy count mismatch");
    return plan;
}

namespace
{
    // Current labels in target-slot coordinates; slots with modulus 1 are absent.
    struct SlotState
    {
        Graph graph;
        VertexPartition partition;
        vector<int64_t> modulus;
        vector<vector<int64_t>> coords;
        vector<int64_t> mu;

        // Sub-product of the present slots other than `moved`, then `moved`
        // last with the given order; coordinates scaled by `scale` in that slot.
        auto to_certificate(size_t moved, int64_t moved_order, int64_t scale, bool include_moved) const -> MagicCertificate
        {
            vector<size_t> layout;
            for (size_t s = 0; s < modulus.size(); ++s)
                if (s != moved && modulus[s] > 1)
                    layout.push_back(s);
            vector<int64_t> orders;
            for (auto s : layout)
                orders.push_back(modulus[s]);
            if (include_moved)
                orders.push_back(moved_order);
            AbelianGroup group{orders};

            auto pick = [&](const vector<int64_t> & c) {
                vector<int64_t> out;
                for (auto s : layout)
                    out.push_back(c[s]);
                if (include_moved)
                    out.push_back(c[moved] * scale);
                return GroupElement{group, out};
            };
            vector<GroupElement> values;
            for (auto & c : coords)
                values.push_back(pick(c));
            return MagicCertificate{Labeling{graph, group, std::move(values)}, pick(mu)};
        }

        // Inverse of to_certificate after a construction appended copies.
        void absorb(const MagicCertificate & c, size_t moved, int64_t moved_order, const VertexPartition & lifted)
        {
            vector<size_t> layout;
            for (size_t s = 0; s < modulus.size(); ++s)
                if (s != moved && modulus[s] > 1)
                    layout.push_back(s);
            layout.push_back(moved);
            modulus[moved] = moved_order;

            auto spread = [&](const GroupElement & g) {
                vector<int64_t> out(modulus.size(), 0);
                for (size_t i = 0; i < layout.size(); ++i)
                    out[layout[i]] = g[i];
                return out;
            };
            coords.clear();
            for (auto & v : c.labeling.values)
                coords.push_back(spread(v));
            mu = spread(c.mu);
            graph = c.labeling.graph;
            partition = lifted;
        }
    };

    auto describe_map(const UnionPlan & plan) -> string
    {
        string s = "embed " + plan.base.labeling.group.to_string() + " -> " + plan.target.to_string() + ":";
        auto & hf = plan.base.labeling.group.factors();
        for (size_t i = 0; i < hf.size(); ++i) {
            auto j = plan.embedding.factor_map[i];
            auto scale = plan.target.factors()[j].order / hf[i].order;
            s += " " + to_string(i) + "->" + to_string(j) + "*" + to_string(scale);
        }
        return s;
    }
}

auto gdm::execute(const UnionPlan & plan) -> UnionResult
{
    auto & base = plan.base.labeling;
    auto slots = plan.target.rank();

    SlotState state{base.graph, plan.partition, vector<int64_t>(slots, 1), {}, vector<int64_t>(slots, 0)};
    for (size_t i = 0; i < base.group.rank(); ++i)
        state.modulus[plan.embedding.factor_map[i]] = base.group.factors()[i].order;
    for (Vertex x = 0; x < base.graph.order(); ++x) {
        vector<int64_t> c(slots, 0);
        for (size_t i = 0; i < base.group.rank(); ++i)
            c[plan.embedding.factor_map[i]] = base[x][i];
        state.coords.push_back(std::move(c));
    }
    for (size_t i = 0; i < base.group.rank(); ++i)
        state.mu[plan.embedding.factor_map[i]] = plan.base.mu[i];

    UnionResult result{plan.base, {describe_map(plan)}};
    for (auto & step : plan.steps) {
        auto s = step.slot;
        auto full = plan.target.factors()[s].order;
        auto lifted = lift_partition(state.partition, static_cast<int>(step.t));
        string detail;
        switch (step.action) {
        case UnionStep::Action::Skip:
            break;
        case UnionStep::Action::Lemgl: {
            auto c = state.to_certificate(s, full, 1, false);
            auto out = lemgl(c, state.partition, AbelianGroup{vector<int64_t>{full}});
            state.absorb(out, s, full, lifted);
            detail = " B=Z" + to_string(full) + " -> factor " + to_string(s);
            break;
        }
        case UnionStep::Action::Lemgl2: {
            auto c = state.to_certificate(s, full, step.t, true);
            auto out = lemgl2(c, state.partition, step.t, full / step.t);
            state.absorb(out, s, full, lifted);
            detail = " factor " + to_string(s) + " scaled by " + to_string(step.t) + " and moved last, m=" + to_string(full / step.t);
            break;
        }
        }
        if (! is_equitable(state.graph, state.partition))
            throw Error("lifted partition is not equitable");
        result.audit.push_back("prime=" + to_string(step.prime) + " action=" + action_name(step.action)
            + " alpha=" + to_string(step.alpha) + " beta=" + to_string(step.beta) + " t_i=" + to_string(step.copies)
            + " group=" + step.group.to_string() + detail);
    }

    vector<GroupElement> values;
    for (auto & c : state.coords)
        values.emplace_back(plan.target, c);
    Labeling final_labeling{disjoint_union(base.graph, static_cast<int>(plan.copies)), plan.target, std::move(values)};
    auto v = verify_magic(final_labeling);
    if (! v)
        throw Error("union construction produced a non-magic labeling: " + v.defect->describe(final_labeling.graph));
    if (! (v.certificate->mu == GroupElement{plan.target, state.mu}))
        throw Error("union construction constant drifted");
    result.certificate = std::move(*v.certificate);
    return result;
}
