/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/search.hh>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <queue>

using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

using namespace gdm;

auto gdm::status_name(SearchStatus s) -> string
{
    switch (s) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::NoneExists: return "NONE";
    case SearchStatus::Exhausted: return "EXHAUSTED";
    }
    return "?";
}

auto MagicSearchRules::names() const -> vector<string>
{
    vector<string> result;
    if (fix_translation)
        result.emplace_back("translation-fix");
    if (forced_neighbors)
        result.emplace_back("forced-neighbor");
    if (gp2_relations)
        result.emplace_back("gp2-relations");
    return result;
}

auto gdm::search_order(const Graph & g) -> vector<Vertex>
{
    auto n = g.order();
    vector<Vertex> order;
    vector<char> seen(static_cast<size_t>(n), 0);
    while (static_cast<int>(order.size()) < n) {
        Vertex root = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! seen[static_cast<size_t>(v)] && (root == -1 || g.degree(v) > g.degree(root)))
                root = v;
        std::queue<Vertex> q;
        q.push(root);
        seen[static_cast<size_t>(root)] = 1;
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            order.push_back(v);
            for (auto w : g.neighbors(v))
                if (! seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    return order;
}

namespace
{
    using Clock = std::chrono::steady_clock;

    // sum of coeff * label over the terms is zero
    struct Relation
    {
        vector<pair<Vertex, int>> terms;
    };

    auto make_relation(std::initializer_list<pair<Vertex, int>> raw) -> optional<Relation>
    {
        std::map<Vertex, int> merged;
        for (auto [v, c] : raw)
            merged[v] += c;
        Relation r;
        for (auto [v, c] : merged)
            if (c != 0)
                r.terms.emplace_back(v, c);
        if (r.terms.empty())
            return nullopt;
        return r;
    }

    class MagicSearcher
    {
    public:
        MagicSearcher(const Graph & g, const AbelianGroup & group, const SearchBudget & budget, const MagicSearchRules & rules) :
            _g(g),
            _group(group),
            _table(group),
            _budget(budget),
            _n(g.order()),
            _label(static_cast<size_t>(_n), -1),
            _used(static_cast<size_t>(_n), 0),
            _psum(static_cast<size_t>(_n), 0),
            _count(static_cast<size_t>(_n), 0),
            _order(search_order(g)),
            _relations_of(static_cast<size_t>(_n))
        {
            _regular = regular_valency(g).has_value();
            _fix_translation = rules.fix_translation && _regular && _n > 0;
            _forced = rules.forced_neighbors;
            if (rules.gp2_relations)
                if (auto shape = recognize_gp(g, 2))
                    add_gp2_relations(*shape);

            if (_fix_translation)
                _rules.emplace_back("translation-fix");
            if (_forced)
                _rules.emplace_back("forced-neighbor");
            if (! _relations.empty())
                _rules.emplace_back("gp2-relations");

            for (Vertex v = 0; v < _n; ++v)
                if (_g.degree(v) == 0)
                    _permanent_mu = true;
            if (_permanent_mu)
                _mu = 0;
        }

        auto run() -> MagicSearchResult
        {
            _start = Clock::now();
            bool stopped = _n == 0 ? record_solution() : solve(0);
            (void)stopped;

            MagicSearchResult result;
            result.stats = SearchStats{_nodes, std::chrono::duration<double>(Clock::now() - _start).count()};
            result.rules = _rules;
            result.certificates = std::move(_solutions);
            if (_exhausted)
                result.status = SearchStatus::Exhausted;
            else
                result.status = result.certificates.empty() ? SearchStatus::NoneExists : SearchStatus::Found;
            return result;
        }

    private:
        const Graph & _g;
        AbelianGroup _group;
        GroupTable _table;
        SearchBudget _budget;
        int _n;

        vector<int> _label;
        vector<char> _used;
        vector<int> _psum;
        vector<int> _count;
        vector<Vertex> _order;
        int _mu = -1;
        bool _permanent_mu = false;
        size_t _mu_bound_at = 0;

        bool _regular = false;
        bool _fix_translation = false;
        bool _forced = false;
        vector<Relation> _relations;
        vector<vector<int>> _relations_of;
        vector<string> _rules;

        vector<Vertex> _trail;
        vector<pair<Vertex, int>> _queue;

        std::uint64_t _nodes = 0;
        bool _exhausted = false;
        Clock::time_point _start;
        vector<MagicCertificate> _solutions;

        auto add_gp2_relations(const GpShape & s) -> void
        {
            auto at = [&](const vector<Vertex> & cycle, int i) { return cycle[static_cast<size_t>(((i % s.n) + s.n) % s.n)]; };
            for (auto * cycle : {&s.y, &s.x})
                for (int i = 0; i < s.n; ++i)
                    if (auto r = make_relation({{at(*cycle, i), 1}, {at(*cycle, i + 5), 1}, {at(*cycle, i + 3), -1}, {at(*cycle, i + 8), -1}})) {
                        auto idx = static_cast<int>(_relations.size());
                        for (auto [v, c] : r->terms)
                            _relations_of[static_cast<size_t>(v)].push_back(idx);
                        _relations.push_back(std::move(*r));
                    }
        }

        auto assign(Vertex v, int h) -> void
        {
            _label[static_cast<size_t>(v)] = h;
            _used[static_cast<size_t>(h)] = 1;
            for (auto u : _g.neighbors(v)) {
                _psum[static_cast<size_t>(u)] = _table.add(_psum[static_cast<size_t>(u)], h);
                ++_count[static_cast<size_t>(u)];
            }
            _trail.push_back(v);
        }

        auto undo_to(size_t mark) -> void
        {
            while (_trail.size() > mark) {
                auto v = _trail.back();
                _trail.pop_back();
                auto h = _label[static_cast<size_t>(v)];
                for (auto u : _g.neighbors(v)) {
                    _psum[static_cast<size_t>(u)] = _table.sub(_psum[static_cast<size_t>(u)], h);
                    --_count[static_cast<size_t>(u)];
                }
                _used[static_cast<size_t>(h)] = 0;
                _label[static_cast<size_t>(v)] = -1;
            }
            if (! _permanent_mu && _mu != -1 && _mu_bound_at > mark)
                _mu = -1;
        }

        auto unlabeled_neighbor(Vertex u) const -> Vertex
        {
            for (auto w : _g.neighbors(u))
                if (_label[static_cast<size_t>(w)] == -1)
                    return w;
            return -1;
        }

        // closed or nearly closed neighborhoods of u
        auto check_vertex(Vertex u) -> bool
        {
            auto cnt = _count[static_cast<size_t>(u)];
            auto deg = _g.degree(u);
            if (cnt == deg) {
                if (_mu == -1) {
                    _mu = _psum[static_cast<size_t>(u)];
                    _mu_bound_at = _trail.size();
                    return rescan();
                }
                return _psum[static_cast<size_t>(u)] == _mu;
            }
            if (_forced && cnt == deg - 1 && _mu != -1)
                _queue.emplace_back(unlabeled_neighbor(u), _table.sub(_mu, _psum[static_cast<size_t>(u)]));
            return true;
        }

        // after binding mu every vertex may be closed or forcing
        auto rescan() -> bool
        {
            for (Vertex u = 0; u < _n; ++u) {
                auto cnt = _count[static_cast<size_t>(u)];
                auto deg = _g.degree(u);
                if (cnt == deg && _psum[static_cast<size_t>(u)] != _mu)
                    return false;
                if (_forced && cnt == deg - 1)
                    _queue.emplace_back(unlabeled_neighbor(u), _table.sub(_mu, _psum[static_cast<size_t>(u)]));
            }
            return true;
        }

        // relation coefficients are tiny, repeated addition beats decoding
        auto times(int c, int h) const -> int
        {
            int base = c < 0 ? _table.neg(h) : h, acc = 0;
            for (int i = 0; i < std::abs(c); ++i)
                acc = _table.add(acc, base);
            return acc;
        }

        auto check_relation(const Relation & r) -> bool
        {
            int partial = 0, unknown = 0;
            pair<Vertex, int> open{-1, 0};
            for (auto [v, c] : r.terms) {
                auto h = _label[static_cast<size_t>(v)];
                if (h == -1) {
                    ++unknown;
                    open = {v, c};
                }
                else
                    partial = _table.add(partial, times(c, h));
            }
            if (unknown == 0)
                return partial == 0;
            if (unknown == 1 && (open.second == 1 || open.second == -1))
                _queue.emplace_back(open.first, open.second == 1 ? _table.neg(partial) : partial);
            return true;
        }

        auto propagate(Vertex v, int h) -> bool
        {
            _queue.clear();
            _queue.emplace_back(v, h);
            for (size_t head = 0; head < _queue.size(); ++head) {
                auto [w, x] = _queue[head];
                auto current = _label[static_cast<size_t>(w)];
                if (current != -1) {
                    if (current != x)
                        return false;
                    continue;
                }
                if (_used[static_cast<size_t>(x)])
                    return false;
                assign(w, x);
                for (auto u : _g.neighbors(w))
                    if (! check_vertex(u))
                        return false;
                for (auto ri : _relations_of[static_cast<size_t>(w)])
                    if (! check_relation(_relations[static_cast<size_t>(ri)]))
                        return false;
            }
            return true;
        }

        auto out_of_budget() -> bool
        {
            if (_nodes > _budget.node_limit) {
                _exhausted = true;
                return true;
            }
            if ((_nodes & 1023) == 0
                && std::chrono::duration<double>(Clock::now() - _start).count() > _budget.time_limit) {
                _exhausted = true;
                return true;
            }
            return false;
        }

        // true when the search should stop
        auto record_solution() -> bool
        {
            vector<GroupElement> values;
            values.reserve(static_cast<size_t>(_n));
            for (Vertex v = 0; v < _n; ++v)
                values.push_back(GroupElement::from_index(_group, _label[static_cast<size_t>(v)]));
            auto verified = verify_magic(Labeling{_g, _group, std::move(values)});
            if (! verified)
                throw Error("search produced an unverifiable labeling: " + verified.defect->describe(_g));
            _solutions.push_back(std::move(*verified.certificate));
            return _budget.mode == SearchBudget::Mode::First;
        }

        auto solve(size_t pos) -> bool
        {
            while (pos < _order.size() && _label[static_cast<size_t>(_order[pos])] != -1)
                ++pos;
            if (pos == _order.size())
                return record_solution();

            auto v = _order[pos];
            for (int h = 0; h < _table.order(); ++h) {
                if (_used[static_cast<size_t>(h)])
                    continue;
                if (_fix_translation && pos == 0 && h != 0)
                    break;
                ++_nodes;
                if (out_of_budget())
                    return true;
                auto mark = _trail.size();
                if (propagate(v, h) && solve(pos + 1))
                    return true;
                undo_to(mark);
            }
            return false;
        }
    };
}

auto gdm::search_magic(const Graph & g, const AbelianGroup & group, const SearchBudget & budget, const MagicSearchRules & rules)
    -> MagicSearchResult
{
    if (g.order() != group.order())
        throw DomainError("graph has " + std::to_string(g.order()) + " vertices but " + group.to_string() + " has order "
            + std::to_string(group.order()));
    MagicSearcher searcher{g, group, budget, rules};
    return searcher.run();
}

auto gdm::decide_with_search(const Graph & g, const AbelianGroup & group, const SearchBudget & budget) -> Decision
{
    return decide(g, group, [&](const Graph & gg, const AbelianGroup & gr) -> optional<MagicCertificate> {
        auto r = search_magic(gg, gr, budget);
        if (r.status == SearchStatus::Found)
            return r.certificates.front();
        return nullopt;
    });
}
