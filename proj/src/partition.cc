/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/search.hh>

#include <bit>
#include <chrono>

using std::nullopt;
using std::optional;
using std::size_t;
using std::vector;

using namespace gdm;

namespace
{
    using Clock = std::chrono::steady_clock;

    class PartitionSearcher
    {
    public:
        PartitionSearcher(const Graph & g, int p, int quota, const SearchBudget & budget) :
            _g(g),
            _p(p),
            _quota(quota),
            _budget(budget),
            _order(search_order(g)),
            _part(static_cast<size_t>(g.order()), -1),
            _count(static_cast<size_t>(g.order()) * static_cast<size_t>(p), 0)
        {
        }

        auto run() -> PartitionResult
        {
            _start = Clock::now();
            bool found = solve(0, 0);
            PartitionResult result{SearchStatus::NoneExists, nullopt,
                SearchStats{_nodes, std::chrono::duration<double>(Clock::now() - _start).count()}};
            if (_exhausted)
                result.status = SearchStatus::Exhausted;
            else if (found) {
                result.status = SearchStatus::Found;
                result.partition = VertexPartition{_p, _part};
            }
            return result;
        }

    private:
        const Graph & _g;
        int _p;
        int _quota;
        SearchBudget _budget;
        vector<Vertex> _order;
        vector<int> _part;
        // _count[v * p + i]: neighbors of v already placed in part i
        vector<int> _count;
        std::uint64_t _nodes = 0;
        bool _exhausted = false;
        Clock::time_point _start;

        auto cell(Vertex v, int i) -> int & { return _count[static_cast<size_t>(v) * static_cast<size_t>(_p) + static_cast<size_t>(i)]; }

        auto place(Vertex v, int i, int delta) -> bool
        {
            bool ok = true;
            for (auto w : _g.neighbors(v))
                if ((cell(w, i) += delta) > _quota)
                    ok = false;
            _part[static_cast<size_t>(v)] = delta > 0 ? i : -1;
            return ok;
        }

        // parts are numbered in order of first use, which removes their symmetry
        auto solve(size_t pos, int used) -> bool
        {
            if (pos == _order.size())
                return used == _p;
            if (static_cast<int>(_order.size() - pos) < _p - used)
                return false;
            auto v = _order[pos];
            for (int i = 0; i < std::min(used + 1, _p); ++i) {
                ++_nodes;
                if (_nodes > _budget.node_limit
                    || ((_nodes & 1023) == 0 && std::chrono::duration<double>(Clock::now() - _start).count() > _budget.time_limit)) {
                    _exhausted = true;
                    return false;
                }
                bool ok = place(v, i, +1);
                if (ok && solve(pos + 1, std::max(used, i + 1)))
                    return true;
                place(v, i, -1);
                if (_exhausted)
                    return false;
            }
            return false;
        }
    };
}

auto gdm::find_partition(const Graph & g, int p, const SearchBudget & budget) -> PartitionResult
{
    auto r = regular_valency(g);
    if (! r || p < 2 || *r % p != 0 || g.order() < p)
        return PartitionResult{SearchStatus::NoneExists, nullopt, {}};
    PartitionSearcher searcher{g, p, *r / p, budget};
    auto result = searcher.run();
    if (result.partition && ! is_equitable(g, *result.partition))
        throw Error("partition search produced a non-equitable partition");
    return result;
}

auto gdm::find_complete_mapping(const AbelianGroup & group) -> optional<vector<GroupElement>>
{
    auto all = elements(group);
    if (group.order() % 2 == 1)
        return all;
    if (group.order() > 64)
        throw DomainError("complete mapping search supports even orders up to 64");

    GroupTable table{group};
    auto n = table.order();
    auto bit = [](int i) { return std::uint64_t{1} << i; };
    auto full = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    vector<int> theta(static_cast<size_t>(n), -1);

    // fill the most constrained element first; masks are the unused images and sums
    auto rec = [&](auto & self, std::uint64_t rows, std::uint64_t images, std::uint64_t sums) -> bool {
        if (rows == 0)
            return true;
        int best = -1;
        std::uint64_t best_options = 0;
        int best_count = n + 1;
        for (auto r = rows; r; r &= r - 1) {
            int g = std::countr_zero(r);
            std::uint64_t options = 0;
            for (auto m = images; m; m &= m - 1) {
                int h = std::countr_zero(m);
                if (sums & bit(table.add(g, h)))
                    options |= bit(h);
            }
            int count = std::popcount(options);
            if (count < best_count) {
                best = g;
                best_options = options;
                best_count = count;
                if (count == 0)
                    return false;
            }
        }
        for (auto m = best_options; m; m &= m - 1) {
            int h = std::countr_zero(m);
            theta[static_cast<size_t>(best)] = h;
            if (self(self, rows & ~bit(best), images & ~bit(h), sums & ~bit(table.add(best, h))))
                return true;
        }
        return false;
    };
    // theta - theta(0) is again a complete mapping, so theta(0) = 0
    theta[0] = 0;
    if (! rec(rec, full & ~bit(0), full & ~bit(0), full & ~bit(0)))
        return nullopt;

    vector<GroupElement> result;
    for (auto h : theta)
        result.push_back(all[static_cast<size_t>(h)]);
    return result;
}
