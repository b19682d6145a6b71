/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/search.hh>

#include <bit>

using std::size_t;
using std::uint64_t;
using std::vector;

using namespace gdm;

auto Gf2System::in_kernel(const Gf2Vector & v) const -> bool
{
    for (auto & row : rows)
        if ((row & v).count() % 2 != 0)
            return false;
    return true;
}

namespace
{
    auto nullspace(vector<Gf2Vector> rows, int cols) -> vector<Gf2Vector>
    {
        // reduced row echelon form
        vector<int> pivot_col;
        size_t r = 0;
        for (int c = 0; c < cols && r < rows.size(); ++c) {
            size_t p = r;
            while (p < rows.size() && ! rows[p].test(static_cast<size_t>(c)))
                ++p;
            if (p == rows.size())
                continue;
            std::swap(rows[p], rows[r]);
            for (size_t i = 0; i < rows.size(); ++i)
                if (i != r && rows[i].test(static_cast<size_t>(c)))
                    rows[i] ^= rows[r];
            pivot_col.push_back(c);
            ++r;
        }

        vector<char> is_pivot(static_cast<size_t>(cols), 0);
        for (auto c : pivot_col)
            is_pivot[static_cast<size_t>(c)] = 1;

        vector<Gf2Vector> basis;
        for (int f = 0; f < cols; ++f) {
            if (is_pivot[static_cast<size_t>(f)])
                continue;
            Gf2Vector v(static_cast<size_t>(cols));
            v.set(static_cast<size_t>(f));
            for (size_t i = 0; i < pivot_col.size(); ++i)
                if (rows[i].test(static_cast<size_t>(f)))
                    v.set(static_cast<size_t>(pivot_col[i]));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    auto finish(vector<Gf2Vector> rows, int n) -> Gf2System
    {
        Gf2System s;
        s.vertices = n;
        s.basis = nullspace(rows, n);
        s.rows = std::move(rows);
        return s;
    }
}

auto gdm::gf2_system(const Graph & g) -> Gf2System
{
    auto n = g.order();
    vector<Gf2Vector> rows(static_cast<size_t>(n), Gf2Vector(static_cast<size_t>(n)));
    for (Vertex v = 0; v < n; ++v)
        for (auto w : g.neighbors(v))
            rows[static_cast<size_t>(v)].set(static_cast<size_t>(w));
    return finish(std::move(rows), n);
}

auto gdm::gf2_system_gp(int n, int k) -> Gf2System
{
    if (n < 3 || k < 1 || k >= n)
        throw DomainError("GP index system needs n >= 3 and 1 <= k < n");
    auto size = static_cast<size_t>(2 * n);
    vector<Gf2Vector> rows(size, Gf2Vector(size));
    auto toggle = [&](int u, int v) {
        rows[static_cast<size_t>(u)].flip(static_cast<size_t>(v));
        rows[static_cast<size_t>(v)].flip(static_cast<size_t>(u));
    };
    for (int i = 0; i < n; ++i) {
        toggle(i, (i + 1) % n);
        toggle(n + i, n + (i + k) % n);
        toggle(i, n + i);
    }
    return finish(std::move(rows), 2 * n);
}

auto gdm::bznl_search(const Gf2System & system, bool cubic, int nullity_cap) -> BznlResult
{
    BznlResult result{SearchStatus::NoneExists, std::nullopt, system.nullity(), false, 0};
    auto n = system.vertices;
    if (n % 2 != 0)
        return result;
    if (cubic && (n / 2) % 2 != 0) {
        // a balanced ZNL of a cubic graph on 2m vertices has 3m/2 type-2 vertices, so m is even
        result.parity_shortcut = true;
        return result;
    }
    if (system.nullity() > nullity_cap || system.nullity() > 62) {
        result.status = SearchStatus::Exhausted;
        return result;
    }

    auto half = static_cast<size_t>(n / 2);
    Gf2Vector v(static_cast<size_t>(n));
    auto check = [&]() {
        ++result.vectors_enumerated;
        return v.count() == half;
    };
    bool hit = n == 0 || check();
    // Gray code walk over the kernel
    for (uint64_t i = 1; ! hit && i < (uint64_t{1} << system.nullity()); ++i) {
        v ^= system.basis[static_cast<size_t>(std::countr_zero(i))];
        hit = check();
    }
    if (hit) {
        result.status = SearchStatus::Found;
        vector<std::uint8_t> values(static_cast<size_t>(n));
        for (size_t i = 0; i < values.size(); ++i)
            values[i] = v.test(i) ? 1 : 0;
        result.values = std::move(values);
    }
    return result;
}

auto gdm::bznl_search(const Graph & g, int nullity_cap) -> BznlResult
{
    bool cubic = regular_valency(g) == 3;
    if (g.order() % 2 != 0 || (cubic && (g.order() / 2) % 2 != 0)) {
        // skip building the system when the answer is already known
        Gf2System trivial;
        trivial.vertices = g.order();
        return bznl_search(trivial, cubic, nullity_cap);
    }
    return bznl_search(gf2_system(g), cubic, nullity_cap);
}
