/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/search.hh>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint8_t;
using std::vector;

using namespace gdm;

namespace
{
    // x_i and y_i of GP(n, 2) with indices taken mod n
    template <typename T_>
    struct Gp2View
    {
        int n;
        span<const T_> v;

        auto x(int i) const -> const T_ & { return v[static_cast<size_t>(((i % n) + n) % n)]; }
        auto y(int i) const -> const T_ & { return v[static_cast<size_t>(n + ((i % n) + n) % n)]; }
    };
}

auto gdm::check_gp2_identities(int n, span<const uint8_t> v) -> IdentityReport
{
    if (n < 3)
        throw DomainError("GP(n,2) identities need n >= 3");
    if (v.size() != static_cast<size_t>(2 * n))
        throw DomainError("vector length " + to_string(v.size()) + " does not match GP(" + to_string(n) + ",2)");
    Gp2View<uint8_t> l{n, v};

    // kernel membership with the neighbor multisets of the index arithmetic
    for (int i = 0; i < n; ++i) {
        if (((l.x(i - 1) + l.x(i + 1) + l.y(i)) & 1) != 0 || ((l.x(i) + l.y(i - 2) + l.y(i + 2)) & 1) != 0)
            throw DomainError("vector is not in the kernel of GP(" + to_string(n) + ",2) (vertex index " + to_string(i) + ")");
    }

    IdentityReport report;
    auto expect = [&](bool holds, const string & family, int i, int t = -1) {
        ++report.checked;
        if (! holds)
            report.violations.push_back(family + " i=" + to_string(i) + (t >= 0 ? " t=" + to_string(t) : string{}));
    };
    auto b = [](int a) { return a & 1; };

    for (int i = 0; i < n; ++i) {
        expect(b(l.y(i)) == b(l.x(i - 1) + l.x(i + 1)), "y-from-x", i);
        expect(b(l.x(i)) == b(l.y(i - 2) + l.y(i + 2)), "x-from-y", i);
        expect(b(l.x(i)) == b(l.x(i - 3) + l.x(i - 1) + l.x(i + 1) + l.x(i + 3)), "x-five-term", i);
        expect(b(l.x(i) + l.x(i + 2)) == b(l.x(i - 3) + l.x(i + 5)), "x-pair-shift", i);
        for (int t = 0; t <= 2 * n; ++t) {
            expect(b(l.x(i) + l.x(i + 3)) == b(l.x(i + 5 * t) + l.x(i + 5 * t + 3)), "x-shift-5t", i, t);
            expect(b(l.x(i) + l.x(i + 5)) == b(l.x(i + 3 * t) + l.x(i + 3 * t + 5)), "x-shift-3t", i, t);
        }
        expect(b(l.x(i + 3) + l.x(i + 5)) == b(l.x(i + 18) + l.x(i + 20)), "x-shift-15-pairs", i);
        expect(l.y(i) == l.y(i + 15), "y-period-15", i);
        expect(l.x(i) == l.x(i + 15), "x-period-15", i);
    }
    return report;
}

auto gdm::check_gp2_group_identities(int n, const AbelianGroup & group, span<const GroupElement> sample) -> IdentityReport
{
    if (n < 3)
        throw DomainError("GP(n,2) identities need n >= 3");
    if (sample.size() != static_cast<size_t>(2 * n))
        throw DomainError("sample length " + to_string(sample.size()) + " does not match GP(" + to_string(n) + ",2)");
    for (auto & g : sample)
        if (! (g.group() == group))
            throw StructuralError("sample value " + g.to_string() + " is not in " + group.to_string());
    Gp2View<GroupElement> l{n, sample};

    auto w0 = l.x(-1) + l.x(1) + l.y(0);
    for (int i = 0; i < n; ++i) {
        if (! (l.x(i - 1) + l.x(i + 1) + l.y(i) == w0) || ! (l.x(i) + l.y(i - 2) + l.y(i + 2) == w0))
            throw DomainError("sample does not have constant weight (index " + to_string(i) + ")");
    }

    IdentityReport report;
    for (int i = 0; i < n; ++i) {
        ++report.checked;
        if (! (l.y(i) + l.y(i + 5) == l.y(i + 3) + l.y(i + 8)))
            report.violations.push_back("y-relation i=" + to_string(i));
        ++report.checked;
        if (! (l.x(i) + l.x(i + 5) == l.x(i + 3) + l.x(i + 8)))
            report.violations.push_back("x-relation i=" + to_string(i));
    }
    return report;
}
