#include <gdm/groups.hh>

#include <doctest.h>

#include <set>

using namespace gdm;
using std::int64_t;
using std::size_t;
using std::vector;

namespace
{
    auto g_of(std::initializer_list<int64_t> orders) -> AbelianGroup
    {
        return AbelianGroup{vector<int64_t>(orders)};
    }

    auto el(const AbelianGroup & g, std::initializer_list<int64_t> c) -> GroupElement
    {
        return GroupElement{g, vector<int64_t>(c)};
    }

    // Plain mixed-radix arithmetic, independent of GroupElement.
    struct Oracle
    {
        vector<int64_t> m;
        int64_t n = 1;

        explicit Oracle(const AbelianGroup & g) : m(g.factor_orders())
        {
            for (auto x : m)
                n *= x;
        }

        auto decode(int64_t i) const -> vector<int64_t>
        {
            vector<int64_t> c(m.size());
            for (size_t k = m.size(); k-- > 0;) {
                c[k] = i % m[k];
                i /= m[k];
            }
            return c;
        }

        auto encode(const vector<int64_t> & c) const -> int64_t
        {
            int64_t i = 0;
            for (size_t k = 0; k < m.size(); ++k)
                i = i * m[k] + ((c[k] % m[k]) + m[k]) % m[k];
            return i;
        }

        auto add(int64_t a, int64_t b) const -> int64_t
        {
            auto x = decode(a), y = decode(b);
            for (size_t k = 0; k < m.size(); ++k)
                x[k] += y[k];
            return encode(x);
        }

        auto times(int64_t k, int64_t a) const -> int64_t
        {
            int64_t s = 0;
            for (int64_t i = 0; i < k; ++i)
                s = add(s, a);
            return s;
        }
    };

    // Does `target` have a subgroup isomorphic to the cyclic sum with the
    // given orders? Images of the generators are chosen one at a time,
    // keeping the generated subgroup's size equal to the product so far.
    auto has_subgroup(const Oracle & t, const vector<int64_t> & h) -> bool
    {
        auto rec = [&](auto & self, size_t i, std::set<int64_t> sub) -> bool {
            if (i == h.size())
                return true;
            for (int64_t g = 0; g < t.n; ++g) {
                if (t.times(h[i], g) != 0)
                    continue;
                bool ok = true;
                for (int64_t c = 1; c < h[i] && ok; ++c)
                    ok = ! sub.count(t.times(c, g));
                if (! ok)
                    continue;
                std::set<int64_t> next;
                for (auto s : sub)
                    for (int64_t c = 0; c < h[i]; ++c)
                        next.insert(t.add(s, t.times(c, g)));
                if (self(self, i + 1, std::move(next)))
                    return true;
            }
            return false;
        };
        return rec(rec, 0, {0});
    }

    auto divisors(int64_t n) -> vector<int64_t>
    {
        vector<int64_t> d;
        for (int64_t i = 1; i <= n; ++i)
            if (n % i == 0)
                d.push_back(i);
        return d;
    }
}

TEST_CASE("addition, negation and scalar multiples")
{
    auto g = g_of({2, 2, 3});
    CHECK(el(g, {1, 1, 2}) + el(g, {1, 0, 1}) == el(g, {0, 1, 0}));
    CHECK(el(g, {1, 0, 2}) + GroupElement::zero(g) == el(g, {1, 0, 2}));

    auto z4 = g_of({4});
    CHECK(el(z4, {3}) + el(z4, {2}) == el(z4, {1}));
    CHECK(negate(el(z4, {1})) == el(z4, {3}));
    CHECK(scalar_mul(3, el(z4, {1})) == el(z4, {3}));
    CHECK(scalar_mul(0, el(z4, {1})).is_zero());
    CHECK(scalar_mul(-1, el(z4, {1})) == el(z4, {3}));
    CHECK_THROWS_AS((void) (el(z4, {1}) + el(g, {0, 0, 0})), StructuralError);
}

TEST_CASE("involutions")
{
    auto g = g_of({2, 2, 3});
    auto inv = involutions(g);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == el(g, {0, 1, 0}));
    CHECK(inv[1] == el(g, {1, 0, 0}));
    CHECK(inv[2] == el(g, {1, 1, 0}));

    auto h = g_of({4, 3});
    REQUIRE(involutions(h).size() == 1);
    CHECK(involutions(h)[0] == el(h, {2, 0}));
    CHECK(involutions(g_of({9})).empty());
}

TEST_CASE("group sums")
{
    CHECK(group_sum(g_of({4})) == el(g_of({4}), {2}));
    CHECK(group_sum(g_of({2, 2})).is_zero());
    CHECK(group_sum(g_of({9})).is_zero());
}

TEST_CASE("sums and involution counts agree with a brute-force scan up to order 64")
{
    for (int64_t n = 1; n <= 64; ++n)
        for (auto & g : enumerate_groups(n)) {
            Oracle o{g};
            int64_t sum = 0, inv = 0;
            for (int64_t i = 0; i < o.n; ++i) {
                sum = o.add(sum, i);
                if (i != 0 && o.add(i, i) == 0)
                    ++inv;
            }
            int p = 0;
            for (auto m : g.factor_orders())
                p += m % 2 == 0;
            INFO(g.to_string());
            CHECK(group_sum(g).index() == sum);
            CHECK(inv == (int64_t{1} << p) - 1);
            CHECK(involution_count(g) == inv);
            CHECK(static_cast<int64_t>(involutions(g).size()) == inv);
        }
}

TEST_CASE("solve_scalar")
{
    auto z4 = g_of({4});
    CHECK(solve_scalar(3, el(z4, {1})) == el(z4, {3}));
    auto k = g_of({2, 2});
    CHECK(solve_scalar(3, el(k, {0, 0})).is_zero());
    CHECK_THROWS_AS((void) solve_scalar(2, el(z4, {1})), NotInvertible);

    for (int64_t n = 1; n <= 40; ++n)
        for (auto & g : enumerate_groups(n))
            for (int64_t r = -5; r <= 7; ++r) {
                if (gcd(r, n) != 1)
                    continue;
                for (auto & x : elements(g))
                    CHECK(solve_scalar(r, scalar_mul(r, x)) == x);
            }
}

TEST_CASE("enumerate_groups")
{
    auto g12 = enumerate_groups(12);
    REQUIRE(g12.size() == 2);
    CHECK(g12[0] == g_of({4, 3}));
    CHECK(g12[1] == g_of({2, 2, 3}));

    auto g1 = enumerate_groups(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].is_trivial());

    auto g36 = enumerate_groups(36);
    CHECK(g36.size() == 4);
    int several = 0;
    for (auto & g : g36) {
        Oracle o{g};
        int inv = 0;
        for (int64_t i = 1; i < o.n; ++i)
            inv += o.add(i, i) == 0;
        several += inv != 1;
    }
    CHECK(several == 2);

    CHECK_THROWS_AS((void) enumerate_groups(0), DomainError);

    // no two groups of the same order are isomorphic
    for (int64_t n = 1; n <= 128; ++n) {
        auto gs = enumerate_groups(n);
        for (size_t i = 0; i < gs.size(); ++i) {
            CHECK(gs[i].order() == n);
            CHECK(gs[i].is_canonical());
            for (size_t j = i + 1; j < gs.size(); ++j)
                CHECK(! gs[i].isomorphic_to(gs[j]));
        }
    }
}

TEST_CASE("refine and parse")
{
    vector<int64_t> six{6}, twelve{12}, two_two_three{2, 2, 3}, bad{1};
    CHECK(refine(six) == g_of({2, 3}));
    CHECK(refine(twelve) == g_of({4, 3}));
    CHECK(refine(two_two_three) == g_of({2, 2, 3}));
    CHECK_THROWS_AS((void) refine(bad), DomainError);

    for (int64_t a = 2; a <= 30; ++a)
        for (int64_t b = 2; b <= 30; ++b) {
            vector<int64_t> f{a, b};
            auto g = refine(f);
            CHECK(g.order() == a * b);
            auto again = g.factor_orders();
            CHECK(refine(again) == g);
        }

    CHECK(parse_group("Z2^2+Z3") == g_of({2, 2, 3}));
    CHECK(parse_group("Z12") == g_of({4, 3}));
    CHECK(parse_group("Z3+Z2+Z2") == g_of({2, 2, 3}));
    CHECK(parse_group("Z1").is_trivial());
    CHECK(g_of({2, 2, 3}).to_string() == "Z2^2+Z3");
    CHECK_THROWS_AS((void) parse_group("Z"), FormatError);
    CHECK_THROWS_AS((void) parse_group("Y4"), FormatError);
    CHECK_THROWS_AS((void) parse_group("Z0"), FormatError);

    auto g = g_of({2, 2, 3});
    CHECK(parse_element(g, "(1,0,2)") == el(g, {1, 0, 2}));
    CHECK(el(g, {1, 0, 2}).to_string() == "(1,0,2)");
    CHECK_THROWS_AS((void) parse_element(g, "(1,0)"), FormatError);
    CHECK_THROWS_AS((void) parse_element(g, "(1,0,3)"), FormatError);
    CHECK_THROWS_AS((void) AbelianGroup(vector<int64_t>{6}), DomainError);
}

TEST_CASE("even_odd_split")
{
    auto [l1, h1] = even_odd_split(g_of({2, 2, 3}));
    CHECK(l1 == g_of({2, 2}));
    CHECK(h1 == g_of({3}));
    auto [l2, h2] = even_odd_split(g_of({9}));
    CHECK(l2.is_trivial());
    CHECK(h2 == g_of({9}));
    auto [l3, h3] = even_odd_split(g_of({4, 3, 2}));
    CHECK(l3 == g_of({2, 4}));
    CHECK(h3 == g_of({3}));
    CHECK(involution_count(l3) == involution_count(g_of({4, 3, 2})));
}

TEST_CASE("embeddings")
{
    auto e = embeds(g_of({2, 2, 3}), g_of({2, 2, 9}));
    REQUIRE(e);
    CHECK(e->apply(el(g_of({2, 2, 3}), {1, 1, 1})) == el(g_of({2, 2, 9}), {1, 1, 3}));
    CHECK(! embeds(g_of({2, 2}), g_of({4, 9})));
    auto id = embeds(g_of({4, 3}), g_of({4, 3}));
    REQUIRE(id);
    for (auto & x : elements(g_of({4, 3})))
        CHECK(id->apply(x) == x);
}

TEST_CASE("embeds agrees with a brute-force subgroup search up to order 36")
{
    for (int64_t n = 1; n <= 36; ++n)
        for (auto & target : enumerate_groups(n)) {
            Oracle t{target};
            for (auto d : divisors(n))
                for (auto & source : enumerate_groups(d)) {
                    INFO(source.to_string() << " in " << target.to_string());
                    auto e = embeds(source, target);
                    CHECK(e.has_value() == has_subgroup(t, source.factor_orders()));
                    if (! e)
                        continue;
                    // injective and additive, by exhaustion
                    auto src = elements(source);
                    std::set<int64_t> images;
                    for (auto & a : src) {
                        images.insert(e->apply(a).index());
                        for (auto & b : src)
                            CHECK(e->apply(a + b) == e->apply(a) + e->apply(b));
                    }
                    CHECK(images.size() == src.size());
                }
        }
}

TEST_CASE("element codes round-trip")
{
    auto g = g_of({4, 2, 3, 5});
    for (auto & x : elements(g)) {
        CHECK(GroupElement::from_index(g, x.index()) == x);
        CHECK(parse_element(g, x.to_string()) == x);
        CHECK(scalar_mul(element_order(x), x).is_zero());
    }
    GroupTable table{g};
    Oracle o{g};
    for (int a = 0; a < table.order(); ++a)
        for (int b = 0; b < table.order(); ++b)
            CHECK(table.add(a, b) == o.add(a, b));
}
