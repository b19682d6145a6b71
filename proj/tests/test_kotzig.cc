#include <gdm/kotzig.hh>

#include <doctest.h>

#include <set>

using namespace gdm;
using std::size_t;
using std::vector;

namespace
{
    // independent scan: rows are permutations of 1..k, columns sum to p(k+1)/2
    auto plain_ok(const KotzigArray & a) -> bool
    {
        if (a.rows < 2 || static_cast<int>(a.entries.size()) != a.rows)
            return false;
        for (auto & row : a.entries) {
            std::set<int> s(row.begin(), row.end());
            if (static_cast<int>(row.size()) != a.cols || static_cast<int>(s.size()) != a.cols || *s.begin() != 1
                || *s.rbegin() != a.cols)
                return false;
        }
        for (int j = 0; j < a.cols; ++j) {
            int sum = 0;
            for (auto & row : a.entries)
                sum += row[static_cast<size_t>(j)];
            if (2 * sum != a.rows * (a.cols + 1))
                return false;
        }
        return true;
    }

    auto column_sums_zero(const GroupKotzigArray & a) -> bool
    {
        for (std::int64_t j = 0; j < a.group.order(); ++j) {
            auto s = GroupElement::zero(a.group);
            for (auto & row : a.entries)
                s = s + row[static_cast<size_t>(j)];
            if (! s.is_zero())
                return false;
        }
        return true;
    }
}

TEST_CASE("integer arrays")
{
    auto a = build_integer(2, 4);
    CHECK(a.entries == vector<vector<int>>{{1, 2, 3, 4}, {4, 3, 2, 1}});

    auto b = build_integer(3, 3);
    CHECK(plain_ok(b));
    for (int j = 0; j < 3; ++j)
        CHECK(b.at(0, j) + b.at(1, j) + b.at(2, j) == 6);

    CHECK_THROWS_AS((void) build_integer(3, 4), NotExists);
    CHECK(integer_kotzig_obstruction(3, 4) == "p(k-1) odd");
    CHECK(integer_kotzig_obstruction(1, 4).has_value());
    CHECK(verify_array(build_integer(4, 5)));
    CHECK(verify_array(build_integer(3, 1)));
}

TEST_CASE("integer existence boundary")
{
    for (int p = 2; p <= 6; ++p)
        for (int k = 2; k <= 8; ++k) {
            INFO(p << "x" << k);
            bool expected = (p * (k - 1)) % 2 == 0;
            CHECK(! integer_kotzig_obstruction(p, k).has_value() == expected);
            if (expected) {
                auto a = build_integer(p, k);
                CHECK(verify_array(a));
                CHECK(plain_ok(a));
            }
            else
                CHECK_THROWS_AS((void) build_integer(p, k), NotExists);
        }
    // larger odd widths still come out of the 3-row search
    for (int k : {9, 11, 15, 21, 31})
        CHECK(plain_ok(build_integer(3, k)));
}

TEST_CASE("verify_array rejects damage")
{
    auto a = build_integer(4, 5);
    auto swapped = a;
    std::swap(swapped.entries[0][0], swapped.entries[0][1]);
    CHECK(! verify_array(swapped));
    CHECK(! plain_ok(swapped));

    KotzigArray single{1, 3, {{1, 2, 3}}};
    CHECK(! verify_array(single));

    auto g = build_group(2, AbelianGroup{vector<std::int64_t>{4}});
    auto broken = g;
    std::swap(broken.entries[1][1], broken.entries[1][2]);
    CHECK(! verify_array(broken));
}

TEST_CASE("group arrays")
{
    auto z4 = AbelianGroup{vector<std::int64_t>{4}};
    auto a = build_group(2, z4);
    REQUIRE(a.entries.size() == 2);
    vector<std::int64_t> r0, r1;
    for (auto & x : a.entries[0])
        r0.push_back(x[0]);
    for (auto & x : a.entries[1])
        r1.push_back(x[0]);
    CHECK(r0 == vector<std::int64_t>{0, 1, 2, 3});
    CHECK(r1 == vector<std::int64_t>{0, 3, 2, 1});
    CHECK(a.normalized);

    CHECK_THROWS_AS((void) build_group(3, z4), NotExists);
    CHECK(group_kotzig_obstruction(3, z4) == "p odd and |I|=1");

    auto k = parse_group("Z2^2");
    auto b = build_group(3, k);
    CHECK(verify_array(b));
    CHECK(column_sums_zero(b));
}

TEST_CASE("group existence boundary")
{
    for (int p = 2; p <= 6; ++p)
        for (std::int64_t n = 1; n <= 16; ++n)
            for (auto & g : enumerate_groups(n)) {
                INFO(p << " " << g.to_string());
                bool expected = p % 2 == 0 || involution_count(g) != 1;
                CHECK(! group_kotzig_obstruction(p, g).has_value() == expected);
                if (expected) {
                    auto a = build_group(p, g);
                    CHECK(verify_array(a));
                    CHECK(column_sums_zero(a));
                }
                else
                    CHECK_THROWS_AS((void) build_group(p, g), NotExists);
            }
}

TEST_CASE("normalize")
{
    auto z3 = parse_group("Z3");
    auto e = elements(z3);
    GroupKotzigArray pair{z3, 2, {e, e}, false};
    // columns 0, 2, 4 = 1: not constant
    CHECK_THROWS_AS((void) normalize(pair), DomainError);

    // a constant column sum of 1
    vector<GroupElement> shifted;
    for (auto & x : e)
        shifted.push_back(GroupElement{z3, {1}} - x);
    GroupKotzigArray offset{z3, 2, {e, shifted}, false};
    CHECK(verify_array(offset));
    auto n = normalize(offset);
    CHECK(n.normalized);
    CHECK(verify_array(n));
    CHECK(column_sums_zero(n));
    auto twice = normalize(n);
    CHECK(twice.entries == n.entries);

    auto built = build_group(4, parse_group("Z2+Z4"));
    CHECK(normalize(built).entries == built.entries);
}
