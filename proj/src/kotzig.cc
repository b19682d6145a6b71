/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/kotzig.hh>
#include <gdm/search.hh>

#include <algorithm>
#include <numeric>

using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace gdm;

auto gdm::integer_kotzig_obstruction(int p, int k) -> optional<string>
{
    if (k < 1)
        return "k < 1";
    if (p <= 1)
        return "p <= 1";
    if ((p * (k - 1)) % 2 != 0)
        return "p(k-1) odd";
    return nullopt;
}

auto gdm::group_kotzig_obstruction(int p, const AbelianGroup & group) -> optional<string>
{
    if (p <= 1)
        return "p <= 1";
    if (p % 2 != 0 && involution_count(group) == 1)
        return "p odd and |I|=1";
    return nullopt;
}

namespace
{
    // three rows over 1..k (k odd) with every column summing to 3(k+1)/2; the
    // first row is the identity
    auto three_row_block(int k) -> vector<vector<int>>
    {
        int target = 3 * (k + 1) / 2;
        vector<int> second(static_cast<size_t>(k)), third(static_cast<size_t>(k));
        vector<char> used2(static_cast<size_t>(k + 1), 0), used3(static_cast<size_t>(k + 1), 0);

        auto rec = [&](auto & self, int j) -> bool {
            if (j == k)
                return true;
            for (int a = k; a >= 1; --a) {
                int c = target - (j + 1) - a;
                if (used2[static_cast<size_t>(a)] || c < 1 || c > k || used3[static_cast<size_t>(c)])
                    continue;
                used2[static_cast<size_t>(a)] = used3[static_cast<size_t>(c)] = 1;
                second[static_cast<size_t>(j)] = a;
                third[static_cast<size_t>(j)] = c;
                if (self(self, j + 1))
                    return true;
                used2[static_cast<size_t>(a)] = used3[static_cast<size_t>(c)] = 0;
            }
            return false;
        };
        if (! rec(rec, 0))
            throw Error("no 3-row Kotzig block found for k=" + std::to_string(k));

        vector<int> first(static_cast<size_t>(k));
        std::iota(first.begin(), first.end(), 1);
        return {first, second, third};
    }
}

auto gdm::build_integer(int p, int k) -> KotzigArray
{
    if (auto why = integer_kotzig_obstruction(p, k))
        throw NotExists(*why);

    KotzigArray a{p, k, {}};
    vector<int> up(static_cast<size_t>(k)), down(static_cast<size_t>(k));
    std::iota(up.begin(), up.end(), 1);
    std::reverse_copy(up.begin(), up.end(), down.begin());

    int pairs = p / 2;
    if (p % 2 == 1) {
        a.entries = three_row_block(k);
        pairs = (p - 3) / 2;
    }
    for (int i = 0; i < pairs; ++i) {
        a.entries.push_back(up);
        a.entries.push_back(down);
    }
    if (! verify_array(a))
        throw Error("integer Kotzig construction failed verification");
    return a;
}

auto gdm::build_group(int p, const AbelianGroup & group) -> GroupKotzigArray
{
    if (auto why = group_kotzig_obstruction(p, group))
        throw NotExists(*why);

    auto e = elements(group);
    vector<GroupElement> neg;
    for (auto & g : e)
        neg.push_back(-g);

    GroupKotzigArray a{group, p, {}, true};
    int pairs = p / 2;
    if (p % 2 == 1) {
        auto theta = find_complete_mapping(group);
        if (! theta)
            throw Error("no complete mapping for " + group.to_string());
        vector<GroupElement> third;
        for (size_t i = 0; i < e.size(); ++i)
            third.push_back(-(e[i] + (*theta)[i]));
        a.entries.push_back(e);
        a.entries.push_back(*theta);
        a.entries.push_back(std::move(third));
        pairs = (p - 3) / 2;
    }
    for (int i = 0; i < pairs; ++i) {
        a.entries.push_back(e);
        a.entries.push_back(neg);
    }
    if (! verify_array(a))
        throw Error("group Kotzig construction failed verification");
    return a;
}

namespace
{
    auto column_sums(const GroupKotzigArray & a) -> vector<GroupElement>
    {
        vector<GroupElement> sums;
        auto k = static_cast<size_t>(a.group.order());
        for (size_t j = 0; j < k; ++j) {
            auto s = GroupElement::zero(a.group);
            for (auto & row : a.entries)
                s = s + row[j];
            sums.push_back(std::move(s));
        }
        return sums;
    }

    auto shape_and_rows_ok(const GroupKotzigArray & a) -> bool
    {
        auto k = static_cast<size_t>(a.group.order());
        if (a.rows <= 1 || a.entries.size() != static_cast<size_t>(a.rows))
            return false;
        for (auto & row : a.entries) {
            if (row.size() != k)
                return false;
            vector<char> seen(k, 0);
            for (auto & x : row) {
                if (! (x.group() == a.group))
                    return false;
                auto i = static_cast<size_t>(x.index());
                if (seen[i])
                    return false;
                seen[i] = 1;
            }
        }
        return true;
    }
}

auto gdm::verify_array(const KotzigArray & a) -> bool
{
    if (a.rows <= 1 || a.cols < 1 || a.entries.size() != static_cast<size_t>(a.rows))
        return false;
    for (auto & row : a.entries) {
        if (row.size() != static_cast<size_t>(a.cols))
            return false;
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < a.cols; ++i)
            if (sorted[static_cast<size_t>(i)] != i + 1)
                return false;
    }
    if ((a.rows * (a.cols + 1)) % 2 != 0)
        return false;
    int target = a.rows * (a.cols + 1) / 2;
    for (int j = 0; j < a.cols; ++j) {
        int s = 0;
        for (int i = 0; i < a.rows; ++i)
            s += a.at(i, j);
        if (s != target)
            return false;
    }
    return true;
}

auto gdm::verify_array(const GroupKotzigArray & a) -> bool
{
    if (! shape_and_rows_ok(a))
        return false;
    auto sums = column_sums(a);
    for (auto & s : sums)
        if (! (s == sums.front()))
            return false;
    return ! a.normalized || sums.front().is_zero();
}

auto gdm::normalize(const GroupKotzigArray & a) -> GroupKotzigArray
{
    auto plain = a;
    plain.normalized = false;
    if (! verify_array(plain))
        throw DomainError("normalize needs rows that are permutations and constant column sums");
    auto s = column_sums(a).front();
    auto result = a;
    for (auto & x : result.entries.front())
        x = x - s;
    result.normalized = true;
    return result;
}
