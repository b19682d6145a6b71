/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/groups.hh>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

using std::int64_t;
using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::vector;

using namespace gdm;

auto gdm::gcd(int64_t a, int64_t b) -> int64_t
{
    return std::gcd(a, b);
}

auto gdm::factorize(int64_t n) -> vector<pair<int64_t, int>>
{
    vector<pair<int64_t, int>> result;
    for (int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            result.emplace_back(p, e);
    }
    if (n > 1)
        result.emplace_back(n, 1);
    return result;
}

auto gdm::prime_power(int64_t n) -> optional<pair<int64_t, int>>
{
    if (n < 2)
        return nullopt;
    auto f = factorize(n);
    if (f.size() != 1)
        return nullopt;
    return f.front();
}

struct AbelianGroup::Data
{
    vector<Factor> factors;
    int64_t order = 1;
};

AbelianGroup::AbelianGroup() :
    _data(std::make_shared<const Data>())
{
}

AbelianGroup::AbelianGroup(vector<int64_t> factor_orders)
{
    auto data = std::make_shared<Data>();
    for (auto q : factor_orders) {
        auto pp = prime_power(q);
        if (! pp)
            throw DomainError("group factor " + std::to_string(q) + " is not a prime power >= 2");
        data->factors.push_back(Factor{pp->first, pp->second, q});
        if (data->order > (int64_t{1} << 62) / q)
            throw DomainError("group order overflows 64 bits");
        data->order *= q;
    }
    _data = std::move(data);
}

auto AbelianGroup::factors() const -> const vector<Factor> &
{
    return _data->factors;
}

auto AbelianGroup::factor_orders() const -> vector<int64_t>
{
    vector<int64_t> result;
    for (auto & f : _data->factors)
        result.push_back(f.order);
    return result;
}

auto AbelianGroup::rank() const -> size_t
{
    return _data->factors.size();
}

auto AbelianGroup::order() const -> int64_t
{
    return _data->order;
}

auto AbelianGroup::is_trivial() const -> bool
{
    return _data->factors.empty();
}

namespace
{
    auto factor_less(const AbelianGroup::Factor & a, const AbelianGroup::Factor & b) -> bool
    {
        return std::pair{a.prime, a.exponent} < std::pair{b.prime, b.exponent};
    }
}

auto AbelianGroup::is_canonical() const -> bool
{
    return std::is_sorted(_data->factors.begin(), _data->factors.end(), factor_less);
}

auto AbelianGroup::canonical() const -> AbelianGroup
{
    if (is_canonical())
        return *this;
    auto f = _data->factors;
    std::stable_sort(f.begin(), f.end(), factor_less);
    vector<int64_t> orders;
    for (auto & x : f)
        orders.push_back(x.order);
    return AbelianGroup{orders};
}

auto AbelianGroup::isomorphic_to(const AbelianGroup & other) const -> bool
{
    return canonical() == other.canonical();
}

auto AbelianGroup::sub_product(span<const size_t> indices) const -> AbelianGroup
{
    vector<int64_t> orders;
    for (auto i : indices) {
        if (i >= rank())
            throw DomainError("factor index out of range");
        orders.push_back(_data->factors[i].order);
    }
    return AbelianGroup{orders};
}

auto AbelianGroup::to_string() const -> string
{
    if (is_trivial())
        return "Z1";
    string result;
    auto & f = _data->factors;
    for (size_t i = 0; i < f.size();) {
        size_t j = i;
        while (j < f.size() && f[j].order == f[i].order)
            ++j;
        if (! result.empty())
            result += "+";
        result += "Z" + std::to_string(f[i].order);
        if (j - i > 1)
            result += "^" + std::to_string(j - i);
        i = j;
    }
    return result;
}

auto AbelianGroup::operator==(const AbelianGroup & other) const -> bool
{
    return _data == other._data || _data->factors == other._data->factors;
}

auto AbelianGroup::encode(span<const int64_t> coords) const -> int64_t
{
    int64_t index = 0;
    for (size_t i = 0; i < rank(); ++i)
        index = index * _data->factors[i].order + coords[i];
    return index;
}

auto AbelianGroup::decode(int64_t index) const -> vector<int64_t>
{
    vector<int64_t> coords(rank());
    for (size_t i = rank(); i-- > 0;) {
        coords[i] = index % _data->factors[i].order;
        index /= _data->factors[i].order;
    }
    return coords;
}

auto gdm::direct_sum(const AbelianGroup & a, const AbelianGroup & b) -> AbelianGroup
{
    auto orders = a.factor_orders();
    for (auto q : b.factor_orders())
        orders.push_back(q);
    return AbelianGroup{orders};
}

GroupElement::GroupElement(AbelianGroup group, vector<int64_t> coords) :
    _group(std::move(group)),
    _coords(std::move(coords))
{
    if (_coords.size() != _group.rank())
        throw StructuralError("element has " + std::to_string(_coords.size()) + " coordinates but group "
            + _group.to_string() + " has " + std::to_string(_group.rank()) + " factors");
    for (size_t i = 0; i < _coords.size(); ++i) {
        auto q = _group.factors()[i].order;
        _coords[i] = ((_coords[i] % q) + q) % q;
    }
}

auto GroupElement::zero(const AbelianGroup & group) -> GroupElement
{
    return GroupElement{group, vector<int64_t>(group.rank(), 0)};
}

auto GroupElement::from_index(const AbelianGroup & group, int64_t index) -> GroupElement
{
    return GroupElement{group, group.decode(index)};
}

auto GroupElement::index() const -> int64_t
{
    return _group.encode(_coords);
}

auto GroupElement::is_zero() const -> bool
{
    return std::all_of(_coords.begin(), _coords.end(), [](int64_t c) { return c == 0; });
}

auto GroupElement::to_string() const -> string
{
    string result = "(";
    for (size_t i = 0; i < _coords.size(); ++i) {
        if (i > 0)
            result += ",";
        result += std::to_string(_coords[i]);
    }
    return result + ")";
}

auto GroupElement::operator==(const GroupElement & other) const -> bool
{
    return _group == other._group && _coords == other._coords;
}

auto GroupElement::operator<(const GroupElement & other) const -> bool
{
    return _coords < other._coords;
}

namespace
{
    auto check_same(const GroupElement & a, const GroupElement & b) -> void
    {
        if (! (a.group() == b.group()))
            throw StructuralError("cannot combine elements of " + a.group().to_string() + " and " + b.group().to_string());
    }
}

auto gdm::add(const GroupElement & a, const GroupElement & b) -> GroupElement
{
    check_same(a, b);
    auto c = a.coords();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    return GroupElement{a.group(), std::move(c)};
}

auto gdm::negate(const GroupElement & a) -> GroupElement
{
    auto c = a.coords();
    for (auto & x : c)
        x = -x;
    return GroupElement{a.group(), std::move(c)};
}

auto gdm::subtract(const GroupElement & a, const GroupElement & b) -> GroupElement
{
    return add(a, negate(b));
}

auto gdm::scalar_mul(int64_t k, const GroupElement & a) -> GroupElement
{
    auto c = a.coords();
    for (size_t i = 0; i < c.size(); ++i) {
        auto q = a.group().factors()[i].order;
        // reduce k first so the product stays in range
        auto kk = ((k % q) + q) % q;
        c[i] = (kk * c[i]) % q;
    }
    return GroupElement{a.group(), std::move(c)};
}

auto gdm::operator+(const GroupElement & a, const GroupElement & b) -> GroupElement
{
    return add(a, b);
}

auto gdm::operator-(const GroupElement & a, const GroupElement & b) -> GroupElement
{
    return subtract(a, b);
}

auto gdm::operator-(const GroupElement & a) -> GroupElement
{
    return negate(a);
}

auto gdm::element_order(const GroupElement & a) -> int64_t
{
    int64_t result = 1;
    for (size_t i = 0; i < a.coords().size(); ++i) {
        auto q = a.group().factors()[i].order;
        auto o = q / gcd(q, a[i]);
        result = std::lcm(result, o);
    }
    return result;
}

auto gdm::elements(const AbelianGroup & group) -> vector<GroupElement>
{
    vector<GroupElement> result;
    result.reserve(static_cast<size_t>(group.order()));
    for (int64_t i = 0; i < group.order(); ++i)
        result.push_back(GroupElement::from_index(group, i));
    return result;
}

auto gdm::involutions(const AbelianGroup & group) -> vector<GroupElement>
{
    // Each even factor Z_{2^a} contributes the choice {0, 2^(a-1)}.
    vector<size_t> even;
    for (size_t i = 0; i < group.rank(); ++i)
        if (group.factors()[i].prime == 2)
            even.push_back(i);

    vector<GroupElement> result;
    for (uint64_t mask = 1; mask < (uint64_t{1} << even.size()); ++mask) {
        vector<int64_t> c(group.rank(), 0);
        for (size_t b = 0; b < even.size(); ++b)
            if (mask & (uint64_t{1} << b))
                c[even[b]] = group.factors()[even[b]].order / 2;
        result.emplace_back(group, std::move(c));
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto gdm::involution_count(const AbelianGroup & group) -> int64_t
{
    int p = 0;
    for (auto & f : group.factors())
        if (f.prime == 2)
            ++p;
    return (int64_t{1} << p) - 1;
}

auto gdm::group_sum(const AbelianGroup & group) -> GroupElement
{
    if (involution_count(group) == 1)
        return involutions(group).front();
    return GroupElement::zero(group);
}

auto gdm::solve_scalar(int64_t r, const GroupElement & mu) -> GroupElement
{
    auto n = mu.group().order();
    if (gcd(((r % n) + n) % n, n) != 1 && n != 1)
        throw NotInvertible("gcd(" + std::to_string(r) + ", " + std::to_string(n) + ") != 1");
    // per factor, multiply by the inverse of r modulo the factor order
    auto c = mu.coords();
    for (size_t i = 0; i < c.size(); ++i) {
        auto q = mu.group().factors()[i].order;
        int64_t rr = ((r % q) + q) % q, inv = 0;
        for (int64_t x = 1; x < q; ++x)
            if ((rr * x) % q == 1) {
                inv = x;
                break;
            }
        c[i] = (c[i] * inv) % q;
    }
    return GroupElement{mu.group(), std::move(c)};
}

namespace
{
    // Partitions of n, largest part first, in decreasing lexicographic order.
    auto partitions(int n) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        vector<int> current;
        auto rec = [&](auto & self, int remaining, int max_part) -> void {
            if (remaining == 0) {
                result.push_back(current);
                return;
            }
            for (int part = std::min(remaining, max_part); part >= 1; --part) {
                current.push_back(part);
                self(self, remaining - part, part);
                current.pop_back();
            }
        };
        rec(rec, n, n);
        return result;
    }

    auto ipow(int64_t b, int e) -> int64_t
    {
        int64_t r = 1;
        while (e-- > 0)
            r *= b;
        return r;
    }
}

auto gdm::enumerate_groups(int64_t n) -> vector<AbelianGroup>
{
    if (n < 1)
        throw DomainError("group order must be >= 1");

    vector<vector<int64_t>> partial{{}};
    for (auto & [p, e] : factorize(n)) {
        vector<vector<int64_t>> next;
        for (auto & prefix : partial)
            for (auto & part : partitions(e)) {
                auto orders = prefix;
                // canonical order is ascending exponent within a prime
                for (auto it = part.rbegin(); it != part.rend(); ++it)
                    orders.push_back(ipow(p, *it));
                next.push_back(std::move(orders));
            }
        partial = std::move(next);
    }

    vector<AbelianGroup> result;
    for (auto & orders : partial)
        result.emplace_back(orders);
    return result;
}

auto gdm::refine(span<const int64_t> factors) -> AbelianGroup
{
    vector<int64_t> orders;
    for (auto q : factors) {
        if (q < 2)
            throw DomainError("cyclic factor order " + std::to_string(q) + " < 2");
        for (auto & [p, e] : factorize(q))
            orders.push_back(ipow(p, e));
    }
    return AbelianGroup{orders}.canonical();
}

auto gdm::even_odd_split(const AbelianGroup & group) -> pair<AbelianGroup, AbelianGroup>
{
    vector<int64_t> even, odd;
    for (auto & f : group.factors())
        (f.prime == 2 ? even : odd).push_back(f.order);
    return {AbelianGroup{even}.canonical(), AbelianGroup{odd}.canonical()};
}

auto Embedding::apply(const GroupElement & g) const -> GroupElement
{
    if (! (g.group() == source))
        throw StructuralError("element is not in the embedding's source group");
    vector<int64_t> c(target.rank(), 0);
    for (size_t i = 0; i < source.rank(); ++i) {
        auto j = factor_map[i];
        auto scale = target.factors()[j].order / source.factors()[i].order;
        c[j] = g[i] * scale;
    }
    return GroupElement{target, std::move(c)};
}

auto gdm::embeds(const AbelianGroup & source, const AbelianGroup & target) -> optional<Embedding>
{
    // per prime: factor indices sorted by exponent descending, ties by index
    auto by_prime = [](const AbelianGroup & g) {
        std::map<int64_t, vector<size_t>> result;
        for (size_t i = 0; i < g.rank(); ++i)
            result[g.factors()[i].prime].push_back(i);
        for (auto & [p, idx] : result)
            std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                return g.factors()[a].exponent > g.factors()[b].exponent;
            });
        return result;
    };

    auto s = by_prime(source), t = by_prime(target);
    Embedding result{source, target, vector<size_t>(source.rank())};
    for (auto & [p, sidx] : s) {
        auto it = t.find(p);
        if (it == t.end() || it->second.size() < sidx.size())
            return nullopt;
        for (size_t k = 0; k < sidx.size(); ++k) {
            if (source.factors()[sidx[k]].exponent > target.factors()[it->second[k]].exponent)
                return nullopt;
            result.factor_map[sidx[k]] = it->second[k];
        }
    }
    return result;
}

namespace
{
    auto strip(const string & s) -> string
    {
        string result;
        for (auto c : s)
            if (! std::isspace(static_cast<unsigned char>(c)))
                result += c;
        return result;
    }

    auto parse_int(const string & s, const string & context) -> int64_t
    {
        if (s.empty() || ! std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }))
            throw FormatError("bad integer '" + s + "' in " + context);
        try {
            size_t used = 0;
            auto v = std::stoll(s, &used);
            if (used != s.size())
                throw FormatError("bad integer '" + s + "' in " + context);
            return v;
        }
        catch (const std::out_of_range &) {
            throw FormatError("integer out of range in " + context);
        }
        catch (const std::invalid_argument &) {
            throw FormatError("bad integer '" + s + "' in " + context);
        }
    }
}

auto gdm::parse_group(const string & spec) -> AbelianGroup
{
    auto s = strip(spec);
    if (s.empty())
        throw FormatError("empty group spec");
    if (s == "Z1" || s == "0")
        return AbelianGroup{};

    vector<int64_t> orders;
    std::stringstream ss(s);
    string atom;
    while (std::getline(ss, atom, '+')) {
        if (atom.size() < 2 || (atom[0] != 'Z' && atom[0] != 'z'))
            throw FormatError("group atom '" + atom + "' must look like Zk or Zk^e");
        auto caret = atom.find('^');
        auto k = parse_int(atom.substr(1, caret == string::npos ? string::npos : caret - 1), "group spec");
        int64_t e = 1;
        if (caret != string::npos)
            e = parse_int(atom.substr(caret + 1), "group spec");
        if (e < 1 || e > 64)
            throw FormatError("bad repetition in '" + atom + "'");
        if (k == 1)
            continue;
        if (k < 2)
            throw FormatError("cyclic order must be >= 1 in '" + atom + "'");
        for (int64_t i = 0; i < e; ++i)
            orders.push_back(k);
    }
    if (orders.empty())
        return AbelianGroup{};
    return refine(orders);
}

auto gdm::parse_element(const AbelianGroup & group, const string & text) -> GroupElement
{
    auto s = strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw FormatError("element '" + text + "' must be a parenthesized list");
    s = s.substr(1, s.size() - 2);
    vector<int64_t> coords;
    if (! s.empty()) {
        std::stringstream ss(s);
        string part;
        while (std::getline(ss, part, ','))
            coords.push_back(parse_int(part, "element " + text));
        if (s.back() == ',')
            throw FormatError("trailing comma in element " + text);
    }
    if (coords.size() != group.rank())
        throw FormatError("element " + text + " has " + std::to_string(coords.size()) + " coordinates, group "
            + group.to_string() + " needs " + std::to_string(group.rank()));
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] < 0 || coords[i] >= group.factors()[i].order)
            throw FormatError("coordinate out of range in " + text);
    return GroupElement{group, std::move(coords)};
}

GroupTable::GroupTable(const AbelianGroup & group) :
    _group(group),
    _order(static_cast<int>(group.order()))
{
    if (group.order() > (int64_t{1} << 24))
        throw DomainError("group too large for a dense table");
    _neg.resize(static_cast<size_t>(_order));
    for (int a = 0; a < _order; ++a)
        _neg[static_cast<size_t>(a)] = static_cast<int>(negate(GroupElement::from_index(group, a)).index());
    if (_order <= 2048) {
        _add.resize(static_cast<size_t>(_order) * static_cast<size_t>(_order));
        for (int a = 0; a < _order; ++a)
            for (int b = 0; b < _order; ++b)
                _add[static_cast<size_t>(a) * static_cast<size_t>(_order) + static_cast<size_t>(b)] = slow_add(a, b);
    }
}

auto GroupTable::slow_add(int a, int b) const -> int
{
    // mixed radix addition without allocating
    auto & f = _group.factors();
    int64_t result = 0, place = 1;
    int64_t x = a, y = b;
    for (size_t i = f.size(); i-- > 0;) {
        auto q = f[i].order;
        auto d = (x % q + y % q) % q;
        x /= q;
        y /= q;
        result += d * place;
        place *= q;
    }
    return static_cast<int>(result);
}

auto GroupTable::scale(int64_t k, int a) const -> int
{
    return static_cast<int>(scalar_mul(k, GroupElement::from_index(_group, a)).index());
}
