/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_GROUPS_HH
#define GDM_GUARD_GDM_GROUPS_HH 1

#include <gdm/errors.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gdm
{
    /**
     * A finite abelian group written as a direct sum of cyclic groups of
     * prime-power order. Factors are kept in the order given; groups produced
     * by refine(), parse_group() and enumerate_groups() are canonical, that
     * is sorted by (prime, exponent) ascending. Copies share storage.
     */
    class AbelianGroup
    {
    public:
        struct Factor
        {
            std::int64_t prime;
            int exponent;
            std::int64_t order;

            auto operator==(const Factor &) const -> bool = default;
        };

        /// The trivial group.
        AbelianGroup();

        /// Every entry must be a prime power >= 2. Order is preserved.
        explicit AbelianGroup(std::vector<std::int64_t> factor_orders);

        [[nodiscard]] auto factors() const -> const std::vector<Factor> &;
        [[nodiscard]] auto factor_orders() const -> std::vector<std::int64_t>;
        [[nodiscard]] auto rank() const -> std::size_t;
        [[nodiscard]] auto order() const -> std::int64_t;
        [[nodiscard]] auto is_trivial() const -> bool;
        [[nodiscard]] auto is_canonical() const -> bool;

        /// Sorted copy; isomorphic groups have equal canonical forms.
        [[nodiscard]] auto canonical() const -> AbelianGroup;
        [[nodiscard]] auto isomorphic_to(const AbelianGroup &) const -> bool;

        /// Sub-product on the listed factor indices, in the listed order.
        [[nodiscard]] auto sub_product(std::span<const std::size_t> indices) const -> AbelianGroup;

        /// `Z2^2+Z3` style, factors in stored order.
        [[nodiscard]] auto to_string() const -> std::string;

        /// Same factor sequence.
        auto operator==(const AbelianGroup &) const -> bool;

        /// Mixed-radix index of an element, first factor most significant.
        [[nodiscard]] auto encode(std::span<const std::int64_t> coords) const -> std::int64_t;
        [[nodiscard]] auto decode(std::int64_t index) const -> std::vector<std::int64_t>;

    private:
        struct Data;
        std::shared_ptr<const Data> _data;
    };

    /// Direct sum with the factors of `a` first.
    [[nodiscard]] auto direct_sum(const AbelianGroup & a, const AbelianGroup & b) -> AbelianGroup;

    class GroupElement
    {
    public:
        GroupElement(AbelianGroup group, std::vector<std::int64_t> coords);

        [[nodiscard]] static auto zero(const AbelianGroup & group) -> GroupElement;
        [[nodiscard]] static auto from_index(const AbelianGroup & group, std::int64_t index) -> GroupElement;

        [[nodiscard]] auto group() const -> const AbelianGroup & { return _group; }
        [[nodiscard]] auto coords() const -> const std::vector<std::int64_t> & { return _coords; }
        [[nodiscard]] auto operator[](std::size_t i) const -> std::int64_t { return _coords[i]; }
        [[nodiscard]] auto index() const -> std::int64_t;
        [[nodiscard]] auto is_zero() const -> bool;

        /// `(1,0,2)`
        [[nodiscard]] auto to_string() const -> std::string;

        auto operator==(const GroupElement &) const -> bool;
        auto operator<(const GroupElement &) const -> bool;

    private:
        AbelianGroup _group;
        std::vector<std::int64_t> _coords;
    };

    [[nodiscard]] auto add(const GroupElement & a, const GroupElement & b) -> GroupElement;
    [[nodiscard]] auto subtract(const GroupElement & a, const GroupElement & b) -> GroupElement;
    [[nodiscard]] auto negate(const GroupElement & a) -> GroupElement;
    [[nodiscard]] auto scalar_mul(std::int64_t k, const GroupElement & a) -> GroupElement;

    auto operator+(const GroupElement & a, const GroupElement & b) -> GroupElement;
    auto operator-(const GroupElement & a, const GroupElement & b) -> GroupElement;
    auto operator-(const GroupElement & a) -> GroupElement;

    /// Order of an element, as an integer dividing the group exponent.
    [[nodiscard]] auto element_order(const GroupElement & a) -> std::int64_t;

    /// Every element, in index (lexicographic coordinate) order.
    [[nodiscard]] auto elements(const AbelianGroup & group) -> std::vector<GroupElement>;

    /// Elements of order exactly two, lexicographic; there are 2^p - 1 of them
    /// where p counts the factors of even order.
    [[nodiscard]] auto involutions(const AbelianGroup & group) -> std::vector<GroupElement>;
    [[nodiscard]] auto involution_count(const AbelianGroup & group) -> std::int64_t;

    /// Sum of all elements: the unique involution if there is exactly one,
    /// zero otherwise.
    [[nodiscard]] auto group_sum(const AbelianGroup & group) -> GroupElement;

    /// The unique g with r*g == mu. Throws NotInvertible unless gcd(r, |G|) == 1.
    [[nodiscard]] auto solve_scalar(std::int64_t r, const GroupElement & mu) -> GroupElement;

    /// One representative per isomorphism class, canonical factor order.
    /// Per prime the exponent partitions run from the single cyclic factor
    /// down to the elementary abelian group.
    [[nodiscard]] auto enumerate_groups(std::int64_t n) -> std::vector<AbelianGroup>;

    /// CRT-split arbitrary cyclic orders into a canonical group.
    [[nodiscard]] auto refine(std::span<const std::int64_t> factors) -> AbelianGroup;

    /// (2-part, odd part), both canonical.
    [[nodiscard]] auto even_odd_split(const AbelianGroup & group) -> std::pair<AbelianGroup, AbelianGroup>;

    /**
     * Injective homomorphism source -> target given by a factor matching: the
     * source factor i (order q^b) goes to target factor factor_map[i] (order
     * q^a, a >= b) by c -> c * q^(a - b).
     */
    struct Embedding
    {
        AbelianGroup source;
        AbelianGroup target;
        std::vector<std::size_t> factor_map;

        [[nodiscard]] auto apply(const GroupElement & g) const -> GroupElement;
    };

    /// Greedy per-prime matching of descending exponent lists.
    [[nodiscard]] auto embeds(const AbelianGroup & source, const AbelianGroup & target) -> std::optional<Embedding>;

    /// Parse `Z2^2+Z3`, `Z12`, `Z4+Z3`; always refined to canonical form.
    [[nodiscard]] auto parse_group(const std::string & spec) -> AbelianGroup;

    /// Parse `(1,0,2)` as an element of the given group.
    [[nodiscard]] auto parse_element(const AbelianGroup & group, const std::string & text) -> GroupElement;

    // Number-theory helpers shared with the other modules.
    [[nodiscard]] auto gcd(std::int64_t a, std::int64_t b) -> std::int64_t;
    [[nodiscard]] auto factorize(std::int64_t n) -> std::vector<std::pair<std::int64_t, int>>;
    [[nodiscard]] auto prime_power(std::int64_t n) -> std::optional<std::pair<std::int64_t, int>>;

    /**
     * Dense integer view of a group for inner loops: elements are their
     * mixed-radix indices and the addition table is precomputed for small
     * groups.
     */
    class GroupTable
    {
    public:
        explicit GroupTable(const AbelianGroup & group);

        [[nodiscard]] auto order() const -> int { return _order; }
        [[nodiscard]] auto add(int a, int b) const -> int
        {
            if (! _add.empty())
                return _add[static_cast<std::size_t>(a) * static_cast<std::size_t>(_order) + static_cast<std::size_t>(b)];
            return slow_add(a, b);
        }
        [[nodiscard]] auto neg(int a) const -> int { return _neg[static_cast<std::size_t>(a)]; }
        [[nodiscard]] auto sub(int a, int b) const -> int { return add(a, neg(b)); }
        [[nodiscard]] auto scale(std::int64_t k, int a) const -> int;
        [[nodiscard]] auto group() const -> const AbelianGroup & { return _group; }

    private:
        AbelianGroup _group;
        int _order;
        std::vector<int> _add;
        std::vector<int> _neg;

        [[nodiscard]] auto slow_add(int a, int b) const -> int;
    };
}

#endif
