/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_KOTZIG_HH
#define GDM_GUARD_GDM_KOTZIG_HH 1

#include <gdm/groups.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gdm
{
    /// p x k grid over {1..k}: rows are permutations, columns sum to p(k+1)/2.
    struct KotzigArray
    {
        int rows = 0;
        int cols = 0;
        std::vector<std::vector<int>> entries;

        [[nodiscard]] auto at(int i, int j) const -> int { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    };

    /// p x |group| grid: rows are permutations of the group, columns share one sum.
    struct GroupKotzigArray
    {
        AbelianGroup group;
        int rows = 0;
        std::vector<std::vector<GroupElement>> entries;
        bool normalized = false;

        [[nodiscard]] auto at(int i, int j) const -> const GroupElement &
        {
            return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    };

    /// Empty when an integer Kotzig array of this size exists, otherwise the violated condition.
    [[nodiscard]] auto integer_kotzig_obstruction(int p, int k) -> std::optional<std::string>;
    [[nodiscard]] auto group_kotzig_obstruction(int p, const AbelianGroup & group) -> std::optional<std::string>;

    /// Pairs of (1..k, k..1), plus one searched 3-row block when p is odd. Throws NotExists.
    [[nodiscard]] auto build_integer(int p, int k) -> KotzigArray;

    /// Normalized: pairs (e, -e), plus (e, theta(e), -e-theta(e)) when p is odd. Throws NotExists.
    [[nodiscard]] auto build_group(int p, const AbelianGroup & group) -> GroupKotzigArray;

    /// Translate the first row so every column sums to zero. Throws DomainError on an invalid array.
    [[nodiscard]] auto normalize(const GroupKotzigArray & a) -> GroupKotzigArray;

    [[nodiscard]] auto verify_array(const KotzigArray & a) -> bool;
    [[nodiscard]] auto verify_array(const GroupKotzigArray & a) -> bool;
}

#endif
