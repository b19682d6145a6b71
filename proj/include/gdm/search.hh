/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_SEARCH_HH
#define GDM_GUARD_GDM_SEARCH_HH 1

#include <gdm/graphs.hh>
#include <gdm/groups.hh>
#include <gdm/labeling.hh>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdm
{
    struct SearchBudget
    {
        enum class Mode
        {
            First,
            All
        };

        std::uint64_t node_limit = 100'000'000;
        double time_limit = 600.0;
        Mode mode = Mode::First;
    };

    enum class SearchStatus
    {
        Found,
        NoneExists,
        Exhausted
    };

    [[nodiscard]] auto status_name(SearchStatus) -> std::string;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    /// Pruning rules for search_magic; all on by default.
    struct MagicSearchRules
    {
        /// On a regular graph, pin the first vertex of the order to 0.
        bool fix_translation = true;
        /// A vertex with one unlabeled neighbor forces that neighbor's label.
        bool forced_neighbors = true;
        /// On GP(n, 2), the four-term relations on the x and y cycles.
        bool gp2_relations = true;

        [[nodiscard]] auto names() const -> std::vector<std::string>;
    };

    struct MagicSearchResult
    {
        SearchStatus status;
        /// First mode: at most one. All mode: every solution in the reduced space.
        std::vector<MagicCertificate> certificates;
        SearchStats stats;
        /// Rules that were actually in force (e.g. no translation fix on irregular graphs).
        std::vector<std::string> rules;
    };

    /**
     * Backtracking over a BFS vertex order (roots of maximum degree, ties by
     * index). The magic constant is bound when the first neighborhood closes.
     * Throws DomainError when |V| != |group|.
     */
    [[nodiscard]] auto search_magic(const Graph & g, const AbelianGroup & group, const SearchBudget & budget = {},
        const MagicSearchRules & rules = {}) -> MagicSearchResult;

    /// The order in which search_magic assigns vertices.
    [[nodiscard]] auto search_order(const Graph & g) -> std::vector<Vertex>;

    using Gf2Vector = boost::dynamic_bitset<std::uint64_t>;

    /// Adjacency matrix over GF(2) with a row-reduced nullspace basis.
    struct Gf2System
    {
        int vertices = 0;
        std::vector<Gf2Vector> rows;
        std::vector<Gf2Vector> basis;

        [[nodiscard]] auto nullity() const -> int { return static_cast<int>(basis.size()); }
        [[nodiscard]] auto in_kernel(const Gf2Vector & v) const -> bool;
    };

    [[nodiscard]] auto gf2_system(const Graph & g) -> Gf2System;

    /**
     * The GF(2) system of GP(n, k) built straight from the index arithmetic,
     * for any n >= 3: parallel edges (GP(4, 2)) cancel mod 2. Vertex x_i is i
     * and y_i is n + i.
     */
    [[nodiscard]] auto gf2_system_gp(int n, int k) -> Gf2System;

    struct BznlResult
    {
        SearchStatus status;
        std::optional<std::vector<std::uint8_t>> values;
        int nullity = 0;
        /// Answered by the counting argument (cubic, half-order odd) without enumeration.
        bool parity_shortcut = false;
        std::uint64_t vectors_enumerated = 0;
    };

    constexpr int default_nullity_cap = 24;

    /// Balanced zero-neighborhood labeling by kernel enumeration.
    [[nodiscard]] auto bznl_search(const Graph & g, int nullity_cap = default_nullity_cap) -> BznlResult;
    /// As above on a prepared system; `cubic` enables the counting shortcut.
    [[nodiscard]] auto bznl_search(const Gf2System & system, bool cubic, int nullity_cap = default_nullity_cap) -> BznlResult;

    struct IdentityReport
    {
        std::uint64_t checked = 0;
        std::vector<std::string> violations;

        [[nodiscard]] auto ok() const -> bool { return violations.empty(); }
    };

    /**
     * The binary identities of GP(n, 2) kernel vectors: y_i = x_{i-1} + x_{i+1},
     * x_i = y_{i-2} + y_{i+2}, the five-term x relation, the shifts by 5t and 3t,
     * the shift by 15 of sums, and period 15. Requires only kernel membership
     * (index arithmetic, n >= 3); throws DomainError otherwise.
     */
    [[nodiscard]] auto check_gp2_identities(int n, std::span<const std::uint8_t> v) -> IdentityReport;

    /**
     * ℓ(y_i) + ℓ(y_{i+5}) = ℓ(y_{i+3}) + ℓ(y_{i+8}) and the x analogue, for any
     * map V(GP(n, 2)) -> group with constant weight. Throws DomainError when
     * the weight is not constant.
     */
    [[nodiscard]] auto check_gp2_group_identities(int n, const AbelianGroup & group, std::span<const GroupElement> sample)
        -> IdentityReport;

    struct PartitionResult
    {
        SearchStatus status;
        std::optional<VertexPartition> partition;
        SearchStats stats;
    };

    /// Equitable p-partition; parts are numbered by first appearance.
    [[nodiscard]] auto find_partition(const Graph & g, int p, const SearchBudget & budget = {}) -> PartitionResult;

    /// theta[i] is the image of element i; g -> g + theta(g) is a permutation too.
    [[nodiscard]] auto find_complete_mapping(const AbelianGroup & group) -> std::optional<std::vector<GroupElement>>;

    /// decide() with search_magic as the finder for known-magic families.
    [[nodiscard]] auto decide_with_search(const Graph & g, const AbelianGroup & group, const SearchBudget & budget = {})
        -> Decision;
}

#endif
