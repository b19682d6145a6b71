/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_LABELING_HH
#define GDM_GUARD_GDM_LABELING_HH 1

#include <gdm/graphs.hh>
#include <gdm/groups.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdm
{
    /// A total map from the vertices of a graph to one group.
    struct Labeling
    {
        Graph graph;
        AbelianGroup group;
        std::vector<GroupElement> values;

        Labeling(Graph g, AbelianGroup a, std::vector<GroupElement> v);

        [[nodiscard]] auto operator[](Vertex v) const -> const GroupElement & { return values[static_cast<std::size_t>(v)]; }
        [[nodiscard]] auto is_bijective() const -> bool;
    };

    /// Neighbor-sum of labels at x.
    [[nodiscard]] auto weight(const Labeling & l, Vertex x) -> GroupElement;

    /// A labeling known to be bijective with every weight equal to mu.
    struct MagicCertificate
    {
        Labeling labeling;
        GroupElement mu;
    };

    struct MagicDefect
    {
        enum class Kind
        {
            OrderMismatch,
            DuplicateLabel,
            WeightMismatch
        };

        Kind kind;
        std::optional<Vertex> vertex;
        std::optional<Vertex> other_vertex;
        std::optional<GroupElement> label;
        std::optional<GroupElement> weight;
        std::optional<GroupElement> expected;

        [[nodiscard]] auto describe(const Graph & g) const -> std::string;
    };

    struct Verification
    {
        std::optional<MagicCertificate> certificate;
        std::optional<MagicDefect> defect;

        explicit operator bool() const { return certificate.has_value(); }
    };

    /**
     * Scans vertices in index order. Bijectivity is checked first, so a
     * labeling with a repeated value reports the first vertex that reuses it;
     * otherwise the first vertex whose weight differs from that of vertex 0.
     */
    [[nodiscard]] auto verify_magic(const Labeling & l) -> Verification;

    enum class NonMagicTag
    {
        OddRegularUniqueInvolution,
        OrderTwoMod4,
        PowerOfTwoHypercubeArgument,
        FourCycleConnectedCubic,
        GPFamily,
        ExhaustiveSearch
    };

    [[nodiscard]] auto tag_name(NonMagicTag) -> std::string;

    struct NonMagicReason
    {
        NonMagicTag tag;
        /// The hypotheses that were checked for `tag`, human readable.
        std::string hypotheses;
        /// Every necessary condition that fails, `tag` first.
        std::vector<NonMagicTag> applicable;

        [[nodiscard]] auto applies(NonMagicTag t) const -> bool;
    };

    struct Decision
    {
        enum class Kind
        {
            Magic,
            NotMagic,
            Unknown
        };

        Kind kind;
        std::optional<MagicCertificate> certificate;
        std::optional<NonMagicReason> reason;
        /// Set for t K3,3 with at least two involutions, where existence is known.
        bool predicted_magic = false;
    };

    /// Supplies a certificate when one is known to exist; decide() stays search free.
    using MagicFinder = std::function<std::optional<MagicCertificate>(const Graph &, const AbelianGroup &)>;

    /**
     * Necessary conditions and known families, cheapest first. Throws
     * DomainError when the orders differ. Returns Unknown when nothing
     * applies; for t K3,3 with |I| >= 2 the finder (if any) supplies the
     * certificate.
     */
    [[nodiscard]] auto decide(const Graph & g, const AbelianGroup & group, const MagicFinder & finder = {}) -> Decision;

    /**
     * Translates every label by (h^{-1}(target - mu_A), 0) where h is
     * multiplication by the valency on the sub-product A of the listed
     * factors. The result has A-projection of mu equal to target.
     */
    [[nodiscard]] auto retarget_constant(const MagicCertificate & c, std::span<const std::size_t> factors,
        const GroupElement & target) -> MagicCertificate;

    struct BinaryLabeling
    {
        Graph graph;
        std::vector<std::uint8_t> values;

        [[nodiscard]] auto ones() const -> int;
        [[nodiscard]] auto is_balanced() const -> bool;
        [[nodiscard]] auto is_zero_neighborhood() const -> bool;
    };

    /// First-coordinate projection; needs a leading Z2 factor and mu with first coordinate 0.
    [[nodiscard]] auto project_binary(const MagicCertificate & c) -> BinaryLabeling;

    struct VertexTypes
    {
        std::vector<Vertex> type1;
        std::vector<Vertex> type2;
    };

    /// On a cubic zero-neighborhood labeling: no 1-labeled neighbors, or exactly two.
    [[nodiscard]] auto classify_types(const BinaryLabeling & b) -> VertexTypes;
}

#endif
