/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_UNIONS_HH
#define GDM_GUARD_GDM_UNIONS_HH 1

#include <gdm/graphs.hh>
#include <gdm/groups.hh>
#include <gdm/labeling.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace gdm
{
    /**
     * Labels copy j of x in part i by (l(x), k_{i,j}) from a normalized p x |B|
     * B-Kotzig array. Output group is direct_sum(A, B), graph is
     * disjoint_union(G, |B|), constant (mu, 0). Throws PreconditionError when
     * G is irregular, the partition is not equitable, or the array cannot
     * exist.
     */
    [[nodiscard]] auto lemgl(const MagicCertificate & cert, const VertexPartition & part, const AbelianGroup & b)
        -> MagicCertificate;

    /**
     * The last factor of the certificate's group must have order t * m and
     * every label's last coordinate must be a multiple of t. Copy j of x in
     * part i gets k_{i,j} (integer Kotzig array, entries 1..t) added to its
     * last coordinate. Constant mu + (0, r(t+1)/2). Throws PreconditionError.
     */
    [[nodiscard]] auto lemgl2(const MagicCertificate & cert, const VertexPartition & part, std::int64_t t, std::int64_t m)
        -> MagicCertificate;

    /// Copy j gets the constant second coordinate elements(B)[j]. Throws DomainError unless |B| is the valency.
    [[nodiscard]] auto obsgl(const MagicCertificate & cert, const AbelianGroup & b) -> MagicCertificate;

    struct UnionStep
    {
        enum class Action
        {
            Skip,
            Lemgl,
            Lemgl2
        };

        std::int64_t prime;
        int alpha;
        int beta;
        Action action;
        /// Index of the target factor this step completes.
        std::size_t slot;
        /// Copies added by this step (q^(alpha - beta)).
        std::int64_t t;
        /// Running copy count after the step.
        std::int64_t copies;
        /// Intermediate group after the step, factors in target order.
        AbelianGroup group;
    };

    [[nodiscard]] auto action_name(UnionStep::Action) -> std::string;

    struct UnionPlan
    {
        MagicCertificate base;
        VertexPartition partition;
        AbelianGroup target;
        Embedding embedding;
        std::vector<UnionStep> steps;
        std::int64_t copies;
    };

    /**
     * Steps follow the target's factors by ascending prime and, within a
     * prime, descending exponent. Throws PreconditionError when there is no
     * embedding of the certificate's group into the target, when the partition
     * is not equitable for g, or when p is odd and |target| / |H| is even.
     */
    [[nodiscard]] auto plan_union(const Graph & g, const MagicCertificate & cert, const VertexPartition & part,
        const AbelianGroup & target) -> UnionPlan;

    struct UnionResult
    {
        MagicCertificate certificate;
        /// One line per step, plus the initial coordinate map.
        std::vector<std::string> audit;
    };

    /// Certificate over the target for disjoint_union(G, copies), re-verified.
    [[nodiscard]] auto execute(const UnionPlan & plan) -> UnionResult;
}

#endif
