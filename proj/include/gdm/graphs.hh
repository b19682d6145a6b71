/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_GRAPHS_HH
#define GDM_GUARD_GDM_GRAPHS_HH 1

#include <gdm/errors.hh>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gdm
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Immutable simple undirected graph. Neighbor lists are sorted; every
     * vertex has a display name (`v<i>` unless a constructor supplies one).
     */
    class Graph
    {
    public:
        Graph();

        [[nodiscard]] auto order() const -> int;
        [[nodiscard]] auto size() const -> int;
        [[nodiscard]] auto neighbors(Vertex v) const -> std::span<const Vertex>;
        [[nodiscard]] auto degree(Vertex v) const -> int;
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool;
        [[nodiscard]] auto name(Vertex v) const -> const std::string &;
        [[nodiscard]] auto names() const -> const std::vector<std::string> &;
        [[nodiscard]] auto find(const std::string & name) const -> std::optional<Vertex>;
        /// Each edge once as (u, v) with u < v, sorted.
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        friend auto from_edges(int n, std::span<const Edge> edges, std::vector<std::string> names) -> Graph;

    private:
        struct Data;
        std::shared_ptr<const Data> _data;
    };

    /// Duplicate edges collapse; loops and out-of-range endpoints are FormatErrors.
    [[nodiscard]] auto from_edges(int n, std::span<const Edge> edges, std::vector<std::string> names = {}) -> Graph;

    /// GP(n, k) for 1 <= k < n/2; x_i is vertex i and y_i is vertex n + i.
    [[nodiscard]] auto gp(int n, int k) -> Graph;

    /// `k33`, `tietze`, `x12`, `k4`, `q3`.
    [[nodiscard]] auto builtin(const std::string & name) -> Graph;

    /// t copies, copy-major: vertex v of copy j (0-based) is j * n + v and is
    /// named `<name>^<j+1>`.
    [[nodiscard]] auto disjoint_union(const Graph & g, int t) -> Graph;

    [[nodiscard]] auto regular_valency(const Graph & g) -> std::optional<int>;
    [[nodiscard]] auto has_4cycle(const Graph & g) -> bool;
    [[nodiscard]] auto is_connected(const Graph & g) -> bool;
    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    [[nodiscard]] auto components(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// True when every component is a K3,3.
    [[nodiscard]] auto is_union_of_k33(const Graph & g) -> bool;

    /**
     * Recognition of GP(n, k) through the canonical naming only: either the
     * names are x_0..x_{n-1}, y_0..y_{n-1} and the edges are those of gp(n, k)
     * under that naming, or the graph equals gp(n, k) index for index.
     */
    struct GpShape
    {
        int n;
        int k;
        std::vector<Vertex> x;
        std::vector<Vertex> y;
    };

    [[nodiscard]] auto recognize_gp(const Graph & g, int k) -> std::optional<GpShape>;

    /**
     * A partition of the vertex set into p non-empty parts. part_of[v] is the
     * 0-based part of v.
     */
    struct VertexPartition
    {
        int parts = 0;
        std::vector<int> part_of;

        [[nodiscard]] auto members(int part) const -> std::vector<Vertex>;
    };

    /// Disjoint, covering and non-empty.
    [[nodiscard]] auto is_partition(const Graph & g, const VertexPartition & p) -> bool;
    /// Every vertex has the same number of neighbors in each part.
    [[nodiscard]] auto is_equitable(const Graph & g, const VertexPartition & p) -> bool;
    /// Copy j of vertex v lands in the part of v.
    [[nodiscard]] auto lift_partition(const VertexPartition & p, int copies) -> VertexPartition;
}

#endif
