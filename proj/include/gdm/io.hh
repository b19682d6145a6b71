/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_IO_HH
#define GDM_GUARD_GDM_IO_HH 1

#include <gdm/graphs.hh>
#include <gdm/groups.hh>
#include <gdm/labeling.hh>

#include <iosfwd>
#include <string>

namespace gdm
{
    /// `n m` then m lines `u v`, 0-based; `#` starts a comment. Throws FormatError.
    [[nodiscard]] auto read_graph(std::istream & in) -> Graph;
    void write_graph(std::ostream & out, const Graph & g);

    /**
     * `gp:<n>:<k>`, a builtin name, `t:<count>:<selector>` for a disjoint
     * union, or else a path to a graph file.
     */
    [[nodiscard]] auto select_graph(const std::string & selector) -> Graph;

    /// `group <spec>` then `<vertex-name> = (c1,...,ck)` for every vertex. Throws FormatError.
    [[nodiscard]] auto read_labeling(std::istream & in, const Graph & g) -> Labeling;
    /// Lines sorted by vertex name.
    void write_labeling(std::ostream & out, const Labeling & l);

    /// One part per line, vertex names separated by spaces. Throws FormatError.
    [[nodiscard]] auto read_partition(std::istream & in, const Graph & g) -> VertexPartition;
    void write_partition(std::ostream & out, const Graph & g, const VertexPartition & p);

    [[nodiscard]] auto read_file(const std::string & path) -> std::string;
}

#endif
