#ifndef GDM_GUARD_TESTS_SUPPORT_HH
#define GDM_GUARD_TESTS_SUPPORT_HH 1

#include <gdm/io.hh>
#include <gdm/labeling.hh>
#include <gdm/survey.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace gdm::test
{
    inline auto fixture(const std::string & rel) -> std::string
    {
        return std::string{GDM_FIXTURE_DIR} + "/" + rel;
    }

    inline auto cubic_corpus() -> std::vector<SurveyEntry>
    {
        return load_corpus(fixture("cubic"));
    }

    inline auto stored_labeling(const std::string & graph_name, const std::string & file) -> Labeling
    {
        std::istringstream in(read_file(fixture("labelings/" + file)));
        return read_labeling(in, builtin(graph_name));
    }

    inline auto tietze_labeling() -> Labeling { return stored_labeling("tietze", "tietze.lbl"); }
    inline auto x12_labeling() -> Labeling { return stored_labeling("x12", "x12.lbl"); }

    /// Addition table of a group by plain mixed-radix arithmetic on indices.
    inline auto plain_table(const AbelianGroup & g) -> std::vector<std::vector<int>>
    {
        auto m = g.factor_orders();
        int n = static_cast<int>(g.order());
        auto decode = [&](int i) {
            std::vector<std::int64_t> c(m.size());
            for (std::size_t k = m.size(); k-- > 0;) {
                c[k] = i % m[k];
                i /= static_cast<int>(m[k]);
            }
            return c;
        };
        std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto x = decode(a), y = decode(b);
                std::int64_t idx = 0;
                for (std::size_t k = 0; k < m.size(); ++k)
                    idx = idx * m[k] + (x[k] + y[k]) % m[k];
                t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(idx);
            }
        return t;
    }

    /// Per-vertex weight scan of an index labeling; true iff all weights agree.
    inline auto plain_is_magic(const Graph & g, const std::vector<std::vector<int>> & add, const std::vector<int> & label) -> bool
    {
        int first = -1;
        for (Vertex v = 0; v < g.order(); ++v) {
            int w = 0;
            for (auto u : g.neighbors(v))
                w = add[static_cast<std::size_t>(w)][static_cast<std::size_t>(label[static_cast<std::size_t>(u)])];
            if (first == -1)
                first = w;
            else if (w != first)
                return false;
        }
        return true;
    }

    /// Every bijection V -> group, no pruning: does any one have constant weight?
    inline auto brute_force_magic(const Graph & g, const AbelianGroup & group) -> bool
    {
        auto add = plain_table(group);
        std::vector<int> label(static_cast<std::size_t>(g.order()));
        std::iota(label.begin(), label.end(), 0);
        do {
            if (plain_is_magic(g, add, label))
                return true;
        } while (std::next_permutation(label.begin(), label.end()));
        return false;
    }
}

#endif
