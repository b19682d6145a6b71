/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_SURVEY_HH
#define GDM_GUARD_GDM_SURVEY_HH 1

#include <gdm/graphs.hh>
#include <gdm/groups.hh>
#include <gdm/labeling.hh>
#include <gdm/search.hh>

#include <optional>
#include <string>
#include <vector>

namespace gdm
{
    struct SurveyEntry
    {
        std::string id;
        Graph graph;
    };

    struct SurveyRow
    {
        std::string graph;
        std::string group;
        /// MAGIC, NOT-MAGIC, UNKNOWN or EXHAUSTED.
        std::string verdict;
        /// A non-magic tag, or SEARCH when the search produced the verdict.
        std::string justification;
        std::optional<MagicCertificate> certificate;
        double seconds = 0.0;
    };

    /// Every `*.txt` graph file in the directory, sorted by file name; the id is the stem.
    [[nodiscard]] auto load_corpus(const std::string & dir) -> std::vector<SurveyEntry>;

    /**
     * Each graph against every group of matching order: decide() first,
     * search_magic() when that is inconclusive. Rows come back in corpus then
     * group order regardless of `threads`.
     */
    [[nodiscard]] auto survey(const std::vector<SurveyEntry> & corpus, int max_n, const SearchBudget & budget, int threads)
        -> std::vector<SurveyRow>;

    /// `graph<TAB>group<TAB>verdict<TAB>justification`.
    [[nodiscard]] auto format_row(const SurveyRow & row) -> std::string;
}

#endif
