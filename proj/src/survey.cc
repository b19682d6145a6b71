/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/io.hh>
#include <gdm/survey.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

using std::size_t;
using std::string;
using std::vector;

using namespace gdm;

auto gdm::load_corpus(const string & dir) -> vector<SurveyEntry>
{
    vector<std::filesystem::path> files;
    for (auto & e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".txt")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());

    vector<SurveyEntry> corpus;
    for (auto & f : files) {
        std::istringstream in(read_file(f.string()));
        corpus.push_back(SurveyEntry{f.stem().string(), read_graph(in)});
    }
    return corpus;
}

namespace
{
    auto survey_one(const SurveyEntry & e, const AbelianGroup & group, const SearchBudget & budget) -> SurveyRow
    {
        auto start = std::chrono::steady_clock::now();
        SurveyRow row{e.id, group.to_string(), "UNKNOWN", "-", std::nullopt, 0.0};

        bool exhausted = false;
        auto d = decide(e.graph, group, [&](const Graph & g, const AbelianGroup & a) -> std::optional<MagicCertificate> {
            auto r = search_magic(g, a, budget);
            exhausted = r.status == SearchStatus::Exhausted;
            if (r.status == SearchStatus::Found)
                return r.certificates.front();
            return std::nullopt;
        });

        if (d.kind == Decision::Kind::NotMagic) {
            row.verdict = "NOT-MAGIC";
            row.justification = tag_name(d.reason->tag);
        }
        else if (d.kind == Decision::Kind::Magic) {
            row.verdict = "MAGIC";
            row.justification = "SEARCH";
            row.certificate = d.certificate;
        }
        else if (! d.predicted_magic) {
            auto r = search_magic(e.graph, group, budget);
            exhausted = r.status == SearchStatus::Exhausted;
            if (r.status == SearchStatus::Found) {
                row.verdict = "MAGIC";
                row.justification = "SEARCH";
                row.certificate = r.certificates.front();
            }
            else if (r.status == SearchStatus::NoneExists) {
                row.verdict = "NOT-MAGIC";
                row.justification = tag_name(NonMagicTag::ExhaustiveSearch);
            }
        }
        if (exhausted && row.verdict == "UNKNOWN") {
            row.verdict = "EXHAUSTED";
            row.justification = "SEARCH";
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return row;
    }
}

auto gdm::survey(const vector<SurveyEntry> & corpus, int max_n, const SearchBudget & budget, int threads) -> vector<SurveyRow>
{
    vector<std::pair<const SurveyEntry *, AbelianGroup>> jobs;
    for (auto & e : corpus) {
        if (max_n > 0 && e.graph.order() > max_n)
            continue;
        for (auto & g : enumerate_groups(std::max(1, e.graph.order())))
            jobs.emplace_back(&e, g);
    }

    vector<std::optional<SurveyRow>> rows(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i; (i = next++) < jobs.size();)
            rows[i] = survey_one(*jobs[i].first, jobs[i].second, budget);
    };
    vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, threads); ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    vector<SurveyRow> out;
    for (auto & r : rows)
        out.push_back(std::move(*r));
    return out;
}

auto gdm::format_row(const SurveyRow & row) -> string
{
    return row.graph + "\t" + row.group + "\t" + row.verdict + "\t" + row.justification;
}
