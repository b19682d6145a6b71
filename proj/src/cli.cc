/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <gdm/cli.hh>
#include <gdm/io.hh>
#include <gdm/kotzig.hh>
#include <gdm/search.hh>
#include <gdm/survey.hh>
#include <gdm/unions.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

using std::ostream;
using std::size_t;
using std::string;
using std::vector;

using namespace gdm;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_format = 1;
    constexpr int exit_exhausted = 2;

    struct Options
    {
        string graph, group, labeling, partition = "auto", target, out_file;
        string corpus, cert_dir = "survey-certs", times;
        std::uint64_t budget_nodes = SearchBudget{}.node_limit;
        double budget_seconds = SearchBudget{}.time_limit;
        bool all = false, no_prune = false;
        int parts = 0, rows = 0, cols = 0, nullity_cap = default_nullity_cap, max_n = 0;
        std::int64_t order = 0;
    };

    auto budget_of(const Options & o) -> SearchBudget
    {
        return SearchBudget{o.budget_nodes, o.budget_seconds, o.all ? SearchBudget::Mode::All : SearchBudget::Mode::First};
    }

    auto load_labeling(const Options & o, const Graph & g) -> Labeling
    {
        std::istringstream in(read_file(o.labeling));
        return read_labeling(in, g);
    }

    void print_exhausted(ostream & out, const SearchStats & s)
    {
        out << "EXHAUSTED nodes=" << s.nodes << " time=" << std::fixed << std::setprecision(3) << s.seconds << '\n';
    }

    auto join(const vector<string> & v, const string & sep) -> string
    {
        string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? sep : "") + v[i];
        return s;
    }

    auto cmd_group(const Options & o, ostream & out) -> int
    {
        vector<AbelianGroup> groups;
        if (! o.group.empty())
            groups.push_back(parse_group(o.group));
        else
            groups = enumerate_groups(o.order);
        for (auto & g : groups)
            out << g.to_string() << " order=" << g.order() << " involutions=" << involution_count(g)
                << " sum=" << group_sum(g).to_string() << '\n';
        return exit_ok;
    }

    auto cmd_search_magic(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto group = parse_group(o.group);
        MagicSearchRules rules;
        if (o.no_prune)
            rules = MagicSearchRules{false, false, false};
        auto r = search_magic(g, group, budget_of(o), rules);
        if (r.status == SearchStatus::Exhausted) {
            print_exhausted(out, r.stats);
            out << "# rules: " << join(r.rules, ",") << '\n';
            return exit_exhausted;
        }
        out << status_name(r.status) << '\n';
        out << "# rules: " << (r.rules.empty() ? string{"none"} : join(r.rules, ",")) << '\n';
        if (o.all)
            out << "# solutions: " << r.certificates.size() << '\n';
        for (auto & c : r.certificates) {
            out << "MAGIC mu=" << c.mu.to_string() << '\n';
            write_labeling(out, c.labeling);
        }
        return exit_ok;
    }

    auto cmd_search_bznl(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto r = bznl_search(g, o.nullity_cap);
        if (r.status == SearchStatus::Exhausted) {
            out << "EXHAUSTED nullity=" << r.nullity << " cap=" << o.nullity_cap << '\n';
            return exit_exhausted;
        }
        out << status_name(r.status) << '\n';
        if (r.parity_shortcut)
            out << "# counting argument: cubic with odd half-order\n";
        else
            out << "# nullity: " << r.nullity << '\n';
        if (r.values)
            for (Vertex v = 0; v < g.order(); ++v)
                out << g.name(v) << " = " << int((*r.values)[static_cast<size_t>(v)]) << '\n';
        return exit_ok;
    }

    auto cmd_search_partition(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto r = find_partition(g, o.parts, budget_of(o));
        if (r.status == SearchStatus::Exhausted) {
            print_exhausted(out, r.stats);
            return exit_exhausted;
        }
        out << status_name(r.status) << '\n';
        if (r.partition)
            write_partition(out, g, *r.partition);
        return exit_ok;
    }

    auto cmd_search_complete_mapping(const Options & o, ostream & out) -> int
    {
        auto group = parse_group(o.group);
        auto theta = find_complete_mapping(group);
        out << (theta ? "FOUND" : "NONE") << '\n';
        if (theta) {
            auto all = elements(group);
            for (size_t i = 0; i < all.size(); ++i)
                out << all[i].to_string() << " -> " << (*theta)[i].to_string() << '\n';
        }
        return exit_ok;
    }

    auto cmd_search_decide(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto d = decide_with_search(g, parse_group(o.group), budget_of(o));
        switch (d.kind) {
        case Decision::Kind::Magic:
            out << "MAGIC mu=" << d.certificate->mu.to_string() << '\n';
            write_labeling(out, d.certificate->labeling);
            break;
        case Decision::Kind::NotMagic:
            out << "NOT-MAGIC reason=" << tag_name(d.reason->tag) << '\n';
            out << "# " << d.reason->hypotheses << '\n';
            break;
        case Decision::Kind::Unknown:
            out << "UNKNOWN\n";
            break;
        }
        return exit_ok;
    }

    auto cmd_verify(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto v = verify_magic(load_labeling(o, g));
        if (v)
            out << "MAGIC mu=" << v.certificate->mu.to_string() << '\n';
        else
            out << "NOT-MAGIC reason=" << v.defect->describe(g) << '\n';
        return exit_ok;
    }

    auto cmd_kotzig(const Options & o, ostream & out) -> int
    {
        if (! o.group.empty()) {
            auto group = parse_group(o.group);
            if (auto why = group_kotzig_obstruction(o.rows, group)) {
                out << "NOT-EXISTS " << *why << '\n';
                return exit_ok;
            }
            auto a = build_group(o.rows, group);
            for (auto & row : a.entries) {
                vector<string> cells;
                for (auto & x : row)
                    cells.push_back(x.to_string());
                out << join(cells, " ") << '\n';
            }
            return exit_ok;
        }
        if (auto why = integer_kotzig_obstruction(o.rows, o.cols)) {
            out << "NOT-EXISTS " << *why << '\n';
            return exit_ok;
        }
        auto a = build_integer(o.rows, o.cols);
        for (auto & row : a.entries) {
            vector<string> cells;
            for (auto x : row)
                cells.push_back(std::to_string(x));
            out << join(cells, " ") << '\n';
        }
        return exit_ok;
    }

    auto emit(const Options & o, ostream & out, const MagicCertificate & c) -> void
    {
        out << "MAGIC mu=" << c.mu.to_string() << '\n';
        if (o.out_file.empty())
            write_labeling(out, c.labeling);
        else {
            std::ofstream f(o.out_file);
            if (! f)
                throw FormatError("cannot write " + o.out_file);
            write_labeling(f, c.labeling);
        }
    }

    auto cmd_construct_union(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto l = load_labeling(o, g);
        auto v = verify_magic(l);
        if (! v)
            throw PreconditionError("base labeling is not magic: " + v.defect->describe(g));
        auto target = parse_group(o.target);

        std::optional<VertexPartition> part;
        if (o.partition != "auto") {
            std::istringstream in(read_file(o.partition));
            part = read_partition(in, g);
        }
        else if (auto r = regular_valency(g)) {
            bool t_odd = target.order() / l.group.order() % 2 == 1;
            for (int p = 2; p <= *r && ! part; ++p) {
                if (*r % p != 0 || (p % 2 == 1 && ! t_odd))
                    continue;
                auto found = find_partition(g, p, budget_of(o));
                if (found.status == SearchStatus::Exhausted) {
                    print_exhausted(out, found.stats);
                    return exit_exhausted;
                }
                part = found.partition;
            }
        }
        if (! part)
            throw PreconditionError("no usable equitable partition");

        auto plan = plan_union(g, *v.certificate, *part, target);
        auto result = execute(plan);
        for (auto & line : result.audit)
            out << "# " << line << '\n';
        emit(o, out, result.certificate);
        return exit_ok;
    }

    auto cmd_construct_copies(const Options & o, ostream & out) -> int
    {
        auto g = select_graph(o.graph);
        auto v = verify_magic(load_labeling(o, g));
        if (! v)
            throw PreconditionError("base labeling is not magic: " + v.defect->describe(g));
        emit(o, out, obsgl(*v.certificate, parse_group(o.group)));
        return exit_ok;
    }

    auto cmd_survey(const Options & o, ostream & out) -> int
    {
        int threads = 1;
        if (auto env = std::getenv("GDM_THREADS"))
            threads = std::max(1, std::atoi(env));
        auto rows = survey(load_corpus(o.corpus), o.max_n, budget_of(o), threads);

        std::filesystem::create_directories(o.cert_dir);
        std::optional<std::ofstream> times;
        if (! o.times.empty())
            times.emplace(o.times);

        bool exhausted = false;
        out << "graph\tgroup\tverdict\tjustification\tcertificate\n";
        for (auto & row : rows) {
            string ref = "-";
            if (row.certificate) {
                ref = (std::filesystem::path(o.cert_dir) / (row.graph + "__" + row.group + ".lbl")).string();
                std::ofstream f(ref);
                write_labeling(f, row.certificate->labeling);
            }
            exhausted = exhausted || row.verdict == "EXHAUSTED";
            out << format_row(row) << '\t' << ref << '\n';
            if (times)
                *times << row.graph << '\t' << row.group << '\t' << std::fixed << std::setprecision(6) << row.seconds << '\n';
        }
        return exhausted ? exit_exhausted : exit_ok;
    }
}

auto gdm::run(int argc, const char * const * argv, ostream & out, ostream & err) -> int
{
    CLI::App app{"group distance magic labelings of cubic graphs", "gdm"};
    app.require_subcommand(1);
    Options o;

    auto add_budget = [&](CLI::App * c) {
        c->add_option("--budget-nodes", o.budget_nodes, "node limit")->check(CLI::PositiveNumber);
        c->add_option("--budget-seconds", o.budget_seconds, "time limit in seconds")->check(CLI::PositiveNumber);
    };

    auto group_cmd = app.add_subcommand("group", "list groups of an order, or describe one group");
    auto order_opt = group_cmd->add_option("--order", o.order, "list every abelian group of this order");
    group_cmd->add_option("--spec", o.group, "describe this group")->excludes(order_opt);

    auto search_cmd = app.add_subcommand("search", "searches and decisions");
    search_cmd->require_subcommand(1);
    auto s_magic = search_cmd->add_subcommand("magic", "backtracking search for a magic labeling");
    s_magic->add_option("--graph", o.graph)->required();
    s_magic->add_option("--group", o.group)->required();
    s_magic->add_flag("--all", o.all, "every solution with the first vertex pinned to 0");
    s_magic->add_flag("--no-prune", o.no_prune, "plain backtracking without propagation or symmetry breaking");
    add_budget(s_magic);
    auto s_bznl = search_cmd->add_subcommand("bznl", "balanced zero-neighborhood labeling over GF(2)");
    s_bznl->add_option("--graph", o.graph)->required();
    s_bznl->add_option("--nullity-cap", o.nullity_cap);
    auto s_part = search_cmd->add_subcommand("partition", "equitable p-partition");
    s_part->add_option("--graph", o.graph)->required();
    s_part->add_option("--parts,-p", o.parts)->required();
    add_budget(s_part);
    auto s_cm = search_cmd->add_subcommand("complete-mapping", "complete mapping of a group");
    s_cm->add_option("--group", o.group)->required();
    auto s_decide = search_cmd->add_subcommand("decide", "necessary conditions, then search for known families");
    s_decide->add_option("--graph", o.graph)->required();
    s_decide->add_option("--group", o.group)->required();
    add_budget(s_decide);

    auto verify_cmd = app.add_subcommand("verify", "check a labeling file");
    verify_cmd->add_option("--graph", o.graph)->required();
    verify_cmd->add_option("--labeling", o.labeling)->required();

    auto kotzig_cmd = app.add_subcommand("kotzig", "build a Kotzig array");
    kotzig_cmd->add_option("--rows", o.rows)->required();
    kotzig_cmd->add_option("--cols", o.cols);
    kotzig_cmd->add_option("--group", o.group, "group Kotzig array over this group");

    auto construct_cmd = app.add_subcommand("construct", "labelings of disjoint unions");
    construct_cmd->require_subcommand(1);
    auto c_union = construct_cmd->add_subcommand("union", "union construction driven by a subgroup embedding");
    c_union->add_option("--graph", o.graph)->required();
    c_union->add_option("--labeling", o.labeling)->required();
    c_union->add_option("--partition", o.partition, "partition file, or auto");
    c_union->add_option("--target-group", o.target)->required();
    c_union->add_option("--out", o.out_file);
    add_budget(c_union);
    auto c_copies = construct_cmd->add_subcommand("copies", "r copies of an r-regular graph, one element of B per copy");
    c_copies->add_option("--graph", o.graph)->required();
    c_copies->add_option("--labeling", o.labeling)->required();
    c_copies->add_option("--group", o.group, "B, of order equal to the valency")->required();
    c_copies->add_option("--out", o.out_file);

    auto survey_cmd = app.add_subcommand("survey", "every corpus graph against every group of its order");
    survey_cmd->add_option("--corpus", o.corpus)->required();
    survey_cmd->add_option("--max-n", o.max_n);
    survey_cmd->add_option("--cert-dir", o.cert_dir);
    survey_cmd->add_option("--times", o.times, "sidecar file for wall times");
    add_budget(survey_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp & e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_format;
    }

    try {
        if (*group_cmd) {
            if (o.group.empty() && o.order == 0) {
                err << "group: give --order or --spec\n";
                return exit_format;
            }
            return cmd_group(o, out);
        }
        if (*s_magic)
            return cmd_search_magic(o, out);
        if (*s_bznl)
            return cmd_search_bznl(o, out);
        if (*s_part)
            return cmd_search_partition(o, out);
        if (*s_cm)
            return cmd_search_complete_mapping(o, out);
        if (*s_decide)
            return cmd_search_decide(o, out);
        if (*verify_cmd)
            return cmd_verify(o, out);
        if (*kotzig_cmd) {
            if (o.group.empty() && o.cols == 0) {
                err << "kotzig: give --cols or --group\n";
                return exit_format;
            }
            return cmd_kotzig(o, out);
        }
        if (*c_union)
            return cmd_construct_union(o, out);
        if (*c_copies)
            return cmd_construct_copies(o, out);
        if (*survey_cmd)
            return cmd_survey(o, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_format;
    }
    catch (const std::filesystem::filesystem_error & e) {
        err << "error: " << e.what() << '\n';
        return exit_format;
    }
    return exit_format;
}
