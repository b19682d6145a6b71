// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "support.hh"

#include <gdm/kotzig.hh>
#include <gdm/search.hh>
#include <gdm/unions.hh>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace gdm;
using namespace gdm::test;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    struct Verdict
    {
        bool pass = true;
        string detail;

        void require(bool ok, const string & what)
        {
            if (! ok) {
                pass = false;
                if (! detail.empty())
                    detail += "; ";
                detail += what;
            }
        }
    };

    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point t) -> double
    {
        return std::chrono::duration<double>(Clock::now() - t).count();
    }

    auto el(const AbelianGroup & g, vector<std::int64_t> c) -> GroupElement
    {
        return GroupElement{g, std::move(c)};
    }

    auto ac1() -> Verdict
    {
        Verdict v;
        for (auto [name, l] : {std::pair{"tietze", tietze_labeling()}, std::pair{"x12", x12_labeling()}}) {
            auto t = Clock::now();
            auto r = verify_magic(l);
            auto ms = seconds_since(t) * 1000.0;
            v.require(static_cast<bool>(r), string(name) + " not magic");
            if (r)
                v.require(r.certificate->mu == el(l.group, {0, 0, 0}), string(name) + " mu=" + r.certificate->mu.to_string());
            v.require(ms < 10.0, string(name) + " took " + std::to_string(ms) + " ms");
        }
        return v;
    }

    auto ac2() -> Verdict
    {
        Verdict v;
        auto k33 = builtin("k33");
        auto two = disjoint_union(k33, 2);
        v.require(search_magic(k33, parse_group("Z6")).status == SearchStatus::NoneExists, "K33 x Z6");
        v.require(search_magic(two, parse_group("Z4+Z3")).status == SearchStatus::NoneExists, "2K33 x Z4+Z3");
        auto found = search_magic(two, parse_group("Z2^2+Z3"));
        v.require(found.status == SearchStatus::Found && verify_magic(found.certificates.front().labeling), "2K33 x Z2^2+Z3");
        v.require(involution_count(parse_group("Z4+Z3")) == 1 && involution_count(parse_group("Z2^2+Z3")) == 3,
            "involution counts");
        return v;
    }

    auto ac3() -> Verdict
    {
        Verdict v;
        v.require(search_magic(gp(5, 2), parse_group("Z10")).status == SearchStatus::NoneExists, "gp(5,2) x Z10");
        for (auto & g : enumerate_groups(12))
            v.require(search_magic(gp(6, 2), g).status == SearchStatus::NoneExists, "gp(6,2) x " + g.to_string());
        int decided = 0;
        for (int k = 1; k <= 2; ++k)
            for (int n = 2 * k + 1; n <= 40; ++n) {
                auto h = gp(n, k);
                if (! recognize_gp(h, k))
                    continue;
                for (auto & g : enumerate_groups(2 * n)) {
                    auto d = decide(h, g);
                    bool ok = d.kind == Decision::Kind::NotMagic && d.reason->applies(NonMagicTag::GPFamily);
                    v.require(ok, "decide gp(" + std::to_string(n) + "," + std::to_string(k) + ") x " + g.to_string());
                    ++decided;
                }
            }
        v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(decided) + " decide calls";
        return v;
    }

    auto ac4() -> Verdict
    {
        Verdict v;
        for (int n = 3; n <= 200; ++n)
            v.require(bznl_search(gf2_system_gp(n, 2), true).status == SearchStatus::NoneExists, "n=" + std::to_string(n));
        return v;
    }

    // every map V(gp(n,2)) -> group; identities on the constant-weight ones
    auto group_identity_sweep(int n, const AbelianGroup & group, Verdict & v) -> std::uint64_t
    {
        auto g = gp(n, 2);
        auto add = plain_table(group);
        auto all = elements(group);
        int q = static_cast<int>(group.order());
        int size = 2 * n;
        vector<int> label(static_cast<size_t>(size), 0);
        std::uint64_t constant = 0;
        while (true) {
            if (plain_is_magic(g, add, label)) {
                ++constant;
                vector<GroupElement> sample;
                for (auto i : label)
                    sample.push_back(all[static_cast<size_t>(i)]);
                auto report = check_gp2_group_identities(n, group, sample);
                v.require(report.ok(), "group identity violated on gp(" + std::to_string(n) + ",2)");
            }
            int i = 0;
            while (i < size && ++label[static_cast<size_t>(i)] == q)
                label[static_cast<size_t>(i++)] = 0;
            if (i == size)
                break;
        }
        return constant;
    }

    auto ac5() -> Verdict
    {
        Verdict v;
        std::uint64_t vectors = 0;
        for (int n = 3; n <= 60; ++n)
            for (auto & b : gf2_system_gp(n, 2).basis) {
                vector<std::uint8_t> bytes(b.size());
                for (size_t i = 0; i < b.size(); ++i)
                    bytes[i] = b.test(i) ? 1 : 0;
                auto report = check_gp2_identities(n, bytes);
                v.require(report.ok(), "binary identity violated at n=" + std::to_string(n));
                ++vectors;
            }
        auto z3 = group_identity_sweep(6, parse_group("Z3"), v);
        auto z2 = group_identity_sweep(5, parse_group("Z2"), v);
        if (v.pass)
            v.detail = std::to_string(vectors) + " basis vectors, " + std::to_string(z3) + " + " + std::to_string(z2)
                + " constant-weight maps";
        return v;
    }

    auto ac6() -> Verdict
    {
        Verdict v;
        for (int p = 2; p <= 6; ++p) {
            for (int k = 2; k <= 8; ++k) {
                bool predicted = (p * (k - 1)) % 2 == 0;
                bool built = false;
                try {
                    built = verify_array(build_integer(p, k));
                }
                catch (const NotExists &) {
                }
                v.require(built == predicted, "integer " + std::to_string(p) + "x" + std::to_string(k));
            }
            for (std::int64_t n = 1; n <= 16; ++n)
                for (auto & g : enumerate_groups(n)) {
                    bool predicted = p % 2 == 0 || involution_count(g) != 1;
                    bool built = false;
                    try {
                        built = verify_array(build_group(p, g));
                    }
                    catch (const NotExists &) {
                    }
                    v.require(built == predicted, "group " + std::to_string(p) + " x " + g.to_string());
                }
        }
        return v;
    }

    auto ac7() -> Verdict
    {
        Verdict v;
        auto x12 = *verify_magic(x12_labeling()).certificate;
        auto tietze = *verify_magic(tietze_labeling()).certificate;
        auto part = find_partition(x12.labeling.graph, 3);
        if (part.status != SearchStatus::Found) {
            v.require(false, "no 3-partition of X12");
            return v;
        }

        auto l1 = lemgl(x12, *part.partition, parse_group("Z3"));
        v.require(static_cast<bool>(verify_magic(l1.labeling)), "lemgl");
        v.require(l1.mu == el(l1.labeling.group, {0, 0, 0, 0}), "lemgl mu (mu',0)");

        auto big = parse_group("Z2^2+Z9");
        auto emb = *embeds(x12.labeling.group, big);
        vector<GroupElement> moved;
        for (auto & x : x12.labeling.values)
            moved.push_back(emb.apply(x));
        MagicCertificate inside{Labeling{x12.labeling.graph, big, moved}, emb.apply(x12.mu)};
        auto l2 = lemgl2(inside, *part.partition, 3, 3);
        v.require(static_cast<bool>(verify_magic(l2.labeling)), "lemgl2");
        v.require(l2.mu == inside.mu + el(big, {0, 0, 3 * (3 + 1) / 2}), "lemgl2 mu'+(0,r(t+1)/2)");

        for (auto spec : {"Z2^2+Z9", "Z2^2+Z3^2"}) {
            auto r = execute(plan_union(x12.labeling.graph, x12, *part.partition, parse_group(spec)));
            v.require(r.certificate.labeling.graph.order() == 36 && static_cast<bool>(verify_magic(r.certificate.labeling)),
                string("3.X12 over ") + spec);
        }

        auto three = obsgl(tietze, parse_group("Z3"));
        v.require(three.labeling.group.canonical() == parse_group("Z2^2+Z3^2")
                && static_cast<bool>(verify_magic(three.labeling)),
            "3.Tietze");
        auto nine = obsgl(three, parse_group("Z3"));
        v.require(nine.labeling.graph.order() == 108 && nine.labeling.group.canonical() == parse_group("Z2^2+Z3^3")
                && static_cast<bool>(verify_magic(nine.labeling)),
            "9.Tietze");
        return v;
    }

    auto ac8() -> Verdict
    {
        Verdict v;
        v.require(find_partition(builtin("x12"), 3).status == SearchStatus::Found, "X12 p=3");
        v.require(find_partition(builtin("k33"), 3).status == SearchStatus::Found, "K33 p=3");
        auto tietze = builtin("tietze");
        for (int p = 2; p <= tietze.order(); ++p)
            v.require(find_partition(tietze, p).status == SearchStatus::NoneExists, "Tietze p=" + std::to_string(p));
        return v;
    }

    auto ac9() -> Verdict
    {
        Verdict v;
        int graphs = 0;
        for (auto & e : cubic_corpus())
            if (e.graph.order() == 8) {
                ++graphs;
                v.require(search_magic(e.graph, parse_group("Z2^3")).status == SearchStatus::NoneExists, e.id);
            }
        v.require(graphs == 6, "expected 6 cubic graphs on 8 vertices, got " + std::to_string(graphs));
        return v;
    }

    auto ac10() -> Verdict
    {
        Verdict v;
        auto two = disjoint_union(builtin("k33"), 2);
        auto found = search_magic(two, parse_group("Z2^2+Z3"));
        if (found.status != SearchStatus::Found) {
            v.require(false, "no certificate");
            return v;
        }
        vector<size_t> first{0};
        auto zeroed = retarget_constant(found.certificates.front(), first, GroupElement::zero(parse_group("Z2")));
        auto b = project_binary(zeroed);
        auto types = classify_types(b);
        v.require(b.is_balanced(), "balanced");
        v.require(b.is_zero_neighborhood(), "zero-neighborhood");
        v.require(types.type2.size() == 9 && 2 * 9 == 3 * two.order() / 2, "|type2| = " + std::to_string(types.type2.size()));
        return v;
    }

    auto ac11() -> Verdict
    {
        Verdict v;
        int pairs = 0;
        for (auto & e : cubic_corpus())
            if (e.graph.order() <= 8)
                for (auto & g : enumerate_groups(e.graph.order())) {
                    ++pairs;
                    auto pruned = search_magic(e.graph, g).status == SearchStatus::Found;
                    v.require(pruned == brute_force_magic(e.graph, g), e.id + " x " + g.to_string());
                }
        if (v.pass)
            v.detail = std::to_string(pairs) + " pairs";
        return v;
    }
}

auto main() -> int
{
    vector<std::pair<string, std::function<Verdict()>>> criteria{
        {"stored labelings verify with mu=(0,0,0)", ac1},
        {"K33 and 2K33 searches", ac2},
        {"GP(n,1), GP(n,2) non-existence", ac3},
        {"balanced zero-neighborhood labelings of gp(n,2), 3<=n<=200", ac4},
        {"GP(n,2) identities", ac5},
        {"Kotzig existence boundary", ac6},
        {"union constructions", ac7},
        {"equitable partition verdicts", ac8},
        {"8-vertex cubic graphs x Z2^3", ac9},
        {"projection chain on 2K33", ac10},
        {"pruned search vs brute force", ac11},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t = Clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        }
        catch (const std::exception & e) {
            v.require(false, string("exception: ") + e.what());
        }
        auto s = seconds_since(t);
        failed += v.pass ? 0 : 1;
        std::cout << "AC" << (i + 1) << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << std::fixed << std::setprecision(3) << s
                  << "s " << criteria[i].first;
        if (! v.detail.empty())
            std::cout << " [" << v.detail << ']';
        std::cout << std::endl;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
