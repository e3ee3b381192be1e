#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "qhpp/kodaira.hpp"

using namespace qhpp;

namespace {

using NameList = std::vector<std::string>;

std::set<NameList> as_name_sets(const std::vector<FiberConfiguration>& configs) {
    std::set<NameList> out;
    for (const auto& c : configs) out.insert(c.sorted_names());
    return out;
}

// ---- independent generate-and-filter oracle -------------------------------
//
// Multisets arrive via integer partitions of the Euler number with every
// choice of type per part; chain placement is checked on vertex-subset
// bitmasks instead of path search.

std::vector<KodairaFiberType> types_with_euler(int e) {
    std::vector<KodairaFiberType> out;
    out.push_back(KodairaFiberType::In(e));
    if (e >= 6) out.push_back(KodairaFiberType::InStar(e - 6));
    if (e == 2) out.push_back(KodairaFiberType::II());
    if (e == 3) out.push_back(KodairaFiberType::III());
    if (e == 4) out.push_back(KodairaFiberType::IV());
    if (e == 8) out.push_back(KodairaFiberType::IVStar());
    if (e == 9) out.push_back(KodairaFiberType::IIIStar());
    if (e == 10) out.push_back(KodairaFiberType::IIStar());
    return out;
}

bool subset_is_induced_path(const KodairaFiberType::Graph& g, unsigned mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.comps; ++v)
        if (mask & (1u << v)) verts.push_back(v);
    if (verts.empty()) return false;
    for (int v : verts)
        if (!g.minus_two[static_cast<std::size_t>(v)]) return false;
    int edges = 0;
    std::map<int, int> degree;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            int m = g.adj[static_cast<std::size_t>(verts[a])][static_cast<std::size_t>(verts[b])];
            if (m > 1) return false; // tangencies and double edges never form a chain
            if (m == 1) {
                ++edges;
                ++degree[verts[a]];
                ++degree[verts[b]];
            }
        }
    if (edges != static_cast<int>(verts.size()) - 1) return false;
    int endpoints = 0;
    for (int v : verts) {
        if (degree[v] > 2) return false;
        if (degree[v] <= 1) ++endpoints;
    }
    // connectivity: a cycle-free graph with |V|-1 edges is connected
    return verts.size() == 1 || endpoints == 2;
}

bool masks_touch(const KodairaFiberType::Graph& g, unsigned a, unsigned b) {
    for (int v = 0; v < g.comps; ++v) {
        if (!(a & (1u << v))) continue;
        for (int w = 0; w < g.comps; ++w) {
            if (!(b & (1u << w))) continue;
            if (v == w || g.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] != 0)
                return true;
        }
    }
    return false;
}

bool oracle_place(const std::vector<KodairaFiberType::Graph>& graphs,
                  const std::vector<std::vector<std::vector<unsigned>>>& paths_by_len,
                  const std::vector<int>& lengths, std::size_t chain,
                  std::vector<unsigned>& used) {
    if (chain == lengths.size()) return true;
    int len = lengths[chain];
    for (std::size_t f = 0; f < graphs.size(); ++f) {
        if (len > graphs[f].comps) continue;
        for (unsigned mask : paths_by_len[f][static_cast<std::size_t>(len)]) {
            if (masks_touch(graphs[f], mask, used[f])) continue;
            if (mask & used[f]) continue;
            used[f] |= mask;
            if (oracle_place(graphs, paths_by_len, lengths, chain + 1, used)) return true;
            used[f] &= ~mask;
        }
    }
    return false;
}

std::set<NameList> oracle_enumerate(int target, int budget, const std::vector<int>& chain_lengths) {
    // integer partitions of target
    std::vector<std::vector<int>> partitions;
    std::vector<int> part;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            partitions.push_back(part);
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 1; --v) {
            part.push_back(v);
            gen(remaining - v, v);
            part.pop_back();
        }
    };
    gen(target, target);

    std::set<NameList> out;
    for (const auto& p : partitions) {
        // all type choices per part
        std::vector<std::vector<KodairaFiberType>> choices;
        for (int e : p) choices.push_back(types_with_euler(e));
        std::vector<std::size_t> pick(p.size(), 0);
        for (;;) {
            std::vector<KodairaFiberType> types;
            for (std::size_t i = 0; i < pick.size(); ++i) types.push_back(choices[i][pick[i]]);

            int rank = 0;
            for (const auto& t : types) rank += t.component_count() - 1;
            if (rank <= budget) {
                std::vector<KodairaFiberType::Graph> graphs;
                for (const auto& t : types) graphs.push_back(t.graph());
                int maxlen = 0;
                for (int len : chain_lengths) maxlen = std::max(maxlen, len);
                std::vector<std::vector<std::vector<unsigned>>> paths_by_len;
                for (const auto& g : graphs) {
                    std::vector<std::vector<unsigned>> by_len(static_cast<std::size_t>(maxlen) + 1);
                    for (unsigned mask = 1; mask < (1u << g.comps); ++mask) {
                        int size = __builtin_popcount(mask);
                        if (size > maxlen) continue;
                        if (subset_is_induced_path(g, mask)) by_len[static_cast<std::size_t>(size)].push_back(mask);
                    }
                    paths_by_len.push_back(std::move(by_len));
                }
                std::vector<unsigned> used(graphs.size(), 0);
                if (oracle_place(graphs, paths_by_len, chain_lengths, 0, used)) {
                    std::vector<FiberWithMult> fibers;
                    for (const auto& t : types) fibers.push_back({t, 1});
                    std::sort(fibers.begin(), fibers.end());
                    NameList names;
                    for (const auto& f : fibers) names.push_back(f.name());
                    out.insert(names);
                }
            }
            // advance the mixed-radix picker
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("fiber catalog") {
    SECTION("euler numbers and component counts") {
        REQUIRE(KodairaFiberType::In(0).euler() == 0);
        REQUIRE(KodairaFiberType::In(1).euler() == 1);
        REQUIRE(KodairaFiberType::In(9).euler() == 9);
        REQUIRE(KodairaFiberType::InStar(0).euler() == 6);
        REQUIRE(KodairaFiberType::InStar(4).euler() == 10);
        REQUIRE(KodairaFiberType::II().euler() == 2);
        REQUIRE(KodairaFiberType::III().euler() == 3);
        REQUIRE(KodairaFiberType::IV().euler() == 4);
        REQUIRE(KodairaFiberType::IVStar().euler() == 8);
        REQUIRE(KodairaFiberType::IIIStar().euler() == 9);
        REQUIRE(KodairaFiberType::IIStar().euler() == 10);

        REQUIRE(KodairaFiberType::In(0).component_count() == 1);
        REQUIRE(KodairaFiberType::In(9).component_count() == 9);
        REQUIRE(KodairaFiberType::InStar(0).component_count() == 5);
        REQUIRE(KodairaFiberType::IV().component_count() == 3);
        REQUIRE(KodairaFiberType::IVStar().component_count() == 7);
        REQUIRE(KodairaFiberType::IIIStar().component_count() == 8);
        REQUIRE(KodairaFiberType::IIStar().component_count() == 9);
    }
    SECTION("euler vs component count corrections") {
        for (int n = 1; n <= 12; ++n)
            REQUIRE(KodairaFiberType::In(n).euler() == KodairaFiberType::In(n).component_count());
        for (int n = 0; n <= 6; ++n) {
            auto t = KodairaFiberType::InStar(n);
            REQUIRE(t.euler() == t.component_count() + 1);
        }
        for (auto t : {KodairaFiberType::II(), KodairaFiberType::III(), KodairaFiberType::IV(),
                       KodairaFiberType::IVStar(), KodairaFiberType::IIIStar(), KodairaFiberType::IIStar()})
            REQUIRE(t.euler() == t.component_count() + 1);
        REQUIRE(KodairaFiberType::In(0).euler() == KodairaFiberType::In(0).component_count() - 1);
    }
    SECTION("only the I_n family carries multiple fibers") {
        REQUIRE(KodairaFiberType::In(0).allows_multiple());
        REQUIRE(KodairaFiberType::In(3).allows_multiple());
        REQUIRE_FALSE(KodairaFiberType::IVStar().allows_multiple());
        REQUIRE_FALSE(KodairaFiberType::InStar(2).allows_multiple());
        REQUIRE_FALSE(KodairaFiberType::II().allows_multiple());
    }
    SECTION("graph sanity: multiplicities and (-2) flags") {
        auto g = KodairaFiberType::IVStar().graph();
        REQUIRE(g.comps == 7);
        REQUIRE(g.multiplicity[0] == 3); // central component
        int sum = 0;
        for (int m : g.multiplicity) sum += m;
        REQUIRE(sum == 3 + 3 * (2 + 1));
        auto i1 = KodairaFiberType::In(1).graph();
        REQUIRE_FALSE(i1.minus_two[0]);
        auto i2 = KodairaFiberType::In(2).graph();
        REQUIRE(i2.adj[0][1] == 2);
        auto iii = KodairaFiberType::III().graph();
        REQUIRE(iii.adj[0][1] == 2);
        auto ii_star = KodairaFiberType::IIStar().graph();
        REQUIRE(ii_star.multiplicity == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3});
    }
    SECTION("names parse back") {
        for (const auto& name : {"I0", "I1", "I12", "I0*", "I3*", "II", "III", "IV", "IV*", "III*", "II*"})
            REQUIRE(parse_fiber_type(name).name() == name);
        REQUIRE_THROWS_AS(parse_fiber_type("V"), ParseError);
        REQUIRE_THROWS_AS(parse_fiber_type("I-1"), ParseError);
    }
    SECTION("fiber list literals") {
        auto fibers = parse_fiber_list("IV*+I3+I1");
        REQUIRE(fibers.size() == 3);
        REQUIRE(fiber_list_to_string(fibers) == "IV*+I3+I1");
        REQUIRE(fiber_list_to_string(parse_fiber_list("4I3")) == "4I3");
        REQUIRE(fiber_list_to_string(parse_fiber_list("I3+I3(mu=2)+I3(mu=3)+I3")) ==
                "I3(mu=3)+I3(mu=2)+2I3");
        REQUIRE_THROWS_AS(parse_fiber_list(""), ParseError);
        REQUIRE_THROWS_AS(parse_fiber_list("I3++I1"), ParseError);
    }
}

TEST_CASE("configuration enumeration") {
    SECTION("four cusps in a (2,3)-elliptic surface: exactly three cases") {
        std::vector<ExceptionalChain> chains(4, a_chain(2));
        auto configs = enumerate_configurations(12, 8, chains, Multisection{6, -3});
        REQUIRE(configs.size() == 3);
        REQUIRE(configs[0].sorted_names() == NameList{"IV*", "I3", "I1"});
        REQUIRE(configs[1].sorted_names() == NameList{"IV*", "IV"});
        REQUIRE(configs[2].sorted_names() == NameList{"I3", "I3", "I3", "I3"});
        REQUIRE(configs[0].to_string() == "IV*+I3+I1");
        REQUIRE(configs[1].to_string() == "IV*+IV");
        REQUIRE(configs[2].to_string() == "4I3");
        // the 6-section incidence is recorded on the IV* configurations
        REQUIRE(configs[0].multisection_note ==
                "6-section meets the central component of the IV* fiber with multiplicity 2");
        REQUIRE(configs[1].multisection_note == configs[0].multisection_note);
        REQUIRE(configs[2].multisection_note.empty());
    }
    SECTION("same answer without the multisection") {
        std::vector<ExceptionalChain> chains(4, a_chain(2));
        auto with = enumerate_configurations(12, 8, chains, Multisection{6, -3});
        auto without = enumerate_configurations(12, 8, chains);
        REQUIRE(as_name_sets(with) == as_name_sets(without));
        for (const auto& c : without) REQUIRE(c.multisection_note.empty());
    }
    SECTION("budget 0 leaves only irreducible fibers") {
        auto configs = enumerate_configurations(12, 0, {});
        REQUIRE(configs.size() == 7); // II count 0..6, rest I1
        bool found_all_i1 = false;
        for (const auto& c : configs) {
            for (const auto& f : c.fibers) REQUIRE(f.type.component_count() == 1);
            if (c.sorted_names() == NameList(12, "I1")) found_all_i1 = true;
        }
        REQUIRE(found_all_i1);
    }
    SECTION("chain placements are valid and disjoint") {
        std::vector<ExceptionalChain> chains(4, a_chain(2));
        for (const auto& config : enumerate_configurations(12, 8, chains)) {
            REQUIRE(config.total_euler() == 12);
            REQUIRE(config.rank_contribution() <= 8);
            REQUIRE(config.chain_assignment.size() == 4);
            std::vector<std::set<int>> used(config.fibers.size());
            for (const auto& placement : config.chain_assignment) {
                auto g = config.fibers[static_cast<std::size_t>(placement.fiber_index)].type.graph();
                REQUIRE(placement.components.size() == 2);
                REQUIRE(g.adj[static_cast<std::size_t>(placement.components[0])]
                             [static_cast<std::size_t>(placement.components[1])] == 1);
                for (int v : placement.components) {
                    REQUIRE(g.minus_two[static_cast<std::size_t>(v)]);
                    // no reuse and no contact with previously placed chains
                    for (int w : used[static_cast<std::size_t>(placement.fiber_index)]) {
                        REQUIRE(v != w);
                        REQUIRE(g.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 0);
                    }
                }
                for (int v : placement.components)
                    used[static_cast<std::size_t>(placement.fiber_index)].insert(v);
            }
        }
    }
    SECTION("chains with a -3 component are rejected") {
        REQUIRE_THROWS_AS(enumerate_configurations(12, 8, {ExceptionalChain({-2, -2, -3})}),
                          InvalidChain);
    }
    SECTION("agreement with the generate-and-filter oracle") {
        struct Instance {
            int target, budget;
            std::vector<int> lengths;
        };
        std::vector<Instance> instances = {
            {4, 8, {}}, {8, 4, {2}}, {8, 8, {2, 2}}, {12, 8, {2, 2, 2, 2}},
            {12, 6, {2, 2, 2}}, {12, 8, {1, 1, 1}}, {10, 8, {3}}, {12, 10, {2, 2, 2, 2}},
            {6, 5, {2}}, {12, 0, {}},
        };
        for (const auto& inst : instances) {
            std::vector<ExceptionalChain> chains;
            for (int len : inst.lengths) chains.push_back(a_chain(len));
            auto got = as_name_sets(enumerate_configurations(inst.target, inst.budget, chains));
            auto expect = oracle_enumerate(inst.target, inst.budget, inst.lengths);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("degree-3 base change") {
    std::vector<ExceptionalChain> chains(4, a_chain(2));
    auto configs = enumerate_configurations(12, 8, chains, Multisection{6, -3});
    REQUIRE(configs.size() == 3);

    SECTION("four I3: three carry branch cusps, one triples") {
        BaseChangePlan plan{{FiberFate::BranchCusp, FiberFate::BranchCusp, FiberFate::BranchCusp,
                             FiberFate::Unsplit},
                            2};
        auto result = base_change_degree3(configs[2], plan);
        REQUIRE(result.to_string() == "I9+3I1");
        REQUIRE(result.total_euler == 12);
        REQUIRE(result.branch_points_used == 2);
    }
    SECTION("IV* + I3 + I1 unsplit: the images force a rank overrun") {
        BaseChangePlan plan{{FiberFate::BranchCusp, FiberFate::Unsplit, FiberFate::Unsplit}, 2};
        auto result = base_change_degree3(configs[0], plan);
        REQUIRE(result.to_string() == "I9+IV*+I3");
        int rank = 2; // fiber class and section
        for (const auto& f : result.fibers) rank += f.type.component_count() - 1;
        REQUIRE(rank >= 12);
        // unsplit unbranched I_n fibers triple their Euler numbers
        REQUIRE(result.fiber_images[1] == std::pair<std::string, std::string>{"I3", "I9"});
        REQUIRE(result.fiber_images[2] == std::pair<std::string, std::string>{"I1", "I3"});
    }
    SECTION("IV over an unbranched point cannot stay connected") {
        BaseChangePlan plan{{FiberFate::BranchCusp, FiberFate::Unsplit}, 2};
        REQUIRE_THROWS_AS(base_change_degree3(configs[1], plan), NoTripleCover);
        BaseChangePlan plan_ii{{FiberFate::Unsplit}, 2};
        FiberConfiguration config_ii{{{KodairaFiberType::II(), 1}}, {}, ""};
        REQUIRE_THROWS_AS(base_change_degree3(config_ii, plan_ii), NoTripleCover);
    }
    SECTION("splitting produces three copies") {
        FiberConfiguration config{{{KodairaFiberType::In(3), 1}}, {}, ""};
        auto result = base_change_degree3(config, {{FiberFate::Split}, 2});
        REQUIRE(result.to_string() == "3I3");
        REQUIRE(result.total_euler == 9);
    }
    SECTION("branch count bookkeeping") {
        FiberConfiguration config{{{KodairaFiberType::In(3), 1}}, {}, ""};
        REQUIRE_THROWS_AS(base_change_degree3(config, {{FiberFate::Unsplit}, 3}),
                          BranchCountMismatch);
        REQUIRE_THROWS_AS(base_change_degree3(config, {{FiberFate::BaseBranch}, 2}),
                          BranchCountMismatch);
        auto ok = base_change_degree3(config, {{FiberFate::BaseBranch}, 1});
        REQUIRE(ok.to_string() == "I3"); // kept over the branch point
    }
}

TEST_CASE("multiple fiber consistency") {
    std::vector<ExceptionalChain> chains(4, a_chain(2));
    auto configs = enumerate_configurations(12, 8, chains);
    SECTION("(2,3) on four I3") {
        REQUIRE(multiple_fiber_consistency(2, 3, configs[2]));
        FiberConfiguration declared{parse_fiber_list("I3(mu=2)+I3(mu=3)+2I3"), {}, ""};
        REQUIRE(multiple_fiber_consistency(2, 3, declared));
    }
    SECTION("multiplicity demanded on a IV* fails") {
        FiberConfiguration bad{{{KodairaFiberType::IVStar(), 2}, {KodairaFiberType::IV(), 1}}, {}, ""};
        REQUIRE_FALSE(multiple_fiber_consistency(2, 3, bad));
    }
    SECTION("declared multiplicity outside {a, b} fails") {
        FiberConfiguration bad{parse_fiber_list("I3(mu=5)+3I3"), {}, ""};
        REQUIRE_FALSE(multiple_fiber_consistency(2, 3, bad));
        FiberConfiguration two_twos{parse_fiber_list("I3(mu=2)+I3(mu=2)+2I3"), {}, ""};
        REQUIRE_FALSE(multiple_fiber_consistency(2, 3, two_twos));
    }
    SECTION("(1,1) demands nothing") {
        REQUIRE(multiple_fiber_consistency(1, 1, configs[0]));
        REQUIRE(multiple_fiber_consistency(1, 1, configs[1]));
    }
}

TEST_CASE("hurwitz branch counts") {
    REQUIRE(hurwitz_branch_count(3, 0, 0) == 2);
    REQUIRE(hurwitz_branch_count(7, 0, 0) == 2);
    REQUIRE(hurwitz_branch_count(3, 0, 1) == 3);
    REQUIRE(hurwitz_branch_count(5, 0, 0) == 2);
    REQUIRE_THROWS_AS(hurwitz_branch_count(4, 0, 1), NonIntegralSolution); // 6 not divisible by 3
    REQUIRE_THROWS_AS(hurwitz_branch_count(1, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_branch_count(3, 1, 1), std::invalid_argument);
}
