#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhpp/errors.hpp"
#include "qhpp/singularity.hpp"

namespace qhpp {

// Singular fiber of a relatively minimal elliptic fibration, one of
// I_n (n >= 0), I_n* (n >= 0), II, III, IV, IV*, III*, II*. Carries Euler
// number, component count, per-component fiber multiplicities and the dual
// graph. Only the I_n family (including smooth I_0 fibers) can appear with
// a multiplicity.
class KodairaFiberType {
public:
    enum class Family { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

    static KodairaFiberType In(int n) { return {Family::In, n}; }
    static KodairaFiberType InStar(int n) { return {Family::InStar, n}; }
    static KodairaFiberType II() { return {Family::II, 0}; }
    static KodairaFiberType III() { return {Family::III, 0}; }
    static KodairaFiberType IV() { return {Family::IV, 0}; }
    static KodairaFiberType IVStar() { return {Family::IVStar, 0}; }
    static KodairaFiberType IIIStar() { return {Family::IIIStar, 0}; }
    static KodairaFiberType IIStar() { return {Family::IIStar, 0}; }

    Family family() const { return family_; }
    int index() const { return index_; }

    int euler() const {
        switch (family_) {
            case Family::In: return index_;
            case Family::InStar: return index_ + 6;
            case Family::II: return 2;
            case Family::III: return 3;
            case Family::IV: return 4;
            case Family::IVStar: return 8;
            case Family::IIIStar: return 9;
            case Family::IIStar: return 10;
        }
        return 0;
    }

    int component_count() const {
        switch (family_) {
            case Family::In: return std::max(index_, 1);
            case Family::InStar: return index_ + 5;
            case Family::II: return 1;
            case Family::III: return 2;
            case Family::IV: return 3;
            case Family::IVStar: return 7;
            case Family::IIIStar: return 8;
            case Family::IIStar: return 9;
        }
        return 0;
    }

    bool allows_multiple() const { return family_ == Family::In; }

    std::string name() const {
        switch (family_) {
            case Family::In: return "I" + std::to_string(index_);
            case Family::InStar: return "I" + std::to_string(index_) + "*";
            case Family::II: return "II";
            case Family::III: return "III";
            case Family::IV: return "IV";
            case Family::IVStar: return "IV*";
            case Family::IIIStar: return "III*";
            case Family::IIStar: return "II*";
        }
        return "?";
    }

    struct Graph {
        int comps = 0;
        std::vector<int> multiplicity;        // coefficient in the fiber divisor
        std::vector<std::vector<int>> adj;    // intersection numbers, distinct components
        std::vector<bool> minus_two;          // smooth rational component of self-intersection -2
    };

    Graph graph() const {
        Graph g;
        g.comps = component_count();
        g.multiplicity.assign(static_cast<std::size_t>(g.comps), 1);
        g.adj.assign(static_cast<std::size_t>(g.comps), std::vector<int>(static_cast<std::size_t>(g.comps), 0));
        // components of a reducible fiber are (-2)-curves; an irreducible
        // fiber is the fiber itself, of self-intersection 0
        g.minus_two.assign(static_cast<std::size_t>(g.comps), g.comps > 1);
        auto link = [&g](int a, int b, int m = 1) {
            g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m;
            g.adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = m;
        };
        switch (family_) {
            case Family::In:
                if (index_ == 2) {
                    link(0, 1, 2); // two components through two points
                } else if (index_ >= 3) {
                    for (int i = 0; i < index_; ++i) link(i, (i + 1) % index_);
                }
                break;
            case Family::InStar: {
                // central chain 0..n of multiplicity 2, two reduced leaves
                // at each end
                int n = index_;
                for (int i = 0; i <= n; ++i) g.multiplicity[static_cast<std::size_t>(i)] = 2;
                for (int i = 0; i < n; ++i) link(i, i + 1);
                link(0, n + 1);
                link(0, n + 2);
                link(n, n + 3);
                link(n, n + 4);
                break;
            }
            case Family::II:
                break; // one cuspidal component
            case Family::III:
                link(0, 1, 2); // two components, tangent at one point
                break;
            case Family::IV:
                link(0, 1);
                link(0, 2);
                link(1, 2); // three concurrent components
                break;
            case Family::IVStar:
                // center 0 of multiplicity 3, arms (1,2), (3,4), (5,6)
                g.multiplicity = {3, 2, 1, 2, 1, 2, 1};
                link(0, 1);
                link(1, 2);
                link(0, 3);
                link(3, 4);
                link(0, 5);
                link(5, 6);
                break;
            case Family::IIIStar:
                // path 0..6 with a node 7 attached at the middle
                g.multiplicity = {1, 2, 3, 4, 3, 2, 1, 2};
                for (int i = 0; i < 6; ++i) link(i, i + 1);
                link(3, 7);
                break;
            case Family::IIStar:
                // path 0..7 with a node 8 attached at the multiplicity-6 spot
                g.multiplicity = {1, 2, 3, 4, 5, 6, 4, 2, 3};
                for (int i = 0; i < 7; ++i) link(i, i + 1);
                link(5, 8);
                break;
        }
        return g;
    }

    bool operator==(const KodairaFiberType& o) const {
        return family_ == o.family_ && index_ == o.index_;
    }

    // Larger fibers first: by Euler number, then component count, then name.
    std::tuple<int, int, std::string> sort_key() const {
        return {-euler(), -component_count(), name()};
    }
    bool operator<(const KodairaFiberType& o) const { return sort_key() < o.sort_key(); }

private:
    KodairaFiberType(Family f, int n) : family_(f), index_(n) {
        if ((f == Family::In || f == Family::InStar) && n < 0)
            throw std::invalid_argument("fiber index must be nonnegative");
    }

    Family family_;
    int index_;
};

inline KodairaFiberType parse_fiber_type(const std::string& text) {
    const std::string bad = "not a Kodaira fiber name: '" + text + "'";
    if (text == "II") return KodairaFiberType::II();
    if (text == "III") return KodairaFiberType::III();
    if (text == "IV") return KodairaFiberType::IV();
    if (text == "II*") return KodairaFiberType::IIStar();
    if (text == "III*") return KodairaFiberType::IIIStar();
    if (text == "IV*") return KodairaFiberType::IVStar();
    if (text.size() >= 2 && text[0] == 'I') {
        bool star = text.back() == '*';
        std::string digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            int n = std::stoi(digits);
            return star ? KodairaFiberType::InStar(n) : KodairaFiberType::In(n);
        }
    }
    throw ParseError(bad);
}

struct FiberWithMult {
    KodairaFiberType type;
    int multiplicity = 1;

    bool operator==(const FiberWithMult& o) const {
        return type == o.type && multiplicity == o.multiplicity;
    }
    bool operator<(const FiberWithMult& o) const {
        if (!(type == o.type)) return type < o.type;
        return multiplicity > o.multiplicity;
    }

    std::string name() const {
        std::string s = type.name();
        if (multiplicity != 1) s += "(mu=" + std::to_string(multiplicity) + ")";
        return s;
    }
};

// "IV*+I3+I1", "4I3", "I3(mu=2)+3I3": '+'-separated terms, optional count
// prefix, optional "(mu=m)" multiplicity suffix.
inline std::vector<FiberWithMult> parse_fiber_list(const std::string& text) {
    std::vector<FiberWithMult> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto plus = text.find('+', pos);
        std::string term = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? text.size() : plus + 1;
        while (!term.empty() && term.front() == ' ') term.erase(term.begin());
        while (!term.empty() && term.back() == ' ') term.pop_back();
        if (term.empty()) throw ParseError("empty fiber term in '" + text + "'");
        int count = 1;
        std::size_t k = 0;
        while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
        if (k > 0 && k < term.size()) {
            count = std::stoi(term.substr(0, k));
            term = term.substr(k);
        }
        int mult = 1;
        auto mu = term.find("(mu=");
        if (mu != std::string::npos) {
            if (term.back() != ')') throw ParseError("bad multiplicity suffix in '" + term + "'");
            mult = std::stoi(term.substr(mu + 4, term.size() - mu - 5));
            term = term.substr(0, mu);
        }
        if (count < 1 || mult < 1) throw ParseError("bad fiber term in '" + text + "'");
        for (int c = 0; c < count; ++c) out.push_back({parse_fiber_type(term), mult});
    }
    if (out.empty()) throw ParseError("empty fiber list");
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string fiber_list_to_string(std::vector<FiberWithMult> fibers) {
    std::sort(fibers.begin(), fibers.end());
    std::string s;
    for (std::size_t i = 0; i < fibers.size();) {
        std::size_t j = i;
        while (j < fibers.size() && fibers[j] == fibers[i]) ++j;
        if (!s.empty()) s += "+";
        if (j - i > 1) s += std::to_string(j - i);
        s += fibers[i].name();
        i = j;
    }
    return s;
}

struct ChainPlacement {
    int chain_index = 0;
    int fiber_index = 0;
    std::vector<int> components;
};

struct Multisection {
    int degree = 0;
    int self_square = 0;
};

struct FiberConfiguration {
    std::vector<FiberWithMult> fibers; // canonical order
    std::vector<ChainPlacement> chain_assignment;
    std::string multisection_note;

    int total_euler() const {
        int e = 0;
        for (const auto& f : fibers) e += f.type.euler();
        return e;
    }
    // Fiber components span a sublattice of rank sum(components - 1) next to
    // the fiber class.
    int rank_contribution() const {
        int r = 0;
        for (const auto& f : fibers) r += f.type.component_count() - 1;
        return r;
    }
    std::string to_string() const { return fiber_list_to_string(fibers); }

    std::vector<std::string> sorted_names() const {
        std::vector<std::string> names;
        for (const auto& f : fibers) names.push_back(f.name());
        return names;
    }
};

namespace detail {

// Disjoint induced embedding of (-2)-chains into the dual graphs of a fiber
// multiset: every assigned component is a (-2)-curve, consecutive chain
// members meet exactly once, and no assigned component meets any component
// of another chain (or a non-adjacent member of its own).
class ChainEmbedder {
public:
    ChainEmbedder(const std::vector<FiberWithMult>& fibers, std::vector<int> chain_lengths)
        : lengths_(std::move(chain_lengths)) {
        for (const auto& f : fibers) {
            graphs_.push_back(f.type.graph());
            used_.emplace_back(static_cast<std::size_t>(graphs_.back().comps), false);
        }
        std::sort(lengths_.rbegin(), lengths_.rend());
        placements_.resize(lengths_.size());
    }

    bool run() { return place(0); }

    std::vector<ChainPlacement> placements() const {
        std::vector<ChainPlacement> out;
        for (std::size_t c = 0; c < placements_.size(); ++c)
            out.push_back({static_cast<int>(c), placements_[c].first, placements_[c].second});
        return out;
    }

private:
    bool place(std::size_t chain) {
        if (chain == lengths_.size()) return true;
        int len = lengths_[chain];
        for (std::size_t f = 0; f < graphs_.size(); ++f) {
            const auto& g = graphs_[f];
            std::vector<int> path;
            for (int start = 0; start < g.comps; ++start)
                if (try_extend(f, g, start, len, path, chain)) return true;
        }
        return false;
    }

    bool usable(std::size_t f, const KodairaFiberType::Graph& g, int v) const {
        if (!g.minus_two[static_cast<std::size_t>(v)] || used_[f][static_cast<std::size_t>(v)])
            return false;
        for (int w = 0; w < g.comps; ++w)
            if (used_[f][static_cast<std::size_t>(w)] && g.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] != 0)
                return false;
        return true;
    }

    bool try_extend(std::size_t f, const KodairaFiberType::Graph& g, int v, int len,
                    std::vector<int>& path, std::size_t chain) {
        if (!usable(f, g, v)) return false;
        for (int w : path)
            if (w == v) return false;
        if (!path.empty() && g.adj[static_cast<std::size_t>(path.back())][static_cast<std::size_t>(v)] != 1)
            return false;
        // induced path: no contact with non-consecutive members
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (g.adj[static_cast<std::size_t>(path[k])][static_cast<std::size_t>(v)] != 0) return false;

        path.push_back(v);
        if (static_cast<int>(path.size()) == len) {
            for (int w : path) used_[f][static_cast<std::size_t>(w)] = true;
            placements_[chain] = {static_cast<int>(f), path};
            if (place(chain + 1)) {
                path.pop_back();
                return true;
            }
            for (int w : path) used_[f][static_cast<std::size_t>(w)] = false;
        } else {
            for (int w = 0; w < g.comps; ++w)
                if (try_extend(f, g, w, len, path, chain)) {
                    path.pop_back();
                    return true;
                }
        }
        path.pop_back();
        return false;
    }

    std::vector<KodairaFiberType::Graph> graphs_;
    std::vector<std::vector<bool>> used_;
    std::vector<int> lengths_;
    std::vector<std::pair<int, std::vector<int>>> placements_;
};

inline std::vector<KodairaFiberType> singular_type_pool(int max_euler) {
    std::vector<KodairaFiberType> pool;
    for (int n = 1; n <= max_euler; ++n) pool.push_back(KodairaFiberType::In(n));
    for (int n = 0; n + 6 <= max_euler; ++n) pool.push_back(KodairaFiberType::InStar(n));
    if (max_euler >= 2) pool.push_back(KodairaFiberType::II());
    if (max_euler >= 3) pool.push_back(KodairaFiberType::III());
    if (max_euler >= 4) pool.push_back(KodairaFiberType::IV());
    if (max_euler >= 8) pool.push_back(KodairaFiberType::IVStar());
    if (max_euler >= 9) pool.push_back(KodairaFiberType::IIIStar());
    if (max_euler >= 10) pool.push_back(KodairaFiberType::IIStar());
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline void fiber_multisets(const std::vector<KodairaFiberType>& pool, std::size_t from,
                            int remaining, std::vector<KodairaFiberType>& cur,
                            std::vector<std::vector<KodairaFiberType>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
        if (pool[k].euler() > remaining) continue;
        cur.push_back(pool[k]);
        fiber_multisets(pool, k, remaining - pool[k].euler(), cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All multisets of singular Kodaira fibers with total Euler number
// target_euler whose components fit in the rank budget and admit disjoint
// induced embeddings of the required (-2)-chains. Output is sorted by
// (largest Euler number, fiber count, name list) and is deterministic.
inline std::vector<FiberConfiguration> enumerate_configurations(
    int target_euler, int rank_budget, const std::vector<ExceptionalChain>& required_chains,
    std::optional<Multisection> multisection = std::nullopt) {
    if (target_euler <= 0) throw std::invalid_argument("target Euler number must be positive");
    std::vector<int> lengths;
    for (const auto& chain : required_chains) {
        if (!chain.is_minus_two_chain())
            throw InvalidChain("required chain " + chain.to_string() +
                               " is not a (-2)-chain; chains with other self-intersections are "
                               "multisections, not fiber components");
        lengths.push_back(chain.length());
    }

    auto pool = detail::singular_type_pool(target_euler);
    std::vector<std::vector<KodairaFiberType>> multisets;
    std::vector<KodairaFiberType> cur;
    detail::fiber_multisets(pool, 0, target_euler, cur, multisets);

    std::vector<FiberConfiguration> out;
    for (const auto& types : multisets) {
        std::vector<FiberWithMult> fibers;
        for (const auto& t : types) fibers.push_back({t, 1});
        std::sort(fibers.begin(), fibers.end());

        FiberConfiguration config{fibers, {}, ""};
        if (config.rank_contribution() > rank_budget) continue;
        detail::ChainEmbedder embedder(fibers, lengths);
        if (!embedder.run()) continue;
        config.chain_assignment = embedder.placements();
        if (multisection && multisection->degree == 6) {
            for (const auto& f : fibers)
                if (f.type.family() == KodairaFiberType::Family::IVStar) {
                    config.multisection_note =
                        "6-section meets the central component of the IV* fiber with multiplicity 2";
                    break;
                }
        }
        out.push_back(std::move(config));
    }

    auto key = [](const FiberConfiguration& c) {
        int max_e = 0;
        for (const auto& f : c.fibers) max_e = std::max(max_e, f.type.euler());
        return std::make_tuple(-max_e, -static_cast<int>(c.fibers.size()), c.sorted_names());
    };
    std::sort(out.begin(), out.end(),
              [&](const FiberConfiguration& a, const FiberConfiguration& b) { return key(a) < key(b); });
    return out;
}

// Transport of a fiber configuration along a cyclic degree-3 base
// change / triple cover of the fibration.
enum class FiberFate {
    Unsplit,    // connected unramified triple cover: I_n -> I_{3n}
    Split,      // three disjoint copies
    BranchCusp, // the fiber's contracted chain carries a branch point: I_3 -> I_1
    BaseBranch, // the fiber sits over a branch point of the base map
};

inline FiberFate parse_fiber_fate(const std::string& text) {
    if (text == "unsplit") return FiberFate::Unsplit;
    if (text == "split") return FiberFate::Split;
    if (text == "branch") return FiberFate::BranchCusp;
    if (text == "base_branch") return FiberFate::BaseBranch;
    throw ParseError("not a fiber fate: '" + text + "'");
}

struct BaseChangePlan {
    std::vector<FiberFate> fates;  // one per fiber of the configuration
    // Branch points of the degree-3 base map sitting at smooth fibers (for
    // the surfaces in scope: the two multiple fibers).
    int smooth_branch_points = 2;
};

struct BaseChangeResult {
    std::vector<std::pair<std::string, std::string>> fiber_images;
    std::vector<FiberWithMult> fibers; // resulting singular fibers
    int branch_points_used = 0;
    int total_euler = 0;

    std::string to_string() const { return fiber_list_to_string(fibers); }
};

inline BaseChangeResult base_change_degree3(const FiberConfiguration& config,
                                            const BaseChangePlan& plan) {
    if (plan.fates.size() != config.fibers.size())
        throw std::invalid_argument("base change plan must assign a fate to every fiber");
    int branch_points = plan.smooth_branch_points;
    for (FiberFate fate : plan.fates)
        if (fate == FiberFate::BaseBranch) ++branch_points;
    // A cyclic degree-3 cover of the projective line is totally branched at
    // exactly two points.
    if (branch_points != 2)
        throw BranchCountMismatch("degree-3 base change needs exactly 2 branch points, plan has " +
                                  std::to_string(branch_points));

    BaseChangeResult result;
    result.branch_points_used = branch_points;
    for (std::size_t i = 0; i < config.fibers.size(); ++i) {
        const FiberWithMult& f = config.fibers[i];
        std::vector<FiberWithMult> images;
        switch (plan.fates[i]) {
            case FiberFate::Unsplit:
                if (f.type.family() != KodairaFiberType::Family::In)
                    throw NoTripleCover("there is no connected unramified triple cover of a " +
                                        f.type.name() + " fibre");
                images.push_back({KodairaFiberType::In(3 * f.type.index()), f.multiplicity});
                break;
            case FiberFate::Split:
                images.assign(3, f);
                break;
            case FiberFate::BranchCusp:
                if (f.type == KodairaFiberType::In(3))
                    images.push_back({KodairaFiberType::In(1), f.multiplicity});
                else
                    images.push_back(f); // declared local behavior: type kept
                break;
            case FiberFate::BaseBranch:
                images.push_back(f); // full local monodromy keeps the fiber
                break;
        }
        std::string image_names;
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (k) image_names += "+";
            image_names += images[k].name();
            if (images[k].type.euler() > 0) result.fibers.push_back(images[k]);
        }
        result.fiber_images.push_back({f.name(), image_names});
    }
    std::sort(result.fibers.begin(), result.fibers.end());
    for (const auto& f : result.fibers) result.total_euler += f.type.euler();
    return result;
}

// Whether the configuration can carry the two multiple fibers of an
// (a,b)-elliptic surface: declared multiplicities > 1 must sit on fiber
// types that admit a multiple structure and must be among {a, b}; leftover
// multiplicities always fit on smooth fibers.
inline bool multiple_fiber_consistency(int a, int b, const FiberConfiguration& config) {
    if (a < 1 || b < 1) throw std::invalid_argument("multiplicities must be at least 1");
    std::vector<int> allowed;
    if (a > 1) allowed.push_back(a);
    if (b > 1) allowed.push_back(b);
    std::sort(allowed.begin(), allowed.end());
    std::vector<int> declared;
    for (const auto& f : config.fibers) {
        if (f.multiplicity == 1) continue;
        if (!f.type.allows_multiple()) return false;
        declared.push_back(f.multiplicity);
    }
    std::sort(declared.begin(), declared.end());
    return std::includes(allowed.begin(), allowed.end(), declared.begin(), declared.end());
}

// Number of totally-branched points of a cyclic cover of the projective
// line: 2 g_cover - 2 = degree (2 g_base - 2) + b * ramification.
inline int hurwitz_branch_count(int degree, int base_genus, int cover_genus,
                                int total_ramification_per_branch = -1) {
    if (degree < 2) throw std::invalid_argument("cover degree must be at least 2");
    if (base_genus != 0) throw std::invalid_argument("only rational base curves are in scope");
    int ram = total_ramification_per_branch < 0 ? degree - 1 : total_ramification_per_branch;
    if (ram < 1) throw std::invalid_argument("ramification per branch point must be positive");
    int numerator = 2 * cover_genus - 2 - degree * (2 * base_genus - 2);
    if (numerator % ram != 0 || numerator / ram < 0)
        throw NonIntegralSolution("no nonnegative integer branch count solves the Hurwitz identity");
    return numerator / ram;
}

} // namespace qhpp
