#pragma once

// Abstract rewriting over a metrized state space: a system exposes a finite
// deterministic successor function and an exact rational metric. Reachability
// into the topological closure is witnessed by finite paths that land within
// a requested radius of the target: the source is exact, only the target end
// is approximate. Bounded search that finds nothing reports unknown, never
// unreachability.
//
// Two concrete instances: a reversible walk on the dyadic points of [0, 2]
// with two accumulation endpoints, and the componentwise-increment system on
// pairs over the naturals completed with an infinite point.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "powser/errors.hpp"

namespace powser::tars {

template <class Sys>
concept abstract_system = requires(const Sys& sys, const typename Sys::state& a,
                                   const typename Sys::state& b) {
    { sys.successors(a) } -> std::convertible_to<std::vector<typename Sys::state>>;
    { sys.distance(a, b) } -> std::convertible_to<mpq_class>;
    { sys.to_string(a) } -> std::convertible_to<std::string>;
    { sys.name() } -> std::convertible_to<std::string>;
};

// States are the dyadic points 1/2^n and 2 - 1/2^n together with the two
// endpoints 0 and 2; each interior state steps to its two neighbours, the
// endpoints are stuck.
class cyclic_system {
public:
    using state = mpq_class;

    std::string name() const { return "cyclic"; }

    std::vector<state> successors(const state& s) const;

    mpq_class distance(const state& a, const state& b) const { return abs(a - b); }

    std::string to_string(const state& s) const { return s.get_str(); }

    static bool in_domain(const state& s);
};

// A natural number or the point at infinity.
using extended_nat = std::optional<std::uint32_t>; // nullopt = infinity

inline constexpr extended_nat nbar_infinity = std::nullopt;

class nbar_system {
public:
    using state = std::pair<extended_nat, extended_nat>;

    std::string name() const { return "nbar"; }

    // (n, m) -> (n+1, m) and (n, m) -> (n, m+1) when both coordinates are
    // finite; states with an infinite coordinate are stuck.
    std::vector<state> successors(const state& s) const;

    // |2^-a - 2^-c| + |2^-b - 2^-d| with 2^-infinity = 0; induces the product
    // order topology on the represented states.
    mpq_class distance(const state& a, const state& b) const;

    std::string to_string(const state& s) const;
};

// Breadth-first search for a finite path from `from` to some state strictly
// within `eps` of `target`. Expands at most max_steps states; nullopt means
// unknown within the bound.
template <abstract_system Sys>
std::optional<std::vector<typename Sys::state>> witness_topological_reach(
    const Sys& sys, const typename Sys::state& from, const typename Sys::state& target,
    const mpq_class& eps, std::size_t max_steps) {
    using state = typename Sys::state;
    if (eps <= 0) throw invalid_argument("witness search needs a positive radius");

    auto path_to = [](const std::map<state, state>& parent, state s,
                      const state& root) {
        std::vector<state> path{s};
        while (!(s == root)) {
            s = parent.at(s);
            path.push_back(s);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::map<state, state> parent;
    std::set<state> seen{from};
    std::vector<state> frontier{from};
    if (sys.distance(from, target) < eps) return path_to(parent, from, from);

    std::size_t expanded = 0;
    while (!frontier.empty()) {
        std::vector<state> next;
        for (const state& s : frontier) {
            if (++expanded > max_steps) return std::nullopt;
            for (const state& t : sys.successors(s)) {
                if (seen.contains(t)) continue;
                seen.insert(t);
                parent.emplace(t, s);
                if (sys.distance(t, target) < eps) return path_to(parent, t, from);
                next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

template <class State>
struct refutation_report {
    bool refuted = false;
    std::string detail;
    std::optional<std::vector<State>> path_to_first;
    std::optional<std::vector<State>> path_to_second;
};

// Exhibits the obstruction to infinitary confluence at resolution eps: two
// distinct stuck states both reachable (at eps) from the same source. Anything
// short of that is inconclusive, not a refutation.
template <abstract_system Sys>
refutation_report<typename Sys::state> refute_infinitary_confluence(
    const Sys& sys, const typename Sys::state& from, const typename Sys::state& nf1,
    const typename Sys::state& nf2, const mpq_class& eps, std::size_t max_steps) {
    refutation_report<typename Sys::state> report;
    if (nf1 == nf2)
        throw invalid_argument("refutation needs two distinct normal forms");
    if (!sys.successors(nf1).empty() || !sys.successors(nf2).empty()) {
        report.detail = "a candidate is not a normal form";
        return report;
    }
    report.path_to_first = witness_topological_reach(sys, from, nf1, eps, max_steps);
    report.path_to_second = witness_topological_reach(sys, from, nf2, eps, max_steps);
    if (report.path_to_first && report.path_to_second) {
        report.refuted = true;
        report.detail = "two distinct normal forms reachable from " + sys.to_string(from);
    } else {
        report.detail = "witness search inconclusive within the step bound";
    }
    return report;
}

} // namespace powser::tars
