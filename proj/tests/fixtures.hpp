// Shared random generators for configuration-level tests: constructible
// configurations via the builders plus merge, and surgery helpers.
#ifndef DPCOLOR_TESTS_FIXTURES_HPP
#define DPCOLOR_TESTS_FIXTURES_HPP

#include <functional>
#include <random>

#include "dpcolor/configuration.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/corpus.hpp"

namespace fixtures {

using dpcolor::Configuration;
using dpcolor::Graph;

inline Configuration random_base_block(std::mt19937& rng) {
    const int s = 2;
    switch (rng() % 3) {
        case 0: {  // (M) on a random small block
            Graph block;
            switch (rng() % 5) {
                case 0: block = dpcolor::complete_graph(2); break;
                case 1: block = dpcolor::complete_graph(3); break;
                case 2: block = dpcolor::complete_graph(4); break;
                case 3: block = dpcolor::cycle_graph(4); break;
                default: block = dpcolor::cycle_graph(5); break;
            }
            std::vector<int> embedding(block.n);
            for (int& e : embedding) e = static_cast<int>(rng() % s);
            return dpcolor::build_m(block, s, embedding);
        }
        case 1: {  // (K) on K_n, n <= 4
            int n = 1 + static_cast<int>(rng() % 4);
            std::vector<std::vector<int>> options;
            if (n == 1)
                options.push_back({});
            else {
                options.push_back({n - 1});
                for (int a = 1; a < n - 1; ++a) options.push_back({a, n - 1 - a});
            }
            return dpcolor::build_k(n, options[rng() % options.size()], s);
        }
        default: {  // (C) on C_n, n in 3..5
            int n = 3 + static_cast<int>(rng() % 3);
            return dpcolor::build_c(n, s,
                                    n % 2 ? dpcolor::CycleTwist::Odd : dpcolor::CycleTwist::Even);
        }
    }
}

// Builder output or a merge of two (recursively generated) constructible
// configurations; fiber size 2 throughout.
inline Configuration random_constructible(std::mt19937& rng, int max_vertices = 8) {
    Configuration c = random_base_block(rng);
    while (rng() % 2 == 0) {
        Configuration other = random_base_block(rng);
        if (c.cover.base.n + other.cover.base.n - 1 > max_vertices) break;
        int v1 = static_cast<int>(rng() % c.cover.base.n);
        int v2 = static_cast<int>(rng() % other.cover.base.n);
        std::vector<int> bijection{0, 1};
        if (rng() % 2) std::swap(bijection[0], bijection[1]);
        c = dpcolor::merge(c, v1, other, v2, bijection);
    }
    return c;
}

// (G - u, X - u, H - u, f): drop a vertex and its fiber, f untouched.
inline Configuration delete_vertex_configuration(const Configuration& c, int u) {
    const auto& cov = c.cover;
    auto remap = [u](int v) { return v < u ? v : v - 1; };
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : cov.base.edges())
        if (a != u && b != u) edges.emplace_back(remap(a), remap(b));
    std::vector<int> sizes;
    for (int v = 0; v < cov.base.n; ++v)
        if (v != u) sizes.push_back(cov.fiber_sizes[v]);
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (const auto& [e, pairs] : cov.matchings) {
        if (e.first == u || e.second == u) continue;
        matchings[{remap(e.first), remap(e.second)}] = pairs;
    }
    dpcolor::Cover reduced =
        dpcolor::make_cover(dpcolor::build_graph(edges, cov.base.n - 1), std::move(sizes),
                            std::move(matchings));
    std::vector<int> f(reduced.h_order, 0);
    for (int v = 0; v < cov.base.n; ++v) {
        if (v == u) continue;
        for (int i = 0; i < cov.fiber_sizes[v]; ++i) f[reduced.flat(remap(v), i)] = c.f_at(v, i);
    }
    return {std::move(reduced), std::move(f)};
}

// All transversals whose induced H-subgraph is strictly f-degenerate.
inline std::vector<dpcolor::Transversal> all_solutions(const Configuration& c) {
    std::vector<dpcolor::Transversal> out;
    dpcolor::Transversal t(c.cover.base.n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == c.cover.base.n) {
            if (dpcolor::is_strictly_f_degenerate_mask(c, dpcolor::transversal_mask(c.cover, t)))
                out.push_back(t);
            return;
        }
        for (t[v] = 0; t[v] < c.cover.fiber_sizes[v]; ++t[v]) rec(v + 1);
        t[v] = 0;
    };
    if (c.cover.base.n == 0) return {dpcolor::Transversal{}};
    rec(0);
    return out;
}

}  // namespace fixtures

#endif
