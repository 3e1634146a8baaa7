#include "dpcolor/configuration.hpp"

#include <algorithm>

#include "dpcolor/errors.hpp"
#include "dpcolor/mask_ops.hpp"

namespace dpcolor {

Configuration make_configuration(Cover c, std::vector<int> f) {
    if (!c.built) c.build();
    if (static_cast<int>(f.size()) != c.h_order)
        throw InvalidCover("f must assign a value to every H-vertex");
    for (int x : f)
        if (x < 0) throw InvalidCover("f values must be non-negative");
    return {std::move(c), std::move(f)};
}

bool is_strictly_f_degenerate(const Configuration& c, const std::vector<int>& t_flat) {
    if (c.cover.h_order > 64) throw TooLarge("peeling restricted to |V(H)| <= 64");
    std::uint64_t mask = 0;
    for (int x : t_flat) mask |= std::uint64_t{1} << x;
    return strictly_f_degenerate_mask(c.cover.h_bits, c.f, mask);
}

bool is_strictly_f_degenerate_mask(const Configuration& c, std::uint64_t mask) {
    return strictly_f_degenerate_mask(c.cover.h_bits, c.f, mask);
}

bool is_degree_feasible(const Configuration& c) {
    for (int v = 0; v < c.cover.base.n; ++v) {
        int sum = 0;
        for (int i = 0; i < c.cover.fiber_sizes[v]; ++i) sum += c.f_at(v, i);
        if (sum < c.cover.base.degree(v)) return false;
    }
    return true;
}

bool is_degree_tight(const Configuration& c) {
    for (int v = 0; v < c.cover.base.n; ++v) {
        int sum = 0;
        for (int i = 0; i < c.cover.fiber_sizes[v]; ++i) sum += c.f_at(v, i);
        if (sum != c.cover.base.degree(v)) return false;
    }
    return true;
}

bool is_normalized(const Configuration& c) {
    if (c.cover.base.n == 0) return true;
    int s = c.cover.fiber_sizes[0];
    for (int size : c.cover.fiber_sizes)
        if (size != s) return false;
    return s >= 1;
}

Configuration normalize(const Configuration& c) {
    int s = 1;
    for (int size : c.cover.fiber_sizes) s = std::max(s, size);
    Cover padded;
    padded.base = c.cover.base;
    padded.fiber_sizes.assign(c.cover.base.n, s);
    padded.matchings = c.cover.matchings;  // pair indices stay valid under padding
    padded.build();
    std::vector<int> f(padded.h_order, 0);
    for (int v = 0; v < c.cover.base.n; ++v)
        for (int i = 0; i < c.cover.fiber_sizes[v]; ++i)
            f[padded.flat(v, i)] = c.f_at(v, i);
    return {std::move(padded), std::move(f)};
}

Configuration reduce(const Configuration& c, int v, int fiber_index) {
    const Cover& cov = c.cover;
    if (v < 0 || v >= cov.base.n) throw InvalidPivot("pivot vertex out of range");
    if (fiber_index < 0 || fiber_index >= cov.fiber_sizes[v])
        throw InvalidPivot("pivot fiber index out of range");
    int x = cov.flat(v, fiber_index);
    if (c.f[x] == 0) throw InvalidPivot("pivot requires f(x) > 0");
    auto decomp = block_decomposition(cov.base);
    if (decomp.is_cut(v))
        throw ReductionUnsound("pivot vertex separates G");

    // Old-to-new vertex map: drop v, shift the tail down.
    auto remap = [v](int u) { return u < v ? u : u - 1; };
    std::vector<int> sizes;
    for (int u = 0; u < cov.base.n; ++u)
        if (u != v) sizes.push_back(cov.fiber_sizes[u]);
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (const auto& [e, pairs] : cov.matchings) {
        auto [a, b] = e;
        if (a == v || b == v) continue;
        matchings[{remap(a), remap(b)}] = pairs;
    }
    for (auto [a, b] : cov.base.edges())
        if (a != v && b != v) edges.emplace_back(remap(a), remap(b));

    Cover reduced = make_cover(build_graph(edges, cov.base.n - 1), std::move(sizes),
                               std::move(matchings));
    std::vector<int> f(reduced.h_order, 0);
    for (int u = 0; u < cov.base.n; ++u) {
        if (u == v) continue;
        for (int i = 0; i < cov.fiber_sizes[u]; ++i)
            f[reduced.flat(remap(u), i)] = c.f_at(u, i);
    }
    for (int y : cov.h_adj[x]) {
        int target = reduced.flat(remap(cov.h_vertex[y]), cov.h_index[y]);
        f[target] = std::max(0, f[target] - 1);
    }
    return {std::move(reduced), std::move(f)};
}

namespace {

struct ConfigSolve {
    const Configuration& c;
    std::vector<int> order;
    Transversal choice;
    std::uint64_t chosen = 0;

    explicit ConfigSolve(const Configuration& cfg) : c(cfg), choice(cfg.cover.base.n, -1) {
        for (int v = 0; v < c.cover.base.n; ++v) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (c.cover.base.degree(a) != c.cover.base.degree(b))
                return c.cover.base.degree(a) > c.cover.base.degree(b);
            return a < b;
        });
    }

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int i = 0; i < c.cover.fiber_sizes[v]; ++i) {
            std::uint64_t next = chosen | (std::uint64_t{1} << c.cover.flat(v, i));
            if (!strictly_f_degenerate_mask(c.cover.h_bits, c.f, next)) continue;
            choice[v] = i;
            chosen = next;
            if (dfs(depth + 1)) return true;
            chosen &= ~(std::uint64_t{1} << c.cover.flat(v, i));
            choice[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Transversal> solve(const Configuration& c) {
    if (c.cover.h_order > 64) throw TooLarge("solver restricted to |V(H)| <= 64");
    for (int v = 0; v < c.cover.base.n; ++v)
        if (c.cover.fiber_sizes[v] == 0) return std::nullopt;  // no transversal at all
    ConfigSolve s(c);
    if (s.dfs(0)) return s.choice;
    return std::nullopt;
}

GuidedSolveResult solve_reduction_guided(const Configuration& c) {
    const int n = c.cover.base.n;
    if (n == 0) return {Transversal{}, false, 0};
    if (n == 1) {
        for (int i = 0; i < c.cover.fiber_sizes[0]; ++i)
            if (c.f_at(0, i) > 0) return {Transversal{i}, false, 0};
        return {std::nullopt, false, 0};
    }
    if (!is_connected(c.cover.base) || !is_degree_feasible(c)) return {solve(c), true, 0};

    auto decomp = block_decomposition(c.cover.base);
    int pivot_v = -1;
    for (int v = 0; v < n; ++v) {
        if (decomp.is_cut(v)) continue;
        if (pivot_v == -1 || c.cover.base.degree(v) > c.cover.base.degree(pivot_v)) pivot_v = v;
    }
    bool any_positive = false;
    for (int i = 0; i < c.cover.fiber_sizes[pivot_v]; ++i) {
        if (c.f_at(pivot_v, i) == 0) continue;
        any_positive = true;
        Configuration red = reduce(c, pivot_v, i);
        GuidedSolveResult sub = solve_reduction_guided(red);
        if (!sub.transversal) continue;
        Transversal lifted(n, -1);
        for (int u = 0; u < n; ++u) {
            if (u == pivot_v) continue;
            lifted[u] = (*sub.transversal)[u < pivot_v ? u : u - 1];
        }
        lifted[pivot_v] = i;
        std::uint64_t mask = transversal_mask(c.cover, lifted);
        if (strictly_f_degenerate_mask(c.cover.h_bits, c.f, mask))
            return {lifted, sub.used_fallback, sub.reductions_applied + 1};
    }
    if (!any_positive) {
        // Any transversal must pick an f=0 vertex at pivot_v, which alone
        // already defeats strict f-degeneracy.
        return {std::nullopt, false, 0};
    }
    return {solve(c), true, 0};
}

}  // namespace dpcolor
