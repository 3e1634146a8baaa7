#include "dpcolor/constructible.hpp"

#include <algorithm>
#include <numeric>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

bool graph_is_block(const Graph& g) {
    if (g.n == 0) return false;
    if (!is_connected(g)) return false;
    return block_decomposition(g).cut_vertices.empty();
}

}  // namespace

Configuration build_m(const Graph& block, int s, const std::vector<int>& embedding) {
    if (!graph_is_block(block)) throw NotABlock("build_m requires a block");
    if (s < 1) throw NotABlock("fiber size must be >= 1");
    if (static_cast<int>(embedding.size()) != block.n)
        throw NotABlock("embedding must place one positive index per vertex");
    for (int i : embedding)
        if (i < 0 || i >= s) throw NotABlock("embedding index out of fiber range");
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (auto [u, v] : block.edges()) matchings[{u, v}] = {{embedding[u], embedding[v]}};
    Cover cov = make_cover(block, std::vector<int>(block.n, s), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (int v = 0; v < block.n; ++v) f[cov.flat(v, embedding[v])] = block.degree(v);
    return {std::move(cov), std::move(f)};
}

Configuration build_k(int n, const std::vector<int>& t, int s) {
    if (n < 1 || s < 1) throw BadPartition("build_k requires n >= 1 and s >= 1");
    int sum = 0;
    for (int ti : t) {
        if (ti < 1) throw BadPartition("t values must be positive");
        sum += ti;
    }
    if (sum != n - 1) throw BadPartition("t must sum to n - 1");
    if (static_cast<int>(t.size()) > s) throw BadPartition("more parts than fiber slots");
    Graph g = [&] {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return build_graph(edges, n);
    }();
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (auto [u, v] : g.edges()) {
        auto& pairs = matchings[{u, v}];
        for (int i = 0; i < s; ++i) pairs.emplace_back(i, i);
    }
    Cover cov = make_cover(g, std::vector<int>(n, s), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < t.size(); ++i) f[cov.flat(v, static_cast<int>(i))] = t[i];
    return {std::move(cov), std::move(f)};
}

Configuration build_c(int n, int s, CycleTwist twist) {
    if (n < 3) throw ParityMismatch("build_c requires cycle order >= 3");
    if (s < 2) throw ParityMismatch("build_c requires fiber size >= 2");
    bool odd = (n % 2) == 1;
    if (odd != (twist == CycleTwist::Odd)) throw ParityMismatch("twist does not match cycle parity");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    Graph g = build_graph(edges, n);
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (int v = 0; v + 1 < n; ++v) matchings[{v, v + 1}] = {{0, 0}, {1, 1}};
    // Closing edge: identity keeps two disjoint copies (odd), the swap
    // splices them into one doubled cycle (even).
    matchings[{0, n - 1}] = odd ? std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}
                                : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}};
    Cover cov = make_cover(g, std::vector<int>(n, s), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (int v = 0; v < n; ++v) {
        f[cov.flat(v, 0)] = 1;
        f[cov.flat(v, 1)] = 1;
    }
    return {std::move(cov), std::move(f)};
}

Configuration merge(const Configuration& c1, int v1, const Configuration& c2, int v2,
                    const std::vector<int>& bijection) {
    const Cover& a = c1.cover;
    const Cover& b = c2.cover;
    int s1 = a.fiber_sizes[v1];
    if (static_cast<int>(bijection.size()) != s1 || s1 != b.fiber_sizes[v2])
        throw BadBijection("bijection must pair the two fibers completely");
    std::vector<bool> hit(s1, false);
    for (int j : bijection) {
        if (j < 0 || j >= s1 || hit[j]) throw BadBijection("bijection is not a bijection");
        hit[j] = true;
    }
    std::vector<int> inverse(s1);
    for (int i = 0; i < s1; ++i) inverse[bijection[i]] = i;

    // c2 vertex u maps to v1 if u == v2, else gets appended after c1.
    auto remap2 = [&](int u) { return u == v2 ? v1 : a.base.n + u - (u > v2 ? 1 : 0); };
    int n = a.base.n + b.base.n - 1;
    std::vector<std::pair<int, int>> edges = a.base.edges();
    for (auto [u, w] : b.base.edges()) edges.emplace_back(remap2(u), remap2(w));

    std::vector<int> sizes(a.fiber_sizes);
    sizes.resize(n);
    for (int u = 0; u < b.base.n; ++u)
        if (u != v2) sizes[remap2(u)] = b.fiber_sizes[u];

    auto matchings = a.matchings;
    for (const auto& [e, pairs] : b.matchings) {
        auto [u, w] = e;
        int nu = remap2(u), nw = remap2(w);
        std::vector<std::pair<int, int>> npairs;
        for (auto [i, j] : pairs) {
            int ni = (u == v2) ? inverse[i] : i;
            int nj = (w == v2) ? inverse[j] : j;
            npairs.emplace_back(ni, nj);
        }
        if (nu > nw) {
            std::swap(nu, nw);
            for (auto& pr : npairs) std::swap(pr.first, pr.second);
        }
        matchings[{nu, nw}] = std::move(npairs);
    }

    Cover cov = make_cover(build_graph(edges, n), std::move(sizes), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (int u = 0; u < a.base.n; ++u)
        for (int i = 0; i < a.fiber_sizes[u]; ++i) f[cov.flat(u, i)] = c1.f_at(u, i);
    for (int u = 0; u < b.base.n; ++u) {
        if (u == v2) continue;
        for (int i = 0; i < b.fiber_sizes[u]; ++i) f[cov.flat(remap2(u), i)] = c2.f_at(u, i);
    }
    for (int i = 0; i < s1; ++i) f[cov.flat(v1, i)] += c2.f_at(v2, bijection[i]);
    return {std::move(cov), std::move(f)};
}

// ---------------------------------------------------------------------------
// Recognizer

namespace {

struct Option {
    BlockTag tag;
    std::map<int, int> m_embedding;
    std::vector<KColumn> k_columns;
    std::map<int, std::pair<int, int>> c_pairs;
    std::vector<std::pair<int, int>> contrib;  // (flat id, value), nonzero entries
};

struct Recognizer {
    const Configuration& c;
    const Cover& cov;
    int s;
    BlockDecomposition decomp;

    explicit Recognizer(const Configuration& cfg)
        : c(cfg), cov(cfg.cover), s(cfg.cover.fiber_sizes.empty() ? 1 : cfg.cover.fiber_sizes[0]),
          decomp(block_decomposition(cfg.cover.base)) {}

    // ---- per-block option generation ----

    void gen_m(const std::vector<int>& verts, const Graph& sub, const std::vector<int>& to_parent,
               std::vector<Option>& out) const {
        int m = static_cast<int>(verts.size());
        if (m < 2) return;
        std::vector<std::vector<int>> cand(m);
        for (int lu = 0; lu < m; ++lu) {
            int v = to_parent[lu];
            int dB = sub.degree(lu);
            if (decomp.is_cut(v)) {
                for (int i = 0; i < s; ++i)
                    if (c.f_at(v, i) >= dB) cand[lu].push_back(i);
            } else {
                // Determined: exactly one positive entry carrying d_B(v).
                int pos = -1;
                bool ok = true;
                for (int i = 0; i < s; ++i) {
                    if (c.f_at(v, i) == 0) continue;
                    if (pos != -1) { ok = false; break; }
                    pos = i;
                }
                if (ok && pos != -1 && c.f_at(v, pos) == dB) cand[lu].push_back(pos);
            }
            if (cand[lu].empty()) return;
        }
        std::vector<int> pick(m, 0);
        auto edges = sub.edges();
        std::function<void(int)> rec = [&](int lu) {
            if (lu == m) {
                for (auto [la, lb] : edges) {
                    int xa = cov.flat(to_parent[la], cand[la][pick[la]]);
                    int xb = cov.flat(to_parent[lb], cand[lb][pick[lb]]);
                    if (!cov.h_has_edge(xa, xb)) return;
                }
                Option opt;
                opt.tag = BlockTag::M;
                for (int i = 0; i < m; ++i) {
                    int v = to_parent[i];
                    int idx = cand[i][pick[i]];
                    opt.m_embedding[v] = idx;
                    opt.contrib.emplace_back(cov.flat(v, idx), sub.degree(i));
                }
                out.push_back(std::move(opt));
                return;
            }
            for (std::size_t k = 0; k < cand[lu].size(); ++k) {
                pick[lu] = static_cast<int>(k);
                rec(lu + 1);
            }
        };
        rec(0);
    }

    void gen_k(const std::vector<int>& verts, const Graph& sub, const std::vector<int>& to_parent,
               std::vector<Option>& out) const {
        int m = static_cast<int>(verts.size());
        if (!sub.is_complete()) return;
        if (m == 1) {
            // Base case: f^B = 0 everywhere (p = 0).
            int v = to_parent[0];
            if (!decomp.is_cut(v)) {
                for (int i = 0; i < s; ++i)
                    if (c.f_at(v, i) != 0) return;
            }
            Option opt;
            opt.tag = BlockTag::K;
            out.push_back(std::move(opt));
            return;
        }
        // Candidate columns, anchored at the first block vertex: a column is
        // the matched-partner closure of an anchor H-vertex, valid when the
        // closure exists on every fiber and is a clique in H.
        int v0 = to_parent[0];
        std::vector<KColumn> columns;
        for (int a = 0; a < s; ++a) {
            KColumn col;
            col.slot[v0] = a;
            bool ok = true;
            for (int lu = 1; lu < m && ok; ++lu) {
                int u = to_parent[lu];
                auto partner = cov.matched_partner(cov.flat(v0, a), u);
                if (!partner) { ok = false; break; }
                col.slot[u] = cov.h_index[*partner];
            }
            if (!ok) continue;
            for (int lu = 1; lu < m && ok; ++lu)
                for (int lw = lu + 1; lw < m && ok; ++lw) {
                    int xu = cov.flat(to_parent[lu], col.slot[to_parent[lu]]);
                    int xw = cov.flat(to_parent[lw], col.slot[to_parent[lw]]);
                    if (!cov.h_has_edge(xu, xw)) ok = false;
                }
            if (ok) columns.push_back(std::move(col));
        }
        if (columns.empty()) return;

        std::vector<int> noncut_local;
        for (int lu = 0; lu < m; ++lu)
            if (!decomp.is_cut(to_parent[lu])) noncut_local.push_back(lu);

        int ncols = static_cast<int>(columns.size());
        for (int mask = 1; mask < (1 << ncols); ++mask) {
            std::vector<int> chosen;
            for (int i = 0; i < ncols; ++i)
                if ((mask >> i) & 1) chosen.push_back(i);
            int p = static_cast<int>(chosen.size());
            if (p > s || p > m - 1) continue;

            if (!noncut_local.empty()) {
                int u0 = to_parent[noncut_local[0]];
                std::vector<int> t;
                bool ok = true;
                int sum = 0;
                for (int ci : chosen) {
                    int ti = c.f_at(u0, columns[ci].slot.at(u0));
                    if (ti < 1) { ok = false; break; }
                    t.push_back(ti);
                    sum += ti;
                }
                if (!ok || sum != m - 1) continue;
                if (!check_k_assignment(columns, chosen, t, noncut_local, to_parent)) continue;
                out.push_back(make_k_option(columns, chosen, t, to_parent));
            } else {
                // Every vertex is a cut vertex: enumerate compositions.
                std::vector<int> t(p, 1);
                std::function<void(int, int)> comp = [&](int idx, int remaining) {
                    if (idx == p) {
                        if (remaining != 0) return;
                        if (!check_k_assignment(columns, chosen, t, noncut_local, to_parent)) return;
                        out.push_back(make_k_option(columns, chosen, t, to_parent));
                        return;
                    }
                    int cap = remaining - (p - idx - 1);  // leave >= 1 per later part
                    for (int val = 1; val <= cap; ++val) {
                        bool fits = true;
                        for (int lu = 0; lu < m && fits; ++lu) {
                            int v = to_parent[lu];
                            if (c.f_at(v, columns[chosen[idx]].slot.at(v)) < val) fits = false;
                        }
                        if (!fits) break;
                        t[idx] = val;
                        comp(idx + 1, remaining - val);
                    }
                };
                comp(0, m - 1);
            }
        }
    }

    bool check_k_assignment(const std::vector<KColumn>& columns, const std::vector<int>& chosen,
                            const std::vector<int>& t, const std::vector<int>& noncut_local,
                            const std::vector<int>& to_parent) const {
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const KColumn& col = columns[chosen[k]];
            for (int lu : noncut_local) {
                int u = to_parent[lu];
                if (c.f_at(u, col.slot.at(u)) != t[k]) return false;
            }
        }
        // Non-cut fibers must vanish outside the chosen columns.
        for (int lu : noncut_local) {
            int u = to_parent[lu];
            std::vector<bool> in_col(s, false);
            for (int ci : chosen) in_col[columns[ci].slot.at(u)] = true;
            for (int i = 0; i < s; ++i)
                if (!in_col[i] && c.f_at(u, i) != 0) return false;
        }
        // Cut fibers only need headroom; the residual search settles exactness.
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const KColumn& col = columns[chosen[k]];
            for (const auto& [v, idx] : col.slot)
                if (c.f_at(v, idx) < t[k]) return false;
        }
        return true;
    }

    Option make_k_option(const std::vector<KColumn>& columns, const std::vector<int>& chosen,
                         const std::vector<int>& t, const std::vector<int>& to_parent) const {
        Option opt;
        opt.tag = BlockTag::K;
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            KColumn col = columns[chosen[k]];
            col.t = t[k];
            for (const auto& [v, idx] : col.slot) opt.contrib.emplace_back(cov.flat(v, idx), t[k]);
            opt.k_columns.push_back(std::move(col));
        }
        (void)to_parent;
        return opt;
    }

    void gen_c(const std::vector<int>& verts, const Graph& sub, const std::vector<int>& to_parent,
               std::vector<Option>& out) const {
        int m = static_cast<int>(verts.size());
        if (!sub.is_cycle()) return;
        // Cyclic order of the block.
        std::vector<int> cyc{0};
        std::vector<bool> used(m, false);
        used[0] = true;
        while (static_cast<int>(cyc.size()) < m) {
            int cur = cyc.back();
            bool advanced = false;
            for (int w : sub.adj[cur])
                if (!used[w]) {
                    cyc.push_back(w);
                    used[w] = true;
                    advanced = true;
                    break;
                }
            if (!advanced) return;  // not a single cycle
        }
        std::vector<std::vector<std::pair<int, int>>> cand(m);
        for (int lu = 0; lu < m; ++lu) {
            int v = to_parent[lu];
            if (decomp.is_cut(v)) {
                for (int i = 0; i < s; ++i)
                    for (int j = i + 1; j < s; ++j)
                        if (c.f_at(v, i) >= 1 && c.f_at(v, j) >= 1) cand[lu].emplace_back(i, j);
            } else {
                std::vector<int> pos;
                for (int i = 0; i < s; ++i)
                    if (c.f_at(v, i) != 0) pos.push_back(i);
                if (pos.size() == 2 && c.f_at(v, pos[0]) == 1 && c.f_at(v, pos[1]) == 1)
                    cand[lu].emplace_back(pos[0], pos[1]);
            }
            if (cand[lu].empty()) return;
        }
        std::vector<int> pick(m, 0);
        std::function<void(int)> rec = [&](int k) {
            if (k == m) {
                int crossed = 0;
                for (int e = 0; e < m; ++e) {
                    int lu = cyc[e], lw = cyc[(e + 1) % m];
                    auto [i1, i2] = cand[lu][pick[lu]];
                    auto [j1, j2] = cand[lw][pick[lw]];
                    int u = to_parent[lu], w = to_parent[lw];
                    bool par = cov.h_has_edge(cov.flat(u, i1), cov.flat(w, j1)) &&
                               cov.h_has_edge(cov.flat(u, i2), cov.flat(w, j2));
                    bool cro = cov.h_has_edge(cov.flat(u, i1), cov.flat(w, j2)) &&
                               cov.h_has_edge(cov.flat(u, i2), cov.flat(w, j1));
                    if (par == cro) return;  // not a perfect pairing
                    if (cro) ++crossed;
                }
                // Two disjoint copies need an even twist count, the doubled
                // cycle an odd one.
                bool odd_cycle = (m % 2) == 1;
                if (odd_cycle != (crossed % 2 == 0)) return;
                Option opt;
                opt.tag = BlockTag::C;
                for (int lu = 0; lu < m; ++lu) {
                    int v = to_parent[lu];
                    auto pr = cand[lu][pick[lu]];
                    opt.c_pairs[v] = pr;
                    opt.contrib.emplace_back(cov.flat(v, pr.first), 1);
                    opt.contrib.emplace_back(cov.flat(v, pr.second), 1);
                }
                out.push_back(std::move(opt));
                return;
            }
            for (std::size_t q = 0; q < cand[k].size(); ++q) {
                pick[k] = static_cast<int>(q);
                rec(k + 1);
            }
        };
        rec(0);
    }

    std::vector<Option> block_options(const std::vector<int>& verts) const {
        auto [sub, to_parent] = induced_subgraph(cov.base, verts);
        std::vector<Option> out;
        gen_m(verts, sub, to_parent, out);
        gen_k(verts, sub, to_parent, out);
        gen_c(verts, sub, to_parent, out);
        return out;
    }
};

}  // namespace

std::optional<ConstructibleCert> is_constructible(const Configuration& c) {
    const Cover& cov = c.cover;
    if (cov.base.n == 0 || !is_connected(cov.base))
        throw PreconditionFailed("recognizer requires a nonempty connected base graph");
    if (!is_normalized(c)) throw PreconditionFailed("recognizer requires a normalized configuration");
    if (!is_degree_tight(c)) return std::nullopt;  // constructible forces exact fiber sums

    Recognizer rec(c);
    const auto& blocks = rec.decomp.blocks;
    int nb = static_cast<int>(blocks.size());

    // BFS over the block-cut tree fixes the merge order.
    std::vector<std::vector<int>> blocks_of_vertex(cov.base.n);
    for (int b = 0; b < nb; ++b)
        for (int v : blocks[b]) blocks_of_vertex[v].push_back(b);
    std::vector<int> order, attach;
    std::vector<bool> placed(nb, false);
    order.push_back(0);
    attach.push_back(-1);
    placed[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int b = order[head];
        for (int v : blocks[b]) {
            for (int nb2 : blocks_of_vertex[v]) {
                if (placed[nb2]) continue;
                placed[nb2] = true;
                order.push_back(nb2);
                attach.push_back(v);
            }
        }
    }
    if (static_cast<int>(order.size()) != nb) return std::nullopt;  // unreachable for connected G

    std::vector<std::vector<Option>> options(nb);
    for (int b = 0; b < nb; ++b) {
        options[b] = rec.block_options(blocks[b]);
        if (options[b].empty()) return std::nullopt;
    }

    std::vector<int> residual(c.f);
    std::vector<int> blocks_left(cov.base.n);
    for (int v = 0; v < cov.base.n; ++v)
        blocks_left[v] = static_cast<int>(blocks_of_vertex[v].size());
    std::vector<int> choice(nb, -1);

    std::function<bool(int)> search = [&](int k) -> bool {
        if (k == nb) return true;
        int b = order[k];
        for (std::size_t oi = 0; oi < options[b].size(); ++oi) {
            const Option& opt = options[b][oi];
            bool fits = true;
            for (auto [x, val] : opt.contrib)
                if (residual[x] < val) { fits = false; break; }
            if (!fits) continue;
            for (auto [x, val] : opt.contrib) residual[x] -= val;
            bool zeros_ok = true;
            for (int v : blocks[b]) {
                if (blocks_left[v] - 1 > 0) continue;
                for (int i = 0; i < rec.s && zeros_ok; ++i)
                    if (residual[cov.flat(v, i)] != 0) zeros_ok = false;
                if (!zeros_ok) break;
            }
            if (zeros_ok) {
                for (int v : blocks[b]) --blocks_left[v];
                choice[b] = static_cast<int>(oi);
                if (search(k + 1)) return true;
                choice[b] = -1;
                for (int v : blocks[b]) ++blocks_left[v];
            }
            for (auto [x, val] : opt.contrib) residual[x] += val;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;

    ConstructibleCert cert;
    cert.base_n = cov.base.n;
    cert.fiber_size = rec.s;
    cert.blocks.resize(nb);
    for (int b = 0; b < nb; ++b) {
        const Option& opt = options[b][choice[b]];
        BlockCert bc;
        bc.vertices = blocks[b];
        for (auto e : cov.base.edges()) {
            auto [u, v] = e;
            bool in_block = std::binary_search(blocks[b].begin(), blocks[b].end(), u) &&
                            std::binary_search(blocks[b].begin(), blocks[b].end(), v);
            if (!in_block) continue;
            bc.edges.push_back(e);
            auto it = cov.matchings.find(e);
            if (it != cov.matchings.end() && !it->second.empty()) bc.matchings[e] = it->second;
        }
        bc.tag = opt.tag;
        bc.m_embedding = opt.m_embedding;
        bc.k_columns = opt.k_columns;
        bc.c_pairs = opt.c_pairs;
        for (int v : blocks[b])
            for (int i = 0; i < rec.s; ++i) bc.f_block[{v, i}] = 0;
        for (auto [x, val] : opt.contrib) bc.f_block[{cov.h_vertex[x], cov.h_index[x]}] += val;
        cert.blocks[b] = std::move(bc);
    }
    for (int k = 0; k < nb; ++k) cert.merge_tree.push_back({order[k], attach[k]});
    return cert;
}

namespace {

// Standalone configuration on a block certificate, vertices densely
// re-labeled by sorted position.
Configuration block_config(const BlockCert& b, int s) {
    int m = static_cast<int>(b.vertices.size());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) -
                                b.vertices.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : b.edges) edges.emplace_back(local(u), local(v));
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (const auto& [e, pairs] : b.matchings)
        matchings[{local(e.first), local(e.second)}] = pairs;  // order preserved: remap monotone
    Cover cov = make_cover(build_graph(edges, m), std::vector<int>(m, s), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (const auto& [key, val] : b.f_block) f[cov.flat(local(key.first), key.second)] = val;
    return {std::move(cov), std::move(f)};
}

Configuration relabel_configuration(const Configuration& c, const std::vector<int>& to_parent,
                                    int n) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : c.cover.base.edges()) edges.emplace_back(to_parent[u], to_parent[v]);
    std::vector<int> sizes(n, 0);
    for (int u = 0; u < c.cover.base.n; ++u) sizes[to_parent[u]] = c.cover.fiber_sizes[u];
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    for (const auto& [e, pairs] : c.cover.matchings) {
        int nu = to_parent[e.first], nv = to_parent[e.second];
        auto npairs = pairs;
        if (nu > nv) {
            std::swap(nu, nv);
            for (auto& pr : npairs) std::swap(pr.first, pr.second);
        }
        matchings[{nu, nv}] = std::move(npairs);
    }
    Cover cov = make_cover(build_graph(edges, n), std::move(sizes), std::move(matchings));
    std::vector<int> f(cov.h_order, 0);
    for (int u = 0; u < c.cover.base.n; ++u)
        for (int i = 0; i < c.cover.fiber_sizes[u]; ++i)
            f[cov.flat(to_parent[u], i)] = c.f_at(u, i);
    return {std::move(cov), std::move(f)};
}

}  // namespace

Configuration replay(const ConstructibleCert& cert) {
    if (cert.blocks.empty()) throw PreconditionFailed("empty certificate");
    const MergeStep& root = cert.merge_tree.at(0);
    Configuration cur = block_config(cert.blocks[root.block_index], cert.fiber_size);
    std::vector<int> to_parent = cert.blocks[root.block_index].vertices;

    std::vector<int> identity(cert.fiber_size);
    std::iota(identity.begin(), identity.end(), 0);

    for (std::size_t k = 1; k < cert.merge_tree.size(); ++k) {
        const MergeStep& step = cert.merge_tree[k];
        const BlockCert& b = cert.blocks[step.block_index];
        Configuration piece = block_config(b, cert.fiber_size);
        int v1 = -1;
        for (std::size_t i = 0; i < to_parent.size(); ++i)
            if (to_parent[i] == step.at_vertex) v1 = static_cast<int>(i);
        int v2 = static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(),
                                                   step.at_vertex) -
                                  b.vertices.begin());
        if (v1 < 0 || v2 >= static_cast<int>(b.vertices.size()) || b.vertices[v2] != step.at_vertex)
            throw PreconditionFailed("merge step does not share its attach vertex");
        cur = merge(cur, v1, piece, v2, identity);
        for (int u : b.vertices)
            if (u != step.at_vertex) to_parent.push_back(u);
    }
    return relabel_configuration(cur, to_parent, cert.base_n);
}

bool configurations_equal(const Configuration& a, const Configuration& b) {
    if (a.cover.base.n != b.cover.base.n) return false;
    if (a.cover.base.edges() != b.cover.base.edges()) return false;
    if (a.cover.fiber_sizes != b.cover.fiber_sizes) return false;
    auto strip = [](const Cover& c) {
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> out;
        for (const auto& [e, pairs] : c.matchings) {
            if (pairs.empty()) continue;
            auto sorted = pairs;
            std::sort(sorted.begin(), sorted.end());
            out[e] = std::move(sorted);
        }
        return out;
    };
    if (strip(a.cover) != strip(b.cover)) return false;
    return a.f == b.f;
}

}  // namespace dpcolor
