#include "dpcolor/json_io.hpp"

#include <string>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

std::pair<int, int> parse_edge_key(const std::string& key, const char* where) {
    auto dash = key.find('-');
    if (dash == std::string::npos)
        throw ParseError(std::string(where) + ": matching key '" + key + "' is not 'u-v'");
    try {
        int u = std::stoi(key.substr(0, dash));
        int v = std::stoi(key.substr(dash + 1));
        return {u, v};
    } catch (...) {
        throw ParseError(std::string(where) + ": matching key '" + key + "' is not 'u-v'");
    }
}

std::pair<int, int> parse_fiber_key(const std::string& key, const char* where) {
    auto colon = key.find(':');
    if (colon == std::string::npos)
        throw ParseError(std::string(where) + ": f key '" + key + "' is not 'v:i'");
    try {
        int v = std::stoi(key.substr(0, colon));
        int i = std::stoi(key.substr(colon + 1));
        return {v, i};
    } catch (...) {
        throw ParseError(std::string(where) + ": f key '" + key + "' is not 'v:i'");
    }
}

}  // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("graph.n: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    const json edge_list = j.value("edges", json::array());
    for (const auto& e : edge_list) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph.edges: entries must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return build_graph(edges, j["n"].get<int>());
    } catch (const InvalidGraph& err) {
        throw ParseError(std::string("graph: ") + err.what());
    }
}

json cover_to_json(const Cover& c) {
    json j;
    j["graph"] = json::array();
    for (auto [u, v] : c.base.edges()) j["graph"].push_back({u, v});
    j["fibers"] = c.fiber_sizes;
    json m = json::object();
    for (const auto& [e, pairs] : c.matchings) {
        if (pairs.empty()) continue;
        json arr = json::array();
        for (auto [i, k] : pairs) arr.push_back({i, k});
        m[std::to_string(e.first) + "-" + std::to_string(e.second)] = std::move(arr);
    }
    j["matchings"] = std::move(m);
    return j;
}

Cover cover_from_json(const json& j) {
    if (!j.contains("fibers") || !j["fibers"].is_array())
        throw ParseError("cover.fibers: missing fiber size array");
    std::vector<int> fibers;
    for (const auto& s : j["fibers"]) fibers.push_back(s.get<int>());
    int n = static_cast<int>(fibers.size());

    std::vector<std::pair<int, int>> edges;
    if (!j.contains("graph") || !j["graph"].is_array())
        throw ParseError("cover.graph: missing edge list");
    for (const auto& e : j["graph"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("cover.graph: entries must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g;
    try {
        g = build_graph(edges, n);
    } catch (const InvalidGraph& err) {
        throw ParseError(std::string("cover.graph: ") + err.what());
    }

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    const json matching_obj = j.value("matchings", json::object());
    for (const auto& [key, arr] : matching_obj.items()) {
        auto [u, v] = parse_edge_key(key, "cover.matchings");
        if (u > v) std::swap(u, v);
        std::vector<std::pair<int, int>> pairs;
        std::size_t idx = 0;
        for (const auto& pr : arr) {
            if (!pr.is_array() || pr.size() != 2)
                throw ParseError("cover.matchings." + key + "[" + std::to_string(idx) +
                                 "]: entries must be [i,j]");
            pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
            ++idx;
        }
        matchings[{u, v}] = std::move(pairs);
    }
    Cover c;
    c.base = std::move(g);
    c.fiber_sizes = std::move(fibers);
    c.matchings = std::move(matchings);
    auto res = validate(c);
    if (!res.ok) {
        std::string at = res.bad_edge ? (" at edge " + std::to_string(res.bad_edge->first) + "-" +
                                         std::to_string(res.bad_edge->second))
                                      : "";
        throw InvalidCover(res.reason + at);
    }
    c.build();
    return c;
}

json configuration_to_json(const Configuration& c) {
    json j = cover_to_json(c.cover);
    json f = json::object();
    for (int v = 0; v < c.cover.base.n; ++v)
        for (int i = 0; i < c.cover.fiber_sizes[v]; ++i)
            f[std::to_string(v) + ":" + std::to_string(i)] = c.f_at(v, i);
    j["f"] = std::move(f);
    return j;
}

Configuration configuration_from_json(const json& j) {
    Cover c = cover_from_json(j);
    if (!j.contains("f") || !j["f"].is_object()) throw ParseError("config.f: missing f map");
    std::vector<int> f(c.h_order, -1);
    for (const auto& [key, val] : j["f"].items()) {
        auto [v, i] = parse_fiber_key(key, "config.f");
        if (v < 0 || v >= c.base.n || i < 0 || i >= c.fiber_sizes[v])
            throw ParseError("config.f: key '" + key + "' outside the fibers");
        f[c.flat(v, i)] = val.get<int>();
    }
    for (int v = 0; v < c.base.n; ++v)
        for (int i = 0; i < c.fiber_sizes[v]; ++i)
            if (f[c.flat(v, i)] < 0)
                throw ParseError("config.f: missing entry '" + std::to_string(v) + ":" +
                                 std::to_string(i) + "'");
    return make_configuration(std::move(c), std::move(f));
}

namespace {

const char* tag_name(BlockTag t) {
    switch (t) {
        case BlockTag::M: return "M";
        case BlockTag::K: return "K";
        case BlockTag::C: return "C";
    }
    return "?";
}

BlockTag tag_from(const std::string& s) {
    if (s == "M") return BlockTag::M;
    if (s == "K") return BlockTag::K;
    if (s == "C") return BlockTag::C;
    throw ParseError("certificate: unknown block tag '" + s + "'");
}

}  // namespace

json certificate_to_json(const ConstructibleCert& cert) {
    json j;
    j["base_n"] = cert.base_n;
    j["fiber_size"] = cert.fiber_size;
    j["blocks"] = json::array();
    for (const auto& b : cert.blocks) {
        json jb;
        jb["vertices"] = b.vertices;
        jb["edges"] = json::array();
        for (auto [u, v] : b.edges) jb["edges"].push_back({u, v});
        jb["tag"] = tag_name(b.tag);
        if (b.tag == BlockTag::M) {
            json emb = json::object();
            for (auto [v, i] : b.m_embedding) emb[std::to_string(v)] = i;
            jb["embedding"] = std::move(emb);
        } else if (b.tag == BlockTag::K) {
            json cols = json::array();
            for (const auto& col : b.k_columns) {
                json jc;
                jc["t"] = col.t;
                json slot = json::object();
                for (auto [v, i] : col.slot) slot[std::to_string(v)] = i;
                jc["slot"] = std::move(slot);
                cols.push_back(std::move(jc));
            }
            jb["columns"] = std::move(cols);
        } else {
            json pairs = json::object();
            for (auto [v, pr] : b.c_pairs) pairs[std::to_string(v)] = {pr.first, pr.second};
            jb["pairs"] = std::move(pairs);
        }
        json fb = json::object();
        for (auto [key, val] : b.f_block)
            fb[std::to_string(key.first) + ":" + std::to_string(key.second)] = val;
        jb["f_block"] = std::move(fb);
        json m = json::object();
        for (const auto& [e, pairs] : b.matchings) {
            json arr = json::array();
            for (auto [i, k] : pairs) arr.push_back({i, k});
            m[std::to_string(e.first) + "-" + std::to_string(e.second)] = std::move(arr);
        }
        jb["matchings"] = std::move(m);
        j["blocks"].push_back(std::move(jb));
    }
    j["merge_tree"] = json::array();
    for (const auto& step : cert.merge_tree)
        j["merge_tree"].push_back({{"block", step.block_index}, {"at", step.at_vertex}});
    return j;
}

ConstructibleCert certificate_from_json(const json& j) {
    ConstructibleCert cert;
    cert.base_n = j.at("base_n").get<int>();
    cert.fiber_size = j.at("fiber_size").get<int>();
    for (const auto& jb : j.at("blocks")) {
        BlockCert b;
        for (const auto& v : jb.at("vertices")) b.vertices.push_back(v.get<int>());
        for (const auto& e : jb.at("edges")) b.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        b.tag = tag_from(jb.at("tag").get<std::string>());
        if (jb.contains("embedding"))
            for (const auto& [key, val] : jb["embedding"].items())
                b.m_embedding[std::stoi(key)] = val.get<int>();
        if (jb.contains("columns"))
            for (const auto& jc : jb["columns"]) {
                KColumn col;
                col.t = jc.at("t").get<int>();
                for (const auto& [key, val] : jc.at("slot").items())
                    col.slot[std::stoi(key)] = val.get<int>();
                b.k_columns.push_back(std::move(col));
            }
        if (jb.contains("pairs"))
            for (const auto& [key, val] : jb["pairs"].items())
                b.c_pairs[std::stoi(key)] = {val[0].get<int>(), val[1].get<int>()};
        for (const auto& [key, val] : jb.at("f_block").items()) {
            auto [v, i] = parse_fiber_key(key, "certificate.f_block");
            b.f_block[{v, i}] = val.get<int>();
        }
        for (const auto& [key, arr] : jb.at("matchings").items()) {
            auto [u, v] = parse_edge_key(key, "certificate.matchings");
            std::vector<std::pair<int, int>> pairs;
            for (const auto& pr : arr) pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
            b.matchings[{u, v}] = std::move(pairs);
        }
        cert.blocks.push_back(std::move(b));
    }
    for (const auto& step : j.at("merge_tree"))
        cert.merge_tree.push_back({step.at("block").get<int>(), step.at("at").get<int>()});
    return cert;
}

json verdict_to_json(const VerdictReport& rep) {
    json j;
    j["theorem"] = rep.theorem_id;
    j["inputs"] = rep.inputs_digest;
    j["holds"] = rep.holds;
    if (rep.exception_class.empty())
        j["exception_class"] = nullptr;
    else
        j["exception_class"] = rep.exception_class;
    json numbers = json::object();
    for (const auto& [label, val] : rep.numbers) numbers[label] = val;
    j["numbers"] = std::move(numbers);
    j["notes"] = rep.notes;
    if (!rep.blocks.empty()) {
        json blocks = json::array();
        for (const auto& b : rep.blocks)
            blocks.push_back({{"vertices", b.vertices}, {"class", b.cls}, {"ok", b.ok}});
        j["blocks"] = std::move(blocks);
    }
    return j;
}

}  // namespace dpcolor
