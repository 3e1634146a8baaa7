#ifndef DPCOLOR_JSON_IO_HPP
#define DPCOLOR_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "dpcolor/configuration.hpp"
#include "dpcolor/constructible.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/theorems.hpp"

namespace dpcolor {

using json = nlohmann::json;

// Cover wire format: {"graph": [[u,v],...], "fibers": [sizes],
// "matchings": {"u-v": [[i,j],...]}}. Vertex count = |fibers|.
json cover_to_json(const Cover& c);
Cover cover_from_json(const json& j);

// Configuration adds "f": {"v:i": value}; entries must cover V(H).
json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

json graph_to_json(const Graph& g);  // {"n":, "edges": [[u,v],...]}
Graph graph_from_json(const json& j);

json certificate_to_json(const ConstructibleCert& cert);
ConstructibleCert certificate_from_json(const json& j);

json verdict_to_json(const VerdictReport& rep);

}  // namespace dpcolor

#endif
