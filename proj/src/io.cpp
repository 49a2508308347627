// SPDX-License-Identifier: Apache-2.0
#include "copo/io.hpp"

#include <algorithm>
#include <fstream>

namespace copo::io {

namespace {

nlohmann::json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

void store_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

std::size_t require_positive_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0) {
        throw ParseError(std::string("field \"") + key + "\" must be a positive integer");
    }
    return j[key].get<std::size_t>();
}

}  // namespace

SymTensor tensor_from_json(const nlohmann::json& j) {
    OrbitEntrySpec spec;
    spec.order = require_positive_int(j, "order");
    spec.dim = require_positive_int(j, "dim");

    if (!j.contains("mode") || !j["mode"].is_string()) {
        throw ParseError("field \"mode\" must be \"orbit_sum\" or \"per_entry\"");
    }
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "orbit_sum") {
        spec.mode = OrbitEntrySpec::Mode::OrbitSum;
    } else if (mode == "per_entry") {
        spec.mode = OrbitEntrySpec::Mode::PerEntry;
    } else {
        throw ParseError("unknown mode \"" + mode + "\"");
    }

    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("field \"entries\" must be an array");
    }
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("idx") || !e.contains("val") ||
            !e["idx"].is_array() || !e["val"].is_number()) {
            throw ParseError("each entry needs an \"idx\" array and a numeric \"val\"");
        }
        std::vector<std::size_t> idx;
        for (const auto& c : e["idx"]) {
            if (!c.is_number_unsigned() || c.get<std::size_t>() == 0) {
                throw ParseError("entry \"idx\" components must be 1-based positive integers");
            }
            idx.push_back(c.get<std::size_t>());
        }
        spec.entries.emplace_back(std::move(idx), e["val"].get<double>());
    }

    try {
        return SymTensor::build(spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid tensor spec: ") + e.what());
    }
}

nlohmann::json tensor_to_json(const SymTensor& t) {
    nlohmann::json entries = nlohmann::json::array();
    multi_index::for_each_orbit(t.order(), t.dim(), [&](std::span<const std::size_t> idx) {
        const double v = t.values()[multi_index::flatten(idx, t.dim())];
        if (v == 0.0) return;
        nlohmann::json e;
        e["idx"] = nlohmann::json::array();
        for (std::size_t c : idx) e["idx"].push_back(c + 1);
        e["val"] = v;
        entries.push_back(std::move(e));
    });
    return nlohmann::json{{"order", t.order()},
                          {"dim", t.dim()},
                          {"mode", "per_entry"},
                          {"entries", std::move(entries)}};
}

SymTensor read_tensor(const std::filesystem::path& path) {
    return tensor_from_json(load_file(path));
}

void write_tensor(const std::filesystem::path& path, const SymTensor& t) {
    store_file(path, tensor_to_json(t));
}

UniformHypergraph hypergraph_from_json(const nlohmann::json& j) {
    const std::size_t n = require_positive_int(j, "n");
    const std::size_t m = require_positive_int(j, "m");
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw ParseError("field \"edges\" must be an array of vertex arrays");
    }
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array()) throw ParseError("each edge must be an array of 1-based vertex ids");
        std::vector<std::size_t> edge;
        for (const auto& v : e) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
                throw ParseError("edge vertices must be 1-based positive integers");
            }
            edge.push_back(v.get<std::size_t>());
        }
        edges.push_back(std::move(edge));
    }
    try {
        return UniformHypergraph(n, m, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
}

nlohmann::json hypergraph_to_json(const UniformHypergraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        nlohmann::json edge = nlohmann::json::array();
        for (std::size_t v : e) edge.push_back(v + 1);
        edges.push_back(std::move(edge));
    }
    return nlohmann::json{
        {"n", g.vertex_count()}, {"m", g.edge_cardinality()}, {"edges", std::move(edges)}};
}

UniformHypergraph read_hypergraph(const std::filesystem::path& path) {
    return hypergraph_from_json(load_file(path));
}

void write_hypergraph(const std::filesystem::path& path, const UniformHypergraph& g) {
    store_file(path, hypergraph_to_json(g));
}

}  // namespace copo::io
