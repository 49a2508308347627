// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "copo/hypergraph.hpp"
#include "copo/tensor.hpp"

namespace copo::io {

/// Malformed or invalid input file; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tensor files:
//   {"order": m, "dim": n, "mode": "orbit_sum"|"per_entry",
//    "entries": [{"idx": [1-based ints], "val": number}, ...]}
SymTensor tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const SymTensor& t);
SymTensor read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const SymTensor& t);

// Hypergraph files:
//   {"n": int, "m": int, "edges": [[1-based vertex ids], ...]}
UniformHypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const UniformHypergraph& g);
UniformHypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const UniformHypergraph& g);

}  // namespace copo::io
