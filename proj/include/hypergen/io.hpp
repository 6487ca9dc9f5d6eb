#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hypergen/hypergraph.hpp"

namespace hypergen {

// JSON Lines interchange, one hypergraph per line:
//   {"n": <int>, "edges": [[int, ...], ...]}
// Serialization always emits the canonical form (each edge ascending, edges
// sorted lexicographically).
std::string to_json_line(const Hypergraph& h);
Hypergraph hypergraph_from_json_line(const std::string& line);

std::vector<Hypergraph> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<Hypergraph>& graphs);

}  // namespace hypergen
