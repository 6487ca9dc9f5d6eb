#include "hypergen/io.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace hypergen {

std::string to_json_line(const Hypergraph& h) {
    const Hypergraph c = canonicalized(h);
    nlohmann::ordered_json j;
    j["n"] = c.num_nodes;
    j["edges"] = c.hyperedges;
    return j.dump();
}

Hypergraph hypergraph_from_json_line(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    Hypergraph h;
    h.num_nodes = j.at("n").get<int>();
    h.hyperedges = j.at("edges").get<std::vector<std::vector<int>>>();
    validate(h);
    return h;
}

std::vector<Hypergraph> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<Hypergraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(hypergraph_from_json_line(line));
    }
    return out;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<Hypergraph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (const auto& h : graphs) out << to_json_line(h) << '\n';
}

}  // namespace hypergen
