#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Text format: a header line `n=<int> r=<int>`, then one edge per line as
// space-separated vertex indices. Blank lines and `#` comments are skipped.
// A JSON object {"n": .., "r": .., "edges": [[..], ..]} is accepted wherever
// a file is accepted; the two are distinguished by the leading character.

inline void write_hypergraph_text(std::ostream& os, const Hypergraph& h) {
    os << "n=" << h.vertex_count() << " r=" << h.edge_size() << "\n";
    for (const auto& edge : h.edges()) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i > 0) os << ' ';
            os << edge[i];
        }
        os << "\n";
    }
}

inline void write_hypergraph_json(std::ostream& os, const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.vertex_count();
    j["r"] = h.edge_size();
    j["edges"] = h.edges();
    os << j.dump(2) << "\n";
}

inline Hypergraph read_hypergraph(std::istream& is) {
    // Peek past whitespace to decide between JSON and the text format.
    is >> std::ws;
    if (is.peek() == '{') {
        nlohmann::json j;
        try {
            is >> j;
            return Hypergraph(j.at("n").get<int>(), j.at("r").get<int>(),
                              j.at("edges").get<std::vector<std::vector<int>>>());
        } catch (const nlohmann::json::exception& e) {
            throw validation_error(std::string("hypergraph json: ") + e.what());
        }
    }

    std::string line;
    int n = -1;
    int r = -1;
    bool have_header = false;
    std::vector<std::vector<int>> edges;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
                else if (tok.rfind("r=", 0) == 0) r = std::stoi(tok.substr(2));
                else throw validation_error("hypergraph file: bad header token '" + tok + "'");
                have_header = true;
            }
            if (have_header && (n < 0 || r < 0)) {
                throw validation_error("hypergraph file: header must give both n= and r=");
            }
            continue;
        }
        std::vector<int> edge;
        int v;
        while (ls >> v) edge.push_back(v);
        if (!ls.eof()) throw validation_error("hypergraph file: non-integer vertex in edge line");
        if (!edge.empty()) edges.push_back(std::move(edge));
    }
    if (!have_header) throw validation_error("hypergraph file: missing `n=<int> r=<int>` header");
    return Hypergraph(n, r, std::move(edges));
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

inline void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                                  bool as_json = false) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write hypergraph file: " + path);
    if (as_json) write_hypergraph_json(out, h);
    else write_hypergraph_text(out, h);
}

}  // namespace hyperent
