#pragma once

#include <string>

#include "gemkit/gemkit.hpp"

#ifndef GEMKIT_DATA_DIR
#error "GEMKIT_DATA_DIR must point at data/gems"
#endif

namespace fixtures {

inline std::string data_path(const std::string& file) { return std::string(GEMKIT_DATA_DIR) + "/" + file; }

// A bundled example by file stem, e.g. "cp2".
inline gemkit::ColoredGraph bundled(const std::string& stem) { return gemkit::load_gem(data_path(stem + ".gem")); }

inline gemkit::ColoredGraph from_rows(int n, std::vector<std::vector<gemkit::Vertex>> rows) {
  return gemkit::ColoredGraph::checked(n, std::move(rows));
}

}  // namespace fixtures
