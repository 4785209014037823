#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "artin/graph.hpp"

#ifndef ARTIN_TEST_DATA_DIR
#error "ARTIN_TEST_DATA_DIR must point at tests/data"
#endif

namespace artin::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ARTIN_TEST_DATA_DIR) + "/" + name + ".artin";
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// f1..f5.
inline LabeledGraph fixture(const std::string& name) { return parse_graph(read_fixture(name)); }

}  // namespace artin::testing
