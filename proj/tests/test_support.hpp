#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "arsobstruct/algebra.hpp"

namespace arsob::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_dir() { return ARSOB_DATA_DIR; }

inline AlgebraPresentation load_presentation(const std::string& name) {
  return parse_presentation(read_file(data_dir() + "/examples/" + name));
}

}  // namespace arsob::test
