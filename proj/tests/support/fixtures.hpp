#pragma once

#include <colorpbw/colorpbw.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string fixture_path(const std::string& rel) {
  return std::string(COLORPBW_FIXTURES_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline colorpbw::AlgebraSpec load_spec(const std::string& rel) {
  return colorpbw::parse_algebra_spec(read_file(fixture_path(rel)));
}

inline colorpbw::ColorHomLieAlgebra load_fixture(const std::string& rel) {
  return load_spec(rel).to_algebra();
}

inline colorpbw::TensorElement load_element(const std::string& rel,
                                            const colorpbw::ColorHomLieAlgebra& A) {
  return colorpbw::parse_element_file(read_file(fixture_path(rel)), A.basis,
                                      A.epsilon.group().field());
}

}  // namespace testsupport
