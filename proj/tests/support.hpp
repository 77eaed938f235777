#ifndef COXTOP_TESTS_SUPPORT_HPP
#define COXTOP_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "coxtop/chamber_system.hpp"
#include "coxtop/coxeter_matrix.hpp"

namespace test {

inline std::string data_path(const std::string& file) { return std::string(COXTOP_DATA_DIR) + "/" + file; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// data/<name>.cox
inline coxtop::CoxeterMatrix matrix(const std::string& name) {
  return coxtop::parse_coxeter_matrix(slurp(data_path(name + ".cox")));
}

/// data/<name>.bld
inline coxtop::ChamberSystem building(const std::string& name) {
  return coxtop::parse_chamber_system(slurp(data_path(name + ".bld")));
}

}  // namespace test

#endif
