#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qrep/quiver.hpp"

inline std::string read_data_file(const std::string& name) {
  std::string path = std::string(QREP_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline qrep::Algebra load_algebra(const std::string& name) {
  return qrep::parse_algebra_text(read_data_file(name));
}

template <typename Catalog>
inline qrep::u32 catalog_index_by_dims(const Catalog& cat, const std::vector<qrep::u32>& dims) {
  for (qrep::u32 i = 0; i < cat.modules.size(); ++i)
    if (cat.modules[i].dims == dims) return i;
  throw std::runtime_error("dimension vector not found in catalog");
}
