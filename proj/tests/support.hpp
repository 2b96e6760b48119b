#pragma once

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "effalg/catalog.hpp"
#include "effalg/io.hpp"
#include "naive_enumerator.hpp"

namespace testing {

inline effalg::SumTable table(const char* text) { return effalg::parse_text_table(text); }

inline effalg::EffectAlgebra algebra(const char* text) { return effalg::EffectAlgebra::from_table(table(text)); }

inline const effalg::EffectAlgebra& named(const std::string& name) {
  const auto* e = effalg::find_entry(name);
  if (!e) throw std::runtime_error("missing catalog entry " + name);
  return e->algebra;
}

inline std::string data_path(const std::string& rel) { return std::string(EFFALG_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Full table in the oracle's representation.
inline oracle::Table to_oracle(const effalg::SumTable& t) {
  const int n = t.order();
  oracle::Table out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (const auto s = t.raw_sum(a, b)) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = *s;
  return out;
}

}  // namespace testing
