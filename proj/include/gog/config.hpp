#pragma once

#include <string>
#include <string_view>

#include "gog/schema.hpp"

namespace gog {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, int line = 0, int col = 0);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Schema config text with sections [vertices], [edges], [oracles] and
// [admissible]. Edges declare reverse/from/to/in_tree; the oracles section
// assigns each vertex its oracle kind; the admissible section carries the
// per-edge frame data (c, o, cosets, coset_mul, conj, K) and an optional
// membership automaton file. Auxiliary files referenced by oracle specs are
// resolved against base_dir.
GroupSchema parse_schema(std::string_view text, const std::string& base_dir = ".");
GroupSchema parse_schema_file(const std::string& path);

// Canonical config text; parsing it back yields a semantically equal schema.
std::string serialize_schema(const GroupSchema& schema);

}  // namespace gog
