#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pvds/instance.hpp"

namespace pvds {

// Line is 1-based; 0 means the file as a whole (e.g. count mismatches).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string &message);
  int line() const { return line_; }

 private:
  int line_;
};

//   c <comment>
//   p pvds <n> <m> <k>     first non-comment line, exactly once
//   d <v> <demand>
//   f <v>
//   e <u> <v>
// Vertices are 1-indexed in text, 0-indexed in memory.
Instance parse_instance(std::string_view text);

// Canonical text. Tombstoned vertices are compacted preserving id order; an
// instance decided NO is written as the smallest NO instance.
std::string write_instance(const Instance &instance);

Instance read_instance_file(const std::string &path);
void write_instance_file(const std::string &path, const Instance &instance);

}  // namespace pvds
