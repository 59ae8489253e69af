#pragma once

#include <string>

#include "qoc/group.hpp"
#include "qoc/matrix.hpp"

namespace qoc {

// File formats. All readers throw Error(MalformedInput) on bad content and
// round-trip byte-identically with their writers on valid inputs.
//
//   .grp.json  {"name": string, "order": n, "table": [[int,...],...]}
//   .sgn       n lines of n characters from {+,-}
//   .inc       lines of {0,1} characters (rectangular)

GroupTable read_group_json(const std::string& path);
void write_group_json(const std::string& path, const GroupTable& g);

SignMatrix read_sgn(const std::string& path);
void write_sgn(const std::string& path, const SignMatrix& m);

IntMatrix read_inc(const std::string& path);
void write_inc(const std::string& path, const IntMatrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qoc
