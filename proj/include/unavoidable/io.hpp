#pragma once

#include <iosfwd>
#include <string>

#include "unavoidable/coloring.hpp"
#include "unavoidable/tournament.hpp"

namespace unav {

// Versioned ASCII formats. Headers:
//   UNAVOIDABLE-COLORING v1   (n line, then "red:" section, one pair per line)
//   UNAVOIDABLE-TOURNAMENT v1 (n line, then "arcs:" section, one arc per line)
//   FK-WITNESS v1 / DK-WITNESS v1
// All indices 0-based, newline-terminated. Round-trips are bit-exact.

std::string serialize(const ColoredCompleteGraph& g);
std::string serialize(const Tournament& t);
std::string serialize(const FkWitness& w);
std::string serialize(const DkWitness& w);

ColoredCompleteGraph parse_coloring(const std::string& text);
Tournament parse_tournament(const std::string& text);
FkWitness parse_fk_witness(const std::string& text);
DkWitness parse_dk_witness(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace unav
