#pragma once

#include <iosfwd>
#include <string>

#include "horadam/graph.hpp"

namespace horadam {

// Graph serialization. All formats render vertices as words (compact digits
// when a+b <= 10, comma-separated decimals otherwise; the header of every
// export states which), vertices in lexicographic order, edges sorted by
// endpoint index pairs.

void write_edgelist(const HoradamGraph& g, std::ostream& os);
HoradamGraph read_edgelist(std::istream& is);

void write_dot(const HoradamGraph& g, std::ostream& os, bool with_coloring = false);

void write_json(const HoradamGraph& g, std::ostream& os);
HoradamGraph read_json(std::istream& is);

} // namespace horadam
