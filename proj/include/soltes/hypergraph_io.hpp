#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "soltes/hypergraph.hpp"

namespace soltes {

/// Parses the ".hg" text format: a header `n m` followed by one line of
/// ascending vertex indices per edge. Blank lines and `#` comments are
/// skipped. An edgeless file may append the uniformity to the header
/// (`n 0 k`); otherwise it defaults to 2.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

/// Writes `h` in ".hg" format, each line of `comments` prefixed with "# ".
void write_hg(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& comments = {});

nlohmann::json to_json(const Distance& d);
nlohmann::json to_json(const SignedDistance& d);
nlohmann::json to_json(const SoltesReport& report);
nlohmann::json to_json(const DistanceDistribution& dist);

}  // namespace soltes
