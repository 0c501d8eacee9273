#include "soltes/hypergraph_io.hpp"

#include <fstream>
#include <sstream>

#include "soltes/error.hpp"

namespace soltes {

namespace {

// Next line with content, comments stripped; false at end of input.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw Error(ErrorCode::kParse, "missing header line");
  auto header = parse_ints(line, line_no);
  if (header.size() < 2 || header.size() > 3 || header[0] < 0 || header[1] < 0) {
    throw Error(ErrorCode::kParse, "header must be `n m`");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  std::size_t k = header.size() == 3 ? static_cast<std::size_t>(header[2]) : 0;

  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges, found " +
                                         std::to_string(i));
    }
    auto values = parse_ints(line, line_no);
    std::vector<Vertex> edge;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] < 0 || static_cast<std::size_t>(values[j]) >= n) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": vertex " +
                                           std::to_string(values[j]) + " out of range");
      }
      if (j > 0 && values[j] <= values[j - 1]) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": vertices must be strictly ascending");
      }
      edge.push_back(static_cast<Vertex>(values[j]));
    }
    if (k == 0) k = edge.size();
    if (edge.size() != k) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": edge of size " +
                                         std::to_string(edge.size()) + " in a " +
                                         std::to_string(k) + "-uniform hypergraph");
    }
    edges.push_back(std::move(edge));
  }
  if (next_content_line(in, line, line_no)) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": trailing content");
  }
  return Hypergraph(n, k == 0 ? 2 : k, edges);
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << h.order() << ' ' << h.size();
  if (h.size() == 0) out << ' ' << h.uniformity();
  out << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
}

nlohmann::json to_json(const Distance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

nlohmann::json to_json(const SignedDistance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

nlohmann::json to_json(const SoltesReport& report) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : report.per_vertex) {
    vertices.push_back({{"label", v.label},
                        {"sigma", to_json(v.transmission)},
                        {"detour_sum", to_json(v.detour_sum)},
                        {"wiener_after", to_json(v.wiener_after_deletion)},
                        {"delta", to_json(v.delta)}});
  }
  return {{"wiener", to_json(report.wiener)}, {"vertices", vertices}, {"verdict", report.verdict}};
}

nlohmann::json to_json(const DistanceDistribution& dist) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [d, count] : dist.counts) {
    out[d.is_infinite() ? std::string("inf") : std::to_string(d.value())] = count;
  }
  return out;
}

}  // namespace soltes
