#include "ssbm/edge_list.hpp"

#include "ssbm/types.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace ssbm {

namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw ValidationError("edge list line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(std::string_view text, long long& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* const last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n=" << g.node_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.i << ',' << e.j << ',' << e.sign << '\n';
  }
}

SignedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<SignedEdge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    if (line.find('\r') != std::string::npos) malformed(line_no, "carriage return (LF endings required)");
    if (n < 0) {
      if (line.rfind("n=", 0) != 0 || !parse_int(std::string_view(line).substr(2), n) || n < 0) {
        malformed(line_no, "expected header 'n=<count>'");
      }
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      malformed(line_no, "expected 'i,j,s'");
    }
    const std::string_view view(line);
    const auto fi = view.substr(0, c1);
    const auto fj = view.substr(c1 + 1, c2 - c1 - 1);
    const auto fs = view.substr(c2 + 1);
    long long i = 0;
    long long j = 0;
    long long s = 0;
    if (!parse_int(fi, i) || !parse_int(fj, j)) {
      malformed(line_no, "node ids must be non-negative integers");
    }
    if (!parse_int(fs, s) || (s != 1 && s != -1)) malformed(line_no, "sign must be 1 or -1");
    if (i < 0 || j < 0 || i >= j) malformed(line_no, "requires 0 <= i < j");
    if (j >= n) malformed(line_no, "node id out of range for n=" + std::to_string(n));
    if (!edges.empty()) {
      const auto& prev = edges.back();
      if (prev.i > i || (prev.i == i && prev.j >= j)) {
        malformed(line_no, "edges must be sorted by (i, j) without repeats");
      }
    }
    edges.push_back({static_cast<Index>(i), static_cast<Index>(j), static_cast<int>(s)});
  }
  if (n < 0) malformed(line_no + 1, "missing header 'n=<count>'");
  return SignedGraph(static_cast<Index>(n), std::move(edges));
}

void save_edge_list(const std::string& path, const SignedGraph& g,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_edge_list(out, g, comments);
  if (!out) throw IoError("write to '" + path + "' failed");
}

SignedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

}  // namespace ssbm
