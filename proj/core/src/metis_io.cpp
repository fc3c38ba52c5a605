#include "mincut/metis_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace mincut {

namespace {

struct Token {
  std::uint64_t value;
  bool ok;
};

class LineTokenizer {
 public:
  explicit LineTokenizer(const std::string& line) : s_(line), pos_(0) {}

  bool next(std::uint64_t& out) {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    if (pos_ >= s_.size()) return false;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      malformed_ = true;
      return false;
    }
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    out = value;
    return true;
  }

  bool malformed() const { return malformed_; }

 private:
  const std::string& s_;
  std::size_t pos_;
  bool malformed_ = false;
};

}  // namespace

Graph parse_metis(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](bool skip_blank) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '%') continue;  // comment
      if (skip_blank && line.find_first_not_of(" \t\r") == std::string::npos) continue;
      return true;
    }
    return false;
  };

  if (!next_line(/*skip_blank=*/true)) throw GraphFormatError(line_no, "missing header");
  std::uint64_t n = 0, m = 0, fmt = 0;
  {
    LineTokenizer tok(line);
    if (!tok.next(n) || !tok.next(m)) throw GraphFormatError(line_no, "malformed header, expected 'n m [fmt]'");
    std::uint64_t extra = 0;
    if (tok.next(fmt)) {
      if (fmt != 0 && fmt != 1) {
        throw GraphFormatError(line_no, "unsupported fmt code " + std::to_string(fmt) +
                                            " (only 0 and 1 are supported)");
      }
      if (tok.next(extra)) throw GraphFormatError(line_no, "trailing tokens after header");
    }
    if (tok.malformed()) throw GraphFormatError(line_no, "malformed token in header");
    if (n == 0) throw GraphFormatError(line_no, "graph with 0 vertices rejected");
  }

  const bool weighted = fmt == 1;
  std::vector<std::vector<std::pair<NodeID, EdgeWeight>>> adj(n);
  std::vector<std::size_t> vertex_line(n, 0);
  std::uint64_t entries = 0;

  for (std::uint64_t v = 0; v < n; ++v) {
    if (!next_line(/*skip_blank=*/false)) {
      // trailing isolated vertices may be cut off by EOF; the entry-count
      // check below still catches missing edges
      vertex_line[v] = line_no;
      continue;
    }
    vertex_line[v] = line_no;
    LineTokenizer tok(line);
    std::uint64_t a = 0;
    while (tok.next(a)) {
      std::uint64_t w = 1;
      if (weighted) {
        if (!tok.next(w)) {
          if (tok.malformed()) throw GraphFormatError(line_no, "malformed token");
          throw GraphFormatError(line_no, "odd token count: neighbor " + std::to_string(a) +
                                              " is missing its weight (fmt=1)");
        }
      }
      if (a < 1 || a > n) {
        throw GraphFormatError(line_no, "neighbor index " + std::to_string(a) +
                                            " out of range [1," + std::to_string(n) + "]");
      }
      if (a == v + 1) throw GraphFormatError(line_no, "self-loop at vertex " + std::to_string(v + 1));
      if (w < 1) throw GraphFormatError(line_no, "edge weight must be >= 1");
      adj[v].emplace_back(static_cast<NodeID>(a - 1), static_cast<EdgeWeight>(w));
      ++entries;
    }
    if (tok.malformed()) throw GraphFormatError(line_no, "malformed token");
  }

  if (entries != 2 * m) {
    throw GraphFormatError(line_no, "adjacency entry count mismatch: header promises " +
                                        std::to_string(2 * m) + " (2m), found " +
                                        std::to_string(entries));
  }

  // merge duplicate neighbor entries, then verify symmetry
  for (std::uint64_t v = 0; v < n; ++v) {
    auto& row = adj[v];
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (out > 0 && row[out - 1].first == row[i].first) {
        row[out - 1].second += row[i].second;
      } else {
        row[out++] = row[i];
      }
    }
    row.resize(out);
  }
  for (std::uint64_t v = 0; v < n; ++v) {
    for (const auto& [u, w] : adj[v]) {
      const auto& back = adj[u];
      auto it = std::lower_bound(back.begin(), back.end(), static_cast<NodeID>(v),
                                 [](const auto& entry, NodeID val) { return entry.first < val; });
      if (it == back.end() || it->first != static_cast<NodeID>(v)) {
        throw GraphFormatError(vertex_line[v], "asymmetric input: edge (" + std::to_string(v + 1) +
                                                   "," + std::to_string(u + 1) +
                                                   ") has no reverse entry");
      }
      if (it->second != w) {
        throw GraphFormatError(vertex_line[v], "asymmetric input: edge (" + std::to_string(v + 1) +
                                                   "," + std::to_string(u + 1) +
                                                   ") listed with differing weights");
      }
    }
  }

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  targets.reserve(entries);
  weights.reserve(entries);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (const auto& [u, w] : adj[v]) {
      targets.push_back(u);
      weights.push_back(w);
    }
    offsets[v + 1] = targets.size();
  }
  return Graph::from_csr(std::move(offsets), std::move(targets), std::move(weights));
}

Graph parse_metis(const std::string& text) {
  std::istringstream in(text);
  return parse_metis(in);
}

namespace {

std::string read_whole_file(const std::string& path) {
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (f == nullptr) throw std::runtime_error("cannot open '" + path + "'");
    std::string out;
    char buf[1 << 16];
    int r;
    while ((r = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(r));
    const bool failed = r < 0;
    gzclose(f);
    if (failed) throw std::runtime_error("gzip read error in '" + path + "'");
    return out;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void append_number(std::string& out, std::uint64_t value) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, ptr);
}

}  // namespace

Graph read_metis_file(const std::string& path) {
  const std::string text = read_whole_file(path);
  std::istringstream in(text);
  return parse_metis(in);
}

std::string write_metis(const Graph& g) {
  std::string out;
  out.reserve(16 * g.entry_count() + 32);
  append_number(out, g.vertex_count());
  out.push_back(' ');
  append_number(out, g.edge_count());
  out.append(" 1\n");
  for (NodeID v = 0; v < g.vertex_count(); ++v) {
    bool first = true;
    for (EdgeID e = g.first_entry(v); e < g.last_entry(v); ++e) {
      if (!first) out.push_back(' ');
      first = false;
      append_number(out, g.target(e) + 1);
      out.push_back(' ');
      append_number(out, g.weight(e));
    }
    out.push_back('\n');
  }
  return out;
}

void write_metis_file(const Graph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  const std::string text = write_metis(g);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write error on '" + path + "'");
}

}  // namespace mincut
