#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mincut {

using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using EdgeWeight = std::uint64_t;

inline constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
inline constexpr EdgeWeight kInfiniteWeight = std::numeric_limits<EdgeWeight>::max();

/// Thrown when a caller violates a documented precondition (bad edge list,
/// out-of-range ids, solver called on input it rejects).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by graph file parsers; carries the 1-based input line.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A global minimum cut candidate: its value and the bipartition of the
/// original vertex set (side[v] == true puts v on side A).
struct CutResult {
  EdgeWeight value = 0;
  std::vector<bool> side;
  // Graphs with fewer than two vertices admit no proper bipartition.
  bool degenerate = false;
};

}  // namespace mincut
