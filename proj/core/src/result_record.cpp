#include "mincut/result_record.hpp"

#include <nlohmann/json.hpp>
#include <ostream>

namespace mincut {

std::string to_json_line(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["graph"] = r.graph;
  j["seed"] = r.seed;
  j["threads"] = r.threads;
  j["repetition"] = r.repetition;
  j["n"] = r.n;
  j["m"] = r.m;
  j["cut"] = r.cut;
  j["degenerate"] = r.degenerate;
  j["total_ms"] = r.total_ms;
  j["lpa_ms"] = r.phases.label_propagation_ms;
  j["fix_ms"] = r.phases.fix_misplaced_ms;
  j["contract_ms"] = r.phases.contraction_ms;
  j["pr_ms"] = r.phases.pr_ms;
  j["solve_ms"] = r.phases.solve_ms;
  j["ns_per_edge"] = r.ns_per_edge;
  j["optimal"] = r.optimal.has_value() ? nlohmann::ordered_json(*r.optimal)
                                       : nlohmann::ordered_json(nullptr);
  j["relative_error"] = r.relative_error.has_value() ? nlohmann::ordered_json(*r.relative_error)
                                                     : nlohmann::ordered_json(nullptr);
  j["speedup"] = r.speedup.has_value() ? nlohmann::ordered_json(*r.speedup)
                                       : nlohmann::ordered_json(nullptr);
  j["partition_file"] = r.partition_file.empty() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(r.partition_file);
  j["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
  return j.dump();
}

void emit_results(std::span<const ResultRecord> records, std::ostream& out) {
  for (const ResultRecord& r : records) out << to_json_line(r) << '\n';
}

}  // namespace mincut
