#ifndef CHROMCON_TRACE_HPP
#define CHROMCON_TRACE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromcon {

struct CheckRecord {
  std::string label;
  bool ok = true;
  std::string detail;
};

struct StageTrace {
  std::string stage;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, long long>> values;
};

/// Stage-by-stage record of a pipeline run: named scalar snapshots plus the
/// outcome of every internal consistency check, serializable for reports
/// and golden-trace regression tests.
class TraceLog {
 public:
  void begin_stage(std::string name) { stages_.push_back({std::move(name), {}, {}}); }

  void note(std::string key, long long value) {
    if (stages_.empty()) begin_stage("setup");
    stages_.back().values.emplace_back(std::move(key), value);
  }

  /// Records and throws std::logic_error on failure; a failed check here
  /// means the implementation (or its reading of the construction) is
  /// wrong, never the input.
  void require(const std::string& label, bool ok, const std::string& detail = {}) {
    record(label, ok, detail);
    if (!ok)
      throw std::logic_error("internal check failed: " + label +
                             (detail.empty() ? "" : " (" + detail + ")"));
  }

  /// Records without throwing; used where a failed check downgrades a
  /// report instead of aborting.
  bool record(const std::string& label, bool ok, const std::string& detail = {}) {
    if (stages_.empty()) begin_stage("setup");
    stages_.back().checks.push_back({label, ok, detail});
    return ok;
  }

  bool all_ok() const {
    for (const StageTrace& s : stages_)
      for (const CheckRecord& c : s.checks)
        if (!c.ok) return false;
    return true;
  }

  const std::vector<StageTrace>& stages() const { return stages_; }

 private:
  std::vector<StageTrace> stages_;
};

}  // namespace chromcon

#endif
