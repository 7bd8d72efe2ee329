#pragma once
// Scenario registry: each scenario binds a stated claim to an executable check
// and produces a machine-readable report.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace charp {

using Params = std::map<std::string, long long>;
using json = nlohmann::json;

// resource limits; profiles "fast" and "full", overridable from a config file
struct Budget {
  std::string profile = "fast";
  int max_level = 6;          // cochain degree / cosimplicial level
  int max_group_order = 200;  // groups whose cochains are built explicitly
  int max_terms = 6;          // summands in weight searches
  static Budget profile_named(const std::string& name);
  // CHARP_BUDGET_PROFILE, then the optional config file (flat key = value, TOML subset)
  static Budget from_environment(const std::string& config_path = "");
  void apply_config(const std::string& text);
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Provenance { Paper, Trivial, Derived };
std::string to_string(Provenance p);

// what a scenario fills in while running
class Outcome {
 public:
  void computed(const std::string& key, json value);
  void expect(const std::string& key, json value, Provenance prov);
  void note(const std::string& text);
  const json& computed() const { return computed_; }
  const json& expected() const { return expected_; }
  const std::string& notes() const { return notes_; }
  bool matches() const;  // every expected key computed and equal

 private:
  json computed_ = json::object(), expected_ = json::object();
  std::string notes_;
};

struct Scenario {
  std::string id;
  std::string title;
  std::string claim;  // the statement being checked, in words
  std::vector<std::string> tags;
  Params defaults;  // the parameter schema: accepted keys and default values (-1: derived from others)
  std::function<void(Params&)> resolve;  // fills derived defaults, throws UsageError on invalid values
  std::function<void(const Params&, const Budget&, Outcome&)> run;
};

struct Report {
  std::string id;
  Params params;
  json computed = json::object(), expected = json::object();
  bool pass = false, skipped = false;
  long long runtime_ms = 0;
  std::string version;
  std::string notes;  // human-readable, not part of the JSON schema
  json to_json() const;
};

class Registry {
 public:
  void add(Scenario s);
  const Scenario* find(const std::string& id) const;
  std::vector<const Scenario*> all() const;  // ordered by id
  std::vector<const Scenario*> tagged(const std::string& tag) const;
  bool empty() const { return scenarios_.empty(); }

 private:
  std::map<std::string, Scenario> scenarios_;
};

const Registry& default_registry();

// overrides must name keys of the scenario's schema; throws UsageError otherwise
Report run(const Registry& reg, const std::string& id, const Params& overrides, const Budget& budget);

struct RunAll {
  std::vector<Report> reports;
  int exit_code = 0;  // 0 iff every non-skipped report passes
};
RunAll run_all(const Registry& reg, const std::string& tag, const Budget& budget);

std::string version();

}  // namespace charp
