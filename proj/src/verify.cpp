#include "charp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "charp/ralg.hpp"

namespace charp {

std::string version() { return CHARP_VERSION; }

Budget Budget::profile_named(const std::string& name) {
  Budget b;
  if (name == "fast") return b;
  if (name == "full") {
    b.profile = "full";
    b.max_level = 8;
    b.max_group_order = 1000;
    b.max_terms = 12;
    return b;
  }
  throw UsageError("unknown budget profile '" + name + "' (expected fast or full)");
}

void Budget::apply_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty() || line.front() == '[') continue;  // TOML table headers are ignored
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(val, &used);
      if (used != val.size() || v <= 0) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw UsageError("config line " + std::to_string(lineno) + ": '" + val + "' is not a positive integer");
    }
    if (key == "max_level") max_level = v;
    else if (key == "max_group_order") max_group_order = v;
    else if (key == "max_terms") max_terms = v;
    else throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

Budget Budget::from_environment(const std::string& config_path) {
  const char* env = std::getenv("CHARP_BUDGET_PROFILE");
  Budget b = profile_named(env && *env ? env : "fast");
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw UsageError("cannot read config file " + config_path);
    std::stringstream ss;
    ss << f.rdbuf();
    b.apply_config(ss.str());
  }
  return b;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

void Outcome::computed(const std::string& key, json value) { computed_[key] = std::move(value); }

void Outcome::expect(const std::string& key, json value, Provenance prov) {
  expected_[key] = {{"value", std::move(value)}, {"provenance", to_string(prov)}};
}

void Outcome::note(const std::string& text) {
  if (!notes_.empty()) notes_ += "; ";
  notes_ += text;
}

bool Outcome::matches() const {
  if (expected_.empty()) return false;
  for (auto& [k, e] : expected_.items()) {
    if (!computed_.contains(k) || computed_[k] != e["value"]) return false;
  }
  return true;
}

json Report::to_json() const {
  json p = json::object();
  for (auto& [k, v] : params) p[k] = v;
  return {{"id", id},     {"params", p},         {"computed", computed},     {"expected", expected},
          {"pass", pass}, {"skipped", skipped},  {"runtime_ms", runtime_ms}, {"version", version}};
}

void Registry::add(Scenario s) {
  if (scenarios_.count(s.id)) throw Error("duplicate scenario id " + s.id);
  std::string id = s.id;
  scenarios_.emplace(std::move(id), std::move(s));
}

const Scenario* Registry::find(const std::string& id) const {
  auto it = scenarios_.find(id);
  return it == scenarios_.end() ? nullptr : &it->second;
}

std::vector<const Scenario*> Registry::all() const {
  std::vector<const Scenario*> out;
  for (auto& [id, s] : scenarios_) out.push_back(&s);
  return out;
}

std::vector<const Scenario*> Registry::tagged(const std::string& tag) const {
  if (tag.empty()) return all();
  std::vector<const Scenario*> out;
  for (auto& [id, s] : scenarios_)
    if (std::find(s.tags.begin(), s.tags.end(), tag) != s.tags.end()) out.push_back(&s);
  return out;
}

Report run(const Registry& reg, const std::string& id, const Params& overrides, const Budget& budget) {
  const Scenario* s = reg.find(id);
  if (!s) throw UsageError("unknown scenario '" + id + "'");
  Params params = s->defaults;
  for (auto& [k, v] : overrides) {
    if (!params.count(k)) throw UsageError("scenario '" + id + "' has no parameter '" + k + "'");
    params[k] = v;
  }
  if (s->resolve) s->resolve(params);

  Report r;
  r.id = id;
  r.params = params;
  r.version = version();
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s->run(params, budget, out);
    r.pass = out.matches();
    if (!r.pass && out.expected().empty()) out.note("no expectations recorded");
  } catch (const BudgetExceeded& e) {
    r.skipped = true;
    out.note(std::string("budget exceeded: ") + e.what());
  } catch (const SizeLimit& e) {
    r.skipped = true;
    out.note(std::string("size limit: ") + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    out.note(std::string("error: ") + e.what());
  }
  r.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  r.computed = out.computed();
  r.expected = out.expected();
  r.notes = out.notes();
  if (r.skipped) r.pass = false;
  return r;
}

RunAll run_all(const Registry& reg, const std::string& tag, const Budget& budget) {
  RunAll res;
  for (const Scenario* s : reg.tagged(tag)) {
    res.reports.push_back(run(reg, s->id, {}, budget));
    const Report& r = res.reports.back();
    if (!r.skipped && !r.pass) res.exit_code = 1;
  }
  return res;
}

}  // namespace charp
