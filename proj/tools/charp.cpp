// Command line front end for the scenario registry.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "charp/verify.hpp"

using namespace charp;

namespace {

void print_human(const Report& r) {
  const char* status = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
  std::cout << status << "  " << r.id;
  for (auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
  std::cout << "  (" << r.runtime_ms << " ms)\n";
  for (auto& [k, v] : r.computed.items()) {
    std::cout << "    " << k << " = " << v.dump();
    if (r.expected.contains(k)) {
      const auto& e = r.expected[k];
      std::cout << "  expected " << e["value"].dump() << " [" << e["provenance"].get<std::string>() << "]";
    }
    std::cout << "\n";
  }
  if (!r.notes.empty()) std::cout << "    note: " << r.notes << "\n";
}

void emit(const std::vector<Report>& reports, bool as_json, bool single, const std::string& out) {
  json doc;
  if (single && reports.size() == 1) {
    doc = reports[0].to_json();
  } else {
    doc = json::array();
    for (auto& r : reports) doc.push_back(r.to_json());
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << doc.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (auto& r : reports) print_human(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks of cohomological claims in characteristic p"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string config;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--config", config, "budget overrides: max_level, max_group_order, max_terms (key = value)")
      ->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list", "list scenarios");
  std::string list_tag;
  list->add_option("--tag", list_tag, "only scenarios with this tag");

  auto* run_cmd = app.add_subcommand("run", "run one scenario");
  std::string id, out;
  std::optional<long long> p, q, dim, seed;
  std::vector<std::string> extra;
  run_cmd->add_option("id", id, "scenario id")->required();
  run_cmd->add_option("--p", p, "characteristic");
  run_cmd->add_option("--q", q, "field size, a power of p");
  run_cmd->add_option("--dim", dim, "rank or dimension");
  run_cmd->add_option("--seed", seed, "random seed");
  run_cmd->add_option("--param", extra, "other schema parameters as key=value");
  run_cmd->add_option("--out", out, "write the JSON report to FILE");

  auto* all_cmd = app.add_subcommand("run-all", "run every scenario with a tag");
  std::string tag, all_out;
  all_cmd->add_option("--tag", tag, "tag filter (fast, full, combinatorics); empty runs everything");
  all_cmd->add_option("--out", all_out, "write the JSON reports to FILE");

  for (auto* sub : {list, run_cmd, all_cmd}) {
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--config", config, "budget override file")->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Registry& reg = default_registry();
    if (*list) {
      auto items = reg.tagged(list_tag);
      if (as_json) {
        json doc = json::array();
        for (auto* s : items) {
          json d = json::object();
          for (auto& [k, v] : s->defaults) d[k] = v;
          doc.push_back({{"id", s->id}, {"title", s->title}, {"claim", s->claim}, {"tags", s->tags}, {"params", d}});
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        for (auto* s : items) std::cout << s->id << "  " << s->title << "\n";
      }
      return 0;
    }
    Budget budget = Budget::from_environment(config);
    if (*run_cmd) {
      Params params;
      if (p) params["p"] = *p;
      if (q) params["q"] = *q;
      if (dim) params["dim"] = *dim;
      if (seed) params["seed"] = *seed;
      for (auto& kv : extra) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value, got " + kv);
        try {
          params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
          throw UsageError("--param value must be an integer: " + kv);
        }
      }
      auto r = run(reg, id, params, budget);
      emit({r}, as_json, true, out);
      return r.pass || r.skipped ? 0 : 1;
    }
    auto res = run_all(reg, tag, budget);
    emit(res.reports, as_json, false, all_out);
    if (!as_json) {
      int pass = 0, fail = 0, skip = 0;
      for (auto& r : res.reports) (r.skipped ? skip : r.pass ? pass : fail)++;
      std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    }
    return res.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
