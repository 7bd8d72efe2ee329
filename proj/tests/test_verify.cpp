#include <algorithm>
#include <set>

#include "charp/ralg.hpp"
#include "charp/verify.hpp"
#include "doctest.h"

using namespace charp;

namespace {
json strip_runtime(json j) {
  j.erase("runtime_ms");
  return j;
}

Scenario constant(const std::string& id, bool ok) {
  return {id, id, "constant", {"t"}, {}, nullptr, [ok](const Params&, const Budget&, Outcome& o) {
            o.computed("x", ok);
            o.expect("x", true, Provenance::Trivial);
          }};
}
}  // namespace

TEST_CASE("registry holds the frozen ids and tags") {
  const auto& reg = default_registry();
  std::vector<std::string> ids{"decalage", "sym-cohomology", "four-term-exact", "norm-cokernel-zp2", "cartier",
                               "omega-trunc-vs-symp", "steenrod-p0", "steenrod-p1", "witt-bockstein-agree",
                               "algebra-bockstein", "witt-identity", "ghost-v", "additive-cohomology-dims",
                               "lattice-vanishing", "semidirect-agree", "weights-1", "weights-2", "weights-3",
                               "weights-4", "borel-1", "borel-2", "borel-3", "field-search", "alpha-sl2-f4",
                               "alpha-u2-f2-zero", "alpha-ta-f9", "chi1-iso", "integral-facts-p2",
                               "bock-alpha-nonzero-p2"};
  for (auto& id : ids) CHECK_MESSAGE(reg.find(id) != nullptr, id);
  CHECK(reg.all().size() == ids.size());
  std::set<std::string> comb;
  for (auto* s : reg.tagged("combinatorics")) comb.insert(s->id);
  for (auto id : {"weights-1", "weights-2", "weights-3", "weights-4", "borel-1", "borel-2", "borel-3"})
    CHECK(comb.count(id));
  CHECK(reg.tagged("").size() == ids.size());
  auto all = reg.all();
  CHECK(std::is_sorted(all.begin(), all.end(), [](auto* a, auto* b) { return a->id < b->id; }));
}

TEST_CASE("examples") {
  const auto& reg = default_registry();
  Budget b;
  auto d = run(reg, "decalage", {{"p", 3}, {"dim", 3}}, b);
  CHECK(d.pass);
  CHECK(d.computed["nonzero_degrees"] == json::array({3}));
  CHECK(d.computed["nonzero_dims"] == json::array({1}));
  auto a = run(reg, "alpha-sl2-f4", {}, b);
  CHECK(a.pass);
  CHECK(a.computed["nonzero"] == true);
  CHECK(run(reg, "witt-identity", {{"p", 5}}, b).pass);
  Registry empty;
  auto none = run_all(empty, "", b);
  CHECK(none.reports.empty());
  CHECK(none.exit_code == 0);
}

TEST_CASE("usage errors") {
  const auto& reg = default_registry();
  Budget b;
  CHECK_THROWS_AS(run(reg, "no-such-scenario", {}, b), UsageError);
  CHECK_THROWS_AS(run(reg, "decalage", {{"q", 9}}, b), UsageError);
  CHECK_THROWS_AS(run(reg, "decalage", {{"p", 4}}, b), UsageError);
  CHECK_THROWS_AS(run(reg, "weights-3", {{"p", 3}, {"q", 3}}, b), UsageError);
  CHECK_THROWS_AS(run(reg, "alpha-ta-f9", {{"q", 10}}, b), UsageError);
}

TEST_CASE("budget exceeded is skipped, not passed") {
  const auto& reg = default_registry();
  Budget fast = Budget::profile_named("fast"), full = Budget::profile_named("full");
  auto s = run(reg, "sym-cohomology", {{"p", 5}, {"dim", 2}}, fast);
  CHECK(s.skipped);
  CHECK_FALSE(s.pass);
  auto f = run(reg, "sym-cohomology", {{"p", 5}, {"dim", 2}}, full);
  CHECK_FALSE(f.skipped);
  CHECK(f.pass);
  // a size limit inside the engine is also a skip
  auto big = run(reg, "semidirect-agree", {{"p", 3}, {"q", 9}, {"degree", 2}}, full);
  CHECK(big.skipped);
  CHECK_THROWS_AS(Budget::profile_named("huge"), UsageError);
}

TEST_CASE("config overrides") {
  Budget b;
  b.apply_config("# budgets\n[budget]\nmax_level = 9\nmax_terms=3\n");
  CHECK(b.max_level == 9);
  CHECK(b.max_terms == 3);
  CHECK(b.max_group_order == 200);
  CHECK_THROWS_AS(b.apply_config("max_depth = 2"), UsageError);
  CHECK_THROWS_AS(b.apply_config("max_level = two"), UsageError);
  CHECK_THROWS_AS(b.apply_config("max_level"), UsageError);
  Budget tight;
  tight.apply_config("max_terms = 1");
  CHECK(run(default_registry(), "weights-1", {}, tight).skipped);
}

TEST_CASE("reports follow the schema and are deterministic") {
  const auto& reg = default_registry();
  Budget b;
  for (auto id : {"ghost-v", "omega-trunc-vs-symp", "alpha-sl2-f4", "weights-2"}) {
    auto j = run(reg, id, {}, b).to_json();
    std::set<std::string> keys;
    for (auto& [k, v] : j.items()) keys.insert(k);
    CHECK(keys == std::set<std::string>{"id", "params", "computed", "expected", "pass", "skipped", "runtime_ms",
                                        "version"});
    for (auto& [k, e] : j["expected"].items()) {
      std::string prov = e["provenance"];
      CHECK((prov == "paper" || prov == "trivial" || prov == "derived"));
      CHECK(e.contains("value"));
    }
    for (auto& [k, v] : j["computed"].items()) {
      bool ok = v.is_boolean() || v.is_number_integer();
      if (v.is_array()) {
        ok = true;
        for (auto& x : v) ok &= x.is_number_integer();
      }
      CHECK_MESSAGE(ok, id << "." << k);
    }
    CHECK(strip_runtime(j) == strip_runtime(run(reg, id, {}, b).to_json()));
  }
}

TEST_CASE("run_all exit code") {
  Registry reg;
  reg.add(constant("a", true));
  reg.add(constant("b", false));
  Budget bud;
  auto r = run_all(reg, "t", bud);
  CHECK(r.reports.size() == 2);
  CHECK(r.exit_code == 1);
  CHECK(r.reports[0].id == "a");
  Registry ok;
  ok.add(constant("a", true));
  ok.add({"s", "s", "skips", {"t"}, {}, nullptr,
          [](const Params&, const Budget&, Outcome&) -> void { throw BudgetExceeded("too big"); }});
  auto r2 = run_all(ok, "t", bud);
  CHECK(r2.exit_code == 0);
  CHECK(r2.reports[1].skipped);
  CHECK_THROWS_AS(reg.add(constant("a", true)), Error);
  CHECK(run_all(reg, "missing-tag", bud).reports.empty());
}
