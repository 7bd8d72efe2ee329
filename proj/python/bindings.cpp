// Python bindings: scenario registry plus the combinatorial searches.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charp/ralg.hpp"
#include "charp/roots.hpp"
#include "charp/verify.hpp"

namespace py = pybind11;
using namespace charp;

namespace {

Budget budget_for(const std::string& profile) {
  return profile.empty() ? Budget::from_environment() : Budget::profile_named(profile);
}

std::string list_json(const std::string& tag) {
  json doc = json::array();
  for (auto* s : default_registry().tagged(tag)) {
    json d = json::object();
    for (auto& [k, v] : s->defaults) d[k] = v;
    doc.push_back({{"id", s->id}, {"title", s->title}, {"claim", s->claim}, {"tags", s->tags}, {"params", d}});
  }
  return doc.dump();
}

std::string run_json(const std::string& id, const Params& params, const std::string& profile) {
  py::gil_scoped_release release;
  return run(default_registry(), id, params, budget_for(profile)).to_json().dump();
}

std::pair<std::string, int> run_all_json(const std::string& tag, const std::string& profile) {
  py::gil_scoped_release release;
  auto res = run_all(default_registry(), tag, budget_for(profile));
  json doc = json::array();
  for (auto& r : res.reports) doc.push_back(r.to_json());
  return {doc.dump(), res.exit_code};
}

py::dict claim_dict(const ClaimResult& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["solutions"] = r.solutions;
  d["certified"] = r.certified;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_charp, m) {
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
  m.def("version", &version);
  m.def("list_json", &list_json, py::arg("tag") = "");
  m.def("run_json", &run_json, py::arg("id"), py::arg("params") = Params{}, py::arg("profile") = "");
  m.def("run_all_json", &run_all_json, py::arg("tag") = "", py::arg("profile") = "");
  m.def(
      "weights_claim", [](int claim, int p, int r) { return claim_dict(weights_claim(claim, p, r)); },
      py::arg("claim"), py::arg("p"), py::arg("r") = 2);
  m.def(
      "borel_claim", [](int claim, int p) { return claim_dict(borel_claim(claim, p)); }, py::arg("claim"),
      py::arg("p"));
  m.def(
      "quadratic_field",
      [](int p) {
        auto f = find_quadratic_field(p);
        py::dict d;
        d["N"] = f.N;
        d["d"] = f.d;
        d["inert"] = f.nonsplit;
        d["unit_condition"] = f.cond1;
        d["trace_condition"] = f.cond2;
        d["recheck"] = recheck_quadratic_field(f);
        return d;
      },
      py::arg("p"));
}
