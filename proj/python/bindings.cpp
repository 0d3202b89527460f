// Python bindings for the core operations. Exact counts cross the
// boundary as Python ints via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simcores/gap_poset.hpp"
#include "simcores/io.hpp"
#include "simcores/lattice_paths.hpp"
#include "simcores/partition.hpp"
#include "simcores/sc_core.hpp"
#include "simcores/theorems.hpp"

namespace py = pybind11;
using namespace simcores;

namespace {

py::int_ to_py(const Count& c) { return py::int_(py::str(to_decimal(c))); }

std::vector<int> parts_of(const Partition& p) { return p.parts(); }

py::dict witness_dict(const ScCoreWitness& w) {
  py::dict d;
  d["md"] = w.md;
  d["partition"] = parts_of(w.partition);
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["claim_id"] = r.claim_id;
  py::dict params;
  for (const auto& [name, value] : r.parameters)
    params[py::str(name)] = value;
  d["parameters"] = params;
  d["left"] = r.left;
  d["right"] = r.right;
  d["passed"] = r.passed;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_simcores, m) {
  m.doc() = "Exact enumeration and counting for simultaneous core "
            "partitions, gap posets and lattice paths";

  // partition operations
  m.def("conjugate", [](const std::vector<int>& parts) {
    return parts_of(conjugate(Partition(parts)));
  });
  m.def("hook_length", [](const std::vector<int>& parts, int i, int j) {
    return hook_length(Partition(parts), i, j);
  });
  m.def("is_t_core", [](const std::vector<int>& parts, int t) {
    return is_t_core(Partition(parts), t);
  });
  m.def("is_simultaneous_core",
        [](const std::vector<int>& parts, const std::vector<int>& ts) {
          return is_simultaneous_core(Partition(parts), ts);
        });
  m.def("is_self_conjugate", [](const std::vector<int>& parts) {
    return is_self_conjugate(Partition(parts));
  });
  m.def("main_diagonal_hooks", [](const std::vector<int>& parts) {
    return main_diagonal_hooks(Partition(parts)).values;
  });
  m.def("sc_partition_from_md", [](const std::vector<int>& md) {
    return parts_of(sc_partition_from_md(md));
  });
  m.def("first_column_hooks", [](const std::vector<int>& parts) {
    return first_column_hooks(Partition(parts)).values;
  });
  m.def("partition_from_first_column_hooks", [](const std::vector<int>& hooks) {
    return parts_of(partition_from_first_column_hooks(hooks));
  });
  m.def("enumerate_self_conjugate", [](long long cap) {
    std::vector<std::vector<int>> out;
    enumerate_self_conjugate(cap, [&](const Partition& p) {
      out.push_back(parts_of(p));
    });
    return out;
  });
  m.def("brute_force_core_count",
        [](const std::vector<int>& ts, long long cap, bool sc_only) {
          return to_py(brute_force_core_count(ts, cap, sc_only));
        });
  m.def("anderson_size_cap",
        [](int s, int t) { return to_py(anderson_size_cap(s, t)); });

  // gap posets
  m.def("is_generated", [](long long n, const std::vector<int>& gens) {
    return is_generated(n, gens);
  });
  m.def("semigroup_gaps", [](const std::vector<int>& gens) {
    return semigroup_gaps(gens);
  });
  m.def("build_poset", [](const std::vector<int>& gens) {
    GapPoset p = build_poset(gens);
    py::dict d;
    d["generators"] = p.generators;
    d["ground"] = p.ground;
    d["cover_edges"] = p.cover_edges;
    return d;
  });
  m.def("lower_ideals", [](const std::vector<int>& gens) {
    std::vector<std::vector<int>> out;
    lower_ideals(build_poset(gens),
                 [&](const std::vector<int>& ideal) { out.push_back(ideal); });
    return out;
  });
  m.def("count_lower_ideals", [](const std::vector<int>& gens) {
    return to_py(count_lower_ideals(build_poset(gens)));
  });
  m.def("cores_from_ideals", [](const std::vector<int>& gens) {
    std::vector<std::vector<int>> out;
    cores_from_ideals(gens,
                      [&](const Partition& p) { out.push_back(parts_of(p)); });
    return out;
  });

  // self-conjugate machinery
  m.def("tilde_ground", [](int s) { return build_tilde_poset(s).ground; });
  m.def("forbidden_pairs", [](int s) { return forbidden_pairs(s); });
  m.def("is_valid_md", [](const std::vector<int>& md, int s) {
    return is_valid_md(md, s);
  });
  m.def("fms_conditions", [](const std::vector<int>& md, int t) {
    return fms_conditions(md, t);
  });
  m.def("enumerate_sc_cores", [](int s) {
    std::vector<py::dict> out;
    enumerate_sc_cores(s, [&](const ScCoreWitness& w) {
      out.push_back(witness_dict(w));
    });
    return out;
  });
  m.def("count_sc_cores", [](int s) { return to_py(count_sc_cores(s)); });
  m.def("phi", [](const std::vector<int>& ideal, int two_s) {
    return phi(ideal, two_s);
  });
  m.def("phi_domain", [](int two_s) {
    std::vector<std::vector<int>> out;
    phi_domain(two_s,
               [&](const std::vector<int>& ideal) { out.push_back(ideal); });
    return out;
  });

  // lattice paths
  m.def("enumerate_motzkin", [](int n) {
    std::vector<std::string> out;
    enumerate_motzkin(n, [&](const MotzkinPath& p) { out.push_back(p.steps); });
    return out;
  });
  m.def("motzkin_number", [](int n) { return to_py(motzkin_number(n)); });
  m.def("is_symmetric_motzkin", [](const std::string& steps) {
    return is_symmetric_motzkin(parse_motzkin(steps));
  });
  m.def("symmetric_motzkin_count",
        [](int n) { return to_py(symmetric_motzkin_count(n)); });
  m.def("symmetric_motzkin_by_recurrence",
        [](int n) { return to_py(symmetric_motzkin_by_recurrence(n)); });
  m.def("enumerate_gen_dyck", [](int s, int k) {
    std::vector<std::string> out;
    enumerate_gen_dyck(
        s, k, [&](const GenDyckPath& p) { out.push_back(to_string(p)); });
    return out;
  });
  m.def("is_symmetric_gen_dyck", [](const std::string& steps, int k) {
    return is_symmetric_gen_dyck(parse_gen_dyck(steps, k));
  });
  m.def("symmetric_gen_dyck_count",
        [](int s, int k) { return to_py(symmetric_gen_dyck_count(s, k)); });

  // verification harness
  m.def("claim_registry", []() { return claim_registry(); });
  m.def("verify_anderson", [](int s, int t) {
    return report_dict(verify_anderson(s, t));
  });
  m.def("verify_fms", [](int s, int t) { return report_dict(verify_fms(s, t)); });
  m.def("verify_al", [](int s, int k) { return report_dict(verify_al(s, k)); });
  m.def("verify_motzkin_cor",
        [](int s) { return report_dict(verify_motzkin_cor(s)); });
  m.def("verify_sc_characterization",
        [](int s) { return report_dict(verify_sc_characterization(s)); });
  m.def("verify_even_odd", [](int s) { return report_dict(verify_even_odd(s)); });
  m.def("verify_phi", [](int two_s) { return report_dict(verify_phi(two_s)); });
  m.def("verify_prop33a",
        [](int s, int k) { return report_dict(verify_prop33a(s, k)); });
  m.def("verify_prop33b", [](int s) { return report_dict(verify_prop33b(s)); });
  m.def("verify_main", [](int s) { return report_dict(verify_main(s)); });
  m.def("test_conjecture",
        [](int s, int k) { return report_dict(test_conjecture(s, k)); });
}
