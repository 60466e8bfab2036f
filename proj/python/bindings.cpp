// Python bindings. Exact integers cross the boundary as Python ints; results
// and reports are returned as plain dicts mirroring the JSON encoding.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bicrit/classic.hpp"
#include "bicrit/exact.hpp"
#include "bicrit/io.hpp"
#include "bicrit/lemma_lab.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/source.hpp"

namespace py = pybind11;
using namespace bicrit;

namespace pybind11::detail {

template <>
struct type_caster<Int> {
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Int::parse(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(Int v, return_value_policy, handle) {
    const std::string text = v.to_string();
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

py::object to_py(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Budget make_budget(std::uint64_t subsets, std::uint64_t perms) {
  Budget b;
  b.max_subsets = subsets;
  b.max_perms = perms;
  return b;
}

}  // namespace

PYBIND11_MODULE(_bicrit, m) {
  m.doc() = "Exact solvers and hardness gadgets for single-machine (Tmax, sum U) scheduling";

  py::register_exception<OverflowError>(m, "IntOverflowError", PyExc_OverflowError);

  py::class_<Instance>(m, "Instance")
      .def_static(
          "from_json", [](const std::string& text) { return io::instance_from_json(io::parse(text)); },
          py::arg("text"))
      .def("to_json", [](const Instance& inst) { return io::to_json(inst).dump(); })
      .def("__len__", &Instance::size)
      .def_property_readonly("total_proc", &Instance::total_proc)
      .def_property_readonly("jobs",
                             [](const Instance& inst) {
                               py::list out;
                               for (const auto& j : inst.jobs) out.append(py::make_tuple(j.id, j.proc, j.due, label(j.tag)));
                               return out;
                             })
      .def_property_readonly("variant", [](const Instance& inst) { return to_py(io::to_json(inst.variant)); });

  m.def(
      "make_instance",
      [](const std::vector<std::pair<Int, Int>>& jobs) { return make_instance(std::span(jobs)); },
      py::arg("jobs"), "Jobs as (p, d) pairs; ids are assigned 0, 1, ...");

  m.def(
      "evaluate",
      [](const Instance& inst, const std::vector<int>& order) {
        return to_py(io::to_json(evaluate(inst, Schedule{order})));
      },
      py::arg("instance"), py::arg("order"));

  m.def("edd", [](const Instance& inst) {
    auto r = edd_schedule(inst);
    return py::make_tuple(r.schedule.order, r.tmax);
  });
  m.def("moore_hodgson", [](const Instance& inst) {
    auto r = moore_hodgson(inst);
    return py::make_tuple(r.schedule.order, r.min_tardy);
  });

  m.def("gen_strong", &gen_strong, py::arg("a"), py::arg("m"), py::arg("strict") = false);
  m.def("gen_weak", &gen_weak, py::arg("a"));
  m.def("gen_lex_gadget", &gen_lex_gadget, py::arg("instance"), py::arg("ell"));
  m.def("gen_apriori_scaled", &gen_apriori_scaled, py::arg("instance"), py::arg("weight"));

  const std::uint64_t ds = Budget{}.max_subsets;
  const std::uint64_t dp = Budget{}.max_perms;

  m.def(
      "solve_constraint",
      [](const Instance& inst, Int ell, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(solve_constraint(inst, ell, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("ell"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp);
  m.def(
      "solve_lex_tmax_then_u",
      [](const Instance& inst, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(solve_lex_tmax_then_u(inst, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp);
  m.def(
      "solve_lex_u_then_tmax",
      [](const Instance& inst, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(solve_lex_u_then_tmax(inst, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp);
  m.def(
      "solve_weighted_sum",
      [](const Instance& inst, Int w1, Int w2, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(solve_weighted_sum(inst, w1, w2, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("w1"), py::arg("w2"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp);
  m.def(
      "decision_constraint",
      [](const Instance& inst, Int ell, Int k, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(decision_constraint(inst, ell, k, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("ell"), py::arg("k"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp);
  m.def(
      "solve",
      [](const Instance& inst, std::uint64_t s, std::uint64_t p) {
        return to_py(io::to_json(solve(inst, inst.variant, make_budget(s, p))));
      },
      py::arg("instance"), py::arg("max_subsets") = ds, py::arg("max_perms") = dp,
      "Solves the variant carried by the instance.");
  m.def(
      "brute_force",
      [](const Instance& inst, const std::string& variant_json, std::uint64_t p) {
        const Variant v = io::variant_from_json(io::parse(variant_json));
        return to_py(io::to_json(brute_force_permutations(inst, v, make_budget(Budget{}.max_subsets, p))));
      },
      py::arg("instance"), py::arg("variant_json"), py::arg("max_perms") = dp);

  m.def("solve_partition", &solve_partition, py::arg("a"));
  m.def("solve_three_partition", &solve_three_partition, py::arg("a"), py::arg("m"));

  m.def("check_strong_identities",
        [](const Instance& inst) { return to_py(io::to_json(check_strong_identities(inst))); });
  m.def(
      "sweep_strong",
      [](const Instance& inst, std::uint64_t s) { return to_py(io::to_json(sweep_strong(inst, make_budget(s, Budget{}.max_perms)))); },
      py::arg("instance"), py::arg("max_subsets") = ds);
  m.def(
      "sweep_weak",
      [](const Instance& inst, std::uint64_t s) { return to_py(io::to_json(sweep_weak(inst, make_budget(s, Budget{}.max_perms)))); },
      py::arg("instance"), py::arg("max_subsets") = ds);
  m.def(
      "lemma_check",
      [](const Instance& inst, int samples, std::uint64_t seed) {
        Rng rng(seed);
        DiscrepancyReport total;
        if (const auto* sm = std::get_if<StrongMeta>(&inst.meta)) {
          for (int i = 0; i < samples; ++i) total.merge(compare_strong(inst, random_strong_candidate(sm->n, sm->m, rng)));
        } else {
          const auto& wm = weak_meta(inst);
          for (int i = 0; i < samples; ++i) total.merge(compare_weak(inst, random_weak_candidate(wm.n, rng)));
        }
        return to_py(io::to_json(total));
      },
      py::arg("instance"), py::arg("samples") = 200, py::arg("seed") = 1);
}
