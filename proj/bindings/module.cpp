#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "plethysm/hwv.hpp"
#include "plethysm/json_io.hpp"

namespace py = pybind11;
using namespace plethysm;

namespace {

// structured results cross the boundary as plain python objects
py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object big(const BigInt& b) {
  return py::module_::import("builtins").attr("int")(b.str());
}

Partition part(const std::vector<int>& parts) { return Partition(parts); }

Functor functor_of(const std::string& name) {
  return name == "sym" ? Functor::sym : Functor::wedge;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "highest weight vectors and multiplicities for S^d(Wedge^k W)";

  m.def(
      "conjugate",
      [](const std::vector<int>& p) { return part(p).conjugate().parts(); },
      py::arg("lam"));
  m.def(
      "is_even", [](const std::vector<int>& p) { return part(p).is_even(); },
      py::arg("lam"));
  m.def(
      "schur_dim",
      [](const std::vector<int>& p, int n) {
        return big(schur_dimension(part(p), n));
      },
      py::arg("lam"), py::arg("n"));

  m.def(
      "mult",
      [](int k, int d, const std::vector<int>& p) {
        return enumerate_pieri_tableaux(k, d, part(p)).size();
      },
      py::arg("k"), py::arg("d"), py::arg("lam"),
      "number of Pieri tableaux, the multiplicity of lambda* in the tensor "
      "power of wedge powers");
  m.def(
      "pieri_tableaux",
      [](int k, int d, const std::vector<int>& p) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : enumerate_pieri_tableaux(k, d, part(p)))
          out.push_back(t.rows);
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("lam"));
  m.def(
      "hwv_basis",
      [](int k, int d, const std::vector<int>& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : enumerate_pieri_tableaux(k, d, part(p)))
          arr.push_back({{"tableau", to_json(t)}, {"w", to_json(build_wT(t))}});
        return from_json(arr);
      },
      py::arg("k"), py::arg("d"), py::arg("lam"));
  m.def(
      "hwv_dim",
      [](int k, int d, const std::vector<int>& mu, int n) {
        return hwv_space_dim(k, d, part(mu), n);
      },
      py::arg("k"), py::arg("d"), py::arg("mu"), py::arg("n"));

  m.def(
      "weintraub",
      [](const std::vector<int>& p, int k, bool skip_expand) {
        Partition lam = part(p);
        AlgoResult res = run_algorithm(lam, k);
        nlohmann::json doc = {{"lambda", lam.parts()},
                              {"k", k},
                              {"steps", to_json(res.log)},
                              {"tableau", to_json(res.tableau)}};
        if (!skip_expand) {
          TensorVector pv = expand_P(res.tableau);
          doc["highest_weight"] = to_json(verify_highest_weight(pv, lam));
          doc["q"] = to_json(q_coefficient(pv, res.tableau));
        }
        return from_json(doc);
      },
      py::arg("lam"), py::arg("k"), py::arg("skip_expand") = false);

  m.def(
      "decompose",
      [](int k, int d, int n, const std::string& functor, bool force) {
        return from_json(to_json(decompose(k, d, n, functor_of(functor), force)));
      },
      py::arg("k"), py::arg("d"), py::arg("n"), py::arg("functor") = "wedge",
      py::arg("force") = false);
  m.def(
      "decompose_tuple",
      [](int k, int d, int n, const std::string& functor, bool force) {
        return from_json(
            to_json(decompose_tuple_power(k, d, n, functor_of(functor), force)));
      },
      py::arg("k"), py::arg("d"), py::arg("n"), py::arg("functor") = "wedge",
      py::arg("force") = false);
  m.def(
      "duality", [](int k, int d, int n) { return duality_check(k, d, n); },
      py::arg("k"), py::arg("d"), py::arg("n"));

  m.def(
      "s_kd",
      [](const std::vector<int>& p, int k, int d) { return s_kd(part(p), k, d); },
      py::arg("lam"), py::arg("k"), py::arg("d"));
  m.def(
      "stabilization",
      [](const std::vector<int>& p, int d, int kmax) {
        return from_json(to_json(stabilization_check(part(p), d, kmax)));
      },
      py::arg("lam"), py::arg("d"), py::arg("kmax"));
}
