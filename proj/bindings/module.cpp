// Python bindings for the counting library.  Exact integers cross the
// boundary as Python ints and exact rationals as fractions.Fraction, so no
// precision is lost on either side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relcount/arith.hpp"
#include "relcount/asymptotics.hpp"
#include "relcount/counting.hpp"
#include "relcount/kernel.hpp"
#include "relcount/oracle.hpp"
#include "relcount/tables.hpp"

namespace py = pybind11;
using namespace relcount;

namespace {

py::object to_pyint(const Nat& value) {
  PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object to_fraction(const Ratio& value) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_pyint(Nat(value.get_num())), to_pyint(Nat(value.get_den())));
}

py::list to_pyints(const std::vector<Nat>& values) {
  py::list out;
  for (const Nat& v : values) out.append(to_pyint(v));
  return out;
}

RelationClass class_arg(const std::string& name) {
  auto c = parse_class(name);
  if (!c) throw py::value_error("unknown relation class: " + name);
  return *c;
}

std::vector<std::string> class_names() {
  std::vector<std::string> names;
  for (RelationClass c : kAllClasses) names.emplace_back(class_name(c));
  return names;
}

py::dict profile_dict(const CountProfile& p) {
  py::dict out;
  out["m"] = p.m;
  out["n"] = p.n;
  out["by_k"] = to_pyints(p.by_k);
  if (p.by_kl.empty()) {
    out["by_kl"] = py::none();
  } else {
    py::list rows;
    for (const auto& row : p.by_kl) rows.append(to_pyints(row));
    out["by_kl"] = rows;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_relcount, m) {
  m.doc() = "Exact counting of relation classes by fixed and reflexive points";

  m.def("relation_classes", &class_names, "Names of the supported relation classes.");

  // combinatorial basics
  m.def("factorial", [](unsigned long n) { return to_pyint(factorial(n)); }, py::arg("n"));
  m.def("subfactorial", [](unsigned long n) { return to_pyint(subfactorial(n)); },
        py::arg("n"));
  m.def("subfactorial_floor",
        [](unsigned long n) { return to_pyint(subfactorial_floor(n)); }, py::arg("n"));
  m.def("binomial",
        [](unsigned long n, unsigned long k) { return to_pyint(binomial(n, k)); },
        py::arg("n"), py::arg("k"));

  // closed-form counts
  m.def("count_with_k",
        [](const std::string& c, std::size_t m_, std::size_t n, std::size_t k) {
          return to_pyint(count_with_k(class_arg(c), m_, n, k));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"), py::arg("k"));
  m.def("count_with_kl",
        [](const std::string& c, std::size_t n, std::size_t k, std::size_t l) {
          return to_pyint(count_with_kl(class_arg(c), n, k, l));
        },
        py::arg("cls"), py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("count_total",
        [](const std::string& c, std::size_t m_, std::size_t n) {
          return to_pyint(count_total(class_arg(c), m_, n));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"));
  m.def("count_without",
        [](const std::string& c, std::size_t m_, std::size_t n) {
          return to_pyint(count_without(class_arg(c), m_, n));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"));
  m.def("count_with_at_least_one",
        [](const std::string& c, std::size_t m_, std::size_t n) {
          return to_pyint(count_with_at_least_one(class_arg(c), m_, n));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"));
  m.def("probability_at_least_one",
        [](const std::string& c, std::size_t m_, std::size_t n) {
          return to_fraction(probability_at_least_one(class_arg(c), m_, n));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"));
  m.def("involution_ratio",
        [](std::size_t n, std::size_t k) { return to_fraction(involution_ratio_E(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("profile",
        [](const std::string& c, std::size_t m_, std::size_t n) {
          return to_pyints(profile_by_k(class_arg(c), m_, n));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"),
        "count_with_k for every k from 0 to m.");

  // brute-force oracle
  m.def("oracle_profile",
        [](const std::string& c, std::size_t m_, std::size_t n, unsigned jobs) {
          return profile_dict(oracle_profile(class_arg(c), m_, n, jobs));
        },
        py::arg("cls"), py::arg("m"), py::arg("n"), py::arg("jobs") = 1);

  // asymptotics
  m.def("limit_constant", [](const std::string& c) {
    LimitConstant l = limit_constant(class_arg(c));
    return py::make_tuple(l.description, l.value);
  }, py::arg("cls"));
  m.def("convergence_table",
        [](const std::string& c, const std::vector<std::size_t>& ns) {
          py::list rows;
          for (const ConvergenceRow& r : convergence_table(class_arg(c), ns))
            rows.append(py::make_tuple(r.n, to_fraction(r.probability), r.delta));
          return rows;
        },
        py::arg("cls"), py::arg("ns"));
  m.def("check_lemma_mw1", &check_lemma_mw1, py::arg("n"));
  m.def("lambert_w0", &lambert_w0, py::arg("x"));
  m.def("h_peak", &h_peak, py::arg("n"));
  m.def("kmax", [](const std::string& c, std::size_t n) { return kmax(class_arg(c), n); },
        py::arg("cls"), py::arg("n"));
  m.def("fit_kmax_line",
        [](const std::string& c, std::size_t lo, std::size_t hi) {
          FitLine line = fit_kmax_line(class_arg(c), lo, hi);
          return py::make_tuple(line.a, line.b);
        },
        py::arg("cls"), py::arg("n_from"), py::arg("n_to"));

  // kernel series
  m.def("s_series",
        [](unsigned long n, unsigned jobs) { return to_fraction(s_series(n, jobs)); },
        py::arg("n"), py::arg("jobs") = 1);
  m.def("s_rounded_micro", &s_rounded_micro, py::arg("n"), py::arg("jobs") = 1,
        "round(S(n) * 10**6), computed exactly.");
  m.def("kernel_probability",
        [](unsigned long n) { return to_fraction(kernel_probability_exact(n)); },
        py::arg("n"));
  m.def("scan_s",
        [](unsigned long n_from, unsigned long n_to, unsigned jobs) {
          ExtremaScan scan = scan_s(n_from, n_to, jobs);
          py::dict out;
          out["values"] = scan.values;
          out["local_minima"] = scan.local_minima;
          out["local_maxima"] = scan.local_maxima;
          return out;
        },
        py::arg("n_from"), py::arg("n_to"), py::arg("jobs") = 1);

  // tables and verification
  m.def("emit_table",
        [](const std::string& figure, const std::string& format,
           const std::optional<std::vector<std::size_t>>& ns, unsigned jobs) {
          auto id = parse_figure(figure);
          if (!id) throw py::value_error("unknown figure: " + figure);
          auto fmt = parse_format(format);
          if (!fmt) throw py::value_error("unknown format: " + format);
          return emit_table(TableSpec{*id, *fmt, ns, jobs});
        },
        py::arg("figure"), py::arg("format") = "plain", py::arg("ns") = py::none(),
        py::arg("jobs") = 1);
  m.def("run_verify",
        [](const std::optional<std::vector<std::string>>& classes, std::size_t max_mn_bits,
           std::uint64_t max_family, std::size_t max_hetero_n, std::size_t perm_max_n,
           std::size_t idem_max_n, unsigned jobs) {
          std::vector<RelationClass> cs;
          if (classes)
            for (const std::string& name : *classes) cs.push_back(class_arg(name));
          else
            cs.assign(kAllClasses.begin(), kAllClasses.end());
          VerifyBudget budget{max_mn_bits, max_family, max_hetero_n, perm_max_n, idem_max_n};
          VerifyReport report = run_verify(cs, budget, jobs);
          return py::make_tuple(report.mismatches, report.summary());
        },
        py::arg("classes") = py::none(), py::arg("max_mn_bits") = 20,
        py::arg("max_family") = 10'000'000, py::arg("max_hetero_n") = 9,
        py::arg("perm_max_n") = 8, py::arg("idem_max_n") = 6, py::arg("jobs") = 1);
}
