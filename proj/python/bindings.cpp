#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "colorideals/adapters.hpp"
#include "colorideals/certificates.hpp"
#include "colorideals/growth.hpp"
#include "colorideals/selftest.hpp"
#include "colorideals/store.hpp"

namespace py = pybind11;
using namespace colorideals;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ColorPoset poset_arg(const std::string& text) {
  if (text.find('{') != std::string::npos) return parse_poset(text);
  return builtin_poset(text);
}

IdealSpec make_spec(const std::string& poset, const std::vector<std::string>& basis,
                    const std::optional<std::string>& predicate, const std::optional<std::string>& adapter,
                    const std::vector<std::string>& avoid) {
  AdapterPtr a = adapter ? find_adapter(*adapter) : nullptr;
  if (a && basis.empty() && !predicate) {
    std::vector<NativeObject> pats;
    for (const auto& s : avoid) pats.push_back(a->parse(s));
    return IdealSpec::from_adapter(a, pats);
  }
  if (!avoid.empty()) throw std::invalid_argument("avoid needs an adapter without basis or predicate");
  if (!basis.empty() && predicate) throw std::invalid_argument("give either a basis or a predicate");
  ColorPoset p = a ? a->poset() : poset_arg(poset);
  if (predicate) return IdealSpec(p, builtin_predicate(*predicate, p.size()), a);
  std::vector<Coloring> b;
  for (const auto& s : basis) b.push_back(parse_coloring(s, p.size()));
  return IdealSpec(p, b, a);
}

Budget make_budget(int max_n, int workers, std::size_t max_members, double max_time) {
  Budget b;
  b.max_n = max_n;
  b.workers = workers;
  b.max_members = max_members;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(max_time * 1000));
  return b;
}

#define SPEC_ARGS                                                                         \
  py::arg("poset") = "D2", py::arg("basis") = std::vector<std::string>{},                \
  py::arg("predicate") = py::none(), py::arg("adapter") = py::none(),                    \
  py::arg("avoid") = std::vector<std::string>{}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hereditary classes of edge-colored complete graphs";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AuditFailure>(m, "AuditFailure", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<int, int, Color>(), py::arg("n"), py::arg("colors"), py::arg("fill") = 1)
      .def_static("parse", [](const std::string& s, int colors) { return parse_coloring(s, colors); },
                  py::arg("literal"), py::arg("colors"))
      .def_property_readonly("n", &Coloring::n)
      .def_property_readonly("colors", &Coloring::colors)
      .def("at", &Coloring::at)
      .def("set", &Coloring::set)
      .def("literal", [](const Coloring& k) { return format_coloring(k); })
      .def("restrict", [](const Coloring& k, const std::vector<int>& vs) { return restrict(k, vs); })
      .def("reversal", [](const Coloring& k) { return reversal(k); })
      .def("recolor", [](const Coloring& k, Color b) { return recolor(k, b); })
      .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
      .def("__hash__", [](const Coloring& k) { return std::hash<std::string>{}(format_coloring(k)); })
      .def("__repr__", [](const Coloring& k) { return "Coloring('" + format_coloring(k) + "')"; });

  m.def("contains", [](const std::string& poset, const Coloring& a, const Coloring& b) {
    return contains(poset_arg(poset), a, b).has_value();
  }, py::arg("poset"), py::arg("pattern"), py::arg("host"));

  m.def("adapters", [] {
    py::list out;
    for (const auto& a : all_adapters()) {
      py::dict d;
      d["name"] = a->name();
      d["atoms"] = a->atom_count();
      d["two_object_count"] = a->two_object_count();
      d["legend"] = a->legend();
      out.append(d);
    }
    return out;
  });
  m.def("encode", [](const std::string& adapter, const std::string& literal) {
    auto a = find_adapter(adapter);
    return a->encode(a->parse(literal));
  }, py::arg("adapter"), py::arg("literal"));

  m.def("fingerprint", [](const std::string& poset, const std::vector<std::string>& basis,
                          const std::optional<std::string>& predicate, const std::optional<std::string>& adapter,
                          const std::vector<std::string>& avoid) {
    return make_spec(poset, basis, predicate, adapter, avoid).fingerprint();
  }, SPEC_ARGS);

  m.def("count", [](const std::string& poset, const std::vector<std::string>& basis,
                    const std::optional<std::string>& predicate, const std::optional<std::string>& adapter,
                    const std::vector<std::string>& avoid, int max_n, int workers, std::size_t max_members,
                    bool partial) {
    auto spec = make_spec(poset, basis, predicate, adapter, avoid);
    SequenceRecord rec;
    {
      py::gil_scoped_release release;
      rec = count_sequence(spec, max_n, make_budget(max_n, workers, max_members, 0));
    }
    if (!rec.complete && !partial) throw BudgetExceeded(rec.stop_reason);
    return to_py(rec.counts);
  }, SPEC_ARGS, py::arg("max_n") = 8, py::arg("workers") = 0, py::arg("max_members") = 10'000'000,
     py::arg("partial") = false);

  m.def("classify", [](const std::string& poset, const std::vector<std::string>& basis,
                       const std::optional<std::string>& predicate, const std::optional<std::string>& adapter,
                       const std::vector<std::string>& avoid, int max_n, int workers, std::size_t max_members,
                       double max_time) {
    auto spec = make_spec(poset, basis, predicate, adapter, avoid);
    GrowthReport rep;
    {
      py::gil_scoped_release release;
      rep = classify(spec, make_budget(max_n, workers, max_members, max_time));
    }
    return json_to_py(report_to_json(spec, rep));
  }, SPEC_ARGS, py::arg("max_n") = 8, py::arg("workers") = 0, py::arg("max_members") = 10'000'000,
     py::arg("max_time") = 0.0);

  m.def("recheck_report", [](const std::string& text) {
    return recheck_report(report_from_json(nlohmann::json::parse(text)));
  }, py::arg("report_json"));

  m.def("fibonacci", [](int n) { return to_py(fibonacci(n)); });
  m.def("generalized_fibonacci", [](int n, int k) { return to_py(generalized_fibonacci(n, k)); });
  m.def("alpha", &alpha, py::arg("k"), py::arg("tol") = 1e-12);
  m.def("binomial_fit", [](const std::vector<std::string>& counts, int n0) -> py::object {
    std::vector<BigInt> c;
    for (const auto& s : counts) c.emplace_back(s);
    auto fit = binomial_fit(c, n0);
    if (!fit) return py::none();
    return to_py(fit->coefficients);
  }, py::arg("counts"), py::arg("n0") = 0);
  m.def("ramsey_upper_bound", [](int a, int l) { return to_py(ramsey_upper_bound(a, l)); });
  m.def("fib_strings", &fib_strings, py::arg("n"), py::arg("kind"));

  m.def("is_r_rich", [](const Coloring& k, int r) -> py::object {
    auto c = is_r_rich(k, r);
    return c ? json_to_py(rich_to_json(*c)) : py::none();
  });
  m.def("is_r_wealthy", [](const Coloring& k, int r, int type) -> py::object {
    auto c = is_r_wealthy(k, r, type);
    return c ? json_to_py(wealth_to_json(*c)) : py::none();
  });
  m.def("is_r_simple", &is_r_simple);
  m.def("simplicity_level", &simplicity_level);
  m.def("tameness_level", &tameness_level);
  m.def("interval_decomposition", [](const Coloring& k) {
    std::vector<std::pair<int, int>> out;
    for (const auto& iv : interval_decomposition(k)) out.emplace_back(iv.first, iv.last);
    return out;
  });

  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_selftest()) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });
}
