#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittsuper/suites.hpp"

namespace py = pybind11;
using namespace wittsuper;

namespace {

std::string bracket_json(const std::string& x, const std::string& y, int m, int n) {
    Signature sig{m, n};
    VectorField b = bracket_w(field_from_json(Json::parse(x), sig), field_from_json(Json::parse(y), sig));
    return field_to_json(b).dump();
}

std::string mul_json(const std::string& f, const std::string& g, int m, int n) {
    Signature sig{m, n};
    return poly_to_json(mul(poly_from_json(Json::parse(f), sig), poly_from_json(Json::parse(g), sig))).dump();
}

std::string apply_field_json(const std::string& x, const std::string& f, int m, int n) {
    Signature sig{m, n};
    return poly_to_json(apply_field(field_from_json(Json::parse(x), sig), poly_from_json(Json::parse(f), sig)))
        .dump();
}

py::dict shadow_dict(const std::string& support_json) {
    SupportSet s = support_from_json(Json::parse(support_json));
    if (s.components.empty()) throw py::value_error("support has no components");
    ShadowPartition sh = shadow(s, s.components.front().base);
    py::dict out;
    auto conv = [](const std::vector<Root>& v) {
        py::list l;
        for (const Root& r : v) l.append(r);
        return l;
    };
    out["plus"] = conv(sh.plus);
    out["minus"] = conv(sh.minus);
    out["finite"] = conv(sh.finite);
    out["infinite"] = conv(sh.infinite);
    out["gamma_consistent"] = sh.gamma_consistent;
    return out;
}

py::dict classify_dict(const std::string& P, const std::string& M, int m, int n) {
    MainVerdict v = main_theorem_classify(parse_descriptor(P, m, n), parse_mtag(M, Signature{m, n}));
    py::dict out;
    out["case"] = v.case_id;
    out["description"] = v.description;
    out["hc"] = v.hc;
    out["simple"] = v.simplicity.simple;
    out["tag"] = v.simplicity.case_tag;
    return out;
}

py::dict levi_dict(const std::string& support_json, int n) {
    SupportSet s = support_from_json(Json::parse(support_json));
    LeviSpec spec = levi_shape(shadow(s, s.components.front().base), n);
    py::dict out;
    out["q"] = spec.q;
    py::list blocks;
    for (const auto& b : spec.k_blocks) blocks.append(b);
    out["k_blocks"] = blocks;
    return out;
}

py::dict run_suite_dict(const std::string& name, int m, int n, int q, int deg, int jobs) {
    SuiteOptions opt{m, n, q, deg, jobs, 8};
    SuiteResult r = run_suite(name, opt);
    py::dict out;
    out["suite"] = r.name;
    out["pass"] = r.pass();
    py::list items;
    for (const SuiteItem& i : r.items) {
        py::dict d;
        d["label"] = i.label;
        d["pass"] = i.pass;
        d["detail"] = i.detail;
        items.append(d);
    }
    out["items"] = items;
    py::dict metrics;
    for (const auto& [k, v] : r.metrics) metrics[py::str(k)] = v;
    out["metrics"] = metrics;
    return out;
}

}  // namespace

PYBIND11_MODULE(_wittsuper, mod) {
    mod.doc() = "exact symbolic computations for vector-field superalgebras";
    mod.def("tau", [](const OddSet& I, const OddSet& J) { return tau(I, J); },
            "inversion count of the concatenated sorted sequences", py::arg("I"), py::arg("J"));
    mod.def("bracket", &bracket_json, "bracket of two vector fields (JSON term lists)", py::arg("x"), py::arg("y"),
            py::arg("m"), py::arg("n"));
    mod.def("mul", &mul_json, "product in A_{m,n} (JSON term lists)", py::arg("f"), py::arg("g"), py::arg("m"),
            py::arg("n"));
    mod.def("apply_field", &apply_field_json, "apply a vector field to a polynomial", py::arg("x"), py::arg("f"),
            py::arg("m"), py::arg("n"));
    mod.def("shadow", &shadow_dict, "shadow partition of a support set (JSON)", py::arg("support"));
    mod.def("levi", &levi_dict, "Levi shape of a support set (JSON)", py::arg("support"), py::arg("n") = 0);
    mod.def("classify", &classify_dict, "main-theorem classification", py::arg("P"), py::arg("M"), py::arg("m"),
            py::arg("n"));
    mod.def("run_suite", &run_suite_dict, "run a named verification suite", py::arg("name"), py::arg("m") = 2,
            py::arg("n") = 2, py::arg("q") = 1, py::arg("deg") = 3, py::arg("jobs") = 1);
    mod.def("suite_names", &suite_names);
    mod.attr("__version__") = "0.1.0";
}
