#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hecke/io.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

struct CtxHandle {
    ContextPtr ctx;
};

struct FormHandle {
    ProjForm f;
};

struct MatrixHandle {
    ProjMatrix m;
};

std::string classify_name(ElementClass c) {
    switch (c) {
        case ElementClass::identity: return "identity";
        case ElementClass::parabolic: return "parabolic";
        case ElementClass::elliptic: return "elliptic";
        case ElementClass::hyperbolic: return "hyperbolic";
    }
    return {};
}

} // namespace

PYBIND11_MODULE(_heckeforms, m) {
    m.doc() = "Exact reduction theory and membership testing for Hecke triangle groups";

    py::register_exception<ParseError>(m, "GrammarError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainValueError", PyExc_ValueError);
    py::register_exception<DiagnosticError>(m, "InternalDiagnostic", PyExc_RuntimeError);

    py::class_<CtxHandle>(m, "Context")
        .def(py::init([](long q) { return CtxHandle{RingContext::make(q)}; }), py::arg("q"))
        .def_property_readonly("q", [](const CtxHandle& c) { return c.ctx->q(); })
        .def_property_readonly("degree", [](const CtxHandle& c) { return c.ctx->degree(); })
        .def("min_poly",
             [](const CtxHandle& c) {
                 std::vector<std::string> out;
                 for (const auto& z : c.ctx->min_poly()) out.push_back(z.get_str());
                 return out;
             })
        .def("lambda_decimal",
             [](const CtxHandle& c, long bits) { return c.ctx->lambda_decimal(bits); },
             py::arg("bits") = 128)
        .def("form", [](const CtxHandle& c, const std::string& text) {
            return FormHandle{parse_form(c.ctx, text)};
        })
        .def("matrix", [](const CtxHandle& c, const std::string& text) {
            return MatrixHandle{parse_matrix(c.ctx, text)};
        })
        .def("word_multiply",
             [](const CtxHandle& c, const std::vector<std::string>& tokens) {
                 std::vector<WordToken> word;
                 for (const auto& t : tokens) word.push_back(WordToken::parse(t));
                 return MatrixHandle{word_multiply(word, c.ctx)};
             })
        .def("enumerate_reduced",
             [](const CtxHandle& c, const std::string& dmax, int threads) {
                 mpq_class bound;
                 try {
                     bound = mpq_class(dmax);
                     bound.canonicalize();
                 } catch (const std::exception&) {
                     throw ParseError("invalid rational bound '" + dmax + "'");
                 }
                 return json_to_py(to_json(enumerate_reduced(bound, c.ctx, threads)));
             },
             py::arg("dmax"), py::arg("threads") = 1)
        .def("__repr__", [](const CtxHandle& c) {
            return "Context(q=" + std::to_string(c.ctx->q()) + ")";
        });

    py::class_<FormHandle>(m, "Form")
        .def_property_readonly("discriminant",
                               [](const FormHandle& f) { return to_text(f.f.discriminant()); })
        .def("is_reduced", [](const FormHandle& f) { return is_reduced(f.f); })
        .def("validate", [](const FormHandle& f) { return validate_gamma_form(f.f).reason(); })
        .def("matrix", [](const FormHandle& f) { return MatrixHandle{psi2(f.f)}; })
        .def("reduce", [](const FormHandle& f) { return json_to_py(to_json(reduce(f.f))); })
        .def("to_dict", [](const FormHandle& f) { return json_to_py(to_json(f.f)); })
        .def("__str__", [](const FormHandle& f) { return to_text(f.f); })
        .def("__repr__", [](const FormHandle& f) { return "Form('" + to_text(f.f) + "')"; })
        .def("__eq__", [](const FormHandle& a, const FormHandle& b) { return a.f == b.f; });

    py::class_<MatrixHandle>(m, "Matrix")
        .def("classify", [](const MatrixHandle& g) { return classify_name(g.m.classify()); })
        .def("inverse", [](const MatrixHandle& g) { return MatrixHandle{g.m.inverse()}; })
        .def("__mul__", [](const MatrixHandle& a, const MatrixHandle& b) { return MatrixHandle{a.m * b.m}; })
        .def("form", [](const MatrixHandle& g) { return FormHandle{psi2_inv(g.m)}; })
        .def("act", [](const MatrixHandle& g, const FormHandle& f) { return FormHandle{act(g.m, f.f)}; })
        .def("decide", [](const MatrixHandle& g) { return json_to_py(to_json(decide(g.m))); })
        .def("displacement",
             [](const MatrixHandle& g, long bits) {
                 RealEnclosure e = displacement(g.m, bits);
                 py::dict d;
                 d["lo"] = e.lo;
                 d["hi"] = e.hi;
                 d["decimal"] = e.decimal;
                 return d;
             },
             py::arg("bits") = 128)
        .def("to_dict", [](const MatrixHandle& g) { return json_to_py(to_json(g.m)); })
        .def("__str__", [](const MatrixHandle& g) { return to_text(g.m); })
        .def("__repr__", [](const MatrixHandle& g) { return "Matrix('" + to_text(g.m) + "')"; })
        .def("__eq__", [](const MatrixHandle& a, const MatrixHandle& b) { return a.m == b.m; });
}
