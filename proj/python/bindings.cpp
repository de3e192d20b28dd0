#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crcodes/atlas.hpp"
#include "crcodes/constructions.hpp"
#include "crcodes/design.hpp"
#include "crcodes/errors.hpp"
#include "crcodes/graph.hpp"
#include "crcodes/io.hpp"
#include "crcodes/lloyd.hpp"
#include "crcodes/spectra.hpp"

namespace py = pybind11;
using namespace crc;

namespace {

py::object loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

py::object to_fraction(const Rational& x) { return py::module_::import("fractions").attr("Fraction")(to_string(x)); }

py::int_ to_int(const BigInt& x) { return py::int_(py::str(to_string(x))); }

Matrix matrix_of(const std::vector<std::vector<int>>& rows, int q) { return matrix_from_rows(gf(q), rows); }

std::vector<Word> words_of(const std::vector<std::vector<int>>& rows, int q) {
    std::vector<Word> out;
    for (const auto& r : rows) {
        Word w;
        for (int v : r) {
            if (v < 0 || v >= q) throw DomainError("symbol out of range for GF(" + std::to_string(q) + ")");
            w.push_back(static_cast<Elem>(v));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<int>> rows_of(const std::vector<Word>& words) {
    std::vector<std::vector<int>> out;
    for (const auto& w : words) out.emplace_back(w.begin(), w.end());
    return out;
}

PackingParameters beta_of(const std::vector<std::string>& xs) {
    PackingParameters b;
    for (const auto& x : xs) b.push_back(parse_rational(x));
    return b;
}

}  // namespace

PYBIND11_MODULE(crcodes, m) {
    m.doc() = "Completely regular codes: exact classification, Lloyd tests and the code atlas";

    py::register_exception<CatalogError>(m, "CatalogError", PyExc_LookupError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

    py::class_<Code>(m, "Code")
        .def_static(
            "from_generator", [](const std::vector<std::vector<int>>& rows, int q) {
                return Code::from_generator(matrix_of(rows, q));
            },
            py::arg("rows"), py::arg("q") = 2)
        .def_static(
            "from_parity_check",
            [](const std::vector<std::vector<int>>& rows, int q, int n) {
                return Code::from_parity_check(matrix_of(rows, q), n);
            },
            py::arg("rows"), py::arg("q") = 2, py::arg("n") = -1)
        .def_static(
            "from_codewords",
            [](const std::vector<std::vector<int>>& words, int q) {
                if (words.empty()) throw DomainError("empty code");
                return Code::from_codewords(gf(q), static_cast<int>(words[0].size()), words_of(words, q));
            },
            py::arg("words"), py::arg("q") = 2)
        .def_static("from_json", &code_from_json)
        .def_static("read", &read_code_file)
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("q", &Code::q)
        .def_property_readonly("is_linear", &Code::is_linear)
        .def_property_readonly("size", [](const Code& c) { return to_int(c.size()); })
        .def_property_readonly("dimension", &Code::dimension)
        .def("minimum_distance", [](const Code& c) { return c.minimum_distance(); })
        .def("covering_radius", [](const Code& c) { return c.covering_radius(); })
        .def("codewords", [](const Code& c) { return rows_of(c.codewords()); })
        .def("contains", [](const Code& c, const std::vector<int>& w) { return c.contains(words_of({w}, c.q())[0]); })
        .def("to_json", [](const Code& c) { return code_to_json(c); })
        .def("write", [](const Code& c, const std::string& path) { write_code_file(path, c); })
        .def("__eq__", [](const Code& a, const Code& b) { return same_code(a, b); })
        .def("__repr__", [](const Code& c) { return "<Code " + c.describe() + ">"; });

    m.def("hamming_code", &hamming_code, py::arg("q"), py::arg("m"));
    m.def("binary_golay", &binary_golay);
    m.def("ternary_golay", &ternary_golay);
    m.def("nordstrom_robinson", &nordstrom_robinson);
    m.def("extend", &extend);
    m.def("puncture", py::overload_cast<const Code&, int>(&puncture));
    m.def("shorten", &shorten);
    m.def("dual", &dual);
    m.def("direct_sum", &direct_sum);

    m.def("classify", [](const Code& c) { return loads(classification_json(classify(c))); });
    m.def("is_completely_regular", [](const Code& c) {
        auto v = is_completely_regular(c);
        return py::make_tuple(v.completely_regular, v.ia ? py::object(py::str(v.ia->to_string())) : py::none());
    });
    m.def("distance_distribution", [](const Code& c) {
        py::list out;
        for (const auto& a : distance_distribution(c)) out.append(to_fraction(a));
        return out;
    });
    m.def("packing_parameters", [](const Code& c) -> py::object {
        auto b = packing_parameters(c);
        if (!b) return py::none();
        py::list out;
        for (const auto& x : *b) out.append(to_fraction(x));
        return out;
    });

    m.def(
        "eigenvalue_test",
        [](const std::string& ia, int n, int q, bool strict) {
            auto r = eigenvalue_membership_test(parse_ia(ia, n, q), strict);
            return py::dict(py::arg("pass") = r.pass, py::arg("found") = r.found, py::arg("needed") = r.needed,
                            py::arg("eigenvalues") = r.eigenvalues);
        },
        py::arg("ia"), py::arg("n"), py::arg("q") = 2, py::arg("strict") = true);
    m.def(
        "lloyd_roots",
        [](int n, int q, const std::vector<std::string>& beta) {
            auto r = lloyd_roots(n, q, beta_of(beta));
            return py::make_tuple(r.pass, r.roots);
        },
        py::arg("n"), py::arg("q"), py::arg("beta"));

    m.def(
        "verify_design",
        [](const Code& c, int w, int t) -> py::object {
            auto d = verify_design(c, w, t);
            if (!d) return py::none();
            return loads(design_json(*d));
        },
        py::arg("code"), py::arg("w"), py::arg("t"));

    m.def("coset_graph_ia", [](const Code& c) -> py::object {
        auto g = coset_graph_ia(build_coset_graph(c));
        if (!g.ia) return py::none();
        return py::str(g.ia->to_string());
    });

    auto sub = m.def_submodule("atlas", "Catalog of completely regular code families");
    sub.def("manifest", [] { return loads(atlas::manifest_json()); });
    sub.def(
        "build",
        [](const std::string& id, const atlas::Params& params) { return atlas::build(id, params).code; },
        py::arg("id"), py::arg("params") = atlas::Params{});
    sub.def(
        "expected_ia", [](const std::string& id, const atlas::Params& params) {
            return atlas::expected_ia(id, params).to_string();
        },
        py::arg("id"), py::arg("params") = atlas::Params{});
    sub.def(
        "regress",
        [](const std::string& id_prefix, unsigned threads) {
            atlas::Filter f;
            f.id_prefix = id_prefix;
            atlas::RegressReport r;
            {
                py::gil_scoped_release nogil;
                r = atlas::regress(atlas::list(f), threads);
            }
            return loads(atlas::report_json(r));
        },
        py::arg("id_prefix") = "", py::arg("threads") = 0);
}
