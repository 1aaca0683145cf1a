#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffr/charsum.hpp"
#include "ffr/counting.hpp"
#include "ffr/error.hpp"
#include "ffr/factor.hpp"
#include "ffr/harness/run.hpp"
#include "ffr/interval.hpp"
#include "ffr/numtheory.hpp"
#include "ffr/prooflab.hpp"

namespace py = pybind11;
using namespace ffr;

namespace {

// Python ints cannot take u128 directly; go through the decimal string.
py::object py_u128(u128 v) { return py::module_::import("builtins").attr("int")(to_string_u128(v)); }

struct PyField {
    FieldPtr f;
};

PyField field_of(u64 p, const std::string& psi, const std::string& phi) {
    FieldPtr base = Field::prime(p);
    if (!phi.empty()) base = Field::extend(base, parse_poly(base, phi));
    if (psi.empty()) return {base};
    return {Field::extend(base, parse_poly(base, psi))};
}

Interval interval_of(const PyField& F, const std::string& gamma, int m, bool punctured) {
    return Interval::make(F.f, F.f->parse(gamma), m, punctured);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact finite-field arithmetic, reciprocal-sum counts and character sums";

    py::register_exception<Error>(m, "FfrError", PyExc_ValueError);

    py::class_<PyField>(m, "Field")
        .def(py::init(&field_of), py::arg("p"), py::arg("psi") = "", py::arg("phi") = "",
             "F_p, optionally F_p[U]/phi, optionally extended by psi (coefficients low to high)")
        .def_property_readonly("cardinality", [](const PyField& F) { return F.f->cardinality(); })
        .def_property_readonly("characteristic", [](const PyField& F) { return F.f->characteristic(); })
        .def_property_readonly("degree", [](const PyField& F) { return F.f->degree(); })
        .def_property_readonly("generator", [](const PyField& F) { return F.f->generator(); })
        .def("__repr__", [](const PyField& F) { return F.f->describe(); })
        .def("parse", [](const PyField& F, const std::string& s) { return F.f->parse(s); })
        .def("format", [](const PyField& F, u64 x) { return F.f->format(x); })
        .def("add", [](const PyField& F, u64 a, u64 b) { return F.f->add(a, b); })
        .def("sub", [](const PyField& F, u64 a, u64 b) { return F.f->sub(a, b); })
        .def("mul", [](const PyField& F, u64 a, u64 b) { return F.f->mul(a, b); })
        .def("inv", [](const PyField& F, u64 a) { return F.f->inv(a); })
        .def("pow", [](const PyField& F, u64 a, u64 e) { return F.f->pow(a, e); })
        .def("trace", [](const PyField& F, u64 a) { return F.f->trace(a); });

    m.def("is_irreducible", [](const PyField& F, const std::string& f) { return poly_irreducible_test(parse_poly(F.f, f)); });
    m.def(
        "factor",
        [](const PyField& F, const std::string& f, std::uint64_t seed) {
            std::vector<std::pair<std::string, int>> out;
            for (auto& fac : poly_factor(parse_poly(F.f, f), seed)) out.emplace_back(fac.poly.str(), fac.multiplicity);
            return out;
        },
        py::arg("field"), py::arg("f"), py::arg("seed") = 0);
    m.def("divisor_count", [](const PyField& F, const std::string& f) { return divisor_count(parse_poly(F.f, f)); });
    m.def("auto_irreducible", [](const PyField& F, int n, std::uint64_t seed) { return auto_irreducible(F.f, n, seed).str(); });

    m.def(
        "interval_elements",
        [](const PyField& F, const std::string& gamma, int m_, bool punctured) {
            return interval_of(F, gamma, m_, punctured).elements();
        },
        py::arg("field"), py::arg("gamma"), py::arg("m"), py::arg("punctured") = false);

    m.def(
        "count_nk",
        [](const PyField& F, const std::string& gamma, int m_, int k, int threads) {
            RunOptions o;
            o.threads = threads;
            auto r = count_Nk(interval_of(F, gamma, m_, true), k, o);
            py::dict d;
            d["Nk"] = py_u128(r.Nk);
            d["sumset"] = r.sumset;
            d["cauchy_lhs"] = py_u128(r.cauchy_lhs);
            d["cauchy_rhs"] = py_u128(r.cauchy_rhs);
            d["ratio"] = r.ratio;
            return d;
        },
        py::arg("field"), py::arg("gamma"), py::arg("m"), py::arg("k"), py::arg("threads") = 1);
    m.def("count_nk_oracle", [](const PyField& F, const std::string& gamma, int m_, int k) {
        return py_u128(count_Nk_oracle(interval_of(F, gamma, m_, true), k));
    });
    m.def("count_tr", [](const PyField& F, std::vector<u64> S, std::vector<u64> c, u64 target) {
        return count_Tr(F.f, S, c, target);
    });
    m.def("count_j2s", [](const PyField& F, std::vector<u64> S, int s) { return py_u128(count_J2s(F.f, S, s)); });

    m.def(
        "kloosterman",
        [](const PyField& F, const std::vector<std::pair<std::string, int>>& intervals, u64 beta) {
            std::vector<Interval> ivs;
            for (auto& [g, mm] : intervals) ivs.push_back(interval_of(F, g, mm, true));
            auto r = kloosterman_sum(ivs, {}, AdditiveCharacter{F.f, beta});
            py::dict d;
            d["counts"] = r.acc.counts();
            d["magnitude"] = r.magnitude;
            d["trivial_bound"] = py_u128(r.trivial_bound);
            d["value"] = r.value;
            return d;
        },
        py::arg("field"), py::arg("intervals"), py::arg("beta") = 1);
    m.def("multilinear_sum", [](const PyField& F, const std::vector<std::vector<u64>>& sets, u64 beta) {
        return multilinear_sum(sets, AdditiveCharacter{F.f, beta}).counts();
    });

    m.def("resultant", [](const PyField& F, const std::string& f, const std::string& g) {
        return resultant_Z(BivarPoly::parse(F.f, f), BivarPoly::parse(F.f, g)).str();
    });
    m.def("lemma21_check", [](const PyField& F, const std::string& f, const std::string& g, int M, int k) {
        auto c = lemma21_degree_check(BivarPoly::parse(F.f, f), BivarPoly::parse(F.f, g), M, k);
        return py::make_tuple(c.bound, c.actual == kNegInfDegree ? py::object(py::none()) : py::int_(c.actual), c.ok);
    });

    m.def(
        "admissible_k",
        [](u64 n, u64 m_, u64 d, u64 omega) {
            auto r = admissible_k_range(n, m_, d, omega);
            return py::make_tuple(r.feasible, r.k_min, r.k_max);
        },
        py::arg("n"), py::arg("m"), py::arg("d"), py::arg("omega") = 156450);

    m.def(
        "run",
        [](const std::string& command, const std::vector<std::string>& params, std::uint64_t seed, int threads,
           const std::string& emit, bool timing) {
            harness::Options o;
            o.command = command;
            o.params = params;
            o.seed = seed;
            o.threads = threads;
            o.emit = emit;
            o.timing = timing;
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = harness::run(o, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("command"), py::arg("params") = std::vector<std::string>{}, py::arg("seed") = 1, py::arg("threads") = 1,
        py::arg("emit") = "csv", py::arg("timing") = false,
        "Runs a harness command in process; returns (exit_code, stdout, stderr)");
}
