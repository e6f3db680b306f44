// Python view of the C++ core. Combinatorial objects cross the boundary in
// their 1-based text form; polynomials as Poly objects; reports as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "annular/config.hpp"
#include "annular/mc.hpp"
#include "annular/moments.hpp"
#include "annular/noncrossing.hpp"
#include "annular/pperm.hpp"
#include "annular/quotient.hpp"
#include "annular/verify.hpp"

namespace py = pybind11;
using namespace annular;

namespace {

py::object to_py(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

AnnularClass annular_class(const std::string& kind, const std::vector<int>& shape, int k)
{
    if (kind == "nc") {
        if (shape.size() != 1)
            throw std::invalid_argument("nc takes a single part n");
        return AnnularClass::nc(shape[0]);
    }
    if (kind == "nc2")
        return AnnularClass::nc2(Shape(shape));
    if (kind == "snc")
        return AnnularClass::snc(Shape(shape));
    if (kind == "nc2-through") {
        if (shape.size() != 2)
            throw std::invalid_argument("nc2-through needs two circles");
        return AnnularClass::nc2_through(shape[0], shape[1], k);
    }
    throw std::invalid_argument("unknown class '" + kind + "' (nc, nc2, snc, nc2-through)");
}

std::map<std::string, Rational> rational_values(const std::map<std::string, std::string>& v)
{
    std::map<std::string, Rational> out;
    for (auto& [k, s] : v)
        out[k] = parse_rational(s);
    return out;
}

Poly alpha_route(const std::vector<int>& shape, const std::string& route)
{
    if (shape.empty() || shape.size() > 3)
        throw std::invalid_argument("alpha is implemented for 1, 2 or 3 circles");
    if (route == "psnc")
        return alpha_from_cumulants(shape, wigner_cumulants());
    if (route == "closed")
        return theory_alpha(shape);
    if (route == "graphsum") {
        if (shape.size() != 3)
            throw std::invalid_argument("the graph-sum route is third order only");
        return alpha_third_graphsum(shape[0], shape[1], shape[2]);
    }
    throw std::invalid_argument("unknown route '" + route + "' (closed, graphsum, psnc)");
}

} // namespace

PYBIND11_MODULE(_annular, m)
{
    m.doc() = "annular non-crossing combinatorics and third-order Wigner moments";

    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

    m.def("set_threads", &set_worker_threads, py::arg("n"));
    m.def("set_max_m", &set_enumeration_bound, py::arg("m"));
    m.def("max_m", &enumeration_bound);

    py::class_<Poly>(m, "Poly")
        .def(py::init([](long long c) { return Poly(c); }), py::arg("c") = 0)
        .def_static("symbol", &Poly::symbol, py::arg("name"), py::arg("exponent") = 1)
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly(" + p.str() + ")"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("is_zero", &Poly::is_zero)
        .def("to_json", [](const Poly& p) { return to_py(p.to_json()); })
        .def(
            "coeff",
            [](const Poly& p, const std::map<std::string, int>& mono) { return rational_str(p.coeff(mono)); },
            py::arg("monomial"))
        .def(
            "evaluate",
            [](const Poly& p, const std::map<std::string, std::string>& values) {
                return rational_str(p.evaluate(rational_values(values)));
            },
            py::arg("values"), "exact value as a 'p/q' string; values map symbols to rational strings")
        .def(
            "evaluate_float",
            [](const Poly& p, const std::map<std::string, double>& values) { return p.evaluate(values); },
            py::arg("values"));

    m.def(
        "enumerate",
        [](const std::string& kind, const std::vector<int>& shape, int k) {
            std::vector<std::string> out;
            for (auto& p : enumerate(annular_class(kind, shape, k)))
                out.push_back(p.str());
            return out;
        },
        py::arg("kind"), py::arg("shape"), py::arg("k") = 0, "canonical listing in cycle notation");
    m.def(
        "count",
        [](const std::string& kind, const std::vector<int>& shape, int k) {
            return count(annular_class(kind, shape, k));
        },
        py::arg("kind"), py::arg("shape"), py::arg("k") = 0);
    m.def(
        "count_closed",
        [](const std::string& kind, const std::vector<int>& shape, int k) {
            return count_closed(annular_class(kind, shape, k));
        },
        py::arg("kind"), py::arg("shape"), py::arg("k") = 0);

    m.def(
        "ps_nc",
        [](const std::vector<int>& shape, const std::string& family) {
            auto items = family.empty() ? enumerate_ps_nc(Shape(shape))
                                        : enumerate_family(Shape(shape), family_from_name(family));
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (auto& it : items)
                out.emplace_back(it.pp.v.str(), it.pp.p.str(), family_name(it.family));
            return out;
        },
        py::arg("shape"), py::arg("family") = "", "(V, pi, family) triples; a family name restricts the listing");
    m.def(
        "family_count",
        [](const std::vector<int>& shape, const std::string& family) {
            return family_count(Shape(shape), family_from_name(family));
        },
        py::arg("shape"), py::arg("family"));

    m.def(
        "classify",
        [](const std::vector<int>& shape, const std::string& pi) {
            Shape s(shape);
            auto part = SetPartition::parse(pi, s.m());
            auto c = classify(s, part);
            py::dict d;
            d["kind"] = kind_name(c.kind);
            d["reason"] = reason_name(c.reason);
            d["q"] = c.q.str();
            d["pibar"] = elementarize(quotient(build(s), part)).pibar().str();
            if (c.is_limit())
                d["weight"] = weight(c);
            return d;
        },
        py::arg("shape"), py::arg("pi"));
    m.def(
        "limit_counts",
        [](const std::vector<int>& shape, bool enumerated) {
            Shape s(shape);
            return to_py((enumerated ? count_limit_graphs_enumerated(s) : count_limit_graphs_closed(s)).to_json());
        },
        py::arg("shape"), py::arg("enumerated") = false);

    m.def("alpha", &alpha_route, py::arg("shape"), py::arg("route") = "closed",
          "Wigner alpha as a polynomial in k4, k6, kdiag4");
    m.def(
        "expand",
        [](const std::vector<int>& shape) { return alpha_from_cumulants(shape, IndexedTable::symbolic("kappa")); },
        py::arg("shape"), "alpha in terms of formal kappa symbols");
    m.def(
        "invert",
        [](const std::vector<int>& shape) { return cumulant_from_moments(shape, IndexedTable::symbolic("alpha")); },
        py::arg("shape"), "kappa in terms of formal alpha symbols");

    m.def(
        "verify",
        [](const std::string& suite, int max_m, int max_closed, int samples, std::uint64_t seed) {
            if (suite == "identities")
                return to_py(verify_identities(max_closed, max_m).to_json());
            if (suite == "parity")
                return to_py(verify_parity(max_m, samples, seed).to_json());
            if (suite == "oracle")
                return to_py(verify_oracle(max_m).to_json());
            throw std::invalid_argument("unknown suite '" + suite + "' (identities, parity, oracle)");
        },
        py::arg("suite"), py::arg("max_m") = 10, py::arg("max_closed") = 18, py::arg("samples") = 1000,
        py::arg("seed") = 1);

    m.def(
        "simulate",
        [](const std::vector<int>& shape, const std::string& model, const std::string& diag, const std::string& spread,
           int n, std::int64_t samples, std::uint64_t seed, int batches) {
            auto em = EntryModel::parse(model, diag, spread);
            MCOptions o;
            o.n = n;
            o.samples = samples;
            o.seed = seed;
            o.batches = batches;
            MCEstimate e;
            {
                py::gil_scoped_release release;
                e = estimate_alpha(em, shape, o);
            }
            auto j = e.to_json();
            double theory = theory_value(em, shape);
            j["model"] = em.to_json();
            j["theory"] = theory;
            j["z_score"] = (e.estimate - theory) / e.se;
            return to_py(j);
        },
        py::arg("shape"), py::arg("model") = "gaussian", py::arg("diag") = "gaussian", py::arg("spread") = "0",
        py::arg("N") = 100, py::arg("samples") = 1000, py::arg("seed") = 1, py::arg("batches") = 50);
}
