#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"
#include "pqblocks/oracle.hpp"
#include "pqblocks/partition.hpp"
#include "pqblocks/records.hpp"
#include "pqblocks/symbol.hpp"
#include "pqblocks/witness_lie.hpp"
#include "pqblocks/witness_sym.hpp"

namespace py = pybind11;
using namespace pqblocks;

namespace {

// Records go through JSON text so Python sees plain dicts and lists.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_int(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

py::object rational(const mpq_class& v) {
    return py::module_::import("fractions").attr("Fraction")(to_int(v.get_num()), to_int(v.get_den()));
}

Partition as_partition(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return Partition::parse(obj.cast<std::string>());
    return Partition(obj.cast<std::vector<int>>());
}

PsiSign as_sign(int sign) {
    require(sign == 1 || sign == -1, "sign must be +1 or -1");
    return sign == 1 ? PsiSign::Plus : PsiSign::Minus;
}

std::vector<int> parts(const Partition& p) { return p.parts(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Witness characters in principal blocks for two primes";
    py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

    m.def("witness_symmetric", [](int n, std::int64_t p, std::int64_t q) {
        return to_py(sym_record(n, p, q, witness_symmetric(n, p, q)));
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("witness_alternating", [](int n, std::int64_t p, std::int64_t q) {
        return to_py(alt_record(n, p, q, witness_alternating(n, p, q)));
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("witness_typeA", [](int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q) {
        auto ctx = TypeAContext::make(n, Q, epsilon, p, q);
        return to_py(typeA_record(ctx, witness_typeA(ctx)));
    }, py::arg("n"), py::arg("Q"), py::arg("epsilon"), py::arg("p"), py::arg("q"));
    m.def("witness_typeBC", [](int n, std::int64_t Q, std::int64_t p, std::int64_t q) {
        auto ctx = TypeBCContext::make(n, Q, p, q);
        return to_py(typeBC_record(ctx, witness_typeBC(ctx)));
    }, py::arg("n"), py::arg("Q"), py::arg("p"), py::arg("q"));

    m.def("degree", [](const py::object& lam) { return to_int(degree(as_partition(lam))); }, py::arg("partition"));
    m.def("e_core", [](const py::object& lam, int e) { return parts(e_core(as_partition(lam), e)); },
          py::arg("partition"), py::arg("e"));
    m.def("partition_label", [](const py::object& lam) { return as_partition(lam).to_string(); },
          py::arg("partition"));
    m.def("symbol_degree", [](std::vector<int> top, std::vector<int> bottom, std::int64_t Q) {
        return rational(q_prime_part(symbol_degree_qprime(Symbol(std::move(top), std::move(bottom)), Q), Q));
    }, py::arg("top"), py::arg("bottom"), py::arg("Q"), "Q'-part of the unipotent degree.");

    m.def("psi_valuation", [](std::int64_t x, std::int64_t f, std::int64_t p, int sign) {
        return psi_valuation(ValuationContext::make(x, p), f, as_sign(sign));
    }, py::arg("x"), py::arg("f"), py::arg("p"), py::arg("sign"));
    m.def("classify_triples", [](int max_n) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (auto [n, p] : classify_triples(max_n)) out.emplace_back(n, p, 2);
        return out;
    }, py::arg("max_n"));

    m.def("intersection_sym", [](int n, std::int64_t p, std::int64_t q) {
        return oracle::intersection_sym(n, p, q).labels;
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("intersection_alt", [](int n, std::int64_t p, std::int64_t q) {
        return oracle::intersection_alt(n, p, q).labels;
    }, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("intersection_typeA", [](int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q) {
        return oracle::intersection_typeA(n, Q, epsilon, p, q).labels;
    }, py::arg("n"), py::arg("Q"), py::arg("epsilon"), py::arg("p"), py::arg("q"));
    m.def("intersection_typeBC", [](int n, std::int64_t Q, std::int64_t p, std::int64_t q) {
        return oracle::intersection_typeBC(n, Q, p, q).labels;
    }, py::arg("n"), py::arg("Q"), py::arg("p"), py::arg("q"));
}
