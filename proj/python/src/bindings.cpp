#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "polyvdw/evaluation.hpp"
#include "polyvdw/partial_semigroup.hpp"
#include "polyvdw/shifts.hpp"
#include "polyvdw/text.hpp"
#include "polyvdw/vdw_search.hpp"

namespace py = pybind11;
using namespace polyvdw;

namespace {

IntPoly parse_one_variable(const std::string& text)
{
    AnyPoly p = parse_polynomial(text);
    if (auto* q = std::get_if<IntPoly>(&p)) {
        return *q;
    }
    throw Error(ErrorKind::MixedVariableStyles, "expected a polynomial in n, got '" + text + "'");
}

MultiIntPoly parse_multi_variable(const std::string& text)
{
    AnyPoly p = parse_polynomial(text);
    if (auto* q = std::get_if<MultiIntPoly>(&p)) {
        return *q;
    }
    throw Error(ErrorKind::MixedVariableStyles, "expected a polynomial in x1, x2, ..., got '" + text + "'");
}

std::vector<IndexSet> to_sets(const std::vector<std::vector<Int>>& sets)
{
    std::vector<IndexSet> out;
    for (const auto& s : sets) {
        out.push_back(IndexSet::make(s));
    }
    return out;
}

std::vector<SequenceSpec> to_sequences(const std::vector<std::string>& fs)
{
    std::vector<SequenceSpec> out;
    for (const auto& f : fs) {
        out.push_back(parse_sequence(f));
    }
    return out;
}

py::object param_to_python(const Witness& w)
{
    return std::visit(
        [](const auto& p) -> py::object {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, Int>) {
                return py::int_(p);
            } else if constexpr (std::is_same_v<P, IpParam>) {
                py::dict d;
                d["set"] = std::vector<Int>(p.set.elements().begin(), p.set.elements().end());
                d["f"] = to_string(p.f);
                d["ip_sum"] = p.ip_sum;
                return d;
            } else {
                py::list sets;
                py::list fs;
                for (const IndexSet& s : p.sets) {
                    sets.append(std::vector<Int>(s.elements().begin(), s.elements().end()));
                }
                for (const SequenceSpec& f : p.fs) {
                    fs.append(to_string(f));
                }
                py::dict d;
                d["sets"] = sets;
                d["fs"] = fs;
                d["ip_sums"] = p.ip_sums;
                return d;
            }
        },
        w.param);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Symbolic polynomial algebra and polynomial van der Waerden search";

    static py::exception<Error> error_type(m, "PolyVdwError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            const py::object cls = error_type;
            py::object inst = cls(e.what());
            inst.attr("kind") = std::string(error_kind_name(e.kind()));
            if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
                inst.attr("position") = s->position();
            }
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    py::class_<IntPoly>(m, "IntPoly")
        .def(py::init<std::vector<Int>>(), py::arg("coeffs"))
        .def_static("parse", &parse_one_variable, py::arg("text"))
        .def_property_readonly("coeffs",
                               [](const IntPoly& p) { return std::vector<Int>(p.coeffs().begin(), p.coeffs().end()); })
        .def_property_readonly("degree", &IntPoly::degree)
        .def("__call__", &IntPoly::operator(), py::arg("n"))
        .def("__add__", [](const IntPoly& p, const IntPoly& q) { return p + q; })
        .def(py::self == py::self)
        .def("__str__", [](const IntPoly& p) { return to_string(p); })
        .def("__repr__", [](const IntPoly& p) { return "IntPoly('" + to_string(p) + "')"; });

    py::class_<MultiIntPoly>(m, "MultiIntPoly")
        .def_static("parse", &parse_multi_variable, py::arg("text"))
        .def_property_readonly("k", &MultiIntPoly::k)
        .def_property_readonly("monomials",
                               [](const MultiIntPoly& p) {
                                   py::dict d;
                                   for (const auto& [exps, c] : p.monomials()) {
                                       d[py::tuple(py::cast(exps))] = c;
                                   }
                                   return d;
                               })
        .def("__call__", [](const MultiIntPoly& p, const std::vector<Int>& xs) { return p(xs); }, py::arg("xs"))
        .def("__add__", [](const MultiIntPoly& p, const MultiIntPoly& q) { return p + q; })
        .def(py::self == py::self)
        .def("__str__", [](const MultiIntPoly& p) { return to_string(p); })
        .def("__repr__", [](const MultiIntPoly& p) { return "MultiIntPoly('" + to_string(p) + "')"; });

    py::class_<SymPoly>(m, "SymPoly")
        .def(py::init([](const std::string& text, std::optional<std::size_t> cap) { return parse_sympoly(text, cap); }),
             py::arg("text"), py::arg("cap") = py::none())
        .def_property_readonly("cap", &SymPoly::cap)
        .def("__len__", &SymPoly::size)
        .def("__add__", [](const SymPoly& x, const SymPoly& y) { return add(x, y); })
        .def(py::self == py::self)
        .def("scale", [](const SymPoly& x, const std::vector<Int>& r) { return scale_poly(r, x); }, py::arg("r"))
        .def("scale_diagonal", [](const SymPoly& x, Int s) { return scale_diagonal(s, x); }, py::arg("s"))
        .def("__str__", [](const SymPoly& x) { return to_string(x); })
        .def("__repr__", [](const SymPoly& x) { return "SymPoly('" + to_string(x) + "')"; });

    py::class_<MultiSymPoly>(m, "MultiSymPoly")
        .def(py::init([](const std::string& text) { return parse_multisympoly(text); }), py::arg("text"))
        .def_property_readonly("k", [](const MultiSymPoly& x) { return x.shape().k; })
        .def_property_readonly("m", [](const MultiSymPoly& x) { return x.shape().m; })
        .def("__len__", &MultiSymPoly::size)
        .def("__add__", [](const MultiSymPoly& x, const MultiSymPoly& y) { return mv_add(x, y); })
        .def(py::self == py::self)
        .def("__str__", [](const MultiSymPoly& x) { return to_string(x); })
        .def("__repr__", [](const MultiSymPoly& x) { return "MultiSymPoly('" + to_string(x) + "')"; });

    py::class_<Coloring>(m, "Coloring")
        .def(py::init([](const std::string& text) { return parse_coloring(text); }), py::arg("text"))
        .def("__call__", &Coloring::color, py::arg("z"))
        .def_property_readonly("color_count", &Coloring::color_count)
        .def("__str__", [](const Coloring& c) { return to_string(c); });

    py::class_<Witness>(m, "Witness")
        .def_readonly("a", &Witness::a)
        .def_readonly("values", &Witness::values)
        .def_readonly("color", &Witness::color)
        .def_property_readonly("param", &param_to_python)
        .def(py::self == py::self)
        .def("__repr__", [](const Witness& w) {
            return "Witness(a=" + std::to_string(w.a) + ", color=" + std::to_string(w.color) + ")";
        });

    m.def("pi", &pi_poly, py::arg("x"));
    m.def("eval_px", &eval_px, py::arg("x"));
    m.def("encode_poly", &encode_poly, py::arg("p"), py::arg("cap"));
    m.def("eval_pmulti", &eval_pmulti, py::arg("x"));
    m.def(
        "encode_multi",
        [](const MultiIntPoly& p, std::optional<std::size_t> forced) {
            MultiEncoding e = encode_multi(p, forced);
            return py::make_tuple(e.eta, e.m);
        },
        py::arg("p"), py::arg("m") = py::none());
    m.def("in_ir", py::overload_cast<const SymPoly&, const SymPoly&>(&in_ir), py::arg("x"), py::arg("eta"));
    m.def("ip_sum", [](const std::string& f, const std::vector<Int>& set) {
        return ip_sum(parse_sequence(f), IndexSet::make(set));
    }, py::arg("f"), py::arg("set"));
    m.def(
        "shift",
        [](const SymPoly& x, const SymPoly& eta, const std::string& f, const std::vector<Int>& set) {
            return shift(x, eta, parse_sequence(f), IndexSet::make(set));
        },
        py::arg("x"), py::arg("eta"), py::arg("f"), py::arg("set"));
    m.def(
        "shift_multi",
        [](const MultiSymPoly& x, const MultiSymPoly& eta, const std::vector<std::string>& fs,
           const std::vector<std::vector<Int>>& sets) { return shift_multi(x, eta, to_sequences(fs), to_sets(sets)); },
        py::arg("x"), py::arg("eta"), py::arg("fs"), py::arg("sets"));

    m.def(
        "find_poly_vdw",
        [](const std::vector<IntPoly>& polys, const Coloring& c, Int a_bound, Int r_bound, bool distinct,
           unsigned threads, bool positive_r) {
            return find_poly_vdw(polys, c, a_bound, r_bound, {distinct, threads}, positive_r).witness;
        },
        py::arg("polys"), py::arg("coloring"), py::arg("a_bound"), py::arg("r_bound"), py::arg("distinct") = true,
        py::arg("threads") = 1, py::arg("positive_r") = false);
    m.def(
        "find_ip_vdw",
        [](const std::vector<IntPoly>& polys, const std::string& f, const Coloring& c, Int a_bound, Int max_index,
           std::size_t max_size, bool distinct, unsigned threads) {
            return find_ip_vdw(polys, parse_sequence(f), c, a_bound, max_index, max_size, {distinct, threads})
                .witness;
        },
        py::arg("polys"), py::arg("f"), py::arg("coloring"), py::arg("a_bound"), py::arg("max_index"),
        py::arg("max_size"), py::arg("distinct") = true, py::arg("threads") = 1);
    m.def(
        "find_multivar_vdw",
        [](const std::vector<MultiIntPoly>& polys, const std::vector<std::string>& fs, const Coloring& c,
           Int a_bound, const std::vector<Int>& max_index, const std::vector<std::size_t>& max_size, bool distinct,
           unsigned threads) {
            return find_multivar_vdw(polys, to_sequences(fs), c, a_bound, max_index, max_size, {distinct, threads})
                .witness;
        },
        py::arg("polys"), py::arg("fs"), py::arg("coloring"), py::arg("a_bound"), py::arg("max_index"),
        py::arg("max_size"), py::arg("distinct") = true, py::arg("threads") = 1);
    m.def(
        "find_ap",
        [](std::size_t length, const Coloring& c, Int lo, Int hi) { return find_ap(length, c, lo, hi).witness; },
        py::arg("length"), py::arg("coloring"), py::arg("lo"), py::arg("hi"));
    m.def("ap_polys", &ap_polys, py::arg("length"));

    m.def(
        "verify_witness",
        [](const Witness& w, const std::vector<IntPoly>& polys, const Coloring& c) {
            return verify_witness(w, polys, c);
        },
        py::arg("witness"), py::arg("polys"), py::arg("coloring"));
    m.def(
        "verify_witness",
        [](const Witness& w, const std::vector<MultiIntPoly>& polys, const Coloring& c) {
            return verify_witness(w, std::span<const MultiIntPoly>(polys), c);
        },
        py::arg("witness"), py::arg("polys"), py::arg("coloring"));
    m.def(
        "verify_symbolic_chain",
        [](const Witness& w, const std::vector<IntPoly>& polys) { return verify_symbolic_chain(w, polys); },
        py::arg("witness"), py::arg("polys"));
    m.def(
        "verify_symbolic_chain",
        [](const Witness& w, const std::vector<MultiIntPoly>& polys) {
            return verify_symbolic_chain(w, std::span<const MultiIntPoly>(polys));
        },
        py::arg("witness"), py::arg("polys"));

    m.def(
        "analyze_truncated_s",
        [](const std::vector<SymPoly>& etas, Int r_bound, const std::vector<SymPoly>& pool) {
            TruncatedS s = build_truncated_s(etas, r_bound, pool);
            const AssocReport assoc = check_partial_associativity(s.table);
            const CommReport comm = check_commutativity(s.table);
            const AdequacyResult adequacy = check_adequate(s.table);
            py::dict d;
            d["elements"] = s.table.labels();
            d["associative"] = assoc.pass;
            d["checked_triples"] = assoc.checked_triples;
            d["censored_triples"] = assoc.censored_triples;
            d["commutative"] = comm.pass;
            d["adequate"] = adequacy.adequate;
            d["adequacy_witness"] =
                adequacy.witness ? py::object(py::str(s.table.label(*adequacy.witness))) : py::object(py::none());
            return d;
        },
        py::arg("etas"), py::arg("r_bound"), py::arg("pool"));
}
