#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logcy/document.hpp"
#include "logcy/periods.hpp"
#include "logcy/skeleton.hpp"
#include "logcy/sweep.hpp"
#include "logcy/tropical.hpp"

namespace py = pybind11;
using namespace logcy;

namespace {

LooijengaPair pair_from_json(const std::string& text) {
    return build_pair(parse_pair_document(text));
}

py::dict info_dict(const LooijengaPair& p) {
    py::dict d;
    d["n"] = p.rays();
    py::list k;
    for (size_t i = 1; i <= p.rays(); ++i) k.append(p.blowup_count(i));
    d["k"] = k;
    d["Q"] = p.charge();
    d["s"] = p.s_rank();
    d["rank_dperp"] = p.dperp_basis().size();
    d["generic"] = p.generic();
    return d;
}

py::list cycle_list(const TropCycle& c) {
    py::list out;
    for (const auto& [key, val] : c.windings())
        out.append(py::make_tuple(key.first, key.second, val.convert_to<long long>()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_logcy, m) {
    m.doc() = "exact skeleton/period computations for log Calabi-Yau surfaces";

    m.def("parse_scalar", [](const std::string& s) { return parse_scalar(s).str(); },
          "canonical form of a scalar expression");
    m.def("scalar_val", [](const std::string& s) -> py::object {
        Valuation v = parse_scalar(s).val();
        if (v.infinite) return py::none();
        return py::int_(v.value);
    });
    m.def("scalar_arith", [](const std::string& a, const std::string& op, const std::string& b) {
        LaurentScalar x = parse_scalar(a), y = parse_scalar(b);
        if (op == "add") return (x + y).str();
        if (op == "sub") return (x - y).str();
        if (op == "mul") return (x * y).str();
        if (op == "div") return (x / y).str();
        throw FieldError("unknown operation: " + op);
    });
    m.def("scalar_pow", [](const std::string& a, long long k) {
        return parse_scalar(a).pow(k).str();
    });

    m.def("info", [](const std::string& doc) { return info_dict(pair_from_json(doc)); });

    m.def("dperp", [](const std::string& doc) {
        LooijengaPair p = pair_from_json(doc);
        py::list out;
        for (const PicClass& g : p.dperp_basis()) out.append(g.str(p));
        return out;
    });

    m.def("tropicalize", [](const std::string& doc, const std::string& cls) {
        LooijengaPair p = pair_from_json(doc);
        return cycle_list(tropicalize(p, p.parse_class(cls)));
    });

    m.def("detropicalize",
          [](const std::string& doc,
             const std::vector<std::tuple<size_t, size_t, long long>>& windings) {
              LooijengaPair p = pair_from_json(doc);
              TropCycle::Windings w;
              for (const auto& [i, j, c] : windings) w[{i, j}] = Int(c);
              return detropicalize(p, make_cycle(p, w)).str(p);
          });

    m.def("h1", [](const std::string& doc, bool with_torsion) {
        LooijengaPair p = pair_from_json(doc);
        H1Report rep = h1_compute(p, with_torsion);
        py::dict d;
        d["free_rank"] = rep.free_rank;
        d["torsion"] = rep.torsion;
        return d;
    }, py::arg("doc"), py::arg("with_torsion") = false);

    m.def("periods", [](const std::string& doc, const std::string& cls, uint64_t seed) {
        LooijengaPair p = pair_from_json(doc);
        PicClass a = p.parse_class(cls);
        TropCycle c = tropicalize(p, a);
        py::dict d;
        d["algebraic"] = algebraic_period(p, a, seed).str();
        d["nonarch"] = na_period(p, c).str();
        d["cech"] = na_period_cech(p, c).str();
        return d;
    }, py::arg("doc"), py::arg("cls"), py::arg("seed") = 1);

    m.def("compare", [](const std::string& doc, uint64_t seed) {
        LooijengaPair p = pair_from_json(doc);
        CompareReport rep = compare_periods(p, seed);
        py::list entries;
        for (const CompareEntry& e : rep.entries) {
            py::dict d;
            d["class"] = e.class_expr;
            d["cycle"] = e.cycle;
            d["algebraic"] = e.algebraic.str();
            d["nonarch"] = e.nonarch.str();
            d["cech"] = e.cech.str();
            d["pass"] = e.pass;
            entries.append(d);
        }
        py::dict out;
        out["pass"] = rep.pass;
        out["entries"] = entries;
        return out;
    }, py::arg("doc"), py::arg("seed") = 1);

    m.def("int_monodromy", [](const std::string& doc, size_t ray, size_t j, size_t k) {
        LooijengaPair p = pair_from_json(doc);
        Skeleton s(p);
        Mat2 m2 = s.int_monodromy(ray, j, k);
        return py::make_tuple(py::make_tuple(m2.a[0][0], m2.a[0][1]),
                              py::make_tuple(m2.a[1][0], m2.a[1][1]));
    });

    m.def("kaffine_monodromy", [](const std::string& doc, size_t ray, size_t slot) {
        LooijengaPair p = pair_from_json(doc);
        Skeleton s(p);
        AffineTransformK t = s.kaffine_monodromy(ray, slot);
        py::dict d;
        d["matrix"] = py::make_tuple(py::make_tuple(t.mat.a[0][0], t.mat.a[0][1]),
                                     py::make_tuple(t.mat.a[1][0], t.mat.a[1][1]));
        d["translation"] = py::make_tuple(t.trans[0].str(), t.trans[1].str());
        return d;
    });

    m.def("local_fan", [](const std::vector<long long>& b, const std::vector<long long>& mult) {
        std::vector<Int> bi(b.begin(), b.end()), mi(mult.begin(), mult.end());
        return local_fan(bi, mi).str();
    });

    m.def("sweep", [](size_t count, uint64_t seed) {
        SweepSummary sum = run_sweep(count, seed);
        py::dict d;
        d["passed"] = sum.passed;
        d["count"] = sum.trials.size();
        d["all_pass"] = sum.all_pass;
        return d;
    }, py::arg("count") = 10, py::arg("seed") = 1);
}
