/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/comparability.hh>
#include <containment/dimension.hh>
#include <containment/document.hh>
#include <containment/errors.hh>
#include <containment/order_core.hh>
#include <containment/representation.hh>
#include <containment/verifier.hh>

#include "commands.hh"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

using namespace containment;
using std::pair;
using std::string;
using std::vector;

namespace
{
    using LabelPairs = vector<pair<string, string>>;

    auto label_pairs(const LabelIndex & labels, const vector<pair<std::size_t, std::size_t>> & pairs) -> LabelPairs
    {
        LabelPairs result;
        for (auto & [a, b] : pairs)
            result.emplace_back(labels.name(a), labels.name(b));
        return result;
    }

    auto strict_relations(const Poset & p) -> LabelPairs
    {
        LabelPairs result;
        for (std::size_t x = 0 ; x < p.size() ; ++x)
            for (std::size_t y = 0 ; y < p.size() ; ++y)
                if (p.less(x, y))
                    result.emplace_back(p.label(x), p.label(y));
        return result;
    }

    auto orders(const Realizer & r) -> vector<vector<string>>
    {
        vector<vector<string>> result;
        for (auto & order : r.orders)
            result.push_back(order.labels);
        return result;
    }

    auto reduction_mode(const string & mode) -> ReductionMode
    {
        if (mode == "mult")
            return ReductionMode::multiplication;
        if (mode == "exp")
            return ReductionMode::expansion;
        throw py::value_error("mode must be 'mult' or 'exp'");
    }

    template <typename Rep_>
    auto verify_any(const Document & structure, const Rep_ & rep, const string & semantics) -> Verdict
    {
        if (auto p = std::get_if<Poset>(&structure)) {
            if (semantics != "containment")
                throw py::value_error("posets are verified under containment only");
            return verify_containment_poset(*p, rep);
        }
        auto & g = std::get<Graph>(structure);
        if (semantics == "containment")
            return verify_containment_graph(g, rep);

        SetFamily family;
        if constexpr (std::is_same_v<Rep_, SetFamily>)
            family = rep;
        else if constexpr (std::is_same_v<Rep_, StarSubtreeRep>)
            family = rep.as_family();
        else
            throw py::value_error("only set families and star representations support " + semantics);

        if (semantics == "intersection")
            return verify_intersection(g, family);
        if (semantics == "overlap")
            return verify_overlap(g, family);
        if (semantics == "disjointedness")
            return verify_disjointedness(g, family);
        throw py::value_error("unknown semantics '" + semantics + "'");
    }
}

PYBIND11_MODULE(_containment, m)
{
    m.doc() = "Comparability graphs, poset dimension and containment representations.";

    auto base = py::register_exception<Error>(m, "ContainmentError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<CycleDetected>(m, "CycleDetected", base.ptr());
    py::register_exception<UnknownVertex>(m, "UnknownVertex", base.ptr());
    py::register_exception<MissingVertex>(m, "MissingVertex", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<DimensionTooHigh>(m, "DimensionTooHigh", base.ptr());
    py::register_exception<NotComparability>(m, "NotComparability", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([] (vector<string> labels, const LabelPairs & edges) {
                    return Graph::from_edges(std::move(labels), edges); }),
                py::arg("labels"), py::arg("edges") = LabelPairs{})
        .def_property_readonly("labels", [] (const Graph & g) { return g.labels().names(); })
        .def_property_readonly("edges", [] (const Graph & g) { return label_pairs(g.labels(), g.edges()); })
        .def("adjacent", py::overload_cast<const string &, const string &>(&Graph::adjacent, py::const_))
        .def("__len__", &Graph::size)
        .def("__eq__", [] (const Graph & a, const Graph & b) { return a == b; })
        .def("__str__", [] (const Graph & g) { return print_document(g); });

    py::class_<Poset>(m, "Poset")
        .def(py::init([] (vector<string> labels, const LabelPairs & less_than) {
                    return Poset::from_relations(std::move(labels), less_than); }),
                py::arg("labels"), py::arg("less_than") = LabelPairs{})
        .def_property_readonly("labels", [] (const Poset & p) { return p.labels().names(); })
        .def_property_readonly("relations", &strict_relations)
        .def_property_readonly("covers", [] (const Poset & p) { return label_pairs(p.labels(), p.covers()); })
        .def("less", py::overload_cast<const string &, const string &>(&Poset::less, py::const_))
        .def("is_chain", &Poset::is_chain)
        .def("__len__", &Poset::size)
        .def("__eq__", [] (const Poset & a, const Poset & b) { return a == b; })
        .def("__str__", [] (const Poset & p) { return print_document(p); });

    py::class_<SetFamily>(m, "SetFamily")
        .def(py::init<vector<string>, vector<AtomSet>, bool>(),
                py::arg("labels"), py::arg("sets"), py::arg("require_injective") = false)
        .def_property_readonly("labels", [] (const SetFamily & f) { return f.labels().names(); })
        .def_property_readonly("sets", &SetFamily::sets)
        .def_property_readonly("injective", &SetFamily::injective)
        .def("__len__", &SetFamily::size)
        .def("__str__", [] (const SetFamily & f) { return print_document(f); });

    py::class_<IntervalRep>(m, "IntervalRep")
        .def(py::init([] (vector<string> labels, const vector<pair<std::int64_t, std::int64_t>> & intervals) {
                    vector<Interval> converted;
                    for (auto & [l, r] : intervals)
                        converted.push_back(Interval{ l, r });
                    return IntervalRep(std::move(labels), std::move(converted)); }))
        .def_property_readonly("labels", [] (const IntervalRep & r) { return r.labels().names(); })
        .def_property_readonly("intervals", [] (const IntervalRep & r) {
                vector<pair<std::int64_t, std::int64_t>> result;
                for (std::size_t v = 0 ; v < r.size() ; ++v)
                    result.emplace_back(r.interval(v).left, r.interval(v).right);
                return result; })
        .def("__len__", &IntervalRep::size)
        .def("__str__", [] (const IntervalRep & r) { return print_document(r); });

    py::class_<BoxRep>(m, "BoxRep")
        .def_property_readonly("labels", [] (const BoxRep & r) { return r.labels().names(); })
        .def_property_readonly("dimensions", &BoxRep::dimensions)
        .def_property_readonly("boxes", [] (const BoxRep & r) {
                vector<vector<pair<std::int64_t, std::int64_t>>> result;
                for (std::size_t v = 0 ; v < r.size() ; ++v) {
                    auto & box = result.emplace_back();
                    for (auto & side : r.box(v))
                        box.emplace_back(side.left, side.right);
                }
                return result; })
        .def("__len__", &BoxRep::size)
        .def("__str__", [] (const BoxRep & r) { return print_document(r); });

    py::class_<StarSubtreeRep>(m, "StarSubtreeRep")
        .def_property_readonly("labels", [] (const StarSubtreeRep & r) { return r.labels().names(); })
        .def_property_readonly("leaves", [] (const StarSubtreeRep & r) {
                vector<vector<std::size_t>> result;
                for (std::size_t v = 0 ; v < r.size() ; ++v)
                    result.push_back(r.leaves(v));
                return result; })
        .def("as_family", &StarSubtreeRep::as_family)
        .def("__len__", &StarSubtreeRep::size)
        .def("__str__", [] (const StarSubtreeRep & r) { return print_document(r); });

    py::class_<Violation>(m, "Violation")
        .def_readonly("first", &Violation::first)
        .def_readonly("second", &Violation::second)
        .def_readonly("expected", &Violation::expected)
        .def_readonly("observed", &Violation::observed)
        .def("__repr__", [] (const Violation & v) {
                return "Violation(" + v.first + ", " + v.second + ", expected " + v.expected
                    + ", observed " + v.observed + ")"; });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("ok", &Verdict::ok)
        .def_readonly("violations", &Verdict::violations)
        .def("__bool__", [] (const Verdict & v) { return v.ok; });

    m.def("parse", [] (const string & text) -> py::object {
                return std::visit([] (auto && doc) -> py::object {
                        if constexpr (std::is_same_v<std::decay_t<decltype(doc)>, RealizerDocument>)
                            return py::cast(orders(doc.realizer));
                        else
                            return py::cast(doc);
                    }, parse_document(text));
            }, py::arg("text"),
            "Parses a text document. Realizer documents come back as lists of linear orders.");

    m.def("is_comparability", &is_comparability, py::arg("graph"));
    m.def("transitive_orientation", [] (const Graph & g) { return orientation_to_poset(transitive_orient(g)); },
            py::arg("graph"),
            "The poset of a transitive orientation; raises NotComparability otherwise.");
    m.def("odd_cycle_certificate", [] (const Graph & g) { return find_odd_cycle_certificate(g).walk; },
            py::arg("graph"));
    m.def("comparability_graph", &comparability_graph, py::arg("poset"));
    m.def("complement", &complement, py::arg("graph"));

    m.def("dimension", [] (const Poset & p, unsigned budget) {
                auto result = dimension(p, budget);
                return py::make_tuple(result.dimension, orders(result.witness));
            }, py::arg("poset"), py::arg("budget") = unlimited_budget,
            "Returns (dimension, realizer) with each linear order listed bottom first.");
    m.def("is_two_dimensional", &is_two_dimensional, py::arg("poset"));
    m.def("graph_dimension", &graph_dimension, py::arg("graph"), py::arg("budget") = unlimited_budget);
    m.def("box_dimension", &box_dimension, py::arg("graph"), py::arg("budget") = unlimited_budget);
    m.def("hiraguchi_bound", &hiraguchi_bound, py::arg("n"));

    m.def("interval_representation", &interval_representation, py::arg("poset"));
    m.def("box_representation", &box_representation, py::arg("poset"), py::arg("d"));
    m.def("downset_representation", &downset_representation, py::arg("poset"));
    m.def("star_representation", py::overload_cast<const Poset &>(&star_subtree_representation), py::arg("poset"));
    m.def("star_representation", [] (const Graph & g) { return star_subtree_representation(transitive_orient(g)); },
            py::arg("graph"));
    m.def("embedding_order", [] (const BoxRep & boxes) { return embedding_order(boxes_to_embedding(boxes)); },
            py::arg("boxes"));
    m.def("overlap_from_intersection", &overlap_from_intersection, py::arg("family"));
    m.def("derive_containment_order", &derive_containment_order, py::arg("family"));

    m.def("verify", [] (const py::object & structure, const py::object & rep, const string & semantics) {
                Document doc = py::isinstance<Poset>(structure)
                    ? Document{ structure.cast<Poset>() } : Document{ structure.cast<Graph>() };
                if (py::isinstance<SetFamily>(rep))
                    return verify_any(doc, rep.cast<SetFamily>(), semantics);
                if (py::isinstance<IntervalRep>(rep))
                    return verify_any(doc, rep.cast<IntervalRep>(), semantics);
                if (py::isinstance<BoxRep>(rep))
                    return verify_any(doc, rep.cast<BoxRep>(), semantics);
                return verify_any(doc, rep.cast<StarSubtreeRep>(), semantics);
            }, py::arg("structure"), py::arg("representation"), py::arg("semantics") = "containment");
    m.def("duplicates", [] (const SetFamily & f) { return injectivity_audit(f).duplicates; }, py::arg("family"));

    m.def("reduce", &reduce_poset, py::arg("poset"));
    m.def("reduce", [] (const Graph & g, const string & mode) { return reduce_graph(g, reduction_mode(mode)); },
            py::arg("graph"), py::arg("mode") = "mult");
    m.def("multiply", py::overload_cast<const Poset &, const std::map<string, unsigned> &>(&multiply),
            py::arg("poset"), py::arg("counts"));
    m.def("multiply", py::overload_cast<const Graph &, const std::map<string, unsigned> &>(&multiply),
            py::arg("graph"), py::arg("counts"));

    m.def("run", [] (const vector<string> & args) {
                std::ostringstream out, err;
                int code = cli::run(args, out, err);
                return py::make_tuple(code, out.str(), err.str());
            }, py::arg("args"),
            "Runs the command line tool in process and returns (exit code, stdout, stderr).");
}
