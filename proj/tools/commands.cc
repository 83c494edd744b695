/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "commands.hh"

#include <containment/comparability.hh>
#include <containment/dimension.hh>
#include <containment/document.hh>
#include <containment/errors.hh>
#include <containment/order_core.hh>
#include <containment/representation.hh>
#include <containment/verifier.hh>

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

using std::map;
using std::ostream;
using std::size_t;
using std::string;
using std::vector;

namespace containment::cli
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        template <typename T_>
        auto expect(Document doc, const string & path) -> T_
        {
            if (auto p = std::get_if<T_>(&doc))
                return std::move(*p);
            throw UsageError("'" + path + "' holds a " + kind_name(doc) + " document, which this command does not accept");
        }

        auto print_certificate(ostream & out, const OddCycleCertificate & cert) -> void
        {
            out << "NOT-COMPARABILITY\n";
            out << 'c';
            for (auto & v : cert.walk)
                out << ' ' << v;
            out << '\n';
        }

        auto print_verdict(ostream & out, const Verdict & verdict) -> void
        {
            if (verdict.ok) {
                out << "OK\n";
                return;
            }
            out << "FAILED\n";
            for (auto & v : verdict.violations)
                out << "violation " << v.first << ' ' << v.second << " expected " << v.expected
                    << " observed " << v.observed << '\n';
        }

        auto recognize(const string & path, ostream & out) -> int
        {
            auto g = expect<Graph>(load_document(path), path);
            try {
                auto o = transitive_orient(g);
                out << "COMPARABILITY\n";
                for (auto & [a, b] : o.arcs())
                    out << "> " << g.label(a) << ' ' << g.label(b) << '\n';
                return exit_ok;
            }
            catch (const NotComparability & e) {
                print_certificate(out, e.certificate());
                return exit_negative;
            }
        }

        struct OrientedInput
        {
            Poset poset;
            std::optional<Graph> graph;
            std::optional<Orientation> orientation;
        };

        // A poset file as is, or a graph file through a transitive orientation.
        auto oriented_input(const string & path, ostream & out) -> std::optional<OrientedInput>
        {
            auto doc = load_document(path);
            if (auto p = std::get_if<Poset>(&doc))
                return OrientedInput{ *p, std::nullopt, std::nullopt };
            auto g = expect<Graph>(std::move(doc), path);
            try {
                auto o = transitive_orient(g);
                return OrientedInput{ orientation_to_poset(o), g, o };
            }
            catch (const NotComparability & e) {
                print_certificate(out, e.certificate());
                return std::nullopt;
            }
        }

        auto dimension_command(const string & path, unsigned budget, ostream & out) -> int
        {
            auto input = oriented_input(path, out);
            if (! input)
                return exit_negative;
            try {
                auto result = dimension(input->poset, budget);
                out << "dimension " << result.dimension << '\n';
                for (auto & order : result.witness.orders) {
                    out << 'L';
                    for (auto & l : order.labels)
                        out << ' ' << l;
                    out << '\n';
                }
                out << "hiraguchi " << hiraguchi_bound(input->poset.size()) << '\n';
                return exit_ok;
            }
            catch (const BudgetExceeded & e) {
                out << "budget exceeded " << e.lower() << " <= dimension <= " << e.upper() << '\n';
                return exit_negative;
            }
        }

        auto represent(const string & path, const string & kind, size_t d, ostream & out, ostream & err) -> int
        {
            auto input = oriented_input(path, out);
            if (! input)
                return exit_negative;
            auto & p = input->poset;

            Document doc;
            Verdict verdict;
            try {
                if (kind == "interval") {
                    auto rep = interval_representation(p);
                    verdict = verify_containment_poset(p, rep);
                    doc = rep;
                }
                else if (kind == "box") {
                    auto rep = box_representation(p, d);
                    verdict = verify_containment_poset(p, rep);
                    doc = rep;
                }
                else if (kind == "star") {
                    if (input->orientation) {
                        auto rep = star_subtree_representation(*input->orientation);
                        verdict = verify_containment_graph(*input->graph, rep);
                        doc = rep;
                    }
                    else {
                        auto rep = star_subtree_representation(p);
                        verdict = verify_containment_poset(p, rep);
                        doc = rep;
                    }
                }
                else {
                    auto rep = downset_representation(p);
                    verdict = verify_containment_poset(p, rep);
                    doc = rep;
                }
            }
            catch (const DimensionTooHigh & e) {
                err << "error: " << e.what() << '\n';
                return exit_negative;
            }

            if (! verdict.ok) {
                err << "error: constructed representation failed verification\n";
                print_verdict(err, verdict);
                return exit_negative;
            }
            out << print_document(doc);
            return exit_ok;
        }

        auto verify_command(const string & structure_path, const string & rep_path, const string & semantics,
                bool injective, ostream & out) -> int
        {
            auto structure = load_document(structure_path);
            auto rep = load_document(rep_path);
            if (auto star = std::get_if<StarSubtreeRep>(&rep))
                rep = star->as_family();

            Verdict verdict;
            if (semantics == "containment") {
                verdict = std::visit([&] (const auto & r) -> Verdict {
                    using R = std::decay_t<decltype(r)>;
                    if constexpr (std::is_same_v<R, SetFamily> || std::is_same_v<R, IntervalRep>
                            || std::is_same_v<R, BoxRep>) {
                        if (auto g = std::get_if<Graph>(&structure))
                            return verify_containment_graph(*g, r);
                        if (auto p = std::get_if<Poset>(&structure))
                            return verify_containment_poset(*p, r);
                        throw UsageError("structure must be a graph or poset document");
                    }
                    else
                        throw UsageError("'" + rep_path + "' is not a representation document");
                }, rep);
            }
            else {
                auto g = expect<Graph>(structure, structure_path);
                auto f = expect<SetFamily>(rep, rep_path);
                if (semantics == "intersection")
                    verdict = verify_intersection(g, f);
                else if (semantics == "overlap")
                    verdict = verify_overlap(g, f);
                else
                    verdict = verify_disjointedness(g, f);
            }

            print_verdict(out, verdict);
            bool injective_ok = true;
            if (injective) {
                auto report = std::visit([&] (const auto & r) -> InjectivityReport {
                    using R = std::decay_t<decltype(r)>;
                    if constexpr (std::is_same_v<R, SetFamily> || std::is_same_v<R, IntervalRep>
                            || std::is_same_v<R, BoxRep>)
                        return injectivity_audit(r);
                    else
                        return InjectivityReport{ };
                }, rep);
                injective_ok = report.injective;
                out << (report.injective ? "injective" : "non-injective") << '\n';
                for (auto & group : report.duplicates) {
                    out << "duplicates";
                    for (auto & l : group)
                        out << ' ' << l;
                    out << '\n';
                }
            }
            return verdict.ok && injective_ok ? exit_ok : exit_negative;
        }

        auto parse_counts(const string & text) -> map<string, unsigned>
        {
            map<string, unsigned> result;
            std::stringstream in(text);
            string item;
            while (std::getline(in, item, ',')) {
                if (item.empty())
                    continue;
                auto eq = item.rfind('=');
                if (eq == string::npos || eq == 0 || eq + 1 == item.size())
                    throw UsageError("counts must look like 'a=2,b=3', found '" + item + "'");
                auto value = item.substr(eq + 1);
                if (value.find_first_not_of("0123456789") != string::npos || value.size() > 9)
                    throw UsageError("count for '" + item.substr(0, eq) + "' is not a non-negative integer");
                result[item.substr(0, eq)] = unsigned(std::stoul(value));
            }
            return result;
        }

        struct TransformOptions
        {
            string overlap, complement, reduce, multiply, mode = "mult", counts;
        };

        auto transform(const TransformOptions & o, ostream & out) -> int
        {
            int chosen = ! o.overlap.empty() + ! o.complement.empty() + ! o.reduce.empty() + ! o.multiply.empty();
            if (chosen != 1)
                throw UsageError("transform needs exactly one of --overlap-from-intersection, --complement, "
                        "--reduce, --multiply");

            if (! o.overlap.empty())
                out << print_document(overlap_from_intersection(expect<SetFamily>(load_document(o.overlap), o.overlap)));
            else if (! o.complement.empty())
                out << print_document(complement(expect<Graph>(load_document(o.complement), o.complement)));
            else if (! o.reduce.empty()) {
                auto doc = load_document(o.reduce);
                if (auto p = std::get_if<Poset>(&doc))
                    out << print_document(reduce_poset(*p));
                else
                    out << print_document(reduce_graph(expect<Graph>(std::move(doc), o.reduce),
                                o.mode == "exp" ? ReductionMode::expansion : ReductionMode::multiplication));
            }
            else {
                auto counts = parse_counts(o.counts);
                auto doc = load_document(o.multiply);
                if (auto p = std::get_if<Poset>(&doc))
                    out << print_document(multiply(*p, counts));
                else
                    out << print_document(multiply(expect<Graph>(std::move(doc), o.multiply), counts));
            }
            return exit_ok;
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Comparability recognition, poset dimension and containment representations" };
        app.require_subcommand(1);

        string file, rep_file, kind = "interval", semantics = "containment";
        unsigned budget = unlimited_budget;
        size_t d = 1;
        bool injective = false;
        TransformOptions t;

        auto recognize_cmd = app.add_subcommand("recognize", "Transitive orientation or odd-cycle certificate");
        recognize_cmd->add_option("graph", file, "Graph file")->required();

        auto dimension_cmd = app.add_subcommand("dimension", "Exact dimension with a minimum realizer");
        dimension_cmd->add_option("file", file, "Poset or graph file")->required();
        dimension_cmd->add_option("--budget", budget, "Largest dimension to search for");

        auto represent_cmd = app.add_subcommand("represent", "Build and self-verify a containment representation");
        represent_cmd->add_option("file", file, "Poset or graph file")->required();
        represent_cmd->add_option("--kind", kind, "Representation kind")
            ->check(CLI::IsMember({ "interval", "box", "star", "downset" }));
        represent_cmd->add_option("--d", d, "Box dimension")->check(CLI::PositiveNumber);

        auto verify_cmd = app.add_subcommand("verify", "Check a representation against a graph or poset");
        verify_cmd->add_option("structure", file, "Graph or poset file")->required();
        verify_cmd->add_option("representation", rep_file, "Representation file")->required();
        verify_cmd->add_option("--semantics", semantics, "Representation semantics")
            ->check(CLI::IsMember({ "containment", "intersection", "overlap", "disjointedness" }));
        verify_cmd->add_flag("--injective", injective, "Also require pairwise distinct sets");

        auto transform_cmd = app.add_subcommand("transform", "Apply a structural transform and print the result");
        transform_cmd->add_option("--overlap-from-intersection", t.overlap, "Family file");
        transform_cmd->add_option("--complement", t.complement, "Graph file");
        transform_cmd->add_option("--reduce", t.reduce, "Poset or graph file");
        transform_cmd->add_option("--mode", t.mode, "Graph reduction mode")->check(CLI::IsMember({ "mult", "exp" }));
        transform_cmd->add_option("--multiply", t.multiply, "Poset or graph file");
        transform_cmd->add_option("--counts", t.counts, "Copies per vertex, as a=2,b=3");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (*recognize_cmd)
                return recognize(file, out);
            if (*dimension_cmd)
                return dimension_command(file, budget, out);
            if (*represent_cmd)
                return represent(file, kind, d, out, err);
            if (*verify_cmd)
                return verify_command(file, rep_file, semantics, injective, out);
            return transform(t, out);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const CycleDetected & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const InvariantViolation & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const UnknownVertex & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const MissingVertex & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const EmptyInput & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const InvalidCount & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return exit_negative;
        }
    }
}
