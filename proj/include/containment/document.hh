/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_DOCUMENT_HH
#define CONTAINMENT_DOCUMENT_HH

#include <containment/dimension.hh>
#include <containment/graph.hh>
#include <containment/poset.hh>
#include <containment/representation.hh>

#include <string>
#include <variant>
#include <vector>

namespace containment
{
    /// A realizer together with the element declarations it refers to.
    struct RealizerDocument
    {
        std::vector<std::string> labels;
        Realizer realizer;

        auto operator== (const RealizerDocument &) const -> bool = default;
    };

    using Document = std::variant<Graph, Poset, SetFamily, IntervalRep, BoxRep, StarSubtreeRep, RealizerDocument>;

    /// Header keyword for the document's kind: graph, poset, family, intervals, boxes, star or realizer.
    auto kind_name(const Document & doc) -> std::string;

    /**
     * Line-based text format. The first record is a header `<kind> <n>`
     * (`boxes <n> <d>` for boxes), followed by n `v <label>` declarations
     * and kind-specific records:
     *
     *   graph      e <a> <b>
     *   poset      < <a> <b>            closed transitively, cycles rejected
     *   family     s <label> <atom>...
     *   intervals  i <label> <l> <r>
     *   boxes      b <label> <l1> <r1> ... <ld> <rd>
     *   star       t <label> <leaf>...  center 0 implicit
     *   realizer   L <label>...         one line per linear order
     *
     * Blank lines and lines whose first non-blank character is '#' are
     * ignored. Throws ParseError, CycleDetected and InvariantViolation.
     */
    auto parse_document(const std::string & text) -> Document;

    /// Reads and parses a file; a missing file is a ParseError on line 0.
    auto load_document(const std::string & path) -> Document;

    /// Canonical text: declaration order, edges and relations sorted by index,
    /// posets written as their cover relations.
    auto print_document(const Document & doc) -> std::string;
}

#endif
