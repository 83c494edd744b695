/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/document.hh>
#include <containment/errors.hh>

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using std::int64_t;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    struct Record
    {
        int line;
        vector<string> tokens;
    };

    auto tokenize(const string & text) -> vector<Record>
    {
        vector<Record> result;
        std::istringstream in(text);
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            std::istringstream words(line);
            Record r{ number, { } };
            string w;
            while (words >> w)
                r.tokens.push_back(w);
            if (r.tokens.empty() || r.tokens.front().front() == '#')
                continue;
            result.push_back(std::move(r));
        }
        return result;
    }

    auto to_integer(const Record & r, const string & token) -> int64_t
    {
        int64_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size())
            throw ParseError(r.line, "expected an integer, found '" + token + "'");
        return value;
    }

    auto to_count(const Record & r, const string & token) -> size_t
    {
        auto value = to_integer(r, token);
        if (value < 0)
            throw ParseError(r.line, "expected a non-negative count, found '" + token + "'");
        return size_t(value);
    }

    class Parser
    {
        public:
            explicit Parser(vector<Record> records) :
                _records(std::move(records))
            {
            }

            auto parse() -> Document
            {
                if (_records.empty())
                    throw ParseError(0, "missing header");
                auto & header = _records.front();
                _kind = header.tokens[0];

                auto expected_width = _kind == "boxes" ? 3u : 2u;
                if (header.tokens.size() != expected_width)
                    throw ParseError(header.line, "header must be '<kind> <n>'" + string(_kind == "boxes" ? " <d>" : ""));
                _n = to_count(header, header.tokens[1]);
                if (_kind == "boxes")
                    _d = to_count(header, header.tokens[2]);

                std::set<string> record_kinds{ "v", record_keyword() };
                for (size_t i = 1 ; i != _records.size() ; ++i) {
                    auto & r = _records[i];
                    if (! record_kinds.contains(r.tokens[0]))
                        throw ParseError(r.line, "unexpected record '" + r.tokens[0] + "' in a " + _kind + " document");
                    if (r.tokens[0] == "v") {
                        if (r.tokens.size() != 2)
                            throw ParseError(r.line, "vertex declaration must be 'v <label>'");
                        if (! _declared.emplace(r.tokens[1], _labels.size()).second)
                            throw ParseError(r.line, "duplicate vertex '" + r.tokens[1] + "'");
                        _labels.push_back(r.tokens[1]);
                    }
                    else
                        _body.push_back(r);
                }
                if (_labels.size() != _n)
                    throw ParseError(header.line, "header declares " + std::to_string(_n) + " vertices but "
                            + std::to_string(_labels.size()) + " were given");

                if (_kind == "graph")
                    return graph();
                if (_kind == "poset")
                    return poset();
                if (_kind == "family")
                    return family();
                if (_kind == "intervals")
                    return intervals();
                if (_kind == "boxes")
                    return boxes();
                if (_kind == "star")
                    return star();
                return realizer();
            }

        private:
            vector<Record> _records, _body;
            string _kind;
            size_t _n = 0, _d = 0;
            vector<string> _labels;
            std::map<string, size_t> _declared;

            auto record_keyword() const -> string
            {
                static const std::map<string, string> keywords{
                    { "graph", "e" }, { "poset", "<" }, { "family", "s" }, { "intervals", "i" },
                    { "boxes", "b" }, { "star", "t" }, { "realizer", "L" } };
                auto k = keywords.find(_kind);
                if (k == keywords.end())
                    throw ParseError(_records.front().line, "unknown document kind '" + _kind + "'");
                return k->second;
            }

            auto vertex(const Record & r, const string & label) const -> size_t
            {
                auto i = _declared.find(label);
                if (i == _declared.end())
                    throw ParseError(r.line, "undeclared vertex '" + label + "'");
                return i->second;
            }

            // One record per vertex, indexed by the vertex named in token 1.
            auto per_vertex(size_t min_width) const -> vector<const Record *>
            {
                vector<const Record *> result(_n, nullptr);
                for (auto & r : _body) {
                    if (r.tokens.size() < min_width)
                        throw ParseError(r.line, "record is too short");
                    auto v = vertex(r, r.tokens[1]);
                    if (result[v])
                        throw ParseError(r.line, "vertex '" + r.tokens[1] + "' is assigned twice");
                    result[v] = &r;
                }
                for (size_t v = 0 ; v != _n ; ++v)
                    if (! result[v])
                        throw ParseError(_records.front().line, "vertex '" + _labels[v] + "' has no "
                                + record_keyword() + " record");
                return result;
            }

            auto graph() const -> Document
            {
                Graph g(_labels);
                for (auto & r : _body) {
                    if (r.tokens.size() != 3)
                        throw ParseError(r.line, "edge must be 'e <a> <b>'");
                    auto a = vertex(r, r.tokens[1]), b = vertex(r, r.tokens[2]);
                    if (a == b)
                        throw ParseError(r.line, "self-loop on '" + r.tokens[1] + "'");
                    g.add_edge(a, b);
                }
                return g;
            }

            auto poset() const -> Document
            {
                vector<Bits> matrix(_n, Bits(_n));
                for (auto & r : _body) {
                    if (r.tokens.size() != 3)
                        throw ParseError(r.line, "relation must be '< <a> <b>'");
                    matrix[vertex(r, r.tokens[1])].set(vertex(r, r.tokens[2]));
                }
                return Poset::from_matrix(_labels, std::move(matrix));
            }

            auto family() const -> Document
            {
                vector<AtomSet> sets;
                for (auto r : per_vertex(2)) {
                    AtomSet s;
                    for (size_t i = 2 ; i != r->tokens.size() ; ++i)
                        s.push_back(to_integer(*r, r->tokens[i]));
                    if (s.empty())
                        throw InvariantViolation("line " + std::to_string(r->line) + ": set for '" + r->tokens[1]
                                + "' is empty");
                    sets.push_back(std::move(s));
                }
                return SetFamily(_labels, std::move(sets));
            }

            auto intervals() const -> Document
            {
                vector<Interval> result;
                for (auto r : per_vertex(4)) {
                    if (r->tokens.size() != 4)
                        throw ParseError(r->line, "interval must be 'i <label> <l> <r>'");
                    result.push_back(Interval{ to_integer(*r, r->tokens[2]), to_integer(*r, r->tokens[3]) });
                }
                return IntervalRep(_labels, std::move(result));
            }

            auto boxes() const -> Document
            {
                vector<vector<Interval>> result;
                for (auto r : per_vertex(2)) {
                    if (r->tokens.size() != 2 + 2 * _d)
                        throw ParseError(r->line, "box must list " + std::to_string(2 * _d) + " endpoints");
                    vector<Interval> box;
                    for (size_t k = 0 ; k != _d ; ++k)
                        box.push_back(Interval{ to_integer(*r, r->tokens[2 + 2 * k]), to_integer(*r, r->tokens[3 + 2 * k]) });
                    result.push_back(std::move(box));
                }
                return BoxRep(_labels, _d, std::move(result));
            }

            auto star() const -> Document
            {
                vector<vector<size_t>> leaves;
                for (auto r : per_vertex(2)) {
                    vector<size_t> l;
                    for (size_t i = 2 ; i != r->tokens.size() ; ++i)
                        l.push_back(to_count(*r, r->tokens[i]));
                    leaves.push_back(std::move(l));
                }
                return StarSubtreeRep(_labels, std::move(leaves));
            }

            auto realizer() const -> Document
            {
                RealizerDocument result{ _labels, { } };
                for (auto & r : _body) {
                    LinearOrder order{ { r.tokens.begin() + 1, r.tokens.end() } };
                    std::set<size_t> seen;
                    for (auto & label : order.labels)
                        seen.insert(vertex(r, label));
                    if (seen.size() != _n || order.labels.size() != _n)
                        throw ParseError(r.line, "linear order must list every vertex exactly once");
                    result.realizer.orders.push_back(std::move(order));
                }
                return result;
            }
    };

    auto declarations(std::ostream & out, const LabelIndex & labels) -> void
    {
        for (auto & l : labels.names())
            out << "v " << l << '\n';
    }
}

namespace containment
{
    auto kind_name(const Document & doc) -> string
    {
        static const char * const names[] = { "graph", "poset", "family", "intervals", "boxes", "star", "realizer" };
        return names[doc.index()];
    }

    auto parse_document(const string & text) -> Document
    {
        return Parser(tokenize(text)).parse();
    }

    auto load_document(const string & path) -> Document
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError(0, "cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_document(buffer.str());
    }

    auto print_document(const Document & doc) -> string
    {
        std::ostringstream out;
        std::visit([&] (const auto & d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, RealizerDocument>) {
                out << "realizer " << d.labels.size() << '\n';
                for (auto & l : d.labels)
                    out << "v " << l << '\n';
                for (auto & order : d.realizer.orders) {
                    out << 'L';
                    for (auto & l : order.labels)
                        out << ' ' << l;
                    out << '\n';
                }
            }
            else if constexpr (std::is_same_v<T, BoxRep>) {
                out << "boxes " << d.size() << ' ' << d.dimensions() << '\n';
                declarations(out, d.labels());
            }
            else {
                out << kind_name(doc) << ' ' << d.size() << '\n';
                declarations(out, d.labels());
            }

            if constexpr (std::is_same_v<T, Graph>) {
                for (auto & [a, b] : d.edges())
                    out << "e " << d.label(a) << ' ' << d.label(b) << '\n';
            }
            else if constexpr (std::is_same_v<T, Poset>) {
                for (auto & [a, b] : d.covers())
                    out << "< " << d.label(a) << ' ' << d.label(b) << '\n';
            }
            else if constexpr (std::is_same_v<T, SetFamily>) {
                for (size_t v = 0 ; v != d.size() ; ++v) {
                    out << "s " << d.label(v);
                    for (auto a : d.set(v))
                        out << ' ' << a;
                    out << '\n';
                }
            }
            else if constexpr (std::is_same_v<T, IntervalRep>) {
                for (size_t v = 0 ; v != d.size() ; ++v)
                    out << "i " << d.label(v) << ' ' << d.interval(v).left << ' ' << d.interval(v).right << '\n';
            }
            else if constexpr (std::is_same_v<T, BoxRep>) {
                for (size_t v = 0 ; v != d.size() ; ++v) {
                    out << "b " << d.label(v);
                    for (auto & i : d.box(v))
                        out << ' ' << i.left << ' ' << i.right;
                    out << '\n';
                }
            }
            else if constexpr (std::is_same_v<T, StarSubtreeRep>) {
                for (size_t v = 0 ; v != d.size() ; ++v) {
                    out << "t " << d.label(v);
                    for (auto l : d.leaves(v))
                        out << ' ' << l;
                    out << '\n';
                }
            }
        }, doc);
        return out.str();
    }
}
