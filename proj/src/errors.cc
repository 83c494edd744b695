/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/errors.hh>

#include <utility>

using std::move;
using std::string;
using std::vector;

namespace
{
    auto join(const vector<string> & items) -> string
    {
        string result;
        for (auto & s : items) {
            if (! result.empty())
                result += ' ';
            result += s;
        }
        return result;
    }
}

namespace containment
{
    CycleDetected::CycleDetected(vector<string> cycle) :
        Error("relation contains a cycle: " + join(cycle)),
        _cycle(move(cycle))
    {
    }

    NotComparability::NotComparability(OddCycleCertificate certificate) :
        Error("not a comparability graph: odd closed walk without triangular chord: " + join(certificate.walk)),
        _certificate(move(certificate))
    {
    }
}
