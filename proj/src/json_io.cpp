#include "isf/json_io.hpp"

namespace isf {

json to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        if (denominator(c) == 1)
            arr.push_back(numerator(c).str());
        else
            arr.push_back(numerator(c).str() + "/" + denominator(c).str());
    }
    return arr;
}

json to_json(const Partition& lambda) {
    json arr = json::array();
    for (int part : lambda.parts()) arr.push_back(part);
    return arr;
}

json to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [l, c] : f.terms())
        terms.push_back({{"partition", to_json(l)}, {"coeff", to_json(c)}});
    return {{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

json to_json(const MonomialSym& f) {
    json terms = json::array();
    for (const auto& [l, c] : f.terms())
        terms.push_back({{"partition", to_json(l)}, {"coeff", to_json(c)}});
    return {{"degree", f.degree()}, {"basis", "m"}, {"terms", terms}};
}

json to_json(const Decoration& d) {
    json mvals = json::array();
    for (int v : d.m.values()) mvals.push_back(v);
    json svals = json::array();
    for (int s : d.S) svals.push_back(s);
    return {{"m", mvals}, {"S", svals}};
}

json to_json(const XQPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

}  // namespace isf
