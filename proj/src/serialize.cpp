#include "qgreedy/serialize.hpp"

#include "qgreedy/errors.hpp"

namespace qgreedy {

namespace {

Integer parse_integer(const Json& j) {
    if (!j.is_string()) throw InvalidArgument("coefficient must be a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw InvalidArgument("malformed coefficient \"" + s + "\"");
    return Integer(s);
}

int parse_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
    return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json to_json(const LaurentV& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e, c.str()}));
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const TorusElement& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e.i, e.j, to_json(c)}));
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const PointedElement& x) {
    Json grid = Json::array();
    for (const auto& [pt, c] : x.grid()) grid.push_back(Json::array({pt.p, pt.q, to_json(c)}));
    return Json{{"b", x.b()}, {"c", x.c()}, {"a", Json::array({x.a1(), x.a2()})}, {"grid", std::move(grid)}};
}

Json to_json(const BasisExpansion& e) {
    Json coeffs = Json::array();
    for (const auto& [idx, c] : e.coeffs) coeffs.push_back(Json::array({idx.a1, idx.a2, to_json(c)}));
    return Json{{"target", to_string(e.target)},
                {"pointing", Json::array({e.pointing.a1, e.pointing.a2})},
                {"coeffs", std::move(coeffs)}};
}

LaurentV laurent_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw InvalidArgument("\"terms\" must be an array");
    std::vector<LaurentV::Term> out;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2) throw InvalidArgument("Laurent term must be [exponent, coefficient]");
        out.emplace_back(parse_int(t[0], "exponent"), parse_integer(t[1]));
    }
    return LaurentV::from_terms(std::move(out));
}

TorusElement torus_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw InvalidArgument("\"terms\" must be an array");
    std::vector<TorusElement::Term> out;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 3) throw InvalidArgument("torus term must be [i, j, coefficient]");
        out.emplace_back(Exponent{parse_int(t[0], "i"), parse_int(t[1], "j")}, laurent_from_json(t[2]));
    }
    return TorusElement::from_terms(std::move(out));
}

PointedElement pointed_from_json(const Json& j) {
    const Json& a = field(j, "a");
    if (!a.is_array() || a.size() != 2) throw InvalidArgument("\"a\" must be [a1, a2]");
    const Json& grid = field(j, "grid");
    if (!grid.is_array()) throw InvalidArgument("\"grid\" must be an array");
    PointedElement::Grid g;
    for (const Json& t : grid) {
        if (!t.is_array() || t.size() != 3) throw InvalidArgument("grid entry must be [p, q, coefficient]");
        g.emplace(GridPoint{parse_int(t[0], "p"), parse_int(t[1], "q")}, laurent_from_json(t[2]));
    }
    return PointedElement(parse_int(field(j, "b"), "b"), parse_int(field(j, "c"), "c"), parse_int(a[0], "a1"),
                          parse_int(a[1], "a2"), std::move(g));
}

BasisExpansion basis_expansion_from_json(const Json& j) {
    BasisExpansion out;
    const Json& target = field(j, "target");
    if (target == "standard")
        out.target = BasisTag::Standard;
    else if (target == "greedy")
        out.target = BasisTag::Greedy;
    else
        throw InvalidArgument("\"target\" must be \"standard\" or \"greedy\"");
    const Json& pointing = field(j, "pointing");
    if (!pointing.is_array() || pointing.size() != 2) throw InvalidArgument("\"pointing\" must be [a1, a2]");
    out.pointing = {parse_int(pointing[0], "a1"), parse_int(pointing[1], "a2")};
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw InvalidArgument("\"coeffs\" must be an array");
    for (const Json& t : coeffs) {
        if (!t.is_array() || t.size() != 3) throw InvalidArgument("coefficient entry must be [a1, a2, coefficient]");
        out.coeffs.insert_or_assign(IndexVector{parse_int(t[0], "a1"), parse_int(t[1], "a2")}, laurent_from_json(t[2]));
    }
    return out;
}

} // namespace qgreedy
