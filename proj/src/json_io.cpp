#include "qkp/json_io.hpp"

#include "qkp/textio.hpp"

namespace qkp {

Json to_json(const PhaseSymbol& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back(Json{{"x", k.first}, {"p", k.second}, {"c", c.str()}});
    return Json{{"terms", std::move(terms)}};
}

PhaseSymbol phase_symbol_from_json(const Json& j) {
    PhaseSymbol out;
    for (const auto& t : j.at("terms"))
        out.add(t.at("x").get<long>(), t.at("p").get<long>(),
                Rational::parse(t.at("c").get<std::string>()));
    return out;
}

Json to_json(const TorusElement& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(Json{{"z", k.first}, {"zeta", k.second}, {"c", c.str()}});
    return Json{{"terms", std::move(terms)}};
}

TorusElement torus_element_from_json(const Json& j) {
    TorusElement out;
    for (const auto& t : j.at("terms"))
        out.add(t.at("z").get<long>(), t.at("zeta").get<long>(),
                Rational::parse(t.at("c").get<std::string>()));
    return out;
}

namespace {

template <typename Series, typename CoeffStr>
Json series_to_json(const Series& s, const char* symbol, CoeffStr&& coeff_str) {
    Json coeffs = Json::object();
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it)
        coeffs[std::to_string(it->first)] = coeff_str(it->second);
    return Json{{"symbol", symbol}, {"top", s.top()}, {"depth", s.depth()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

Json to_json(const XSeries& a) {
    Json j = series_to_json(a.s, "xi", [](const XLaurent& c) { return c.str(); });
    j["kappa"] = a.kappa.str();
    return j;
}

XSeries xseries_from_json(const Json& j) {
    if (j.at("symbol").get<std::string>() != "xi")
        throw std::invalid_argument("xseries_from_json: symbol must be 'xi'");
    XSeries out(j.at("top").get<int>(), j.at("depth").get<int>(),
                Rational::parse(j.at("kappa").get<std::string>()));
    for (const auto& [key, val] : j.at("coeffs").items())
        out.s.set(std::stoi(key), parse_xlaurent(val.get<std::string>()));
    return out;
}

Json to_json(const DSeries& a) {
    Json j = series_to_json(a.s, "xi", [](const DPoly& c) { return c.str(); });
    j["kappa"] = a.kappa.str();
    return j;
}

Json to_json(const QOperatorSeries& a) {
    Json j = series_to_json(a.s, "Dq", [](const XLaurent& c) { return c.str(); });
    j["q"] = a.q.value().str();
    return j;
}

QOperatorSeries qseries_from_json(const Json& j) {
    if (j.at("symbol").get<std::string>() != "Dq")
        throw std::invalid_argument("qseries_from_json: symbol must be 'Dq'");
    QOperatorSeries out(j.at("top").get<int>(), j.at("depth").get<int>(),
                        QValue::parse(j.at("q").get<std::string>()));
    for (const auto& [key, val] : j.at("coeffs").items())
        out.s.set(std::stoi(key), parse_xlaurent(val.get<std::string>()));
    return out;
}

Json to_json(const Report& r) {
    Json arr = Json::array();
    for (const auto& e : r.entries)
        arr.push_back(Json{{"index", e.index}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"equal", e.equal}});
    return arr;
}

}  // namespace qkp
