#include "qspinor/json_io.hpp"

#include <limits>

namespace qspinor {

namespace {

using nlohmann::json;

json int_to_json(const Int& c) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (c >= lo && c <= hi) return c.convert_to<long long>();
    return c.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    return Int(j.get<std::string>());
}

json poly_to_json(const QPoly& p) {
    json arr = json::array();
    const auto& dense = p.dense();
    for (std::size_t e = 0; e < dense.size(); ++e)
        if (dense[e] != 0) arr.push_back(json::array({e, int_to_json(dense[e])}));
    return arr;
}

QPoly poly_from_json(const json& j) {
    QPoly p;
    for (const auto& term : j) p.add_term(term.at(0).get<int>(), int_from_json(term.at(1)));
    return p;
}

}  // namespace

nlohmann::json ratq_to_json(const RatQ& a) {
    return {{"shift", a.shift()}, {"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}};
}

RatQ ratq_from_json(const nlohmann::json& j) {
    return RatQ(poly_from_json(j.at("num")), poly_from_json(j.at("den")), j.at("shift").get<int>());
}

nlohmann::json spinor_to_json(const SpinorVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : v.terms()) arr.push_back(nlohmann::json::array({k.a, k.b, k.c, ratq_to_json(c)}));
    return arr;
}

SpinorVector spinor_from_json(const nlohmann::json& j) {
    SpinorVector v;
    for (const auto& term : j)
        v.add_term({term.at(0).get<int>(), term.at(1).get<int>(), term.at(2).get<int>()},
                   ratq_from_json(term.at(3)));
    return v;
}

nlohmann::json element_to_json(const AlgebraElement& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : a.terms()) {
        nlohmann::json mono = {{"m1", m.m1}, {"m2", m.m2}, {"nu", m.nu},
                               {"g1", m.g1}, {"g2", m.g2}, {"w", m.w},
                               {"d1", m.d1}, {"d2", m.d2}, {"nab", m.nab}};
        arr.push_back({{"monomial", mono}, {"coeff", ratq_to_json(c)}});
    }
    return arr;
}

nlohmann::json report_to_json(const Report& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            {{"name", c.name}, {"params", c.params}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"all_pass", rep.all_pass()}, {"checks", checks}};
}

nlohmann::json fischer_to_json(const FischerComponents& fc) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& m : fc.components) comps.push_back(spinor_to_json(m));
    return {{"degree", fc.degree}, {"components", comps}};
}

}  // namespace qspinor
