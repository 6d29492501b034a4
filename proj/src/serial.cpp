#include "icosa/serial.hpp"

namespace icosa {

ordered_json golden_to_json(const GoldenRational& u) {
    return ordered_json{{"a", u.num.a.str()}, {"b", u.num.b.str()}, {"den", u.den.str()}};
}

GoldenRational golden_from_json(const nlohmann::json& j) {
    BigInt a = bigint_from_decimal(j.at("a").get<std::string>());
    BigInt b = bigint_from_decimal(j.at("b").get<std::string>());
    BigInt den = bigint_from_decimal(j.at("den").get<std::string>());
    return {GoldenInt(std::move(a), std::move(b)), std::move(den)};
}

ordered_json bipoly_to_json(const BiPoly& f) {
    ordered_json out = ordered_json::array();
    for (const auto& [k, c] : f.terms())
        out.push_back(ordered_json{{"i", k.first}, {"j", k.second}, {"c", golden_to_json(c)}});
    return out;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    BiPoly f;
    for (const auto& t : j)
        f.add_term(t.at("i").get<long>(), t.at("j").get<long>(), golden_from_json(t.at("c")));
    return f;
}

ordered_json report_to_json(const SimReport& rep) {
    ordered_json dens = ordered_json::object();
    for (int i = 0; i < 9; ++i) dens[a_label(a_set()[i])] = rep.densities[i];
    ordered_json sums = ordered_json::array();
    for (const auto& row : rep.partial_sums)
        sums.push_back(ordered_json{{"f", row.label}, {"ratio", row.ratio}, {"target", row.target}});
    return ordered_json{{"x", rep.x},
                        {"seed", rep.seed},
                        {"pi_x", rep.pi_x},
                        {"densities", dens},
                        {"partial_sums", sums}};
}

}  // namespace icosa
