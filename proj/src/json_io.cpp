#include "thag/json_io.hpp"

#include <stdexcept>

namespace thag {

namespace {

nlohmann::ordered_json partition_to_json(const Partition& p) {
    auto arr = nlohmann::ordered_json::array();
    for (int i = 0; i < p.length(); ++i) arr.push_back(p.part(i));
    return arr;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(parts);
}

} // namespace

nlohmann::ordered_json graded_to_json(const GradedBiSchur& g) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [t_deg, poly] : g.coefficients()) {
        nlohmann::ordered_json entry;
        entry["t"] = t_deg;
        auto terms = nlohmann::ordered_json::array();
        const auto& m = poly.terms();
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            nlohmann::ordered_json term;
            term["lambda"] = partition_to_json(it->first.x);
            term["mu"] = partition_to_json(it->first.y);
            term["coeff"] = it->second;
            terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        out.push_back(std::move(entry));
    }
    return out;
}

GradedBiSchur graded_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("graded polynomial: expected array");
    GradedBiSchur g;
    for (const auto& entry : j) {
        const int t_deg = entry.at("t").get<int>();
        BiSchurPoly coeff;
        for (const auto& term : entry.at("terms")) {
            coeff.add_term(Bipartition{partition_from_json(term.at("lambda")),
                                       partition_from_json(term.at("mu"))},
                           term.at("coeff").get<long long>());
        }
        g.add_at(t_deg, coeff);
    }
    return g;
}

nlohmann::ordered_json intpoly_to_json(const IntPoly& p) {
    nlohmann::ordered_json out;
    auto coeffs = nlohmann::ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k));
    out["coeffs"] = std::move(coeffs);
    return out;
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
    std::vector<long long> coeffs;
    for (const auto& v : j.at("coeffs")) coeffs.push_back(v.get<long long>());
    return IntPoly(coeffs);
}

nlohmann::ordered_json witness_to_json(const PositivityWitness& w) {
    nlohmann::ordered_json out;
    out["t"] = w.t_degree;
    out["lambda"] = partition_to_json(w.shape.x);
    out["mu"] = partition_to_json(w.shape.y);
    out["coeff"] = w.coeff;
    return out;
}

nlohmann::ordered_json ilc_report_to_json(const IlcReport& r) {
    auto entries = nlohmann::ordered_json::array();
    for (const IlcEntry& e : r.entries) {
        nlohmann::ordered_json row;
        row["n"] = e.n;
        row["i"] = e.i;
        row["j"] = e.j;
        row["variant"] = e.variant == IlcVariant::P ? "p" : "q";
        row["positive"] = e.positive;
        if (e.witness) row["witness"] = witness_to_json(*e.witness);
        if (!e.classification.empty()) row["classification"] = e.classification;
        entries.push_back(std::move(row));
    }
    return entries;
}

nlohmann::ordered_json series_report_to_json(const SeriesReport& r) {
    nlohmann::ordered_json out;
    out["order"] = r.order;
    auto checks = nlohmann::ordered_json::array();
    for (const SeriesCheck& c : r.checks) {
        nlohmann::ordered_json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
    out["all_pass"] = r.all_pass();
    return out;
}

} // namespace thag
