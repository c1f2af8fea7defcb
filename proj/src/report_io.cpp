#include "ontic/report_io.hpp"

#include "ontic/model_io.hpp"

namespace ontic {

using nlohmann::json;

namespace {

json multipliers(const TheoremReport& r, const std::vector<Rational>& y) {
    json rows = json::array();
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        rows.push_back({{"index", i}, {"label", r.row_labels.at(i)}, {"tag", r.row_tags.at(i)}, {"multiplier", to_string(y[i])}});
    }
    return rows;
}

}  // namespace

json report_to_json(const TheoremReport& r) {
    json doc;
    doc["theorem"] = r.theorem;
    json params{{"chi", r.chis}, {"relaxed", r.relaxed}};
    if (r.a2) params["a2"] = to_string(*r.a2);
    doc["parameters"] = std::move(params);
    doc["status"] = r.status;
    doc["expected"] = r.expected;
    if (r.max_overlap) doc["max_overlap"] = to_string(*r.max_overlap);

    if (r.certificate) {
        doc["certificate"] = {{"kind", "farkas"},
                              {"rows", multipliers(r, r.certificate->multipliers)},
                              {"bound", to_string(r.certificate->bound)},
                              {"combined_max", [&] {
                                   Rational mx = r.certificate->combined.empty() ? Rational(0) : r.certificate->combined.front();
                                   for (const auto& g : r.certificate->combined) mx = std::max(mx, g);
                                   return to_string(mx);
                               }()},
                              {"verified", true}};
    }
    if (r.dual) {
        doc["dual_certificate"] = {{"rows", multipliers(r, r.dual->multipliers)}, {"bound", to_string(r.dual->bound)}, {"verified", true}};
    }
    if (!r.witness.empty() || r.witness_model) {
        json vars = json::object();
        for (const auto& [name, value] : r.witness) vars[name] = to_string(value);
        json w{{"variables", vars}};
        if (r.witness_reproduces) w["reproduces_fragment"] = *r.witness_reproduces;
        if (r.witness_model) w["model"] = model_to_json(*r.witness_model);
        doc["witness"] = std::move(w);
    }
    if (r.admissible_points) doc["admissible_points"] = r.admissible_points;
    if (!r.oracle_status.empty()) doc["oracle"] = {{"status", r.oracle_status}, {"agrees", r.oracle_agrees}};
    if (!r.zero_conditions.empty()) {
        json zc = json::array();
        for (const auto& z : r.zero_conditions) {
            zc.push_back({{"preparation", z.preparation}, {"outcome", z.outcome}, {"amplitude", z.amplitude}});
        }
        doc["zero_conditions"] = std::move(zc);
    }
    json trace = json::array();
    for (const auto& s : r.trace) trace.push_back({{"tag", s.tag}, {"statement", s.statement}});
    doc["trace"] = std::move(trace);
    doc["notes"] = r.notes;
    return doc;
}

}  // namespace ontic
