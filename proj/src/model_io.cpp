#include "ontic/model_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ontic/errors.hpp"

namespace ontic {

using nlohmann::json;

json model_to_json(const OntologicalModel& model) {
    json doc;
    if (model.a2) doc["a2"] = to_string(*model.a2);
    const auto& f = model.flags();
    doc["assumptions"] = {{"pip", f.pip}, {"pip_ps", f.pip_ps}, {"psi_anomic", f.psi_anomic}, {"roi", f.roi}};
    doc["ontic_states"] = model.ontic_states();

    json eps = json::array();
    for (const auto& e : model.epistemics()) {
        json w = json::object();
        for (std::size_t l = 0; l < e.weights.size(); ++l) w[model.ontic_states()[l]] = to_string(e.weights[l]);
        json item{{"preparation", e.preparation}, {"weights", w}};
        if (e.context) item["context"] = *e.context;
        eps.push_back(std::move(item));
    }
    doc["epistemic_states"] = std::move(eps);

    json tables = json::array();
    for (const auto& t : model.responses()) {
        json table = json::object();
        for (std::size_t l = 0; l < t.entries.size(); ++l) {
            json row = json::array();
            for (const auto& p : t.entries[l]) row.push_back(to_string(p));
            table[model.ontic_states()[l]] = std::move(row);
        }
        json item{{"context", t.context}, {"outcomes", t.outcomes}, {"table", table}};
        if (t.preparation) item["preparation"] = *t.preparation;
        tables.push_back(std::move(item));
    }
    doc["responses"] = std::move(tables);
    return doc;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field '" + key + "'");
    return *it;
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

Rational probability(const json& v, const std::string& where) {
    Rational q;
    if (v.is_number_integer()) {
        q = Rational(v.get<long>());
    } else if (v.is_string()) {
        try {
            q = parse_rational(v.get<std::string>());
        } catch (const InvalidConfig& e) {
            fail(where, e.what());
        }
    } else {
        fail(where, "expected an exact rational string such as \"1/3\"");
    }
    if (q < 0 || q > 1) fail(where, "probability " + to_string(q) + " outside [0, 1]");
    return q;
}

std::vector<std::string> strings(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(text(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

OntologicalModel model_from_json(const json& doc) {
    const std::string root = "model";
    if (!doc.is_object()) fail(root, "expected an object");
    static const std::set<std::string> known{"a2", "assumptions", "epistemic_states", "ontic_states", "responses"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) fail(key, "unknown field");
    }

    auto lambdas = strings(member(doc, "ontic_states", root), "ontic_states");
    std::map<std::string, std::size_t> index;
    for (std::size_t l = 0; l < lambdas.size(); ++l) index[lambdas[l]] = l;

    AssumptionSet flags;
    if (doc.contains("assumptions")) {
        const json& a = doc["assumptions"];
        if (!a.is_object()) fail("assumptions", "expected an object");
        for (const auto& [key, value] : a.items()) {
            if (!value.is_boolean()) fail("assumptions." + key, "expected a boolean");
            bool b = value.get<bool>();
            if (key == "psi_anomic") {
                flags.psi_anomic = b;
            } else if (key == "pip") {
                flags.pip = b;
            } else if (key == "pip_ps") {
                flags.pip_ps = b;
            } else if (key == "roi") {
                flags.roi = b;
            } else {
                fail("assumptions." + key, "unknown assumption");
            }
        }
    }

    std::vector<EpistemicState> eps;
    const json& ej = member(doc, "epistemic_states", root);
    if (!ej.is_array()) fail("epistemic_states", "expected an array");
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string at = "epistemic_states[" + std::to_string(i) + "]";
        EpistemicState e{text(member(ej[i], "preparation", at), at + ".preparation"), std::nullopt,
                         std::vector<Rational>(lambdas.size(), Rational(0))};
        if (ej[i].contains("context")) e.context = text(ej[i]["context"], at + ".context");
        const json& w = member(ej[i], "weights", at);
        if (!w.is_object()) fail(at + ".weights", "expected an object keyed by ontic state");
        for (const auto& [lambda, value] : w.items()) {
            auto it = index.find(lambda);
            if (it == index.end()) fail(at + ".weights." + lambda, "unknown ontic state");
            e.weights[it->second] = probability(value, at + ".weights." + lambda);
        }
        eps.push_back(std::move(e));
    }

    std::vector<ResponseTable> tables;
    const json& rj = member(doc, "responses", root);
    if (!rj.is_array()) fail("responses", "expected an array");
    for (std::size_t i = 0; i < rj.size(); ++i) {
        const std::string at = "responses[" + std::to_string(i) + "]";
        ResponseTable t{text(member(rj[i], "context", at), at + ".context"), std::nullopt,
                        strings(member(rj[i], "outcomes", at), at + ".outcomes"),
                        std::vector<std::vector<Rational>>(lambdas.size())};
        if (rj[i].contains("preparation")) t.preparation = text(rj[i]["preparation"], at + ".preparation");
        const json& table = member(rj[i], "table", at);
        if (!table.is_object()) fail(at + ".table", "expected an object keyed by ontic state");
        for (const auto& [lambda, row] : table.items()) {
            const std::string rat = at + ".table." + lambda;
            auto it = index.find(lambda);
            if (it == index.end()) fail(rat, "unknown ontic state");
            if (!row.is_array() || row.size() != t.outcomes.size()) {
                fail(rat, "expected " + std::to_string(t.outcomes.size()) + " probabilities");
            }
            for (std::size_t o = 0; o < row.size(); ++o) {
                t.entries[it->second].push_back(probability(row[o], rat + "[" + std::to_string(o) + "]"));
            }
        }
        for (std::size_t l = 0; l < lambdas.size(); ++l) {
            if (t.entries[l].empty()) fail(at + ".table", "missing row for ontic state '" + lambdas[l] + "'");
        }
        tables.push_back(std::move(t));
    }

    std::optional<Rational> a2;
    if (doc.contains("a2")) {
        try {
            a2 = parse_rational(text(doc["a2"], "a2"));
        } catch (const InvalidConfig& e) {
            fail("a2", e.what());
        }
    }
    try {
        OntologicalModel model(std::move(lambdas), std::move(eps), std::move(tables), flags);
        model.a2 = a2;
        return model;
    } catch (const InvalidConfig& e) {
        fail(root, e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

OntologicalModel load_model(const std::string& path) {
    json doc = read_json_file(path);
    try {
        return model_from_json(doc);
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ontic
