#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"
#include "ontic/model_io.hpp"
#include "ontic/nogo.hpp"

using namespace ontic;
using nlohmann::json;

namespace {

using R = Rational;

void same_model(const OntologicalModel& a, const OntologicalModel& b) {
    CHECK(a.ontic_states() == b.ontic_states());
    CHECK(a.flags() == b.flags());
    CHECK(a.a2 == b.a2);
    REQUIRE(a.epistemics().size() == b.epistemics().size());
    for (std::size_t i = 0; i < a.epistemics().size(); ++i) {
        CHECK(a.epistemics()[i].preparation == b.epistemics()[i].preparation);
        CHECK(a.epistemics()[i].context == b.epistemics()[i].context);
        CHECK(a.epistemics()[i].weights == b.epistemics()[i].weights);
    }
    REQUIRE(a.responses().size() == b.responses().size());
    for (std::size_t i = 0; i < a.responses().size(); ++i) {
        CHECK(a.responses()[i].context == b.responses()[i].context);
        CHECK(a.responses()[i].preparation == b.responses()[i].preparation);
        CHECK(a.responses()[i].outcomes == b.responses()[i].outcomes);
        CHECK(a.responses()[i].entries == b.responses()[i].entries);
    }
}

json minimal() {
    return json::parse(R"({
      "ontic_states": ["x", "y"],
      "assumptions": {"psi_anomic": true, "pip": true, "pip_ps": false, "roi": false},
      "epistemic_states": [{"preparation": "A", "weights": {"x": "1/4", "y": "0.75"}}],
      "responses": [{"context": "Z", "outcomes": ["+", "-"], "table": {"x": [1, 0], "y": ["1/3", "2/3"]}}]
    })");
}

}  // namespace

TEST_CASE("json round trip preserves models exactly") {
    for (const auto& m : {nomic_counterexample(R(1, 3)), nomic_counterexample(R(1, 4), CounterexampleSpace::ArmLabel),
                          lift_model(nomic_counterexample(R(1, 3)))}) {
        json doc = model_to_json(m);
        same_model(m, model_from_json(doc));
        same_model(m, model_from_json(json::parse(dump_json(doc))));
    }
}

TEST_CASE("decimal and integer probabilities") {
    OntologicalModel m = model_from_json(minimal());
    CHECK(m.epistemic("A").weights == std::vector<R>{R(1, 4), R(3, 4)});
    CHECK(predicted_statistics(m, "A", "Z").at("+") == R(1, 4) + R(3, 4) * R(1, 3));
    CHECK(model_to_json(m)["epistemic_states"][0]["weights"]["y"] == "3/4");
}

TEST_CASE("schema errors name the location") {
    auto expect = [](json doc, const std::string& where) {
        try {
            model_from_json(doc);
            FAIL("expected SchemaError for " << where);
        } catch (const SchemaError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(where) != std::string::npos, e.what());
        }
    };
    json a = minimal();
    a["responses"][0]["table"]["y"][1] = "7/3";
    expect(a, "responses[0].table.y[1]");
    json b = minimal();
    b["responses"][0]["table"].erase("y");
    expect(b, "responses[0].table");
    json c = minimal();
    c["epistemic_states"][0]["weights"]["x"] = "a quarter";
    expect(c, "epistemic_states[0].weights.x");
    json d = minimal();
    d.erase("ontic_states");
    expect(d, "ontic_states");
    json e = minimal();
    e["epistemic_states"][0]["weights"]["ghost"] = "0";
    expect(e, "epistemic_states[0].weights");
    // Normalization failures are reported as schema errors too.
    json f = minimal();
    f["epistemic_states"][0]["weights"]["x"] = "1/2";
    CHECK_THROWS_AS(model_from_json(f), SchemaError);
}

TEST_CASE("files") {
    const std::string path = "model_io_roundtrip.json";
    {
        std::ofstream out(path);
        out << dump_json(model_to_json(nomic_counterexample(R(1, 3))));
    }
    OntologicalModel m = load_model(path);
    CHECK(reproduces(m, hardy::fragment(R(1, 3))).reproduces);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_model("does/not/exist.json"), SchemaError);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_json_file(path), SchemaError);
    std::remove(path.c_str());
    CHECK(dump_json(json{{"b", 1}, {"a", 2}}) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}
