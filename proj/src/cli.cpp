#include "ontic/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <typeinfo>

#include <CLI11.hpp>

#include "ontic/errors.hpp"
#include "ontic/hardy.hpp"
#include "ontic/interferometer.hpp"
#include "ontic/model_io.hpp"
#include "ontic/nogo.hpp"
#include "ontic/pbr.hpp"
#include "ontic/report_io.hpp"

namespace ontic {

using nlohmann::json;

namespace {

struct Options {
    std::string config;
    std::string a2;
    std::vector<std::string> chi;
    std::vector<std::string> relax;
    std::string out;
    std::string format;
    std::string variant;
    std::string theorem;
    std::string model_path;
};

// Fills options the command line left empty from the JSON config file.
void merge_config(Options& o) {
    if (o.config.empty()) return;
    json doc = read_json_file(o.config);
    if (!doc.is_object()) throw SchemaError(o.config + ": expected an object");
    auto str = [&](const std::string& key, const json& v) {
        if (!v.is_string()) throw SchemaError(o.config + ": " + key + ": expected a string");
        return v.get<std::string>();
    };
    auto list = [&](const std::string& key, const json& v) {
        std::vector<std::string> out;
        if (v.is_string()) {
            std::stringstream ss(v.get<std::string>());
            for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
        } else if (v.is_array()) {
            for (const auto& item : v) out.push_back(str(key, item));
        } else {
            throw SchemaError(o.config + ": " + key + ": expected a list of strings");
        }
        return out;
    };
    for (const auto& [key, v] : doc.items()) {
        if (key == "a2") {
            if (o.a2.empty()) o.a2 = str(key, v);
        } else if (key == "chi") {
            if (o.chi.empty()) o.chi = list(key, v);
        } else if (key == "relax") {
            if (o.relax.empty()) o.relax = list(key, v);
        } else if (key == "out") {
            if (o.out.empty()) o.out = str(key, v);
        } else if (key == "format") {
            if (o.format.empty()) o.format = str(key, v);
        } else if (key == "variant") {
            if (o.variant.empty()) o.variant = str(key, v);
        } else {
            throw SchemaError(o.config + ": " + key + ": unknown field");
        }
    }
}

Rational a2_of(const Options& o) { return parse_rational(o.a2.empty() ? "1/3" : o.a2); }

std::vector<Phase> chis_of(const Options& o) {
    std::vector<Phase> out;
    if (o.chi.empty()) {
        auto d = hardy::default_phases();
        return {d.begin(), d.end()};
    }
    for (const auto& c : o.chi) out.push_back(Phase::parse(c));
    return out;
}

std::string num(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json exact_or_float(const Real& p) {
    json v{{"value", p.to_double()}};
    if (auto q = p.rational()) {
        v["exact"] = to_string(*q);
    } else if (p.is_exact()) {
        v["exact"] = p.to_string();
    } else {
        v["exact"] = nullptr;
    }
    return v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw InvalidConfig("cannot write " + path.string());
    f << content;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format != "csv" && format != "json") throw InvalidConfig("unknown format '" + format + "'");
    CircuitConfig cfg = CircuitConfig::make(a2_of(o));
    const auto chis = chis_of(o);
    const auto sweep = sweep_m0_m2(cfg, chis);
    const auto joint = run_m1_m2(cfg, chis.front());

    std::string csv = "chi,P3,P4,P2\n";
    json rows = json::array();
    for (std::size_t i = 0; i < chis.size(); ++i) {
        const auto& d = sweep[i];
        csv += num(chis[i].to_radians()) + "," + num(d.at("3").to_double()) + "," + num(d.at("4").to_double()) + "," +
               num(d.at("2").to_double()) + "\n";
        rows.push_back({{"chi", chis[i].label()},
                        {"chi_radians", chis[i].to_radians()},
                        {"P3", exact_or_float(d.at("3"))},
                        {"P4", exact_or_float(d.at("4"))},
                        {"P2", exact_or_float(d.at("2"))}});
    }
    std::string joint_csv = "beta,alpha,P\n";
    json jrows = json::array();
    for (const auto& e : joint.entries()) {
        joint_csv += e.beta + "," + e.alpha + "," + num(e.p.to_double()) + "\n";
        jrows.push_back({{"beta", e.beta}, {"alpha", e.alpha}, {"P", exact_or_float(e.p)}});
    }
    json doc{{"a2", to_string(cfg.a2)}, {"b2", to_string(cfg.b2())}, {"sweep", rows}, {"joint", jrows},
             {"notes", {kPortConventionNote, "The blocked joint table does not depend on chi."}}};

    out << (format == "csv" ? csv : dump_json(doc));
    if (!o.out.empty()) {
        std::filesystem::path dir(o.out);
        write_file(dir / "sweep.csv", csv);
        write_file(dir / "joint.csv", joint_csv);
        write_file(dir / "simulate.json", dump_json(doc));
    }
    return 0;
}

void print_summary(const TheoremReport& r, std::ostream& out) {
    out << "theorem " << r.theorem;
    if (r.a2) out << "  a2=" << to_string(*r.a2);
    if (!r.chis.empty()) {
        out << "  chi=";
        for (std::size_t i = 0; i < r.chis.size(); ++i) out << (i ? "," : "") << r.chis[i];
    }
    out << "  relaxed=";
    if (r.relaxed.empty()) out << "none";
    for (std::size_t i = 0; i < r.relaxed.size(); ++i) out << (i ? "," : "") << r.relaxed[i];
    out << "\nstatus: " << r.status << (r.expected ? " (as predicted)" : " (UNEXPECTED)") << "\n";
    if (r.max_overlap) out << "max overlap: " << to_string(*r.max_overlap) << "\n";
    if (r.certificate) {
        std::size_t used = 0;
        for (const auto& y : r.certificate->multipliers) used += y != 0;
        out << "certificate: " << used << " rows, bound " << to_string(r.certificate->bound) << ", re-verified exactly\n";
    }
    if (r.witness_reproduces) out << "witness reproduces fragment: " << (*r.witness_reproduces ? "yes" : "no") << "\n";
    if (!r.oracle_status.empty()) out << "oracle: " << r.oracle_status << (r.oracle_agrees ? " (agrees)" : " (DISAGREES)") << "\n";
    for (const auto& z : r.zero_conditions) out << "zero: P(" << z.outcome << " | " << z.preparation << ") = 0\n";
    out << "trace:\n";
    for (const auto& s : r.trace) out << "  [" << s.tag << "] " << s.statement << "\n";
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format.empty() ? "text" : o.format;
    if (format != "text" && format != "json") throw InvalidConfig("check supports --format text or json");
    if (!o.chi.empty()) {
        auto chis = chis_of(o);
        auto d = hardy::default_phases();
        bool standard = chis.size() == d.size() && std::equal(chis.begin(), chis.end(), d.begin());
        if (!standard) throw InvalidConfig("theorem checks run at chi = 0,pi");
    }

    TheoremReport r;
    if (o.theorem == "pbr") {
        if (!o.relax.empty()) throw InvalidConfig("pbr takes no --relax");
        r = pbr_check(ket_zero(), ket_plus(), pbr_fixture_measurement());
    } else {
        AssumptionSet as = relax(o.relax);
        r = o.theorem == "hroi" ? check_hroi_original(a2_of(o), as) : check_hroi2(a2_of(o), as);
    }

    const json doc = report_to_json(r);
    if (format == "json") {
        out << dump_json(doc);
    } else {
        print_summary(r, out);
    }
    if (!o.out.empty()) {
        std::filesystem::path dir(o.out);
        write_file(dir / "report.json", dump_json(doc));
        if (r.witness_model) write_file(dir / "witness_model.json", dump_json(model_to_json(*r.witness_model)));
    }
    if (!r.oracle_agrees) {
        err << "internal inconsistency: the enumeration oracle disagrees with the simplex\n";
        return 2;
    }
    if (!r.expected) {
        err << "internal inconsistency: unexpected status '" << r.status << "'\n";
        return 2;
    }
    return 0;
}

json audit(const OntologicalModel& model, const std::optional<Rational>& a2) {
    json doc;
    if (a2) {
        Fragment frag;
        for (const auto& e : hardy::fragment(*a2)) {
            if (model.has_preparation(e.preparation)) frag.push_back(e);
        }
        auto rep = reproduces(model, frag);
        json dev = json::array();
        for (const auto& e : rep.entries) {
            dev.push_back({{"preparation", e.preparation}, {"context", e.context}, {"deviation", to_string(e.deviation)},
                           {"missing", e.missing}});
        }
        doc["fragment"] = {{"a2", to_string(*a2)}, {"entries", frag.size()}, {"deviations", dev}};
        doc["reproduces"] = rep.reproduces && !frag.empty();
        doc["max_deviation"] = to_string(rep.max_deviation);
    } else {
        doc["reproduces"] = nullptr;
    }

    json checks = json::object();
    for (const std::string name : {"psi_anomic", "pip", "pip_ps", "roi"}) {
        AssumptionSet which;
        (name == "psi_anomic" ? which.psi_anomic : name == "pip" ? which.pip : name == "pip_ps" ? which.pip_ps : which.roi) = true;
        try {
            auto c = check_assumptions(model, which).checks.front();
            checks[name] = {{"verdict", to_string(c.verdict)}, {"violations", c.violations}};
        } catch (const FragmentMismatch& e) {
            checks[name] = {{"verdict", to_string(Verdict::NotApplicable)}, {"violations", json::array()}, {"reason", e.what()}};
        }
    }
    doc["assumptions"] = std::move(checks);

    json overlaps = json::array();
    std::vector<std::string> preps;
    for (const auto& p : model.preparations()) {
        try {
            model.epistemic(p);
            preps.push_back(p);
        } catch (const UnknownLabel&) {
        }
    }
    for (std::size_t i = 0; i < preps.size(); ++i) {
        for (std::size_t j = i + 1; j < preps.size(); ++j) {
            auto ov = support_overlap(model, preps[i], preps[j]);
            overlaps.push_back({{"first", preps[i]}, {"second", preps[j]}, {"mass", to_string(ov.mass)}, {"disjoint", ov.disjoint}});
        }
    }
    doc["overlaps"] = std::move(overlaps);
    doc["psi_ontic"] = is_psi_ontic(model);
    return doc;
}

int cmd_model(const std::string& sub, const Options& o, std::ostream& out) {
    if (!o.format.empty() && o.format != "json") throw InvalidConfig("model commands emit JSON only");
    json doc;
    std::string file;
    if (sub == "counterexample") {
        const std::string variant = o.variant.empty() ? "single" : o.variant;
        if (variant != "arm" && variant != "single") throw InvalidConfig("--variant must be arm or single");
        doc = model_to_json(nomic_counterexample(
            a2_of(o), variant == "arm" ? CounterexampleSpace::ArmLabel : CounterexampleSpace::SinglePoint));
        file = "model.json";
    } else if (sub == "lift") {
        doc = model_to_json(lift_model(load_model(o.model_path)));
        file = "lifted.json";
    } else {
        OntologicalModel model = load_model(o.model_path);
        std::optional<Rational> a2 = model.a2;
        if (!o.a2.empty()) a2 = a2_of(o);
        if (a2) CircuitConfig::make(*a2);
        doc = audit(model, a2);
        file = "audit.json";
    }
    out << dump_json(doc);
    if (!o.out.empty()) write_file(std::filesystem::path(o.out) / file, dump_json(doc));
    return 0;
}

void add_common(CLI::App* app, Options& o) {
    app->add_option("--config", o.config, "JSON file mirroring the command-line flags");
    app->add_option("--a2", o.a2, "a^2 as p/q (0 < a^2 <= 1/2), default 1/3");
    app->add_option("--out", o.out, "directory for output files");
    app->add_option("--format", o.format, "output format");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact interferometer simulation and no-go checks for ontological models", "ontic"};
    app.require_subcommand(1);
    Options o;

    auto* sim = app.add_subcommand("simulate", "phase sweep of the unblocked device and the blocked joint table");
    add_common(sim, o);
    sim->add_option("--chi", o.chi, "phases, e.g. 0,pi/2,pi")->delimiter(',');

    auto* check = app.add_subcommand("check", "run a no-go theorem check");
    add_common(check, o);
    check->add_option("theorem", o.theorem, "pbr, hroi or hroi2")->required()->check(CLI::IsMember({"pbr", "hroi", "hroi2"}));
    check->add_option("--relax", o.relax, "assumption to drop: psi_anomic, pip, pip_ps, roi")->delimiter(',');
    check->add_option("--chi", o.chi, "must be 0,pi")->delimiter(',');

    auto* model = app.add_subcommand("model", "build, lift or audit ontological models");
    model->require_subcommand(1);
    auto* cex = model->add_subcommand("counterexample", "psi-nomic model of the interferometric fragment");
    add_common(cex, o);
    cex->add_option("--variant", o.variant, "single (one point, default) or arm (two-point space)");
    auto* lift = model->add_subcommand("lift", "adjoin the wavefunction token to a model file");
    add_common(lift, o);
    lift->add_option("file", o.model_path, "model JSON")->required();
    auto* aud = model->add_subcommand("audit", "statistics reproduction and assumption checks for a model file");
    add_common(aud, o);
    aud->add_option("file", o.model_path, "model JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        merge_config(o);
        if (*sim) return cmd_simulate(o, out);
        if (*check) return cmd_check(o, out, err);
        if (*cex) return cmd_model("counterexample", o, out);
        if (*lift) return cmd_model("lift", o, out);
        return cmd_model("audit", o, out);
    } catch (const HypothesisOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        if (typeid(e) == typeid(Error)) {
            err << "internal error: " << e.what() << "\n";
            return 2;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ontic
