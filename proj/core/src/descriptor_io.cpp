#include "sunit/descriptor_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sunit {

using nlohmann::json;

namespace {

Rat jrat(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw ParseError("expected rational (integer or \"p/q\" string)");
}

std::vector<Rat> jvec(const json& v) {
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(jrat(x));
    return out;
}

json rat_json(const Rat& x) { return rat_to_string(x); }

json vec_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

}  // namespace

FieldDescriptor descriptor_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("field descriptor: ") + e.what());
    }
    std::string kind = j.value("kind", "");
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "quadratic") {
        if (!j.contains("d")) throw ParseError("quadratic descriptor needs d");
        return FieldDescriptor::quadratic(j["d"].get<long>());
    }
    if (kind != "table") throw ParseError("unknown field kind: " + kind);

    FieldDescriptor d;
    d.kind = FieldKind::Table;
    d.degree = j.at("degree").get<int>();
    d.label = j.value("label", "table-field");
    if (j.contains("basis_names"))
        d.basis_names = j["basis_names"].get<std::vector<std::string>>();
    auto sig = j.at("signature");
    d.r1 = sig.at(0).get<int>();
    d.r2 = sig.at(1).get<int>();
    const auto& mt = j.at("mult_table");
    for (const auto& row : mt) {
        std::vector<std::vector<Rat>> r;
        for (const auto& cell : row) r.push_back(jvec(cell));
        d.mult_table.push_back(std::move(r));
    }
    if (j.contains("class_number"))
        d.class_number = Int(j["class_number"].get<long>());
    d.galois = j.value("galois", false);
    if (j.contains("torsion")) {
        TorsionFixture t;
        t.generator = jvec(j["torsion"].at("generator"));
        t.order = j["torsion"].at("order").get<unsigned>();
        d.torsion = std::move(t);
    }
    if (j.contains("unit_generators"))
        for (const auto& u : j["unit_generators"])
            d.unit_generators.push_back(jvec(u));
    if (j.contains("automorphisms")) {
        for (const auto& m : j["automorphisms"]) {
            std::vector<std::vector<Int>> mm;
            for (const auto& row : m) {
                std::vector<Int> r;
                for (const auto& x : row) r.push_back(Int(x.get<long>()));
                mm.push_back(std::move(r));
            }
            d.automorphisms.push_back(std::move(mm));
        }
    }
    if (j.contains("prime_fixtures")) {
        for (const auto& pf : j["prime_fixtures"]) {
            PrimeFixture p;
            p.p = Int(pf.at("p").get<long>());
            p.e = pf.at("e").get<int>();
            p.f = pf.at("f").get<int>();
            p.label = pf.value("label", "P" + p.p.get_str());
            if (pf.contains("uniformizer") && !pf["uniformizer"].is_null())
                p.uniformizer = jvec(pf["uniformizer"]);
            d.prime_fixtures.push_back(std::move(p));
        }
    }
    return d;
}

FieldDescriptor descriptor_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open field descriptor: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return descriptor_from_json(ss.str());
}

std::string descriptor_to_json(const FieldDescriptor& d) {
    json j;
    switch (d.kind) {
        case FieldKind::Rational:
            j["kind"] = "rational";
            break;
        case FieldKind::Quadratic:
            j["kind"] = "quadratic";
            j["d"] = d.d;
            break;
        case FieldKind::Table: {
            j["kind"] = "table";
            j["label"] = d.label;
            j["degree"] = d.degree;
            j["signature"] = {d.r1, d.r2};
            if (!d.basis_names.empty()) j["basis_names"] = d.basis_names;
            json mt = json::array();
            for (const auto& row : d.mult_table) {
                json r = json::array();
                for (const auto& cell : row) r.push_back(vec_json(cell));
                mt.push_back(r);
            }
            j["mult_table"] = mt;
            if (d.class_number)
                j["class_number"] = d.class_number->get_si();
            j["galois"] = d.galois;
            if (d.torsion)
                j["torsion"] = {{"generator", vec_json(d.torsion->generator)},
                                {"order", d.torsion->order}};
            if (!d.unit_generators.empty()) {
                json u = json::array();
                for (const auto& g : d.unit_generators) u.push_back(vec_json(g));
                j["unit_generators"] = u;
            }
            if (!d.automorphisms.empty()) {
                json a = json::array();
                for (const auto& m : d.automorphisms) {
                    json mm = json::array();
                    for (const auto& row : m) {
                        json r = json::array();
                        for (const auto& x : row) r.push_back(x.get_si());
                        mm.push_back(r);
                    }
                    a.push_back(mm);
                }
                j["automorphisms"] = a;
            }
            if (!d.prime_fixtures.empty()) {
                json a = json::array();
                for (const auto& p : d.prime_fixtures) {
                    json pf = {{"p", p.p.get_si()},
                               {"e", p.e},
                               {"f", p.f},
                               {"label", p.label}};
                    if (p.uniformizer) pf["uniformizer"] = vec_json(*p.uniformizer);
                    a.push_back(pf);
                }
                j["prime_fixtures"] = a;
            }
            break;
        }
    }
    return j.dump(1);
}

Field field_from_spec(const std::string& spec, const std::string& fixtures_dir) {
    if (spec == "rational" || spec == "Q" || spec == "q")
        return make_field(FieldDescriptor::rational());
    if (spec.rfind("quad:", 0) == 0) {
        long d = std::stol(spec.substr(5));
        return make_field(FieldDescriptor::quadratic(d));
    }
    std::string name = spec;
    if (spec.rfind("table:", 0) == 0) name = spec.substr(6);
    namespace fs = std::filesystem;
    std::vector<std::string> candidates = {name};
    if (!fixtures_dir.empty()) {
        candidates.push_back(fixtures_dir + "/" + name);
        candidates.push_back(fixtures_dir + "/" + name + ".json");
        candidates.push_back(fixtures_dir + "/fields/" + name + ".json");
    }
    for (const auto& c : candidates)
        if (fs::exists(c) && fs::is_regular_file(c))
            return make_field(descriptor_from_file(c));
    throw ParseError("cannot resolve field spec: " + spec);
}

}  // namespace sunit
