#include "covfn/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "covfn/errors.hpp"

namespace covfn {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int json_to_int(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const std::size_t digits = s.size() - (s.size() > 1 && s[0] == '-' ? 1 : 0);
        if (s.empty() || digits == 0 ||
            s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) != std::string::npos)
            throw parse_error(what + ": \"" + s + "\" is not a decimal integer");
        return Int(s, 10);
    }
    throw parse_error(what + ": expected an integer or a decimal string, got " +
                      std::string(v.type_name()));
}

SystemDocument system_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("document root must be an object");
    if (!j.contains("classes") || !j["classes"].is_array() || j["classes"].empty())
        throw parse_error("\"classes\" must be a nonempty array");

    std::vector<ResidueClass> classes;
    classes.reserve(j["classes"].size());
    for (std::size_t i = 0; i < j["classes"].size(); ++i) {
        const json& entry = j["classes"][i];
        const std::string where = "classes[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("a") || !entry.contains("n"))
            throw parse_error(where + " must be an object with fields \"a\" and \"n\"");
        const Int a = json_to_int(entry["a"], where + ".a");
        const Int n = json_to_int(entry["n"], where + ".n");
        if (n < 1) throw parse_error(where + ".n must be positive, got " + n.get_str());
        classes.push_back(make_class(a, n)); // normalizes the residue
    }

    std::optional<std::vector<Int>> weights;
    if (j.contains("weights") && !j["weights"].is_null()) {
        if (!j["weights"].is_array())
            throw parse_error("\"weights\" must be an array of integers");
        std::vector<Int> w;
        w.reserve(j["weights"].size());
        for (std::size_t i = 0; i < j["weights"].size(); ++i)
            w.push_back(json_to_int(j["weights"][i], "weights[" + std::to_string(i) + "]"));
        if (w.size() != classes.size())
            throw parse_error("\"weights\" has " + std::to_string(w.size()) +
                              " entries for " + std::to_string(classes.size()) + " classes");
        weights = std::move(w);
    }

    SystemDocument doc;
    doc.system = make_system(std::move(classes), std::move(weights));
    doc.metadata = j.value("metadata", json(nullptr));
    return doc;
}

json system_to_json(const ResidueSystem& system, const json& metadata) {
    json classes = json::array();
    for (const ResidueClass& c : system.classes)
        classes.push_back({{"a", int_to_json(c.residue)}, {"n", int_to_json(c.modulus)}});
    json j{{"classes", std::move(classes)}};
    if (system.weights) {
        json w = json::array();
        for (const Int& x : *system.weights) w.push_back(int_to_json(x));
        j["weights"] = std::move(w);
    }
    if (!metadata.is_null()) j["metadata"] = metadata;
    return j;
}

SystemDocument load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
    try {
        return system_from_json(j);
    } catch (const error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void save_system(const std::string& path, const ResidueSystem& system, const json& metadata) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << system_to_json(system, metadata).dump(2) << "\n";
    if (!out) throw parse_error("failed writing " + path);
}

json report_to_json(const VerdictReport& report) {
    json items = json::array();
    for (const CheckItem& it : report.items) {
        json entry{{"subject", it.subject},
                   {"expected", it.expected},
                   {"observed", it.observed},
                   {"passed", it.passed}};
        if (!it.witness.empty()) entry["witness"] = it.witness;
        items.push_back(std::move(entry));
    }
    return json{{"theorem", report.theorem},
                {"verdict", to_string(report.verdict)},
                {"hypothesis",
                 {{"satisfied", report.hypothesis_satisfied}, {"note", report.hypothesis_note}}},
                {"items", std::move(items)},
                {"evidence", report.evidence}};
}

std::string format_report(const VerdictReport& report) {
    std::ostringstream out;
    out << "theorem " << report.theorem << ": " << to_string(report.verdict) << "\n";
    out << "  hypothesis " << (report.hypothesis_satisfied ? "holds" : "fails") << ": "
        << report.hypothesis_note << "\n";
    for (const CheckItem& it : report.items) {
        out << "  [" << (it.passed ? "pass" : "FAIL") << "] " << it.subject << ": "
            << it.expected << " -- " << it.observed;
        if (!it.witness.empty()) out << " (" << it.witness << ")";
        out << "\n";
    }
    for (const std::string& line : report.evidence) out << "  note: " << line << "\n";
    return out.str();
}

} // namespace covfn
