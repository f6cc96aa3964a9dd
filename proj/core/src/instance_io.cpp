#include "gsee/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gsee {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw std::runtime_error("instance '" + origin + "': " + what);
}

double number_field(const json& j, const char* key, const std::string& origin) {
    auto it = j.find(key);
    if (it == j.end()) fail(origin, std::string("missing key '") + key + "'");
    if (!it->is_number()) fail(origin, std::string("key '") + key + "' must be a number");
    return it->get<double>();
}

std::vector<double> array_field(const json& j, const char* key,
                                const std::string& origin) {
    auto it = j.find(key);
    if (it == j.end()) fail(origin, std::string("missing key '") + key + "'");
    if (!it->is_array()) fail(origin, std::string("key '") + key + "' must be an array");
    std::vector<double> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_number()) {
            fail(origin, std::string("array '") + key + "' must hold numbers only");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

ProblemInstance read_instance(std::istream& in, const std::string& origin) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(origin, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(origin, "top level must be an object");

    std::vector<double> energies = array_field(j, "energies", origin);
    std::vector<double> weights = array_field(j, "weights", origin);
    if (energies.size() != weights.size()) {
        std::ostringstream os;
        os << "energies (" << energies.size() << ") and weights (" << weights.size()
           << ") have different lengths";
        fail(origin, os.str());
    }
    double delta_lb = number_field(j, "delta_lb", origin);
    double eta_lb = number_field(j, "eta_lb", origin);
    double e_lo = number_field(j, "e_lo", origin);
    double e_hi = number_field(j, "e_hi", origin);

    try {
        return ProblemInstance(SpectralMeasure(std::move(energies), std::move(weights)),
                               delta_lb, eta_lb, e_lo, e_hi);
    } catch (const std::invalid_argument& e) {
        fail(origin, e.what());
    }
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
    return read_instance(in, path);
}

void write_instance(std::ostream& out, const ProblemInstance& instance) {
    json j;
    j["energies"] = instance.measure.energies();
    j["weights"] = instance.measure.weights();
    j["delta_lb"] = instance.delta_lb;
    j["eta_lb"] = instance.eta_lb;
    j["e_lo"] = instance.e_lo;
    j["e_hi"] = instance.e_hi;
    out << j.dump(2) << '\n';
}

void save_instance(const std::string& path, const ProblemInstance& instance) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
    write_instance(out, instance);
    if (!out.good()) throw std::runtime_error("short write to '" + path + "'");
}

}  // namespace gsee
