#include "toricbv/fan_io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "toricbv/errors.hpp"

namespace toricbv {

namespace {

using nlohmann::json;

constexpr int kMaxDim = 12;
constexpr std::size_t kMaxRays = 4096;

Int to_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw input_error(path + ": expected an integer");
}

}  // namespace

NamedFan parse_fan(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("fan document: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("fan document: expected a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key != "dim" && key != "rays" && key != "max_cones" && key != "name")
            throw input_error("fan document: unknown field '" + key + "'");
    }

    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw input_error("dim: expected an integer");
    const long dim = doc["dim"].get<long>();
    if (dim < 1 || dim > kMaxDim) {
        std::ostringstream os;
        os << "dim: expected a value in [1," << kMaxDim << "], got " << dim;
        throw input_error(os.str());
    }

    if (!doc.contains("rays") || !doc["rays"].is_array())
        throw input_error("rays: expected an array of integer arrays");
    if (doc["rays"].size() > kMaxRays) throw input_error("rays: too many rays");

    std::vector<LatticeVector> rays;
    for (std::size_t t = 0; t < doc["rays"].size(); ++t) {
        const auto& jr = doc["rays"][t];
        std::ostringstream path;
        path << "rays[" << t << "]";
        if (!jr.is_array() || jr.size() != static_cast<std::size_t>(dim))
            throw input_error(path.str() + ": expected an array of " +
                              std::to_string(dim) + " integers");
        LatticeVector ray(dim);
        for (long c = 0; c < dim; ++c)
            ray[c] = to_int(jr[c], path.str() + "[" + std::to_string(c) + "]");
        Int g = 0;
        for (const auto& x : ray) {
            Int a = abs(x);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        }
        if (g != 1)
            throw input_error(path.str() + ": ray is not primitive (gcd " + g.get_str() + ")");
        rays.push_back(std::move(ray));
    }
    for (std::size_t s = 0; s < rays.size(); ++s)
        for (std::size_t t = s + 1; t < rays.size(); ++t)
            if (rays[s] == rays[t]) {
                std::ostringstream os;
                os << "rays[" << t << "]: duplicate of rays[" << s << "]";
                throw input_error(os.str());
            }

    if (!doc.contains("max_cones") || !doc["max_cones"].is_array())
        throw input_error("max_cones: expected an array of index arrays");
    std::vector<std::vector<int>> cones;
    for (std::size_t c = 0; c < doc["max_cones"].size(); ++c) {
        const auto& jc = doc["max_cones"][c];
        std::ostringstream path;
        path << "max_cones[" << c << "]";
        if (!jc.is_array() || jc.size() != static_cast<std::size_t>(dim))
            throw input_error(path.str() + ": expected an array of " +
                              std::to_string(dim) + " ray indices");
        std::vector<int> cone(dim);
        for (long i = 0; i < dim; ++i) {
            if (!jc[i].is_number_integer())
                throw input_error(path.str() + "[" + std::to_string(i) +
                                  "]: expected an integer index");
            const long idx = jc[i].get<long>();
            if (idx < 0 || idx >= static_cast<long>(rays.size())) {
                std::ostringstream os;
                os << path.str() << "[" << i << "]: ray index " << idx
                   << " out of range [0," << rays.size() << ")";
                throw input_error(os.str());
            }
            cone[i] = static_cast<int>(idx);
        }
        cones.push_back(std::move(cone));
    }

    NamedFan out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw input_error("name: expected a string");
        out.name = doc["name"].get<std::string>();
    }
    out.fan = Fan(static_cast<int>(dim), std::move(rays), std::move(cones));
    return out;
}

std::string serialize_fan(const NamedFan& named) {
    nlohmann::ordered_json doc;
    doc["dim"] = named.fan.dim;
    if (!named.name.empty()) doc["name"] = named.name;
    doc["rays"] = nlohmann::ordered_json::array();
    for (const auto& ray : named.fan.rays) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& x : ray) {
            if (x.fits_slong_p())
                jr.push_back(x.get_si());
            else
                jr.push_back(x.get_str());
        }
        doc["rays"].push_back(jr);
    }
    doc["max_cones"] = nlohmann::ordered_json::array();
    for (const auto& cone : named.fan.max_cones) doc["max_cones"].push_back(cone);
    return doc.dump(2) + "\n";
}

}  // namespace toricbv
