#include "logcy/document.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace logcy {

using nlohmann::json;

PairDocument parse_pair_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("document is not valid JSON: ") + e.what());
    }
    PairDocument doc;
    if (!j.is_object() || !j.contains("fan") || !j["fan"].is_array())
        throw DocumentError("document needs a \"fan\" array of integer 2-vectors");
    for (const auto& ray : j["fan"]) {
        if (!ray.is_array() || ray.size() != 2 || !ray[0].is_number_integer() ||
            !ray[1].is_number_integer())
            throw DocumentError("fan rays must be integer 2-vectors");
        doc.fan.push_back(Vec2{ray[0].get<long long>(), ray[1].get<long long>()});
    }
    doc.blowups.assign(doc.fan.size(), {});
    if (j.contains("blowups")) {
        if (!j["blowups"].is_object())
            throw DocumentError("\"blowups\" must map ray indices to scalar lists");
        for (const auto& [key, val] : j["blowups"].items()) {
            size_t ray = 0;
            try {
                ray = std::stoul(key);
            } catch (...) {
                throw DocumentError("blowup key \"" + key + "\" is not a ray index");
            }
            if (ray < 1 || ray > doc.fan.size())
                throw DocumentError("blowup key \"" + key + "\" is out of range");
            if (!val.is_array()) throw DocumentError("blowup lists must be arrays of strings");
            for (const auto& s : val) {
                if (!s.is_string())
                    throw DocumentError("blowup parameters must be scalar expression strings");
                doc.blowups[ray - 1].push_back(s.get<std::string>());
            }
        }
    }
    if (j.contains("allow_nongeneric")) {
        if (!j["allow_nongeneric"].is_boolean())
            throw DocumentError("\"allow_nongeneric\" must be a boolean");
        doc.allow_nongeneric = j["allow_nongeneric"].get<bool>();
    }
    return doc;
}

PairDocument load_pair_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open document: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pair_document(buf.str());
}

LooijengaPair build_pair(const PairDocument& doc) {
    Fan2D fan = Fan2D::validate(doc.fan);
    std::vector<std::vector<LaurentScalar>> mus;
    for (size_t i = 0; i < doc.blowups.size(); ++i) {
        std::vector<LaurentScalar> row;
        for (const std::string& expr : doc.blowups[i]) {
            try {
                row.push_back(parse_scalar(expr));
            } catch (const FieldError& e) {
                std::ostringstream os;
                os << "ray " << (i + 1) << " scalar \"" << expr << "\": " << e.what();
                throw DocumentError(os.str());
            }
        }
        mus.push_back(std::move(row));
    }
    LooijengaPair pair(fan, std::move(mus));
    if (!pair.generic() && !doc.allow_nongeneric)
        throw DocumentError(
            "blowup parameters share reductions at t=0 (non-generic); pass allow_nongeneric "
            "to proceed");
    return pair;
}

}  // namespace logcy
