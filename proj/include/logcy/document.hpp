#pragma once

#include "logcy/pair.hpp"

#include <memory>

namespace logcy {

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& m) : std::runtime_error(m) {}
};

struct PairDocument {
    std::vector<Vec2> fan;
    std::vector<std::vector<std::string>> blowups;  // per ray, scalar expressions
    bool allow_nongeneric = false;
};

PairDocument parse_pair_document(const std::string& json_text);
PairDocument load_pair_document(const std::string& path);

// Builds the pair; rejects non-generic pairs unless the document allows them.
LooijengaPair build_pair(const PairDocument& doc);

}  // namespace logcy
