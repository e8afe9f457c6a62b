#include "hqg/json_format.hpp"

#include <algorithm>

namespace hqg {

namespace {

bool flat(const nlohmann::ordered_json& j) {
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); });
}

void emit(const nlohmann::ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + nlohmann::ordered_json(key).dump() + ": ";
            emit(value, out, depth + 1);
            out += ++k < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += pad;
            emit(j[k], out, depth + 1);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (flat(j) && !j.empty()) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump_rows(const nlohmann::ordered_json& j) {
    std::string out;
    emit(j, out, 0);
    return out + "\n";
}

}  // namespace hqg
