#ifndef HQG_JSON_FORMAT_HPP
#define HQG_JSON_FORMAT_HPP

#include <string>

#include <json.hpp>

namespace hqg {

/// Indented JSON in which arrays of scalars stay on one line. Deterministic:
/// object keys keep insertion order.
std::string dump_rows(const nlohmann::ordered_json& j);

}  // namespace hqg

#endif
