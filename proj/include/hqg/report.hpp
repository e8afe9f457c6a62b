// Verdicts, counterexample witnesses and the report container every checker
// returns. Reports render to a human text form and a structured (JSON) form;
// the structured form depends only on the inputs.

#ifndef HQG_REPORT_HPP
#define HQG_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hqg {

/// One coordinate of a vector in a tensor-product basis.
struct Coordinate {
    std::vector<std::size_t> basis;
    std::string value;
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

struct Witness {
    std::vector<std::size_t> input;  // basis tuple (or element tuple) where the identity fails
    std::vector<Coordinate> lhs;
    std::vector<Coordinate> rhs;
    std::string detail;
};

struct Check {
    std::string name;
    bool holds = false;
    std::optional<Witness> witness;
};

class Report {
   public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Check>& checks() const { return checks_; }

    Check& add(Check c) { return checks_.emplace_back(std::move(c)); }
    Check& add(std::string name, bool holds, std::optional<Witness> w = std::nullopt) {
        return add(Check{std::move(name), holds, std::move(w)});
    }
    void append(const Report& other, const std::string& prefix = "");

    /// Informational key/value pairs (ranks, counts, indices); part of the
    /// structured output.
    void note(std::string key, nlohmann::ordered_json value) { facts_.emplace_back(std::move(key), std::move(value)); }
    const std::vector<std::pair<std::string, nlohmann::ordered_json>>& facts() const { return facts_; }

    const Check* find(std::string_view name) const;
    bool holds(std::string_view name) const;
    bool all_hold() const;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;

   private:
    std::string title_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, nlohmann::ordered_json>> facts_;
};

nlohmann::ordered_json to_json(const Witness& w);

}  // namespace hqg

#endif
