#include "hqg/report.hpp"

#include <algorithm>
#include <sstream>

#include "hqg/errors.hpp"

namespace hqg {

namespace {

std::string tuple_text(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string vector_text(const std::vector<Coordinate>& v) {
    if (v.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " + ";
        s += v[i].value + "*e" + tuple_text(v[i].basis);
    }
    return s;
}

}  // namespace

nlohmann::ordered_json to_json(const Witness& w) {
    auto coords = [](const std::vector<Coordinate>& v) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& c : v) a.push_back({{"basis", c.basis}, {"value", c.value}});
        return a;
    };
    nlohmann::ordered_json j;
    j["input"] = w.input;
    j["lhs"] = coords(w.lhs);
    j["rhs"] = coords(w.rhs);
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks_) {
        Check copy = c;
        copy.name = prefix + c.name;
        checks_.push_back(std::move(copy));
    }
    for (const auto& [k, v] : other.facts_) facts_.emplace_back(prefix + k, v);
}

const Check* Report::find(std::string_view name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
}

bool Report::holds(std::string_view name) const {
    const Check* c = find(name);
    if (!c) throw Error("report has no check named '" + std::string(name) + "'");
    return c->holds;
}

bool Report::all_hold() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.holds; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["report"] = title_;
    j["verdict"] = all_hold();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["holds"] = c.holds;
        if (c.witness) cj["witness"] = hqg::to_json(*c.witness);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (!facts_.empty()) {
        nlohmann::ordered_json f = nlohmann::ordered_json::object();
        for (const auto& [k, v] : facts_) f[k] = v;
        j["facts"] = std::move(f);
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << title_ << ": " << (all_hold() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks_) {
        os << "  [" << (c.holds ? "ok  " : "FAIL") << "] " << c.name << "\n";
        if (c.witness) {
            const auto& w = *c.witness;
            os << "         at " << tuple_text(w.input) << "\n";
            if (!w.lhs.empty() || !w.rhs.empty()) {
                os << "         lhs = " << vector_text(w.lhs) << "\n";
                os << "         rhs = " << vector_text(w.rhs) << "\n";
            }
            if (!w.detail.empty()) os << "         " << w.detail << "\n";
        }
    }
    for (const auto& [k, v] : facts_) os << "  " << k << " = " << v.dump() << "\n";
    return os.str();
}

}  // namespace hqg
