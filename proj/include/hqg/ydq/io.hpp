// Structured documents for automorphism pairs and Yetter-Drinfeld
// quasimodules. A module's `base` is either an inline bialgebra object or a
// string resolved by the caller.

#ifndef HQG_YDQ_IO_HPP
#define HQG_YDQ_IO_HPP

#include <functional>
#include <string>

#include "hqg/hopf/io.hpp"
#include "hqg/ydq/module.hpp"

namespace hqg {

template <ExactField F>
nlohmann::ordered_json gpair_to_json(const GPair<F>& p) {
    const auto& f = p.base()->field();
    nlohmann::ordered_json j;
    j["alpha"] = matrix_to_json(p.alpha.matrix(), f);
    j["beta"] = matrix_to_json(p.beta.matrix(), f);
    return j;
}

/// Both components are validated; throws PreconditionViolated when either
/// is not an automorphism of the base.
template <ExactField F>
GPair<F> gpair_from_json(const nlohmann::ordered_json& j, const BasePtr<F>& base) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
        throw FormatError("automorphism pair needs 'alpha' and 'beta'");
    const auto d = base->dim();
    const auto& f = base->field();
    return make_gpair(make_automorphism(base, matrix_from_json(j.at("alpha"), f, d, d)),
                      make_automorphism(base, matrix_from_json(j.at("beta"), f, d, d)));
}

template <ExactField F>
std::string emit_gpair(const GPair<F>& p) {
    return dump_rows(gpair_to_json(p));
}

template <ExactField F>
GPair<F> parse_gpair(std::string_view text, const BasePtr<F>& base) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("automorphism pair document: ") + e.what());
    }
    return gpair_from_json(j, base);
}

/// `base` is written inline unless `base_ref` names it.
template <ExactField F>
std::string emit_ydq(const YDQModule<F>& m, const std::string& base_ref = "") {
    const auto& f = m.base().field();
    nlohmann::ordered_json j;
    if (base_ref.empty())
        j["base"] = bialgebra_to_json(m.base());
    else
        j["base"] = base_ref;
    j["dim"] = m.dim();
    j["action"] = matrix_to_json(m.action(), f);
    j["coaction"] = matrix_to_json(m.coaction(), f);
    j["alpha"] = matrix_to_json(m.index().alpha.matrix(), f);
    j["beta"] = matrix_to_json(m.index().beta.matrix(), f);
    return dump_rows(j);
}

template <ExactField F>
using BaseResolver = std::function<BasePtr<F>(const std::string&)>;

/// Throws FormatError, DimensionMismatch, PreconditionViolated.
template <ExactField F>
YDQModule<F> parse_ydq(std::string_view text, const Field<F>& field, const BaseResolver<F>& resolve) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("module document: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("module document must be an object");
    for (const char* key : {"base", "dim", "action", "coaction", "alpha", "beta"})
        if (!j.contains(key)) throw FormatError(std::string("module document lacks '") + key + "'");
    BasePtr<F> base;
    if (j.at("base").is_string()) {
        if (!resolve) throw FormatError("module names its base but no resolver is available");
        base = resolve(j.at("base").get<std::string>());
    } else {
        base = std::make_shared<const Bialgebra<F>>(bialgebra_from_json(j.at("base"), field));
    }
    std::size_t n = 0;
    try {
        n = j.at("dim").get<std::size_t>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError("'dim' must be a positive integer");
    }
    const std::size_t d = base->dim();
    auto index = gpair_from_json(j, base);
    return YDQModule<F>(std::move(index), n, matrix_from_json(j.at("action"), field, n, d * n),
                        matrix_from_json(j.at("coaction"), field, n * d, n));
}

}  // namespace hqg

#endif
