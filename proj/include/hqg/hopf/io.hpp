// Structured documents for matrices and bialgebras. Scalars are canonical
// strings ("p/q" or "p" over Q, "r" over F_p); readers also accept JSON
// integers and, over F_p, rational literals mapped through the field.

#ifndef HQG_HOPF_IO_HPP
#define HQG_HOPF_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "hqg/hopf/bialgebra.hpp"
#include "hqg/json_format.hpp"

namespace hqg {

template <ExactField F>
F scalar_from_json(const nlohmann::ordered_json& j, const Field<F>& field) {
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
    if (!j.is_string()) throw FormatError("scalar must be a string or an integer, got " + j.dump());
    return field.from_rational(RationalField{}.parse(j.get<std::string>()));
}

/// Row-major nested array of scalar strings.
template <ExactField F>
nlohmann::ordered_json matrix_to_json(const LinMap<F>& m, const Field<F>& field) {
    const auto d = m.to_dense();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(field.format(d(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <ExactField F>
LinMap<F> matrix_from_json(const nlohmann::ordered_json& j, const Field<F>& field, std::optional<std::size_t> rows = {},
                           std::optional<std::size_t> cols = {}) {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    const std::size_t r = j.size();
    const std::size_t c = r ? j[0].size() : cols.value_or(0);
    if (rows && r != *rows) throw DimensionMismatch("matrix has " + std::to_string(r) + " rows, expected " + std::to_string(*rows));
    if (cols && c != *cols) throw DimensionMismatch("matrix has " + std::to_string(c) + " columns, expected " + std::to_string(*cols));
    Matrix<F> d(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c) throw FormatError("ragged matrix row " + std::to_string(i));
        for (std::size_t k = 0; k < c; ++k) d(i, k) = scalar_from_json(j[i][k], field);
    }
    return LinMap<F>::from_dense(d);
}

/// Accepts a bare nested array or an object with a "matrix" member.
template <ExactField F>
LinMap<F> parse_matrix(std::string_view text, const Field<F>& field) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("matrix document: ") + e.what());
    }
    if (j.is_object()) {
        if (!j.contains("matrix")) throw FormatError("matrix document needs a 'matrix' member");
        return matrix_from_json(j["matrix"], field);
    }
    return matrix_from_json(j, field);
}

template <ExactField F>
std::string emit_matrix(const LinMap<F>& m, const Field<F>& field) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_to_json(m, field);
    return dump_rows(j);
}

template <ExactField F>
nlohmann::ordered_json bialgebra_to_json(const Bialgebra<F>& b) {
    const auto& f = b.field();
    const std::size_t d = b.dim();
    const auto m = b.mult().to_dense(), c = b.comult().to_dense(), u = b.unit().to_dense(), e = b.counit().to_dense();
    nlohmann::ordered_json j;
    if (!b.name().empty()) j["name"] = b.name();
    j["dim"] = d;
    auto cube = [&](auto entry) {
        auto a = nlohmann::ordered_json::array();
        for (std::size_t x = 0; x < d; ++x) {
            auto plane = nlohmann::ordered_json::array();
            for (std::size_t y = 0; y < d; ++y) {
                auto row = nlohmann::ordered_json::array();
                for (std::size_t z = 0; z < d; ++z) row.push_back(f.format(entry(x, y, z)));
                plane.push_back(std::move(row));
            }
            a.push_back(std::move(plane));
        }
        return a;
    };
    j["mult"] = cube([&](std::size_t k, std::size_t i, std::size_t l) { return m(k, i * d + l); });
    auto vec = [&](auto entry) {
        auto a = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < d; ++k) a.push_back(f.format(entry(k)));
        return a;
    };
    j["unit"] = vec([&](std::size_t k) { return u(k, 0); });
    j["comult"] = cube([&](std::size_t i, std::size_t l, std::size_t k) { return c(i * d + l, k); });
    j["counit"] = vec([&](std::size_t k) { return e(0, k); });
    if (b.antipode()) j["antipode"] = matrix_to_json(*b.antipode(), f);
    return j;
}

template <ExactField F>
std::string emit_bialgebra(const Bialgebra<F>& b) {
    return dump_rows(bialgebra_to_json(b));
}

template <ExactField F>
Bialgebra<F> bialgebra_from_json(const nlohmann::ordered_json& j, const Field<F>& field) {
    for (const char* key : {"dim", "mult", "unit", "comult", "counit"})
        if (!j.contains(key)) throw FormatError(std::string("bialgebra document lacks '") + key + "'");
    std::size_t d = 0;
    try {
        d = j.at("dim").get<std::size_t>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError("'dim' must be a positive integer");
    }
    if (d == 0) throw FormatError("'dim' must be a positive integer");
    auto cube = [&](const char* key, auto place) {
        const auto& a = j.at(key);
        if (!a.is_array() || a.size() != d) throw FormatError(std::string("'") + key + "' must be a dim^3 array");
        for (std::size_t x = 0; x < d; ++x) {
            if (!a[x].is_array() || a[x].size() != d) throw FormatError(std::string("'") + key + "' must be a dim^3 array");
            for (std::size_t y = 0; y < d; ++y) {
                if (!a[x][y].is_array() || a[x][y].size() != d)
                    throw FormatError(std::string("'") + key + "' must be a dim^3 array");
                for (std::size_t z = 0; z < d; ++z) place(x, y, z, scalar_from_json(a[x][y][z], field));
            }
        }
    };
    auto vec = [&](const char* key) {
        const auto& a = j.at(key);
        if (!a.is_array() || a.size() != d) throw FormatError(std::string("'") + key + "' must have dim entries");
        std::vector<F> v;
        for (const auto& x : a) v.push_back(scalar_from_json(x, field));
        return v;
    };
    Matrix<F> m(d, d * d), c(d * d, d), u(d, 1), e(1, d);
    cube("mult", [&](std::size_t k, std::size_t i, std::size_t l, F v) { m(k, i * d + l) = std::move(v); });
    cube("comult", [&](std::size_t i, std::size_t l, std::size_t k, F v) { c(i * d + l, k) = std::move(v); });
    const auto uv = vec("unit"), ev = vec("counit");
    for (std::size_t k = 0; k < d; ++k) u(k, 0) = uv[k], e(0, k) = ev[k];
    std::optional<LinMap<F>> s;
    if (j.contains("antipode")) s = matrix_from_json(j.at("antipode"), field, d, d);
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return Bialgebra<F>(field, d, LinMap<F>::from_dense(m), LinMap<F>::from_dense(u), LinMap<F>::from_dense(c),
                        LinMap<F>::from_dense(e), std::move(s), std::move(name));
}

template <ExactField F>
Bialgebra<F> parse_bialgebra(std::string_view text, const Field<F>& field) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bialgebra document: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("bialgebra document must be an object");
    return bialgebra_from_json(j, field);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IOError("failed writing '" + path + "'");
}

}  // namespace hqg

#endif
