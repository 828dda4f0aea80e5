#include "covercalc/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace covercalc {

Json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(big_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of arrays");
    const std::size_t n = j.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw std::invalid_argument("matrix JSON must be square");
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = big_from_json(j[i][k]);
    }
    return m;
}

IntMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

Json poly_to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(big_to_json(c));
    Json out;
    out["coefficients"] = std::move(coeffs);
    out["display"] = p.to_string();
    return out;
}

std::vector<BigInt> parse_int_csv(const std::string& csv) {
    std::vector<BigInt> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::erase_if(tok, [](unsigned char c) { return std::isspace(c); });
        if (!tok.empty()) out.emplace_back(tok);
    }
    return out;
}

}  // namespace covercalc
