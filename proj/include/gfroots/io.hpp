#ifndef GFROOTS_IO_HPP
#define GFROOTS_IO_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "gf.hpp"
#include "poly.hpp"

namespace gfroots {

class ParseError final : public Error {
public:
    using Error::Error;
};

struct PolyFile {
    unsigned field_bits = 0;
    Polynomial poly;
};

namespace detail {

inline GfElement parse_hex_coeff(const std::string& s, unsigned bits, const char* where)
{
    if (s.empty() || s.size() > 4)
        throw ParseError(std::string(where) + ": bad hex coefficient '" + s + "'");
    std::uint32_t v = 0;
    for (char ch : s) {
        v <<= 4;
        if (ch >= '0' && ch <= '9')
            v |= static_cast<std::uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            v |= static_cast<std::uint32_t>(ch - 'a' + 10);
        else
            throw ParseError(std::string(where) + ": bad hex coefficient '" + s + "'");
    }
    if (v >= (1u << bits))
        throw ParseError(std::string(where) + ": coefficient '" + s + "' is not a GF(2^" +
                         std::to_string(bits) + ") element");
    return static_cast<GfElement>(v);
}

} // namespace detail

/// Lowercase hex of one element, zero padded to the field's nibble width.
inline std::string element_hex(GfElement v, unsigned bits)
{
    const unsigned width = std::min(4u, (bits + 3) / 4);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*x", static_cast<int>(width), v);
    return buf;
}

/// Parses the polynomial text format:
///   {"field_bits": n, "coeffs_hex": ["c0", "c1", ...]}
/// with lowercase hex strings, lowest degree first.
inline PolyFile polynomial_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field_bits") || !j.contains("coeffs_hex"))
        throw ParseError("polynomial JSON: expected object with field_bits and coeffs_hex");
    if (!j["field_bits"].is_number_unsigned())
        throw ParseError("polynomial JSON: field_bits must be an unsigned integer");
    const unsigned bits = j["field_bits"].get<unsigned>();
    if (bits < GaloisField::kMinBits || bits > GaloisField::kMaxBits)
        throw ParseError("polynomial JSON: field_bits must be in [4, 16]");
    if (!j["coeffs_hex"].is_array())
        throw ParseError("polynomial JSON: coeffs_hex must be an array");
    std::vector<GfElement> coeffs;
    std::size_t idx = 0;
    for (const auto& item : j["coeffs_hex"]) {
        const std::string where = "coeffs_hex[" + std::to_string(idx++) + "]";
        if (!item.is_string())
            throw ParseError(where + ": expected a hex string");
        coeffs.push_back(detail::parse_hex_coeff(item.get<std::string>(), bits, where.c_str()));
    }
    return {bits, Polynomial(std::move(coeffs))};
}

inline std::string polynomial_to_json(unsigned bits, const Polynomial& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (GfElement c : p.coeffs())
        arr.push_back(element_hex(c, bits));
    nlohmann::json j{{"field_bits", bits}, {"coeffs_hex", std::move(arr)}};
    return j.dump();
}

/// Parses the inline form "c0,c1,..." (hex, lowest degree first).
inline Polynomial polynomial_from_inline(const std::string& text, unsigned bits)
{
    std::vector<GfElement> coeffs;
    std::string cur;
    std::size_t idx = 0;
    auto flush = [&] {
        const std::string where = "inline coefficient " + std::to_string(idx++);
        coeffs.push_back(detail::parse_hex_coeff(cur, bits, where.c_str()));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (ch != ' ')
            cur += ch;
    }
    flush();
    return Polynomial(std::move(coeffs));
}

} // namespace gfroots

#endif
