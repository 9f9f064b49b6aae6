#include "hbl/rmatrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hbl {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
    Scalar s;
    try {
        s = Scalar::parse(text);
    } catch (const ParseError& e) {
        throw FormatError("not a rational: '" + text + "': " + e.what());
    }
    if (!s.is_constant()) throw FormatError("not a rational: '" + text + "'");
    return s.constant_value();
}

namespace {

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

Scalar scalar_field(const json& v, const std::string& where) {
    if (!v.is_string()) throw FormatError(where + ": expected a string");
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError(where + ": " + e.what());
    }
}

}  // namespace

HeckeOperator parse_rmatrix(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("top level must be an object");

    HeckeOperator op;
    const json& name = field(doc, "name");
    if (!name.is_string()) throw FormatError("name: expected a string");
    op.name = name.get<std::string>();

    const json& d = field(doc, "d");
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw FormatError("d: expected a positive integer");
    op.d = d.get<std::size_t>();
    const std::size_t n = op.d * op.d;

    const json& param = field(doc, "parameter");
    if (!param.is_string()) throw FormatError("parameter: expected a string");
    std::optional<Rational> p0;
    if (param.get<std::string>() != "symbolic-p") p0 = parse_rational(param.get<std::string>());

    op.q = scalar_field(field(doc, "q"), "q");

    const json& entries = field(doc, "entries");
    if (!entries.is_array() || entries.size() != n)
        throw FormatError("entries: expected " + std::to_string(n) + " rows");
    op.r = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw FormatError("entries[" + std::to_string(i) + "]: expected " + std::to_string(n) + " columns");
        SparseRow<Scalar> sr;
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v = scalar_field(row[j], "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            if (!v.is_zero()) sr.push_back({static_cast<std::uint32_t>(j), std::move(v)});
        }
        op.r.set_row(i, std::move(sr));
    }
    if (auto it = doc.find("convention"); it != doc.end() && !it->is_string())
        throw FormatError("convention: expected a string");

    if (p0) {
        try {
            op = specialize(op, *p0);
        } catch (const PoleError& e) {
            throw FormatError(std::string("parameter: ") + e.what());
        }
        op.name = name.get<std::string>();
    }
    return op;
}

HeckeOperator load_rmatrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_rmatrix(ss.str());
}

std::string serialize_rmatrix(const HeckeOperator& op) {
    const std::size_t n = op.d * op.d;
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(op.r.at(i, j).to_string());
        entries.push_back(std::move(row));
    }
    json doc;
    doc["name"] = op.name;
    doc["d"] = op.d;
    doc["parameter"] = op.specialized_p ? to_string(*op.specialized_p) : std::string("symbolic-p");
    doc["q"] = op.q.to_string();
    doc["entries"] = std::move(entries);
    doc["convention"] = kConvention;
    return doc.dump(2) + "\n";
}

}  // namespace hbl
