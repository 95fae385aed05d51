#include "ncx/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

namespace ncx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Rat entry_from_json(const json& v) {
    if (v.is_number_integer())
        return Rat(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw ParseError("bad matrix entry \"" + v.get<std::string>() + "\"");
        r.canonicalize();
        return r;
    }
    throw ParseError("matrix entries must be integers or \"a/b\" strings");
}

ordered_json entry_to_json(const Rat& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p())
        return ordered_json(x.get_num().get_si());
    return ordered_json(x.get_str());
}

ExactMatrix matrix_from_json(const json& v, const CoefficientDomain& dom, std::size_t rows, std::size_t cols,
                             int degree) {
    if (!v.is_array() || v.size() != rows)
        throw ParseError("matrix at degree " + std::to_string(degree) + " must have " + std::to_string(rows) +
                         " rows");
    ExactMatrix m(dom, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix at degree " + std::to_string(degree) + " must have " + std::to_string(cols) +
                             " columns per row");
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, entry_from_json(row[j]));
    }
    return m;
}

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(entry_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

int degree_key(const std::string& key) {
    try {
        std::size_t pos = 0;
        int d = std::stoi(key, &pos);
        if (pos != key.size())
            throw std::invalid_argument(key);
        return d;
    } catch (const std::exception&) {
        throw ParseError("degree keys must be integers, got \"" + key + "\"");
    }
}

struct RawComplex {
    int n;
    CoefficientDomain dom;
    int lo;
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;
};

RawComplex complex_body_from_json(const json& j, int n, const CoefficientDomain& dom) {
    if (!j.contains("objects") || !j["objects"].is_object())
        throw ParseError("missing \"objects\" map");
    std::map<int, std::size_t> objects;
    for (const auto& [key, val] : j["objects"].items()) {
        if (!val.is_number_unsigned() && !val.is_number_integer())
            throw ParseError("object dimension at degree " + key + " must be a nonnegative integer");
        long long d = val.get<long long>();
        if (d < 0)
            throw ParseError("object dimension at degree " + key + " must be nonnegative");
        objects[degree_key(key)] = static_cast<std::size_t>(d);
    }

    RawComplex out{n, dom, 0, {}, {}};
    if (objects.empty())
        return out;
    out.lo = objects.begin()->first;
    int hi = objects.rbegin()->first;
    for (int i = out.lo; i <= hi; ++i) {
        auto it = objects.find(i);
        out.dims.push_back(it == objects.end() ? 0 : it->second);
    }

    std::map<int, const json*> diffs;
    if (j.contains("diff")) {
        if (!j["diff"].is_object())
            throw ParseError("\"diff\" must be a degree -> matrix map");
        for (const auto& [key, val] : j["diff"].items())
            diffs[degree_key(key)] = &val;
    }
    auto dim_at = [&](int i) -> std::size_t {
        if (i < out.lo || i > hi)
            return 0;
        return out.dims[static_cast<std::size_t>(i - out.lo)];
    };
    for (const auto& kv : diffs)
        if (kv.first < out.lo || kv.first >= hi)
            throw ParseError("differential at degree " + std::to_string(kv.first) + " is outside the support");
    for (int i = out.lo; i < hi; ++i) {
        auto it = diffs.find(i);
        if (it == diffs.end())
            out.diffs.emplace_back(dom, dim_at(i + 1), dim_at(i));
        else
            out.diffs.push_back(matrix_from_json(*it->second, dom, dim_at(i + 1), dim_at(i), i));
    }
    return out;
}

NComplex complex_from_raw(const RawComplex& raw) {
    return NComplex(raw.n, raw.dom, raw.lo, raw.dims, raw.diffs);
}

void check_nilpotent(const NComplex& x) {
    if (std::optional<int> bad = first_nilpotency_failure(x))
        throw ValidationError("nonzero " + std::to_string(x.n()) + "-fold composite starting at degree " +
                              std::to_string(*bad));
}

std::pair<int, CoefficientDomain> header_from_json(const json& j) {
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw ParseError("missing integer field \"N\"");
    int n = j["N"].get<int>();
    if (!j.contains("coeff") || !j["coeff"].is_string())
        throw ParseError("missing string field \"coeff\"");
    return {n, domain_from_token(j["coeff"].get<std::string>())};
}

ordered_json complex_body_to_json(const NComplex& x) {
    ordered_json body;
    ordered_json objects = ordered_json::object();
    for (int i = x.lo(); i <= x.hi(); ++i)
        objects[std::to_string(i)] = x.dim_at(i);
    body["objects"] = std::move(objects);
    ordered_json diff = ordered_json::object();
    for (int i = x.lo(); i < x.hi(); ++i)
        diff[std::to_string(i)] = matrix_to_json(x.diff_at(i));
    body["diff"] = std::move(diff);
    return body;
}

NComplex complex_from_json(const json& j, bool check) {
    auto [n, dom] = header_from_json(j);
    NComplex x = complex_from_raw(complex_body_from_json(j, n, dom));
    if (check)
        check_nilpotent(x);
    return x;
}

ChainMap chain_map_from_json(const json& j, bool check) {
    auto [n, dom] = header_from_json(j);
    if (!j.contains("source") || !j.contains("target"))
        throw ParseError("chain-map document needs \"source\" and \"target\"");
    NComplex src = complex_from_raw(complex_body_from_json(j["source"], n, dom));
    NComplex tgt = complex_from_raw(complex_body_from_json(j["target"], n, dom));
    check_nilpotent(src);
    check_nilpotent(tgt);
    std::vector<std::pair<int, ExactMatrix>> comps;
    if (j.contains("components")) {
        if (!j["components"].is_object())
            throw ParseError("\"components\" must be a degree -> matrix map");
        for (const auto& [key, val] : j["components"].items()) {
            int d = degree_key(key);
            comps.emplace_back(d, matrix_from_json(val, dom, tgt.dim_at(d), src.dim_at(d), d));
        }
    }
    ChainMap f(std::move(src), std::move(tgt), std::move(comps));
    if (check && !f.commutes())
        throw ValidationError("components do not commute with the differentials");
    return f;
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace

std::string domain_token(const CoefficientDomain& dom) {
    switch (dom.kind()) {
    case DomainKind::Rationals:
        return "Q";
    case DomainKind::Integers:
        return "Z";
    case DomainKind::PrimeField:
        return "Fp:" + dom.modulus().get_str();
    }
    return "?";
}

CoefficientDomain domain_from_token(const std::string& token) {
    if (token == "Q")
        return CoefficientDomain::rationals();
    if (token == "Z")
        return CoefficientDomain::integers();
    if (token.rfind("Fp:", 0) == 0) {
        Int p;
        if (mpz_set_str(p.get_mpz_t(), token.substr(3).c_str(), 10) != 0)
            throw ParseError("bad coefficient token \"" + token + "\"");
        return CoefficientDomain::prime_field(p);
    }
    throw ParseError("coefficient domain must be \"Q\", \"Z\" or \"Fp:<p>\", got \"" + token + "\"");
}

DocKind peek_kind(const std::string& path) {
    json j = parse_file(path);
    if (j.contains("kind") && j["kind"].is_string() && j["kind"].get<std::string>() == "chainmap")
        return DocKind::ChainMap;
    return DocKind::Complex;
}

NComplex load_complex(const std::string& path) {
    return complex_from_json(parse_file(path), true);
}

NComplex load_complex_unchecked(const std::string& path) {
    return complex_from_json(parse_file(path), false);
}

ChainMap load_chain_map(const std::string& path) {
    return chain_map_from_json(parse_file(path), true);
}

ChainMap load_chain_map_unchecked(const std::string& path) {
    return chain_map_from_json(parse_file(path), false);
}

NComplex complex_from_json_string(const std::string& text, bool check_nilpotency) {
    try {
        return complex_from_json(json::parse(text), check_nilpotency);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

ChainMap chain_map_from_json_string(const std::string& text, bool check_commutation) {
    try {
        return chain_map_from_json(json::parse(text), check_commutation);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string to_json_string(const NComplex& x) {
    ordered_json j;
    j["format_version"] = "1";
    j["kind"] = "complex";
    j["N"] = x.n();
    j["coeff"] = domain_token(x.domain());
    ordered_json body = complex_body_to_json(x);
    j["objects"] = body["objects"];
    j["diff"] = body["diff"];
    return dump(j);
}

std::string to_json_string(const ChainMap& f) {
    ordered_json j;
    j["format_version"] = "1";
    j["kind"] = "chainmap";
    j["N"] = f.source().n();
    j["coeff"] = domain_token(f.source().domain());
    j["source"] = complex_body_to_json(f.source());
    j["target"] = complex_body_to_json(f.target());
    ordered_json comps = ordered_json::object();
    int a = std::max(f.source().lo(), f.target().lo());
    int b = std::min(f.source().hi(), f.target().hi());
    for (int i = a; i <= b; ++i)
        comps[std::to_string(i)] = matrix_to_json(f.component_at(i));
    j["components"] = std::move(comps);
    return dump(j);
}

void save_complex(const NComplex& x, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << to_json_string(x);
}

void save_chain_map(const ChainMap& f, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << to_json_string(f);
}

} // namespace ncx
