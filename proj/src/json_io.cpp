#include "apw/json_io.hpp"

namespace apw {

void check_fields(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw ParseError(std::string(where) + ": unknown field \"" + it.key() + "\"");
    }
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j, const char* where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError(std::string(where) + ": rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Json basis_to_json(const FrequencyBasis& b) {
    Json rows = Json::array();
    for (int i = 0; i < b.dim_k(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < b.rank_r(); ++j) row.push_back(rational_to_json(b.columns()(i, j)));
        rows.push_back(row);
    }
    return rows;
}

BasisPtr basis_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("basis: expected a non-empty array of rows");
    int k = static_cast<int>(j.size());
    int r = static_cast<int>(j.at(0).size());
    RationalMatrix m(k, r);
    for (int i = 0; i < k; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != r)
            throw ParseError("basis: ragged rows");
        for (int c = 0; c < r; ++c) m(i, c) = rational_from_json(row.at(c), "basis");
    }
    return FrequencyBasis::make(k, std::move(m));
}

Json poly_to_json(const ApPoly& f) {
    Json j;
    j["basis"] = basis_to_json(*f.basis());
    Json terms = Json::array();
    for (const auto& [c, v] : f.terms()) {
        Json t;
        t["coord"] = c;
        t["re"] = v.real();
        t["im"] = v.imag();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

ApPoly poly_from_json(const Json& j) {
    check_fields(j, {"basis", "terms"}, "polynomial");
    if (!j.contains("basis") || !j.contains("terms"))
        throw ParseError("polynomial: needs \"basis\" and \"terms\"");
    BasisPtr basis = basis_from_json(j.at("basis"));
    std::vector<std::pair<Coords, Cplx>> terms;
    for (const Json& t : j.at("terms")) {
        check_fields(t, {"coord", "re", "im"}, "term");
        if (!t.contains("coord") || !t.contains("re") || !t.contains("im"))
            throw ParseError("term: needs \"coord\", \"re\", \"im\"");
        Coords c = t.at("coord").get<Coords>();
        terms.emplace_back(c, Cplx(t.at("re").get<double>(), t.at("im").get<double>()));
    }
    return ApPoly::make(basis, terms);
}

Json matrix_to_json(const ApMatrix& g) {
    Json j;
    j["m"] = g.rows();
    j["n"] = g.cols();
    Json entries = Json::array();
    for (int i = 0; i < g.rows(); ++i)
        for (int c = 0; c < g.cols(); ++c) entries.push_back(poly_to_json(g.at(i, c)));
    j["entries"] = entries;
    return j;
}

ApMatrix matrix_from_json(const Json& j) {
    check_fields(j, {"m", "n", "entries"}, "matrix");
    if (!j.contains("m") || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix: needs \"m\", \"n\", \"entries\"");
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != m * n)
        throw ParseError("matrix: entries must be a row-major list of length m*n");
    std::vector<ApPoly> polys;
    polys.reserve(entries.size());
    for (const Json& e : entries) polys.push_back(poly_from_json(e));
    for (size_t i = 1; i < polys.size(); ++i)
        require_same_basis(polys[0].basis(), polys[i].basis(), "matrix entries");
    return ApMatrix::from_entries(m, n, std::move(polys));
}

Json halfspace_to_json(const Halfspace& s) {
    Json rows = Json::array();
    for (int i = 0; i < s.dim_k(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.dim_k(); ++j) row.push_back(rational_to_json(s.Z()(i, j)));
        rows.push_back(row);
    }
    Json j;
    j["Z"] = rows;
    return j;
}

HalfspacePtr halfspace_from_json(const Json& j) {
    check_fields(j, {"Z"}, "halfspace");
    if (!j.contains("Z")) throw ParseError("halfspace: needs \"Z\"");
    const Json& rows = j.at("Z");
    if (!rows.is_array() || rows.empty()) throw ParseError("halfspace: Z must be a square array");
    int k = static_cast<int>(rows.size());
    RationalMatrix z(k, k);
    for (int i = 0; i < k; ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw ParseError("halfspace: Z must be a square array");
        for (int c = 0; c < k; ++c) z(i, c) = rational_from_json(row.at(c), "halfspace");
    }
    return Halfspace::make(k, std::move(z));
}

namespace {
const std::pair<MaskKind, const char*> kMaskNames[] = {
    {MaskKind::S, "S"},
    {MaskKind::SMinusZero, "S_minus_zero"},
    {MaskKind::MinusS, "minus_S"},
    {MaskKind::MinusSMinusZero, "minus_S_minus_zero"},
    {MaskKind::VCap, "V_cap"},
    {MaskKind::ZeroOnly, "zero_only"},
};
} // namespace

Json mask_kind_to_json(MaskKind kind) {
    for (const auto& [k, name] : kMaskNames)
        if (k == kind) return Json(name);
    throw DomainError("mask kind is not serializable");
}

MaskKind mask_kind_from_json(const Json& j) {
    Json kind = j;
    if (j.is_object()) {
        check_fields(j, {"kind"}, "mask");
        if (!j.contains("kind")) throw ParseError("mask: needs \"kind\"");
        kind = j.at("kind");
    }
    if (!kind.is_string()) throw ParseError("mask kind must be a string");
    for (const auto& [k, name] : kMaskNames)
        if (kind.get<std::string>() == name) return k;
    throw ParseError("unknown mask kind \"" + kind.get<std::string>() + "\"");
}

Json factorization_to_json(const ApFactorization& f) {
    Json j;
    j["g_plus"] = matrix_to_json(f.g_plus);
    Json idx = Json::array();
    for (const Coords& c : f.indices) idx.push_back(c);
    j["indices"] = idx;
    j["g_minus"] = matrix_to_json(f.g_minus);
    j["residual"] = f.residual;
    return j;
}

ApFactorization factorization_from_json(const Json& j, const HalfspacePtr& S) {
    check_fields(j, {"g_plus", "indices", "g_minus", "residual"}, "factorization");
    for (const char* f : {"g_plus", "indices", "g_minus", "residual"})
        if (!j.contains(f))
            throw ParseError(std::string("factorization: needs \"") + f + "\"");
    ApFactorization f;
    f.g_plus = matrix_from_json(j.at("g_plus"));
    f.g_minus = matrix_from_json(j.at("g_minus"));
    for (const Json& c : j.at("indices")) f.indices.push_back(c.get<Coords>());
    f.residual = j.at("residual").get<double>();
    f.halfspace = S;
    f.p = static_cast<int>(f.indices.size());
    if (f.g_plus.cols() != f.p || f.g_minus.rows() != f.p)
        throw ParseError("factorization: inner dimensions disagree with the index count");
    return f;
}

Json corona_solution_to_json(const CoronaSolution& s) {
    Json j;
    j["m"] = s.m;
    j["p"] = s.p;
    j["gamma"] = s.gamma;
    j["S"] = halfspace_to_json(*s.S);
    j["C"] = matrix_to_json(s.C);
    j["D"] = matrix_to_json(s.D);
    j["R"] = matrix_to_json(s.R);
    j["J0"] = s.J0;
    if (s.Theta11) j["Theta11"] = matrix_to_json(*s.Theta11);
    j["Theta12"] = matrix_to_json(s.Theta12);
    if (s.Theta21) j["Theta21"] = matrix_to_json(*s.Theta21);
    j["Theta22"] = matrix_to_json(s.Theta22);
    j["F0"] = matrix_to_json(s.F0);
    Json res;
    for (const auto& [k, v] : s.residuals) res[k] = v;
    j["residuals"] = res;
    return j;
}

CoronaSolution corona_solution_from_json(const Json& j) {
    check_fields(j,
                 {"m", "p", "gamma", "S", "C", "D", "R", "J0", "Theta11", "Theta12", "Theta21",
                  "Theta22", "F0", "residuals"},
                 "corona solution");
    for (const char* f : {"m", "p", "gamma", "S", "C", "D", "R", "J0", "Theta12", "Theta22", "F0"})
        if (!j.contains(f))
            throw ParseError(std::string("corona solution: needs \"") + f + "\"");
    CoronaSolution s;
    s.m = j.at("m").get<int>();
    s.p = j.at("p").get<int>();
    s.gamma = j.at("gamma").get<double>();
    s.S = halfspace_from_json(j.at("S"));
    s.C = matrix_from_json(j.at("C"));
    s.D = matrix_from_json(j.at("D"));
    s.R = matrix_from_json(j.at("R"));
    s.J0 = j.at("J0").get<std::vector<int>>();
    if (j.contains("Theta11")) s.Theta11 = matrix_from_json(j.at("Theta11"));
    s.Theta12 = matrix_from_json(j.at("Theta12"));
    if (j.contains("Theta21")) s.Theta21 = matrix_from_json(j.at("Theta21"));
    s.Theta22 = matrix_from_json(j.at("Theta22"));
    s.F0 = matrix_from_json(j.at("F0"));
    if (j.contains("residuals"))
        for (auto it = j.at("residuals").begin(); it != j.at("residuals").end(); ++it)
            s.residuals[it.key()] = it.value().get<double>();
    return s;
}

Json make_document(Json payload) {
    Json doc;
    doc["apw_schema"] = kSchemaVersion;
    for (auto it = payload.begin(); it != payload.end(); ++it) doc[it.key()] = it.value();
    return doc;
}

Json open_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    if (!doc.contains("apw_schema"))
        throw ParseError("document: missing required field \"apw_schema\"");
    if (doc.at("apw_schema") != kSchemaVersion)
        throw ParseError("document: unsupported apw_schema version");
    Json payload = doc;
    payload.erase("apw_schema");
    return payload;
}

} // namespace apw
