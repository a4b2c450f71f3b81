#include "cotlsa/serialize.hpp"

#include <algorithm>
#include <json.hpp>

#include "cotlsa/errors.hpp"

namespace cotlsa {

using Json = nlohmann::json;

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_text(std::string_view text) {
    try {
        Json j = Json::parse(text);
        if (!j.is_object()) throw ParseError("artifact must be a JSON object");
        return j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

Scalar read_scalar(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("scalars must be \"p/q\" strings");
}

std::size_t read_index(const Json& j, std::size_t dim) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("indices must be non-negative integers");
    const auto v = j.get<std::size_t>();
    if (v >= dim) throw ParseError("index " + std::to_string(v) + " out of range");
    return v;
}

unsigned read_n(const Json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 2) throw ParseError("family n must be an integer >= 2");
    return j.get<unsigned>();
}

Json algebra_block(const LieAlgebra& L) {
    Json labels = Json::array();
    for (const auto& l : L.labels()) labels.push_back(l.str());
    Json brackets = Json::array();
    for (const auto& c : L.constants())  // already sorted by (i, j, k)
        brackets.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"c", c.c.str()}});
    return {{"dim", L.dim()}, {"labels", labels}, {"brackets", brackets}};
}

LieAlgebra read_algebra(const Json& j) {
    const Json& dim_j = field(j, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() < 0) throw ParseError("dim must be a non-negative integer");
    const auto dim = dim_j.get<std::size_t>();
    const Json& labels_j = field(j, "labels");
    if (!labels_j.is_array() || labels_j.size() != dim) throw ParseError("labels must list dim names");
    std::vector<BasisLabel> labels;
    for (const auto& l : labels_j) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        labels.push_back(BasisLabel::parse(l.get<std::string>()));
    }
    const Json& br = field(j, "brackets");
    if (!br.is_array()) throw ParseError("brackets must be an array");
    std::vector<StructureConstant> constants;
    for (const auto& e : br) {
        if (!e.is_object()) throw ParseError("bracket entries must be objects");
        const auto i = read_index(field(e, "i"), dim);
        const auto jj = read_index(field(e, "j"), dim);
        const auto k = read_index(field(e, "k"), dim);
        if (i >= jj) throw ParseError("bracket entries need i < j");
        constants.push_back({i, jj, k, read_scalar(field(e, "c"))});
    }
    return LieAlgebra(std::move(labels), std::move(constants));
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed artifact: ") + e.what());
    }
}

}  // namespace

std::string to_string(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::Algebra: return "algebra";
        case ArtifactKind::Lsa: return "lsa";
        case ArtifactKind::Form: return "form";
    }
    return "algebra";
}

std::string to_json(const LieAlgebra& L) {
    Json j = algebra_block(L);
    j["kind"] = "algebra";
    return dump(j);
}

std::string to_json(const LsaProduct& S, const std::optional<FamilyParams>& family) {
    Json j = algebra_block(S.base());
    j["kind"] = "lsa";
    Json products = Json::array();
    for (const auto& e : S.entries()) products.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"p", e.p.str()}});
    j["products"] = products;
    if (family) j["family"] = {{"n", family->n}, {"alpha", family->alpha.str()}, {"beta", family->beta.str()}};
    return dump(j);
}

std::string to_json(const TwoForm& w, const std::optional<LambdaParams>& family) {
    Json j = algebra_block(w.base());
    j["kind"] = "form";
    Json omega = Json::array();
    for (std::size_t a = 0; a < w.dim(); ++a)
        for (std::size_t b = a + 1; b < w.dim(); ++b)
            if (!w(a, b).is_zero()) omega.push_back({{"i", a}, {"j", b}, {"w", w(a, b).str()}});
    j["omega"] = omega;
    if (family) j["family"] = {{"n", family->n}, {"lambda", family->lambda.str()}};
    return dump(j);
}

std::string to_json(const HomothetyCertificate& cert) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < cert.phi.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < cert.phi.cols(); ++c) row.push_back(cert.phi(r, c).str());
        rows.push_back(row);
    }
    return dump({{"phi", rows}, {"c", cert.c.str()}});
}

ArtifactKind peek_kind(std::string_view text) {
    const Json j = parse_text(text);
    return guarded([&] {
        if (const auto it = j.find("kind"); it != j.end()) {
            const auto k = it->get<std::string>();
            if (k == "algebra") return ArtifactKind::Algebra;
            if (k == "lsa") return ArtifactKind::Lsa;
            if (k == "form") return ArtifactKind::Form;
            throw ParseError("unknown artifact kind \"" + k + "\"");
        }
        if (j.contains("omega")) return ArtifactKind::Form;
        if (j.contains("products")) return ArtifactKind::Lsa;
        return ArtifactKind::Algebra;
    });
}

LieAlgebra parse_algebra(std::string_view text) {
    const Json j = parse_text(text);
    return guarded([&] { return read_algebra(j); });
}

LsaArtifact parse_lsa(std::string_view text) {
    const Json j = parse_text(text);
    return guarded([&] {
        LieAlgebra L = read_algebra(j);
        const std::size_t dim = L.dim();
        const Json& pr = field(j, "products");
        if (!pr.is_array()) throw ParseError("products must be an array");
        std::vector<ProductEntry> entries;
        for (const auto& e : pr) {
            if (!e.is_object()) throw ParseError("product entries must be objects");
            entries.push_back({read_index(field(e, "i"), dim), read_index(field(e, "j"), dim),
                               read_index(field(e, "k"), dim), read_scalar(field(e, "p"))});
        }
        std::optional<FamilyParams> family;
        if (const auto it = j.find("family"); it != j.end())
            family = FamilyParams{read_n(field(*it, "n")), read_scalar(field(*it, "alpha")),
                                  read_scalar(field(*it, "beta"))};
        return LsaArtifact{LsaProduct(std::move(L), std::move(entries)), std::move(family)};
    });
}

FormArtifact parse_form(std::string_view text) {
    const Json j = parse_text(text);
    return guarded([&] {
        LieAlgebra L = read_algebra(j);
        const std::size_t dim = L.dim();
        const Json& om = field(j, "omega");
        if (!om.is_array()) throw ParseError("omega must be an array");
        std::vector<FormEntry> upper;
        for (const auto& e : om) {
            if (!e.is_object()) throw ParseError("omega entries must be objects");
            upper.push_back({read_index(field(e, "i"), dim), read_index(field(e, "j"), dim), read_scalar(field(e, "w"))});
        }
        std::optional<LambdaParams> family;
        if (const auto it = j.find("family"); it != j.end())
            family = LambdaParams{read_n(field(*it, "n")), read_scalar(field(*it, "lambda"))};
        return FormArtifact{TwoForm::from_upper(std::move(L), upper), std::move(family)};
    });
}

HomothetyCertificate parse_certificate(std::string_view text) {
    const Json j = parse_text(text);
    return guarded([&] {
        const Json& rows = field(j, "phi");
        if (!rows.is_array() || rows.empty()) throw ParseError("phi must be a non-empty matrix");
        const std::size_t n = rows.size();
        Matrix phi(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!rows[r].is_array() || rows[r].size() != n) throw ParseError("phi must be square");
            for (std::size_t c = 0; c < n; ++c) phi(r, c) = read_scalar(rows[r][c]);
        }
        Scalar scale(1);
        if (const auto it = j.find("c"); it != j.end()) scale = read_scalar(*it);
        return HomothetyCertificate{std::move(phi), scale};
    });
}

}  // namespace cotlsa
