#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cotlsa/algebra.hpp"
#include "cotlsa/families.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/symplectic.hpp"

namespace cotlsa {

// Artifacts are single JSON objects with sorted keys, triplet lists sorted
// by (i, j, k), scalars as "p/q" strings, no whitespace, and one trailing
// newline. Equal objects therefore serialize to identical bytes.

enum class ArtifactKind { Algebra, Lsa, Form };
std::string to_string(ArtifactKind k);

struct LsaArtifact {
    LsaProduct product;
    std::optional<FamilyParams> family;
};

struct FormArtifact {
    TwoForm form;
    std::optional<LambdaParams> family;
};

std::string to_json(const LieAlgebra& L);
std::string to_json(const LsaProduct& S, const std::optional<FamilyParams>& family = std::nullopt);
std::string to_json(const TwoForm& w, const std::optional<LambdaParams>& family = std::nullopt);
std::string to_json(const HomothetyCertificate& cert);

/// Uses "kind" when present, otherwise the presence of "omega" or "products".
ArtifactKind peek_kind(std::string_view text);

// All parsers throw ParseError on malformed input.
LieAlgebra parse_algebra(std::string_view text);
LsaArtifact parse_lsa(std::string_view text);
FormArtifact parse_form(std::string_view text);
HomothetyCertificate parse_certificate(std::string_view text);

}  // namespace cotlsa
