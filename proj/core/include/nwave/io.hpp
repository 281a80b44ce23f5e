#pragma once

#include "nwave/spectral.hpp"
#include "nwave/verify.hpp"

#include <string>
#include <string_view>

namespace nwave {

/// Version written as the top-level "schema" of every document.
inline constexpr int kSchemaVersion = 1;

/// {"c": ["c1","c2"], "d": ["d1","d2"], "P": [{"pos":"2","w":"1"}], "Q": [...]}
/// Numbers are rational strings or JSON integers. "schema" is optional but
/// must be 1 when present. Throws InputError on malformed documents and
/// InvalidSpectralData when validation fails.
SpectralData parse_spectral(std::string_view text);
std::string spectral_to_json(const SpectralData& s);

/// Exact field configuration. Zero fields are "0"; others are
/// {"num": [{"c": "p/q", "e": ["a","b"]}, ...], "den": [...]} with "den"
/// omitted for denominator-free fields. Writing the parse of a written
/// document reproduces it byte for byte.
std::string config_to_json(const FieldConfig& cfg);
/// Throws InputError on malformed documents or missing fields.
FieldConfig config_from_json(std::string_view text);

std::string report_to_json(const Report& r);

/// Grid of nt x nx points from (t0, x0) to (t1, x1) inclusive, one CSV row
/// per point with header "t,x,<field>..."; pole values are empty cells.
/// Throws InputError when nt or nx is below 1.
std::string sample_csv(const FieldConfig& cfg, const Rational& t0, const Rational& t1,
                       const Rational& x0, const Rational& x1, int nt, int nx);

}  // namespace nwave
