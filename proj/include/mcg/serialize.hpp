#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "mcg/earle.hpp"
#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"

namespace mcg {

using Json = nlohmann::ordered_json;

/// Contents of an automorphism file. `certified` is set only when inverse
/// images were supplied and check out.
struct MapFile {
  Endo forward;
  std::optional<Auto> certified;
};

/// Token for a generator slot: "A1".."Ag", "B1".."Bg".
std::string generator_token(Genus g, int slot);

/// Reads
///   {"genus": g, "images": {"A1": "...", ...}, "inverse_images": {...}}
/// where every generator must have exactly one image. Throws ParseError.
MapFile read_map(const std::string& text);
MapFile read_map_file(const std::string& path);

Json map_to_json(const Endo& forward, const Endo* backward = nullptr);
Json map_to_json(const Auto& a);

Json to_json(const HVec& v);
/// Row-major nested integer arrays.
Json to_json(const SpMat& m);
/// {"lowest_terms": ["p/q", ...], "denominator": 2g-2, "numerators": [...]}
Json to_json(const QVec& v);

}  // namespace mcg
