#include "mcg/serialize.hpp"

#include <fstream>
#include <sstream>

namespace mcg {

std::string generator_token(Genus g, int slot) {
  const Generator gen = Generator::from_slot(g, slot);
  return (gen.kind == GenKind::A ? "A" : "B") + std::to_string(gen.index);
}

namespace {

Endo read_images(Genus g, const Json& images, const char* field) {
  if (!images.is_object()) throw ParseError(std::string("'") + field + "' must be an object");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(g.rank()));
  for (int s = 0; s < g.rank(); ++s) {
    const std::string tok = generator_token(g, s);
    auto it = images.find(tok);
    if (it == images.end()) throw ParseError(std::string("'") + field + "' has no image for " + tok);
    if (!it->is_string()) throw ParseError(std::string("'") + field + "." + tok + "' must be a string");
    out.push_back(Word::parse(g, it->get<std::string>()));
  }
  if (images.size() != static_cast<std::size_t>(g.rank())) {
    throw ParseError(std::string("'") + field + "' has keys that are not generators of genus " +
                     std::to_string(g.value()));
  }
  return Endo(g, std::move(out));
}

}  // namespace

MapFile read_map(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed map file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("map file must hold an object");
  if (!doc.contains("genus") || !doc["genus"].is_number_integer()) throw ParseError("missing integer 'genus'");
  if (!doc.contains("images")) throw ParseError("missing 'images'");

  std::optional<Genus> g;
  try {
    g.emplace(doc["genus"].get<int>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  MapFile out{read_images(*g, doc["images"], "images"), std::nullopt};
  if (doc.contains("inverse_images")) {
    Endo backward = read_images(*g, doc["inverse_images"], "inverse_images");
    try {
      out.certified.emplace(out.forward, std::move(backward));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("inverse_images rejected: ") + e.what());
    }
  }
  return out;
}

MapFile read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_map(buf.str());
}

Json map_to_json(const Endo& forward, const Endo* backward) {
  const Genus g = forward.genus();
  Json doc;
  doc["genus"] = g.value();
  Json images = Json::object();
  for (int s = 0; s < g.rank(); ++s) images[generator_token(g, s)] = forward.image(s).str();
  doc["images"] = std::move(images);
  if (backward) {
    Json inv = Json::object();
    for (int s = 0; s < g.rank(); ++s) inv[generator_token(g, s)] = backward->image(s).str();
    doc["inverse_images"] = std::move(inv);
  }
  return doc;
}

Json map_to_json(const Auto& a) { return map_to_json(a.forward(), &a.backward()); }

Json to_json(const HVec& v) {
  Json arr = Json::array();
  for (auto x : v.entries()) arr.push_back(x);
  return arr;
}

Json to_json(const SpMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QVec& v) {
  Json doc;
  Json lowest = Json::array();
  for (const auto& q : v.entries()) lowest.push_back(q.get_str());
  doc["lowest_terms"] = std::move(lowest);
  doc["denominator"] = v.canonical_denominator();
  Json nums = Json::array();
  for (const auto& n : v.numerators_over(v.canonical_denominator())) {
    if (n.fits_slong_p()) nums.push_back(n.get_si());
    else nums.push_back(n.get_str());
  }
  doc["numerators"] = std::move(nums);
  return doc;
}

}  // namespace mcg
