#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcg/word.hpp"

namespace mcg {

/// Endomorphism of F given by the images of A_1..A_g, B_1..B_g (in slot order).
class Endo {
 public:
  Endo(Genus g, std::vector<Word> images);
  static Endo identity(Genus g);

  Genus genus() const { return genus_; }
  const Word& image(int slot) const { return images_.at(static_cast<std::size_t>(slot)); }
  const Word& image(Generator gen) const { return image(gen.slot(genus_)); }
  const std::vector<Word>& images() const { return images_; }

  bool is_identity() const;
  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  Genus genus_;
  std::vector<Word> images_;
};

/// Automorphism certified by an explicit two-sided inverse.
class Auto {
 public:
  /// Throws std::invalid_argument unless both composites fix every generator.
  Auto(Endo forward, Endo backward);
  static Auto identity(Genus g);

  Genus genus() const { return forward_.genus(); }
  const Endo& forward() const { return forward_; }
  const Endo& backward() const { return backward_; }
  Auto inverse() const { return Auto(backward_, forward_, Trusted{}); }

  /// Composite outer o inner_map; the right factor acts first.
  friend Auto compose(const Auto& outer, const Auto& inner_map);
  operator const Endo&() const { return forward_; }

 private:
  struct Trusted {};
  Auto(Endo forward, Endo backward, Trusted) : forward_(std::move(forward)), backward_(std::move(backward)) {}

  Endo forward_;
  Endo backward_;
};

/// Membership data for N: element(zeta) = conjugator * zeta * conjugator^-1.
struct NWitness {
  Endo element;
  Word conjugator;
};

/// Homomorphic extension of the generator images, freely reduced.
Word apply(const Endo& phi, const Word& x);

/// (outer o inner_map)(x) = outer(inner_map(x)).
Endo compose(const Endo& outer, const Endo& inner_map);
Auto compose(const Auto& outer, const Auto& inner_map);

/// y -> x y x^-1.
Auto inner(const Word& x);

/// Jablow's involution: an order-two automorphism acting as -I on homology,
/// with iota(zeta) = (B_g...B_1) zeta (B_g...B_1)^-1.
Auto jablow(Genus g);

/// phi(zeta) == zeta.
bool in_M_g1(const Endo& phi);

/// Witness u with phi(zeta) = u zeta u^-1, if any.
std::optional<NWitness> in_N(const Endo& phi);

/// Checks that u really conjugates zeta onto phi(zeta).
bool is_witness(const Endo& phi, const Word& u);

/// One entry of the test catalogue of zeta-preserving automorphisms.
struct Twist {
  int handle;           // k in 1..g
  std::string variant;  // "a", "a-inv", "b", "b-inv"
  Auto map;
};

/// For each handle k: A_k -> A_k B_k, B_k -> B_k A_k and their inverses.
/// Every entry is checked to fix zeta and to act symplectically.
std::vector<Twist> twist_catalog(Genus g);

/// Looks up a catalogue entry; throws std::invalid_argument if absent.
Auto twist(Genus g, int handle, const std::string& variant);

/// Deterministic pseudorandom element of N: a product of `word_budget` factors
/// drawn from the twist catalogue, inner automorphisms and iota.
Auto random_element(Genus g, int word_budget, std::uint64_t seed);

}  // namespace mcg
