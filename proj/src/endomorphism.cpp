#include "mcg/endomorphism.hpp"

#include <stdexcept>

#include "mcg/homology.hpp"
#include "mcg/random.hpp"

namespace mcg {

Endo::Endo(Genus g, std::vector<Word> images) : genus_(g), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(g.rank())) {
    throw std::invalid_argument("an endomorphism needs exactly 2g generator images");
  }
  for (const Word& w : images_) require_same_genus(g, w.genus());
}

Endo Endo::identity(Genus g) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(g.rank()));
  for (int s = 0; s < g.rank(); ++s) images.push_back(Word::from_slot(g, s));
  return Endo(g, std::move(images));
}

bool Endo::is_identity() const { return *this == identity(genus_); }

Auto::Auto(Endo forward, Endo backward) : forward_(std::move(forward)), backward_(std::move(backward)) {
  require_same_genus(forward_.genus(), backward_.genus());
  if (!compose(forward_, backward_).is_identity() || !compose(backward_, forward_).is_identity()) {
    throw std::invalid_argument("supplied maps are not mutually inverse");
  }
}

Auto Auto::identity(Genus g) { return Auto(Endo::identity(g), Endo::identity(g), Trusted{}); }

// ---------------------------------------------------------------------------

Word apply(const Endo& phi, const Word& x) {
  require_same_genus(phi.genus(), x.genus());
  WordBuilder b(phi.genus());
  for (Letter l : x.letters()) {
    if (l.sign() > 0) b.append(phi.image(l.slot()));
    else b.append_inverse(phi.image(l.slot()));
  }
  return std::move(b).build();
}

Endo compose(const Endo& outer, const Endo& inner_map) {
  require_same_genus(outer.genus(), inner_map.genus());
  std::vector<Word> images;
  images.reserve(inner_map.images().size());
  for (const Word& w : inner_map.images()) images.push_back(apply(outer, w));
  return Endo(outer.genus(), std::move(images));
}

Auto compose(const Auto& outer, const Auto& inner_map) {
  return Auto(compose(outer.forward_, inner_map.forward_), compose(inner_map.backward_, outer.backward_),
              Auto::Trusted{});
}

Auto inner(const Word& x) {
  const Genus g = x.genus();
  std::vector<Word> fwd;
  std::vector<Word> bwd;
  for (int s = 0; s < g.rank(); ++s) {
    const Word gen = Word::from_slot(g, s);
    fwd.push_back(x * gen * x.inverse());
    bwd.push_back(x.inverse() * gen * x);
  }
  return Auto(Endo(g, std::move(fwd)), Endo(g, std::move(bwd)));
}

Auto jablow(Genus g) {
  const int n = g.value();
  auto A = [&](int k) { return Word::generator(g, {GenKind::A, k}); };
  auto B = [&](int k) { return Word::generator(g, {GenKind::B, k}); };
  // B_g B_{g-1} ... B_l
  auto descending_b = [&](int l) {
    WordBuilder b(g);
    for (int j = n; j >= l; --j) b.append(B(j));
    return std::move(b).build();
  };

  std::vector<Word> images(static_cast<std::size_t>(g.rank()), Word(g));
  for (int k = 1; k <= n; ++k) {
    WordBuilder a(g);
    for (int l = k; l <= n; ++l) {
      a.append(commutator(descending_b(l) * A(l), B(l))).append(B(l));
    }
    a.append_inverse(A(k));
    for (int l = k; l <= n; ++l) a.append_inverse(B(l));
    images[static_cast<std::size_t>(k - 1)] = std::move(a).build();

    images[static_cast<std::size_t>(n + k - 1)] = commutator(descending_b(k) * A(k), B(k).inverse()) * B(k).inverse();
  }
  Endo iota(g, std::move(images));
  // The involution is its own inverse; the Auto constructor checks iota o iota = id.
  return Auto(iota, iota);
}

bool in_M_g1(const Endo& phi) {
  const Word z = zeta(phi.genus());
  return apply(phi, z) == z;
}

std::optional<NWitness> in_N(const Endo& phi) {
  auto u = conjugator(apply(phi, zeta(phi.genus())), zeta(phi.genus()));
  if (!u) return std::nullopt;
  return NWitness{phi, std::move(*u)};
}

bool is_witness(const Endo& phi, const Word& u) {
  require_same_genus(phi.genus(), u.genus());
  const Word z = zeta(phi.genus());
  return apply(phi, z) == u * z * u.inverse();
}

// ---------------------------------------------------------------------------

std::vector<Twist> twist_catalog(Genus g) {
  std::vector<Twist> out;
  for (int k = 1; k <= g.value(); ++k) {
    const int sa = Generator{GenKind::A, k}.slot(g);
    const int sb = Generator{GenKind::B, k}.slot(g);
    const Word a = Word::from_slot(g, sa);
    const Word b = Word::from_slot(g, sb);

    auto with_image = [&](int slot, Word w) {
      Endo e = Endo::identity(g);
      std::vector<Word> images = e.images();
      images[static_cast<std::size_t>(slot)] = std::move(w);
      return Endo(g, std::move(images));
    };
    const Endo ta = with_image(sa, a * b);
    const Endo ta_inv = with_image(sa, a * b.inverse());
    const Endo tb = with_image(sb, b * a);
    const Endo tb_inv = with_image(sb, b * a.inverse());

    out.push_back({k, "a", Auto(ta, ta_inv)});
    out.push_back({k, "a-inv", Auto(ta_inv, ta)});
    out.push_back({k, "b", Auto(tb, tb_inv)});
    out.push_back({k, "b-inv", Auto(tb_inv, tb)});
  }
  for (const Twist& t : out) {
    if (!in_M_g1(t.map) || !is_symplectic(induced_matrix(t.map))) {
      throw std::logic_error("twist catalogue entry " + std::to_string(t.handle) + ":" + t.variant +
                             " failed verification");
    }
  }
  return out;
}

Auto twist(Genus g, int handle, const std::string& variant) {
  for (Twist& t : twist_catalog(g)) {
    if (t.handle == handle && t.variant == variant) return std::move(t.map);
  }
  throw std::invalid_argument("no twist " + std::to_string(handle) + ":" + variant + " in genus " +
                              std::to_string(g.value()));
}

Auto random_element(Genus g, int word_budget, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Twist> catalog = twist_catalog(g);
  Auto acc = Auto::identity(g);
  for (int i = 0; i < word_budget; ++i) {
    const auto pick = rng.below(10);
    if (pick < 6) {
      acc = compose(catalog[rng.below(catalog.size())].map, acc);
    } else if (pick < 9) {
      acc = compose(inner(random_word(g, 4, rng)), acc);
    } else {
      acc = compose(jablow(g), acc);
    }
  }
  return acc;
}

}  // namespace mcg
