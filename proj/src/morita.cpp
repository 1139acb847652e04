#include "mcg/morita.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

constexpr int kAlpha = 1;
constexpr int kBeta = 2;

void require_in_N(const Endo& phi) {
  if (!in_N(phi)) throw NotInN("map does not send zeta to a conjugate of zeta");
}

}  // namespace

TwoGenWord::TwoGenWord(const std::vector<int>& raw) {
  for (int l : raw) push(l);
}

void TwoGenWord::push(int letter) {
  if (letter != kAlpha && letter != -kAlpha && letter != kBeta && letter != -kBeta) {
    throw std::invalid_argument("two-generator letters are +-1 (alpha) and +-2 (beta)");
  }
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

TwoGenWord TwoGenWord::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> raw;
  std::string tok;
  while (in >> tok) {
    if (tok == "A") raw.push_back(kAlpha);
    else if (tok == "a") raw.push_back(-kAlpha);
    else if (tok == "B") raw.push_back(kBeta);
    else if (tok == "b") raw.push_back(-kBeta);
    else if (tok == "1") continue;
    else throw ParseError("bad two-generator token '" + tok + "'");
  }
  return TwoGenWord(raw);
}

std::string TwoGenWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += l == kAlpha ? "A" : l == -kAlpha ? "a" : l == kBeta ? "B" : "b";
  }
  return s;
}

// ---------------------------------------------------------------------------

TwoGenWord project(int i, const Word& x) {
  const Genus g = x.genus();
  if (i < 1 || i > g.value()) throw std::out_of_range("projection index outside 1..g");
  const int sa = Generator{GenKind::A, i}.slot(g);
  const int sb = Generator{GenKind::B, i}.slot(g);
  TwoGenWord out;
  for (Letter l : x.letters()) {
    if (l.slot() == sa) out.push(l.sign() * kAlpha);
    else if (l.slot() == sb) out.push(l.sign() * kBeta);
  }
  return out;
}

std::vector<Syllable> syllables(const TwoGenWord& x) {
  std::vector<Syllable> out;
  const auto& ls = x.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    Syllable s{0, 0};
    if (ls[i] == kAlpha || ls[i] == -kAlpha) {
      s.eps = ls[i] / kAlpha;
      ++i;
    }
    if (i < ls.size() && (ls[i] == kBeta || ls[i] == -kBeta)) {
      s.delta = ls[i] / kBeta;
      ++i;
    }
    out.push_back(s);
  }
  return out;
}

std::int64_t d2(const TwoGenWord& x) {
  const auto syl = syllables(x);
  // Walk from the right, keeping suffix sums of delta (l >= k) and eps (l > k).
  std::int64_t delta_from_k = 0;
  std::int64_t eps_after_k = 0;
  std::int64_t d = 0;
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    delta_from_k += it->delta;
    d += it->eps * delta_from_k - it->delta * eps_after_k;
    eps_after_k += it->eps;
  }
  return d;
}

std::int64_t dF(const Word& x) {
  std::int64_t d = 0;
  for (int i = 1; i <= x.genus().value(); ++i) d = checked::add(d, d2(project(i, x)));
  return d;
}

std::int64_t f_tilde_at(const Endo& phi, const Word& x) {
  require_in_N(phi);
  return dF(apply(phi, x)) - dF(x);
}

HVec f_tilde_unchecked(const Endo& phi) {
  const Genus g = phi.genus();
  std::vector<std::int64_t> values(static_cast<std::size_t>(g.rank()));
  for (int s = 0; s < g.rank(); ++s) {
    // d(generator) = 0
    values[static_cast<std::size_t>(s)] = dF(phi.image(s));
  }
  return dual(g, values);
}

HVec f_tilde(const Endo& phi) {
  require_in_N(phi);
  return f_tilde_unchecked(phi);
}

HVec morita_f(const NWitness& w) {
  if (!is_witness(w.element, w.conjugator)) {
    throw std::invalid_argument("conjugator " + w.conjugator.str() + " is not a witness for this map");
  }
  const Genus g = w.element.genus();
  const SpMat rho_inv = induced_matrix(w.element).inverse();
  return f_tilde_unchecked(w.element) - static_cast<std::int64_t>(g.rank()) * (rho_inv * abelianize(w.conjugator));
}

HVec morita_f(const Endo& phi) {
  auto w = in_N(phi);
  if (!w) throw NotInN("map does not send zeta to a conjugate of zeta");
  return morita_f(*w);
}

}  // namespace mcg
