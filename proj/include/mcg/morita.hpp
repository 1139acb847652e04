#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"
#include "mcg/word.hpp"

namespace mcg {

/// Raised when a cocycle is evaluated on a map that does not send zeta to a conjugate of zeta.
class NotInN : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced word in the rank-two free group F(alpha, beta).
/// Letters are +-1 for alpha^{+-1} and +-2 for beta^{+-1}.
class TwoGenWord {
 public:
  TwoGenWord() = default;
  /// Reduces the raw letter sequence; every entry must be one of +-1, +-2.
  explicit TwoGenWord(const std::vector<int>& raw);
  static TwoGenWord parse(const std::string& text);  // "A" alpha, "a" alpha^-1, "B" beta, "b" beta^-1

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  void push(int letter);
  std::string str() const;

  friend bool operator==(const TwoGenWord&, const TwoGenWord&) = default;

 private:
  std::vector<int> letters_;
};

/// One factor alpha^eps beta^delta of the normal form.
struct Syllable {
  int eps;
  int delta;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// p_i: A_i -> alpha, B_i -> beta, every other generator -> 1.
TwoGenWord project(int i, const Word& x);

/// Greedy decomposition x = alpha^{e1} beta^{d1} ... alpha^{en} beta^{dn}, e,d in {-1,0,1}.
std::vector<Syllable> syllables(const TwoGenWord& x);

/// sum_k e_k sum_{l>=k} d_l - sum_k d_k sum_{l>k} e_l.
std::int64_t d2(const TwoGenWord& x);

/// Sum over the handles of d2 of the projections.
std::int64_t dF(const Word& x);

/// d(phi(x)) - d(x). Throws NotInN unless phi is in N.
std::int64_t f_tilde_at(const Endo& phi, const Word& x);

/// The cocycle on N, as the dual of y -> f_tilde_at(phi, y).
HVec f_tilde(const Endo& phi);

/// Morita's cocycle on the image of phi in M_{g,*}.
///
/// With phi(zeta) = u zeta u^-1 we split phi = inner(u) o phi1, phi1 in M_{g,1}.
/// The cocycle rule, the value (2 - 2g)[u] on inner automorphisms, and
/// f_tilde(inner(x)) = 2[x] then give
///
///   f(phi) = f_tilde(phi) - 2g rho(phi)^-1 [u].
///
/// The answer does not depend on which witness u is used.
HVec morita_f(const Endo& phi);
/// Same, with a caller-chosen witness; throws std::invalid_argument if u does not conjugate zeta to phi(zeta).
HVec morita_f(const NWitness& w);

/// f_tilde without the membership check, for callers that already hold a witness.
HVec f_tilde_unchecked(const Endo& phi);

}  // namespace mcg
