#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"

namespace mcg {

/// Exact rational vector of length 2g; values of psi live in (1/(2g-2)) H.
class QVec {
 public:
  explicit QVec(Genus g) : genus_(g), v_(static_cast<std::size_t>(g.rank())) {}
  QVec(Genus g, std::vector<mpq_class> entries);
  explicit QVec(const HVec& h);

  Genus genus() const { return genus_; }
  const std::vector<mpq_class>& entries() const { return v_; }
  const mpq_class& operator[](std::size_t i) const { return v_[i]; }
  mpq_class& operator[](std::size_t i) { return v_[i]; }
  std::size_t size() const { return v_.size(); }
  bool is_zero() const;

  /// Entries times 2g-2; throws std::domain_error if any is not an integer.
  std::vector<mpz_class> numerators_over(long denominator) const;
  /// Canonical denominator 2g-2.
  long canonical_denominator() const { return 2L * genus_.value() - 2; }
  bool has_canonical_denominator() const;

  QVec& operator+=(const QVec& o);
  QVec& operator-=(const QVec& o);
  friend QVec operator+(QVec a, const QVec& b) { return a += b; }
  friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
  friend QVec operator*(const mpq_class& s, QVec a);
  friend QVec operator*(const SpMat& m, const QVec& x);
  friend bool operator==(const QVec& a, const QVec& b);

  /// "(p/q, ...)" in lowest terms.
  std::string str() const;
  /// "(1/q)(n_1, ...)" over the canonical denominator.
  std::string str_canonical() const;

 private:
  Genus genus_;
  std::vector<mpq_class> v_;
};

/// (1/(2g-2)) (0,...,0, 2,...,2).
QVec a0(Genus g);

/// rho(phi)^-1 a0 - a0. Throws NotInN unless phi is in N.
QVec coboundary_a0(const Endo& phi);

/// psi = -f/(2g-2) + delta a0. Throws NotInN unless phi is in N.
QVec earle_psi(const Endo& phi);
QVec earle_psi(const NWitness& w);

}  // namespace mcg
