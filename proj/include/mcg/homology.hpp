#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcg/word.hpp"

namespace mcg {

class Endo;

/// Raised when an integer computation would leave the int64 range.
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

/// Element of H = Z^{2g}, coordinates in the basis [A_1],...,[A_g],[B_1],...,[B_g].
class HVec {
 public:
  explicit HVec(Genus g) : genus_(g), v_(static_cast<std::size_t>(g.rank()), 0) {}
  HVec(Genus g, std::vector<std::int64_t> entries);
  static HVec basis(Genus g, int slot);

  Genus genus() const { return genus_; }
  std::span<const std::int64_t> entries() const { return v_; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  std::size_t size() const { return v_.size(); }
  bool is_zero() const;

  HVec& operator+=(const HVec& o);
  HVec& operator-=(const HVec& o);
  friend HVec operator+(HVec a, const HVec& b) { return a += b; }
  friend HVec operator-(HVec a, const HVec& b) { return a -= b; }
  friend HVec operator-(HVec a);
  friend HVec operator*(std::int64_t s, HVec a);
  friend bool operator==(const HVec&, const HVec&) = default;

  std::string str() const;

 private:
  Genus genus_;
  std::vector<std::int64_t> v_;
};

/// 2g x 2g integer matrix acting on column vectors of H. Row-major storage.
class SpMat {
 public:
  explicit SpMat(Genus g) : genus_(g), m_(static_cast<std::size_t>(g.rank() * g.rank()), 0) {}
  SpMat(Genus g, std::vector<std::int64_t> row_major);
  static SpMat identity(Genus g);
  /// The intersection matrix: +I upper right, -I lower left.
  static SpMat form(Genus g);

  Genus genus() const { return genus_; }
  int dim() const { return genus_.rank(); }
  std::int64_t operator()(int r, int c) const { return m_[static_cast<std::size_t>(r * dim() + c)]; }
  std::int64_t& operator()(int r, int c) { return m_[static_cast<std::size_t>(r * dim() + c)]; }
  std::span<const std::int64_t> row_major() const { return m_; }

  SpMat transpose() const;
  friend SpMat operator*(const SpMat& a, const SpMat& b);
  friend HVec operator*(const SpMat& a, const HVec& x);
  friend SpMat operator-(SpMat a);
  friend bool operator==(const SpMat&, const SpMat&) = default;

  /// Exact integer inverse; throws std::domain_error unless det = +-1.
  SpMat inverse() const;
  /// Exact determinant (Bareiss elimination over arbitrary precision integers).
  std::int64_t determinant() const;

 private:
  Genus genus_;
  std::vector<std::int64_t> m_;
};

/// The abelianization F -> H: signed letter counts.
HVec abelianize(const Word& x);

/// Intersection number x^T J y, with [A_i].[B_i] = +1.
std::int64_t intersection(const HVec& x, const HVec& y);

/// Poincare dual of the functional whose values on the basis are `values`:
/// the unique a with intersection(a, e_j) = values[j] for every j.
HVec dual(Genus g, std::span<const std::int64_t> values);

/// Matrix whose j-th column is the abelianized image of the j-th generator.
SpMat induced_matrix(const Endo& phi);

/// M^T J M == J.
bool is_symplectic(const SpMat& m);

}  // namespace mcg
