#include "mcg/homology.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

#include "mcg/endomorphism.hpp"

namespace mcg {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 overflow in addition");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 overflow in multiplication");
  return r;
}

}  // namespace checked

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Overflow("value does not fit in int64");
  return z.get_si();
}

}  // namespace

// ---------------------------------------------------------------------------

HVec::HVec(Genus g, std::vector<std::int64_t> entries) : genus_(g), v_(std::move(entries)) {
  if (v_.size() != static_cast<std::size_t>(g.rank())) {
    throw std::invalid_argument("HVec needs exactly 2g entries");
  }
}

HVec HVec::basis(Genus g, int slot) {
  HVec e(g);
  e.v_.at(static_cast<std::size_t>(slot)) = 1;
  return e;
}

bool HVec::is_zero() const {
  for (auto x : v_) {
    if (x != 0) return false;
  }
  return true;
}

HVec& HVec::operator+=(const HVec& o) {
  require_same_genus(genus_, o.genus_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked::add(v_[i], o.v_[i]);
  return *this;
}

HVec& HVec::operator-=(const HVec& o) {
  require_same_genus(genus_, o.genus_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked::add(v_[i], checked::mul(-1, o.v_[i]));
  return *this;
}

HVec operator-(HVec a) { return -1 * std::move(a); }

HVec operator*(std::int64_t s, HVec a) {
  for (auto& x : a.v_) x = checked::mul(s, x);
  return a;
}

std::string HVec::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) out << (i ? ", " : "") << v_[i];
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

SpMat::SpMat(Genus g, std::vector<std::int64_t> row_major) : genus_(g), m_(std::move(row_major)) {
  if (m_.size() != static_cast<std::size_t>(g.rank() * g.rank())) {
    throw std::invalid_argument("SpMat needs (2g)^2 entries");
  }
}

SpMat SpMat::identity(Genus g) {
  SpMat m(g);
  for (int i = 0; i < m.dim(); ++i) m(i, i) = 1;
  return m;
}

SpMat SpMat::form(Genus g) {
  SpMat j(g);
  const int n = g.value();
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

SpMat SpMat::transpose() const {
  SpMat t(genus_);
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) t(c, r) = (*this)(r, c);
  return t;
}

SpMat operator*(const SpMat& a, const SpMat& b) {
  require_same_genus(a.genus_, b.genus_);
  SpMat p(a.genus_);
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const std::int64_t ark = a(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < n; ++c) p(r, c) = checked::add(p(r, c), checked::mul(ark, b(k, c)));
    }
  return p;
}

HVec operator*(const SpMat& a, const HVec& x) {
  require_same_genus(a.genus_, x.genus());
  HVec y(a.genus_);
  for (int r = 0; r < a.dim(); ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < a.dim(); ++c) s = checked::add(s, checked::mul(a(r, c), x[static_cast<std::size_t>(c)]));
    y[static_cast<std::size_t>(r)] = s;
  }
  return y;
}

SpMat operator-(SpMat a) {
  for (auto& x : a.m_) x = checked::mul(-1, x);
  return a;
}

std::int64_t SpMat::determinant() const {
  const int n = dim();
  std::vector<mpz_class> a(m_.size());
  for (std::size_t i = 0; i < m_.size(); ++i) a[i] = static_cast<long>(m_[i]);
  auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<std::size_t>(r * n + c)]; };

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * to_int64(at(n - 1, n - 1));
}

SpMat SpMat::inverse() const {
  const std::int64_t det = determinant();
  if (det != 1 && det != -1) {
    throw std::domain_error("matrix is not invertible over the integers (det = " + std::to_string(det) + ")");
  }
  // Gauss-Jordan over Q; with det = +-1 the result equals the adjugate times det and is integral.
  const int n = dim();
  std::vector<mpq_class> a(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int r, int c) -> mpq_class& { return a[static_cast<std::size_t>(r * 2 * n + c)]; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) at(r, c) = static_cast<long>((*this)(r, c));
    at(r, n + r) = 1;
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (at(piv, k) == 0) ++piv;
    if (piv != k) {
      for (int c = 0; c < 2 * n; ++c) std::swap(at(k, c), at(piv, c));
    }
    const mpq_class p = at(k, k);
    for (int c = 0; c < 2 * n; ++c) at(k, c) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == k || at(r, k) == 0) continue;
      const mpq_class f = at(r, k);
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  SpMat inv(genus_);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const mpq_class& q = at(r, n + c);
      if (q.get_den() != 1) throw std::logic_error("non-integral inverse despite unit determinant");
      inv(r, c) = to_int64(q.get_num());
    }
  return inv;
}

// ---------------------------------------------------------------------------

HVec abelianize(const Word& x) {
  HVec v(x.genus());
  for (Letter l : x.letters()) v[static_cast<std::size_t>(l.slot())] += l.sign();
  return v;
}

std::int64_t intersection(const HVec& x, const HVec& y) {
  require_same_genus(x.genus(), y.genus());
  const auto n = static_cast<std::size_t>(x.genus().value());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s = checked::add(s, checked::mul(x[i], y[n + i]));
    s = checked::add(s, -checked::mul(x[n + i], y[i]));
  }
  return s;
}

HVec dual(Genus g, std::span<const std::int64_t> values) {
  if (values.size() != static_cast<std::size_t>(g.rank())) {
    throw std::invalid_argument("dual needs one value per generator");
  }
  // a.[A_j] = -a_{B_j} and a.[B_j] = a_{A_j}.
  const auto n = static_cast<std::size_t>(g.value());
  HVec a(g);
  for (std::size_t j = 0; j < n; ++j) {
    a[j] = values[n + j];
    a[n + j] = checked::mul(-1, values[j]);
  }
  return a;
}

SpMat induced_matrix(const Endo& phi) {
  const Genus g = phi.genus();
  SpMat m(g);
  for (int j = 0; j < g.rank(); ++j) {
    const HVec col = abelianize(phi.image(j));
    for (int r = 0; r < g.rank(); ++r) m(r, j) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

bool is_symplectic(const SpMat& m) {
  const SpMat j = SpMat::form(m.genus());
  return m.transpose() * j * m == j;
}

}  // namespace mcg
