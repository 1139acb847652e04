#include "mcg/earle.hpp"

#include <sstream>
#include <stdexcept>

#include "mcg/morita.hpp"

namespace mcg {

QVec::QVec(Genus g, std::vector<mpq_class> entries) : genus_(g), v_(std::move(entries)) {
  if (v_.size() != static_cast<std::size_t>(g.rank())) throw std::invalid_argument("QVec needs exactly 2g entries");
  for (auto& q : v_) q.canonicalize();
}

QVec::QVec(const HVec& h) : genus_(h.genus()), v_(h.size()) {
  for (std::size_t i = 0; i < h.size(); ++i) v_[i] = static_cast<long>(h[i]);
}

bool QVec::is_zero() const {
  for (const auto& q : v_) {
    if (q != 0) return false;
  }
  return true;
}

std::vector<mpz_class> QVec::numerators_over(long denominator) const {
  std::vector<mpz_class> out;
  out.reserve(v_.size());
  for (const auto& q : v_) {
    const mpq_class scaled = q * denominator;
    if (scaled.get_den() != 1) throw std::domain_error("entry " + q.get_str() + " not in (1/" +
                                                       std::to_string(denominator) + ")Z");
    out.push_back(scaled.get_num());
  }
  return out;
}

bool QVec::has_canonical_denominator() const {
  for (const auto& q : v_) {
    if (canonical_denominator() % q.get_den() != 0) return false;
  }
  return true;
}

QVec& QVec::operator+=(const QVec& o) {
  require_same_genus(genus_, o.genus_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

QVec& QVec::operator-=(const QVec& o) {
  require_same_genus(genus_, o.genus_);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

QVec operator*(const mpq_class& s, QVec a) {
  for (auto& q : a.v_) q *= s;
  return a;
}

QVec operator*(const SpMat& m, const QVec& x) {
  require_same_genus(m.genus(), x.genus_);
  QVec y(x.genus_);
  for (int r = 0; r < m.dim(); ++r) {
    mpq_class s = 0;
    for (int c = 0; c < m.dim(); ++c) s += static_cast<long>(m(r, c)) * x.v_[static_cast<std::size_t>(c)];
    y.v_[static_cast<std::size_t>(r)] = s;
  }
  return y;
}

bool operator==(const QVec& a, const QVec& b) { return a.genus_ == b.genus_ && a.v_ == b.v_; }

std::string QVec::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) out << (i ? ", " : "") << v_[i].get_str();
  out << ')';
  return out.str();
}

std::string QVec::str_canonical() const {
  std::ostringstream out;
  out << "(1/" << canonical_denominator() << ")(";
  const auto nums = numerators_over(canonical_denominator());
  for (std::size_t i = 0; i < nums.size(); ++i) out << (i ? ", " : "") << nums[i].get_str();
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

QVec a0(Genus g) {
  QVec a(g);
  const mpq_class entry(2, 2 * g.value() - 2);
  for (int j = g.value(); j < g.rank(); ++j) a[static_cast<std::size_t>(j)] = entry;
  for (std::size_t j = 0; j < a.size(); ++j) a[j].canonicalize();
  return a;
}

namespace {

QVec coboundary_unchecked(const Endo& phi) {
  const QVec base = a0(phi.genus());
  return induced_matrix(phi).inverse() * base - base;
}

QVec psi_from(const Endo& phi, const HVec& f) {
  const mpq_class scale(-1, 2 * phi.genus().value() - 2);
  return scale * QVec(f) + coboundary_unchecked(phi);
}

}  // namespace

QVec coboundary_a0(const Endo& phi) {
  if (!in_N(phi)) throw NotInN("map does not send zeta to a conjugate of zeta");
  return coboundary_unchecked(phi);
}

QVec earle_psi(const NWitness& w) { return psi_from(w.element, morita_f(w)); }

QVec earle_psi(const Endo& phi) {
  auto w = in_N(phi);
  if (!w) throw NotInN("map does not send zeta to a conjugate of zeta");
  return earle_psi(*w);
}

}  // namespace mcg
