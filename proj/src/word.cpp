#include "mcg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mcg {

Genus::Genus(int g) : g_(g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
}

Generator Generator::from_slot(Genus g, int slot) {
  if (slot < 0 || slot >= g.rank()) throw std::out_of_range("generator slot out of range");
  if (slot < g.value()) return {GenKind::A, slot + 1};
  return {GenKind::B, slot - g.value() + 1};
}

void require_same_genus(Genus a, Genus b) {
  if (a != b) {
    throw GenusMismatch("genus mismatch: " + std::to_string(a.value()) + " vs " + std::to_string(b.value()));
  }
}

// ---------------------------------------------------------------------------

WordBuilder& WordBuilder::push(Letter l) {
  if (!buf_.empty() && buf_.back().cancels(l)) {
    buf_.pop_back();
  } else {
    buf_.push_back(l);
  }
  return *this;
}

WordBuilder& WordBuilder::append(const Word& w) {
  require_same_genus(genus_, w.genus());
  for (Letter l : w.letters()) push(l);
  return *this;
}

WordBuilder& WordBuilder::append_inverse(const Word& w) {
  require_same_genus(genus_, w.genus());
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
  return *this;
}

Word WordBuilder::build() && {
  Word w(genus_);
  w.letters_ = std::move(buf_);
  return w;
}

// ---------------------------------------------------------------------------

Word::Word(Genus g, std::span<const Letter> raw) : genus_(g) {
  WordBuilder b(g);
  for (Letter l : raw) {
    if (l.code() == 0 || l.slot() >= g.rank()) throw std::out_of_range("letter outside generating set");
    b.push(l);
  }
  letters_ = std::move(std::move(b).build().letters_);
}

Word Word::generator(Genus g, Generator gen, int sign) {
  if (gen.index < 1 || gen.index > g.value()) {
    throw std::out_of_range("generator index " + std::to_string(gen.index) + " outside 1.." +
                            std::to_string(g.value()));
  }
  return from_slot(g, gen.slot(g), sign);
}

Word Word::from_slot(Genus g, int slot, int sign) {
  const Letter l = Letter::from_slot(slot, sign);
  return Word(g, std::span<const Letter>(&l, 1));
}

Word Word::parse(Genus g, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  bool saw_token = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;
    saw_token = true;
    if (tok == "1") continue;

    const char head = tok.front();
    GenKind kind;
    int sign;
    switch (head) {
      case 'A': kind = GenKind::A; sign = +1; break;
      case 'a': kind = GenKind::A; sign = -1; break;
      case 'B': kind = GenKind::B; sign = +1; break;
      case 'b': kind = GenKind::B; sign = -1; break;
      default: throw ParseError("bad token '" + std::string(tok) + "'");
    }
    int index = 0;
    const auto digits = tok.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad token '" + std::string(tok) + "'");
    }
    if (index < 1 || index > g.value()) {
      throw ParseError("generator index in '" + std::string(tok) + "' outside 1.." + std::to_string(g.value()));
    }
    raw.push_back(Letter::of(g, Generator{kind, index}, sign));
  }
  if (!saw_token) throw ParseError("empty word text (use 1 for the identity)");
  return Word(g, raw);
}

Word Word::inverse() const {
  Word w(genus_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (Letter l : letters_) {
    if (!first) out << ' ';
    first = false;
    const Generator gen = Generator::from_slot(genus_, l.slot());
    char c = gen.kind == GenKind::A ? 'A' : 'B';
    if (l.sign() < 0) c = static_cast<char>(std::tolower(c));
    out << c << gen.index;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Word reduce(Genus g, std::span<const Letter> raw) { return Word(g, raw); }

Word multiply(const Word& x, const Word& y) {
  WordBuilder b(x.genus());
  b.append(x).append(y);
  return std::move(b).build();
}

Word operator*(const Word& x, const Word& y) { return multiply(x, y); }

Word invert(const Word& x) { return x.inverse(); }

Word commutator(const Word& x, const Word& y) {
  WordBuilder b(x.genus());
  b.append(x).append(y).append_inverse(x).append_inverse(y);
  return std::move(b).build();
}

Word zeta(Genus g) {
  WordBuilder b(g);
  for (int k = 1; k <= g.value(); ++k) {
    const Word a = Word::generator(g, {GenKind::A, k});
    const Word bk = Word::generator(g, {GenKind::B, k});
    b.append(commutator(a, bk));
  }
  return std::move(b).build();
}

Word power(const Word& x, int n) {
  WordBuilder b(x.genus());
  for (int i = 0; i < std::abs(n); ++i) {
    if (n > 0) b.append(x);
    else b.append_inverse(x);
  }
  return std::move(b).build();
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(w.genus(), ls.subspan(lo, hi - lo)), Word(w.genus(), ls.first(lo))};
}

std::optional<Word> conjugator(const Word& w1, const Word& w2) {
  require_same_genus(w1.genus(), w2.genus());
  const Genus g = w1.genus();
  const auto [c1, p1] = cyclic_reduce(w1);
  const auto [c2, p2] = cyclic_reduce(w2);
  if (c1.size() != c2.size()) return std::nullopt;

  // c1 must be a rotation c2[k:] c2[:k]; then c1 = t^-1 c2 t with t = c2[:k].
  std::size_t offset = 0;
  if (!c1.empty()) {
    std::vector<Letter> doubled(c2.letters().begin(), c2.letters().end());
    doubled.insert(doubled.end(), c2.letters().begin(), c2.letters().end());
    doubled.pop_back();
    auto hit = std::search(doubled.begin(), doubled.end(), c1.letters().begin(), c1.letters().end());
    if (hit == doubled.end()) return std::nullopt;
    offset = static_cast<std::size_t>(hit - doubled.begin());
  }
  const Word t(g, c2.letters().first(offset));

  // w1 = p1 c1 p1^-1 = (p1 t^-1 p2^-1) w2 (p1 t^-1 p2^-1)^-1
  WordBuilder b(g);
  b.append(p1).append_inverse(t).append_inverse(p2);
  return std::move(b).build();
}

}  // namespace mcg
