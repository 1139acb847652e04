#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

/// Raised when values built for different genera meet in one operation.
class GenusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the word parser and the file readers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Genus of the ambient surface. Every word, map and vector carries one.
class Genus {
 public:
  explicit Genus(int g);

  int value() const { return g_; }
  /// Rank of the free group, 2g.
  int rank() const { return 2 * g_; }

  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

enum class GenKind : std::uint8_t { A, B };

/// A_index or B_index, index in 1..g.
struct Generator {
  GenKind kind;
  int index;

  /// Position in the basis order A_1..A_g, B_1..B_g (zero based).
  int slot(Genus g) const { return (kind == GenKind::A ? 0 : g.value()) + index - 1; }
  static Generator from_slot(Genus g, int slot);

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A generator or its inverse, packed as +-(slot + 1).
class Letter {
 public:
  constexpr Letter() = default;
  static constexpr Letter from_slot(int slot, int sign) { return Letter(sign > 0 ? slot + 1 : -(slot + 1)); }
  static Letter of(Genus g, Generator gen, int sign = +1) { return from_slot(gen.slot(g), sign); }

  int slot() const { return (code_ > 0 ? code_ : -code_) - 1; }
  int sign() const { return code_ > 0 ? +1 : -1; }
  Letter inverse() const { return Letter(-code_); }
  bool cancels(Letter other) const { return code_ == -other.code_; }
  std::int32_t code() const { return code_; }

  friend bool operator==(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::int32_t code) : code_(code) {}
  std::int32_t code_ = 0;
};

/// Element of the free group F(A_1..A_g, B_1..B_g), always freely reduced.
class Word {
 public:
  explicit Word(Genus g) : genus_(g) {}
  /// Freely reduces the given letter sequence.
  Word(Genus g, std::span<const Letter> raw);

  static Word generator(Genus g, Generator gen, int sign = +1);
  static Word from_slot(Genus g, int slot, int sign = +1);
  /// Parses whitespace separated tokens `A3`, `a3`, `B1`, `b1`; `1` is the identity.
  static Word parse(Genus g, std::string_view text);

  Genus genus() const { return genus_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  /// Textual form, `1` for the identity.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Genus genus_;
  std::vector<Letter> letters_;

  friend class WordBuilder;
};

/// Accumulates letters while keeping the buffer freely reduced.
class WordBuilder {
 public:
  explicit WordBuilder(Genus g) : genus_(g) {}

  WordBuilder& push(Letter l);
  WordBuilder& append(const Word& w);
  WordBuilder& append_inverse(const Word& w);
  Word build() &&;

 private:
  Genus genus_;
  std::vector<Letter> buf_;
};

void require_same_genus(Genus a, Genus b);

Word reduce(Genus g, std::span<const Letter> raw);
Word multiply(const Word& x, const Word& y);
Word invert(const Word& x);
/// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);
/// Surface relator [A_1,B_1]...[A_g,B_g].
Word zeta(Genus g);
/// x^n for any integer n.
Word power(const Word& x, int n);

Word operator*(const Word& x, const Word& y);

struct CyclicReduction {
  Word core;
  Word prefix;
};

/// w = prefix * core * prefix^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// Some u with w1 = u w2 u^-1, or nullopt if w1 and w2 are not conjugate.
std::optional<Word> conjugator(const Word& w1, const Word& w2);

}  // namespace mcg
