#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

/// A generator raised to +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the letter sequence; exponents must be +1 or -1.
  explicit FreeWord(std::vector<Letter> letters);

  /// gen^power.
  static FreeWord generator(std::string gen, int power = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  /// Any integer power.
  FreeWord pow(int k) const;

  /// Distinct generators in order of first occurrence.
  std::vector<std::string> generators() const;

  /// Space separated syllables with collapsed exponents, e.g. "a b^-1 a^2";
  /// "1" for the empty word.
  std::string to_string() const;
  /// Same syllables joined by '*', e.g. "a*b^-1*a^2"; "1" for the empty word.
  std::string to_product_string() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& b) { return *this = *this * b; }

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
FreeWord commutator(const FreeWord& a, const FreeWord& b);

/// Parses syllables separated by whitespace or '*'. A syllable is a generator
/// or a parenthesized word, optionally followed by ^k for any integer k; "1"
/// is the identity. Example: "(a b)^-2 a^3". Throws ParseError.
FreeWord parse_word(std::string_view text);

/// Element of the integral group ring of a free group.
class GroupRingElement {
 public:
  using TermMap = std::map<FreeWord, Integer>;

  GroupRingElement() = default;
  static GroupRingElement from_word(const FreeWord& w, const Integer& c = 1);
  static GroupRingElement one() { return from_word(FreeWord{}); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const FreeWord& w) const;

  void add_term(const FreeWord& w, const Integer& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

  /// Terms "c*w" in word order joined by + and -, words written with '*';
  /// "0" for zero.
  std::string to_string() const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  TermMap terms_;
};

}  // namespace artin
