#include "artin/word.hpp"

#include <algorithm>
#include <cctype>

#include "artin/errors.hpp"

namespace artin {

namespace {

// Appends a letter to an already reduced sequence, cancelling if possible.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Syllables (generator, collapsed exponent).
std::vector<std::pair<std::string, int>> syllables(const std::vector<Letter>& letters) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& l : letters) {
    if (!out.empty() && out.back().first == l.gen) {
      out.back().second += l.exp;
    } else {
      out.emplace_back(l.gen, l.exp);
    }
  }
  return out;
}

std::string join_syllables(const std::vector<Letter>& letters, const std::string& sep) {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& [gen, exp] : syllables(letters)) {
    if (!out.empty()) out += sep;
    out += gen;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  FreeWord parse() {
    FreeWord w = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word '" + std::string(text_) + "': " + msg);
  }

  void skip() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  FreeWord sequence() {
    FreeWord w;
    while (true) {
      skip();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      w *= syllable();
    }
  }

  FreeWord syllable() {
    FreeWord base;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else if (c == '1') {
      ++pos_;
    } else if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      base = FreeWord::generator(std::string(text_.substr(start, pos_ - start)));
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) fail("expected integer exponent");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw DomainError("letter exponents must be +1 or -1");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(std::string gen, int power) {
  FreeWord w;
  const int sign = power < 0 ? -1 : 1;
  for (int i = 0; i < power * sign; ++i) w.letters_.push_back(Letter{gen, sign});
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(Letter{it->gen, -it->exp});
  }
  return w;
}

FreeWord FreeWord::pow(int k) const {
  const FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

std::vector<std::string> FreeWord::generators() const {
  std::vector<std::string> out;
  for (const auto& l : letters_) {
    if (std::find(out.begin(), out.end(), l.gen) == out.end()) out.push_back(l.gen);
  }
  return out;
}

std::string FreeWord::to_string() const { return join_syllables(letters_, " "); }

std::string FreeWord::to_product_string() const { return join_syllables(letters_, "*"); }

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const auto& l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

FreeWord parse_word(std::string_view text) { return WordParser(text).parse(); }

GroupRingElement GroupRingElement::from_word(const FreeWord& w, const Integer& c) {
  GroupRingElement out;
  out.add_term(w, c);
  return out;
}

Integer GroupRingElement::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string word = w.to_product_string();
    if (w.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += word;
    } else {
      out += mag.get_str() + "*" + word;
    }
  }
  return out;
}

}  // namespace artin
