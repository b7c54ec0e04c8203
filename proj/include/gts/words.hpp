#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gts {

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named generator alphabet. Symbols are small integers indexing `names`.
struct Alphabet {
  std::string id;
  std::vector<std::string> names;
  // extra spellings accepted by the parser, e.g. x12 for x in F2
  std::map<std::string, int> aliases;

  int symbol(std::string_view name) const;  // -1 if unknown
  int size() const { return static_cast<int>(names.size()); }
};

namespace alphabets {
const Alphabet& F2();   // x, y
const Alphabet& PB2();  // x12
const Alphabet& PB3();  // x12, x23, x13, c
const Alphabet& PB4();  // x12, x23, x13, x14, x24, x34
const Alphabet& B3();   // s1, s2, x12, x23, x13, c
const Alphabet& B4();   // s1, s2, s3, x12, x23, x13, x14, x24, x34
const Alphabet& by_id(std::string_view id);
}  // namespace alphabets

struct Letter {
  int sym;
  int64_t exp;
  bool operator==(const Letter& o) const { return sym == o.sym && exp == o.exp; }
};

// Freely reduced run-length word over one alphabet.
class Word {
 public:
  explicit Word(const Alphabet& a) : alpha_(&a) {}
  // reduces the given raw letters
  Word(const Alphabet& a, const std::vector<Letter>& raw);
  static Word gen(const Alphabet& a, std::string_view name, int64_t exp = 1);
  static Word parse(const Alphabet& a, std::string_view text);

  const Alphabet& alphabet() const { return *alpha_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  // number of letters counted with multiplicity
  uint64_t length() const;

  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  Word inverse() const;
  Word pow(int64_t e) const;

  bool operator==(const Word& o) const { return alpha_ == o.alpha_ && letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // "x^2 y^-1"; the empty word prints as "e"
  std::string to_string() const;

 private:
  void push(Letter l);
  const Alphabet* alpha_;
  std::vector<Letter> letters_;
};

Word reduce(const Alphabet& a, const std::vector<Letter>& raw);
Word invert_word(const Word& w);
// homomorphic image; assignment[sym] is the image of symbol sym, all over one target alphabet
Word substitute(const Word& w, const std::vector<Word>& assignment);
Word substitute(const Word& w, const std::map<std::string, Word>& assignment);
int64_t exponent_sum(const Word& w, std::string_view symbol);
// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

// Evaluates a word given generator images; Mul must be associative with identity `one`.
template <class T, class PowFn>
T evaluate(const Word& w, const std::vector<T>& images, const T& one, PowFn&& power) {
  T acc = one;
  for (const auto& l : w.letters()) acc = acc * power(images.at(static_cast<size_t>(l.sym)), l.exp);
  return acc;
}

}  // namespace gts
