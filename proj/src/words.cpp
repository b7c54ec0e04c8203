#include "gts/words.hpp"

#include <cctype>

namespace gts {

int Alphabet::symbol(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  auto it = aliases.find(std::string(name));
  return it == aliases.end() ? -1 : it->second;
}

namespace alphabets {

const Alphabet& F2() {
  static const Alphabet a{"F2", {"x", "y"}, {{"x12", 0}, {"x23", 1}}};
  return a;
}
const Alphabet& PB2() {
  static const Alphabet a{"PB2", {"x12"}, {}};
  return a;
}
const Alphabet& PB3() {
  static const Alphabet a{"PB3", {"x12", "x23", "x13", "c"}, {}};
  return a;
}
const Alphabet& PB4() {
  static const Alphabet a{"PB4", {"x12", "x23", "x13", "x14", "x24", "x34"}, {}};
  return a;
}
const Alphabet& B3() {
  static const Alphabet a{"B3", {"s1", "s2", "x12", "x23", "x13", "c"}, {}};
  return a;
}
const Alphabet& B4() {
  static const Alphabet a{"B4", {"s1", "s2", "s3", "x12", "x23", "x13", "x14", "x24", "x34"}, {}};
  return a;
}
const Alphabet& by_id(std::string_view id) {
  for (const Alphabet* a : {&F2(), &PB2(), &PB3(), &PB4(), &B3(), &B4()})
    if (a->id == id) return *a;
  throw WordError("unknown alphabet " + std::string(id));
}

}  // namespace alphabets

Word::Word(const Alphabet& a, const std::vector<Letter>& raw) : alpha_(&a) {
  for (const auto& l : raw) push(l);
}

void Word::push(Letter l) {
  if (l.sym < 0 || l.sym >= alpha_->size()) throw WordError("symbol outside alphabet " + alpha_->id);
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().sym == l.sym) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word Word::gen(const Alphabet& a, std::string_view name, int64_t exp) {
  int s = a.symbol(name);
  if (s < 0) throw WordError("unknown generator '" + std::string(name) + "' in alphabet " + a.id);
  return Word(a, {{s, exp}});
}

uint64_t Word::length() const {
  uint64_t n = 0;
  for (auto& l : letters_) n += static_cast<uint64_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  r *= o;
  return r;
}

Word& Word::operator*=(const Word& o) {
  if (alpha_ != o.alpha_) throw WordError("alphabet mismatch: " + alpha_->id + " vs " + o.alpha_->id);
  for (const auto& l : o.letters_) push(l);
  return *this;
}

Word Word::inverse() const {
  Word r(*alpha_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push({it->sym, -it->exp});
  return r;
}

Word Word::pow(int64_t e) const {
  Word base = e < 0 ? inverse() : *this;
  Word r(*alpha_);
  for (int64_t k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
  return r;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += alpha_->names[static_cast<size_t>(letters_[i].sym)];
    if (letters_[i].exp != 1) s += "^" + std::to_string(letters_[i].exp);
  }
  return s;
}

Word Word::parse(const Alphabet& a, std::string_view text) {
  Word w(a);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  while (i < text.size()) {
    size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    std::string name(text.substr(start, i - start));
    if (name.empty()) throw WordError("unexpected character in word '" + std::string(text) + "'");
    int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t es = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string etxt(text.substr(es, i - es));
      if (etxt.empty() || etxt == "-" || etxt == "+") throw WordError("missing exponent in '" + std::string(text) + "'");
      e = std::stoll(etxt);
    }
    if ((name == "e" || name == "1") && a.symbol(name) < 0) {
      // identity token
    } else {
      int s = a.symbol(name);
      if (s < 0) throw WordError("unknown generator '" + name + "' in alphabet " + a.id);
      w.push({s, e});
    }
    skip();
  }
  return w;
}

Word reduce(const Alphabet& a, const std::vector<Letter>& raw) { return Word(a, raw); }

Word invert_word(const Word& w) { return w.inverse(); }

Word substitute(const Word& w, const std::vector<Word>& assignment) {
  if (assignment.size() < static_cast<size_t>(w.alphabet().size())) throw WordError("assignment does not cover alphabet " + w.alphabet().id);
  if (assignment.empty()) return w;
  Word r(assignment.front().alphabet());
  for (const auto& l : w.letters()) r *= assignment[static_cast<size_t>(l.sym)].pow(l.exp);
  return r;
}

Word substitute(const Word& w, const std::map<std::string, Word>& assignment) {
  std::vector<Word> v;
  const Alphabet* target = nullptr;
  for (const auto& name : w.alphabet().names) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      v.push_back(Word(w.alphabet()));  // placeholder, must stay unused
      continue;
    }
    target = &it->second.alphabet();
    v.push_back(it->second);
  }
  for (const auto& l : w.letters()) {
    const auto& name = w.alphabet().names[static_cast<size_t>(l.sym)];
    if (!assignment.count(name)) throw WordError("unassigned symbol '" + name + "'");
  }
  if (!target) return w.empty() ? w : throw WordError("empty assignment");
  for (auto& x : v)
    if (&x.alphabet() != target) x = Word(*target);
  return substitute(w, v);
}

int64_t exponent_sum(const Word& w, std::string_view symbol) {
  int s = w.alphabet().symbol(symbol);
  if (s < 0) throw WordError("unknown generator '" + std::string(symbol) + "'");
  int64_t t = 0;
  for (auto& l : w.letters())
    if (l.sym == s) t += l.exp;
  return t;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

}  // namespace gts
