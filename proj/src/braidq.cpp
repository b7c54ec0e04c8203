#include "gts/braidq.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gts {

// ---------------------------------------------------------------- specs

const Perm& SubgroupSpec::image(std::string_view gen) const {
  for (size_t i = 0; i < kPB4Names.size(); ++i)
    if (gen == kPB4Names[i]) return images[i];
  throw SpecError("unknown generator " + std::string(gen));
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

SubgroupSpec parse_spec(const std::string& text) {
  SubgroupSpec spec;
  std::map<std::string, std::string> raw;
  bool have_degree = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw SpecError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    if (key == "name") {
      spec.name = val;
    } else if (key == "degree") {
      try {
        size_t used = 0;
        long long d = std::stoll(val, &used);
        if (used != val.size() || d < 1 || d > 65535) throw SpecError("");
        spec.degree = static_cast<uint32_t>(d);
      } catch (...) {
        throw SpecError("line " + std::to_string(lineno) + ": invalid degree '" + val + "'");
      }
      have_degree = true;
    } else if (std::find(kPB4Names.begin(), kPB4Names.end(), key) != kPB4Names.end()) {
      if (raw.count(key)) throw SpecError("line " + std::to_string(lineno) + ": duplicate " + key);
      raw[key] = val;
    } else {
      throw SpecError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_degree) throw SpecError("missing degree");
  for (size_t i = 0; i < kPB4Names.size(); ++i) {
    auto it = raw.find(kPB4Names[i]);
    if (it == raw.end()) throw SpecError(std::string("missing image of ") + kPB4Names[i]);
    try {
      spec.images[i] = parse_cycles(it->second, spec.degree);
    } catch (const PermError& e) {
      throw SpecError(std::string(kPB4Names[i]) + ": " + e.what());
    }
  }
  return spec;
}

SubgroupSpec load_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_spec(ss.str());
}

std::string write_spec(const SubgroupSpec& spec) {
  std::string s = "name: " + spec.name + "\n";
  s += "degree: " + std::to_string(spec.degree) + "\n";
  for (size_t i = 0; i < kPB4Names.size(); ++i) s += std::string(kPB4Names[i]) + ": " + spec.images[i].to_cycles() + "\n";
  return s;
}

namespace {

int gen_index(int i, int j) {
  static const int idx[5][5] = {{-1, -1, -1, -1, -1}, {-1, -1, 0, 2, 3}, {-1, -1, -1, 1, 4}, {-1, -1, -1, -1, 5}, {}};
  return idx[i][j];
}

}  // namespace

std::vector<std::string> validate_spec(const SubgroupSpec& spec) {
  std::vector<std::string> bad;
  for (const auto& p : spec.images)
    if (p.degree() != spec.degree) {
      bad.push_back("image degree differs from spec degree");
      return bad;
    }
  auto X = [&](int i, int j) { return spec.images[static_cast<size_t>(gen_index(i, j))]; };
  std::vector<std::pair<int, int>> gens = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  // every unordered pair of generators; pairs with a common right endpoint carry no relation
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      for (int orient = 0; orient < 2; ++orient) {
        auto [r, s] = orient ? gens[b] : gens[a];
        auto [i, j] = orient ? gens[a] : gens[b];
        std::optional<Perm> rhs;
        Perm xij = X(i, j);
        if (s < i || (i < r && r < s && s < j)) {
          rhs = xij;
        } else if (s == i) {
          rhs = X(r, j) * xij * X(r, j).inverse();
        } else if (r == i && s < j) {
          rhs = X(r, j) * X(s, j) * xij * X(s, j).inverse() * X(r, j).inverse();
        } else if (r < i && i < s && s < j) {
          Perm rj = X(r, j), sj = X(s, j);
          rhs = rj * sj * rj.inverse() * sj.inverse() * xij * sj * rj * sj.inverse() * rj.inverse();
        }
        if (!rhs) continue;
        Perm lhs = X(r, s).inverse() * xij * X(r, s);
        if (lhs != *rhs) {
          std::ostringstream os;
          os << "{(" << r << "," << s << "),(" << i << "," << j << ")}: x" << r << s << "^-1 x" << i << j << " x" << r << s
             << " differs from the required right-hand side";
          bad.push_back(os.str());
        }
      }
  return bad;
}

SubgroupSpec make_cyclic_spec(uint32_t q) {
  if (q < 1) throw SpecError("cyclic spec needs q >= 1");
  SubgroupSpec s;
  s.name = "AB" + std::to_string(q);
  s.degree = q;
  std::vector<uint32_t> img(q);
  for (uint32_t i = 0; i < q; ++i) img[i] = (i + 1) % q;
  Perm c = Perm::from_images0(img);
  s.images.fill(c);
  return s;
}

SubgroupSpec make_trivial_spec() {
  SubgroupSpec s = make_cyclic_spec(1);
  s.name = "trivial";
  return s;
}

// ---------------------------------------------------------------- phi maps

namespace {

struct PhiDef {
  const Alphabet* domain;
  const Alphabet* codomain;
  std::vector<std::string> images;  // per domain symbol
};

const std::map<std::string, PhiDef>& phi_table() {
  static const std::map<std::string, PhiDef> t = {
      {"123", {&alphabets::PB3(), &alphabets::PB4(), {"x12", "x23", "x13", "x12 x13 x23"}}},
      {"12_3_4", {&alphabets::PB3(), &alphabets::PB4(), {"x13 x23", "x34", "x14 x24", "x13 x23 x14 x24 x34"}}},
      {"1_23_4", {&alphabets::PB3(), &alphabets::PB4(), {"x12 x13", "x24 x34", "x14", "x12 x13 x14 x24 x34"}}},
      {"1_2_34", {&alphabets::PB3(), &alphabets::PB4(), {"x12", "x23 x24", "x13 x14", "x12 x13 x14 x23 x24"}}},
      {"234", {&alphabets::PB3(), &alphabets::PB4(), {"x23", "x34", "x24", "x23 x24 x34"}}},
      {"12", {&alphabets::PB2(), &alphabets::PB3(), {"x12"}}},
      {"23", {&alphabets::PB2(), &alphabets::PB3(), {"x23"}}},
      {"12_3", {&alphabets::PB2(), &alphabets::PB3(), {"x13 x23"}}},
      {"1_23", {&alphabets::PB2(), &alphabets::PB3(), {"x12 x13"}}},
  };
  return t;
}

}  // namespace

Word phi_substitute(const std::string& phi_name, const Word& w) {
  auto it = phi_table().find(phi_name);
  if (it == phi_table().end()) throw WordError("unknown homomorphism phi_" + phi_name);
  const PhiDef& def = it->second;
  if (&w.alphabet() != def.domain) throw WordError("phi_" + phi_name + " expects a word over " + def.domain->id);
  std::vector<Word> assign;
  for (const auto& img : def.images) assign.push_back(Word::parse(*def.codomain, img));
  return substitute(w, assign);
}

Word f2_to_pb3(const Word& f) {
  if (&f.alphabet() != &alphabets::F2()) throw WordError("expected a word over F2");
  return substitute(f, std::vector<Word>{Word::gen(alphabets::PB3(), "x12"), Word::gen(alphabets::PB3(), "x23")});
}

Word f2_to_pb4(const Word& f, const std::string& phi_name) { return phi_substitute(phi_name, f2_to_pb3(f)); }

// ---------------------------------------------------------------- conjugation rules

Word conjugation_rule(int k, int sign, const std::string& x, const Alphabet& pure) {
  // sigma_k^-1 x sigma_k
  static const std::map<std::pair<int, std::string>, std::string> neg = {
      {{1, "x12"}, "x12"}, {{1, "x23"}, "x13"}, {{1, "x13"}, "x13 x23 x13^-1"},
      {{1, "x14"}, "x14 x24 x14^-1"}, {{1, "x24"}, "x14"}, {{1, "x34"}, "x34"},
      {{2, "x12"}, "x12 x13 x12^-1"}, {{2, "x23"}, "x23"}, {{2, "x13"}, "x12"},
      {{2, "x14"}, "x14"}, {{2, "x24"}, "x24 x34 x24^-1"}, {{2, "x34"}, "x24"},
      {{3, "x12"}, "x12"}, {{3, "x23"}, "x23 x24 x23^-1"}, {{3, "x13"}, "x13 x14 x13^-1"},
      {{3, "x14"}, "x13"}, {{3, "x24"}, "x23"}, {{3, "x34"}, "x34"},
  };
  // sigma_k x sigma_k^-1
  static const std::map<std::pair<int, std::string>, std::string> pos = {
      {{1, "x12"}, "x12"}, {{1, "x23"}, "x12 x13 x12^-1"}, {{1, "x13"}, "x23"},
      {{1, "x14"}, "x24"}, {{1, "x24"}, "x12 x14 x12^-1"}, {{1, "x34"}, "x34"},
      {{2, "x12"}, "x13"}, {{2, "x23"}, "x23"}, {{2, "x13"}, "x23 x12 x23^-1"},
      {{2, "x14"}, "x14"}, {{2, "x24"}, "x34"}, {{2, "x34"}, "x23 x24 x23^-1"},
      {{3, "x12"}, "x12"}, {{3, "x23"}, "x24"}, {{3, "x13"}, "x14"},
      {{3, "x14"}, "x34 x13 x34^-1"}, {{3, "x24"}, "x34 x23 x34^-1"}, {{3, "x34"}, "x34"},
  };
  if (x == "c") return Word::gen(pure, "c");
  const auto& table = sign < 0 ? neg : pos;
  auto it = table.find({k, x});
  if (it == table.end()) throw WordError("no conjugation rule for sigma_" + std::to_string(k) + " on " + x);
  return Word::parse(pure, it->second);
}

Word x_as_sigma_word(int i, int j, const Alphabet& braid) {
  std::vector<Letter> raw;
  auto s = [&](int k) { return braid.symbol("s" + std::to_string(k)); };
  for (int k = j - 1; k > i; --k) raw.push_back({s(k), 1});
  raw.push_back({s(i), 2});
  for (int k = i + 1; k < j; ++k) raw.push_back({s(k), -1});
  return Word(braid, raw);
}

// ---------------------------------------------------------------- InducedRep

InducedRep::InducedRep(int n, const std::vector<Perm>& pure_images) : n_(n) {
  if (n != 3 && n != 4) throw std::invalid_argument("only 3 or 4 strands are supported");
  const Alphabet& pure = n == 3 ? alphabets::PB3() : alphabets::PB4();
  if (static_cast<int>(pure_images.size()) != pure.size()) throw std::invalid_argument("pure image count mismatch");
  block_ = pure_images.front().degree();
  // S_n by breadth-first search, prepending simple transpositions
  auto transposition = [&](int k) {
    std::vector<uint32_t> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<uint32_t>(i);
    std::swap(img[static_cast<size_t>(k - 1)], img[static_cast<size_t>(k)]);
    return Perm::from_images0(img);
  };
  thetas_.push_back(Perm(static_cast<uint32_t>(n)));
  length_.push_back(0);
  section_.push_back(pure_images);
  auto find_theta = [&](const Perm& t) -> int64_t {
    for (size_t i = 0; i < thetas_.size(); ++i)
      if (thetas_[i] == t) return static_cast<int64_t>(i);
    return -1;
  };
  for (size_t idx = 0; idx < thetas_.size(); ++idx) {
    for (int k = 1; k < n; ++k) {
      Perm nt = transposition(k) * thetas_[idx];
      if (find_theta(nt) >= 0) continue;
      // section(nt) = sigma_k section(theta); conjugating x by it applies the sigma_k^-1 rule first
      std::vector<Perm> imgs;
      for (int sym = 0; sym < pure.size(); ++sym) {
        Word w = conjugation_rule(k, -1, pure.names[static_cast<size_t>(sym)], pure);
        const std::vector<Perm>& base = section_[idx];
        imgs.push_back(evaluate(w, base, Perm(block_), [](const Perm& p, int64_t e) { return p.pow(e); }));
      }
      thetas_.push_back(nt);
      length_.push_back(length_[idx] + 1);
      section_.push_back(std::move(imgs));
    }
  }
  const uint32_t B = block_;
  const size_t T = thetas_.size();
  const Alphabet& braid = alphabet();
  letters_.resize(static_cast<size_t>(braid.size()), Perm(degree()));
  for (int k = 1; k < n; ++k) {
    std::vector<uint32_t> img(degree());
    int x_sym = pure.symbol("x" + std::to_string(k) + std::to_string(k + 1));
    for (size_t t = 0; t < T; ++t) {
      Perm nt = transposition(k) * thetas_[t];
      size_t nti = static_cast<size_t>(find_theta(nt));
      bool up = length_[nti] > length_[t];
      const Perm& corr = section_[nti][static_cast<size_t>(x_sym)];
      for (uint32_t w = 0; w < B; ++w) img[t * B + w] = static_cast<uint32_t>(nti) * B + (up ? w : corr[w]);
    }
    letters_[static_cast<size_t>(braid.symbol("s" + std::to_string(k)))] = Perm::from_images0(img);
  }
  for (int sym = 0; sym < pure.size(); ++sym) {
    std::vector<uint32_t> img(degree());
    for (size_t t = 0; t < T; ++t) {
      const Perm& a = section_[t][static_cast<size_t>(sym)];
      for (uint32_t w = 0; w < B; ++w) img[t * B + w] = static_cast<uint32_t>(t) * B + a[w];
    }
    letters_[static_cast<size_t>(braid.symbol(pure.names[static_cast<size_t>(sym)]))] = Perm::from_images0(img);
  }
}

const Alphabet& InducedRep::alphabet() const { return n_ == 3 ? alphabets::B3() : alphabets::B4(); }

Perm InducedRep::eval(const Word& w) const {
  if (&w.alphabet() != &alphabet()) throw WordError("braid word must be over " + alphabet().id + ", got " + w.alphabet().id);
  return evaluate(w, letters_, Perm(degree()), [](const Perm& p, int64_t e) { return p.pow(e); });
}

Perm InducedRep::theta_of(const Perm& g) const { return thetas_.at(g[0] / block_); }

Perm InducedRep::pure_of(const Perm& g) const {
  std::vector<uint32_t> img(block_);
  for (uint32_t w = 0; w < block_; ++w) img[w] = g[w] % block_;
  return Perm::from_images0(img);
}

// ---------------------------------------------------------------- Quotients

std::shared_ptr<Quotients> Quotients::build(const SubgroupSpec& spec, uint64_t cap) {
  auto bad = validate_spec(spec);
  if (!bad.empty()) throw SpecError("spec '" + spec.name + "' violates " + bad.front());
  std::shared_ptr<Quotients> Q(new Quotients());
  Q->spec_ = spec;
  Q->cap_ = cap;
  const uint32_t d = spec.degree;
  Q->slots_.assign(5, d);
  Q->q4_gens_.assign(spec.images.begin(), spec.images.end());
  const char* phis[5] = {"123", "12_3_4", "1_23_4", "1_2_34", "234"};
  const char* pb3[4] = {"x12", "x23", "x13", "c"};
  for (int g = 0; g < 4; ++g) {
    std::vector<Perm> parts;
    for (const char* ph : phis) parts.push_back(Q->eval_pure4(phi_substitute(ph, Word::gen(alphabets::PB3(), pb3[g]))));
    Q->t3_[static_cast<size_t>(g)] = PermTuple(parts).flatten();
  }
  if (Q->t3_[0] * Q->t3_[2] * Q->t3_[1] != Q->t3_[3]) throw std::logic_error("c image is not x12 x13 x23");
  auto ord = [&](const char* w) { return Q->eval_pure3_flat(Word::parse(alphabets::PB3(), w)).order(); };
  uint64_t a = ord("x12"), b = ord("x23");
  Q->n_ord_chars_ = {lcm64(lcm64(a, b), lcm64(ord("x12 x13"), ord("x13 x23"))), lcm64(lcm64(a, b), ord("x12 x13")),
                     lcm64(lcm64(a, b), ord("x13 x23")), lcm64(lcm64(a, b), ord("c"))};
  Q->n_ord_ = Q->n_ord_chars_[3];
  for (auto v : Q->n_ord_chars_)
    if (v != Q->n_ord_) throw std::logic_error("N_ord characterizations disagree");
  Q->order_q4_ = Q->q4_chain().order();
  Q->order_q3_ = Q->q3_chain().order();
  Q->order_qf2_ = Q->qf2_chain().order();
  Q->b3_ = std::make_unique<InducedRep>(3, std::vector<Perm>(Q->t3_.begin(), Q->t3_.end()));
  Q->b4_ = std::make_unique<InducedRep>(4, Q->q4_gens_);
  return Q;
}

const FinGroup& Quotients::q4_chain() const {
  std::lock_guard lk(mu_);
  if (!q4_chain_) q4_chain_ = std::make_unique<FinGroup>(FinGroup::chain_only(q4_gens_, d()));
  return *q4_chain_;
}

const FinGroup& Quotients::q3_chain() const {
  std::lock_guard lk(mu_);
  if (!q3_chain_) q3_chain_ = std::make_unique<FinGroup>(FinGroup::chain_only({t3_[0], t3_[1], t3_[2]}, flat_degree()));
  return *q3_chain_;
}

const FinGroup& Quotients::qf2_chain() const {
  std::lock_guard lk(mu_);
  if (!qf2_chain_) qf2_chain_ = std::make_unique<FinGroup>(FinGroup::chain_only({t3_[0], t3_[1]}, flat_degree()));
  return *qf2_chain_;
}

const FinGroup& Quotients::q4_table() const {
  std::lock_guard lk(mu_);
  if (!q4_table_) q4_table_ = std::make_unique<FinGroup>(FinGroup::enumerate(alphabets::PB4(), q4_gens_, true, cap_));
  return *q4_table_;
}

const FinGroup& Quotients::qf2_table() const {
  std::lock_guard lk(mu_);
  if (!qf2_table_) {
    if (order_qf2_ > cap_) throw CapExceeded(cap_, 0);
    qf2_table_ = std::make_unique<FinGroup>(FinGroup::enumerate(alphabets::F2(), {t3_[0], t3_[1]}, true, cap_));
  }
  return *qf2_table_;
}

bool Quotients::qf2_materialized() const {
  std::lock_guard lk(mu_);
  return static_cast<bool>(qf2_table_);
}

const FinGroup& Quotients::qf2_derived() const {
  std::lock_guard lk(mu_);
  if (!derived_) {
    std::vector<Word> words = {Word::gen(alphabets::F2(), "x"), Word::gen(alphabets::F2(), "y")};
    FinGroup qf2 = FinGroup::from_generators({t3_[0], t3_[1]}, words, flat_degree());
    derived_ = std::make_unique<FinGroup>(derived_subgroup(qf2, cap_));
  }
  return *derived_;
}

Perm Quotients::eval_f2(const Word& f) const {
  if (&f.alphabet() != &alphabets::F2()) throw WordError("expected a word over F2");
  return evaluate(f, std::vector<Perm>{t3_[0], t3_[1]}, Perm(flat_degree()), [](const Perm& p, int64_t e) { return p.pow(e); });
}

Perm Quotients::eval_pure3_flat(const Word& w) const {
  if (&w.alphabet() == &alphabets::F2()) return eval_f2(w);
  if (&w.alphabet() != &alphabets::PB3()) throw WordError("expected a word over PB3");
  return evaluate(w, std::vector<Perm>(t3_.begin(), t3_.end()), Perm(flat_degree()), [](const Perm& p, int64_t e) { return p.pow(e); });
}

PermTuple Quotients::eval_pure3(const Word& w) const { return PermTuple::unflatten(eval_pure3_flat(w), slots_); }

Perm Quotients::eval_pure4(const Word& w) const {
  if (&w.alphabet() != &alphabets::PB4()) throw WordError("expected a word over PB4");
  return evaluate(w, q4_gens_, Perm(d()), [](const Perm& p, int64_t e) { return p.pow(e); });
}

BraidCoset Quotients::eval_braid(int n, const Word& w) const {
  const InducedRep& R = n == 3 ? *b3_ : *b4_;
  if (n != 3 && n != 4) throw std::invalid_argument("n must be 3 or 4");
  Perm g = R.eval(w);
  return {g, R.theta_of(g), R.pure_of(g)};
}

PermTuple eval_pure3(const Quotients& Q, const Word& w) { return Q.eval_pure3(w); }
Perm eval_pure4(const Quotients& Q, const Word& w) { return Q.eval_pure4(w); }
BraidCoset eval_braid(const Quotients& Q, int n, const Word& w) { return Q.eval_braid(n, w); }

}  // namespace gts
