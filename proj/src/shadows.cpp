#include "gts/shadows.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <tuple>
#include <map>
#include <sstream>
#include <thread>

#include "gts/groupoid.hpp"

namespace gts {

EnumMode parse_mode(const std::string& s) {
  if (s == "practical") return EnumMode::Practical;
  if (s == "charming") return EnumMode::Charming;
  if (s == "pentagon_only" || s == "pentagon") return EnumMode::PentagonOnly;
  throw std::invalid_argument("unknown mode '" + s + "' (expected practical, charming or pentagon_only)");
}

std::string mode_name(EnumMode m) {
  switch (m) {
    case EnumMode::Practical: return "practical";
    case EnumMode::Charming: return "charming";
    case EnumMode::PentagonOnly: return "pentagon_only";
  }
  return "?";
}

int64_t mod_nord(int64_t m, uint64_t n_ord) {
  const int64_t n = static_cast<int64_t>(n_ord);
  int64_t r = m % n;
  return r < 0 ? r + n : r;
}

std::string GtShadow::to_line() const { return "m=" + std::to_string(m) + " f=" + f_word.to_string(); }

namespace {

Perm ppow(const Perm& p, int64_t e) { return p.pow(e); }

Word rename_into(const Word& w, const Alphabet& target, const std::vector<std::string>& names) {
  std::vector<Word> assign;
  for (const auto& n : names) assign.push_back(Word::gen(target, n));
  return substitute(w, assign);
}

Word f2_to_b3(const Word& f) { return rename_into(f, alphabets::B3(), {"x12", "x23"}); }

Word pb4_to_b4(const Word& w) {
  return rename_into(w, alphabets::B4(), std::vector<std::string>(kPB4Names.begin(), kPB4Names.end()));
}

struct B3Consts {
  Perm s1, s2, x12, x23, x13, s1s2, s2s1, x13x23, x12x13;
};

B3Consts b3_consts(const Quotients& Q) {
  const InducedRep& R = Q.b3();
  const Alphabet& A = R.alphabet();
  auto L = [&](const char* n) { return R.letter(A.symbol(n)); };
  B3Consts c{L("s1"), L("s2"), L("x12"), L("x23"), L("x13"), Perm(), Perm(), Perm(), Perm()};
  c.s1s2 = c.s1 * c.s2;
  c.s2s1 = c.s2 * c.s1;
  c.x13x23 = c.x13 * c.x23;
  c.x12x13 = c.x12 * c.x13;
  return c;
}

bool pure_identity(const InducedRep& R, const Perm& d) {
  if (!R.theta_of(d).is_identity()) throw std::logic_error("hexagon difference has nontrivial permutation part");
  return R.pure_of(d).is_identity();
}

}  // namespace

FContext make_fcontext(const Quotients& Q, const Word& f_word) {
  FContext fc;
  fc.f_word = f_word;
  fc.f_elem = Q.eval_f2(f_word);
  fc.f_ind = Q.b3().eval(f2_to_b3(f_word));
  fc.f_ind_inv = fc.f_ind.inverse();
  return fc;
}

bool hexagons_hold(const Quotients& Q, int64_t m, const FContext& fc) {
  const B3Consts c = b3_consts(Q);
  const Perm& F = fc.f_ind;
  const Perm& Fi = fc.f_ind_inv;
  Perm x12m = c.x12.pow(m), x23m = c.x23.pow(m);
  Perm lhs1 = c.s1 * x12m * Fi * c.s2 * x23m * F;
  Perm rhs1 = Fi * c.s1s2 * c.x13x23.pow(m);
  if (!pure_identity(Q.b3(), lhs1.inverse() * rhs1)) return false;
  Perm lhs2 = Fi * c.s2 * x23m * F * c.s1 * x12m;
  Perm rhs2 = c.s2s1 * c.x12x13.pow(m) * F;
  return pure_identity(Q.b3(), lhs2.inverse() * rhs2);
}

bool hexagons_hold(const Quotients& Q, int64_t m, const Word& f_word) { return hexagons_hold(Q, m, make_fcontext(Q, f_word)); }

bool pentagon_holds(const Quotients& Q, const Word& f_word) {
  Word p = f2_to_pb3(f_word);
  auto e = [&](const char* phi) { return Q.eval_pure4(phi_substitute(phi, p)); };
  return e("234") * e("1_23_4") * e("123") == e("1_2_34") * e("12_3_4");
}

bool pentagon_holds_elem(const Quotients& Q, const Perm& f) {
  const uint32_t d = Q.d();
  auto slot = [&](uint32_t k, uint32_t i) { return f[k * d + i] - k * d; };
  for (uint32_t i = 0; i < d; ++i)
    if (slot(4, slot(2, slot(0, i))) != slot(3, slot(1, i))) return false;
  return true;
}

std::array<Perm, 4> t3_images(const Quotients& Q, int64_t m, const FContext& fc) {
  const int64_t k = 2 * m + 1;
  Perm t12 = Q.t3_flat(0).pow(k);
  Perm t23 = Q.t3_flat(1).pow(k).conj(fc.f_elem);
  const B3Consts c = b3_consts(Q);
  Perm x12m = c.x12.pow(m);
  Perm g = x12m.inverse() * c.s1.inverse() * fc.f_ind_inv * c.x23.pow(k) * fc.f_ind * c.s1 * x12m;
  if (!Q.b3().theta_of(g).is_identity()) throw std::logic_error("image of x13 is not pure");
  Perm t13 = Q.b3().pure_of(g);
  Perm tc = Q.c_flat().pow(k);
  return {t12, t23, t13, tc};
}

std::array<Perm, 4> t3_images(const Quotients& Q, int64_t m, const Word& f_word) { return t3_images(Q, m, make_fcontext(Q, f_word)); }

std::array<Perm, 6> t4_images(const Quotients& Q, int64_t m, const Word& f_word) {
  const InducedRep& R = Q.b4();
  const Alphabet& A = R.alphabet();
  auto L = [&](const char* n) { return R.letter(A.symbol(n)); };
  Perm P = R.eval(pb4_to_b4(f2_to_pb4(f_word, "123")));
  Perm S = R.eval(pb4_to_b4(f2_to_pb4(f_word, "12_3_4")));
  std::vector<Perm> imgs(static_cast<size_t>(A.size()), Perm(R.degree()));
  imgs[static_cast<size_t>(A.symbol("s1"))] = L("s1") * L("x12").pow(m);
  imgs[static_cast<size_t>(A.symbol("s2"))] = (L("s2") * L("x23").pow(m)).conj(P);
  imgs[static_cast<size_t>(A.symbol("s3"))] = (L("s3") * L("x34").pow(m)).conj(S);
  std::array<Perm, 6> out;
  const int ij[6][2] = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  for (int g = 0; g < 6; ++g) {
    Perm v = evaluate(x_as_sigma_word(ij[g][0], ij[g][1], A), imgs, Perm(R.degree()), ppow);
    if (!R.theta_of(v).is_identity()) throw std::logic_error("image of a pure generator is not pure");
    out[static_cast<size_t>(g)] = R.pure_of(v);
  }
  return out;
}

namespace {

ShadowFlags classify_impl(const Quotients& Q, int64_t m, const FContext& fc, bool pentagon_known) {
  ShadowFlags fl;
  const uint64_t n = Q.n_ord();
  const int64_t k = 2 * m + 1;
  fl.friendly = gcd64(static_cast<uint64_t>(mod_nord(k, n)), n) == 1;
  fl.is_pair = (pentagon_known || pentagon_holds_elem(Q, fc.f_elem)) && hexagons_hold(Q, m, fc);
  if (!fl.is_pair || !fl.friendly) return fl;
  auto t = t3_images(Q, m, fc);
  fl.is_shadow = StabChain::build({t[0], t[1], t[2]}, Q.flat_degree(), Q.order_q3()).order() == Q.order_q3();
  if (!fl.is_shadow) return fl;
  if (!Q.qf2_derived().contains(fc.f_elem)) return fl;
  fl.charming = StabChain::build({t[0], t[1]}, Q.flat_degree(), Q.order_qf2()).order() == Q.order_qf2();
  return fl;
}

}  // namespace

ShadowFlags classify(const Quotients& Q, int64_t m, const FContext& fc) { return classify_impl(Q, mod_nord(m, Q.n_ord()), fc, false); }

ShadowFlags classify(const Quotients& Q, int64_t m, const Word& f_word) { return classify(Q, m, make_fcontext(Q, f_word)); }

std::vector<GtShadow> enumerate_shadows(QuotientsPtr Q, EnumMode mode, unsigned jobs) {
  if (jobs == 0) jobs = 1;
  const FinGroup& table = mode == EnumMode::Charming ? Q->qf2_derived() : Q->qf2_table();
  const CosetSpace space = mode == EnumMode::Charming ? CosetSpace::Derived : CosetSpace::QF2;
  Q->qf2_derived();  // materialize before workers start
  const uint64_t N = table.order();
  const uint64_t n = Q->n_ord();
  std::vector<int64_t> ms;
  for (uint64_t m = 0; m < n; ++m) {
    if (mode == EnumMode::Charming && gcd64((2 * m + 1) % n, n) != 1) continue;
    ms.push_back(static_cast<int64_t>(m));
  }
  std::vector<std::vector<GtShadow>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      const uint64_t lo = N * j / jobs, hi = N * (j + 1) / jobs;
      for (uint64_t id = lo; id < hi; ++id) {
        Perm f = table.element(static_cast<uint32_t>(id));
        if (!pentagon_holds_elem(*Q, f)) continue;
        Word w = table.witness(static_cast<uint32_t>(id));
        auto make = [&](int64_t m, ShadowFlags fl) {
          GtShadow s;
          s.target = Q;
          s.m = m;
          s.f_word = w;
          s.f_elem = f;
          s.f_coset_id = static_cast<int64_t>(id);
          s.space = space;
          s.flags = fl;
          return s;
        };
        if (mode == EnumMode::PentagonOnly) {
          parts[j].push_back(make(-1, ShadowFlags{}));
          continue;
        }
        FContext fc = make_fcontext(*Q, w);
        for (int64_t m : ms) {
          ShadowFlags fl = classify_impl(*Q, m, fc, true);
          bool keep = mode == EnumMode::Charming ? fl.charming : fl.is_shadow;
          if (keep) parts[j].push_back(make(m, fl));
        }
      }
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> th;
    for (unsigned j = 0; j < jobs; ++j) th.emplace_back(work, j);
    for (auto& t : th) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<GtShadow> out;
  for (auto& p : parts)
    for (auto& s : p) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const GtShadow& a, const GtShadow& b) {
    return a.m != b.m ? a.m < b.m : a.f_coset_id < b.f_coset_id;
  });
  return out;
}

GtShadow identity_shadow(QuotientsPtr Q) {
  GtShadow s;
  s.target = Q;
  s.m = 0;
  s.f_elem = Perm(Q->flat_degree());
  s.f_coset_id = 0;
  s.space = CosetSpace::Derived;
  s.flags = ShadowFlags{true, true, true, true};
  s.settled = true;
  return s;
}

std::pair<int64_t, Perm> compose_elem(const GtShadow& sh2, const GtShadow& sh1) {
  const Quotients& Q = *sh2.target;
  const int64_t k = 2 * sh2.m + 1;
  Perm X = Q.t3_flat(0).pow(k);
  Perm Y = Q.t3_flat(1).pow(k).conj(sh2.f_elem);
  Perm img = evaluate(sh1.f_word, std::vector<Perm>{X, Y}, Perm(Q.flat_degree()), ppow);
  int64_t m = mod_nord(2 * sh1.m * sh2.m + sh1.m + sh2.m, Q.n_ord());
  return {m, sh2.f_elem * img};
}

Word compose_word(const Word& f2, int64_t m2, const Word& f1) {
  const Alphabet& F = alphabets::F2();
  const int64_t k = 2 * m2 + 1;
  Word x = Word::gen(F, "x", k);
  Word y = f2.inverse() * Word::gen(F, "y", k) * f2;
  return f2 * substitute(f1, std::vector<Word>{x, y});
}

namespace {

// prefers the enumerated witness of the coset over a literal word
void attach_word(GtShadow& s, const std::function<Word()>& fallback, CosetSpace preferred) {
  const Quotients& Q = *s.target;
  if (preferred != CosetSpace::QF2) {
    if (auto id = Q.qf2_derived().index_of(s.f_elem)) {
      s.f_coset_id = *id;
      s.space = CosetSpace::Derived;
      s.f_word = Q.qf2_derived().witness(*id);
      return;
    }
  }
  if ((Q.qf2_materialized() || preferred == CosetSpace::QF2) && Q.order_qf2() <= Q.cap()) {
    if (auto id = Q.qf2_table().index_of(s.f_elem)) {
      s.f_coset_id = *id;
      s.space = CosetSpace::QF2;
      s.f_word = Q.qf2_table().witness(*id);
      return;
    }
  }
  s.f_coset_id = -1;
  s.space = CosetSpace::None;
  s.f_word = fallback();
}

bool is_settled_cached(const GtShadow& sh) {
  if (!sh.settled) return same_kernel(source_spec(*sh.target, sh), sh.target->spec());
  return *sh.settled;
}

}  // namespace

GtShadow compose(const GtShadow& sh2, const GtShadow& sh1) {
  bool composable;
  if (sh1.target == sh2.target || same_kernel(sh1.target->spec(), sh2.target->spec()))
    composable = is_settled_cached(sh2);
  else
    composable = same_kernel(source_spec(*sh2.target, sh2), sh1.target->spec());
  if (!composable) throw std::invalid_argument("shadows are not composable: source of the outer one differs from target of the inner one");
  auto [m, f] = compose_elem(sh2, sh1);
  GtShadow r;
  r.target = sh2.target;
  r.m = m;
  r.f_elem = f;
  attach_word(r, [&] { return compose_word(sh2.f_word, sh2.m, sh1.f_word); }, sh2.space == CosetSpace::QF2 ? CosetSpace::QF2 : CosetSpace::Derived);
  r.flags = classify(*r.target, r.m, r.f_word);
  return r;
}

GtShadow inverse_in_group(const GtShadow& sh) {
  if (!is_settled_cached(sh)) throw std::invalid_argument("shadow is not settled");
  const Perm one(sh.target->flat_degree());
  // powers sh^k as (m, f) pairs; the word is recovered afterwards
  std::vector<GtShadow> powers{sh};
  while (!(powers.back().m == 0 && powers.back().f_elem == one)) {
    GtShadow next = powers.back();
    std::tie(next.m, next.f_elem) = compose_elem(powers.back(), sh);
    powers.push_back(std::move(next));
  }
  if (powers.size() == 1) return identity_shadow(sh.target);
  const GtShadow& prev = powers[powers.size() - 2];
  GtShadow r;
  r.target = sh.target;
  r.m = prev.m;
  r.f_elem = prev.f_elem;
  attach_word(
      r,
      [&] {
        Word w = sh.f_word;
        for (size_t k = 1; k + 1 < powers.size(); ++k) w = compose_word(w, powers[k - 1].m, sh.f_word);
        return w;
      },
      sh.space == CosetSpace::QF2 ? CosetSpace::QF2 : CosetSpace::Derived);
  r.flags = classify(*r.target, r.m, r.f_word);
  r.settled = true;
  return r;
}

SubgroupSpec source_spec(const Quotients& Q, const GtShadow& sh) {
  auto imgs = t4_images(Q, sh.m, sh.f_word);
  SubgroupSpec s;
  s.name = Q.spec().name + "_source";
  s.degree = Q.d();
  for (size_t i = 0; i < 6; ++i) s.images[i] = imgs[i];
  return s;
}

uint64_t cyclotomic(const GtShadow& sh) {
  const uint64_t n = sh.target->n_ord();
  uint64_t u = static_cast<uint64_t>(mod_nord(2 * sh.m + 1, n));
  if (gcd64(u, n) != 1) throw std::invalid_argument("shadow is not friendly");
  return u;
}

GtShadow parse_shadow_line(QuotientsPtr Q, const std::string& line) {
  std::istringstream in(line);
  std::string tok;
  std::optional<int64_t> m;
  std::string ftext;
  while (in >> tok) {
    if (tok.rfind("m=", 0) == 0) {
      m = std::stoll(tok.substr(2));
    } else if (tok.rfind("f=", 0) == 0) {
      ftext = tok.substr(2);
      std::string rest;
      std::getline(in, rest);
      ftext += rest;
    } else {
      throw std::invalid_argument("unexpected token '" + tok + "' in shadow line");
    }
  }
  if (!m) throw std::invalid_argument("shadow line needs m=<int>");
  GtShadow s;
  s.target = Q;
  s.m = mod_nord(*m, Q->n_ord());
  Word w = Word::parse(alphabets::F2(), ftext);
  s.f_elem = Q->eval_f2(w);
  attach_word(s, [&] { return w; }, CosetSpace::Derived);
  s.f_word = w;
  s.flags = classify(*Q, s.m, w);
  return s;
}

// ---------------------------------------------------------------- ShadowGroup

int64_t ShadowGroup::find(int64_t m, const Perm& f) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].m == m && elems[i].f_elem == f) return static_cast<int64_t>(i);
  return -1;
}

std::vector<Perm> ShadowGroup::regular() const {
  std::vector<Perm> out;
  for (size_t a = 0; a < elems.size(); ++a) out.push_back(Perm::from_images0(table[a]));
  return out;
}

namespace {

FinGroup perm_group_of(const std::vector<std::vector<uint32_t>>& table, const std::vector<uint32_t>& members, uint32_t identity) {
  const uint32_t n = static_cast<uint32_t>(table.size());
  std::vector<char> in(n, 0);
  in[identity] = 1;
  std::vector<uint32_t> closure{identity};
  std::vector<uint32_t> gens;
  for (uint32_t a : members) {
    if (in[a]) continue;
    gens.push_back(a);
    for (size_t i = 0; i < closure.size(); ++i)
      for (uint32_t g : gens) {
        uint32_t c = table[closure[i]][g];
        if (!in[c]) {
          in[c] = 1;
          closure.push_back(c);
        }
      }
  }
  std::vector<Perm> perms;
  std::vector<Word> words;
  static const Alphabet dummy{"regular", {"g"}, {}};
  for (uint32_t g : gens) {
    perms.push_back(Perm::from_images0(table[g]));
    words.push_back(Word(dummy));
  }
  if (perms.empty()) {
    perms.push_back(Perm(n));
    words.push_back(Word(dummy));
  }
  return FinGroup::enumerate(perms, words, false, static_cast<uint64_t>(n) + 1);
}

}  // namespace

FinGroup ShadowGroup::as_perm_group() const {
  std::vector<uint32_t> all(elems.size());
  for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return perm_group_of(table, all, identity);
}

FinGroup ShadowGroup::subgroup(const std::vector<uint32_t>& members) const { return perm_group_of(table, members, identity); }

uint64_t ShadowGroup::element_order(uint32_t a) const {
  uint64_t k = 1;
  for (uint32_t p = a; p != identity; p = table[a][p]) ++k;
  return k;
}

ShadowGroup shadow_group(const std::vector<GtShadow>& elems) {
  if (elems.empty()) throw std::invalid_argument("empty shadow set");
  ShadowGroup G;
  G.elems = elems;
  const Quotients& Q = *elems.front().target;
  std::map<std::pair<int64_t, Perm>, uint32_t> index;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    if (elems[i].target.get() != &Q) throw std::invalid_argument("shadows over different targets");
    index[{elems[i].m, elems[i].f_elem}] = i;
  }
  auto id = index.find({0, Perm(Q.flat_degree())});
  if (id == index.end()) throw std::runtime_error("identity shadow missing from the set");
  G.identity = id->second;
  // Images of f_b under T_a are evaluated along the BFS path of f_b in its table.
  const bool derived = std::all_of(elems.begin(), elems.end(), [](const GtShadow& s) { return s.space == CosetSpace::Derived && s.f_coset_id >= 0; });
  const FinGroup* table = derived ? &Q.qf2_derived() : nullptr;
  std::vector<std::vector<uint16_t>> paths;
  if (table) {
    for (const auto& s : elems) {
      std::vector<uint16_t> p;
      table->path(static_cast<uint32_t>(s.f_coset_id), p);
      paths.push_back(std::move(p));
    }
  }
  const uint32_t n = static_cast<uint32_t>(elems.size());
  G.table.assign(n, std::vector<uint32_t>(n));
  const Perm one(Q.flat_degree());
  for (uint32_t a = 0; a < n; ++a) {
    const GtShadow& A = elems[a];
    const int64_t k = 2 * A.m + 1;
    Perm X = Q.t3_flat(0).pow(k);
    Perm Y = Q.t3_flat(1).pow(k).conj(A.f_elem);
    std::vector<Perm> gen_img;
    if (table)
      for (const auto& w : table->generator_words()) gen_img.push_back(evaluate(w, std::vector<Perm>{X, Y}, one, ppow));
    for (uint32_t b = 0; b < n; ++b) {
      const GtShadow& B = elems[b];
      Perm img = one;
      if (table) {
        for (uint16_t v : paths[b]) img = img * gen_img[v];
      } else {
        img = evaluate(B.f_word, std::vector<Perm>{X, Y}, one, ppow);
      }
      int64_t m = mod_nord(2 * A.m * B.m + A.m + B.m, Q.n_ord());
      auto it = index.find({m, A.f_elem * img});
      if (it == index.end()) throw std::runtime_error("shadow set is not closed under composition");
      G.table[a][b] = it->second;
    }
  }
  return G;
}

std::string shadows_tsv(const std::vector<GtShadow>& shadows, EnumMode mode) {
  std::string out = "m\tf_coset_id\tf_word\tis_pair\tfriendly\tis_shadow\tcharming\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& s : shadows) {
    if (mode == EnumMode::PentagonOnly) {
      out += "-\t" + std::to_string(s.f_coset_id) + "\t" + s.f_word.to_string() + "\t-\t-\t-\t-\n";
      continue;
    }
    out += std::to_string(s.m) + "\t" + std::to_string(s.f_coset_id) + "\t" + s.f_word.to_string() + "\t" + b(s.flags.is_pair) + "\t" +
           b(s.flags.friendly) + "\t" + b(s.flags.is_shadow) + "\t" + b(s.flags.charming) + "\n";
  }
  return out;
}

}  // namespace gts
