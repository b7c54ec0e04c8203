#include "gts/fingroup.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace gts {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

uint64_t to_u64(u128 v) {
  if (v > std::numeric_limits<uint64_t>::max()) throw std::overflow_error("group order exceeds 64 bits: " + u128_to_string(v));
  return static_cast<uint64_t>(v);
}

// ---------------------------------------------------------------- StabChain

std::pair<Perm, size_t> StabChain::strip(Perm g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    int32_t p = L.pos[g[L.point]];
    if (p < 0) return {std::move(g), l};
    g = L.reps_inv[static_cast<size_t>(p)] * g;
  }
  return {std::move(g), levels_.size()};
}

void StabChain::rebuild_orbit(Level& L) {
  L.pos.assign(n_, -1);
  L.orbit.assign(1, L.point);
  L.reps.assign(1, Perm(n_));
  L.reps_inv.assign(1, Perm(n_));
  L.pos[L.point] = 0;
  for (size_t k = 0; k < L.orbit.size(); ++k) {
    uint32_t beta = L.orbit[k];
    for (const Perm& s : L.gens) {
      uint32_t gamma = s[beta];
      if (L.pos[gamma] >= 0) continue;
      L.pos[gamma] = static_cast<int32_t>(L.orbit.size());
      L.orbit.push_back(gamma);
      Perm r = s * L.reps[k];
      L.reps_inv.push_back(r.inverse());
      L.reps.push_back(std::move(r));
    }
  }
}

void StabChain::add_residue(const Perm& r, size_t from, size_t upto) {
  if (upto == levels_.size()) {
    uint32_t pt = 0;
    while (r[pt] == pt) ++pt;
    Level L;
    L.point = pt;
    base_.push_back(pt);
    levels_.push_back(std::move(L));
  }
  from = std::min(from, upto);
  for (size_t l = from; l <= upto; ++l) {
    levels_[l].gens.push_back(r);
    rebuild_orbit(levels_[l]);
  }
}

bool StabChain::verify_and_complete() {
  bool changed = false;
  int64_t i = static_cast<int64_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const size_t li = static_cast<size_t>(i);
    for (size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      for (size_t si = 0; si < levels_[li].gens.size(); ++si) {
        const Level& L = levels_[li];
        const Perm& s = L.gens[si];
        uint32_t gamma = s[L.orbit[k]];
        Perm h = L.reps_inv[static_cast<size_t>(L.pos[gamma])] * s * L.reps[k];
        if (h.is_identity()) continue;
        auto [r, j] = strip(std::move(h), li + 1);
        if (r.is_identity()) continue;
        add_residue(r, li + 1, j);
        i = static_cast<int64_t>(j);
        restarted = changed = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return changed;
}

StabChain StabChain::build(const std::vector<Perm>& gens_in, uint32_t degree, u128 known_bound, uint64_t seed) {
  StabChain C(degree);
  std::vector<Perm> gens;
  for (const auto& g : gens_in) {
    if (g.degree() != degree) throw PermError("generator degree mismatch in stabilizer chain");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return C;
  for (const auto& g : gens) {
    auto [r, j] = C.strip(g, 0);
    if (!r.is_identity()) C.add_residue(r, 0, j);
  }
  auto done = [&] { return known_bound != 0 && C.order() == known_bound; };
  if (done()) return C;
  // product replacement random elements
  std::mt19937_64 rng(seed);
  std::vector<Perm> state;
  while (state.size() < std::max<size_t>(10, gens.size())) state.push_back(gens[state.size() % gens.size()]);
  Perm acc(degree);
  auto step = [&] {
    size_t a = rng() % state.size(), b = rng() % (state.size() - 1);
    if (b >= a) ++b;
    Perm t = (rng() & 1) ? state[b].inverse() : state[b];
    state[a] = (rng() & 1) ? state[a] * t : t * state[a];
    acc = acc * state[a];
    return acc;
  };
  for (int w = 0; w < 50; ++w) step();
  int quiet = 0;
  while (quiet < 40 && !done()) {
    auto [r, j] = C.strip(step(), 0);
    if (r.is_identity()) {
      ++quiet;
    } else {
      quiet = 0;
      C.add_residue(r, 1, j);
    }
  }
  if (done()) return C;
  C.verify_and_complete();
  return C;
}

u128 StabChain::order() const {
  u128 o = 1;
  for (const auto& L : levels_) o *= L.orbit.size();
  return o;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != n_) return false;
  return strip(g, 0).first.is_identity();
}

u128 group_order(const std::vector<Perm>& gens, uint32_t degree) { return StabChain::build(gens, degree).order(); }

uint64_t subgroup_order(const std::vector<Perm>& elements, uint32_t degree) { return to_u64(group_order(elements, degree)); }

// ---------------------------------------------------------------- FinGroup

size_t FinGroup::hash_cells(const uint8_t* p, size_t len) {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ len;
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    uint64_t v;
    std::memcpy(&v, p + i, 8);
    h = (h ^ v) * 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  uint64_t tail = 0;
  std::memcpy(&tail, p + i, len - i);
  h = (h ^ tail) * 0x94d049bb133111ebull;
  h ^= h >> 29;
  return static_cast<size_t>(h);
}

int64_t FinGroup::find(const uint8_t* cells) const {
  const Table& T = *table_;
  const size_t len = static_cast<size_t>(degree_) * T.width;
  const size_t mask = T.slots.size() - 1;
  for (size_t s = hash_cells(cells, len) & mask;; s = (s + 1) & mask) {
    uint32_t id = T.slots[s];
    if (id == UINT32_MAX) return -1;
    if (std::memcmp(T.at(id, degree_), cells, len) == 0) return id;
  }
}

void FinGroup::insert(const uint8_t* cells) {
  Table& T = *table_;
  const size_t len = static_cast<size_t>(degree_) * T.width;
  if ((T.size + 1) * 2 > T.slots.size()) {
    std::vector<uint32_t> fresh(T.slots.size() * 2, UINT32_MAX);
    const size_t mask = fresh.size() - 1;
    for (uint64_t id = 0; id < T.size; ++id) {
      size_t s = hash_cells(T.at(id, degree_), len) & mask;
      while (fresh[s] != UINT32_MAX) s = (s + 1) & mask;
      fresh[s] = static_cast<uint32_t>(id);
    }
    T.slots.swap(fresh);
  }
  T.data.insert(T.data.end(), cells, cells + len);
  const size_t mask = T.slots.size() - 1;
  size_t s = hash_cells(cells, len) & mask;
  while (T.slots[s] != UINT32_MAX) s = (s + 1) & mask;
  T.slots[s] = static_cast<uint32_t>(T.size);
  ++T.size;
}

void FinGroup::encode(const Perm& p, std::vector<uint8_t>& out) const {
  out.resize(static_cast<size_t>(degree_) * table_->width);
  if (table_->width == 1) {
    std::memcpy(out.data(), p.narrow_data(), degree_);
  } else {
    for (uint32_t i = 0; i < degree_; ++i) {
      uint32_t v = p[i];
      std::memcpy(out.data() + 4 * i, &v, 4);
    }
  }
}

namespace {

template <class Cell>
void product_cells(const uint8_t* a_raw, const Cell* b, uint8_t* out_raw, uint32_t n) {
  const Cell* a = reinterpret_cast<const Cell*>(a_raw);
  Cell* out = reinterpret_cast<Cell*>(out_raw);
  for (uint32_t i = 0; i < n; ++i) out[i] = a[b[i]];
}

}  // namespace

FinGroup FinGroup::enumerate(const std::vector<Perm>& gens, const std::vector<Word>& gen_words, bool with_witnesses, uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("enumerate needs at least one generator");
  if (gens.size() != gen_words.size()) throw std::invalid_argument("generator/word count mismatch");
  if (gens.size() > 65535) throw std::invalid_argument("too many generators");
  FinGroup G;
  G.degree_ = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != G.degree_) throw PermError("generator degree mismatch");
  G.gens_ = gens;
  G.gen_words_ = gen_words;
  G.table_ = std::make_shared<Table>();
  Table& T = *G.table_;
  T.width = G.degree_ <= Perm::kNarrowMax ? 1 : 4;
  T.slots.assign(64, UINT32_MAX);
  const uint32_t n = G.degree_;
  std::vector<uint8_t> cells;
  G.encode(Perm(n), cells);
  G.insert(cells.data());
  if (with_witnesses) {
    T.parent.push_back(0);
    T.via.push_back(0);
  }
  std::vector<std::vector<uint8_t>> gcells(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) G.encode(gens[i], gcells[i]);
  std::vector<uint8_t> cur(cells.size()), nxt(cells.size());
  for (uint64_t id = 0; id < T.size; ++id) {
    std::memcpy(cur.data(), T.at(id, n), cur.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      if (T.width == 1)
        product_cells<uint8_t>(cur.data(), gcells[gi].data(), nxt.data(), n);
      else
        product_cells<uint32_t>(cur.data(), reinterpret_cast<const uint32_t*>(gcells[gi].data()), nxt.data(), n);
      if (G.find(nxt.data()) >= 0) continue;
      if (T.size >= cap) throw CapExceeded(cap, T.size);
      G.insert(nxt.data());
      if (with_witnesses) {
        T.parent.push_back(static_cast<uint32_t>(id));
        T.via.push_back(static_cast<uint16_t>(gi));
      }
    }
  }
  return G;
}

FinGroup FinGroup::enumerate(const Alphabet& a, const std::vector<Perm>& gens, bool with_witnesses, uint64_t cap) {
  if (static_cast<int>(gens.size()) != a.size()) throw std::invalid_argument("generator count does not match alphabet " + a.id);
  std::vector<Word> words;
  for (int s = 0; s < a.size(); ++s) words.push_back(Word(a, {{s, 1}}));
  return enumerate(gens, words, with_witnesses, cap);
}

FinGroup FinGroup::chain_only(const std::vector<Perm>& gens, uint32_t degree, u128 known_bound) {
  FinGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.chain_ = std::make_shared<StabChain>(StabChain::build(gens, degree, known_bound));
  return G;
}

FinGroup FinGroup::from_generators(const std::vector<Perm>& gens, const std::vector<Word>& gen_words, uint32_t degree) {
  FinGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.gen_words_ = gen_words;
  return G;
}

uint64_t FinGroup::order() const {
  if (table_) return table_->size;
  return to_u64(chain().order());
}

Perm FinGroup::element(uint32_t id) const {
  if (!table_) throw std::logic_error("element() needs the exhaustive backend");
  if (id >= table_->size) throw std::out_of_range("element id out of range");
  const uint8_t* p = table_->at(id, degree_);
  if (table_->width == 1) return Perm::from_bytes(p, degree_);
  std::vector<uint32_t> img(degree_);
  std::memcpy(img.data(), p, 4ull * degree_);
  return Perm::from_images0(img);
}

std::optional<uint32_t> FinGroup::index_of(const Perm& g) const {
  if (!table_) throw std::logic_error("index_of() needs the exhaustive backend");
  if (g.degree() != degree_) return std::nullopt;
  std::vector<uint8_t> cells;
  encode(g, cells);
  int64_t id = find(cells.data());
  if (id < 0) return std::nullopt;
  return static_cast<uint32_t>(id);
}

void FinGroup::path(uint32_t id, std::vector<uint16_t>& out) const {
  if (!has_witnesses()) throw std::logic_error("group was enumerated without witnesses");
  out.clear();
  while (id != 0) {
    out.push_back(table_->via[id]);
    id = table_->parent[id];
  }
  std::reverse(out.begin(), out.end());
}

Word FinGroup::witness(uint32_t id) const {
  std::vector<uint16_t> p;
  path(id, p);
  Word w(gen_words_.front().alphabet());
  for (uint16_t v : p) w *= gen_words_[v];
  return w;
}

uint32_t FinGroup::multiply(uint32_t a, uint32_t b) const { return *index_of(element(a) * element(b)); }

bool FinGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw PermError("shape mismatch in contains");
  if (table_) return index_of(g).has_value();
  return chain().contains(g);
}

const StabChain& FinGroup::chain() const {
  if (!chain_) chain_ = std::make_shared<StabChain>(StabChain::build(gens_, degree_, table_ ? table_->size : 0));
  return *chain_;
}

bool contains(const FinGroup& G, const Perm& g) { return G.contains(g); }

FinGroup derived_subgroup(const FinGroup& G, uint64_t cap) {
  const auto& gens = G.generators();
  const auto& words = G.generator_words();
  if (words.size() != gens.size() || words.empty()) throw std::invalid_argument("derived_subgroup needs labelled generators");
  const uint32_t n = G.degree();
  std::vector<Perm> S;
  std::vector<Word> SW;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (c.is_identity()) continue;
      S.push_back(c);
      SW.push_back(commutator(words[i], words[j]));
    }
  if (S.empty()) return FinGroup::enumerate({Perm(n)}, {Word(words.front().alphabet())}, true, cap);
  for (;;) {
    FinGroup H = FinGroup::enumerate(S, SW, true, cap);
    bool grew = false;
    for (size_t k = 0; k < S.size() && !grew; ++k)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Perm t = S[k].conj(gens[gi]);
        if (H.contains(t)) continue;
        S.push_back(t);
        SW.push_back(words[gi].inverse() * SW[k] * words[gi]);
        grew = true;
        break;
      }
    if (!grew) return H;
  }
}

bool is_abelian(const FinGroup& G) {
  const auto& g = G.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

std::optional<std::vector<uint32_t>> match_presentation(const FinGroup& G, int rank, const std::vector<Word>& relators) {
  if (!G.exhaustive()) throw std::logic_error("match_presentation needs an exhaustive group");
  const uint64_t N = G.order();
  std::vector<Perm> elems;
  for (uint32_t i = 0; i < N; ++i) elems.push_back(G.element(i));
  std::vector<uint32_t> pick(static_cast<size_t>(rank), 0);
  const Perm one(G.degree());
  for (;;) {
    std::vector<Perm> imgs;
    for (auto id : pick) imgs.push_back(elems[id]);
    bool ok = true;
    for (const auto& r : relators) {
      if (r.alphabet().size() != rank) throw std::invalid_argument("relator alphabet rank mismatch");
      Perm v = evaluate(r, imgs, one, [](const Perm& p, int64_t e) { return p.pow(e); });
      if (!v.is_identity()) {
        ok = false;
        break;
      }
    }
    if (ok && to_u64(group_order(imgs, G.degree())) == N) return pick;
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == N) pick[k++] = 0;
    if (k == pick.size()) return std::nullopt;
  }
}

std::vector<std::pair<uint64_t, uint64_t>> order_statistics(const FinGroup& G) {
  if (!G.exhaustive()) throw std::logic_error("order_statistics needs an exhaustive group");
  std::map<uint64_t, uint64_t> cnt;
  for (uint32_t i = 0; i < G.order(); ++i) ++cnt[G.element(i).order()];
  return {cnt.begin(), cnt.end()};
}

std::vector<uint64_t> abelian_invariants(const FinGroup& G) {
  if (!G.exhaustive()) throw std::logic_error("abelian_invariants needs an exhaustive group");
  if (!is_abelian(G)) throw std::invalid_argument("group is not abelian");
  const uint64_t N = G.order();
  std::vector<uint64_t> orders;
  for (uint32_t i = 0; i < N; ++i) orders.push_back(G.element(i).order());
  std::vector<uint64_t> primes;
  uint64_t m = N;
  for (uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  std::vector<uint64_t> out;
  for (uint64_t p : primes) {
    // cnt[k] = #{g : g^(p^k) = 1}; the number of cyclic factors of order >= p^k is log_p(cnt[k]/cnt[k-1])
    std::vector<uint64_t> cnt{1};
    for (uint64_t pk = p;; pk *= p) {
      uint64_t c = 0;
      for (uint64_t o : orders)
        if (pk % o == 0) ++c;
      cnt.push_back(c);
      if (c == cnt[cnt.size() - 2]) break;
    }
    std::vector<int> ge;  // ge[k] = factors with exponent >= k
    for (size_t k = 1; k + 1 < cnt.size(); ++k) {
      uint64_t ratio = cnt[k] / cnt[k - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      ge.push_back(e);
    }
    for (size_t k = 0; k < ge.size(); ++k) {
      int exactly = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
      uint64_t q = 1;
      for (size_t t = 0; t <= k; ++t) q *= p;
      for (int t = 0; t < exactly; ++t) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gts
