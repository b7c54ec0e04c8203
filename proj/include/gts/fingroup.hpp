#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/perm.hpp"
#include "gts/words.hpp"

namespace gts {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(uint64_t cap, uint64_t partial)
      : std::runtime_error("element cap " + std::to_string(cap) + " exceeded after " + std::to_string(partial) + " elements"),
        cap_(cap), partial_(partial) {}
  uint64_t cap() const { return cap_; }
  uint64_t partial() const { return partial_; }

 private:
  uint64_t cap_, partial_;
};

using u128 = unsigned __int128;
std::string u128_to_string(u128 v);
// throws std::overflow_error when v does not fit
uint64_t to_u64(u128 v);

// Stabilizer chain: randomized construction followed by deterministic
// Schreier generator verification, unless a certified order bound is reached.
class StabChain {
 public:
  explicit StabChain(uint32_t degree) : n_(degree) {}
  // known_bound: order of a group known to contain <gens> (0 if unknown)
  static StabChain build(const std::vector<Perm>& gens, uint32_t degree, u128 known_bound = 0, uint64_t seed = 0x5eed);

  uint32_t degree() const { return n_; }
  u128 order() const;
  bool contains(const Perm& g) const;
  const std::vector<uint32_t>& base() const { return base_; }

 private:
  struct Level {
    uint32_t point;
    std::vector<Perm> gens;
    std::vector<int32_t> pos;  // orbit position of each point, -1 if outside
    std::vector<uint32_t> orbit;
    std::vector<Perm> reps;      // reps[k](point) = orbit[k]
    std::vector<Perm> reps_inv;
  };
  // returns residue and the level where sifting stopped (levels_.size() if it passed all)
  std::pair<Perm, size_t> strip(Perm g, size_t from) const;
  void rebuild_orbit(Level& L);
  void add_residue(const Perm& r, size_t from, size_t upto);
  bool verify_and_complete();
  uint32_t n_;
  std::vector<uint32_t> base_;
  std::vector<Level> levels_;
};

// order of the group generated by perms of one degree
u128 group_order(const std::vector<Perm>& gens, uint32_t degree);
uint64_t subgroup_order(const std::vector<Perm>& elements, uint32_t degree);

// Finite permutation group. Either an exhaustive table (BFS discovery order,
// optional witness words over generator labels) or a stabilizer chain, or both.
class FinGroup {
 public:
  // gen_words[i] is the witness word of gens[i]; all words share one alphabet
  static FinGroup enumerate(const std::vector<Perm>& gens, const std::vector<Word>& gen_words, bool with_witnesses, uint64_t cap);
  // generators labelled by the symbols of `a`, in symbol order
  static FinGroup enumerate(const Alphabet& a, const std::vector<Perm>& gens, bool with_witnesses, uint64_t cap);
  static FinGroup chain_only(const std::vector<Perm>& gens, uint32_t degree, u128 known_bound = 0);
  // labelled generators only; the chain is built on first use
  static FinGroup from_generators(const std::vector<Perm>& gens, const std::vector<Word>& gen_words, uint32_t degree);

  bool exhaustive() const { return static_cast<bool>(table_); }
  bool has_witnesses() const { return table_ && !table_->parent.empty(); }
  uint32_t degree() const { return degree_; }
  uint64_t order() const;
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Word>& generator_words() const { return gen_words_; }

  // exhaustive backend only
  Perm element(uint32_t id) const;
  std::optional<uint32_t> index_of(const Perm& g) const;
  Word witness(uint32_t id) const;
  // generator indices from the identity to id: element(id) = gens[p0] * gens[p1] * ...
  void path(uint32_t id, std::vector<uint16_t>& out) const;
  uint32_t multiply(uint32_t a, uint32_t b) const;
  uint32_t identity_id() const { return 0; }

  bool contains(const Perm& g) const;
  const StabChain& chain() const;

 private:
  struct Table {
    uint32_t width;  // bytes per point: 1 or 4
    std::vector<uint8_t> data;
    std::vector<uint32_t> slots;  // open addressing, UINT32_MAX = empty
    std::vector<uint32_t> parent;
    std::vector<uint16_t> via;
    uint64_t size = 0;
    const uint8_t* at(uint64_t id, uint32_t degree) const { return data.data() + id * degree * width; }
  };
  static size_t hash_cells(const uint8_t* p, size_t len);
  int64_t find(const uint8_t* cells) const;
  void insert(const uint8_t* cells);
  void encode(const Perm& p, std::vector<uint8_t>& out) const;

  uint32_t degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Word> gen_words_;
  std::shared_ptr<Table> table_;
  mutable std::shared_ptr<StabChain> chain_;
};

bool contains(const FinGroup& G, const Perm& g);
// closure of conjugates of generator commutators; witnesses are products of
// conjugated commutator words
FinGroup derived_subgroup(const FinGroup& G, uint64_t cap);
bool is_abelian(const FinGroup& G);
// assignment of generator ids satisfying every relator and generating G
std::optional<std::vector<uint32_t>> match_presentation(const FinGroup& G, int rank, const std::vector<Word>& relators);
// primary invariants of an abelian exhaustive group, ascending
std::vector<uint64_t> abelian_invariants(const FinGroup& G);
// element-order multiset as sorted (order, count) pairs
std::vector<std::pair<uint64_t, uint64_t>> order_statistics(const FinGroup& G);

}  // namespace gts
