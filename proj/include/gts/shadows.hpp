#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gts/braidq.hpp"

namespace gts {

enum class EnumMode { Practical, Charming, PentagonOnly };
EnumMode parse_mode(const std::string& s);
std::string mode_name(EnumMode m);

// Which enumerated table f_coset_id refers to.
enum class CosetSpace { QF2, Derived, None };

struct ShadowFlags {
  bool is_pair = false;
  bool friendly = false;
  bool is_shadow = false;
  bool charming = false;
};

struct GtShadow {
  QuotientsPtr target;
  int64_t m = 0;  // residue in [0, N_ord)
  Word f_word{alphabets::F2()};
  Perm f_elem;  // image of f in QF2 on the flattened 5d points
  int64_t f_coset_id = -1;
  CosetSpace space = CosetSpace::None;
  ShadowFlags flags;
  // cached result of the settled test
  std::optional<bool> settled;

  bool same_element(const GtShadow& o) const { return m == o.m && f_elem == o.f_elem; }
  std::string to_line() const;  // "m=<int> f=<word>"
};

int64_t mod_nord(int64_t m, uint64_t n_ord);
GtShadow parse_shadow_line(QuotientsPtr Q, const std::string& line);

// Evaluation of one candidate f in B3/N_PB3, reusable across m.
struct FContext {
  Word f_word{alphabets::F2()};
  Perm f_elem;     // in QF2
  Perm f_ind;      // induced permutation in the B3 model
  Perm f_ind_inv;
};
FContext make_fcontext(const Quotients& Q, const Word& f_word);

bool hexagons_hold(const Quotients& Q, int64_t m, const Word& f_word);
bool hexagons_hold(const Quotients& Q, int64_t m, const FContext& fc);
// via phi substitution and evaluation in Q4
bool pentagon_holds(const Quotients& Q, const Word& f_word);
// on the QF2 element directly: slots 4*2*0 against 3*1
bool pentagon_holds_elem(const Quotients& Q, const Perm& f_elem);

// images of x12, x23, x13, c in Q3 (flattened)
std::array<Perm, 4> t3_images(const Quotients& Q, int64_t m, const Word& f_word);
std::array<Perm, 4> t3_images(const Quotients& Q, int64_t m, const FContext& fc);
// images of the six x's in Q4
std::array<Perm, 6> t4_images(const Quotients& Q, int64_t m, const Word& f_word);

ShadowFlags classify(const Quotients& Q, int64_t m, const Word& f_word);
ShadowFlags classify(const Quotients& Q, int64_t m, const FContext& fc);

std::vector<GtShadow> enumerate_shadows(QuotientsPtr Q, EnumMode mode, unsigned jobs);

GtShadow identity_shadow(QuotientsPtr Q);
// composite of sh2 after sh1; throws if sh2's source differs from sh1's target
GtShadow compose(const GtShadow& sh2, const GtShadow& sh1);
// (m, f) of the composite only, both over one settled target
std::pair<int64_t, Perm> compose_elem(const GtShadow& sh2, const GtShadow& sh1);
// compose-practical formula at word level
Word compose_word(const Word& f2, int64_t m2, const Word& f1);
GtShadow inverse_in_group(const GtShadow& sh);
SubgroupSpec source_spec(const Quotients& Q, const GtShadow& sh);
uint64_t cyclotomic(const GtShadow& sh);

// Finite group of settled shadows over one target under composition.
struct ShadowGroup {
  std::vector<GtShadow> elems;
  std::vector<std::vector<uint32_t>> table;  // table[a][b] = a after b
  uint32_t identity = 0;

  size_t size() const { return elems.size(); }
  int64_t find(int64_t m, const Perm& f_elem) const;
  // left regular representation, one permutation per element
  std::vector<Perm> regular() const;
  FinGroup as_perm_group() const;
  FinGroup subgroup(const std::vector<uint32_t>& members) const;
  uint64_t element_order(uint32_t a) const;
};
// throws std::runtime_error if the set is not closed under composition
ShadowGroup shadow_group(const std::vector<GtShadow>& elems);

std::string shadows_tsv(const std::vector<GtShadow>& shadows, EnumMode mode);

}  // namespace gts
