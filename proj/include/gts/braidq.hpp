#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/fingroup.hpp"
#include "gts/perm.hpp"
#include "gts/words.hpp"

namespace gts {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<const char*, 6> kPB4Names = {"x12", "x23", "x13", "x14", "x24", "x34"};
inline constexpr uint64_t kDefaultCap = 50000000;

// Homomorphism PB4 -> S_d given by the images of x12, x23, x13, x14, x24, x34.
struct SubgroupSpec {
  std::string name;
  uint32_t degree = 1;
  std::array<Perm, 6> images;

  const Perm& image(std::string_view gen) const;
};

SubgroupSpec parse_spec(const std::string& text);
SubgroupSpec load_spec(const std::string& path);
std::string write_spec(const SubgroupSpec& spec);
// empty when every relation instance holds
std::vector<std::string> validate_spec(const SubgroupSpec& spec);
SubgroupSpec make_cyclic_spec(uint32_t q);
SubgroupSpec make_trivial_spec();

// Homomorphisms PB3 -> PB4 ("123", "12_3_4", "1_23_4", "1_2_34", "234") and
// PB2 -> PB3 ("12", "23", "12_3", "1_23").
Word phi_substitute(const std::string& phi_name, const Word& w);
// the canonical inclusion F2 -> PB3, x -> x12, y -> x23
Word f2_to_pb3(const Word& f);
// F2 word -> PB4 word through phi_123
Word f2_to_pb4(const Word& f, const std::string& phi_name);

// Rewriting rule sigma_k^sign x sigma_k^-sign as a word over x-generators (n = 4 names).
Word conjugation_rule(int k, int sign, const std::string& x_name, const Alphabet& pure);

// Faithful permutation model of B_n / K for K normal in B_n inside PB_n:
// induced from the action of PB_n / K on `block` points. Points are
// (theta, omega) with theta in S_n.
class InducedRep {
 public:
  // pure_images in pure-alphabet symbol order (PB3: x12, x23, x13, c; PB4: six x's)
  InducedRep(int n, const std::vector<Perm>& pure_images);
  int strands() const { return n_; }
  uint32_t block() const { return block_; }
  uint32_t degree() const { return block_ * static_cast<uint32_t>(thetas_.size()); }
  const Alphabet& alphabet() const;
  Perm letter(int sym) const { return letters_.at(static_cast<size_t>(sym)); }
  Perm eval(const Word& w) const;
  // images of x under conjugation by the section braid of theta
  const std::vector<Perm>& section_images(size_t theta_index) const { return section_[theta_index]; }
  Perm theta_of(const Perm& g) const;
  Perm pure_of(const Perm& g) const;

 private:
  int n_;
  uint32_t block_;
  std::vector<Perm> thetas_;
  std::vector<uint32_t> length_;
  std::vector<std::vector<Perm>> section_;
  std::vector<Perm> letters_;
};

// Element of B_n / K as its induced permutation.
struct BraidCoset {
  Perm induced;
  Perm theta;
  Perm pure;
  bool operator==(const BraidCoset& o) const { return induced == o.induced; }
};

class Quotients {
 public:
  static std::shared_ptr<Quotients> build(const SubgroupSpec& spec, uint64_t cap = kDefaultCap);

  const SubgroupSpec& spec() const { return spec_; }
  uint32_t d() const { return spec_.degree; }
  const std::vector<uint32_t>& slot_degrees() const { return slots_; }
  uint32_t flat_degree() const { return 5 * spec_.degree; }
  uint64_t cap() const { return cap_; }

  const std::vector<Perm>& q4_generators() const { return q4_gens_; }
  // t3 images of x12, x23, x13 and c, flattened onto 5d points
  const Perm& t3_flat(int i) const { return t3_[static_cast<size_t>(i)]; }
  PermTuple t3(int i) const { return PermTuple::unflatten(t3_[static_cast<size_t>(i)], slots_); }
  const Perm& c_flat() const { return t3_[3]; }
  PermTuple c_image() const { return t3(3); }

  uint64_t n_ord() const { return n_ord_; }
  // lcm characterizations: {x12,x23,x12x13,x13x23}, then items with x12x13, x13x23, c
  std::array<uint64_t, 4> n_ord_characterizations() const { return n_ord_chars_; }
  uint64_t order_q4() const { return order_q4_; }
  uint64_t order_q3() const { return order_q3_; }
  uint64_t order_qf2() const { return order_qf2_; }

  const InducedRep& b3() const { return *b3_; }
  const InducedRep& b4() const { return *b4_; }

  const FinGroup& q4_table() const;
  const FinGroup& qf2_table() const;
  const FinGroup& qf2_derived() const;
  bool qf2_materialized() const;
  const FinGroup& q3_chain() const;
  const FinGroup& qf2_chain() const;
  const FinGroup& q4_chain() const;

  // images under t3 / psi
  Perm eval_f2(const Word& f) const;
  PermTuple eval_pure3(const Word& w) const;
  Perm eval_pure3_flat(const Word& w) const;
  Perm eval_pure4(const Word& w) const;
  BraidCoset eval_braid(int n, const Word& w) const;

 private:
  Quotients() = default;
  SubgroupSpec spec_;
  uint64_t cap_ = kDefaultCap;
  std::vector<uint32_t> slots_;
  std::vector<Perm> q4_gens_;
  std::array<Perm, 4> t3_;
  uint64_t n_ord_ = 1;
  std::array<uint64_t, 4> n_ord_chars_{};
  uint64_t order_q4_ = 1, order_q3_ = 1, order_qf2_ = 1;
  std::unique_ptr<InducedRep> b3_, b4_;
  mutable std::mutex mu_;
  mutable std::unique_ptr<FinGroup> q4_table_, qf2_table_, derived_, q3_chain_, qf2_chain_, q4_chain_;
};

using QuotientsPtr = std::shared_ptr<const Quotients>;

inline std::shared_ptr<Quotients> build_quotients(const SubgroupSpec& spec, uint64_t cap = kDefaultCap) { return Quotients::build(spec, cap); }
PermTuple eval_pure3(const Quotients& Q, const Word& w);
Perm eval_pure4(const Quotients& Q, const Word& w);
BraidCoset eval_braid(const Quotients& Q, int n, const Word& w);

// sigma-word of x_ij over the B_n alphabet
Word x_as_sigma_word(int i, int j, const Alphabet& braid);

}  // namespace gts
