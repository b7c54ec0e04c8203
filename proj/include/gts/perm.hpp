#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gts {

class PermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Permutation of {1..n}. Points are stored 0-based; images fit one byte
// per point up to degree 256 and four bytes per point above that.
class Perm {
 public:
  static constexpr uint32_t kNarrowMax = 256;

  Perm() : Perm(1) {}
  explicit Perm(uint32_t degree);  // identity
  // images are 0-based; throws if not a bijection
  static Perm from_images0(std::span<const uint32_t> images);
  // images are 1-based, as in the one-line notation [3 1 2]
  static Perm from_images1(std::span<const uint32_t> images);
  static Perm from_bytes(const uint8_t* data, uint32_t degree);

  uint32_t degree() const { return n_; }
  bool narrow() const { return n_ <= kNarrowMax; }
  uint32_t operator[](uint32_t i) const { return narrow() ? narrow_[i] : wide_[i]; }
  uint32_t image1(uint32_t i) const { return (*this)[i - 1] + 1; }
  const uint8_t* narrow_data() const { return narrow_.data(); }

  bool is_identity() const;
  std::vector<uint32_t> images0() const;
  std::vector<uint32_t> images1() const;

  // (p*q)(i) = p(q(i))
  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm pow(int64_t e) const;
  uint64_t order() const;
  // conjugate q^-1 * this * q
  Perm conj(const Perm& q) const;
  std::vector<uint32_t> support() const;

  bool operator==(const Perm& o) const;
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const;
  size_t hash() const;

  // canonical disjoint-cycle text, cycles ordered by least moved point
  std::string to_cycles() const;
  std::string to_oneline() const;

 private:
  void set(uint32_t i, uint32_t v) {
    if (narrow()) narrow_[i] = static_cast<uint8_t>(v); else wide_[i] = v;
  }
  uint32_t n_;
  std::vector<uint8_t> narrow_;
  std::vector<uint32_t> wide_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
uint64_t element_order(const Perm& p);
Perm parse_cycles(std::string_view text, uint32_t degree);
// disjoint union: p acts on 1..dp, q on dp+1..dp+dq
Perm direct_sum(const Perm& p, const Perm& q);
// restriction to points [offset, offset+len), which must be invariant
Perm restrict_block(const Perm& p, uint32_t offset, uint32_t len);

uint64_t gcd64(uint64_t a, uint64_t b);
uint64_t lcm64(uint64_t a, uint64_t b);

// Element of a direct product of symmetric groups, one Perm per slot.
class PermTuple {
 public:
  PermTuple() = default;
  explicit PermTuple(std::vector<Perm> parts) : parts_(std::move(parts)) {}
  static PermTuple identity(const std::vector<uint32_t>& degrees);
  static PermTuple unflatten(const Perm& flat, const std::vector<uint32_t>& degrees);

  size_t slots() const { return parts_.size(); }
  const Perm& operator[](size_t i) const { return parts_[i]; }
  const std::vector<Perm>& parts() const { return parts_; }
  std::vector<uint32_t> degrees() const;

  PermTuple operator*(const PermTuple& o) const;
  PermTuple inverse() const;
  PermTuple pow(int64_t e) const;
  uint64_t order() const;
  bool is_identity() const;
  Perm flatten() const;

  bool operator==(const PermTuple& o) const { return parts_ == o.parts_; }
  bool operator!=(const PermTuple& o) const { return !(*this == o); }
  size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Perm> parts_;
};

uint64_t element_order(const PermTuple& p);

}  // namespace gts

template <>
struct std::hash<gts::Perm> {
  size_t operator()(const gts::Perm& p) const { return p.hash(); }
};
template <>
struct std::hash<gts::PermTuple> {
  size_t operator()(const gts::PermTuple& p) const { return p.hash(); }
};
