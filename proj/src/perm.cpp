#include "gts/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gts {

namespace {

size_t mix_bytes(const uint8_t* data, size_t len, size_t h = 1469598103934665603ull) {
  for (size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

Perm::Perm(uint32_t degree) : n_(degree) {
  if (degree == 0) throw PermError("degree must be at least 1");
  if (narrow()) {
    narrow_.resize(degree);
    for (uint32_t i = 0; i < degree; ++i) narrow_[i] = static_cast<uint8_t>(i);
  } else {
    wide_.resize(degree);
    std::iota(wide_.begin(), wide_.end(), 0u);
  }
}

Perm Perm::from_images0(std::span<const uint32_t> images) {
  Perm p(static_cast<uint32_t>(images.size()));
  std::vector<char> seen(images.size(), 0);
  for (uint32_t i = 0; i < images.size(); ++i) {
    uint32_t v = images[i];
    if (v >= images.size()) throw PermError("image out of range");
    if (seen[v]) throw PermError("images do not form a bijection");
    seen[v] = 1;
    p.set(i, v);
  }
  return p;
}

Perm Perm::from_images1(std::span<const uint32_t> images) {
  std::vector<uint32_t> z(images.begin(), images.end());
  for (auto& v : z) {
    if (v == 0) throw PermError("point 0 in 1-based image list");
    --v;
  }
  return from_images0(z);
}

Perm Perm::from_bytes(const uint8_t* data, uint32_t degree) {
  Perm p(degree);
  std::copy(data, data + degree, p.narrow_.begin());
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < n_; ++i)
    if ((*this)[i] != i) return false;
  return true;
}

std::vector<uint32_t> Perm::images0() const {
  std::vector<uint32_t> v(n_);
  for (uint32_t i = 0; i < n_; ++i) v[i] = (*this)[i];
  return v;
}

std::vector<uint32_t> Perm::images1() const {
  auto v = images0();
  for (auto& x : v) ++x;
  return v;
}

Perm Perm::operator*(const Perm& q) const {
  if (n_ != q.n_) throw PermError("degree mismatch in compose");
  Perm r(n_);
  if (narrow()) {
    const uint8_t* a = narrow_.data();
    const uint8_t* b = q.narrow_.data();
    uint8_t* c = r.narrow_.data();
    for (uint32_t i = 0; i < n_; ++i) c[i] = a[b[i]];
  } else {
    for (uint32_t i = 0; i < n_; ++i) r.wide_[i] = wide_[q.wide_[i]];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r(n_);
  for (uint32_t i = 0; i < n_; ++i) r.set((*this)[i], i);
  return r;
}

Perm Perm::pow(int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  uint64_t k = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
  Perm acc(n_);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

uint64_t Perm::order() const {
  std::vector<char> seen(n_, 0);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    for (uint32_t j = i; !seen[j]; j = (*this)[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = lcm64(ord, len);
  }
  return ord;
}

Perm Perm::conj(const Perm& q) const { return q.inverse() * (*this) * q; }

std::vector<uint32_t> Perm::support() const {
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < n_; ++i)
    if ((*this)[i] != i) s.push_back(i);
  return s;
}

bool Perm::operator==(const Perm& o) const {
  if (n_ != o.n_) return false;
  return narrow() ? narrow_ == o.narrow_ : wide_ == o.wide_;
}

bool Perm::operator<(const Perm& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return narrow() ? narrow_ < o.narrow_ : wide_ < o.wide_;
}

size_t Perm::hash() const {
  if (narrow()) return mix_bytes(narrow_.data(), n_);
  return mix_bytes(reinterpret_cast<const uint8_t*>(wide_.data()), n_ * sizeof(uint32_t));
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<char> seen(n_, 0);
  for (uint32_t i = 0; i < n_; ++i) {
    if (seen[i] || (*this)[i] == i) continue;
    out += '(';
    bool first = true;
    for (uint32_t j = i; !seen[j]; j = (*this)[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string Perm::to_oneline() const {
  std::string out = "[";
  for (uint32_t i = 0; i < n_; ++i) {
    if (i) out += ' ';
    out += std::to_string((*this)[i] + 1);
  }
  return out + "]";
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }
Perm inverse(const Perm& p) { return p.inverse(); }
uint64_t element_order(const Perm& p) { return p.order(); }

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eof() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  uint32_t number() {
    skip_ws();
    size_t start = i_;
    uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<uint64_t>(s_[i_] - '0');
      if (v > 0xffffffffull) throw PermError("point index too large");
      ++i_;
    }
    if (i_ == start) throw PermError("expected a point index in '" + std::string(s_) + "'");
    return static_cast<uint32_t>(v);
  }

 private:
  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

Perm parse_cycles(std::string_view text, uint32_t degree) {
  if (degree == 0) throw PermError("degree must be at least 1");
  Scanner sc(text);
  if (sc.peek() == '[') {
    sc.accept('[');
    std::vector<uint32_t> imgs;
    while (!sc.accept(']')) {
      if (sc.eof()) throw PermError("unterminated one-line form");
      sc.accept(',');
      if (sc.peek() == ']') continue;
      imgs.push_back(sc.number());
    }
    if (!sc.eof()) throw PermError("trailing text after one-line form");
    if (imgs.size() > degree) throw PermError("one-line form longer than degree");
    for (uint32_t v : imgs)
      if (v < 1 || v > degree) throw PermError("point out of range");
    for (uint32_t i = static_cast<uint32_t>(imgs.size()); i < degree; ++i) imgs.push_back(i + 1);
    return Perm::from_images1(imgs);
  }
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<char> used(degree, 0);
  if (sc.eof()) throw PermError("empty permutation text");
  while (!sc.eof()) {
    if (!sc.accept('(')) throw PermError("expected '(' in '" + std::string(text) + "'");
    std::vector<uint32_t> cyc;
    while (!sc.accept(')')) {
      if (sc.eof()) throw PermError("unterminated cycle");
      if (!cyc.empty() && !sc.accept(',')) throw PermError("expected ',' between points");
      uint32_t v = sc.number();
      if (v < 1 || v > degree) throw PermError("point " + std::to_string(v) + " out of range");
      if (used[v - 1]) throw PermError("point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return Perm::from_images0(img);
}

Perm direct_sum(const Perm& p, const Perm& q) {
  std::vector<uint32_t> img(p.degree() + q.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[i] = p[i];
  for (uint32_t i = 0; i < q.degree(); ++i) img[p.degree() + i] = p.degree() + q[i];
  return Perm::from_images0(img);
}

Perm restrict_block(const Perm& p, uint32_t offset, uint32_t len) {
  std::vector<uint32_t> img(len);
  for (uint32_t i = 0; i < len; ++i) {
    uint32_t v = p[offset + i];
    if (v < offset || v >= offset + len) throw PermError("block is not invariant");
    img[i] = v - offset;
  }
  return Perm::from_images0(img);
}

PermTuple PermTuple::identity(const std::vector<uint32_t>& degrees) {
  std::vector<Perm> parts;
  for (auto d : degrees) parts.emplace_back(d);
  return PermTuple(std::move(parts));
}

PermTuple PermTuple::unflatten(const Perm& flat, const std::vector<uint32_t>& degrees) {
  std::vector<Perm> parts;
  uint32_t off = 0;
  for (auto d : degrees) {
    parts.push_back(restrict_block(flat, off, d));
    off += d;
  }
  if (off != flat.degree()) throw PermError("flattened degree does not match slot degrees");
  return PermTuple(std::move(parts));
}

std::vector<uint32_t> PermTuple::degrees() const {
  std::vector<uint32_t> d;
  for (auto& p : parts_) d.push_back(p.degree());
  return d;
}

PermTuple PermTuple::operator*(const PermTuple& o) const {
  if (parts_.size() != o.parts_.size()) throw PermError("slot count mismatch");
  std::vector<Perm> r;
  r.reserve(parts_.size());
  for (size_t i = 0; i < parts_.size(); ++i) r.push_back(parts_[i] * o.parts_[i]);
  return PermTuple(std::move(r));
}

PermTuple PermTuple::inverse() const {
  std::vector<Perm> r;
  for (auto& p : parts_) r.push_back(p.inverse());
  return PermTuple(std::move(r));
}

PermTuple PermTuple::pow(int64_t e) const {
  std::vector<Perm> r;
  for (auto& p : parts_) r.push_back(p.pow(e));
  return PermTuple(std::move(r));
}

uint64_t PermTuple::order() const {
  uint64_t o = 1;
  for (auto& p : parts_) o = lcm64(o, p.order());
  return o;
}

bool PermTuple::is_identity() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Perm& p) { return p.is_identity(); });
}

Perm PermTuple::flatten() const {
  std::vector<uint32_t> img;
  uint32_t off = 0;
  for (auto& p : parts_) {
    for (uint32_t i = 0; i < p.degree(); ++i) img.push_back(off + p[i]);
    off += p.degree();
  }
  return Perm::from_images0(img);
}

size_t PermTuple::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (auto& p : parts_) h = (h ^ p.hash()) * 0x100000001b3ull + p.degree();
  return h;
}

std::string PermTuple::to_string() const {
  std::string s = "<";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ", ";
    s += parts_[i].to_cycles();
  }
  return s + ">";
}

uint64_t element_order(const PermTuple& p) { return p.order(); }

}  // namespace gts
