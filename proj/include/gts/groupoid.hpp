#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gts/braidq.hpp"

namespace gts {

struct GtShadow;

// order of the image of PB4 under the spec
uint64_t image_order(const SubgroupSpec& s);
bool same_kernel(const SubgroupSpec& a, const SubgroupSpec& b);
// ker k contained in ker n
bool subgroup_leq(const SubgroupSpec& k, const SubgroupSpec& n);
SubgroupSpec intersect(const SubgroupSpec& a, const SubgroupSpec& b);
// kernel-equal spec on the union of nontrivial orbits, dropping orbits whose
// action factors through the others
SubgroupSpec canonicalize(const SubgroupSpec& s);

bool is_settled(const Quotients& Q, const GtShadow& sh);

enum class IsolationScope { Charming, AllPractical };
IsolationScope parse_scope(const std::string& s);
bool is_isolated(QuotientsPtr Q, IsolationScope scope, unsigned jobs);

struct ComponentObject {
  SubgroupSpec spec;
  uint64_t charming_count = 0;
  uint64_t settled_count = 0;
};
struct Component {
  std::vector<ComponentObject> objects;
  std::string to_tsv() const;
};
// closure of {N} under sources of charming shadows
Component connected_component(QuotientsPtr Q, unsigned jobs, size_t max_objects = 64);
SubgroupSpec n_sharp(const Component& c);

// same (m, f_word) over N; requires ker(sh.target) <= ker N
GtShadow project_shadow(const GtShadow& sh, QuotientsPtr N);
// whether sh over N is the projection of a charming shadow over K
bool survives(const GtShadow& sh, QuotientsPtr K, unsigned jobs);

// Specs by name with memoized quotients and kernel classes.
class Catalog {
 public:
  explicit Catalog(uint64_t cap = kDefaultCap) : cap_(cap) {}
  void add(const SubgroupSpec& s);
  bool has(const std::string& name) const;
  const SubgroupSpec& spec(const std::string& name) const;
  std::vector<std::string> names() const;
  QuotientsPtr quotients(const std::string& name);
  bool same_kernel(const std::string& a, const std::string& b);

 private:
  std::string root(const std::string& n);
  uint64_t cap_;
  mutable std::mutex mu_;
  std::map<std::string, SubgroupSpec> specs_;
  std::map<std::string, QuotientsPtr> quotients_;
  std::map<std::string, std::string> parent_;
  std::map<std::pair<std::string, std::string>, bool> decided_;
};

// B4 acting by Hurwitz moves on the orbit of a random tuple in S_k^4,
// restricted to PB4; nullopt if the orbit exceeds max_degree
std::optional<SubgroupSpec> random_hurwitz_spec(uint64_t seed, uint32_t k, uint32_t max_degree);
struct SearchResult {
  uint64_t tried = 0;
  std::optional<SubgroupSpec> found;  // a spec whose component has at least two objects
  std::vector<std::string> log;
};
SearchResult search_non_isolated(uint64_t seed, uint64_t trials, uint32_t max_degree, unsigned jobs);

}  // namespace gts
