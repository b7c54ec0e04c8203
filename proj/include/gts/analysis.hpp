#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gts/shadows.hpp"

namespace gts {

enum class FurushoMode { Strong, Weak };
FurushoMode parse_furusho_mode(const std::string& s);
std::string furusho_mode_name(FurushoMode m);

struct FurushoReport {
  FurushoMode mode = FurushoMode::Strong;
  uint64_t pentagon_count = 0;
  uint64_t extendable_count = 0;
  bool holds = false;
  static std::string tsv_header();
  std::string tsv_row(const std::string& spec_name) const;
};

// strong: f over all of QF2 (needs the full table within the cap); weak: f over its derived subgroup
FurushoReport furusho(QuotientsPtr Q, FurushoMode mode, unsigned jobs);

// abelianness of Q4; throws std::logic_error if Q3 or QF2 disagree
bool abelian_setting(const Quotients& Q);
// the shadows (m, e) with 2m+1 a unit mod N_ord; throws if not abelian
std::vector<GtShadow> abelian_closed_form(QuotientsPtr Q);

}  // namespace gts

namespace gts {

struct SylowInfo {
  uint64_t p = 0;
  uint64_t order = 0;
  bool abelian = false;
};

// Structure of a finite group of settled shadows.
struct GroupStructure {
  uint64_t order = 0;
  bool abelian = false;
  // ids (r, s) satisfying r^n, s^2, rsrs with n = order / 2, generating the group
  std::optional<std::pair<uint32_t, uint32_t>> dihedral;
  uint64_t kernel_order = 0;  // kernel of the cyclotomic character
  bool kernel_abelian = false;
  bool kernel_cyclic = false;
  std::vector<uint64_t> kernel_invariants;  // primary, only when abelian
  std::vector<SylowInfo> sylow;
  std::string to_text() const;
};
// a maximal p-subgroup, built greedily from p-elements
std::vector<uint32_t> sylow_subgroup(const ShadowGroup& G, uint64_t p);
std::vector<uint32_t> cyclotomic_kernel(const ShadowGroup& G);
GroupStructure group_structure(const ShadowGroup& G);

}  // namespace gts
