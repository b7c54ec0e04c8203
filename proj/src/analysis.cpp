#include "gts/analysis.hpp"

#include <exception>
#include <thread>

namespace gts {

FurushoMode parse_furusho_mode(const std::string& s) {
  if (s == "strong") return FurushoMode::Strong;
  if (s == "weak") return FurushoMode::Weak;
  throw std::invalid_argument("unknown Furusho mode '" + s + "' (expected strong or weak)");
}

std::string furusho_mode_name(FurushoMode m) { return m == FurushoMode::Strong ? "strong" : "weak"; }

std::string FurushoReport::tsv_header() { return "spec\tmode\tpentagon_count\textendable_count\tholds\n"; }

std::string FurushoReport::tsv_row(const std::string& spec_name) const {
  return spec_name + "\t" + furusho_mode_name(mode) + "\t" + std::to_string(pentagon_count) + "\t" + std::to_string(extendable_count) + "\t" +
         (holds ? "true" : "false") + "\n";
}

FurushoReport furusho(QuotientsPtr Q, FurushoMode mode, unsigned jobs) {
  if (jobs == 0) jobs = 1;
  const FinGroup& table = mode == FurushoMode::Strong ? Q->qf2_table() : Q->qf2_derived();
  const uint64_t N = table.order(), n = Q->n_ord();
  std::vector<int64_t> ms;
  for (uint64_t m = 0; m < n; ++m)
    if (gcd64((2 * m + 1) % n, n) == 1) ms.push_back(static_cast<int64_t>(m));
  std::vector<uint64_t> pent(jobs, 0), ext(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      for (uint64_t id = N * j / jobs; id < N * (j + 1) / jobs; ++id) {
        if (!pentagon_holds_elem(*Q, table.element(static_cast<uint32_t>(id)))) continue;
        ++pent[j];
        FContext fc = make_fcontext(*Q, table.witness(static_cast<uint32_t>(id)));
        for (int64_t m : ms)
          if (hexagons_hold(*Q, m, fc)) {
            ++ext[j];
            break;
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
  FurushoReport r;
  r.mode = mode;
  for (unsigned j = 0; j < jobs; ++j) {
    r.pentagon_count += pent[j];
    r.extendable_count += ext[j];
  }
  r.holds = r.pentagon_count == r.extendable_count;
  return r;
}

namespace {

bool commute_pairwise(const std::vector<Perm>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!(g[i] * g[j] == g[j] * g[i])) return false;
  return true;
}

}  // namespace

bool abelian_setting(const Quotients& Q) {
  const bool q4 = commute_pairwise(Q.q4_generators());
  const bool q3 = commute_pairwise({Q.t3_flat(0), Q.t3_flat(1), Q.t3_flat(2)});
  const bool qf2 = commute_pairwise({Q.t3_flat(0), Q.t3_flat(1)});
  if (q4 != q3 || q4 != qf2) throw std::logic_error("abelianness of Q4, Q3 and QF2 disagree");
  return q4;
}

std::vector<GtShadow> abelian_closed_form(QuotientsPtr Q) {
  if (!abelian_setting(*Q)) throw std::invalid_argument("quotients are not abelian");
  std::vector<GtShadow> out;
  const uint64_t n = Q->n_ord();
  for (uint64_t m = 0; m < n; ++m) {
    if (gcd64((2 * m + 1) % n, n) != 1) continue;
    GtShadow s = identity_shadow(Q);
    s.m = static_cast<int64_t>(m);
    s.settled.reset();
    s.flags = classify(*Q, s.m, s.f_word);
    out.push_back(s);
  }
  return out;
}

}  // namespace gts

namespace gts {

namespace {

bool is_prime_power_of(uint64_t n, uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<uint32_t> closure(const ShadowGroup& G, const std::vector<uint32_t>& gens) {
  std::vector<char> in(G.size(), 0);
  std::vector<uint32_t> out{G.identity};
  in[G.identity] = 1;
  for (size_t i = 0; i < out.size(); ++i)
    for (uint32_t g : gens) {
      uint32_t c = G.table[out[i]][g];
      if (!in[c]) {
        in[c] = 1;
        out.push_back(c);
      }
    }
  return out;
}

bool members_abelian(const ShadowGroup& G, const std::vector<uint32_t>& s) {
  for (uint32_t a : s)
    for (uint32_t b : s)
      if (G.table[a][b] != G.table[b][a]) return false;
  return true;
}

}  // namespace

std::vector<uint32_t> sylow_subgroup(const ShadowGroup& G, uint64_t p) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> P{G.identity};
  std::vector<char> in(G.size(), 0);
  in[G.identity] = 1;
  for (uint32_t g = 0; g < G.size(); ++g) {
    if (in[g] || !is_prime_power_of(G.element_order(g), p)) continue;
    gens.push_back(g);
    auto Q = closure(G, gens);
    if (!is_prime_power_of(Q.size(), p)) {
      gens.pop_back();
      continue;
    }
    P = Q;
    std::fill(in.begin(), in.end(), 0);
    for (uint32_t a : P) in[a] = 1;
  }
  return P;
}

std::vector<uint32_t> cyclotomic_kernel(const ShadowGroup& G) {
  std::vector<uint32_t> out;
  for (uint32_t a = 0; a < G.size(); ++a)
    if (cyclotomic(G.elems[a]) == 1 % G.elems[a].target->n_ord()) out.push_back(a);
  return out;
}

GroupStructure group_structure(const ShadowGroup& G) {
  GroupStructure s;
  s.order = G.size();
  std::vector<uint32_t> all(G.size());
  for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  s.abelian = members_abelian(G, all);
  if (s.order % 2 == 0 && s.order >= 4) {
    static const Alphabet rs{"rs", {"r", "s"}, {}};
    const int64_t n = static_cast<int64_t>(s.order / 2);
    std::vector<Word> rel{Word::gen(rs, "r", n), Word::gen(rs, "s", 2), Word::parse(rs, "r s r s")};
    FinGroup P = G.as_perm_group();
    if (auto hit = match_presentation(P, 2, rel)) {
      // the regular permutation of a sends the identity to a
      auto back = [&](uint32_t id) { return P.element(id)[G.identity]; };
      s.dihedral = std::make_pair(back((*hit)[0]), back((*hit)[1]));
    }
  }
  auto K = cyclotomic_kernel(G);
  s.kernel_order = K.size();
  s.kernel_abelian = members_abelian(G, K);
  for (uint32_t a : K)
    if (G.element_order(a) == K.size()) s.kernel_cyclic = true;
  if (s.kernel_abelian) s.kernel_invariants = abelian_invariants(G.subgroup(K));
  uint64_t n = s.order;
  for (uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    auto P = sylow_subgroup(G, p);
    s.sylow.push_back({p, P.size(), members_abelian(G, P)});
  }
  return s;
}

std::string GroupStructure::to_text() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string out = "order\t" + std::to_string(order) + "\n";
  out += std::string("abelian\t") + b(abelian) + "\n";
  out += "dihedral\t" + (dihedral ? "r=" + std::to_string(dihedral->first) + " s=" + std::to_string(dihedral->second) : std::string("none")) + "\n";
  out += "kernel_order\t" + std::to_string(kernel_order) + "\n";
  out += std::string("kernel_abelian\t") + b(kernel_abelian) + "\n";
  out += std::string("kernel_cyclic\t") + b(kernel_cyclic) + "\n";
  std::string inv;
  for (auto v : kernel_invariants) inv += (inv.empty() ? "" : ",") + std::to_string(v);
  out += "kernel_invariants\t" + (inv.empty() ? std::string("-") : inv) + "\n";
  for (const auto& y : sylow)
    out += "sylow_" + std::to_string(y.p) + "\t" + std::to_string(y.order) + "\t" + (y.abelian ? "abelian" : "nonabelian") + "\n";
  return out;
}

}  // namespace gts
