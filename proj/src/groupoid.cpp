#include "gts/groupoid.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "gts/shadows.hpp"

namespace gts {

namespace {

std::vector<Perm> image_list(const SubgroupSpec& s) { return {s.images.begin(), s.images.end()}; }

SubgroupSpec pair_spec(const SubgroupSpec& a, const SubgroupSpec& b) {
  SubgroupSpec s;
  s.name = a.name + "_cap_" + b.name;
  s.degree = a.degree + b.degree;
  for (size_t i = 0; i < 6; ++i) s.images[i] = direct_sum(a.images[i], b.images[i]);
  return s;
}

}  // namespace

uint64_t image_order(const SubgroupSpec& s) { return to_u64(StabChain::build(image_list(s), s.degree).order()); }

bool same_kernel(const SubgroupSpec& a, const SubgroupSpec& b) {
  const uint64_t oa = image_order(a), ob = image_order(b);
  if (oa != ob) return false;
  return image_order(pair_spec(a, b)) == oa;
}

bool subgroup_leq(const SubgroupSpec& k, const SubgroupSpec& n) { return image_order(pair_spec(k, n)) == image_order(k); }

SubgroupSpec intersect(const SubgroupSpec& a, const SubgroupSpec& b) { return pair_spec(a, b); }

SubgroupSpec canonicalize(const SubgroupSpec& s) {
  // orbits of the image group
  std::vector<int> comp(s.degree, -1);
  std::vector<std::vector<uint32_t>> orbits;
  for (uint32_t p = 0; p < s.degree; ++p) {
    if (comp[p] >= 0) continue;
    std::vector<uint32_t> orb{p};
    comp[p] = static_cast<int>(orbits.size());
    for (size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : s.images) {
        uint32_t q = g[orb[i]];
        if (comp[q] < 0) {
          comp[q] = comp[p];
          orb.push_back(q);
        }
      }
    if (orb.size() > 1) orbits.push_back(orb);
    else comp[p] = -2;
  }
  auto restrict_to = [&](const std::vector<size_t>& keep) {
    SubgroupSpec r;
    r.name = s.name;
    std::vector<uint32_t> pts;
    for (size_t k : keep) pts.insert(pts.end(), orbits[k].begin(), orbits[k].end());
    if (pts.empty()) return make_trivial_spec();
    std::vector<uint32_t> pos(s.degree, 0);
    for (uint32_t i = 0; i < pts.size(); ++i) pos[pts[i]] = i;
    r.degree = static_cast<uint32_t>(pts.size());
    for (size_t g = 0; g < 6; ++g) {
      std::vector<uint32_t> img(pts.size());
      for (uint32_t i = 0; i < pts.size(); ++i) img[i] = pos[s.images[g][pts[i]]];
      r.images[g] = Perm::from_images0(img);
    }
    return r;
  };
  std::vector<size_t> keep(orbits.size());
  std::iota(keep.begin(), keep.end(), 0);
  for (size_t i = orbits.size(); i-- > 0 && keep.size() > 1;) {
    std::vector<size_t> rest;
    for (size_t k : keep)
      if (k != i) rest.push_back(k);
    if (subgroup_leq(restrict_to(rest), restrict_to({i}))) keep = rest;
  }
  SubgroupSpec r = restrict_to(keep);
  r.name = s.name;
  return r;
}

bool is_settled(const Quotients& Q, const GtShadow& sh) { return same_kernel(source_spec(Q, sh), Q.spec()); }

IsolationScope parse_scope(const std::string& s) {
  if (s == "charming") return IsolationScope::Charming;
  if (s == "all_practical" || s == "practical") return IsolationScope::AllPractical;
  throw std::invalid_argument("unknown scope '" + s + "' (expected charming or all_practical)");
}

bool is_isolated(QuotientsPtr Q, IsolationScope scope, unsigned jobs) {
  auto shadows = enumerate_shadows(Q, scope == IsolationScope::Charming ? EnumMode::Charming : EnumMode::Practical, jobs);
  for (const auto& sh : shadows)
    if (!is_settled(*Q, sh)) return false;
  return true;
}

std::string Component::to_tsv() const {
  std::string out = "object\tdegree\tindex_pb4\tcharming\tsettled\n";
  for (size_t i = 0; i < objects.size(); ++i) {
    const auto& o = objects[i];
    out += std::to_string(i) + "\t" + std::to_string(o.spec.degree) + "\t" + std::to_string(image_order(o.spec)) + "\t" +
           std::to_string(o.charming_count) + "\t" + std::to_string(o.settled_count) + "\n";
  }
  return out;
}

Component connected_component(QuotientsPtr Q, unsigned jobs, size_t max_objects) {
  Component c;
  std::vector<QuotientsPtr> qs{Q};
  c.objects.push_back({Q->spec(), 0, 0});
  for (size_t i = 0; i < c.objects.size(); ++i) {
    QuotientsPtr K = qs[i];
    auto shadows = enumerate_shadows(K, EnumMode::Charming, jobs);
    c.objects[i].charming_count = shadows.size();
    for (const auto& sh : shadows) {
      SubgroupSpec src = source_spec(*K, sh);
      if (same_kernel(src, K->spec())) {
        ++c.objects[i].settled_count;
        continue;
      }
      bool known = false;
      for (const auto& o : c.objects)
        if (same_kernel(src, o.spec)) {
          known = true;
          break;
        }
      if (known) continue;
      if (c.objects.size() >= max_objects) throw std::runtime_error("component exceeds " + std::to_string(max_objects) + " objects");
      src.name = Q->spec().name + "_obj" + std::to_string(c.objects.size());
      c.objects.push_back({src, 0, 0});
      qs.push_back(Quotients::build(src, Q->cap()));
    }
  }
  return c;
}

SubgroupSpec n_sharp(const Component& c) {
  SubgroupSpec acc = c.objects.front().spec;
  for (size_t i = 1; i < c.objects.size(); ++i) acc = canonicalize(intersect(acc, c.objects[i].spec));
  acc.name = c.objects.front().spec.name + "_sharp";
  return acc;
}

GtShadow project_shadow(const GtShadow& sh, QuotientsPtr N) {
  if (!subgroup_leq(sh.target->spec(), N->spec())) throw std::invalid_argument("kernel of the shadow's target is not contained in the kernel of N");
  GtShadow r;
  r.target = N;
  r.m = mod_nord(sh.m, N->n_ord());
  r.f_word = sh.f_word;
  r.f_elem = N->eval_f2(sh.f_word);
  if (auto id = N->qf2_derived().index_of(r.f_elem)) {
    r.f_coset_id = *id;
    r.space = CosetSpace::Derived;
  } else if (N->qf2_materialized()) {
    auto qid = N->qf2_table().index_of(r.f_elem);
    r.f_coset_id = qid ? static_cast<int64_t>(*qid) : -1;
    r.space = CosetSpace::QF2;
  }
  r.flags = classify(*N, r.m, r.f_word);
  return r;
}

bool survives(const GtShadow& sh, QuotientsPtr K, unsigned jobs) {
  QuotientsPtr N = sh.target;
  if (!subgroup_leq(K->spec(), N->spec())) throw std::invalid_argument("kernel of K is not contained in the kernel of the shadow's target");
  for (const auto& t : enumerate_shadows(K, EnumMode::Charming, jobs)) {
    const int64_t m = mod_nord(t.m, N->n_ord());
    if (m == sh.m && N->eval_f2(t.f_word) == sh.f_elem) return true;
  }
  return false;
}

// ---------------------------------------------------------------- Catalog

void Catalog::add(const SubgroupSpec& s) {
  std::lock_guard<std::mutex> lk(mu_);
  if (specs_.count(s.name)) throw std::invalid_argument("duplicate spec name " + s.name);
  specs_[s.name] = s;
  parent_[s.name] = s.name;
}

bool Catalog::has(const std::string& name) const {
  std::lock_guard<std::mutex> lk(mu_);
  return specs_.count(name) > 0;
}

const SubgroupSpec& Catalog::spec(const std::string& name) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = specs_.find(name);
  if (it == specs_.end()) throw std::invalid_argument("no spec named " + name);
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::lock_guard<std::mutex> lk(mu_);
  std::vector<std::string> out;
  for (const auto& kv : specs_) out.push_back(kv.first);
  return out;
}

QuotientsPtr Catalog::quotients(const std::string& name) {
  const SubgroupSpec& s = spec(name);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = quotients_.find(name);
    if (it != quotients_.end()) return it->second;
  }
  QuotientsPtr q = Quotients::build(s, cap_);
  std::lock_guard<std::mutex> lk(mu_);
  return quotients_.emplace(name, q).first->second;
}

std::string Catalog::root(const std::string& n) {
  std::string r = n;
  while (parent_.at(r) != r) r = parent_.at(r);
  return r;
}

bool Catalog::same_kernel(const std::string& a, const std::string& b) {
  const SubgroupSpec &sa = spec(a), &sb = spec(b);
  {
    std::lock_guard<std::mutex> lk(mu_);
    std::string ra = root(a), rb = root(b);
    if (ra == rb) return true;
    auto key = std::minmax(ra, rb);
    auto it = decided_.find({key.first, key.second});
    if (it != decided_.end()) return it->second;
  }
  bool eq = gts::same_kernel(sa, sb);
  std::lock_guard<std::mutex> lk(mu_);
  std::string ra = root(a), rb = root(b);
  if (eq) parent_[ra] = rb;
  else decided_[{std::min(ra, rb), std::max(ra, rb)}] = false;
  return eq;
}

// ---------------------------------------------------------------- random search

std::optional<SubgroupSpec> random_hurwitz_spec(uint64_t seed, uint32_t k, uint32_t max_degree) {
  std::mt19937_64 rng(seed);
  std::array<Perm, 4> start;
  for (auto& g : start) {
    std::vector<uint32_t> img(k);
    std::iota(img.begin(), img.end(), 0);
    // identity entries keep most orbits small
    if (rng() % 2) std::shuffle(img.begin(), img.end(), rng);
    g = Perm::from_images0(img);
  }
  auto key = [](const std::array<Perm, 4>& t) {
    std::string s;
    for (const auto& g : t) s += g.to_oneline() + ";";
    return s;
  };
  std::vector<std::array<Perm, 4>> orbit{start};
  std::unordered_map<std::string, uint32_t> index{{key(start), 0}};
  std::array<std::vector<uint32_t>, 3> sigma;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (int s = 0; s < 3; ++s) {
      std::array<Perm, 4> t = orbit[i];
      const Perm a = t[s], b = t[s + 1];
      t[s] = a * b * a.inverse();
      t[s + 1] = a;
      auto [it, fresh] = index.emplace(key(t), static_cast<uint32_t>(orbit.size()));
      if (fresh) {
        if (orbit.size() >= max_degree) return std::nullopt;
        orbit.push_back(t);
      }
      sigma[s].push_back(it->second);
    }
  }
  const Alphabet& B4 = alphabets::B4();
  const uint32_t d = static_cast<uint32_t>(orbit.size());
  std::vector<Perm> imgs(static_cast<size_t>(B4.size()), Perm(d));
  for (int s = 0; s < 3; ++s) imgs[static_cast<size_t>(B4.symbol("s" + std::to_string(s + 1)))] = Perm::from_images0(sigma[s]);
  SubgroupSpec spec;
  spec.name = "hurwitz_" + std::to_string(seed);
  spec.degree = d;
  const int ij[6][2] = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
  for (int g = 0; g < 6; ++g)
    spec.images[static_cast<size_t>(g)] =
        evaluate(x_as_sigma_word(ij[g][0], ij[g][1], B4), imgs, Perm(d), [](const Perm& p, int64_t e) { return p.pow(e); });
  spec = canonicalize(spec);
  spec.name = "hurwitz_" + std::to_string(seed);
  return spec;
}

SearchResult search_non_isolated(uint64_t seed, uint64_t trials, uint32_t max_degree, unsigned jobs) {
  SearchResult res;
  for (uint64_t t = 0; t < trials; ++t) {
    const uint64_t s = seed + t;
    auto spec = random_hurwitz_spec(s, 3 + static_cast<uint32_t>(s % 2), max_degree);
    ++res.tried;
    if (!spec) {
      res.log.push_back(std::to_string(s) + "\tskipped\torbit too large");
      continue;
    }
    if (!validate_spec(*spec).empty()) {
      res.log.push_back(std::to_string(s) + "\tskipped\trelations fail");
      continue;
    }
    try {
      auto Q = Quotients::build(*spec, kDefaultCap);
      bool iso = is_isolated(Q, IsolationScope::Charming, jobs);
      res.log.push_back(std::to_string(s) + "\tdegree=" + std::to_string(spec->degree) + "\tindex=" + std::to_string(Q->order_q4()) +
                        "\tisolated=" + (iso ? "true" : "false"));
      if (!iso) {
        res.found = spec;
        return res;
      }
    } catch (const CapExceeded& e) {
      res.log.push_back(std::to_string(s) + "\tskipped\t" + e.what());
    }
  }
  return res;
}

}  // namespace gts
