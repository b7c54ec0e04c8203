#include "gts.h"

#include <cstring>
#include <string>

#include "gts/analysis.hpp"
#include "gts/groupoid.hpp"
#include "gts/shadows.hpp"

struct gts_spec {
  gts::SubgroupSpec spec;
};
struct gts_quotients {
  gts::QuotientsPtr q;
};
struct gts_shadows {
  std::vector<gts::GtShadow> items;
  gts::EnumMode mode;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
gts_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return GTS_OK;
  } catch (const gts::SpecError& e) {
    last_error = e.what();
    return GTS_ERR_INVALID_SPEC;
  } catch (const gts::PermError& e) {
    last_error = e.what();
    return GTS_ERR_INVALID_SPEC;
  } catch (const gts::CapExceeded& e) {
    last_error = e.what();
    return GTS_ERR_CAP;
  } catch (const gts::WordError& e) {
    last_error = e.what();
    return GTS_ERR_USAGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return GTS_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GTS_ERR_INTERNAL;
  }
}

gts_status null_arg() {
  last_error = "null argument";
  return GTS_ERR_USAGE;
}

gts::SubgroupSpec checked(gts::SubgroupSpec s) {
  auto bad = gts::validate_spec(s);
  if (!bad.empty()) throw gts::SpecError("spec violates PB4 relations: " + bad.front());
  return s;
}

}  // namespace

extern "C" {

const char* gts_last_error(void) { return last_error.c_str(); }
void gts_string_free(char* s) { std::free(s); }

gts_status gts_spec_load(const char* path, gts_spec** out) {
  if (!path || !out) return null_arg();
  return guard([&] { *out = new gts_spec{checked(gts::load_spec(path))}; });
}

gts_status gts_spec_parse(const char* text, gts_spec** out) {
  if (!text || !out) return null_arg();
  return guard([&] { *out = new gts_spec{checked(gts::parse_spec(text))}; });
}

gts_status gts_spec_cyclic(unsigned q, gts_spec** out) {
  if (!out) return null_arg();
  return guard([&] { *out = new gts_spec{gts::make_cyclic_spec(q)}; });
}

gts_status gts_spec_trivial(gts_spec** out) {
  if (!out) return null_arg();
  return guard([&] { *out = new gts_spec{gts::make_trivial_spec()}; });
}

gts_status gts_spec_write(const gts_spec* s, char** text) {
  if (!s || !text) return null_arg();
  return guard([&] { *text = dup(gts::write_spec(s->spec)); });
}

const char* gts_spec_name(const gts_spec* s) { return s ? s->spec.name.c_str() : ""; }
void gts_spec_free(gts_spec* s) { delete s; }

gts_status gts_quotients_build(const gts_spec* s, uint64_t cap, gts_quotients** out) {
  if (!s || !out) return null_arg();
  return guard([&] { *out = new gts_quotients{gts::Quotients::build(s->spec, cap ? cap : gts::kDefaultCap)}; });
}

gts_status gts_quotients_info(const gts_quotients* q, gts_info* out) {
  if (!q || !out) return null_arg();
  return guard([&] {
    out->index_pb4 = q->q->order_q4();
    out->order_q3 = q->q->order_q3();
    out->index_f2 = q->q->order_qf2();
    out->derived_order = q->q->qf2_derived().order();
    out->n_ord = q->q->n_ord();
    out->abelian = gts::abelian_setting(*q->q) ? 1 : 0;
  });
}

void gts_quotients_free(gts_quotients* q) { delete q; }

gts_status gts_enumerate(const gts_quotients* q, const char* mode, unsigned jobs, gts_shadows** out) {
  if (!q || !mode || !out) return null_arg();
  return guard([&] {
    auto m = gts::parse_mode(mode);
    *out = new gts_shadows{gts::enumerate_shadows(q->q, m, jobs), m};
  });
}

size_t gts_shadows_count(const gts_shadows* l) { return l ? l->items.size() : 0; }

gts_status gts_shadows_get(const gts_shadows* l, size_t i, int64_t* m, int64_t* f_coset_id, char** f_word) {
  if (!l) return null_arg();
  if (i >= l->items.size()) {
    last_error = "shadow index out of range";
    return GTS_ERR_USAGE;
  }
  return guard([&] {
    const auto& s = l->items[i];
    if (m) *m = s.m;
    if (f_coset_id) *f_coset_id = s.f_coset_id;
    if (f_word) *f_word = dup(s.f_word.to_string());
  });
}

gts_status gts_shadows_tsv(const gts_shadows* l, char** tsv) {
  if (!l || !tsv) return null_arg();
  return guard([&] { *tsv = dup(gts::shadows_tsv(l->items, l->mode)); });
}

gts_status gts_shadows_group_report(const gts_shadows* l, char** text) {
  if (!l || !text) return null_arg();
  return guard([&] {
    if (l->mode != gts::EnumMode::Charming) throw std::invalid_argument("group report needs a charming enumeration");
    for (const auto& s : l->items)
      if (!gts::is_settled(*s.target, s)) throw std::invalid_argument("target is not isolated; charming shadows do not form a group");
    *text = dup(gts::group_structure(gts::shadow_group(l->items)).to_text());
  });
}

void gts_shadows_free(gts_shadows* l) { delete l; }

gts_status gts_is_isolated(const gts_quotients* q, const char* scope, unsigned jobs, int* out) {
  if (!q || !scope || !out) return null_arg();
  return guard([&] { *out = gts::is_isolated(q->q, gts::parse_scope(scope), jobs) ? 1 : 0; });
}

gts_status gts_component_tsv(const gts_quotients* q, unsigned jobs, char** tsv) {
  if (!q || !tsv) return null_arg();
  return guard([&] { *tsv = dup(gts::connected_component(q->q, jobs).to_tsv()); });
}

gts_status gts_n_sharp(const gts_quotients* q, unsigned jobs, gts_spec** out) {
  if (!q || !out) return null_arg();
  return guard([&] { *out = new gts_spec{gts::n_sharp(gts::connected_component(q->q, jobs))}; });
}

gts_status gts_same_kernel(const gts_spec* a, const gts_spec* b, int* out) {
  if (!a || !b || !out) return null_arg();
  return guard([&] { *out = gts::same_kernel(a->spec, b->spec) ? 1 : 0; });
}

gts_status gts_subgroup_leq(const gts_spec* k, const gts_spec* n, int* out) {
  if (!k || !n || !out) return null_arg();
  return guard([&] { *out = gts::subgroup_leq(k->spec, n->spec) ? 1 : 0; });
}

gts_status gts_intersect(const gts_spec* a, const gts_spec* b, gts_spec** out) {
  if (!a || !b || !out) return null_arg();
  return guard([&] { *out = new gts_spec{gts::intersect(a->spec, b->spec)}; });
}

gts_status gts_survives(const gts_quotients* n, const char* shadow_line, const gts_quotients* k, unsigned jobs, int* out) {
  if (!n || !shadow_line || !k || !out) return null_arg();
  return guard([&] {
    gts::GtShadow sh = gts::parse_shadow_line(n->q, shadow_line);
    *out = gts::survives(sh, k->q, jobs) ? 1 : 0;
  });
}

gts_status gts_search_non_isolated(uint64_t seed, uint64_t trials, uint32_t max_degree, unsigned jobs, gts_spec** found, char** log) {
  if (!found) return null_arg();
  return guard([&] {
    auto r = gts::search_non_isolated(seed, trials, max_degree, jobs);
    *found = r.found ? new gts_spec{*r.found} : nullptr;
    if (log) {
      std::string s;
      for (const auto& line : r.log) s += line + "\n";
      *log = dup(s);
    }
  });
}

gts_status gts_furusho(const gts_quotients* q, const char* mode, unsigned jobs, gts_furusho_report* out) {
  if (!q || !mode || !out) return null_arg();
  return guard([&] {
    auto r = gts::furusho(q->q, gts::parse_furusho_mode(mode), jobs);
    out->pentagon_count = r.pentagon_count;
    out->extendable_count = r.extendable_count;
    out->holds = r.holds ? 1 : 0;
  });
}

}  // extern "C"
