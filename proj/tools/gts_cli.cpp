#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gts.h"

namespace {

struct Failure {
  gts_status code;
};

void check(gts_status s) {
  if (s != GTS_OK) {
    std::cerr << "error: " << gts_last_error() << "\n";
    throw Failure{s};
  }
}

struct SpecDel {
  void operator()(gts_spec* s) const { gts_spec_free(s); }
};
struct QDel {
  void operator()(gts_quotients* q) const { gts_quotients_free(q); }
};
struct LDel {
  void operator()(gts_shadows* l) const { gts_shadows_free(l); }
};
using SpecPtr = std::unique_ptr<gts_spec, SpecDel>;
using QPtr = std::unique_ptr<gts_quotients, QDel>;
using ListPtr = std::unique_ptr<gts_shadows, LDel>;

std::string take(char* s) {
  std::string out = s ? s : "";
  gts_string_free(s);
  return out;
}

uint64_t env_u64(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    std::cerr << "error: " << name << " must be a non-negative integer\n";
    throw Failure{GTS_ERR_USAGE};
  }
}

struct Resources {
  uint64_t cap = 0;
  unsigned jobs = 0;
  void resolve() {
    if (cap == 0) cap = env_u64("GTS_MAX_ELEMENTS", 50000000);
    if (jobs == 0) jobs = static_cast<unsigned>(env_u64("GTS_JOBS", std::max(1u, std::thread::hardware_concurrency())));
    if (jobs == 0) jobs = 1;
  }
};

SpecPtr load(const std::string& path) {
  gts_spec* s = nullptr;
  check(gts_spec_load(path.c_str(), &s));
  return SpecPtr(s);
}

QPtr build(const gts_spec* s, const Resources& r) {
  gts_quotients* q = nullptr;
  check(gts_quotients_build(s, r.cap, &q));
  return QPtr(q);
}

ListPtr enumerate(const gts_quotients* q, const std::string& mode, const Resources& r) {
  gts_shadows* l = nullptr;
  check(gts_enumerate(q, mode.c_str(), r.jobs, &l));
  return ListPtr(l);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out << "\n";
    throw Failure{GTS_ERR_USAGE};
  }
  f << text;
}

void add_resources(CLI::App* app, Resources& r) {
  app->add_option("--cap", r.cap, "element cap for exhaustive tables (default 5e7, env GTS_MAX_ELEMENTS)");
  app->add_option("--jobs", r.jobs, "worker threads (default hardware parallelism, env GTS_JOBS)");
}

const char* tf(int v) { return v ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GT-shadows for finite quotients of the pure braid group PB4"};
  app.require_subcommand(1);
  Resources res;
  std::string spec_path, spec_path2, out, mode = "charming", scope = "charming", shadow_line;
  bool full = false, charming_only = false;
  uint64_t seed = 1, trials = 100;
  uint32_t max_degree = 40, q = 0;

  auto* analyze = app.add_subcommand("analyze", "print the summary row of a spec");
  analyze->add_option("spec", spec_path, "spec file")->required();
  auto* f_full = analyze->add_flag("--full", full, "also count practical and charming shadows and decide isolation");
  analyze->add_flag("--charming-only", charming_only, "count charming shadows and decide isolation")->excludes(f_full);
  add_resources(analyze, res);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate shadows as TSV");
  enumerate_cmd->add_option("spec", spec_path, "spec file")->required();
  enumerate_cmd->add_option("--mode", mode, "practical, charming or pentagon_only")->capture_default_str();
  enumerate_cmd->add_option("--out", out, "output file (default stdout)");
  add_resources(enumerate_cmd, res);

  auto* group = app.add_subcommand("group", "structure of the group of charming shadows of an isolated spec");
  group->add_option("spec", spec_path, "spec file")->required();
  add_resources(group, res);

  auto* furusho = app.add_subcommand("furusho", "Furusho property report");
  furusho->add_option("spec", spec_path, "spec file")->required();
  furusho->add_option("--mode", mode, "strong or weak")->required();
  add_resources(furusho, res);

  auto* make_spec = app.add_subcommand("make-spec", "write a generated spec");
  auto* f_cyc = make_spec->add_option("--cyclic", q, "exponent-sum spec AB_q");
  bool trivial = false;
  make_spec->add_flag("--trivial", trivial, "spec of PB4 itself")->excludes(f_cyc);
  make_spec->add_option("--out", out, "output file (default stdout)");

  auto* groupoid = app.add_subcommand("groupoid", "groupoid operations across specs");
  groupoid->require_subcommand(1);
  auto* g_comp = groupoid->add_subcommand("component", "objects of the connected component");
  g_comp->add_option("spec", spec_path)->required();
  add_resources(g_comp, res);
  auto* g_iso = groupoid->add_subcommand("isolated", "whether every shadow in scope is settled");
  g_iso->add_option("spec", spec_path)->required();
  g_iso->add_option("--scope", scope, "charming or all_practical")->capture_default_str();
  add_resources(g_iso, res);
  auto* g_sharp = groupoid->add_subcommand("nsharp", "intersection of the component objects");
  g_sharp->add_option("spec", spec_path)->required();
  g_sharp->add_option("--out", out);
  add_resources(g_sharp, res);
  auto* g_leq = groupoid->add_subcommand("leq", "whether ker K is contained in ker N");
  g_leq->add_option("K", spec_path)->required();
  g_leq->add_option("N", spec_path2)->required();
  auto* g_same = groupoid->add_subcommand("same", "whether two specs have the same kernel");
  g_same->add_option("A", spec_path)->required();
  g_same->add_option("B", spec_path2)->required();
  auto* g_int = groupoid->add_subcommand("intersect", "spec whose kernel is the intersection");
  g_int->add_option("A", spec_path)->required();
  g_int->add_option("B", spec_path2)->required();
  g_int->add_option("--out", out);
  auto* g_surv = groupoid->add_subcommand("survive", "whether a shadow over N survives into K");
  g_surv->add_option("N", spec_path)->required();
  g_surv->add_option("K", spec_path2)->required();
  g_surv->add_option("--shadow", shadow_line, "\"m=<int> f=<word>\"")->required();
  add_resources(g_surv, res);
  auto* g_search = groupoid->add_subcommand("search", "random search for a non-isolated spec");
  g_search->add_option("--seed", seed)->capture_default_str();
  g_search->add_option("--trials", trials)->capture_default_str();
  g_search->add_option("--max-degree", max_degree)->capture_default_str();
  g_search->add_option("--out", out, "where to write a found spec");
  add_resources(g_search, res);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : GTS_ERR_USAGE;
  }

  try {
    res.resolve();
    if (*analyze) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      gts_info info{};
      check(gts_quotients_info(Q.get(), &info));
      std::string practical = "-", charming = "-", isolated = "-";
      if (full) {
        practical = std::to_string(gts_shadows_count(enumerate(Q.get(), "practical", res).get()));
      }
      if (full || charming_only) {
        charming = std::to_string(gts_shadows_count(enumerate(Q.get(), "charming", res).get()));
        int iso = 0;
        check(gts_is_isolated(Q.get(), "charming", res.jobs, &iso));
        isolated = tf(iso);
      }
      std::cout << "name\tindex_pb4\tindex_f2\tderived_order\tn_ord\tgt_count\tgt_charming_count\tisolated\n";
      std::cout << gts_spec_name(s.get()) << "\t" << info.index_pb4 << "\t" << info.index_f2 << "\t" << info.derived_order << "\t" << info.n_ord
                << "\t" << practical << "\t" << charming << "\t" << isolated << "\n";
    } else if (*enumerate_cmd) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      auto l = enumerate(Q.get(), mode, res);
      char* tsv = nullptr;
      check(gts_shadows_tsv(l.get(), &tsv));
      emit(take(tsv), out);
    } else if (*group) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      auto l = enumerate(Q.get(), "charming", res);
      char* text = nullptr;
      check(gts_shadows_group_report(l.get(), &text));
      std::cout << take(text);
    } else if (*furusho) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      gts_furusho_report r{};
      check(gts_furusho(Q.get(), mode.c_str(), res.jobs, &r));
      std::cout << "spec\tmode\tpentagon_count\textendable_count\tholds\n";
      std::cout << gts_spec_name(s.get()) << "\t" << mode << "\t" << r.pentagon_count << "\t" << r.extendable_count << "\t" << tf(r.holds) << "\n";
    } else if (*make_spec) {
      gts_spec* s = nullptr;
      if (trivial) check(gts_spec_trivial(&s));
      else if (q > 0) check(gts_spec_cyclic(q, &s));
      else {
        std::cerr << "error: make-spec needs --cyclic <q> or --trivial\n";
        return GTS_ERR_USAGE;
      }
      SpecPtr owned(s);
      char* text = nullptr;
      check(gts_spec_write(owned.get(), &text));
      emit(take(text), out);
    } else if (*g_comp) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      char* tsv = nullptr;
      check(gts_component_tsv(Q.get(), res.jobs, &tsv));
      std::cout << take(tsv);
    } else if (*g_iso) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      int iso = 0;
      check(gts_is_isolated(Q.get(), scope.c_str(), res.jobs, &iso));
      std::cout << tf(iso) << "\n";
    } else if (*g_sharp) {
      auto s = load(spec_path);
      auto Q = build(s.get(), res);
      gts_spec* sharp = nullptr;
      check(gts_n_sharp(Q.get(), res.jobs, &sharp));
      SpecPtr owned(sharp);
      char* text = nullptr;
      check(gts_spec_write(owned.get(), &text));
      emit(take(text), out);
    } else if (*g_leq || *g_same) {
      auto a = load(spec_path), b = load(spec_path2);
      int v = 0;
      check(*g_leq ? gts_subgroup_leq(a.get(), b.get(), &v) : gts_same_kernel(a.get(), b.get(), &v));
      std::cout << tf(v) << "\n";
    } else if (*g_int) {
      auto a = load(spec_path), b = load(spec_path2);
      gts_spec* r = nullptr;
      check(gts_intersect(a.get(), b.get(), &r));
      SpecPtr owned(r);
      char* text = nullptr;
      check(gts_spec_write(owned.get(), &text));
      emit(take(text), out);
    } else if (*g_surv) {
      auto n = load(spec_path), k = load(spec_path2);
      auto QN = build(n.get(), res), QK = build(k.get(), res);
      int v = 0;
      check(gts_survives(QN.get(), shadow_line.c_str(), QK.get(), res.jobs, &v));
      std::cout << tf(v) << "\n";
    } else if (*g_search) {
      gts_spec* found = nullptr;
      char* log = nullptr;
      check(gts_search_non_isolated(seed, trials, max_degree, res.jobs, &found, &log));
      SpecPtr owned(found);
      std::cerr << take(log);
      if (!owned) {
        std::cout << "none\n";
      } else {
        char* text = nullptr;
        check(gts_spec_write(owned.get(), &text));
        emit(take(text), out);
      }
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
