#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gchar/catalog.hpp"
#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "gchar/report.hpp"
#include "gchar/reproduce.hpp"
#include "gchar/series.hpp"

using namespace gchar;

namespace {

struct Options {
  std::string ring_file;
  std::string module_file;
  std::string module2_file;
  std::vector<std::string> witnesses;
  std::string element;
  std::string suite = "all";
  std::string format = "table";
  int i = 0;
  int hmax = kDefaultHmax;
  int dmax = kDefaultDmax;
  std::uint64_t seed = 0;
  int embdim = 0;
  int codim = 0;
  std::string series_what;
  std::string catalog_what;
  std::string catalog_name;
  std::vector<std::string> catalog_params;
  std::string out_dir = ".";
  std::uint32_t prime = kDefaultPrime;
};

struct Inputs {
  GradedRing ring;
  GradedModule module;
  std::string name;
};

GradedRing ring_of(const Options& o) {
  if (o.ring_file.empty()) throw InputError("--ring is required");
  return attach_catalog_components(load_ring(o.ring_file));
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

Inputs inputs(const Options& o) {
  GradedRing r = ring_of(o);
  if (o.module_file.empty()) throw InputError("--module is required");
  return {r, load_module(o.module_file, r).relabeled(stem(o.module_file)), stem(o.module_file)};
}

RankOptions rank_options(const Options& o) {
  RankOptions ro;
  ro.seed = o.seed;
  ro.dmax = o.dmax;
  return ro;
}

std::string bounds(const Options& o) { return "hmax=" + std::to_string(o.hmax) + ", dmax=" + std::to_string(o.dmax); }

std::string pdim_value(const PdimVerdict& p) { return p.finite() ? std::to_string(p.value) : "infinite"; }

std::string rank_value(const RankResult& r) { return r.value ? std::to_string(*r.value) : "undefined"; }

std::string rank_status(const RankResult& r, const Options& o) {
  return r.method == "chi" ? kExact : probabilistic(o.seed);
}

Report cmd_betti(const Options& o) {
  Inputs in = inputs(o);
  Resolution res(in.module, o.dmax);
  res.extend_to(o.hmax);
  Report rep;
  const int upto = res.terminated() ? res.stages() : o.hmax;
  std::vector<long long> b = res.betti(upto);
  while (res.terminated() && b.size() > 1 && b.back() == 0) b.pop_back();
  rep.add("betti", in.name, join(b), kExact, res.terminated() ? "" : "through n=" + std::to_string(o.hmax));
  for (const auto& [nd, v] : res.table().entries)
    if (v) rep.add("beta_" + std::to_string(nd.first) + "," + std::to_string(nd.second), in.name, std::to_string(v));
  PdimVerdict p = pdim(res);
  rep.add("pdim", in.name, pdim_value(p), kExact, bounds(o));
  return rep;
}

Report cmd_pdim(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add("pdim", in.name, pdim_value(pdim(in.module, o.dmax)), kExact, bounds(o));
  return rep;
}

Report cmd_depth(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add("depth", in.name, std::to_string(depth(in.module, o.dmax)));
  return rep;
}

Report cmd_chi(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add(o.i ? "chi_" + std::to_string(o.i) : "chi", in.name, std::to_string(chi_classical(in.module, o.i, o.dmax)));
  return rep;
}

Report cmd_rank(const Options& o) {
  Inputs in = inputs(o);
  RankResult r = rank(in.module, rank_options(o));
  Report rep;
  rep.add("rank", in.name, rank_value(r), rank_status(r, o), r.reason);
  return rep;
}

Report cmd_frank(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add("frank", in.name, std::to_string(f_rank(in.module, o.dmax).f_rank));
  return rep;
}

Report cmd_gdim(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add("gdim", in.name, std::to_string(gdim(in.module, o.dmax)));
  return rep;
}

Report cmd_gbetti(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add("gbetti", in.name, join(g_betti(in.module, o.dmax).values));
  return rep;
}

Report cmd_chig(const Options& o) {
  Inputs in = inputs(o);
  Report rep;
  rep.add(o.i ? "chi_g_" + std::to_string(o.i) : "chi_g", in.name, std::to_string(chi_g(in.module, o.i, o.dmax)));
  return rep;
}

Report cmd_gapprox(const Options& o) {
  Inputs in = inputs(o);
  GApproximation a = g_approximation(in.module, o.dmax);
  Report rep;
  rep.add("gdim", in.name, std::to_string(a.gdim));
  rep.add("beta0(G)", in.name, std::to_string(a.g.num_generators()));
  rep.add("beta0(K)", in.name, std::to_string(a.k.num_generators()));
  rep.add("pdim(K)", in.name, pdim_value(pdim(a.k, o.dmax)));
  rep.add("minimal", in.name, a.minimal ? "yes" : "no");
  return rep;
}

Report cmd_strictres(const Options& o) {
  Inputs in = inputs(o);
  StrictResolution s = strict_resolution(in.module, o.dmax);
  Report rep;
  std::vector<long long> b;
  for (int n = 0; n <= s.complex.max_index(); ++n) b.push_back(static_cast<long long>(s.complex.slot(n).num_generators()));
  rep.add("beta0(G_n)", in.name, join(b));
  rep.add("Hom(G,k) ranks", in.name, join(hom_to_residue_ranks(s.complex)));
  rep.add("slot 0 totally reflexive", in.name, is_totally_reflexive(s.complex.slot(0), o.dmax) ? "yes" : "no");
  return rep;
}

Report cmd_proper(const Options& o) {
  Inputs in = inputs(o);
  std::vector<GradedModule> ws;
  for (const auto& w : o.witnesses) ws.push_back(load_module(w, in.ring).relabeled(stem(w)));
  PropernessReport p = properness_test(strict_resolution(in.module, o.dmax).augmented(), ws, o.dmax);
  Report rep;
  rep.add("alternating beta0 sum", in.name, std::to_string(p.alternating_sum));
  rep.add("chi_g", in.name, std::to_string(p.chi_g));
  if (p.verdict == Properness::not_proper) {
    rep.add("proper", in.name, "no", kExact);
  } else {
    std::string passed;
    for (const auto& w : p.witnesses_passed) passed += (passed.empty() ? "" : ",") + w;
    rep.add("proper", in.name, "yes", kWitnessOnly, "witnesses: " + (passed.empty() ? std::string("none") : passed));
  }
  return rep;
}

Report cmd_chig_pair(const Options& o) {
  Inputs in = inputs(o);
  if (o.module2_file.empty()) throw InputError("--module2 is required");
  GradedModule n = load_module(o.module2_file, in.ring);
  Report rep;
  rep.add("chi_g(M,N)", in.name + "," + stem(o.module2_file), std::to_string(chi_g_pair(in.module, n, o.dmax)));
  return rep;
}

Report cmd_quotient_regular(const Options& o) {
  Inputs in = inputs(o);
  if (o.element.empty()) throw InputError("--element is required");
  Polynomial s = parse_polynomial(o.element, in.ring.names(), in.ring.field());
  RegularQuotientReport r = quotient_by_regular(in.module, s, o.dmax);
  Report rep;
  rep.add("chi_g(M)", in.name, std::to_string(r.chi_g_m));
  rep.add("frank(M)", in.name, std::to_string(r.f_rank));
  rep.add("chi_g(M/sM) via cone", in.name, std::to_string(r.chi_g_quotient_cone));
  rep.add("chi_g(M/sM) via G-approximation", in.name, std::to_string(r.chi_g_quotient_engine));
  rep.add("identity holds", in.name, r.holds ? "yes" : "no");
  return rep;
}

Report cmd_epsilon_tau(const Options& o) {
  GradedRing r = ring_of(o);
  std::vector<Candidate> family;
  auto entry = catalog_entry_for(r);
  if (entry) family = entry->candidates();
  if (!o.module_file.empty()) family.push_back({stem(o.module_file), load_module(o.module_file, r)});
  if (family.empty()) throw InputError("ring matches no catalog entry; pass candidate modules with --module");
  EpsilonTau et = epsilon_tau(family, o.i, rank_options(o));
  const std::string st = kCatalogRestricted + ", " + probabilistic(o.seed);
  const std::string fam = std::to_string(et.considered) + " of " + std::to_string(family.size()) + " candidates" +
                          (entry && entry->classification_complete ? ", classification complete" : "");
  Report rep;
  const std::string name = entry ? entry->name : r.label();
  rep.add("epsilon_" + std::to_string(o.i), name, et.epsilon ? std::to_string(*et.epsilon) : "none", st,
          fam + (et.epsilon ? ", witness " + et.epsilon_witness : ""));
  rep.add("tau_" + std::to_string(o.i), name, et.tau ? std::to_string(*et.tau) : "none", st,
          fam + (et.tau ? ", witness " + et.tau_witness : ""));
  return rep;
}

Report cmd_series(const Options& o) {
  CIShape shape{o.embdim, o.codim};
  const std::string name = "e=" + std::to_string(o.embdim) + ",c=" + std::to_string(o.codim);
  Report rep;
  if (o.series_what == "chig-k") {
    rep.add(o.i ? "chi_g_" + std::to_string(o.i) + "(k)" : "chi_g(k)", name, chi_g_of_k(shape, o.i).str());
    std::string g;
    for (const auto& v : g_betti_of_k(shape)) g += (g.empty() ? "" : ",") + v.str();
    rep.add("gbetti(k)", name, g);
  } else {
    TruncatedSeries p = poincare_series(shape, o.hmax);
    rep.add("betti(k)", name, p.to_string(o.hmax + 1), kExact, "through n=" + std::to_string(o.hmax));
  }
  return rep;
}

CatalogParams parse_params(const std::vector<std::string>& kv) {
  CatalogParams p;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("catalog parameter '" + s + "' must look like key=value");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return p;
}

Report cmd_catalog(const Options& o) {
  Report rep;
  if (o.catalog_what == "list") {
    for (const auto& info : catalog_list()) rep.add("entry", info.name, info.summary, kExact, info.params);
    return rep;
  }
  if (o.catalog_name.empty()) throw InputError("catalog build needs an entry name");
  CatalogEntry e = build(o.catalog_name, parse_params(o.catalog_params), o.prime);
  std::filesystem::create_directories(o.out_dir);
  auto write = [&](const std::string& file, const std::string& text) {
    std::filesystem::path path = std::filesystem::path(o.out_dir) / file;
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path.string());
    f << text;
    return path.string();
  };
  rep.add("ring", e.name, write(e.name + ".gr", ring_to_text(e.ring)), kExact, e.ring.describe());
  for (const auto& m : e.modules)
    rep.add("module", m.name, write(e.name + "-" + m.name + ".gm", module_to_text(m.module)), kExact,
            m.totally_reflexive ? "totally reflexive" : "");
  for (const auto& n : e.notes) rep.add("note", e.name, n, kExact);
  return rep;
}

Report cmd_reproduce(const Options& o, bool& failed) {
  ReproduceOptions ro;
  ro.hmax = o.hmax;
  ro.dmax = o.dmax;
  ro.seed = o.seed;
  ro.prime = o.prime;
  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  Report rep;
  for (const auto& s : names) {
    SuiteResult r = reproduce(s, ro);
    failed = failed || !r.passed();
    for (const auto& rec : to_report(r).records()) rep.add(rec);
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-Euler characteristics over graded complete intersections"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring", o.ring_file, "ring definition file");
  app.add_option("--module", o.module_file, "module definition file");
  app.add_option("--module2", o.module2_file, "second module definition file");
  app.add_option("--i", o.i, "index i for chi_i, chi_g_i, epsilon_i, tau_i")->check(CLI::NonNegativeNumber);
  app.add_option("--hmax", o.hmax, "homological bound")->check(CLI::PositiveNumber);
  app.add_option("--dmax", o.dmax, "internal degree bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for probabilistic rank checks");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--witnesses", o.witnesses, "totally reflexive witness modules")->expected(1, -1);
  app.add_option("--element", o.element, "homogeneous element s");
  app.add_option("--suite", o.suite, "reproduction suite, or all");
  app.add_option("--embdim", o.embdim, "embedding dimension e");
  app.add_option("--codim", o.codim, "codimension c");
  app.add_option("--prime", o.prime, "characteristic for catalog builds");
  app.add_option("--out", o.out_dir, "output directory for catalog build");

  const std::vector<std::pair<std::string, std::string>> simple{
      {"betti", "minimal free resolution Betti numbers"},
      {"pdim", "projective dimension"},
      {"depth", "depth"},
      {"chi", "classical Euler characteristic chi_i"},
      {"rank", "rank"},
      {"frank", "largest free summand"},
      {"gdim", "G-dimension"},
      {"gbetti", "relative Betti numbers"},
      {"chig", "G-Euler characteristic chi^G_i"},
      {"gapprox", "G-approximation 0->K->G->M->0"},
      {"strictres", "strict G-resolution"},
      {"proper", "properness of the strict resolution"},
      {"chig-pair", "chi^G(M,N)"},
      {"quotient-regular", "chi^G(M/sM) against chi^G(M) - frank(M)"},
      {"epsilon-tau", "epsilon_i and tau_i over catalog candidates"},
  };
  for (const auto& [name, help] : simple) app.add_subcommand(name, help);
  auto* series = app.add_subcommand("series", "closed forms for the residue field");
  series->add_option("what", o.series_what, "chig-k or betti-k")->required()->check(CLI::IsMember({"chig-k", "betti-k"}));
  auto* catalog = app.add_subcommand("catalog", "list or build catalog entries");
  catalog->add_option("what", o.catalog_what, "list or build")->required()->check(CLI::IsMember({"list", "build"}));
  catalog->add_option("name", o.catalog_name, "entry name");
  catalog->add_option("params", o.catalog_params, "key=value parameters");
  app.add_subcommand("reproduce", "run reproduction suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Format fmt = parse_format(o.format);
    bool failed = false;
    Report rep;
    static const std::map<std::string, Report (*)(const Options&)> table{
        {"betti", cmd_betti},         {"pdim", cmd_pdim},
        {"depth", cmd_depth},         {"chi", cmd_chi},
        {"rank", cmd_rank},           {"frank", cmd_frank},
        {"gdim", cmd_gdim},           {"gbetti", cmd_gbetti},
        {"chig", cmd_chig},           {"gapprox", cmd_gapprox},
        {"strictres", cmd_strictres}, {"proper", cmd_proper},
        {"chig-pair", cmd_chig_pair}, {"quotient-regular", cmd_quotient_regular},
        {"epsilon-tau", cmd_epsilon_tau}, {"series", cmd_series},
        {"catalog", cmd_catalog},
    };
    if (cmd == "reproduce") rep = cmd_reproduce(o, failed);
    else rep = table.at(cmd)(o);
    std::cout << rep.render(fmt);
    return failed ? 1 : 0;
  } catch (const InputError& e) {
    std::cerr << "gchar: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "gchar: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "gchar: " << e.what() << "\n";
    return 1;
  }
}
