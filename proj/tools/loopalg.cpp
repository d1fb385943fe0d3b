// loopalg: verification runs over the loop-algebra engine.
//
// Exit status: 0 when every check passes, 1 when a check fails (the report is
// still written), 2 for usage errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loopalg/centralizer.hpp"
#include "loopalg/gaudin.hpp"
#include "loopalg/io.hpp"
#include "loopalg/properties.hpp"
#include "loopalg/talalaev.hpp"

using namespace loopalg;

namespace {

struct Common {
  std::string format = "json";
  std::string out;
  int workers = 0;
  bool serial = false;
  bool timings = false;
  std::string algebra;
  int rank = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LieAlgebraSpec resolve_algebra(const Common& c, const std::string& fallback_kind, int fallback_rank) {
  if (!c.algebra.empty()) {
    auto spec = parse_algebra(c.algebra);
    if (c.rank != 0 && c.rank != spec.rank()) throw UsageError("--rank disagrees with --algebra");
    return spec;
  }
  return parse_algebra(fallback_kind + std::to_string(c.rank != 0 ? c.rank : fallback_rank));
}

void write_output(const Common& c, const std::string& subcommand, const std::string& text) {
  std::string path = c.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("LOOPALG_OUT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (subcommand + "." + c.format)).string();
    }
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json config_echo(const std::string& sub, const LieAlgebraSpec& spec) {
  Json j;
  j["subcommand"] = sub;
  j["algebra"] = spec.name();
  return j;
}

std::vector<Rational> parse_points(const std::string& s) {
  std::vector<Rational> pts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) pts.push_back(parse_rational(item));
  return pts;
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw UsageError("format " + c.format + " is not available for this subcommand");
}

int run_talalaev(const Common& c, int z_order, bool check_commute, bool check_symbols) {
  require_format(c, {"json"});
  const auto spec = resolve_algebra(c, "gl", 2);
  const Exec exec = c.serial ? Exec::serial : Exec::parallel;
  Timer timer;
  const auto q = compute_Q(spec, z_order, exec);
  std::optional<CommuteReport> commute;
  if (check_commute) commute = check_pairwise_commute(spec, q, exec);
  Json report = talalaev_json(spec, q, commute ? &*commute : nullptr);
  bool pass = !commute || commute->all_zero;
  if (check_symbols) {
    const auto sym = identify_symbols(spec, q);
    report["symbols"] = symbol_json(sym);
    pass = pass && sym.matches;
  }
  Json out = config_echo("talalaev", spec);
  out["z_order"] = z_order;
  out["result"] = report;
  out["pass"] = pass;
  if (c.timings) out["seconds"] = timer.seconds();
  write_output(c, "talalaev", dump(out));
  return pass ? 0 : 1;
}

int run_classical(const Common& c, int z_order) {
  require_format(c, {"json"});
  const auto spec = resolve_algebra(c, "gl", 2);
  const auto gens = classical_generators(spec, z_order);
  const auto invariants = charpoly_invariants(spec);
  Json out = config_echo("classical", spec);
  out["z_order"] = z_order;
  Json g = Json::object();
  bool pass = true;
  for (const auto& [kn, p] : gens) {
    g[std::to_string(kn.first) + "," + std::to_string(kn.second)] = poly_to_json(spec, p.terms());
    // Independent route: coefficient of z^(n-1) in i(z) applied to the invariant.
    const auto series = embed_iz(invariants.at(static_cast<std::size_t>(kn.first - 1)), z_order);
    pass = pass && series.at(static_cast<std::size_t>(kn.second - 1)) == p;
  }
  out["generators"] = g;
  out["cross_check"] = pass;
  out["pass"] = pass;
  write_output(c, "classical", dump(out));
  return pass ? 0 : 1;
}

int run_centralizer_cmd(const Common& c, const std::string& target_name, int max_d, int max_w, bool with_bases) {
  require_format(c, {"json", "csv", "text"});
  const auto target = parse_target(target_name);
  const auto spec = resolve_algebra(c, "sl", 2);
  const bool small = spec.rank() <= 2;
  if (max_d <= 0) max_d = target == CentralizerTarget::invariants ? 2 : target == CentralizerTarget::s1_quantum ? 3 : small ? 4 : 3;
  if (max_w <= 0) max_w = target == CentralizerTarget::invariants ? 2 : target == CentralizerTarget::s1_quantum ? 6 : small ? 10 : 6;
  Timer timer;
  const auto run = run_centralizer(spec, target, max_d, max_w, c.serial ? Exec::serial : Exec::parallel);
  std::string text;
  if (c.format == "text") {
    text = centralizer_table(run);
  } else if (c.format == "csv") {
    text = centralizer_csv(run);
  } else {
    Json out = config_echo("centralizer", spec);
    out["max_degree"] = max_d;
    out["max_weight"] = max_w;
    out["result"] = centralizer_json(spec, run, with_bases);
    out["pass"] = run.pass;
    if (c.timings) out["seconds"] = timer.seconds();
    text = dump(out);
  }
  write_output(c, "centralizer", text);
  return run.pass ? 0 : 1;
}

int run_gaudin(const Common& c, const std::string& points, bool check_commute, bool want_spectrum, int z_order) {
  require_format(c, {"json", "csv"});
  if (c.format == "csv" && !want_spectrum) throw UsageError("csv output holds spectra; add --spectrum");
  const auto spec = resolve_algebra(c, "gl", 2);
  const SiteConfig cfg(parse_points(points));
  const int n = cfg.sites();
  const Exec exec = c.serial ? Exec::serial : Exec::parallel;
  std::vector<TensorPoly> h;
  for (int i = 1; i <= n; ++i) h.push_back(quadratic_hamiltonian(spec, cfg, i));

  Json out = config_echo("gaudin", spec);
  Json pts = Json::array();
  for (const auto& p : cfg.points) pts.push_back(to_string(p));
  out["points"] = pts;
  Json hs = Json::array();
  for (const auto& t : h) hs.push_back(format_tensor(spec, t));
  out["hamiltonians"] = hs;
  bool pass = true;

  if (check_commute) {
    Json checks;
    bool pairwise = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        pairwise = pairwise && tensor_commutator(spec, h[i], h[j], exec).is_zero();
    checks["pairwise_commute"] = pairwise;
    TensorPoly sum;
    for (const auto& t : h) sum += t;
    checks["sum_zero"] = sum.is_zero();
    bool invariance = true;
    for (int a = 0; a < spec.dim(); ++a) {
      const TensorPoly delta = diagonal_element(spec, LieElement::basis(a), n);
      for (const auto& t : h) invariance = invariance && tensor_commutator(spec, t, delta, exec).is_zero();
    }
    checks["global_invariance"] = invariance;
    pass = pairwise && sum.is_zero() && invariance;
    if (spec.kind() == AlgebraKind::gl) {
      const auto q = compute_Q(spec, z_order, exec);
      Json evq = Json::array();
      for (const auto& [nk, poly] : q.q) {
        const TensorPoly ev = evaluate(spec, poly, cfg, exec);
        bool ok = true;
        for (const auto& t : h) ok = ok && tensor_commutator(spec, ev, t, exec).is_zero();
        evq.push_back({{"n", nk.first}, {"k", nk.second}, {"commutes", ok}});
        pass = pass && ok;
      }
      checks["evaluated_Q"] = evq;
    }
    out["checks"] = checks;
  }

  std::string csv;
  if (want_spectrum) {
    std::vector<RatMatrix> mats;
    Json spectra = Json::array();
    for (int i = 0; i < n; ++i) {
      mats.push_back(rep_matrix(spec, h[i], n));
      const auto s = spectrum(mats.back());
      const std::string name = "H" + std::to_string(i + 1);
      csv += spectrum_csv(name, s);
      Json sj = spectrum_json(s);
      sj["name"] = name;
      sj["matrix"] = matrix_json(mats.back());
      spectra.push_back(sj);
    }
    const auto joint = joint_diagonalization(mats);
    Json jj;
    jj["commuting"] = joint.commuting;
    jj["each_diagonalizable"] = joint.each_diagonalizable;
    jj["jointly_diagonalizable"] = joint.jointly_diagonalizable;
    if (joint.eigenspaces) {
      Json spaces = Json::array();
      for (const auto& e : *joint.eigenspaces) {
        Json ev = Json::array();
        for (const auto& v : e.eigenvalues) ev.push_back(to_string(v));
        spaces.push_back({{"eigenvalues", ev}, {"dimension", e.dimension}});
      }
      jj["eigenspaces"] = spaces;
    }
    out["spectra"] = spectra;
    out["joint"] = jj;
    pass = pass && joint.commuting && joint.jointly_diagonalizable;
  }
  out["pass"] = pass;
  write_output(c, "gaudin", c.format == "csv" ? csv : dump(out));
  return pass ? 0 : 1;
}

int run_verify(const Common& c, int max_d, int max_w, std::uint64_t seed, int trials) {
  require_format(c, {"json"});
  const auto spec = resolve_algebra(c, "sl", 2);
  const Exec exec = c.serial ? Exec::serial : Exec::parallel;
  const auto s3 = verify_section3(spec, max_d, max_w, 5, 3, exec);
  const auto props = run_properties(spec, seed, trials, exec);
  Json out = config_echo("verify-lemmas", spec);
  out["seed"] = seed;
  out["section3"] = section3_json(s3);
  Json pj = Json::array();
  bool pass = s3.pass;
  for (const auto& p : props) {
    pj.push_back({{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}});
    pass = pass && p.pass();
  }
  out["properties"] = pj;
  out["pass"] = pass;
  write_output(c, "verify-lemmas", dump(out));
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in loop algebras of gl_r and sl_r"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", common.algebra, "gl<r> or sl<r>");
    sub->add_option("--rank", common.rank, "r")->check(CLI::Range(1, 8));
    sub->add_option("--format", common.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", common.out, "output path (default: $LOOPALG_OUT_DIR/<subcommand>.<format> or stdout)");
    sub->add_option("--workers", common.workers, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
    sub->add_flag("--serial", common.serial, "use the serial reference kernels");
    sub->add_flag("--timings", common.timings, "include wall-clock seconds in JSON reports");
  };

  int z_order = 3;
  bool check_commute = false, check_symbols = false, want_spectrum = false, with_bases = false;
  int max_d = 0, max_w = 0, trials = 25;
  std::string target = "s1bar", points;
  std::uint64_t seed = default_seed;

  auto* tal = app.add_subcommand("talalaev", "Q_{n,k} family for gl_r");
  add_common(tal);
  tal->add_option("--z-order", z_order, "largest n")->check(CLI::PositiveNumber);
  tal->add_flag("--check-commute", check_commute, "all pairwise commutators");
  tal->add_flag("--check-symbols", check_symbols, "compare gr Q with the determinant generators");

  auto* cls = app.add_subcommand("classical", "determinant generators of A");
  add_common(cls);
  cls->add_option("--z-order", z_order, "largest n")->check(CLI::PositiveNumber);

  auto* cen = app.add_subcommand("centralizer", "component-wise centralizer dimensions");
  add_common(cen);
  cen->add_option("--target", target, "s1bar | h1 | S1quantum | invariants")
      ->check(CLI::IsMember({"s1bar", "h1", "S1quantum", "invariants"}));
  cen->add_option("--max-degree", max_d)->check(CLI::PositiveNumber);
  cen->add_option("--max-weight", max_w)->check(CLI::PositiveNumber);
  cen->add_flag("--with-bases", with_bases, "include kernel bases in JSON");

  auto* gau = app.add_subcommand("gaudin", "quadratic Gaudin Hamiltonians on (C^r)^n");
  add_common(gau);
  gau->add_option("--points", points, "comma-separated nonzero distinct rationals")->required();
  gau->add_flag("--check-commute", check_commute, "symbolic commutation checks");
  gau->add_flag("--spectrum", want_spectrum, "exact spectra of the Hamiltonian matrices");
  gau->add_option("--z-order", z_order, "largest n for evaluated Q_{n,k}")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify-lemmas", "projection identities and engine property suites");
  add_common(ver);
  ver->add_option("--max-degree", max_d)->check(CLI::PositiveNumber);
  ver->add_option("--max-weight", max_w)->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "seed for the randomized suites");
  ver->add_option("--trials", trials)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_worker_count(common.workers);
  try {
    if (tal->parsed()) return run_talalaev(common, z_order, check_commute, check_symbols);
    if (cls->parsed()) return run_classical(common, z_order);
    if (cen->parsed()) return run_centralizer_cmd(common, target, max_d, max_w, with_bases);
    if (gau->parsed()) return run_gaudin(common, points, check_commute, want_spectrum, z_order);
    if (ver->parsed()) return run_verify(common, max_d > 0 ? max_d : 3, max_w > 0 ? max_w : 6, seed, trials);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
