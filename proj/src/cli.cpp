#include "regrep/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "regrep/error.hpp"
#include "regrep/parahoric.hpp"
#include "regrep/report.hpp"
#include "regrep/ringpoly.hpp"

namespace regrep {

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

const std::vector<std::string> kParahoricChecks = {"lattice-chain", "parahoric-pi",  "radical-powers",        "shift",
                                                   "ap-formulae",   "trace-duality", "commutator-filtration", "abelian-filtration"};

struct Options {
  std::string ring;
  int n = 2;
  std::string orbit = "all-regular";
  std::string out;
  std::string dump;
  std::string census_path;
  std::string report_path;
  std::string checks;
  std::uint64_t cap = Group::kDefaultCap;
  int jobs = 1;
  int level = -1;
  bool pretty = false;
  bool oracle = false;
  bool no_klp_extension = false;
};

// Runs f(i) for i < count on up to `jobs` threads; results land in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

bool wants(const std::vector<std::string>& ids, const std::string& id) {
  return ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end();
}

void emit(const Json& j, const Options& o) {
  std::string text;
  if (o.pretty)
    text = j.dump(2);
  else
    text = j.dump();
  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out);
    require(static_cast<bool>(f), ErrorCode::ParseError, "cannot write " + o.out);
    f << text << "\n";
  }
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  require(static_cast<bool>(f), ErrorCode::ParseError, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::vector<OrbitRep> select_orbits(const GroupContext& ctx, const std::string& selector) {
  if (selector == "all-regular") {
    auto list = regular_class_list(ctx.ring->truncated(ctx.lp), ctx.n);
    for (auto& o : list) o.level = ctx.lp;
    return list;
  }
  return {parse_orbit(selector, ctx.ring, ctx.n, ctx.lp)};
}

std::vector<RepReport> construct_all(const GroupContext& ctx, const Options& o) {
  const auto orbits = select_orbits(ctx, o.orbit);
  ConstructionOptions options;
  options.cap = o.cap;
  options.klp_extension = !o.no_klp_extension;
  // Warm the shared class cache before fanning out.
  ctx.G->classes();
  return parallel_map<RepReport>(orbits.size(), o.jobs,
                                 [&](std::size_t i) { return construct_orbit(ctx, orbits[i], options); });
}

Json construct_doc(const GroupContext& ctx, const std::vector<RepReport>& reports, const Verdict* verdict) {
  std::vector<Json> sections;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::optional<bool> match;
    if (verdict) match = verdict->orbits[i].ok();
    sections.push_back(report_json(ctx, reports[i], match));
  }
  Json doc;
  if (sections.size() == 1) {
    doc = sections.front();
  } else {
    doc["ring"] = ctx.ring->spec().to_string();
    doc["N"] = ctx.n;
    doc["r"] = ctx.r;
    doc["orbits"] = sections;
  }
  doc["classes"] = classes_json(ctx.G);
  return doc;
}

bool ledger_ok(const std::vector<RepReport>& reports) {
  for (const auto& r : reports)
    if (!r.ledger.all_passed()) return false;
  return true;
}

int cmd_ring_info(const Options& o) {
  const auto spec = RingSpec::parse(o.ring);
  const auto ring = Ring::make(spec);
  Json j;
  j["ring"] = spec.to_string();
  j["p"] = ring->p();
  j["f"] = ring->f();
  j["q"] = ring->q();
  j["r"] = ring->r();
  j["size"] = ring->size();
  j["psi_order"] = ring->psi_order();
  j["N"] = o.n;
  j["unit_group_order"] = unit_group_order(spec, o.n);
  j["l"] = (ring->r() + 1) / 2;
  j["l'"] = ring->r() / 2;
  emit(j, o);
  return kOk;
}

int cmd_orbits(const Options& o) {
  const auto ring = Ring::make(RingSpec::parse(o.ring));
  const int level = o.level >= 0 ? o.level : ring->r() / 2;
  require(level >= 1 && level <= ring->r(), ErrorCode::BadLevel, "orbit level must lie in [1, r]");
  const auto low = ring->truncated(level);
  const auto residue = ring->truncated(1);
  Json list = Json::array();
  for (const auto& orbit : regular_class_list(low, o.n)) {
    Poly bar = orbit.char_poly;
    for (auto& c : bar) c = low->reduce(c, 1);
    list.push_back({{"key", orbit.key()}, {"level", level}, {"partition", partition_of(residue, bar).to_string()}});
  }
  Json j;
  j["ring"] = ring->spec().to_string();
  j["N"] = o.n;
  j["regular_orbits"] = list;
  emit(j, o);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto spec = RingSpec::parse(o.ring);
  const auto ring = Ring::make(spec);
  const auto ids = split_ids(o.checks);
  Ledger ledger;
  const auto flags = all_flags(o.n);
  const auto parts = parallel_map<Ledger>(flags.size(), o.jobs, [&](std::size_t i) {
    const Parahoric P(ring, flags[i]);
    Ledger l;
    if (wants(ids, "lattice-chain")) check_lattice_chain(P, l);
    if (wants(ids, "parahoric-pi")) check_parahoric_pi(P, l);
    if (wants(ids, "radical-powers")) check_radical_powers(P, l);
    if (wants(ids, "shift")) check_shift(P, l);
    if (wants(ids, "ap-formulae")) check_ap_formulae(P, l);
    if (wants(ids, "trace-duality")) check_trace_duality(P, l);
    if (wants(ids, "commutator-filtration")) check_commutator_filtration(P, l);
    if (wants(ids, "abelian-filtration")) check_abelian_filtration(P, l);
    return l;
  });
  for (const auto& l : parts) ledger.append(l);
  bool construction = ring->r() >= 2;
  if (!ids.empty())
    construction &= std::any_of(ids.begin(), ids.end(), [](const std::string& id) {
      return std::find(kParahoricChecks.begin(), kParahoricChecks.end(), id) == kParahoricChecks.end();
    });
  if (construction) {
    const auto ctx = make_context(spec, o.n, o.cap);
    for (const auto& r : construct_all(ctx, o)) ledger.append(r.ledger);
  }
  Json j;
  j["ring"] = spec.to_string();
  j["N"] = o.n;
  j["lemma_ledger"] = ledger_json(ledger, ids);
  emit(j, o);
  return j["lemma_ledger"]["passed"].get<bool>() ? kOk : kCheckFailed;
}

int cmd_construct(const Options& o) {
  const auto spec = RingSpec::parse(o.ring);
  const auto ctx = make_context(spec, o.n, o.cap);
  const auto reports = construct_all(ctx, o);
  std::optional<Verdict> verdict;
  if (o.oracle) verdict = compare(full_census(spec, o.n, o.cap), reports);
  emit(construct_doc(ctx, reports, verdict ? &*verdict : nullptr), o);
  const bool ok = ledger_ok(reports) && (!verdict || std::all_of(verdict->orbits.begin(), verdict->orbits.end(),
                                                                 [](const OrbitVerdict& v) { return v.ok(); }));
  return ok ? kOk : kCheckFailed;
}

int cmd_oracle(const Options& o) {
  const auto census = full_census(RingSpec::parse(o.ring), o.n, o.cap);
  auto j = census_json(census);
  j["non_regular"] = verdict_json(Verdict{{}, {}, nonregular_kernels(census)})["non_regular"];
  Options out = o;
  if (!o.dump.empty()) out.out = o.dump;
  emit(j, out);
  return j["consistent"].get<bool>() ? kOk : kCheckFailed;
}

int cmd_compare(const Options& o) {
  const auto verdict = compare_json(read_json(o.census_path), read_json(o.report_path));
  auto j = verdict_json(verdict);
  j.erase("non_regular");
  // A single-orbit report only speaks for its own orbit.
  bool ok = !verdict.orbits.empty();
  for (const auto& v : verdict.orbits) ok &= v.ok();
  j["match"] = ok;
  emit(j, o);
  return ok ? kOk : kCheckFailed;
}

int cmd_census(const Options& o) {
  const auto spec = RingSpec::parse(o.ring);
  const auto ctx = make_context(spec, o.n, o.cap);
  Options all = o;
  all.orbit = "all-regular";
  const auto reports = construct_all(ctx, all);
  const auto census = full_census(spec, o.n, o.cap);
  const auto verdict = compare(census, reports);
  Json j;
  j["ring"] = spec.to_string();
  j["N"] = o.n;
  j["order"] = ctx.G->order();
  j["irreducibles"] = census.table.size();
  std::string why;
  j["oracle_consistent"] = census_consistent(census, &why);
  j["ledger_passed"] = ledger_ok(reports);
  j["verdict"] = verdict_json(verdict);
  emit(j, o);
  return verdict.regular_match() && ledger_ok(reports) && j["oracle_consistent"].get<bool>() ? kOk : kCheckFailed;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
      return kCap;
    case ErrorCode::ParseError:
    case ErrorCode::NonPrimeP:
    case ErrorCode::BadDegree:
    case ErrorCode::BadLevel:
    case ErrorCode::BadExponent:
    case ErrorCode::NotRegular:
    case ErrorCode::SpecMismatch:
      return kUsage;
    default:
      return kCheckFailed;
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"regrep: regular representations of GL_N over finite local rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("REGREP_CAP")) {
    try {
      o.cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "REGREP_CAP must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "Enumeration cap on group orders (overrides REGREP_CAP)");

  auto ring_opts = [&](CLI::App* cmd, bool need_n) {
    cmd->add_option("--ring", o.ring, "Ring spec, e.g. Zp:p=2,r=3 or Fqt:p=2,f=1,r=3")->required();
    auto n = cmd->add_option("--n", o.n, "Matrix size N")->check(CLI::Range(1, MatCodec::kMaxN));
    if (need_n) n->required();
    cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
  };
  auto ring_info = app.add_subcommand("ring-info", "Ring parameters and |GL_N(o_r)|");
  ring_opts(ring_info, false);
  auto orbits = app.add_subcommand("orbits", "Regular adjoint orbits keyed by characteristic polynomial");
  ring_opts(orbits, true);
  orbits->add_option("--level", o.level, "Orbit level (default floor(r/2))");
  auto verify = app.add_subcommand("verify-lemmas", "Run the lemma checks and print the ledger");
  ring_opts(verify, true);
  verify->add_option("--checks", o.checks, "Comma-separated lemma ids (default: all)");
  verify->add_option("--orbit", o.orbit, "Orbit selector for the construction checks");
  auto construct = app.add_subcommand("construct", "Construct the representations over regular orbits");
  ring_opts(construct, true);
  construct->add_option("--orbit", o.orbit, "all-regular or charpoly=...[,level=...]");
  construct->add_flag("--oracle", o.oracle, "Also compare against the brute-force census");
  construct->add_flag("--no-klp-extension", o.no_klp_extension, "Skip the K^l' extension check");
  auto oracle = app.add_subcommand("oracle", "Brute-force character table census");
  ring_opts(oracle, true);
  oracle->add_option("--dump", o.dump, "Write the census JSON here");
  auto cmp = app.add_subcommand("compare", "Compare a census dump with a construct report");
  cmp->add_option("--census", o.census_path, "Census JSON from `oracle --dump`")->required();
  cmp->add_option("--report", o.report_path, "Report JSON from `construct --out`")->required();
  cmp->add_option("--out", o.out, "Write JSON here instead of stdout");
  auto census = app.add_subcommand("census", "Construct every regular orbit and compare with the oracle");
  ring_opts(census, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*ring_info) return cmd_ring_info(o);
    if (*orbits) return cmd_orbits(o);
    if (*verify) return cmd_verify(o);
    if (*construct) return cmd_construct(o);
    if (*oracle) return cmd_oracle(o);
    if (*cmp) return cmd_compare(o);
    if (*census) return cmd_census(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kUsage;
}

}  // namespace regrep
