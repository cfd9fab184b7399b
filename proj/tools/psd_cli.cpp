#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "psd/acceptance.hpp"
#include "psd/bordering.hpp"
#include "psd/constructions.hpp"
#include "psd/correlation.hpp"
#include "psd/cyclotomy.hpp"
#include "psd/design.hpp"
#include "psd/error.hpp"
#include "psd/number_theory.hpp"
#include "psd/record.hpp"
#include "psd/search.hpp"
#include "psd/tables.hpp"

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, input = 3 };

struct Options {
  std::string format = "text";
  bool record() const { return format == "record"; }
};

void emit(const psd::Json& j) { std::cout << j.dump(2) << '\n'; }

struct FamilyArgs {
  std::string family;
  std::optional<int> p;
  std::optional<int> t;
  int class_index = 0;
  bool with_zero = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "paley-a, singer-b, twin-prime-c, hall-d, qr-plus0, qnr, z4p, quartic, quartic-plus0")
        ->required();
    cmd->add_option("--p", p, "prime parameter");
    cmd->add_option("--t", t, "degree for singer-b");
    cmd->add_option("--i", class_index, "first class index for quartic families (0 or 2)");
    cmd->add_flag("--with-zero", with_zero, "add 0: qnr becomes qr-plus0, quartic becomes quartic-plus0");
  }

  psd::ConstructionSpec spec() const {
    psd::ConstructionSpec s;
    s.family = psd::parse_family(family);
    if (with_zero) {
      if (s.family == psd::Family::qnr) s.family = psd::Family::qr_plus0;
      else if (s.family == psd::Family::quartic) s.family = psd::Family::quartic_plus0;
      else if (s.family != psd::Family::qr_plus0 && s.family != psd::Family::quartic_plus0)
        throw psd::InputError("--with-zero applies to qnr and quartic only");
    }
    const auto value = s.family == psd::Family::singer_b && t ? t : p;
    if (!value) throw psd::InputError(s.family == psd::Family::singer_b ? "singer-b needs --t" : "missing --p");
    s.parameter = *value;
    s.class_index = class_index;
    return s;
  }
};

int print_profile(const psd::CorrelationProfile& p) {
  fmt::print("peak {}  nearest sidelobe {}  d1 {}\nprofile {}\n", p.peak, p.nearest_sidelobe, p.d1, psd::profile_text(p));
  return ok;
}

int run_analyze(const Options& o, const std::string& path) {
  const auto m = psd::read_matrix_file(path);
  const auto p = psd::profile(m);
  const auto obs = psd::verify_observations(m);
  if (o.record()) {
    emit({{"rows", m.rows()}, {"cols", m.cols()}, {"profile", psd::to_record(p)}, {"observations", psd::to_record(obs)}});
    return ok;
  }
  fmt::print("{}x{} matrix, {} ones\n", m.rows(), m.cols(), m.ones());
  print_profile(p);
  fmt::print("unit-shift sidelobe {} ({})\n", obs.unit_shift_sidelobe,
             obs.at_unit_shift ? "nearest sidelobe is at a unit shift" : "nearest sidelobe is elsewhere");
  fmt::print("interior row ones [{}]  column ones [{}]\n", fmt::join(obs.interior_row_ones, " "),
             fmt::join(obs.interior_col_ones, " "));
  fmt::print("border {}/{} ones  top {} bottom {} left {} right {}\n", obs.border_ones, obs.border_cells, obs.top,
             obs.bottom, obs.left, obs.right);
  return ok;
}

int run_construct(const Options& o, const FamilyArgs& args) {
  const auto rep = psd::verify_construction(args.spec());
  if (o.record()) {
    emit(psd::to_record(rep));
  } else {
    fmt::print("{}\n", psd::to_text(rep.set));
    fmt::print("design {} (claimed {}){}\n", psd::to_string(rep.design), psd::to_string(rep.claim.design),
               rep.design_matches ? "" : "  MISMATCH");
    if (rep.special) {
      fmt::print("special; {} (promised {}){}, unit-shift Q {}, bound {}\n", psd::to_string(rep.soptimality.cls),
                 psd::to_string(rep.claim.promised), rep.class_matches ? "" : "  MISMATCH", rep.soptimality.unit_shift_q,
                 rep.soptimality.bound);
    } else {
      fmt::print("not special\n");
    }
  }
  return rep.ok() ? ok : mismatch;
}

int run_build(const Options& o, const FamilyArgs& args) {
  const auto rep = psd::build_good_matrix(args.spec());
  if (o.record()) {
    emit(psd::to_record(rep));
    return rep.verified ? ok : mismatch;
  }
  fmt::print("{}", psd::to_text(rep.matrix.full));
  fmt::print("defining set {}  interior {}\n", psd::to_text(rep.set), psd::to_string(rep.interior.cls));
  std::vector<std::string> cells;
  for (const auto& c : rep.matrix.punctures) cells.push_back(fmt::format("({},{})", c.row, c.col));
  fmt::print("punctures {}\n", fmt::join(cells, " "));
  print_profile(rep.profile);
  fmt::print("predicted d1 {}  measured d1 {}  unit-shift distance {} (expected {})  {}\n", rep.predicted, rep.measured,
             rep.unit_shift_measured, rep.unit_shift_expected, rep.verified ? "verified" : "MISMATCH");
  return rep.verified ? ok : mismatch;
}

int run_search(const Options& o, const psd::SearchSpace& space, const psd::SearchOptions& opts) {
  const auto res = psd::exhaustive_search(space, opts);
  if (o.record()) {
    emit(psd::to_record(res));
    return ok;
  }
  fmt::print("{}x{}{}{}: explored {}\n", space.rows, space.cols, space.diagonal_symmetric ? " symmetric" : "",
             space.ones ? fmt::format(" l={}", *space.ones) : "", res.explored);
  print_profile(res.best_profile);
  fmt::print("{} optimal matrices, showing {}\n", res.witness_count, res.witnesses.size());
  for (const auto& w : res.witnesses) fmt::print("{}", psd::to_text(w));
  return ok;
}

int run_bound(const Options& o, std::optional<int> v, std::optional<int> rows, std::optional<int> cols,
              std::optional<int> ones) {
  if (!v && !(rows && cols && ones)) throw psd::InputError("bound needs --v, or --rows --cols --ones");
  psd::Json j = psd::Json::object();
  if (v) {
    if (*v < 2) throw psd::InputError("--v must be at least 2");
    j["v"] = *v;
    j["B_v"] = psd::bv_bound(*v);
    j["special_bound"] = psd::special_bound(*v);
  }
  if (rows && cols && ones) j["first_bound"] = psd::skirlo_bound(*rows, *cols, *ones);
  if (o.record()) {
    emit(j);
  } else {
    if (v) fmt::print("B_{} = {}  special bound {}\n", *v, psd::bv_bound(*v), psd::special_bound(*v));
    if (j.contains("first_bound"))
      fmt::print("{}x{} with {} ones: d1 <= {}\n", *rows, *cols, *ones, j["first_bound"].get<int>());
  }
  return ok;
}

int run_tables(const Options& o) {
  const auto first = psd::order_table();
  const auto second = psd::family_table();
  bool all = true;
  for (const auto& r : first) all = all && r.pass();
  for (const auto& r : second) all = all && r.pass();
  if (o.record()) {
    psd::Json a = psd::Json::array();
    psd::Json b = psd::Json::array();
    for (const auto& r : first) a.push_back(psd::to_record(r));
    for (const auto& r : second) b.push_back(psd::to_record(r));
    emit({{"orders", a}, {"families", b}, {"pass", all}});
    return all ? ok : mismatch;
  }
  auto print = [](const psd::TableRow& r) {
    fmt::print("{:<12} {:<13} {:>4}  order {:>3}  {:<22} listed {:>4}  measured {:>4}  unit-shift {:>4}  {}\n", r.group,
               psd::family_name(r.spec.family), r.spec.parameter, r.order, psd::to_string(r.design), r.published,
               r.measured, r.unit_shift, r.pass() ? "PASS" : "FAIL");
  };
  fmt::print("orders\n");
  for (const auto& r : first) print(r);
  fmt::print("families\n");
  for (const auto& r : second) print(r);
  return all ? ok : mismatch;
}

int run_selftest(const Options& o, int workers, bool verbose) {
  const auto results = psd::run_acceptance(workers);
  bool all = true;
  psd::Json j = psd::Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (o.record())
      j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"details", r.details}});
    else
      std::cout << psd::format_result(r, verbose);
  }
  if (o.record()) emit(j);
  return all ? ok : mismatch;
}

int run_set_query(const Options& o, const std::string& text, const std::string& what) {
  const auto d = psd::parse_residue_set(text);
  const auto s = psd::difference_spectrum(d);
  if (what == "soptimality") {
    const auto rep = psd::soptimality(d);
    if (o.record()) {
      emit(psd::to_record(rep));
    } else {
      fmt::print("{}  unit-shift Q {}  closed form {}  full d1 {}  bound {}\n", psd::to_string(rep.cls), rep.unit_shift_q,
                 rep.closed_form_q, rep.measured_q, rep.bound);
    }
    return ok;
  }
  if (o.record()) {
    auto j = psd::to_record(s);
    j["class"] = psd::to_record(psd::classify(s));
    j["special"] = psd::is_special(s);
    j["equality_condition"] = psd::equality_condition(s);
    if (what == "spectrum") {
      psd::Json mult = psd::Json::array();
      for (int x = 1; x < s.modulus; ++x) mult.push_back(s.multiplicity[static_cast<std::size_t>(x)]);
      j["multiplicity"] = mult;
    }
    emit(j);
    return ok;
  }
  if (what == "spectrum") {
    for (int x = 1; x < s.modulus; ++x) fmt::print("{:>4} {}\n", x, s.multiplicity[static_cast<std::size_t>(x)]);
  }
  fmt::print("{}  d = {} (B_v = {})  consecutive pairs {}  special {}\n", psd::to_string(psd::classify(s)),
             s.periodic_distance, psd::bv_bound(s.modulus), s.consecutive_pairs, psd::is_special(s) ? "yes" : "no");
  return ok;
}

int run_cyclotomy(const Options& o, int p, int e, std::optional<int> gamma) {
  const psd::CyclotomyContext ctx(p, e, gamma.value_or(psd::primitive_root(p)));
  const auto table = psd::cyclotomic_table(ctx);
  if (o.record()) {
    emit({{"p", p}, {"e", e}, {"gamma", ctx.generator()}, {"classes", ctx.classes()}, {"numbers", table}});
    return ok;
  }
  fmt::print("p = {}  e = {}  gamma = {}\n", p, e, ctx.generator());
  for (int i = 0; i < e; ++i) fmt::print("C_{} = {{{}}}\n", i, fmt::join(ctx.cls(i), ", "));
  fmt::print("(i,j):\n");
  for (const auto& row : table) fmt::print("  {}\n", fmt::join(row, " "));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary matrices with large peak-sidelobe distance"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or record")->check(CLI::IsMember({"text", "record"}));

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "profile of a matrix file");
  analyze->add_option("path", path, "matrix file: 'M N' then M rows of 0/1")->required();

  FamilyArgs construct_args;
  auto* construct = app.add_subcommand("construct", "generate and verify a defining set");
  construct_args.attach(construct);

  FamilyArgs build_args;
  auto* build = app.add_subcommand("build", "bordered matrix from a construction");
  build_args.attach(build);

  psd::SearchSpace space;
  psd::SearchOptions sopts;
  std::optional<int> ones;
  bool no_prune = false;
  auto* search = app.add_subcommand("search", "exhaustive search for the best profile");
  search->add_option("--rows", space.rows)->required();
  search->add_option("--cols", space.cols)->required();
  search->add_flag("--symmetric", space.diagonal_symmetric, "restrict to diagonally symmetric matrices");
  search->add_option("--ones", ones, "fixed number of 1s");
  search->add_option("--workers", sopts.workers, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--cap", sopts.witness_cap, "witnesses to keep");
  search->add_option("--budget", sopts.budget, "largest number of candidates allowed");
  search->add_flag("--no-prune", no_prune, "evaluate every candidate fully");

  std::optional<int> bv;
  std::optional<int> brows;
  std::optional<int> bcols;
  std::optional<int> bones;
  auto* bound = app.add_subcommand("bound", "B_v, the special bound and the first M x N bound");
  bound->add_option("--v", bv);
  bound->add_option("--rows", brows);
  bound->add_option("--cols", bcols);
  bound->add_option("--ones", bones);

  auto* tables = app.add_subcommand("tables", "regenerate the order and family tables");

  int workers = 1;
  bool verbose = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--workers", workers)->check(CLI::PositiveNumber);
  selftest->add_flag("--verbose", verbose);

  std::string set_text;
  auto* classify = app.add_subcommand("classify", "DS/ADS class of a residue set");
  classify->add_option("--set", set_text, "\"v: e1,e2,...\"")->required();
  auto* spectrum = app.add_subcommand("spectrum", "difference multiplicities of a residue set");
  spectrum->add_option("--set", set_text)->required();
  auto* sopt = app.add_subcommand("soptimality", "s-optimality of a special set");
  sopt->add_option("--set", set_text)->required();

  int cp = 0;
  int ce = 2;
  std::optional<int> cg;
  auto* cyclo = app.add_subcommand("cyclotomy", "cyclotomic classes and numbers");
  cyclo->add_option("--p", cp)->required();
  cyclo->add_option("--e", ce)->required();
  cyclo->add_option("--gamma", cg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*analyze) return run_analyze(o, path);
    if (*construct) return run_construct(o, construct_args);
    if (*build) return run_build(o, build_args);
    if (*search) {
      space.ones = ones;
      sopts.prune = !no_prune;
      return run_search(o, space, sopts);
    }
    if (*bound) return run_bound(o, bv, brows, bcols, bones);
    if (*tables) return run_tables(o);
    if (*selftest) return run_selftest(o, workers, verbose);
    if (*classify) return run_set_query(o, set_text, "classify");
    if (*spectrum) return run_set_query(o, set_text, "spectrum");
    if (*sopt) return run_set_query(o, set_text, "soptimality");
    if (*cyclo) return run_cyclotomy(o, cp, ce, cg);
  } catch (const psd::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return mismatch;
  } catch (const psd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input;
  }
  return usage;
}
