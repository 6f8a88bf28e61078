#include "cli.hpp"

#include "carrymix/bijections.hpp"
#include "carrymix/carries_chain.hpp"
#include "carrymix/errors.hpp"
#include "carrymix/gf_sections.hpp"
#include "carrymix/montecarlo.hpp"
#include "carrymix/mult_carries.hpp"
#include "carrymix/serialize.hpp"
#include "carrymix/shuffling.hpp"
#include "carrymix/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifndef CARRYMIX_VERSION
#define CARRYMIX_VERSION "0.0.0"
#endif

namespace carrymix::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultVerifySeed = 20080617;

struct Globals {
  std::string format = "csv";
  int decimal = -1;
  std::optional<std::string> seed_text;
  unsigned jobs = 1;
  bool quick = false;
};

struct Printer {
  const Globals& globals;
  std::ostream& out;

  bool json_mode() const { return globals.format == "json"; }

  std::string value(const Rational& x) const {
    return globals.decimal >= 0 ? to_decimal(x, globals.decimal) : to_string(x);
  }

  json header(const std::string& command, json params, std::optional<std::uint64_t> seed = std::nullopt) const {
    json doc;
    doc["command"] = command;
    doc["parameters"] = std::move(params);
    if (seed) {
      doc["seed"] = *seed;
      doc["generator"] = kRngName;
    }
    doc["version"] = CARRYMIX_VERSION;
    return doc;
  }

  json matrix_json(const RationalMatrix& m) const {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (const auto& x : m.row(r)) row.push_back(value(x));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  void matrix(const std::string& command, json params, const RationalMatrix& m) const {
    if (json_mode()) {
      json doc = header(command, std::move(params));
      doc["matrix"] = matrix_json(m);
      out << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << value(m(r, c));
      out << '\n';
    }
  }

  void table(const std::string& command, json params, const std::vector<std::string>& columns,
             const std::vector<std::vector<std::string>>& rows, std::optional<std::uint64_t> seed = std::nullopt) const {
    if (json_mode()) {
      json doc = header(command, std::move(params), seed);
      json body = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
        body.push_back(std::move(obj));
      }
      doc["rows"] = std::move(body);
      out << doc.dump(2) << '\n';
      return;
    }
    if (seed) out << "# seed=" << *seed << " generator=" << kRngName << '\n';
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
  }

  /// Returns the exit code implied by the report.
  int report(const std::string& command, json params, const VerifyReport& rep, std::optional<std::uint64_t> seed,
             json extra = json::object()) const {
    if (json_mode()) {
      json doc = header(command, std::move(params), seed);
      doc["passed"] = rep.passed();
      json checks = json::array();
      for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["checks"] = std::move(checks);
      for (auto& [key, val] : extra.items()) doc[key] = val;
      out << doc.dump(2) << '\n';
    } else {
      std::size_t passed = 0;
      for (const auto& c : rep.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << ']';
        out << '\n';
        if (c.passed) ++passed;
      }
      out << passed << '/' << rep.checks.size() << " checks passed\n";
    }
    return rep.passed() ? kOk : kVerificationFailed;
  }
};

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(std::string("invalid seed from ") + source + ": '" + text + "'");
  return value;
}

/// --seed, else CARRYMIX_SEED, else `fallback`; throws UsageError when nothing is available.
std::uint64_t resolve_seed(const Globals& g, std::optional<std::uint64_t> fallback) {
  if (g.seed_text) return parse_seed(*g.seed_text, "--seed");
  if (const char* env = std::getenv(kSeedEnv)) return parse_seed(env, kSeedEnv);
  if (fallback) return *fallback;
  throw UsageError(std::string("this command is randomized: pass --seed or set ") + kSeedEnv);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

ColumnArray load_array(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open column-array file '" + path + "'");
  return read_column_array(in);
}

json parse_json_text(const std::string& text) { return json::parse(text); }

std::string trace_text(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact carries chains, riffle-shuffle laws and the bijections between them", "carrymix"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--decimal", g.decimal, "Print values rounded to this many decimals instead of exact p/q")
      ->check(CLI::Range(0, 60));
  app.add_option("--seed", g.seed_text, std::string("Seed for randomized commands (else $") + kSeedEnv + ")");
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration and sampling")->check(CLI::Range(1U, 256U));

  std::function<int()> action;
  const Printer print{g, out};

  // ---- carries chain ------------------------------------------------------
  long n = 0;
  long b = 0;
  unsigned r_max = 0;
  unsigned j_max = 0;

  auto* matrix_cmd = app.add_subcommand("matrix", "Carries transition matrix P for n addends in base b");
  matrix_cmd->add_option("--n", n, "Number of addends")->required()->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--b", b, "Base")->required()->check(CLI::Range(2L, 1000000L));
  matrix_cmd->callback([&] {
    action = [&] {
      print.matrix("matrix", {{"n", n}, {"b", b}}, build_P(ChainSpec{n, b}));
      return kOk;
    };
  });

  auto* stationary_cmd = app.add_subcommand("stationary", "Stationary law A(n, j) / n! of the carries chain");
  stationary_cmd->add_option("--n", n, "Number of addends")->required()->check(CLI::PositiveNumber);
  stationary_cmd->callback([&] {
    action = [&] {
      const RationalVector pi = stationary(n);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t j = 0; j < pi.size(); ++j) rows.push_back({std::to_string(j), print.value(pi[j])});
      print.table("stationary", {{"n", n}}, {"j", "pi"}, rows);
      return kOk;
    };
  });

  auto* sep_cmd = app.add_subcommand("sep", "Separation distance from carry 0, exact and closed form");
  sep_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sep_cmd->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  sep_cmd->add_option("--r-max", r_max)->required();
  sep_cmd->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> rows;
      int code = kOk;
      for (unsigned r = 0; r <= r_max; ++r) {
        const Rational exact = separation_exact(ChainSpec{n, b}, r);
        const Rational closed = separation_closed(ChainSpec{n, b}, r);
        if (exact != closed) code = kVerificationFailed;
        rows.push_back({std::to_string(r), print.value(exact), print.value(closed)});
      }
      print.table("sep", {{"n", n}, {"b", b}, {"r_max", r_max}}, {"r", "sep_exact", "sep_closed"}, rows);
      return code;
    };
  });

  auto* tv_cmd = app.add_subcommand("tv", "Total variation distance from carry 0");
  tv_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  tv_cmd->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  tv_cmd->add_option("--r-max", r_max)->required();
  tv_cmd->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> rows;
      int code = kOk;
      for (unsigned r = 0; r <= r_max; ++r) {
        const Rational tv = tv_from_start(ChainSpec{n, b}, r);
        const Rational sep = separation_exact(ChainSpec{n, b}, r);
        if (tv > sep) code = kVerificationFailed;
        rows.push_back({std::to_string(r), print.value(tv), print.value(sep)});
      }
      print.table("tv", {{"n", n}, {"b", b}, {"r_max", r_max}}, {"r", "tv", "sep_exact"}, rows);
      return code;
    };
  });

  auto* moments_cmd = app.add_subcommand("moments", "Mean and variance of the j-th carry");
  moments_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  moments_cmd->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  moments_cmd->add_option("--j-max", j_max)->required()->check(CLI::PositiveNumber);
  moments_cmd->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> rows;
      for (unsigned j = 1; j <= j_max; ++j) {
        const CarryMoments mom = carry_moments(ChainSpec{n, b}, j);
        rows.push_back({std::to_string(j), print.value(mom.mean), print.value(mom.variance),
                        print.value(total_carries_mean(ChainSpec{n, b}, j))});
      }
      print.table("moments", {{"n", n}, {"b", b}, {"j_max", j_max}}, {"j", "mean", "variance", "total_mean"}, rows);
      return kOk;
    };
  });

  // ---- shuffling ------------------------------------------------------------
  auto* shuffle_cmd = app.add_subcommand("shuffle", "GSR b-shuffles");
  shuffle_cmd->require_subcommand(1, 1);
  shuffle_cmd->fallthrough();
  std::uint64_t count = 1;
  std::string sampler = "digit";
  auto* sample_cmd = shuffle_cmd->add_subcommand("sample", "Draw permutations after one b-shuffle");
  sample_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--count", count, "Number of draws")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--sampler", sampler, "digit (any b) or cut-drop (b = 2)")
      ->check(CLI::IsMember({"digit", "cut-drop"}));
  sample_cmd->callback([&] {
    action = [&] {
      const std::uint64_t seed = resolve_seed(g, std::nullopt);
      if (sampler == "cut-drop" && b != 2) throw UsageError("the cut-drop sampler only supports --b 2");
      Rng rng(seed);
      std::vector<std::vector<std::string>> rows;
      for (std::uint64_t i = 0; i < count; ++i) {
        const Permutation p = sampler == "digit" ? gsr_sample(n, b, rng) : gsr_sample_cut_and_drop(n, rng);
        rows.push_back({p.to_string(), std::to_string(descents(p))});
      }
      print.table("shuffle sample", {{"n", n}, {"b", b}, {"count", count}, {"sampler", sampler}},
                  {"permutation", "descents"}, rows, seed);
      return kOk;
    };
  });
  auto* dist_cmd = shuffle_cmd->add_subcommand("dist", "Exact law of one b-shuffle by enumeration");
  dist_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  dist_cmd->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  dist_cmd->callback([&] {
    action = [&] {
      const DistributionTable dist = exhaustive_shuffle_dist(n, b);
      int code = kOk;
      for (const auto& [perm, p] : dist)
        if (p != qb_probability(perm, b)) code = kVerificationFailed;
      if (print.json_mode()) {
        json doc = print.header("shuffle dist", {{"n", n}, {"b", b}});
        json law = json::object();
        for (const auto& [perm, p] : dist) law[perm.to_string()] = print.value(p);
        doc["distribution"] = std::move(law);
        doc["matches_closed_form"] = code == kOk;
        out << doc.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [perm, p] : dist) rows.push_back({perm.to_string(), print.value(p)});
        print.table("shuffle dist", {}, {"permutation", "probability"}, rows);
      }
      return code;
    };
  });

  auto* card_cmd = app.add_subcommand("card-matrix", "Transition matrix of one tracked card's position");
  card_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  card_cmd->add_option("--b", b)->required()->check(CLI::PositiveNumber);
  card_cmd->callback([&] {
    action = [&] {
      print.matrix("card-matrix", {{"n", n}, {"b", b}, {"positions", "1-based: row/column k is position k+1"}},
                   card_tracking_matrix(n, b));
      return kOk;
    };
  });

  // ---- bijections -----------------------------------------------------------
  std::string file;
  auto* carries_cmd = app.add_subcommand("carries", "Carry trace of a column-array file");
  carries_cmd->add_option("--file", file)->required();
  carries_cmd->callback([&] {
    action = [&] {
      const ColumnArray a = load_array(file);
      const CarryTrace trace = column_carry_trace(a);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t j = 0; j < trace.size(); ++j) rows.push_back({std::to_string(j + 1), std::to_string(trace[j])});
      print.table("carries", {{"file", file}, {"n", a.n()}, {"m", a.m()}, {"b", a.base()}}, {"j", "kappa"}, rows);
      return kOk;
    };
  });

  auto* tau_cmd = app.add_subcommand("tau", "Permutations tau_j of a column-array file and their descents");
  tau_cmd->add_option("--file", file)->required();
  tau_cmd->callback([&] {
    action = [&] {
      const ColumnArray a = load_array(file);
      const CarryTrace carries = column_carry_trace(a);
      const ShuffleTrace trace = tau_trace(a);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t j = 0; j < trace.perms.size(); ++j) {
        rows.push_back({std::to_string(j + 1), trace.perms[j].to_string(), std::to_string(descents(trace.perms[j])),
                        std::to_string(carries[j])});
      }
      print.table("tau", {{"file", file}, {"n", a.n()}, {"m", a.m()}, {"b", a.base()}}, {"j", "tau", "descents", "kappa"},
                  rows);
      return kOk;
    };
  });

  // ---- multiplication ---------------------------------------------------------
  long k = 0;
  std::string digits_text;
  auto* mult_cmd = app.add_subcommand("mult", "Carries for multiplication by a fixed k");
  mult_cmd->require_subcommand(1, 1);
  mult_cmd->fallthrough();
  auto* mult_matrix = mult_cmd->add_subcommand("matrix", "Transition matrix K");
  mult_matrix->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  mult_matrix->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  mult_matrix->callback([&] {
    action = [&] {
      print.matrix("mult matrix", {{"k", k}, {"b", b}}, build_K(MultSpec{k, b}));
      return kOk;
    };
  });
  auto* mult_trace = mult_cmd->add_subcommand("trace", "Carries when multiplying the given number by k");
  mult_trace->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  mult_trace->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  mult_trace->add_option("--digits", digits_text, "Comma-separated digits, least significant first")->required();
  mult_trace->callback([&] {
    action = [&] {
      std::vector<int> digits;
      for (const auto& d : split_csv(digits_text)) {
        try {
          digits.push_back(std::stoi(d));
        } catch (const std::exception&) {
          throw UsageError("bad digit '" + d + "'");
        }
      }
      const CarryTrace trace = mult_carry_trace(MultSpec{k, b}, digits);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < trace.size(); ++i)
        rows.push_back({std::to_string(i + 1), std::to_string(digits[i]), std::to_string(trace[i])});
      print.table("mult trace", {{"k", k}, {"b", b}, {"digits", digits_text}}, {"i", "digit", "kappa"}, rows);
      return kOk;
    };
  });
  auto* mult_tv = mult_cmd->add_subcommand("tv", "Total variation to uniform after r steps, with the k/(2 b^r) bound");
  mult_tv->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  mult_tv->add_option("--b", b)->required()->check(CLI::Range(2L, 1000000L));
  mult_tv->add_option("--r-max", r_max)->required()->check(CLI::PositiveNumber);
  mult_tv->callback([&] {
    action = [&] {
      std::vector<std::vector<std::string>> rows;
      for (unsigned r = 1; r <= r_max; ++r) {
        rows.push_back({std::to_string(r), print.value(mult_tv_exact(MultSpec{k, b}, r)),
                        print.value(mult_tv_bound(MultSpec{k, b}, r))});
      }
      print.table("mult tv", {{"k", k}, {"b", b}, {"r_max", r_max}}, {"r", "tv", "bound"}, rows);
      return kOk;
    };
  });

  // ---- generating-function sections -------------------------------------------
  long sec_r = 0;
  std::string h_text;
  auto* sections_cmd = app.add_subcommand("sections", "Sections of rational generating functions");
  sections_cmd->require_subcommand(1, 1);
  sections_cmd->fallthrough();
  auto* sections_matrix = sections_cmd->add_subcommand("matrix", "Section matrix C for degree parameter n and step r");
  sections_matrix->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  sections_matrix->add_option("--r", sec_r)->required()->check(CLI::PositiveNumber);
  sections_matrix->callback([&] {
    action = [&] {
      print.matrix("sections matrix", {{"n", n}, {"r", sec_r}}, build_C(n, sec_r));
      return kOk;
    };
  });
  auto* sections_apply = sections_cmd->add_subcommand("apply", "Numerator of every r-th term");
  sections_apply->set_help_flag("--help", "Print this help message and exit");
  sections_apply->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  sections_apply->add_option("--r", sec_r)->required()->check(CLI::PositiveNumber);
  sections_apply->add_option("--h", h_text, "Comma-separated h_0..h_{n+1}")->required();
  sections_apply->callback([&] {
    action = [&] {
      std::vector<Rational> coeffs;
      for (const auto& c : split_csv(h_text)) coeffs.push_back(parse_rational(c));
      const HPolynomial sectioned = section_poly(HPolynomial(n, coeffs), sec_r);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < sectioned.coefficients().size(); ++i)
        rows.push_back({std::to_string(i), print.value(sectioned.coefficients()[i])});
      print.table("sections apply", {{"n", n}, {"r", sec_r}, {"h", h_text}}, {"i", "h_r"}, rows);
      return kOk;
    };
  });

  // ---- verification -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Check identities; exit 1 if any fails");
  verify_cmd->require_subcommand(1, 1);
  verify_cmd->fallthrough();
  verify_cmd->add_flag("--quick", g.quick, "Reduced grids and sample sizes");

  auto simple_verify = [&](const char* name, const char* help, VerifyReport (*fn)(const VerifyOptions&)) {
    auto* cmd = verify_cmd->add_subcommand(name, help);
    cmd->callback([&, name, fn] {
      action = [&, name, fn] {
        const std::uint64_t seed = resolve_seed(g, kDefaultVerifySeed);
        const VerifyOptions opts{g.quick, seed, g.jobs};
        return print.report(std::string("verify ") + name, {{"quick", g.quick}, {"jobs", g.jobs}}, fn(opts), seed);
      };
    });
    return cmd;
  };
  simple_verify("golden", "Closed-form matrices", verify_golden);
  simple_verify("stationary", "pi P = pi", verify_stationary);
  simple_verify("eigen", "Characteristic polynomials", verify_eigen);
  simple_verify("semigroup", "P_a P_b = P_ab and analogues", verify_semigroup);
  simple_verify("tp2", "Total positivity", verify_tp2);
  simple_verify("separation", "Separation distance", verify_separation);
  simple_verify("moments", "Carry moments", verify_moments);
  simple_verify("shuffle", "Shuffle law and samplers", verify_shuffle);
  simple_verify("sections", "Section matrix and trimming", verify_sections);
  simple_verify("mult", "Multiplication carries", verify_mult);
  simple_verify("card", "Card-tracking chain", verify_card);
  simple_verify("all", "Every check", verify_all);

  std::optional<long> vn;
  std::optional<long> vm;
  std::optional<long> vb;
  std::string mode = "exhaustive";
  std::uint64_t samples = 100'000;
  auto* theorem_cmd = verify_cmd->add_subcommand("theorem-main", "Carries law equals descents law");
  theorem_cmd->add_option("--n", vn)->check(CLI::PositiveNumber);
  theorem_cmd->add_option("--m", vm)->check(CLI::PositiveNumber);
  theorem_cmd->add_option("--b", vb)->check(CLI::Range(2L, 1000000L));
  theorem_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "montecarlo"}));
  theorem_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  theorem_cmd->callback([&] {
    action = [&] {
      const bool single = vn || vm || vb;
      if (single && !(vn && vm && vb)) throw UsageError("theorem-main needs all of --n, --m, --b (or none for the grid)");
      if (!single) {
        const std::uint64_t seed = resolve_seed(g, kDefaultVerifySeed);
        const VerifyOptions opts{g.quick, seed, g.jobs};
        return print.report("verify theorem-main", {{"quick", g.quick}}, verify_theorem_main_grid(opts), std::nullopt);
      }
      json params{{"n", *vn}, {"m", *vm}, {"b", *vb}, {"mode", mode}};
      const JointLaw markov = markov_joint_law(*vn, *vm, *vb);
      VerifyReport rep;
      json extra;
      if (mode == "exhaustive") {
        const JointLaw carries = exhaustive_joint_carries(*vn, *vm, *vb, g.jobs);
        const JointLaw descents_law = exhaustive_joint_descents(*vn, *vm, *vb, g.jobs);
        const bool cd = same_law(carries, descents_law);
        const bool cm = same_law(carries, markov);
        rep.checks.push_back({"carries law equals descents law", cd, ""});
        rep.checks.push_back({"carries law equals Markov product", cm, ""});
        extra["carries_law"] = parse_json_text(joint_law_to_json(carries));
        extra["descents_law"] = parse_json_text(joint_law_to_json(descents_law));
        extra["markov_law"] = parse_json_text(joint_law_to_json(markov));
        extra["equal"] = cd && cm;
        return print.report("verify theorem-main", params, rep, std::nullopt, extra);
      }
      const std::uint64_t seed = resolve_seed(g, std::nullopt);
      params["samples"] = samples;
      const JointLaw observed = sample_joint_carries(*vn, *vm, *vb, samples, seed, g.jobs);
      const ChiSquareResult chi = chi_square(observed, markov);
      const double limit = chi_square_quantile(chi.dof, 0.999);
      const bool ok = chi.dof == 0 ? chi.statistic == 0.0 : chi.statistic < limit;
      std::ostringstream detail;
      detail << "statistic " << chi.statistic << ", dof " << chi.dof << ", 0.999 quantile " << limit;
      rep.checks.push_back({"sampled carries match the Markov product (chi-square)", ok, detail.str()});
      json pooled = json::array();
      for (const auto& group : chi.groups) {
        json cells = json::array();
        for (const auto& key : group) cells.push_back(trace_text(key));
        pooled.push_back(std::move(cells));
      }
      extra["observed"] = parse_json_text(joint_law_to_json(observed));
      extra["expected"] = parse_json_text(joint_law_to_json(markov));
      extra["chi_square"] = {{"statistic", chi.statistic}, {"dof", chi.dof}, {"quantile_0.999", limit}, {"groups", pooled}};
      return print.report("verify theorem-main", params, rep, seed, extra);
    };
  });

  std::optional<long> bn;
  std::optional<long> bm;
  std::optional<long> bb;
  bool exhaustive = false;
  std::optional<std::uint64_t> bij_samples;
  auto* bij_cmd = verify_cmd->add_subcommand("bijections", "Bar/star maps and the carry-descent identities");
  bij_cmd->add_option("--n", bn)->check(CLI::PositiveNumber);
  bij_cmd->add_option("--m", bm)->check(CLI::PositiveNumber);
  bij_cmd->add_option("--b", bb)->check(CLI::Range(2L, 36L));
  auto* exhaustive_flag = bij_cmd->add_flag("--exhaustive", exhaustive, "Every array of the given shape");
  auto* samples_opt = bij_cmd->add_option("--samples", bij_samples, "Number of random arrays")->check(CLI::PositiveNumber);
  exhaustive_flag->excludes(samples_opt);
  bij_cmd->callback([&] {
    action = [&] {
      const std::uint64_t seed = resolve_seed(g, kDefaultVerifySeed);
      const VerifyOptions opts{g.quick, seed, g.jobs};
      const bool single = bn || bm || bb;
      if (!single) return print.report("verify bijections", {{"quick", g.quick}}, verify_bijections_grid(opts), seed);
      if (!(bn && bm && bb)) throw UsageError("bijections needs all of --n, --m, --b (or none for the grid)");
      if (!exhaustive && !bij_samples) throw UsageError("bijections needs --exhaustive or --samples N");
      const std::uint64_t count_arrays = bij_samples.value_or(0);
      return print.report("verify bijections", {{"n", *bn}, {"m", *bm}, {"b", *bb}, {"exhaustive", exhaustive}},
                          verify_bijections(*bn, *bm, *bb, exhaustive, count_arrays, opts),
                          exhaustive ? std::nullopt : std::optional<std::uint64_t>(seed));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  if (!action) {
    err << app.help();
    return kUsageError;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ConsistencyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace carrymix::cli
