#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mincode/mincode.hpp"

namespace mincode::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct RunConfig {
  int t = 3;
  std::string modulus;  // hex, empty for the default polynomial
  std::vector<int> a1, a2, a3;
  bool ab_violating = false;
  bool force = false;
  bool quick = false;
  std::uint64_t seed = SearchOptions{}.seed;
  std::size_t samples = SearchOptions{}.samples;
  unsigned workers = 1;
  std::string format;
  std::string out;
  std::string table;
  std::string spectrum;
  std::string member = "f";
};

/// An input problem that maps to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool has_sets(const RunConfig& c) { return !c.a1.empty() || !c.a2.empty() || !c.a3.empty(); }

GF2tField make_field(const RunConfig& c) {
  if (c.modulus.empty()) return GF2tField(c.t);
  std::size_t used = 0;
  unsigned long m = 0;
  try {
    m = std::stoul(c.modulus, &used, 16);
  } catch (const std::exception&) {
    throw InvalidInput("--modulus: not a hexadecimal polynomial: " + c.modulus);
  }
  if (used != c.modulus.size()) throw InvalidInput("--modulus: not a hexadecimal polynomial: " + c.modulus);
  return GF2tField(c.t, static_cast<std::uint32_t>(m));
}

SetSystem make_system(const RunConfig& c) {
  if (c.a1.empty() || c.a2.empty() || c.a3.empty()) throw InvalidInput("--a1, --a2 and --a3 are all required");
  return SetSystem::from_indices(c.t, c.a1, c.a2, c.a3);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// Writes content to path, or to out when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << content;
}

template <class Fn>
std::string capture(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

BooleanFunction load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  return io::read_truth_table(in);
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SetSystem sys = make_system(c);
  const ConditionReport cond = check_conditions(sys);
  if (!cond.passed() && !c.force) {
    err << "construct: the set system fails the admissibility conditions (use --force to build anyway)\n";
    err << io::to_json(cond).dump(2) << '\n';
    return kExitInvalidInput;
  }
  if (!cond.passed()) err << "warning: building despite failed conditions\n";
  if (sys.n() < 6) err << "warning: n=" << sys.n() << " < 6 lies outside the hypotheses of the weight and minimality results\n";

  const PartialSpread spread = build_desarguesian_spread(make_field(c));
  const FunctionFamily fam = build_family(spread, sys);
  const LinearCode code = construct_code(fam);
  const WeightDistribution enumerated = enumerate_weights(code, c.workers);
  const WeightDistribution predicted = predict_weights(sys, sys.n());

  std::optional<MinimalityReport> brute;
  if (code.dimension <= static_cast<std::size_t>(kMaxBruteForceDimension)) {
    brute = is_minimal_bruteforce(code, ScanMode::first_witness, c.workers);
  }
  std::optional<MinimalityReport> spectral;
  if (sys.n() <= kMaxCriterionDimension) spectral = walsh_minimality_criterion(fam);
  const auto disjoint = disjoint_members(sys);
  const AbRatio ab = ab_ratio(enumerated);

  const bool in_hypotheses = cond.passed() && sizes_in_range(sys) && sys.n() >= 6;
  const bool minimal = brute ? brute->is_minimal : (spectral ? spectral->is_minimal : false);
  Json verified{{"length", code.length == (std::size_t{1} << sys.n()) - 1},
                {"dimension", code.dimension == static_cast<std::size_t>(sys.n() + 3)},
                {"weights_match_prediction", predicted == enumerated}};
  if (brute && spectral) verified["minimality_methods_agree"] = brute->is_minimal == spectral->is_minimal;
  if (in_hypotheses) verified["minimal"] = minimal;
  bool all_ok = true;
  for (const auto& [k, v] : verified.items()) all_ok = all_ok && v.get<bool>();

  Json report = io::code_report(sys, code, enumerated);
  Json minimality = Json::object();
  if (brute) minimality["brute_force"] = io::to_json(*brute);
  if (spectral) minimality["walsh_criterion"] = io::to_json(*spectral);
  Json disjoint_json = Json::array();
  for (const auto& [a, b] : disjoint) disjoint_json.push_back(Json::array({label(a), label(b)}));

  if (!c.out.empty()) {
    fs::create_directories(c.out);
    const fs::path dir(c.out);
    emit((dir / "report.json").string(), report.dump(2) + "\n", out);
    emit((dir / "generator.txt").string(), capture([&](std::ostream& s) { io::write_generator(s, code.generator); }), out);
    emit((dir / "weights.csv").string(), capture([&](std::ostream& s) { io::write_weights_csv(s, enumerated); }), out);
    emit((dir / "weights_diff.csv").string(),
         capture([&](std::ostream& s) { io::write_weights_diff_csv(s, predicted, enumerated); }), out);
    emit((dir / "minimality.json").string(), minimality.dump(2) + "\n", out);
    emit((dir / "conditions.json").string(), io::to_json(cond).dump(2) + "\n", out);
    const std::array<std::pair<Member, const char*>, 3> base{{{Member::f, "f.tt"}, {Member::g, "g.tt"}, {Member::h, "h.tt"}}};
    for (const auto& [m, name] : base) {
      emit((dir / name).string(), capture([&](std::ostream& s) { io::write_truth_table(s, fam[m]); }), out);
    }
  }

  if (c.format == "json") {
    Json j{{"report", report},
           {"conditions", io::to_json(cond)},
           {"minimality", minimality},
           {"disjoint_members", disjoint_json},
           {"verified", verified},
           {"passed", all_ok}};
    out << j.dump(2) << '\n';
  } else {
    const auto& st = sys.stats();
    out << "code [" << code.length << ", " << code.dimension << ", " << enumerated.min_nonzero() << "]\n";
    out << "sets A1={" << join(sys.indices(1)) << "} A2={" << join(sys.indices(2)) << "} A3={" << join(sys.indices(3))
        << "}\n";
    out << "conditions " << (cond.passed() ? "passed" : "FAILED") << '\n';
    out << "s1=" << st.s1 << " s2=" << st.s2 << " s3=" << st.s3 << " s12=" << st.s12 << " s13=" << st.s13
        << " s23=" << st.s23 << " s123=" << st.s123 << '\n';
    out << "chi12=" << st.chi12 << " chi13=" << st.chi13 << " chi23=" << st.chi23 << " chi123=" << st.chi123
        << " epsilon=" << st.epsilon << " mu=" << st.mu << '\n';
    out << "wt_min=" << ab.wt_min << " wt_max=" << ab.wt_max << " (weight-table candidate "
        << report["wt_max_candidate"].get<std::int64_t>() << ")\n";
    out << "weights match weight table: " << (predicted == enumerated ? "yes" : "no") << '\n';
    if (brute) out << "minimal (brute force): " << (brute->is_minimal ? "yes" : "no") << '\n';
    if (spectral) out << "minimal (spectral criterion): " << (spectral->is_minimal ? "yes" : "no") << '\n';
    if (!disjoint.empty()) {
      out << "members with disjoint index sets:";
      for (const auto& [a, b] : disjoint) out << ' ' << label(a) << '/' << label(b);
      out << '\n';
    }
    out << "ab ratio " << ab.wt_min << "/" << ab.wt_max << " = " << ab.ratio.to_string()
        << (ab.violating ? " <= 1/2 (AB-violating)" : " > 1/2") << '\n';
    if (sys.n() <= 8) {
      out << "generator:\n";
      io::write_generator(out, code.generator);
    }
  }
  if (!all_ok) {
    for (const auto& [k, v] : verified.items()) {
      if (!v.get<bool>()) err << "construct: check '" << k << "' failed\n";
    }
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const RunConfig& c, std::ostream& out) {
  SearchOptions opts;
  opts.seed = c.seed;
  opts.samples = c.samples;
  const auto found = search_admissible(c.t, c.ab_violating, opts);
  std::string lines;
  for (const auto& sys : found) {
    Json j = io::to_json(sys);
    j["epsilon"] = sys.stats().epsilon;
    lines += j.dump() + "\n";
  }
  emit(c.out, lines, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// walsh / weights

int cmd_walsh(const RunConfig& c, std::ostream& out) {
  BooleanFunction f;
  if (!c.table.empty()) {
    f = load_table(c.table);
  } else {
    const SetSystem sys = make_system(c);
    f = build_family(build_desarguesian_spread(make_field(c)), sys)[member_from_label(c.member)];
  }
  const WalshSpectrum s = walsh_hat(f);
  if (c.format == "json") {
    emit(c.out, Json{{"n", s.n}, {"values", s.values}}.dump() + "\n", out);
  } else {
    emit(c.out, capture([&](std::ostream& o) { io::write_spectrum_csv(o, s); }), out);
  }
  return kExitOk;
}

int cmd_weights(const RunConfig& c, std::ostream& out) {
  LinearCode code;
  if (!c.table.empty()) {
    code = construct_generic_code(load_table(c.table));
  } else {
    code = construct_code(build_family(build_desarguesian_spread(make_field(c)), make_system(c)));
  }
  const WeightDistribution d = enumerate_weights(code, c.workers);
  if (c.format == "json") {
    emit(c.out,
         Json{{"length", code.length}, {"dimension", code.dimension}, {"distribution", io::to_json(d)}}.dump() + "\n",
         out);
  } else {
    emit(c.out, capture([&](std::ostream& o) { io::write_weights_csv(o, d); }), out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string name;
  std::string status;  // passed | failed | skipped
  std::uint64_t checked = 0;
  std::string detail;
};

class Suites {
 public:
  void add(std::string name, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r{std::move(name), "passed", 0, ""};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = "failed";
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  const std::vector<SuiteResult>& results() const { return results_; }

 private:
  std::vector<SuiteResult> results_;
};

void fail(SuiteResult& r, const std::string& why) {
  if (r.status != "failed") r.detail = why;
  r.status = "failed";
}

bool parseval_holds(const BooleanFunction& f) {
  const auto s = walsh_hat(f);
  std::int64_t total = 0;
  for (auto v : s.values) total += std::int64_t{v} * v;
  return total == (std::int64_t{1} << (2 * f.n()));
}

bool involution_holds(const BooleanFunction& f) {
  std::vector<std::int32_t> a(f.domain_size());
  for (Point x = 0; x < a.size(); ++x) a[x] = f(x) ? -1 : 1;
  auto b = a;
  fwht(b);
  fwht(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != a[i] * static_cast<std::int32_t>(a.size())) return false;
  }
  return true;
}

void table_suites(Suites& suites, const RunConfig& c, std::mt19937_64& rng) {
  const BooleanFunction f = load_table(c.table);
  suites.add("walsh_relation", [&](SuiteResult& r) {
    if (c.spectrum.empty()) {
      ++r.checked;
      if (!check_hat_tilde_relation(f)) fail(r, "relation fails on the table");
      return;
    }
    std::ifstream in(c.spectrum);
    if (!in) throw InvalidInput("cannot read " + c.spectrum);
    const WalshSpectrum s = io::read_spectrum_csv(in);
    ++r.checked;
    if (!check_hat_tilde_relation(f, s)) fail(r, "supplied spectrum is inconsistent with the truth table");
  });
  suites.add("parseval", [&](SuiteResult& r) {
    ++r.checked;
    if (!parseval_holds(f)) fail(r, "sum of squares differs from 2^(2n)");
  });
  suites.add("fwht_involution", [&](SuiteResult& r) {
    ++r.checked;
    if (!involution_holds(f)) fail(r, "double transform differs from 2^n times the input");
  });
  suites.add("cover_identity", [&](SuiteResult& r) {
    const int trials = c.quick ? 100 : 10000;
    for (int i = 0; i < trials; ++i) {
      const BitVector x = random_vector(f.domain_size(), rng);
      BitVector y = random_vector(f.domain_size(), rng);
      if (i % 2 == 0) y &= x;
      ++r.checked;
      if (!check_cover_weight_identity(x, y)) fail(r, "identity fails on a random pair");
    }
  });
}

void instance_suites(Suites& suites, const RunConfig& c, const SetSystem& sys, std::mt19937_64& rng) {
  const PartialSpread spread = build_desarguesian_spread(make_field(c));
  const int n = sys.n();
  const int random_trials = c.quick ? 20 : 1000;

  suites.add("spread", [&](SuiteResult& r) {
    const std::size_t q = std::size_t{1} << sys.t();
    if (static_cast<std::size_t>(spread.size()) != q + 1) fail(r, "wrong number of components");
    BitVector covered(std::size_t{1} << n);
    for (int i = 1; i <= spread.size(); ++i) {
      const auto& w = spread.component(i);
      ++r.checked;
      if (rank(w.basis) != static_cast<std::size_t>(sys.t())) fail(r, "component " + std::to_string(i) + " has wrong dimension");
      if (w.members.popcount() != q) fail(r, "component " + std::to_string(i) + " has wrong size");
      for (const auto& u : w.basis.row_list()) {
        for (const auto& v : w.dual_basis.row_list()) {
          if (dot(u, v)) fail(r, "dual basis of component " + std::to_string(i) + " is not orthogonal");
        }
      }
      BitVector overlap = covered & w.members;
      overlap.set(0, false);
      if (overlap.any()) fail(r, "component " + std::to_string(i) + " meets an earlier one outside 0");
      covered |= w.members;
    }
    if (covered.popcount() != covered.size()) fail(r, "components do not cover F_2^n");
  });

  const FunctionFamily fam = build_family(spread, sys);
  const LinearCode code = construct_code(fam);

  suites.add("walsh_relation", [&](SuiteResult& r) {
    for (Member m : kMembers) {
      ++r.checked;
      if (!check_hat_tilde_relation(fam[m])) fail(r, "relation fails on member " + std::string(label(m)));
    }
    for (int i = 0; i < random_trials; ++i) {
      ++r.checked;
      if (!check_hat_tilde_relation(random_function(n, rng, 0.5, false))) fail(r, "relation fails on a random function");
    }
  });
  suites.add("cover_identity", [&](SuiteResult& r) {
    const int trials = c.quick ? 100 : 10000;
    for (int i = 0; i < trials; ++i) {
      const BitVector x = random_vector(code.length, rng);
      BitVector y = random_vector(code.length, rng);
      if (i % 2 == 0) y &= x;
      ++r.checked;
      if (!check_cover_weight_identity(x, y)) fail(r, "identity fails on a random pair");
    }
  });
  suites.add("parseval", [&](SuiteResult& r) {
    for (Member m : kMembers) {
      ++r.checked;
      if (!parseval_holds(fam[m])) fail(r, "Parseval fails on member " + std::string(label(m)));
    }
    for (int i = 0; i < random_trials; ++i) {
      ++r.checked;
      if (!parseval_holds(random_function(n, rng, 0.5, false))) fail(r, "Parseval fails on a random function");
    }
  });
  suites.add("fwht_involution", [&](SuiteResult& r) {
    for (int i = 0; i < random_trials; ++i) {
      ++r.checked;
      if (!involution_holds(random_function(n, rng, 0.5, false))) fail(r, "involution fails on a random function");
    }
  });
  suites.add("table1", [&](SuiteResult& r) {
    const auto enumerated = enumerate_weights(code, c.workers);
    r.checked = 3;
    if (code.length != (std::size_t{1} << n) - 1) fail(r, "length differs from 2^n-1");
    if (code.dimension != static_cast<std::size_t>(n + 3)) fail(r, "dimension differs from n+3");
    if (!(predict_weights(sys, n) == enumerated)) fail(r, "enumerated distribution differs from the weight table");
    if (!(weights_from_spectra(fam) == enumerated)) fail(r, "spectral weight multiset differs from enumeration");
  });
  suites.add("table2", [&](SuiteResult& r) {
    for (Member m : kMembers) {
      ++r.checked;
      if (!(predict_walsh(sys, m, spread) == walsh_hat(fam[m]))) {
        fail(r, "predicted spectrum of " + std::string(label(m)) + " differs from the transform");
      }
    }
  });
  suites.add("criterion_equivalence", [&](SuiteResult& r) {
    if (code.dimension > static_cast<std::size_t>(kMaxBruteForceDimension) || n > kMaxCriterionDimension) {
      r.status = "skipped";
      r.detail = "instance exceeds the brute-force cap";
    } else {
      ++r.checked;
      if (is_minimal_bruteforce(code).is_minimal != walsh_minimality_criterion(fam).is_minimal) {
        fail(r, "verdicts disagree on the instance");
      }
    }
    const int families = c.quick ? 20 : 200;
    const std::array<double, 3> densities{0.3, 0.4, 0.6};
    for (int i = 0; i < families; ++i) {
      const int rn = 4 + (i % 2);
      auto rf = random_family(rn, rng, densities[static_cast<std::size_t>(i / 2) % densities.size()]);
      if (!rf) continue;
      ++r.checked;
      if (is_minimal_bruteforce(construct_code(*rf)).is_minimal != walsh_minimality_criterion(*rf).is_minimal) {
        fail(r, "verdicts disagree on random family " + std::to_string(i));
      }
    }
  });
  const bool propositions_apply = check_conditions(sys).passed() && sizes_in_range(sys) && n >= 6;
  suites.add("propositions", [&](SuiteResult& r) {
    if (!propositions_apply || n > kMaxCriterionDimension) {
      r.status = "skipped";
      r.detail = "preconditions (conditions 1-3, 2 <= s_i <= 2^(t-1), n >= 6) not met";
      return;
    }
    const auto rep = proposition_suite(sys, fam);
    for (const auto& p : rep.results) {
      r.checked += p.checked;
      if (!p.passed()) {
        fail(r, p.name + " violated at (" + std::string(label(p.witness->phi1)) + ", " +
                    std::string(label(p.witness->phi2)) + ", x=" + std::to_string(p.witness->x) +
                    ", y=" + std::to_string(p.witness->y) + ")");
      }
    }
  });
  suites.add("structural_lemmas", [&](SuiteResult& r) {
    if (!check_conditions(sys).passed() || !sizes_in_range(sys)) {
      r.status = "skipped";
      r.detail = "preconditions (conditions 1-3, 2 <= s_i <= 2^(t-1)) not met";
      return;
    }
    ++r.checked;
    if (!check_structural_lemmas(sys)) fail(r, "a structural consequence of conditions 1-2 does not hold");
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(c.seed);
  Suites suites;
  if (!c.table.empty()) {
    table_suites(suites, c, rng);
  } else {
    const SetSystem sys = has_sets(c) ? make_system(c)
                                      : SetSystem::from_indices(3, {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6});
    if (!has_sets(c) && c.t != 3) throw InvalidInput("verify: --a1/--a2/--a3 are required when --t is not 3");
    instance_suites(suites, c, sys, rng);
  }

  Json arr = Json::array();
  Json failed = Json::array();
  for (const auto& s : suites.results()) {
    Json j{{"name", s.name}, {"status", s.status}, {"checked", s.checked}};
    if (!s.detail.empty()) j["detail"] = s.detail;
    arr.push_back(std::move(j));
    if (s.status == "failed") failed.push_back(s.name);
  }
  const bool ok = failed.empty();
  if (c.format == "text") {
    for (const auto& s : suites.results()) {
      out << s.status << ' ' << s.name << " (" << s.checked << " checks)" << (s.detail.empty() ? "" : ": " + s.detail)
          << '\n';
    }
  } else {
    out << Json{{"passed", ok}, {"failed", failed}, {"suites", arr}}.dump(2) << '\n';
  }
  for (const auto& name : failed) err << "verify: suite " << name.get<std::string>() << " failed\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal binary linear codes of dimension n+3 from spread Boolean functions"};
  app.name("mincode");
  app.require_subcommand(1);
  RunConfig c;

  auto add_instance = [&c](CLI::App* sub, bool sets_required) {
    sub->add_option("--t", c.t, "Half dimension t, n = 2t")->check(CLI::Range(2, kMaxSpreadDegree));
    sub->add_option("--modulus", c.modulus, "Irreducible polynomial of degree t in hex (default: built-in)");
    auto* a1 = sub->add_option("--a1", c.a1, "Comma-separated spread indices of A1")->delimiter(',');
    auto* a2 = sub->add_option("--a2", c.a2, "Comma-separated spread indices of A2")->delimiter(',');
    auto* a3 = sub->add_option("--a3", c.a3, "Comma-separated spread indices of A3")->delimiter(',');
    if (sets_required) {
      a1->required();
      a2->required();
      a3->required();
    }
  };
  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "Output path (directory for construct)");
    sub->add_option("--seed", c.seed, "Seed for sampled searches and random trials");
    sub->add_option("--workers", c.workers, "Worker threads (0 = hardware concurrency)");
  };

  auto* construct = app.add_subcommand("construct", "Build the code for a set system and report its parameters");
  add_instance(construct, true);
  add_common(construct);
  construct->add_flag("--force", c.force, "Build even if the admissibility conditions fail");

  auto* search = app.add_subcommand("search", "List admissible set systems as JSON lines");
  search->add_option("--t", c.t, "Half dimension t")->required()->check(CLI::Range(3, 5));
  search->add_flag("--ab-violating", c.ab_violating, "Keep only systems with epsilon <= 2^(t-2)");
  search->add_option("--samples", c.samples, "Random draws for t >= 4");
  add_common(search);

  auto* verify = app.add_subcommand("verify", "Run the property suites on an instance or a truth table");
  add_instance(verify, false);
  add_common(verify);
  verify->add_flag("--quick", c.quick, "Fewer random trials; deterministic suites unchanged");
  verify->add_option("--table", c.table, "Truth-table file to check instead of a spread instance");
  verify->add_option("--spectrum", c.spectrum, "Spectrum CSV to check against --table");

  auto* walsh = app.add_subcommand("walsh", "Export the Walsh spectrum of a truth table or family member");
  add_instance(walsh, false);
  add_common(walsh);
  walsh->add_option("--table", c.table, "Truth-table file");
  walsh->add_option("--member", c.member, "Family member label (f, g, h, f+g, f+h, g+h, f+g+h)");

  auto* weights = app.add_subcommand("weights", "Enumerate the weight distribution");
  add_instance(weights, false);
  add_common(weights);
  weights->add_option("--table", c.table, "Truth-table file for the single-function code");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mincode: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (construct->parsed()) {
      if (c.format.empty()) c.format = "text";
      return cmd_construct(c, out, err);
    }
    if (search->parsed()) return cmd_search(c, out);
    if (verify->parsed()) {
      if (c.format.empty()) c.format = "json";
      return cmd_verify(c, out, err);
    }
    if (walsh->parsed()) return cmd_walsh(c, out);
    if (weights->parsed()) return cmd_weights(c, out);
  } catch (const InvalidInput& e) {
    err << "mincode: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const PreconditionError& e) {
    err << "mincode: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ParseError& e) {
    err << "mincode: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const CapExceeded& e) {
    err << "mincode: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace mincode::cli
