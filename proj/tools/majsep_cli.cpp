// Copyright 2026 The majsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through majsep.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majsep/majsep.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitConsistent = 0;
constexpr int kExitError = 1;
constexpr int kExitInseparable = 2;

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

struct Failure {
  majsep_status status;
  std::string message;
};

void check(majsep_status st) {
  if (st != MAJSEP_OK) throw Failure{st, majsep_last_error()};
}

struct StateDeleter {
  void operator()(majsep_state* s) const { majsep_state_destroy(s); }
};
struct ReportDeleter {
  void operator()(majsep_report* r) const { majsep_report_destroy(r); }
};
struct ConstructionDeleter {
  void operator()(majsep_construction* c) const { majsep_construction_destroy(c); }
};
struct SearchDeleter {
  void operator()(majsep_search* s) const { majsep_search_destroy(s); }
};
using State = std::unique_ptr<majsep_state, StateDeleter>;
using Report = std::unique_ptr<majsep_report, ReportDeleter>;

// 12 significant digits; %g already switches to lowercase scientific below
// 1e-4.
std::string num(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double rounded(double x) { return std::strtod(num(x).c_str(), nullptr); }

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ' ';
    out += num(v[i]);
  }
  return out;
}

ordered_json json_array(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(rounded(x));
  return a;
}

std::vector<double> spectrum(const majsep_report* r, majsep_spectrum_kind kind) {
  std::size_t len = 0;
  check(majsep_report_spectrum(r, kind, nullptr, 0, &len));
  std::vector<double> v(len);
  check(majsep_report_spectrum(r, kind, v.data(), v.size(), &len));
  return v;
}

std::vector<double> gaps(const majsep_report* r, majsep_side side) {
  std::size_t len = 0;
  check(majsep_report_prefix_gaps(r, side, nullptr, 0, &len));
  std::vector<double> v(len);
  check(majsep_report_prefix_gaps(r, side, v.data(), v.size(), &len));
  return v;
}

std::pair<std::vector<std::size_t>, std::size_t> dims_of(const majsep_state* s) {
  std::size_t n = 0;
  std::size_t split = 0;
  check(majsep_state_dims(s, nullptr, 0, &n, &split));
  std::vector<std::size_t> dims(n);
  check(majsep_state_dims(s, dims.data(), dims.size(), &n, &split));
  return {dims, split};
}

Report analyze(const majsep_state* s, double tol) {
  majsep_report* r = nullptr;
  check(majsep_analyze(s, tol, &r));
  return Report(r);
}

std::string holds(int flag) { return flag ? "holds" : "fails"; }

std::string violation(long idx) {
  return idx < 0 ? "none" : std::to_string(idx + 1);
}

using Fields = std::vector<std::pair<std::string, ordered_json>>;

// Emits "key: value" lines or a single JSON object.
void emit(const Options& opt, const Fields& header, const majsep_state* state,
          const majsep_report* report) {
  majsep_report_summary sum{};
  check(majsep_report_get_summary(report, &sum));
  const auto [dims, split] = dims_of(state);
  const auto global = spectrum(report, MAJSEP_SPECTRUM_GLOBAL);
  const auto sa = spectrum(report, MAJSEP_SPECTRUM_A);
  const auto sb = spectrum(report, MAJSEP_SPECTRUM_B);
  const auto ga = gaps(report, MAJSEP_SIDE_A);
  const auto gb = gaps(report, MAJSEP_SIDE_B);
  const std::string verdict = majsep_verdict_name(sum.verdict);

  if (opt.structured()) {
    ordered_json j;
    for (const auto& [k, v] : header) j[k] = v;
    j["dims"] = dims;
    j["split"] = split;
    j["global_spectrum"] = json_array(global);
    j["spectrum_A"] = json_array(sa);
    j["spectrum_B"] = json_array(sb);
    j["majorization_A"] = {{"holds", sum.majorization_a != 0},
                           {"prefix_gaps", json_array(ga)},
                           {"first_violation", sum.first_violation_a < 0
                                                   ? ordered_json(nullptr)
                                                   : ordered_json(sum.first_violation_a + 1)}};
    j["majorization_B"] = {{"holds", sum.majorization_b != 0},
                           {"prefix_gaps", json_array(gb)},
                           {"first_violation", sum.first_violation_b < 0
                                                   ? ordered_json(nullptr)
                                                   : ordered_json(sum.first_violation_b + 1)}};
    j["entropy"] = {{"holds", sum.entropy_ok != 0},
                    {"S_A_bits", rounded(sum.entropy_a)},
                    {"S_B_bits", rounded(sum.entropy_b)},
                    {"S_AB_bits", rounded(sum.entropy_ab)}};
    j["ppt"] = {{"holds", sum.ppt_ok != 0},
                {"min_eigenvalue", rounded(sum.ppt_min_eigenvalue)}};
    j["verdict"] = verdict;
    std::cout << j.dump() << '\n';
    return;
  }

  for (const auto& [k, v] : header) {
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  std::cout << "dims:";
  for (auto d : dims) std::cout << ' ' << d;
  std::cout << "\nsplit: " << split << '\n'
            << "global_spectrum: " << join(global) << '\n'
            << "spectrum_A: " << join(sa) << '\n'
            << "spectrum_B: " << join(sb) << '\n'
            << "majorization_A: " << holds(sum.majorization_a) << '\n'
            << "prefix_gaps_A: " << join(ga) << '\n'
            << "first_violation_A: " << violation(sum.first_violation_a) << '\n'
            << "majorization_B: " << holds(sum.majorization_b) << '\n'
            << "prefix_gaps_B: " << join(gb) << '\n'
            << "first_violation_B: " << violation(sum.first_violation_b) << '\n'
            << "entropy_A_bits: " << num(sum.entropy_a) << '\n'
            << "entropy_B_bits: " << num(sum.entropy_b) << '\n'
            << "entropy_AB_bits: " << num(sum.entropy_ab) << '\n'
            << "entropy_criterion: " << holds(sum.entropy_ok) << '\n'
            << "ppt_min_eigenvalue: " << num(sum.ppt_min_eigenvalue) << '\n'
            << "ppt_criterion: " << holds(sum.ppt_ok) << '\n'
            << "verdict: " << verdict << '\n';
}

int exit_for(const majsep_report* report) {
  majsep_report_summary sum{};
  check(majsep_report_get_summary(report, &sum));
  return sum.verdict == MAJSEP_CONSISTENT_WITH_SEPARABILITY ? kExitConsistent
                                                            : kExitInseparable;
}

int analyze_and_emit(const Options& opt, const Fields& header, majsep_state* raw) {
  State state(raw);
  Report report = analyze(state.get(), opt.tol);
  emit(opt, header, state.get(), report.get());
  return exit_for(report.get());
}

int cmd_analyze(const Options& opt, const std::string& path) {
  majsep_state* s = nullptr;
  check(majsep_state_load(path.c_str(), &s));
  return analyze_and_emit(opt, {{"source", path}}, s);
}

struct WernerArgs {
  std::size_t d = 2;
  std::optional<double> p;
  std::vector<double> sweep;
};

int cmd_werner(const Options& opt, const WernerArgs& args) {
  double threshold = 0.0;
  check(majsep_werner_threshold(args.d, &threshold));
  std::optional<double> entropy_boundary;
  if (args.d == 2) {
    double b = 0.0;
    check(majsep_werner_entropy_boundary(&b));
    entropy_boundary = b;
  }
  Fields header{{"family", "werner"},
                {"d", args.d},
                {"majorization_threshold", rounded(threshold)}};
  if (entropy_boundary) header.emplace_back("entropy_boundary", rounded(*entropy_boundary));

  if (args.sweep.empty()) {
    if (!args.p) throw Failure{MAJSEP_ERR_BAD_PARAMETER, "werner needs --p or --sweep"};
    header.emplace_back("p", rounded(*args.p));
    majsep_state* s = nullptr;
    check(majsep_state_werner(args.d, *args.p, &s));
    return analyze_and_emit(opt, header, s);
  }

  const double start = args.sweep[0];
  const double stop = args.sweep[1];
  const double step = args.sweep[2];
  if (!(step > 0.0) || !(stop >= start)) {
    throw Failure{MAJSEP_ERR_BAD_PARAMETER, "sweep needs start <= stop and step > 0"};
  }
  const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;

  if (opt.structured()) {
    ordered_json h;
    for (const auto& [k, v] : header) h[k] = v;
    std::cout << h.dump() << '\n';
  } else {
    for (const auto& [k, v] : header) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    std::cout << "p majorization_A majorization_B entropy ppt ppt_min_eigenvalue verdict\n";
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double p = rounded(start + static_cast<double>(i) * step);
    majsep_state* raw = nullptr;
    check(majsep_state_werner(args.d, p, &raw));
    State state(raw);
    Report report = analyze(state.get(), opt.tol);
    majsep_report_summary sum{};
    check(majsep_report_get_summary(report.get(), &sum));
    const std::string verdict = majsep_verdict_name(sum.verdict);
    if (opt.structured()) {
      ordered_json row{{"p", p},
                       {"majorization_A", sum.majorization_a != 0},
                       {"majorization_B", sum.majorization_b != 0},
                       {"entropy", sum.entropy_ok != 0},
                       {"ppt", sum.ppt_ok != 0},
                       {"ppt_min_eigenvalue", rounded(sum.ppt_min_eigenvalue)},
                       {"verdict", verdict}};
      std::cout << row.dump() << '\n';
    } else {
      std::cout << num(p) << ' ' << holds(sum.majorization_a) << ' '
                << holds(sum.majorization_b) << ' ' << holds(sum.entropy_ok) << ' '
                << holds(sum.ppt_ok) << ' ' << num(sum.ppt_min_eigenvalue) << ' '
                << verdict << '\n';
    }
  }
  return kExitConsistent;
}

int cmd_cat(const Options& opt, std::size_t n, std::size_t d, double eps) {
  majsep_state* s = nullptr;
  check(majsep_state_cat(n, d, eps, &s));
  State guard(s);
  double threshold = 0.0;
  check(majsep_cat_threshold(n, d, &threshold));
  Fields header{{"family", "cat"}, {"n", n}, {"d", d}, {"eps", rounded(eps)},
                {"violation_threshold", rounded(threshold)}};
  return analyze_and_emit(opt, header, guard.release());
}

int cmd_example1(const Options& opt, double p) {
  majsep_state* s = nullptr;
  check(majsep_state_example1(p, &s));
  return analyze_and_emit(opt, {{"family", "example1"}, {"p", rounded(p)}}, s);
}

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_construct(const Options& opt, const std::string& path) {
  majsep_construction* raw = nullptr;
  check(majsep_construct_from_file(path.c_str(), &raw));
  std::unique_ptr<majsep_construction, ConstructionDeleter> c(raw);
  const majsep_state* state = majsep_construction_state(c.get());

  struct Term {
    double weight;
    std::size_t b_index;
    std::vector<double> re, im;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < majsep_construction_term_count(c.get()); ++i) {
    Term t{};
    std::size_t dim_a = 0;
    check(majsep_construction_term(c.get(), i, &t.weight, &t.b_index, nullptr, nullptr,
                                   0, &dim_a));
    t.re.resize(dim_a);
    t.im.resize(dim_a);
    check(majsep_construction_term(c.get(), i, &t.weight, &t.b_index, t.re.data(),
                                   t.im.data(), dim_a, &dim_a));
    terms.push_back(std::move(t));
  }

  if (opt.structured()) {
    const auto [dims, split] = dims_of(state);
    const std::size_t n = majsep_state_dim(state);
    std::vector<double> re(n * n), im(n * n);
    check(majsep_state_entries(state, re.data(), im.data(), re.size()));
    ordered_json j{{"dims", dims}, {"split", split}, {"re", re}, {"im", im}};
    ordered_json decomposition = ordered_json::array();
    for (const auto& t : terms) {
      decomposition.push_back(
          {{"weight", t.weight}, {"b_index", t.b_index}, {"a_re", t.re}, {"a_im", t.im}});
    }
    j["decomposition"] = decomposition;
    std::cout << j.dump() << '\n';
    return kExitConsistent;
  }

  std::size_t needed = 0;
  check(majsep_state_format(state, nullptr, 0, &needed));
  std::string text(needed, '\0');
  check(majsep_state_format(state, text.data(), text.size(), &needed));
  text.resize(needed - 1);

  std::cout << "# separable state sum_j w_j |a_j><a_j| (x) |b_j><b_j|\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::cout << "# term " << i << ": weight=" << real17(t.weight)
              << " b_index=" << t.b_index << " a_re=";
    for (std::size_t k = 0; k < t.re.size(); ++k) std::cout << (k ? "," : "") << real17(t.re[k]);
    std::cout << " a_im=";
    for (std::size_t k = 0; k < t.im.size(); ++k) std::cout << (k ? "," : "") << real17(t.im[k]);
    std::cout << '\n';
  }
  std::cout << text;
  return kExitConsistent;
}

struct SearchArgs {
  std::vector<std::size_t> dims;
  std::size_t rank = 0;
  std::size_t samples = 1000;
  unsigned threads = 0;
};

int cmd_search(const Options& opt, const SearchArgs& args) {
  majsep_search* raw = nullptr;
  check(majsep_search_run(args.dims[0], args.dims[1], args.rank, args.samples, opt.seed,
                          args.threads, &raw));
  std::unique_ptr<majsep_search, SearchDeleter> search(raw);
  std::size_t candidates = 0;
  std::size_t near_misses = 0;
  for (std::size_t i = 0; i < majsep_search_count(search.get()); ++i) {
    majsep_search_record r{};
    check(majsep_search_record_at(search.get(), i, &r));
    candidates += r.is_candidate ? 1 : 0;
    near_misses += r.is_near_miss ? 1 : 0;
    if (opt.structured()) {
      ordered_json j{{"index", r.index},
                     {"seed", r.seed},
                     {"dims", {r.dim_a, r.dim_b}},
                     {"rank", r.rank},
                     {"ppt_min_eig", rounded(r.ppt_min_eig)},
                     {"majorization_A_gap", rounded(r.majorization_a_gap)},
                     {"majorization_B_gap", rounded(r.majorization_b_gap)},
                     {"is_candidate", r.is_candidate != 0},
                     {"is_near_miss", r.is_near_miss != 0}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "record index=" << r.index << " seed=" << r.seed << " dims=" << r.dim_a
                << 'x' << r.dim_b << " rank=" << r.rank
                << " ppt_min_eig=" << num(r.ppt_min_eig)
                << " gap_A=" << num(r.majorization_a_gap)
                << " gap_B=" << num(r.majorization_b_gap)
                << " candidate=" << r.is_candidate << " near_miss=" << r.is_near_miss
                << '\n';
    }
  }
  if (opt.structured()) {
    ordered_json j{{"summary", {{"samples", majsep_search_count(search.get())},
                                {"seed", opt.seed},
                                {"candidates", candidates},
                                {"near_misses", near_misses}}}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "summary samples=" << majsep_search_count(search.get())
              << " seed=" << opt.seed << " candidates=" << candidates
              << " near_misses=" << near_misses << '\n';
  }
  return kExitConsistent;
}

void print_matrix(const majsep_state* s) {
  const std::size_t n = majsep_state_dim(s);
  std::vector<double> re(n * n), im(n * n);
  check(majsep_state_entries(s, re.data(), im.data(), re.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < n; ++j) {
      const double r = re[i * n + j];
      const double m = im[i * n + j];
      std::cout << ' ' << num(r);
      if (m != 0.0) std::cout << (m > 0 ? "+" : "") << num(m) << 'i';
    }
    std::cout << '\n';
  }
}

int cmd_isospectral(const Options& opt) {
  majsep_state* rho_raw = nullptr;
  majsep_state* sigma_raw = nullptr;
  check(majsep_state_isospectral(&rho_raw, &sigma_raw));
  State rho(rho_raw);
  State sigma(sigma_raw);
  const std::pair<const char*, const majsep_state*> members[] = {{"rho_AB", rho.get()},
                                                                 {"sigma_AB", sigma.get()}};
  ordered_json all = ordered_json::array();
  for (const auto& [name, state] : members) {
    Report report = analyze(state, opt.tol);
    majsep_report_summary sum{};
    check(majsep_report_get_summary(report.get(), &sum));
    const auto global = spectrum(report.get(), MAJSEP_SPECTRUM_GLOBAL);
    const auto sa = spectrum(report.get(), MAJSEP_SPECTRUM_A);
    const auto sb = spectrum(report.get(), MAJSEP_SPECTRUM_B);
    if (opt.structured()) {
      const std::size_t n = majsep_state_dim(state);
      std::vector<double> re(n * n), im(n * n);
      check(majsep_state_entries(state, re.data(), im.data(), re.size()));
      std::vector<double> rr(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) rr[i] = rounded(re[i]);
      all.push_back({{"name", name},
                     {"re", rr},
                     {"global_spectrum", json_array(global)},
                     {"spectrum_A", json_array(sa)},
                     {"spectrum_B", json_array(sb)},
                     {"ppt_min_eigenvalue", rounded(sum.ppt_min_eigenvalue)},
                     {"verdict", majsep_verdict_name(sum.verdict)}});
      continue;
    }
    std::cout << name << ":\n";
    print_matrix(state);
    std::cout << "  global_spectrum: " << join(global) << '\n'
              << "  spectrum_A: " << join(sa) << '\n'
              << "  spectrum_B: " << join(sb) << '\n'
              << "  ppt_min_eigenvalue: " << num(sum.ppt_min_eigenvalue) << '\n'
              << "  verdict: " << majsep_verdict_name(sum.verdict) << '\n';
  }
  if (opt.structured()) std::cout << ordered_json{{"isospectral_pair", all}}.dump() << '\n';
  return kExitConsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral separability criteria for bipartite quantum states"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol, "Tolerance for every criterion")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opt.seed, "Master seed for randomized commands");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a matrix file");
  analyze_cmd->add_option("path", path, "Matrix file")->required();

  WernerArgs werner;
  auto* werner_cmd = app.add_subcommand("werner", "Werner states in d dimensions");
  werner_cmd->add_option("--d", werner.d, "Local dimension")->check(CLI::Range(2, 64));
  auto* p_opt = werner_cmd->add_option("--p", werner.p, "Weight of the entangled part");
  werner_cmd->add_option("--sweep", werner.sweep, "START STOP STEP")
      ->expected(3)
      ->excludes(p_opt);

  std::size_t cat_n = 3;
  std::size_t cat_d = 2;
  double cat_eps = 0.0;
  auto* cat_cmd = app.add_subcommand("cat", "Cat state mixed with white noise");
  cat_cmd->add_option("--n", cat_n, "Number of qudits")->required();
  cat_cmd->add_option("--d", cat_d, "Qudit dimension")->required();
  cat_cmd->add_option("--eps", cat_eps, "Weight of the cat state")->required();

  double ex_p = 0.5;
  auto* ex_cmd = app.add_subcommand("example1", "p|00><00| + (1-p)|Psi+><Psi+| on two qubits");
  ex_cmd->add_option("--p", ex_p, "Weight of |00>")->required();

  std::string spectra_path;
  auto* construct_cmd =
      app.add_subcommand("construct", "Separable state with prescribed spectra");
  construct_cmd->add_option("path", spectra_path, "Spectra file with r and s")->required();

  SearchArgs search;
  auto* search_cmd =
      app.add_subcommand("search", "Random search for PPT states violating majorization");
  search_cmd->add_option("--dims", search.dims, "DIM_A DIM_B")
      ->expected(2)
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--rank", search.rank, "State rank (0 cycles all ranks)");
  search_cmd->add_option("--samples", search.samples, "Number of samples")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)");

  auto* iso_cmd =
      app.add_subcommand("isospectral", "Isospectral pair with opposite PPT verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt, path);
    if (*werner_cmd) return cmd_werner(opt, werner);
    if (*cat_cmd) return cmd_cat(opt, cat_n, cat_d, cat_eps);
    if (*ex_cmd) return cmd_example1(opt, ex_p);
    if (*construct_cmd) return cmd_construct(opt, spectra_path);
    if (*search_cmd) return cmd_search(opt, search);
    if (*iso_cmd) return cmd_isospectral(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << majsep_status_name(f.status) << ": " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
