// Command-line front end: runs the finite-level verifications of the 2-adic
// image theorems and the genus-1 4-torsion field construction, emitting
// human-readable or line-delimited JSON reports.
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 resource-cap
// abort, 3 usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperjac/group_enum.hpp"
#include "hyperjac/homology.hpp"
#include "hyperjac/torsion4.hpp"
#include "hyperjac/tower.hpp"
#include "hyperjac/tower_text.hpp"

namespace {

using namespace hyperjac;

struct Options {
  bool json = false;
  bool fault = false;
  std::uint64_t seed = 12345;
  int samples = 10000;
  std::size_t max_elements = kDefaultElementCap;
};

// 0 = ok, 1 = verification failure, 2 = cap abort; keeps the worst so far.
struct ExitState {
  int code = 0;
  void record(const VerificationReport& r) {
    if (r.aborted)
      code = std::max(code, 2);
    else if (!r.passed)
      code = std::max(code, 1);
  }
};

void emit(const VerificationReport& r, const Options& opt) {
  if (opt.json)
    std::cout << to_json_line(r) << "\n";
  else
    std::cout << to_text(r) << "\n";
}

VerificationReport run_guarded(const std::string& command, int genus,
                               std::optional<int> level,
                               const std::function<VerificationReport()>& fn) {
  try {
    return fn();
  } catch (const closure_limit_error& e) {
    VerificationReport r;
    r.command = command;
    r.genus = genus;
    r.level = level;
    r.expected = "completed closure";
    r.computed = "aborted";
    r.passed = false;
    r.aborted = true;
    r.details.push_back(e.what());
    return r;
  } catch (const error& e) {
    VerificationReport r;
    r.command = command;
    r.genus = genus;
    r.level = level;
    r.expected = "check completes";
    r.computed = "error";
    r.passed = false;
    r.details.push_back(e.what());
    return r;
  }
}

VerificationReport orders_report(int genus, int level, bool fault) {
  Stopwatch timer;
  VerificationReport r;
  r.command = "orders";
  r.genus = genus;
  r.level = level;
  Int sp = sp_group_order(genus, level);
  const Int gamma = gamma_quotient_order(genus, level);
  if (fault) sp += 1;
  const Int two_gsq = Int(1) << static_cast<unsigned>(2 * genus * genus + genus);
  const bool divides = sp % gamma == 0;
  const bool gamma2_identity = gamma_quotient_order(genus, 2) == two_gsq;
  r.expected = "gamma | sp and gamma(g,2) = 2^(2g^2+g) = " + two_gsq.get_str();
  r.computed = "sp = " + sp.get_str() + ", gamma = " + gamma.get_str();
  r.passed = divides && gamma2_identity;
  r.details.push_back("sp(g,1) = " + sp_group_order(genus, 1).get_str());
  r.elapsed_ms = timer.elapsed_ms();
  return r;
}

VerificationReport torsion4_report(const Options& opt,
                                   const std::optional<std::array<Rat, 3>>& at,
                                   bool print_points) {
  const Torsion4Report full = verify_torsion4(opt.fault, at);
  if (print_points) {
    if (opt.json) {
      std::cout << torsion_points_json(full) << "\n";
    } else {
      for (std::size_t i = 0; i < full.points.size(); ++i) {
        const auto& p = full.points[i];
        std::cout << "  point " << i << ": ";
        if (p.at_infinity)
          std::cout << "O";
        else
          std::cout << "x = " << to_text(p.x) << ", y = " << to_text(p.y);
        std::cout << " (order " << full.orders[i];
        if (full.halved_from[i])
          std::cout << ", halves T" << full.halved_from[i];
        std::cout << ")\n";
      }
    }
  }
  return full.summary;
}

std::optional<std::array<Rat, 3>> parse_triple(const std::string& text) {
  std::array<Rat, 3> out;
  std::stringstream ss(text);
  std::string part;
  int k = 0;
  while (std::getline(ss, part, ',')) {
    if (k >= 3) throw error("--specialize needs exactly three values");
    out[k] = Rat(part);
    out[k].canonicalize();
    ++k;
  }
  if (k != 3) throw error("--specialize needs exactly three values");
  if (out[0] == out[1] || out[0] == out[2] || out[1] == out[2])
    throw error("--specialize values must be pairwise distinct");
  return out;
}

int genus_cap_for(const std::string& command) {
  if (command == "theorem") return 3;
  if (command == "radical-independence") return 2;
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level verification toolkit for the 2-adic monodromy of "
               "hyperelliptic Jacobians"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit line-delimited JSON reports");
  app.add_option("--seed", opt.seed, "seed for all randomized checks");
  std::optional<std::size_t> max_elements_flag;
  app.add_option("--max-elements", max_elements_flag,
                 "element cap for closure enumeration");
  app.add_flag("--inject-fault", opt.fault, "")->group("");  // hidden

  int genus = 1, level = 2, samples = -1;
  std::string dump_path, word_text, specialize_text;

  CLI::App* cmd_orders = app.add_subcommand("orders", "closed-form group orders");
  cmd_orders->add_option("--genus", genus)->check(CLI::Range(1, 8));
  cmd_orders->add_option("--level", level)->check(CLI::Range(1, 6));

  CLI::App* cmd_braid =
      app.add_subcommand("braid-relations", "defining relations under R");
  cmd_braid->add_option("--genus", genus)->check(CLI::Range(1, 4));

  CLI::App* cmd_purity =
      app.add_subcommand("purity", "pure <=> trivial mod 2, sampled");
  cmd_purity->add_option("--genus", genus)->check(CLI::Range(1, 4));
  cmd_purity->add_option("--samples", samples)->check(CLI::PositiveNumber);

  CLI::App* cmd_mod2 =
      app.add_subcommand("mod2-quotient", "braid image mod 2 is S_{2g+1}");
  cmd_mod2->add_option("--genus", genus)->check(CLI::Range(1, 4));

  CLI::App* cmd_fullsp =
      app.add_subcommand("full-sp-g1", "genus-1 image is all of Sp mod 2^n");
  cmd_fullsp->add_option("--level", level)->check(CLI::Range(1, 6));

  CLI::App* cmd_theorem = app.add_subcommand(
      "theorem", "pure-braid image mod 2^n equals Gamma(2) mod 2^n");
  cmd_theorem->add_option("--genus", genus)->check(CLI::Range(1, 3));
  cmd_theorem->add_option("--level", level)->check(CLI::Range(2, 6));
  cmd_theorem->add_option("--dump", dump_path, "write sorted hex closure dump");

  CLI::App* cmd_rank =
      app.add_subcommand("mod4-rank", "rank of log Gamma(2)/Gamma(4) images");
  cmd_rank->add_option("--genus", genus)->check(CLI::Range(1, 4));

  CLI::App* cmd_rad = app.add_subcommand(
      "radical-independence", "subset products of (a_i - a_j) are non-squares");
  cmd_rad->add_option("--genus", genus)->check(CLI::Range(1, 2));

  CLI::App* cmd_torsion =
      app.add_subcommand("torsion4", "genus-1 4-torsion over the radical tower");
  cmd_torsion->add_option("--specialize", specialize_text,
                          "rational triple a1,a2,a3 for an exact numeric check");

  CLI::App* cmd_rep =
      app.add_subcommand("rep", "print the matrix of a braid word");
  cmd_rep->add_option("--genus", genus)->check(CLI::Range(1, 4));
  cmd_rep->add_option("--word", word_text, "comma-separated letters, e.g. 1,2,-1")
      ->required();
  std::optional<int> rep_level;
  cmd_rep->add_option("--level", rep_level, "reduce mod 2^n")
      ->check(CLI::Range(1, 6));

  CLI::App* cmd_all = app.add_subcommand("all", "run the full suite");
  cmd_all->add_option("--genus", genus)->check(CLI::Range(1, 3));
  cmd_all->add_option("--level", level)->check(CLI::Range(2, 6));
  cmd_all->add_option("--samples", samples)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/message
    return 3;
  }

  if (const char* env = std::getenv("HYPERJAC_MAX_ELEMENTS")) {
    try {
      opt.max_elements = std::stoull(env);
    } catch (...) {
      std::cerr << "bad HYPERJAC_MAX_ELEMENTS value: " << env << "\n";
      return 3;
    }
  }
  if (max_elements_flag) opt.max_elements = *max_elements_flag;  // flag wins
  if (samples > 0) opt.samples = samples;

  ExitState exit_state;
  try {
    if (cmd_orders->parsed()) {
      const VerificationReport r = run_guarded("orders", genus, level, [&] {
        return orders_report(genus, level, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_braid->parsed()) {
      const VerificationReport r = run_guarded("braid-relations", genus, {}, [&] {
        return verify_braid_relations(genus, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_purity->parsed()) {
      const VerificationReport r = run_guarded("purity", genus, {}, [&] {
        return purity_mod2_property(genus, opt.samples, opt.seed, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_mod2->parsed()) {
      const VerificationReport r = run_guarded("mod2-quotient", genus, 1, [&] {
        return verify_mod2_quotient(genus, opt.max_elements, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_fullsp->parsed()) {
      const VerificationReport r = run_guarded("full-sp-g1", 1, level, [&] {
        return verify_g1_full_sp(level, opt.max_elements, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_theorem->parsed()) {
      const VerificationReport r = run_guarded("theorem", genus, level, [&] {
        Stopwatch timer;
        const GroupClosure c =
            theorem_level_closure(genus, level, opt.max_elements, opt.fault);
        if (!dump_path.empty()) {
          std::ofstream out(dump_path, std::ios::binary);
          if (!out) throw error("cannot open dump file: " + dump_path);
          write_closure_dump(c, out);
        }
        VerificationReport report = theorem_report_from_closure(c, genus, level);
        report.elapsed_ms = timer.elapsed_ms();
        return report;
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_rank->parsed()) {
      const VerificationReport r = run_guarded("mod4-rank", genus, 2, [&] {
        return verify_mod4_rank(genus, opt.fault);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_rad->parsed()) {
      const VerificationReport r =
          run_guarded("radical-independence", genus, {}, [&] {
            return verify_radical_independence(genus, opt.fault);
          });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_torsion->parsed()) {
      std::optional<std::array<Rat, 3>> at;
      if (!specialize_text.empty()) at = parse_triple(specialize_text);
      const VerificationReport r = run_guarded("torsion4", 1, {}, [&] {
        return torsion4_report(opt, at, true);
      });
      emit(r, opt);
      exit_state.record(r);
    } else if (cmd_rep->parsed()) {
      const BraidWord w = parse_word(2 * genus + 1, word_text);
      if (rep_level) {
        std::cout << rep_word(w, genus, Modulus(*rep_level)).to_string() << "\n";
      } else {
        std::cout << rep_word(w, genus).to_string() << "\n";
      }
      return 0;
    } else if (cmd_all->parsed()) {
      std::vector<VerificationReport> reports;
      reports.push_back(run_guarded("orders", genus, level, [&] {
        return orders_report(genus, level, opt.fault);
      }));
      reports.push_back(run_guarded("braid-relations", genus, {}, [&] {
        return verify_braid_relations(genus, opt.fault);
      }));
      reports.push_back(run_guarded("purity", genus, {}, [&] {
        return purity_mod2_property(genus, opt.samples, opt.seed, opt.fault);
      }));
      reports.push_back(run_guarded("mod2-quotient", genus, 1, [&] {
        return verify_mod2_quotient(genus, opt.max_elements, opt.fault);
      }));
      if (genus == 1)
        reports.push_back(run_guarded("full-sp-g1", 1, level, [&] {
          return verify_g1_full_sp(level, opt.max_elements, opt.fault);
        }));
      reports.push_back(run_guarded("theorem", genus, level, [&] {
        return verify_theorem_level(genus, level, opt.max_elements, opt.fault);
      }));
      reports.push_back(run_guarded("mod4-rank", genus, 2, [&] {
        return verify_mod4_rank(genus, opt.fault);
      }));
      if (genus <= 2)
        reports.push_back(run_guarded("radical-independence", genus, {}, [&] {
          return verify_radical_independence(genus, opt.fault);
        }));
      if (genus == 1)
        reports.push_back(run_guarded("torsion4", 1, {}, [&] {
          return torsion4_report(opt, std::nullopt, false);
        }));
      for (const auto& r : reports) {
        emit(r, opt);
        exit_state.record(r);
      }
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_state.code;
}
