#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "linf/classify.hpp"
#include "linf/cli.hpp"
#include "linf/jacobi.hpp"

namespace linf::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string space_label(const GradedSpaceSpec& s) {
  const int m = s.bottom_degree();
  return "V_" + std::to_string(m) + " + V_" + std::to_string(m + 1) + " + V_" + std::to_string(m + 2) + " (" +
         s.name(0) + ", " + s.name(1) + ", " + s.name(2) + ")";
}

void header(const RunConfig& config, std::ostream& out) {
  out << "case " << to_string(config.case_tag()) << ", m = " << config.bottom_degree << ", "
      << space_label(config.space()) << ", max_arity " << config.max_arity << "\n";
}

ojson config_json(const RunConfig& config, const char* command) {
  ojson j;
  j["command"] = command;
  j["case"] = to_string(config.case_tag());
  j["m"] = config.bottom_degree;
  j["max_arity"] = config.max_arity;
  return j;
}

ojson vector_json(const VectorValue& v, const GradedSpaceSpec& s) {
  ojson j = ojson::object();
  for (int g = 0; g < kGeneratorCount; ++g) {
    if (!is_zero(v.coeff[static_cast<std::size_t>(g)])) j[s.name(g)] = to_string(v.coeff[static_cast<std::size_t>(g)]);
  }
  return j;
}

std::string sequence_text(const std::vector<Scalar>& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? ", " : "") + to_string(seq[i]);
  return out + "]";
}

ojson sequence_json(const std::vector<Scalar>& seq) {
  ojson j = ojson::array();
  for (const auto& v : seq) j.push_back(to_string(v));
  return j;
}

std::string forced_text(const ForcedValue& f) {
  return std::string(1, family_letter(f.family)) + "_" + std::to_string(f.index) + " = " + to_string(f.value);
}

std::string branch_text(const ClassificationResult& r) {
  if (r.branch == Branch::kAllBZero) return "all b zero";
  return "first nonzero b is b_" + std::to_string(r.first_nonzero_b);
}

void emit(const ojson& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int solve_report(const RunConfig& config, const ClassificationResult& r, const OutputOptions& options,
                 std::ostream& out) {
  const int n_max = config.max_arity;
  const bool ok = !r.inconsistent_at && r.verified_up_to == n_max;
  const bool caseB_all_forced = config.case_tag() == CaseTag::kCaseB && r.branch == Branch::kFirstNonzeroB &&
                                n_max - r.first_nonzero_b + 1 >= n_max;
  const bool caseC_free = config.case_tag() == CaseTag::kCaseC && r.branch == Branch::kAllBZero;
  if (options.json) {
    ojson j = config_json(config, "solve");
    j["branch"] = r.branch == Branch::kAllBZero ? "all-b-zero" : "first-nonzero-b";
    if (r.branch == Branch::kFirstNonzeroB) j["first_nonzero_b"] = r.first_nonzero_b;
    ojson forced = ojson::array();
    for (const auto& f : r.forced) {
      forced.push_back({{"name", std::string(1, family_letter(f.family)) + "_" + std::to_string(f.index)},
                        {"value", to_string(f.value)}});
    }
    j["forced"] = forced;
    j["free"] = r.free_parameters;
    for (Family f : kFamilies) j[std::string(1, family_letter(f))] = sequence_json(r.solved.sequence(f));
    j["input_consistent"] = r.input_consistent;
    if (r.inconsistent_at) j["inconsistent_at"] = *r.inconsistent_at;
    j["verified_up_to"] = r.verified_up_to;
    if (!r.printed_formula.empty()) {
      ojson printed = ojson::array();
      for (const auto& p : r.printed_formula) {
        ojson e;
        e["index"] = p.index;
        e["solver"] = to_string(p.solver_value);
        e["printed"] = p.printed_value ? ojson(to_string(*p.printed_value)) : ojson(nullptr);
        e["status"] = p.status == PrintedFormulaCheck::Status::kAgree      ? "agree"
                      : p.status == PrintedFormulaCheck::Status::kDisagree ? "disagree"
                                                                            : "undefined";
        printed.push_back(e);
      }
      j["printed_recursion"] = printed;
    }
    j["passed"] = ok;
    emit(j, out);
    return ok ? kExitPass : kExitFail;
  }

  header(config, out);
  out << "branch: " << branch_text(r) << "\n";
  if (r.inconsistent_at) {
    out << "inconsistent: the constraints J_n = 0 have no solution at n = " << *r.inconsistent_at << "\n";
    return kExitFail;
  }
  if (caseB_all_forced) {
    out << "a_q = c_q = 0 forced for all computed q\n";
  } else if (caseC_free) {
    out << "a free\n";
  } else if (!r.forced.empty()) {
    out << "forced:\n";
    for (const auto& f : r.forced) out << "  " << forced_text(f) << "\n";
  }
  if (!r.free_parameters.empty() && !caseC_free) {
    out << "free:\n";
    for (const auto& f : r.free_parameters) out << "  " << f << "\n";
  }
  for (Family f : kFamilies) {
    out << family_letter(f) << " = " << sequence_text(r.solved.sequence(f)) << "\n";
  }
  if (!r.input_consistent) out << "note: the input constants differ from the forced values\n";
  for (const auto& p : r.printed_formula) {
    out << "printed a-recursion at a_" << p.index << ": solver " << to_string(p.solver_value) << ", printed ";
    switch (p.status) {
      case PrintedFormulaCheck::Status::kAgree: out << to_string(*p.printed_value) << " (agree)\n"; break;
      case PrintedFormulaCheck::Status::kDisagree: out << to_string(*p.printed_value) << " (disagree)\n"; break;
      case PrintedFormulaCheck::Status::kUndefined: out << "undefined (vanishing denominator)\n"; break;
    }
  }
  out << "verified: L_" << r.verified_up_to << " certified by brute force";
  out << (ok ? "\n" : ", short of max_arity\n");
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int cmd_check(const RunConfig& config, const OutputOptions& options, std::ostream& out) {
  const auto space = config.space();
  const SkewOperatorSet ops(space, config.constants);
  const auto reports = certify_Ln(ops, config.max_arity);
  int certified = 0;
  std::optional<std::pair<int, std::pair<BasisWord, VectorValue>>> failure;
  for (const auto& r : reports) {
    if (!failure && r.passed) certified = r.n;
    if (!failure && !r.passed) {
      for (const auto& entry : r.per_word) {
        if (!entry.second.is_zero()) {
          failure.emplace(r.n, entry);
          break;
        }
      }
    }
  }
  const bool ok = !failure;

  if (options.json) {
    ojson j = config_json(config, "check");
    ojson list = ojson::array();
    for (const auto& r : reports) {
      ojson e;
      e["n"] = r.n;
      e["passed"] = r.passed;
      ojson words = ojson::array();
      for (const auto& [w, v] : r.per_word) {
        words.push_back({{"word", w.to_string(space)}, {"value", v.to_string(space)}, {"coefficients", vector_json(v, space)}});
      }
      e["words"] = words;
      list.push_back(e);
    }
    j["reports"] = list;
    j["certified_up_to"] = certified;
    if (failure) j["first_failure"] = failure->first;
    j["passed"] = ok;
    emit(j, out);
    return ok ? kExitPass : kExitFail;
  }

  header(config, out);
  for (const auto& r : reports) {
    out << "n = " << r.n << (r.passed ? "  ok" : "  FAIL") << "\n";
    if (r.per_word.empty()) out << "  (no relevant words)\n";
    for (const auto& [w, v] : r.per_word) {
      out << "  J_" << r.n << "(" << w.to_string(space) << ") = " << v.to_string(space) << "\n";
    }
  }
  if (ok) {
    out << "verdict: L_" << config.max_arity << " certified\n";
  } else {
    out << "verdict: J_" << failure->first << " fails on " << failure->second.first.to_string(space) << " (= "
        << failure->second.second.to_string(space) << "); certified up to L_" << certified << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_solve(const RunConfig& config, const OutputOptions& options, std::ostream& out) {
  const auto& k = config.constants;
  switch (config.case_tag()) {
    case CaseTag::kCaseA: {
      // a is the unknown here; the input a only feeds the consistency note.
      auto result = solve_forced_a_caseA(k.sequence(Family::kB), k.sequence(Family::kC), config.max_arity);
      result.input_consistent = std::all_of(result.forced.begin(), result.forced.end(),
                                            [&](const ForcedValue& f) { return k.a(f.index) == f.value; });
      return solve_report(config, result, options, out);
    }
    case CaseTag::kCaseB: return solve_report(config, classify_caseB(k, config.max_arity), options, out);
    case CaseTag::kCaseC: return solve_report(config, classify_caseC(k, config.max_arity), options, out);
    case CaseTag::kDegenerate: break;
  }
  throw ConfigError("solve supports caseA, caseB and caseC only");
}

int cmd_dglie(const RunConfig& config, const OutputOptions& options, std::ostream& out) {
  if (config.max_arity < 2) throw ConfigError("dglie needs max_arity >= 2");
  const auto space = config.space();
  const SkewOperatorSet ops(space, config.constants);
  if (const auto fail = first_failure(ops, 2)) {
    throw ConfigError("dglie needs an L_2 structure; J_" + std::to_string(*fail) + " does not vanish");
  }
  const auto result = dg_lie_check(ops);
  if (options.json) {
    ojson j = config_json(config, "dglie");
    j["dg_lie"] = result.is_dg_lie;
    ojson values = ojson::array();
    for (const auto& [w, v] : result.values) {
      values.push_back({{"word", w.to_string(space)}, {"value", v.to_string(space)}, {"coefficients", vector_json(v, space)}});
    }
    j["values"] = values;
    if (result.witness) {
      j["witness"] = {{"word", result.witness->first.to_string(space)},
                      {"value", result.witness->second.to_string(space)}};
    }
    j["passed"] = result.is_dg_lie;
    emit(j, out);
    return result.is_dg_lie ? kExitPass : kExitFail;
  }
  header(config, out);
  for (const auto& [w, v] : result.values) {
    out << "  l2∘l2(" << w.to_string(space) << ") = " << v.to_string(space) << "\n";
  }
  if (result.is_dg_lie) {
    out << "verdict: d.g. Lie\n";
  } else {
    out << "verdict: not d.g. Lie, witness l2∘l2(" << result.witness->first.to_string(space)
        << ") = " << result.witness->second.to_string(space) << "\n";
  }
  return result.is_dg_lie ? kExitPass : kExitFail;
}

int cmd_verify_paper(VerifyScale scale, const OutputOptions& options, std::ostream& out) {
  const auto results = run_verification(scale);
  const bool ok = all_passed(results);
  if (options.json) {
    ojson j;
    j["command"] = "verify-paper";
    j["scale"] = scale == VerifyScale::kFull ? "full" : "quick";
    ojson list = ojson::array();
    for (const auto& r : results) {
      list.push_back({{"id", r.id},
                      {"description", r.description},
                      {"status", r.informational ? "info" : (r.passed ? "pass" : "fail")},
                      {"detail", r.detail}});
    }
    j["suites"] = list;
    j["passed"] = ok;
    emit(j, out);
    return ok ? kExitPass : kExitFail;
  }
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.id.size());
  for (const auto& r : results) {
    const char* status = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    out << status << "  " << r.id << std::string(width - r.id.size() + 2, ' ') << r.description << "\n";
    out << "      " << std::string(width + 2, ' ') << r.detail << "\n";
  }
  out << (ok ? "all suites passed\n" : "some suites FAILED\n");
  return ok ? kExitPass : kExitFail;
}

int cmd_slots(int m, int max_arity, const OutputOptions& options, std::ostream& out) {
  if (max_arity < 1) throw ConfigError("max_arity must be at least 1");
  const auto space = GradedSpaceSpec::standard(m);
  const SlotLayout layout(space);
  const auto table = slot_table(m, max_arity);
  auto slot_text = [&](const Slot& s, int n) {
    std::vector<GeneratorIndex> gens;
    for (int g = 0; g < kGeneratorCount; ++g) gens.insert(gens.end(), static_cast<std::size_t>(s.counts[g]), g);
    return "l_" + std::to_string(n) + "(" + BasisWord::from_generators(space, gens).to_string(space) + ") = " +
           family_letter(s.family) + "_" + std::to_string(n) + " " + space.name(s.output);
  };
  const int top = table.max_nonzero_arity();
  if (options.json) {
    ojson j;
    j["command"] = "slots";
    j["m"] = m;
    j["case"] = to_string(case_for_bottom_degree(m));
    j["max_arity"] = max_arity;
    ojson per = ojson::array();
    for (int n = 1; n <= max_arity; ++n) {
      ojson slots = ojson::array();
      for (const auto& s : layout.slots(n)) slots.push_back(slot_text(s, n));
      per.push_back({{"n", n}, {"slots", slots}});
    }
    j["arities"] = per;
    j["max_nonzero_arity"] = top;
    emit(j, out);
    return kExitPass;
  }
  out << "slots for " << space_label(space) << ", n <= " << max_arity << "\n";
  for (int n = 1; n <= std::min(max_arity, std::max(top, 1)); ++n) {
    out << "n = " << n << "\n";
    const auto slots = layout.slots(n);
    if (slots.empty()) out << "  (none)\n";
    for (const auto& s : slots) out << "  " << slot_text(s, n) << "\n";
  }
  if (top < max_arity) out << "no nonzero l_n for n ≥ " << top + 1 << "\n";
  return kExitPass;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of L_n and L_infinity structures on three one-dimensional graded components", "linf"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<int> max_arity;
  bool json = false;
  bool quick = false;
  int m = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--max-arity", max_arity, "override max_arity");
    sub->add_flag("--json", json, "machine-readable output");
  };
  auto* check = app.add_subcommand("check", "certify J_n = 0 for n <= max_arity");
  auto* solve = app.add_subcommand("solve", "solve for the forced structure constants");
  auto* dglie = app.add_subcommand("dglie", "test whether l_2 o l_2 vanishes");
  auto* verify = app.add_subcommand("verify-paper", "run the self-verification suites");
  auto* slots = app.add_subcommand("slots", "list the degree-admissible operator slots");
  for (auto* sub : {check, solve, dglie}) add_common(sub);
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_flag("--quick", quick, "reduced bounds");
  slots->add_option("--m", m, "bottom degree")->required();
  slots->add_option("--max-arity", max_arity, "largest arity listed (default 10)");
  slots->add_flag("--json", json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const OutputOptions options{json};
  try {
    if (*verify) return cmd_verify_paper(quick ? VerifyScale::kQuick : VerifyScale::kFull, options, out);
    if (*slots) return cmd_slots(m, max_arity.value_or(10), options, out);
    const RunConfig config = load_config(config_path, max_arity);
    if (*check) return cmd_check(config, options, out);
    if (*solve) return cmd_solve(config, options, out);
    return cmd_dglie(config, options, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace linf::cli
