#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mltl/benchgen.hpp"
#include "mltl/errors.hpp"
#include "mltl/parser.hpp"
#include "mltl/progression.hpp"
#include "mltl/semantics.hpp"
#include "mltl/transforms.hpp"

#include "selftest.hpp"

namespace {

// Exit codes: 0 ok, 1 parse/usage, 2 ill-formed formula, 3 budget
// exceeded, 4 internal invariant violation.
enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kIllFormed = 2,
  kBudget = 3,
  kInternal = 4,
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mltl::FormulaPtr parse_or_die(const std::string &text) {
  return mltl::parse_formula(text);
}

int run(int argc, char **argv) {
  CLI::App app{"Mission-time LTL: evaluation, progression, NNF, "
               "equivalence checking, and benchmark generation"};
  app.require_subcommand(1);

  std::string formula_text;
  std::string formula2_text;
  std::string trace_path;
  bool steps = false;
  std::uint64_t max_alpha = 4;
  std::uint64_t max_len = 12;

  auto *check = app.add_subcommand("check", "Parse and check intervals");
  check->add_option("formula", formula_text)->required();

  auto *eval = app.add_subcommand("eval", "Evaluate a formula on a trace");
  eval->add_option("formula", formula_text)->required();
  eval->add_option("trace-file", trace_path)->required();

  auto *prog = app.add_subcommand("progress", "Progress a formula over a trace");
  prog->add_option("formula", formula_text)->required();
  prog->add_option("trace-file", trace_path)->required();
  prog->add_flag("--steps", steps, "Print one residual per consumed state");

  auto *classify = app.add_subcommand("classify", "Progress and classify the residual");
  classify->add_option("formula", formula_text)->required();
  classify->add_option("trace-file", trace_path)->required();
  classify->add_option("--max-alpha", max_alpha, "Equivalence alphabet budget");
  classify->add_option("--max-len", max_len, "Equivalence length budget");

  auto *nnf = app.add_subcommand("nnf", "Convert to negation normal form");
  nnf->add_option("formula", formula_text)->required();

  auto *complen_cmd = app.add_subcommand("complen", "Print the computation length");
  complen_cmd->add_option("formula", formula_text)->required();

  auto *equiv = app.add_subcommand("equiv", "Decide semantic equivalence");
  equiv->add_option("formula1", formula_text)->required();
  equiv->add_option("formula2", formula2_text)->required();
  equiv->add_option("--max-alpha", max_alpha, "Equivalence alphabet budget");
  equiv->add_option("--max-len", max_len, "Equivalence length budget");

  mltl::GenConfig cfg;
  std::string policy = "at";
  std::string out_path;
  unsigned threads = 1;
  auto *gen_cmd = app.add_subcommand("gen", "Generate labeled benchmark records");
  gen_cmd->add_option("--seed", cfg.seed)->required();
  gen_cmd->add_option("--cases", cfg.num_cases)->required();
  gen_cmd->add_option("--depth", cfg.max_depth);
  gen_cmd->add_option("--bound", cfg.max_bound);
  gen_cmd->add_option("--props", cfg.num_props);
  gen_cmd->add_option("--policy", policy, "at | above | below");
  gen_cmd->add_option("--extra", cfg.above_extra, "Extra states for policy=above");
  gen_cmd->add_option("--threads", threads);
  gen_cmd->add_option("--out", out_path)->required();

  mltl::selftest::Options st;
  auto *selftest = app.add_subcommand("selftest", "Run the randomized theorem suites");
  selftest->add_option("--cases", st.cases);
  selftest->add_option("--seed", st.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (check->parsed()) {
    const auto f = parse_or_die(formula_text);
    if (mltl::intervals_welldef(*f)) {
      std::cout << "well-formed\n";
      return kOk;
    }
    std::cout << "ill-formed\n";
    return kIllFormed;
  }
  if (eval->parsed()) {
    const auto f = parse_or_die(formula_text);
    const auto t = mltl::parse_trace(read_file(trace_path));
    std::cout << (mltl::evaluate(t, *f) ? "true" : "false") << "\n";
    return kOk;
  }
  if (prog->parsed()) {
    const auto f = parse_or_die(formula_text);
    const auto t = mltl::parse_trace(read_file(trace_path));
    if (steps) {
      mltl::FormulaPtr cur = f;
      for (const mltl::State &s : t) {
        cur = mltl::progress_step(cur, s);
        std::cout << mltl::print_formula(*cur) << "\n";
      }
      if (t.empty()) {
        std::cout << mltl::print_formula(*cur) << "\n";
      }
    } else {
      std::cout << mltl::print_formula(*mltl::progress(f, t)) << "\n";
    }
    return kOk;
  }
  if (classify->parsed()) {
    const auto f = parse_or_die(formula_text);
    const auto t = mltl::parse_trace(read_file(trace_path));
    const mltl::Verdict v =
        mltl::classify(f, t, mltl::EquivBudget{max_alpha, max_len});
    if (v.resolved_true()) {
      std::cout << "TRUE\n";
    } else if (v.resolved_false()) {
      std::cout << "FALSE\n";
    } else {
      std::cout << "RESIDUAL " << mltl::print_formula(*v.residual) << "\n";
    }
    return kOk;
  }
  if (nnf->parsed()) {
    const auto f = parse_or_die(formula_text);
    std::cout << mltl::print_formula(*mltl::convert_nnf(f)) << "\n";
    return kOk;
  }
  if (complen_cmd->parsed()) {
    const auto f = parse_or_die(formula_text);
    std::cout << mltl::complen(*f) << "\n";
    return kOk;
  }
  if (equiv->parsed()) {
    const auto f = parse_or_die(formula_text);
    const auto g = parse_or_die(formula2_text);
    const auto witness =
        mltl::equiv_witness(*f, *g, mltl::EquivBudget{max_alpha, max_len});
    if (!witness) {
      std::cout << "equivalent\n";
    } else {
      std::cout << "inequivalent\n" << mltl::print_trace(*witness);
    }
    return kOk;
  }
  if (gen_cmd->parsed()) {
    if (policy == "at") {
      cfg.policy = mltl::TraceLenPolicy::AtComplen;
    } else if (policy == "above") {
      cfg.policy = mltl::TraceLenPolicy::AboveComplen;
    } else if (policy == "below") {
      cfg.policy = mltl::TraceLenPolicy::BelowComplen;
    } else {
      std::cerr << "unknown policy: " << policy << "\n";
      return kUsage;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return kUsage;
    }
    mltl::write_benchmarks(cfg, out, threads);
    return kOk;
  }
  if (selftest->parsed()) {
    return mltl::selftest::run(st, std::cout) == 0 ? kOk : kInternal;
  }
  return kUsage;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const mltl::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const mltl::IllFormedInterval &e) {
    std::cerr << "ill-formed formula: " << e.what() << "\n";
    return kIllFormed;
  } catch (const mltl::BudgetExceeded &e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const mltl::DichotomyViolation &e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const mltl::CrossCheckFailed &e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
