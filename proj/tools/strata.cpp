#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "strata/decomposition.hpp"
#include "strata/errors.hpp"
#include "strata/oracle.hpp"
#include "strata/recipe.hpp"
#include "strata/report.hpp"

namespace {

struct CommonArgs {
  bool verify = false;
  int max_elems = 64;
  std::string focus;
  std::string dot_file;
  std::string json_file;
  CLI::Option* focus_opt = nullptr;
  CLI::Option* dot_opt = nullptr;
  CLI::Option* json_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_flag("--verify", args.verify,
                "recompute with the brute-force oracle and compare");
  args.focus_opt = cmd->add_option(
      "--focus", args.focus, "detail only the component containing this element");
  args.dot_opt = cmd->add_option("--dot", args.dot_file,
                                 "write the component order as Graphviz (- for stdout)");
  args.json_opt = cmd->add_option("--json", args.json_file,
                                  "write the full report as JSON (- for stdout)");
  cmd->add_option("--max-elems", args.max_elems,
                  "cap on elements listed per base or layer")
      ->default_val(64);
}

strata::report::RunOptions to_options(const CommonArgs& args) {
  strata::report::RunOptions opts;
  opts.verify = args.verify;
  opts.max_elems = args.max_elems;
  if (args.focus_opt->count() > 0) opts.focus = args.focus;
  return opts;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) strata::fail(strata::Errc::InvalidParameter, "cannot open " + path);
  out << text;
  if (!out.flush())
    strata::fail(strata::Errc::InvalidParameter, "cannot write " + path);
}

int emit(const strata::report::ReportDocument& doc, const CommonArgs& args) {
  bool dot = args.dot_opt->count() > 0;
  bool json = args.json_opt->count() > 0;
  if (dot && json && args.dot_file == "-" && args.json_file == "-")
    strata::fail(strata::Errc::InvalidParameter,
                 "at most one of --dot and --json may write to stdout");
  bool stdout_taken =
      (dot && args.dot_file == "-") || (json && args.json_file == "-");
  if (!stdout_taken) std::cout << strata::report::render_text(doc);
  if (dot) write_output(args.dot_file, strata::report::render_dot(doc));
  if (json) write_output(args.json_file, strata::report::to_json(doc));
  if (doc.verified && !doc.match) {
    std::cerr << "error: recipe and oracle decompositions disagree\n";
    return 4;
  }
  return 0;
}

int run_selftest(long long limit) {
  using namespace strata;
  if (limit < 2) fail(Errc::InvalidParameter, "selftest limit must be at least 2");
  for (long long n = 2; n <= limit; ++n) {
    FiniteRing r = FiniteRing::integers_mod(n);
    recipe::Factorization fact = recipe::Factorization::for_ring(r);
    Decomposition rec = recipe::decompose(fact);
    Decomposition ora = oracle::decompose(r);
    if (!same_decomposition(rec, ora)) {
      std::cerr << "error: selftest mismatch at n=" << n << "\n";
      return 4;
    }
  }
  std::cout << "selftest passed: recipe matches oracle for n = 2.." << limit << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratified decomposition of finite ring multiplication"};
  app.require_subcommand(1);

  long long zn_n = 0;
  CommonArgs zn_args;
  CLI::App* zn_cmd = app.add_subcommand("zn", "decompose the integers mod n");
  zn_cmd->add_option("n", zn_n, "modulus, 1 <= n <= 10^7")->required();
  add_common(zn_cmd, zn_args);

  long long quad_d = 0;
  std::string quad_ideal;
  CommonArgs quad_args;
  CLI::App* quad_cmd =
      app.add_subcommand("quad", "decompose a quotient of Z[w], w = sqrt(d)");
  quad_cmd->add_option("d", quad_d, "squarefree d != 0,1 with d % 4 != 1")->required();
  quad_cmd
      ->add_option("--ideal", quad_ideal,
                   "ideal generators, e.g. \"10\" or \"10, 5+5*w\" or \"3*w\"")
      ->required();
  add_common(quad_cmd, quad_args);

  long long depth_x = 0;
  CLI::App* depth_cmd =
      app.add_subcommand("depth", "depth of an integer under multiplication");
  depth_cmd->add_option("x", depth_x, "integer with |x| >= 2")->required();

  long long selftest_limit = 300;
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "sweep small moduli and compare recipe against oracle");
  selftest_cmd->add_option("limit", selftest_limit, "largest modulus to check")
      ->default_val(300);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(zn_cmd)) {
      auto doc = strata::report::run_zn(zn_n, to_options(zn_args));
      return emit(doc, zn_args);
    }
    if (app.got_subcommand(quad_cmd)) {
      auto doc = strata::report::run_quad(quad_d, quad_ideal, to_options(quad_args));
      return emit(doc, quad_args);
    }
    if (app.got_subcommand(depth_cmd)) {
      std::cout << strata::recipe::integer_depth(depth_x) << "\n";
      return 0;
    }
    if (app.got_subcommand(selftest_cmd)) return run_selftest(selftest_limit);
  } catch (const strata::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return strata::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
