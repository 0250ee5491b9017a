#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "monideal/cli.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  using namespace monideal;
  cli::Options opts;
  std::string command, input_path, out_path, filter = "none", heights = "mixed";
  std::size_t vars = 0;
  std::vector<std::size_t> n_range{opts.generator.n_min, opts.generator.n_max};
  std::vector<std::size_t> r_range{opts.generator.r_min, opts.generator.r_max};
  std::vector<Exponent> w_range{opts.generator.w_min, opts.generator.w_max};

  CLI::App app{"Exact computations with monomial ideals: symbolic powers, polarization, weightings, "
               "Waldschmidt bounds and Simis checks."};
  app.add_option("COMMAND", command, "Command to run")->required()->check(CLI::IsMember(cli::command_names()));
  app.add_option("INPUT", input_path, "Instance file (default: standard input)");
  app.add_flag("--json", opts.json, "Print the JSON report");
  app.add_option("--vars", vars, "Ring size (default: largest variable index)")->check(CLI::PositiveNumber);
  app.add_option("--max-s", opts.max_s, "Largest symbolic power to check");
  app.add_option("--max-t", opts.max_t, "Largest ordinary power to check");
  app.add_option("-s", opts.s, "Symbolic power for sympow and polarize");
  app.add_option("-t", opts.t, "Power for membership");
  app.add_option("--monomial", opts.monomial, "Monomial for membership, e.g. x1*x2^2");
  app.add_option("--seed", opts.generator.seed, "Generator seed");
  app.add_option("--filter", filter, "Generator filter")
      ->check(CLI::IsMember({"none", "slw-only", "conflict-only", "whiskered", "whisker-conditions",
                             "th-general-hypothesis"}));
  app.add_option("--heights", heights, "Generator height profile")->check(CLI::IsMember({"all-2", "mixed"}));
  app.add_option("--n", n_range, "Generator ring size range")->expected(2);
  app.add_option("--r", r_range, "Generator component count range")->expected(2);
  app.add_option("--w", w_range, "Generator weight range")->expected(2);
  app.add_option("--count", opts.generator.count, "Number of generated instances");
  app.add_option("--command", opts.batch_command, "Command run by batch");
  app.add_option("--threads", opts.threads, "Batch worker threads (default: all cores)");
  app.add_option("--counterexamples", opts.counterexample_path, "File collecting refuted c1 instances");
  app.add_flag("!--no-timings", opts.timings, "Omit timings from reports");
  app.add_option("--out", out_path, "Write the report here instead of standard output");
  CLI11_PARSE(app, argc, argv);

  if (vars) opts.vars = vars;
  try {
    opts.generator.filter = parse_filter(filter);
    opts.generator.heights = parse_height_profile(heights);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  opts.generator.n_min = n_range[0];
  opts.generator.n_max = n_range[1];
  opts.generator.r_min = r_range[0];
  opts.generator.r_max = r_range[1];
  opts.generator.w_min = w_range[0];
  opts.generator.w_max = w_range[1];

  cli::Instance input;
  if (command != "generate") {
    if (input_path.empty() || input_path == "-") {
      input.label = "stdin";
      input.text = read_all(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: invalid_argument: cannot open " << input_path << "\n";
        return 1;
      }
      input.label = input_path;
      input.text = read_all(in);
    }
    if (command != "batch") {
      // A single-instance file may carry a "label: text" line.
      auto lines = cli::parse_instance_lines(input.text);
      if (lines.size() == 1 && lines[0].text != input.text) {
        if (lines[0].label.rfind("line-", 0) != 0) input.label = lines[0].label;
        input.text = lines[0].text;
      }
    }
  }

  const auto report = cli::run_command(command, input, opts);
  const std::string body = opts.json ? report.json.dump(2) + "\n" : report.text;
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: invalid_argument: cannot write " << out_path << "\n";
      return 1;
    }
    out << body;
  }
  if (report.exit_code == 1 && !opts.json && report.json.contains("error"))
    std::cerr << "error: " << report.json["error"]["code"].get<std::string>() << "\n";
  return report.exit_code;
}
