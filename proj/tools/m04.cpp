// m04: classification, representations and TQFT convergence for the mapping
// class group of the four-punctured sphere.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "m04/commands.hpp"

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mapping classes of the four-punctured sphere: Nielsen-Thurston type, "
               "quantum representations and TQFT limits"};
  app.require_subcommand(1);

  bool json_flag = true;
  bool quiet = false;
  std::string output_path;
  app.add_flag("--json", json_flag, "JSON output on stdout (default)");
  app.add_option("--output", output_path, "write the result (CSV for converge, JSON otherwise) to this path");
  app.add_flag("--quiet", quiet, "suppress stdout; exit code only");

  std::vector<std::string> word_parts;

  auto* classify = app.add_subcommand("classify", "Nielsen-Thurston class and stretching factor");
  classify->add_option("word", word_parts, "word, e.g. \"w1^-1 w2\"")->required();

  std::string rep_kind;
  m04::RepParams rep_params;
  auto* rep = app.add_subcommand("rep", "representation matrix of a word");
  rep->add_option("kind", rep_kind, "universal | skein | geometric | geometric-tilde | homology | level")->required();
  rep->add_option("word", word_parts)->required();
  rep->add_option("--n", rep_params.n, "SU(n) rank (geometric)");
  rep->add_option("--k", rep_params.k, "level (geometric, level)");

  m04::ConvergeOptions converge_opts;
  bool csv_stdout = false;
  auto* converge = app.add_subcommand("converge", "|Tr| and |lambda_k| of the level-k skein matrices");
  converge->add_option("word", word_parts)->required();
  converge->add_option("--k-min", converge_opts.k_min)->capture_default_str();
  converge->add_option("--k-max", converge_opts.k_max)->capture_default_str();
  converge->add_option("--step", converge_opts.step)->capture_default_str();
  converge->add_flag("--csv", csv_stdout, "print the CSV on stdout instead of the JSON summary");

  auto* traintrack = app.add_subcommand("traintrack", "incidence matrix and Perron-Frobenius data");
  traintrack->add_option("word", word_parts)->required();

  bool corrupt = false;
  std::string only;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_flag("--corrupt", corrupt, "negative control: perturb the w2 generator images");
  auto* only_opt = verify->add_option("--only", only, "comma-separated group prefixes to run");

  std::optional<int> samples;
  auto* reconstruct = app.add_subcommand("reconstruct", "recover the skein matrix from root-of-unity samples");
  reconstruct->add_option("word", word_parts)->required();
  reconstruct->add_option("--samples", samples, "number of sample points (default 2L+1)");

  CLI11_PARSE(app, argc, argv);

  const std::string word = join(word_parts);
  std::ostringstream csv;
  m04::CommandResult result;
  bool json_to_file = !output_path.empty();

  if (classify->parsed()) {
    result = m04::cmd_classify(word);
  } else if (rep->parsed()) {
    result = m04::cmd_rep(rep_kind, word, rep_params);
  } else if (converge->parsed()) {
    if (!output_path.empty()) converge_opts.output_path = output_path;
    if (csv_stdout) converge_opts.csv_stream = &csv;
    json_to_file = false;
    result = m04::cmd_converge(word, converge_opts);
  } else if (traintrack->parsed()) {
    result = m04::cmd_traintrack(word);
  } else if (verify->parsed()) {
    m04::VerifyOptions opts;
    opts.corrupt = corrupt;
    if (only_opt->count() > 0) opts.only = split_commas(only);
    result = m04::cmd_verify(opts);
  } else if (reconstruct->parsed()) {
    result = m04::cmd_reconstruct(word, samples);
  }

  if (!result.ok) {
    for (const auto& d : result.diagnostics) std::cerr << "error: " << d << '\n';
    return result.exit_code();
  }

  const std::string text = result.payload.dump(2) + "\n";
  if (json_to_file) {
    std::ofstream file(output_path);
    if (!file) {
      std::cerr << "error: cannot write " << output_path << '\n';
      return 1;
    }
    file << text;
  } else if (!quiet) {
    std::cout << (csv_stdout && converge->parsed() ? csv.str() : text);
  }
  return result.exit_code();
}
