#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "alglift/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace alglift::cli;

  CLI::App app{"Integrability of abelian transitive Lie algebroids via periods and monodromy"};
  app.name("tool");
  Job job;
  bool pretty = false;
  bool timing = false;
  std::string output;
  app.add_option("command", job.command, "homology | integrability | lift-am | lift-dr | verify | equivariant")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--input", job.input_path, "input JSON file")->required();
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--pretty", pretty, "indent the JSON report");
  app.add_flag("--timing", timing, "include wall-clock timing in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (!output.empty()) job.output_path = output;

  Report report = run(job);
  std::string text = render(report, pretty, timing);
  if (job.output_path) {
    std::ofstream out(*job.output_path, std::ios::binary);
    if (!out) {
      log(LogLevel::Error, "cannot write '" + *job.output_path + "'");
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return exit_code(report);
}
