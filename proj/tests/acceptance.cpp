#include <iostream>

#include <CLI11.hpp>

#include "cylspec/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one line per criterion"};
  cylspec::VerifyOptions opts;
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--seed", opts.seed, "Seed for randomized criteria");
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& r : cylspec::run_acceptance(opts, only)) {
    std::cout << cylspec::format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
