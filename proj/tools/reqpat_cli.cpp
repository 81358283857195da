#include <iostream>

#include <CLI11.hpp>

#include "reqpat/commands.hpp"

int main(int argc, char** argv) {
  using namespace reqpat::cli;

  CLI::App app{"Requirement pattern checker: trace checking, drive-mode verification, paraphrase and LTL emission"};
  app.require_subcommand(1);

  std::string suite_path, trace_path, sut_name;
  std::size_t bound = 0;
  bool json = false;

  auto* check = app.add_subcommand("check", "check a suite against a recorded trace");
  check->add_option("--suite", suite_path, "suite file (JSON)")->required();
  check->add_option("--trace", trace_path, "trace file (JSON Lines)")->required();
  check->add_flag("--json", json, "machine-readable report");

  auto* drive = app.add_subcommand("drive", "drive a built-in SUT through the suite");
  drive->add_option("--suite", suite_path, "suite file (JSON)")->required();
  drive->add_option("--sut", sut_name, "SUT name (built-in: clock)")->required();
  drive->add_option("--bound", bound, "maximum ticks per requirement")->required();
  drive->add_flag("--json", json, "machine-readable report");

  auto* render = app.add_subcommand("render", "paraphrase every requirement");
  render->add_option("--suite", suite_path, "suite file (JSON)")->required();

  auto* emit = app.add_subcommand("emit", "print the LTL formula of every requirement");
  emit->add_option("--suite", suite_path, "suite file (JSON)")->required();

  auto* report = app.add_subcommand("report", "markdown traceability table");
  report->add_option("--suite", suite_path, "suite file (JSON)")->required();

  auto* demo = app.add_subcommand("demo", "run the built-in walkthrough for a SUT");
  demo->add_option("sut", sut_name, "SUT name (built-in: clock)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check) return cmd_check(suite_path, trace_path, json, out, err);
  if (*drive) return cmd_drive(suite_path, sut_name, bound, json, out, err);
  if (*render) return cmd_render(suite_path, out, err);
  if (*emit) return cmd_emit(suite_path, out, err);
  if (*report) return cmd_report(suite_path, out, err);
  if (*demo) return cmd_demo(sut_name, out, err);
  return kUsageError;
}
