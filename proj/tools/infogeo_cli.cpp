// Command-line front end over the C API: verify, tensor, report.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "infogeo/infogeo.h"

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> point;
};

int exit_code(infogeo_status s) {
  if (s == INFOGEO_OK) return 0;
  if (s == INFOGEO_VERIFICATION_FAILED) return 1;
  return 2;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration")->required();
  cmd->add_option("--seed", o.seed, "random seed (overrides the configuration)");
  cmd->add_option("--out", o.out, "output file (default: standard output)");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

int run(const std::string& command, const Options& o) {
  char err[1024] = {0};
  infogeo_session* s = nullptr;
  infogeo_status st = infogeo_session_create_from_file(o.config.c_str(), &s, err, sizeof err);
  if (st != INFOGEO_OK) {
    std::fprintf(stderr, "error: %s: %s\n", infogeo_status_string(st), err);
    return 2;
  }
  if (o.seed) infogeo_set_seed(s, *o.seed);
  if (o.format) infogeo_set_format(s, *o.format == "csv" ? INFOGEO_FORMAT_CSV : INFOGEO_FORMAT_JSON);
  if (o.out) infogeo_set_output_path(s, o.out->c_str());

  const char* text = nullptr;
  size_t len = 0;
  if (command == "verify")
    st = infogeo_verify(s, &text, &len);
  else if (command == "report")
    st = infogeo_report(s, &text, &len);
  else
    st = infogeo_tensor(s, o.point ? o.point->c_str() : nullptr, &text, &len);

  if (text != nullptr && (st == INFOGEO_OK || st == INFOGEO_VERIFICATION_FAILED)) {
    if (o.out)
      std::fprintf(stderr, "wrote %s\n", o.out->c_str());
    else
      std::fwrite(text, 1, len, stdout);
  }
  if (command != "tensor" && (st == INFOGEO_OK || st == INFOGEO_VERIFICATION_FAILED))
    std::fprintf(stderr, "wall time: %.3f s\n", infogeo_last_wall_time(s));
  if (st != INFOGEO_OK) std::fprintf(stderr, "%s: %s\n", infogeo_status_string(st), infogeo_last_error(s));
  infogeo_session_destroy(s);
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metrics and pre-symplectic forms extracted from divergence functions"};
  app.require_subcommand(1);
  Options o;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite for the configured manifold");
  CLI::App* tensor = app.add_subcommand("tensor", "dump omega_F, g_F and their diagonal pullbacks at one point");
  CLI::App* report = app.add_subcommand("report", "write one row per point per check");
  add_common(verify, o);
  add_common(tensor, o);
  add_common(report, o);
  tensor->add_option("--point", o.point, "point as JSON (default: first configured point)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command = "verify";
  if (tensor->parsed()) command = "tensor";
  if (report->parsed()) command = "report";
  return run(command, o);
}
