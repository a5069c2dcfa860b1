#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "aksw/error.hpp"

namespace aksw::cli {

namespace {

std::string slug(const Report& r) {
  std::string s = r.command;
  for (const auto& [key, value] : r.config.items()) {
    if (key == "suites" || key == "specialize") continue;
    std::string v = value.is_string() ? value.get<std::string>() : value.dump();
    std::string clean;
    for (char c : v)
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') clean += c;
      else if (c == ',') clean += '_';
    s += "-" + key + clean;
  }
  return s;
}

Outcome emit(const Report& report, const RunConfig& cfg) {
  Outcome o;
  o.exit_code = report.ok() ? kPass : kFail;
  const std::string text = cfg.format == "text" ? report.to_text(cfg.timings) : report.to_json(cfg.timings);
  std::optional<std::filesystem::path> path;
  if (cfg.out) {
    path = *cfg.out;
  } else if (const char* dir = std::getenv("AKSW_REPORT_DIR"); dir && *dir) {
    path = std::filesystem::path(dir) / (slug(report) + (cfg.format == "text" ? ".txt" : ".json"));
  }
  if (!path) {
    o.out = text;
    return o;
  }
  if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
  std::ofstream f(*path, std::ios::binary);
  if (!f) {
    o.exit_code = kUsage;
    o.err = "cannot write " + path->string() + "\n";
    return o;
  }
  f << text;
  o.err = "report written to " + path->string() + "\n";
  return o;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Exact verification of cyclotomic Hecke algebra representations and their Schur-Weyl duality", "aksw"};
  app.set_version_flag("--version", std::string("aksw ") + AKSW_VERSION);
  app.require_subcommand(1);

  int d = 0, n = 0, m = 0;
  std::vector<int> levi;
  std::string preset, out;
  std::uint64_t prime = 0;
  auto* o_d = app.add_option("--d", d, "Number of cyclotomic parameters");
  auto* o_n = app.add_option("--n", n, "Number of braid generators / tensor factors");
  auto* o_m = app.add_option("--m", m, "Rank of gl_m");
  auto* o_levi = app.add_option("--levi", levi, "Levi blocks / row bounds, e.g. 1,1")->delimiter(',');
  app.add_option("--suite", cfg.suites, "Suite(s) for verify: dims, specht, ariki-koike, blob, qgroup, ariki-criterion")
      ->delimiter(',');
  auto* o_preset = app.add_option("--preset", preset, "hecke-a, temperley-lieb, ariki-koike, hecke-b, blob");
  auto* o_out = app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--specialize", cfg.specialize, "Substitution VAR=EXPR, e.g. u2=q2*u1 (repeatable)");
  auto* o_prime = app.add_option("--prime", prime, "Evaluate the criterion modulo this prime");
  app.add_option("--jobs", cfg.jobs, "Parallel suites")->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-dim", cfg.max_dim, "Refuse Schur-Weyl runs with a larger tracked dimension");
  app.add_flag("--timings", cfg.timings, "Include wall-clock durations (reports stop being byte-stable)");

  app.add_subcommand("dims", "Dimensions of simple modules and row quotients")->fallthrough();
  app.add_subcommand("verify", "Run verification suites")->fallthrough();
  app.add_subcommand("schur-weyl", "Verify the Hecke-side action on M (x) V^n")->fallthrough();

  Outcome o;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    int code = app.exit(e, os, es);
    o.out = os.str();
    o.err = es.str();
    o.exit_code = code == 0 ? kPass : kUsage;
    return o;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (*o_d) cfg.d = d;
  if (*o_n) cfg.n = n;
  if (*o_m) cfg.m = m;
  if (*o_levi) cfg.levi = levi;
  if (*o_preset) cfg.preset = preset;
  if (*o_out) cfg.out = out;
  if (*o_prime) cfg.prime = prime;

  try {
    if (cfg.preset && cfg.command != "schur-weyl") throw UsageError("--preset applies to schur-weyl");
    Report r;
    if (cfg.command == "dims") r = cmd_dims(cfg);
    else if (cfg.command == "verify") r = cmd_verify(cfg);
    else r = cmd_schur_weyl(cfg);
    return emit(r, cfg);
  } catch (const UsageError& e) {
    o.exit_code = kUsage;
    o.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const ResourceRefusal& e) {
    o.exit_code = kResource;
    o.err = std::string("refused: ") + e.what() + "\n";
  } catch (const aksw::ParseError& e) {
    o.exit_code = kUsage;
    o.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    o.exit_code = kFail;
    o.err = std::string("error: ") + e.what() + "\n";
  }
  return o;
}

}  // namespace aksw::cli
