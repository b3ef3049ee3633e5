// soltower: certificates for lifted loop images on the torus and the
// tower of continua built from them.
//
//   soltower certify --moduli 2,3 --winding 2,3 --range 0..3
//   soltower tower   --moduli 2,3 --winding 1,1 --epsilon 1/2 --depth 2
//   soltower combine --loops "3,0;-2,1"
//   soltower export  --moduli 2,3 --winding 1,1 --stage 1 --out-dir out
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 size guard,
// 4 I/O.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "soltower/reports.hpp"

using namespace soltower;

namespace {

struct RawOptions {
  std::string moduli, winding, range = "0..3", epsilon, loops, out, out_dir;
  unsigned long depth = 2;
  std::optional<unsigned long> n1, stage;
  std::optional<std::uint64_t> size_guard;
  std::size_t samples = 20;
  bool timing = false;
};

RunConfig to_config(const std::string& command, const RawOptions& raw) {
  RunConfig c;
  if (!raw.moduli.empty()) c.moduli = parse_integer_list(raw.moduli);
  if (!raw.winding.empty()) c.winding = parse_integer_list(raw.winding);
  if (command == "certify") {
    if (c.moduli.empty() || c.winding.empty())
      throw Error(Errc::InvalidInput, "certify needs --moduli and --winding");
    std::tie(c.range_from, c.range_to) = parse_range(raw.range);
  }
  if (command == "tower" && (c.moduli.empty() || c.winding.empty()))
    throw Error(Errc::InvalidInput, "tower needs --moduli and --winding");
  if (command == "export" && (raw.stage || !raw.epsilon.empty()) &&
      (c.moduli.empty() || c.winding.empty()))
    throw Error(Errc::InvalidInput, "export needs --moduli and --winding");
  if (command == "combine") c.loops = parse_loop_family(raw.loops);
  if (!raw.epsilon.empty()) c.epsilon = raw.epsilon;
  c.depth = raw.depth;
  c.n1 = raw.n1;
  c.stage = raw.stage;
  c.samples = raw.samples;
  c.timing = raw.timing;
  c.out_dir = raw.out_dir.empty() ? "." : raw.out_dir;
  if (auto env = size_guard_from_env()) c.size_guard = *env;
  if (raw.size_guard) {
    if (*raw.size_guard < 1) throw Error(Errc::InvalidInput, "--size-guard must be positive");
    c.size_guard = *raw.size_guard;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for lifted torus loops and solenoid towers"};
  app.require_subcommand(1);
  RawOptions raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", raw.out, "Write the report here instead of stdout");
    sub->add_option("--size-guard", raw.size_guard,
                    "Bound on swept torus points (env SOLTOWER_SIZE_GUARD)");
    sub->add_flag("--timing", raw.timing, "Add elapsed time to the report");
  };
  auto torus = [&](CLI::App* sub) {
    sub->add_option("--moduli", raw.moduli, "Pairwise coprime moduli, e.g. 2,3");
    sub->add_option("--winding", raw.winding, "Winding vector, e.g. 1,1");
  };
  auto tower_opts = [&](CLI::App* sub) {
    sub->add_option("--epsilon", raw.epsilon, "Target epsilon as p/q");
    sub->add_option("--depth", raw.depth, "Preimage levels beyond N0 + N1");
    sub->add_option("--n1", raw.n1, "Override N1");
    sub->add_option("--samples", raw.samples, "Coherent points checked against epsilon");
  };

  CLI::App* certify = app.add_subcommand("certify", "Hitting, preimage and connectedness checks");
  torus(certify);
  certify->add_option("--range", raw.range, "Levels a..b");
  common(certify);

  CLI::App* tower = app.add_subcommand("tower", "Build and verify the tower of continua");
  torus(tower);
  tower_opts(tower);
  common(tower);

  CLI::App* combine = app.add_subcommand("combine", "Combine loops into an all-nonzero winding");
  combine->add_option("--loops", raw.loops, "Winding vectors separated by ';'")->required();
  common(combine);

  CLI::App* exporter = app.add_subcommand("export", "Write segment sets as CSV");
  torus(exporter);
  exporter->add_option("--stage", raw.stage, "Export Im gamma^(n)");
  tower_opts(exporter);
  exporter->add_option("--out-dir", raw.out_dir, "Directory for the CSV files");
  common(exporter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  CommandResult result;
  try {
    const RunConfig config = to_config(command, raw);
    if (command == "certify") result = cmd_certify(config);
    else if (command == "tower") result = cmd_tower(config);
    else if (command == "combine") result = cmd_combine(config);
    else result = cmd_export(config, !raw.epsilon.empty());
  } catch (const Error& e) {
    result = error_result(command, e);
    std::cerr << "soltower: " << e.what() << '\n';
  }

  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << '\n';
  const std::string text = render(result.report);
  if (raw.out.empty()) {
    std::cout << text;
  } else {
    try {
      write_atomically(raw.out, text);
    } catch (const Error& e) {
      std::cerr << "soltower: " << e.what() << '\n';
      return kExitIo;
    }
  }
  return result.exit_code;
}
