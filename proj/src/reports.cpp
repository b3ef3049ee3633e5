#include "soltower/reports.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "soltower/hitting.hpp"
#include "soltower/lifting.hpp"
#include "soltower/loop_designer.hpp"
#include "soltower/segment_set.hpp"
#include "soltower/tower.hpp"

namespace soltower {

namespace {

using Clock = std::chrono::steady_clock;

Report strings(const std::vector<Integer>& values) {
  Report out = Report::array();
  for (const Integer& v : values) out.push_back(to_string(v));
  return out;
}

Report strings(const WindingVector& s) { return strings(s.values()); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

unsigned long parse_count(const std::string& text) {
  const Integer v = parse_integer(trim(text));
  if (v < 0) throw Error(Errc::InvalidInput, "expected a nonnegative integer, got '" + text + "'");
  return static_cast<unsigned long>(to_u64(v));
}

Report header(const std::string& command) {
  Report r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  return r;
}

void add_timing(Report& r, const RunConfig& config, Clock::time_point start) {
  if (!config.timing) return;
  const auto us =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  r["timing"] = {{"elapsed_us", std::to_string(us)}};
}

Report moduli_input(const RunConfig& config) {
  Report in;
  in["moduli"] = strings(config.moduli);
  in["winding"] = strings(config.winding);
  return in;
}

Report madic_level_json(const WindingVector& s, const Moduli& moduli) {
  Report out;
  try {
    const MAdicLevel p = madic_level_details(s, moduli);
    out["defined"] = true;
    out["alpha"] = std::to_string(p.alpha);
    out["level"] = to_string(p.level);
    Report parts = Report::array();
    for (const MAdicDecomposition& d : p.parts)
      parts.push_back({{"alpha", std::to_string(d.alpha)}, {"q", to_string(d.q)}});
    out["decomposition"] = std::move(parts);
  } catch (const Error& e) {
    if (e.code() != Errc::NoDecomposition) throw;
    out["defined"] = false;
    out["note"] = e.what();
  }
  return out;
}

Report certificate_json(const HittingCertificate& cert, const WindingVector& s,
                        const Moduli& moduli) {
  Report out;
  if (cert.bookkeeping) {
    const RecipeBookkeeping& b = *cert.bookkeeping;
    Report book;
    Report alphas = Report::array(), betas = Report::array();
    for (unsigned long a : b.alphas) alphas.push_back(std::to_string(a));
    for (unsigned long a : b.betas) betas.push_back(std::to_string(a));
    book["alphas"] = std::move(alphas);
    book["qs"] = strings(b.qs);
    book["betas"] = std::move(betas);
    book["u"] = to_string(b.u);
    book["u_parts"] = strings(b.u_parts);
    out["recipe"] = std::move(book);
  } else {
    out["recipe"] = nullptr;
  }
  Report witnesses = Report::array();
  for (const HittingWitness& w : cert.witnesses) {
    Report item;
    item["target"] = strings(w.target);
    item["k"] = to_string(w.k);
    item["route"] = route_name(w.route);
    if (w.x) item["x"] = to_string(*w.x);
    item["verified"] = verify_witness(s, moduli, cert.n, w);
    witnesses.push_back(std::move(item));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

SizeGuard guard_of(const RunConfig& config) { return SizeGuard{config.size_guard}; }

Report params_json(const TowerParams& p) {
  Report out;
  out["epsilon"] = to_string(p.epsilon);
  out["epsilon_clamped"] = p.epsilon_clamped;
  out["N0"] = std::to_string(p.N0);
  out["delta"] = to_string(p.delta);
  out["N1"] = std::to_string(p.N1);
  out["depth"] = std::to_string(p.depth);
  out["paper_level"] = p.paper_level ? Report(to_string(*p.paper_level)) : Report(nullptr);
  out["minimal_level"] = std::to_string(p.minimal_level);
  return out;
}

Report optional_flag(const std::optional<bool>& flag) {
  return flag ? Report(*flag) : Report(nullptr);
}

struct TowerSetup {
  Moduli moduli;
  WindingVector s;
  TowerParams params;
  std::vector<std::string> warnings;
};

TowerSetup tower_setup(const RunConfig& config) {
  Moduli moduli(config.moduli);
  WindingVector s(config.winding);
  const Rational epsilon = parse_rational(config.epsilon);
  TowerParams params = choose_params(epsilon, moduli, s, config.depth);
  std::vector<std::string> warnings;
  if (params.epsilon_clamped)
    warnings.push_back("epsilon " + to_string(epsilon) + " clamped to 1/1");
  if (config.n1) {
    warnings.push_back("N1 set to " + std::to_string(*config.n1) + " (certificate level " +
                       std::to_string(params.N1) + ")");
    params.N1 = *config.n1;
  }
  return {std::move(moduli), std::move(s), std::move(params), std::move(warnings)};
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::SizeGuardExceeded: return kExitSizeGuard;
    case Errc::Io: return kExitIo;
    case Errc::ConditionFails:
    case Errc::MembershipFails:
    case Errc::NoPreimageInLevel: return kExitVerificationFailure;
    default: return kExitInvalidInput;
  }
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  if (trim(text).empty()) throw Error(Errc::InvalidInput, "empty integer list");
  std::vector<Integer> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_integer(trim(item)));
  return out;
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned long n = parse_count(text);
    return {n, n};
  }
  const unsigned long a = parse_count(text.substr(0, dots));
  const unsigned long b = parse_count(text.substr(dots + 2));
  if (a > b) throw Error(Errc::InvalidInput, "empty range '" + text + "'");
  return {a, b};
}

std::vector<std::vector<Integer>> parse_loop_family(const std::string& text) {
  std::vector<std::vector<Integer>> out;
  for (const std::string& item : split(text, ';')) out.push_back(parse_integer_list(item));
  if (out.empty()) throw Error(Errc::InvalidInput, "empty loop family");
  return out;
}

std::optional<std::uint64_t> size_guard_from_env() {
  const char* raw = std::getenv("SOLTOWER_SIZE_GUARD");
  if (!raw || !*raw) return std::nullopt;
  const Integer v = parse_integer(raw);
  if (v < 1) throw Error(Errc::InvalidInput, "SOLTOWER_SIZE_GUARD must be positive");
  return to_u64(v);
}

CommandResult cmd_certify(const RunConfig& config) {
  const auto start = Clock::now();
  const Moduli moduli(config.moduli);
  const WindingVector s(config.winding);
  if (s.size() != moduli.size())
    throw Error(Errc::DimensionMismatch, "winding has " + std::to_string(s.size()) +
                                             " entries for " + std::to_string(moduli.size()) +
                                             " moduli");
  if (!s.admissible()) throw Error(Errc::PreconditionViolated, "winding vector has a zero entry");
  if (config.range_from > config.range_to) throw Error(Errc::InvalidInput, "empty range");
  const SizeGuard guard = guard_of(config);
  const Integer largest = moduli.product_power(config.range_to + 1);
  if (largest > Integer(static_cast<unsigned long>(guard.limit)))
    throw Error(Errc::SizeGuardExceeded, "prod m_i^(n+1) = " + largest.get_str() +
                                             " exceeds size guard " + std::to_string(guard.limit));

  CommandResult out{header("certify"), kExitOk, {}};
  Report in = moduli_input(config);
  in["range"] = {{"from", std::to_string(config.range_from)},
                 {"to", std::to_string(config.range_to)}};
  in["size_guard"] = std::to_string(config.size_guard);
  out.report["inputs"] = std::move(in);

  const unsigned long minimal = minimal_level(s, moduli, level_search_bound(s));
  Report results;
  results["paper_level"] = madic_level_json(s, moduli);
  results["minimal_level"] = std::to_string(minimal);
  const std::size_t targets = moduli.product_power(1).get_ui();

  bool agreement = true, consistent = true;
  Report levels = Report::array();
  for (unsigned long n = config.range_from; n <= config.range_to; ++n) {
    const bool condition = level_condition(s, moduli, n);
    const std::size_t hits = hit_count(s, moduli, n, guard);
    const PreimageComparison cmp = compare_preimage(PLLoop::straight(s), moduli, n, guard);
    const ConnectednessVerdict conn = preimage_connected_check(s, moduli, n, guard);
    const bool hitting = hits == targets;

    Report level;
    level["n"] = std::to_string(n);
    level["gcd_condition"] = condition;
    level["hitting"] = hitting;
    level["hits"] = std::to_string(hits);
    level["targets"] = std::to_string(targets);
    level["preimage_equal"] = cmp.equal;
    level["preimage_contains_next"] = cmp.contained;
    level["components"] = std::to_string(conn.components);
    level["connected"] = conn.connected;
    level["certificate"] = condition
                               ? certificate_json(certify_hitting(s, moduli, n), s, moduli)
                               : Report(nullptr);

    bool ok = hitting == condition && cmp.contained;
    if (condition) ok = ok && cmp.equal && conn.connected;
    if (condition)
      for (const auto& w : level["certificate"]["witnesses"]) ok = ok && w["verified"].get<bool>();
    agreement = agreement && hitting == condition;
    consistent = consistent && ok;
    level["consistent"] = ok;
    levels.push_back(std::move(level));
  }
  results["levels"] = std::move(levels);
  results["criteria_agree"] = agreement;
  results["all_consistent"] = consistent;
  out.report["results"] = std::move(results);
  add_timing(out.report, config, start);
  if (!consistent) out.exit_code = kExitVerificationFailure;
  return out;
}

CommandResult cmd_tower(const RunConfig& config) {
  const auto start = Clock::now();
  TowerSetup setup = tower_setup(config);
  const SizeGuard guard = guard_of(config);

  CommandResult out{header("tower"), kExitOk, setup.warnings};
  Report in = moduli_input(config);
  in["epsilon"] = config.epsilon;
  in["depth"] = std::to_string(config.depth);
  in["n1"] = config.n1 ? Report(std::to_string(*config.n1)) : Report(nullptr);
  in["samples"] = std::to_string(config.samples);
  in["size_guard"] = std::to_string(config.size_guard);
  out.report["inputs"] = std::move(in);

  const Tower tower = build_tower(PLLoop::straight(setup.s), setup.params, setup.moduli, guard);
  const TowerReport verdict = verify_tower(tower, guard);

  Report results;
  results["params"] = params_json(setup.params);
  Report notes = Report::array();
  for (const std::string& w : setup.warnings) notes.push_back(w);
  results["notes"] = std::move(notes);
  Report levels = Report::array();
  for (const LevelReport& l : verdict.levels) {
    Report level;
    level["n"] = std::to_string(l.n);
    level["kind"] = level_kind_name(l.kind);
    level["pieces"] = std::to_string(l.pieces);
    level["points"] = std::to_string(l.points);
    level["components"] = std::to_string(l.components);
    level["connected"] = l.connected;
    level["contains_base"] = l.contains_base;
    level["bonding_contained"] = optional_flag(l.bonding_contained);
    level["bonding_equal"] = optional_flag(l.bonding_equal);
    level["recipe_identity"] = optional_flag(l.recipe_identity);
    levels.push_back(std::move(level));
  }
  results["levels"] = std::move(levels);

  Report eps;
  bool eps_ok = false;
  try {
    const EpsilonCheck check = epsilon_bound_check(tower, tower_base_points(tower),
                                                   tower_candidates(tower, config.samples));
    eps_ok = check.ok;
    eps["ok"] = check.ok;
    eps["candidates"] = std::to_string(check.candidates);
    eps["matched"] = std::to_string(check.matched);
    eps["max_level_distance"] = to_string(check.max_level_distance);
    eps["max_distance"] = to_string(check.max_distance);
    eps["max_upper_bound"] = to_string(check.max_upper_bound);
  } catch (const Error& e) {
    if (exit_code_for(e.code()) != kExitVerificationFailure) throw;
    eps["ok"] = false;
    eps["error"] = e.what();
  }
  results["epsilon_check"] = std::move(eps);
  results["n1_exceeds_n0"] = verdict.n1_exceeds_n0;
  results["all_ok"] = verdict.all_ok && eps_ok;
  out.report["results"] = std::move(results);
  add_timing(out.report, config, start);
  if (!(verdict.all_ok && eps_ok)) out.exit_code = kExitVerificationFailure;
  return out;
}

CommandResult cmd_combine(const RunConfig& config) {
  const auto start = Clock::now();
  std::vector<WindingVector> loops;
  for (const auto& l : config.loops) loops.emplace_back(l);
  const LoopDesign design = design_all_nonzero(loops);

  CommandResult out{header("combine"), kExitOk, {}};
  Report in;
  Report family = Report::array();
  for (const WindingVector& l : loops) family.push_back(strings(l));
  in["loops"] = std::move(family);
  out.report["inputs"] = std::move(in);

  Report results;
  Report steps = Report::array();
  for (const CombineStep& step : design.steps) {
    Report item;
    item["stage"] = std::to_string(step.stage);
    item["l"] = to_string(step.l);
    item["before"] = strings(step.before);
    item["injected"] = strings(step.injected);
    item["after"] = strings(step.after);
    steps.push_back(std::move(item));
  }
  results["steps"] = std::move(steps);
  results["coefficients"] = strings(design.coefficients);
  results["final"] = strings(design.final_winding);
  results["all_nonzero"] = design.final_winding.admissible();
  results["concatenation_winding"] = strings(winding(design.concatenation));
  results["concatenation_segments"] = std::to_string(design.concatenation.segment_count());
  out.report["results"] = std::move(results);
  add_timing(out.report, config, start);
  if (!design.final_winding.admissible() || winding(design.concatenation) != design.final_winding)
    out.exit_code = kExitVerificationFailure;
  return out;
}

CommandResult cmd_export(const RunConfig& config, bool tower_requested) {
  const auto start = Clock::now();
  CommandResult out{header("export"), kExitOk, {}};
  Report in;
  in["out_dir"] = config.out_dir.string();
  in["stage"] = config.stage ? Report(std::to_string(*config.stage)) : Report(nullptr);
  in["tower"] = tower_requested;
  if (config.stage || tower_requested) {
    Report m = moduli_input(config);
    for (auto& [k, v] : m.items()) in[k] = v;
  }
  out.report["inputs"] = std::move(in);

  std::vector<std::pair<std::string, SegmentSet>> files;
  if (config.stage) {
    const Moduli moduli(config.moduli);
    const WindingVector s(config.winding);
    if (s.size() != moduli.size())
      throw Error(Errc::DimensionMismatch, "winding dimension differs from moduli");
    const Integer period = image_period(s, *config.stage, moduli);
    if (period > Integer(static_cast<unsigned long>(config.size_guard)))
      throw Error(Errc::SizeGuardExceeded, "image period " + period.get_str() +
                                               " exceeds size guard " +
                                               std::to_string(config.size_guard));
    files.emplace_back("image_n" + std::to_string(*config.stage) + ".csv",
                       image_set(PLLoop::straight(s), *config.stage, moduli));
  }
  if (tower_requested) {
    TowerSetup setup = tower_setup(config);
    out.warnings = setup.warnings;
    Tower tower = build_tower(PLLoop::straight(setup.s), setup.params, setup.moduli,
                              guard_of(config));
    const std::size_t width = std::to_string(tower.size()).size();
    for (std::size_t n = 1; n <= tower.size(); ++n) {
      std::string index = std::to_string(n);
      index.insert(0, width - index.size(), '0');
      files.emplace_back("level_" + index + ".csv", std::move(tower.levels[n - 1]));
    }
  }

  if (!files.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec)
      throw Error(Errc::Io, "cannot create " + config.out_dir.string() + ": " + ec.message());
  }
  Report written = Report::array();
  for (const auto& [name, set] : files) {
    write_atomically(config.out_dir / name, to_csv(set));
    written.push_back({{"file", name},
                       {"pieces", std::to_string(set.pieces().size())},
                       {"points", std::to_string(set.points().size())}});
  }
  out.report["results"] = {{"files", std::move(written)}};
  add_timing(out.report, config, start);
  return out;
}

CommandResult error_result(const std::string& command, const Error& error) {
  CommandResult out{header(command), exit_code_for(error.code()), {}};
  out.report["error"] = {{"code", std::string(errc_name(error.code()))},
                         {"message", error.what()}};
  return out;
}

std::string render(const Report& report) { return report.dump(2) + "\n"; }

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::Io, "cannot open " + tmp.string() + " for writing");
    os << text;
    os.flush();
    if (!os) throw Error(Errc::Io, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::Io, "cannot rename into " + path.string());
  }
}

}  // namespace soltower
