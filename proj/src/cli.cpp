#include "toupie/cli.hpp"
#include "toupie/random_presentation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace toupie {

using nlohmann::json;

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int exit_code_of(Errc code) {
  switch (code) {
    case Errc::hypotheses: return kExitRefused;
    case Errc::bound_exceeded: return kExitBound;
    case Errc::invalid_matching: return kExitViolation;
    default: return kExitInput;
  }
}

json header(const JobSpec& job, const std::string& digest) {
  json h;
  h["tool"] = "toupie";
  h["version"] = kVersion;
  h["command"] = job.command;
  h["input_sha256"] = digest;
  h["degree"] = job.degree;
  h["arity"] = job.arity;
  if (job.seed) h["seed"] = *job.seed;
  return h;
}

std::string text_header(const JobSpec& job, const std::string& digest) {
  return "toupie " + std::string(kVersion) + " " + job.command + " sha256:" + digest + "\n";
}

std::string render(const JobSpec& job, const std::string& digest, const Report& r) {
  const bool ok = r.diff.empty();
  if (job.format == "json") {
    json out = header(job, digest);
    out["status"] = ok ? "ok" : "violation";
    out["result"] = r.result;
    out["diff"] = r.diff;
    return out.dump(2) + "\n";
  }
  std::string out = text_header(job, digest);
  for (const auto& l : r.lines) out += l + "\n";
  for (const auto& d : r.diff) out += "diff: " + d + "\n";
  out += ok ? "status: ok\n" : "status: violation\n";
  return out;
}

std::string render_error(const JobSpec& job, const std::string& digest, const Error& e) {
  const bool refused = e.code() == Errc::hypotheses;
  if (job.format == "json") {
    json out = header(job, digest);
    out["status"] = refused ? "refused" : "error";
    out["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    return out.dump(2) + "\n";
  }
  return text_header(job, digest) + (refused ? "refused: " : "error: ") +
         to_string(e.code()) + ": " + e.what() + "\n";
}

// First differing line, or nullopt when equal.
std::optional<std::string> golden_diff(const std::string& expected, const std::string& got) {
  if (expected == got) return std::nullopt;
  std::istringstream a(expected), b(got);
  std::string la, lb;
  for (std::size_t line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) return "outputs differ in trailing bytes";
    if (!ha || !hb || la != lb)
      return "line " + std::to_string(line) + ": expected '" + (ha ? la : "<eof>") +
             "', got '" + (hb ? lb : "<eof>") + "'";
  }
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult res;
  Presentation p;
  std::string digest;
  try {
    if (!job.input.empty()) {
      const auto text = read_file(job.input);
      if (!text) {
        res.exit_code = kExitInput;
        res.err = "error: cannot read '" + job.input + "'\n";
        return res;
      }
      digest = sha256_hex(*text);
      p = parse_presentation(*text);
    } else if (job.seed) {
      std::mt19937_64 rng(*job.seed);
      p = random_presentation(rng);
      digest = sha256_hex(presentation_to_json(p).dump());
    } else {
      res.exit_code = kExitInput;
      res.err = "error: no input (give --input or --seed)\n";
      return res;
    }
    const Report r = run_command(job, p);
    res.out = render(job, digest, r);
    res.exit_code = r.diff.empty() ? kExitOk : kExitViolation;
    if (job.output && r.presentation) {
      std::ofstream f(*job.output, std::ios::binary);
      if (!f) throw Error(Errc::invalid_input, "cannot write '" + *job.output + "'");
      f << presentation_to_json(*r.presentation).dump(2) << "\n";
    }
  } catch (const Error& e) {
    res.exit_code = exit_code_of(e.code());
    const std::string msg = render_error(job, digest, e);
    if (job.format == "json")
      res.out = msg;
    else
      res.err = msg;
    return res;
  }
  if (job.golden) {
    const auto expected = read_file(*job.golden);
    if (!expected) {
      res.exit_code = kExitInput;
      res.err += "error: cannot read golden file '" + *job.golden + "'\n";
    } else if (auto d = golden_diff(*expected, res.out)) {
      res.exit_code = kExitViolation;
      res.err += "golden mismatch: " + *d + "\n";
    }
  }
  return res;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Anick resolutions, A-infinity structures and Koszul duals of toupie algebras"};
  app.set_version_flag("--version", kVersion);
  JobSpec job;
  std::string golden, output;
  std::uint64_t seed = 0;
  app.add_option("command", job.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("-i,--input", job.input, "Presentation JSON file")->envname("TOUPIE_INPUT");
  app.add_option("--degree", job.degree, "Homological degree bound")
      ->envname("TOUPIE_DEGREE")
      ->check(CLI::PositiveNumber);
  app.add_option("--arity", job.arity, "Arity bound for Delta_n and m_n")
      ->envname("TOUPIE_ARITY")
      ->check(CLI::Range(2, 64));
  app.add_option("--format", job.format, "Report format")
      ->envname("TOUPIE_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  auto* golden_opt = app.add_option("--golden", golden, "Compare the report with this file")
                         ->envname("TOUPIE_GOLDEN");
  auto* seed_opt = app.add_option("--seed", seed, "Random presentation when no input is given")
                       ->envname("TOUPIE_SEED");
  auto* output_opt = app.add_option("-o,--output", output, "Write the resulting presentation here")
                         ->envname("TOUPIE_OUTPUT");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (*golden_opt) job.golden = golden;
  if (*seed_opt) job.seed = seed;
  if (*output_opt) job.output = output;
  const RunResult r = run(job);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace toupie
