// nefcalc command-line front-end. All computation happens behind the
// extern-C library API; this binary only parses arguments, shuttles JSON
// and maps report verdicts onto the exit-code contract:
//   0 pass, 2 input error, 3 certified violation, 4 undecided at the
//   precision cap (internal faults exit 1).
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nefcalc.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUndecided = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

[[noreturn]] void fail_status(int status) {
  fail(status == NEF_ERR_INTERNAL ? kExitInternal : kExitInput,
       nef_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// RAII wrappers over the opaque handles.
struct Poly {
  nef_polytope* h = nullptr;
  ~Poly() { nef_polytope_free(h); }
};

struct Seq {
  nef_sequence* h = nullptr;
  ~Seq() { nef_sequence_free(h); }
};

void load_polytope(const std::string& path, Poly& out) {
  int status = nef_polytope_parse(read_file(path).c_str(), &out.h);
  if (status != NEF_OK)
    fail(kExitInput, path + ": " + nef_last_error());
}

void load_sequence(const std::string& path, Seq& out) {
  int status = nef_sequence_parse(read_file(path).c_str(), &out.h);
  if (status != NEF_OK)
    fail(kExitInput, path + ": " + nef_last_error());
}

std::string take(char* s) {
  std::string out = s;
  nef_string_free(s);
  return out;
}

// Precision precedence: --precision-bits flag, then NEFCALC_PRECISION_BITS,
// then the library default (0 selects it).
unsigned resolve_bits(unsigned flag_bits) {
  if (flag_bits != 0) return flag_bits;
  if (const char* env = std::getenv("NEFCALC_PRECISION_BITS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    fail(kExitInput, "NEFCALC_PRECISION_BITS must be a positive integer");
  }
  return 0;
}

int verdict_exit(const json& report) {
  std::string v = report.value("verdict", "pass");
  if (v == "violation") return kExitViolation;
  if (v == "undecided") return kExitUndecided;
  return kExitPass;
}

void render_entries(std::ostream& os, const char* title, const json& block) {
  os << title << ": " << (block["pass"].get<bool>() ? "pass" : "VIOLATION")
     << "\n";
  for (const auto& e : block["entries"])
    os << "  i=" << e["i"].get<int>() << "  deficit "
       << e["deficit"].get<std::string>()
       << (e["equality"].get<bool>()
               ? "  (equality)"
               : (e["holds"].get<bool>() ? "" : "  (VIOLATED)"))
       << "\n";
}

std::string certified_text(const json& c) {
  if (c.contains("exact") && c["exact"].is_string())
    return c["exact"].get<std::string>();
  if (c["enclosure"].is_null()) return "(undecided)";
  return "[" + c["enclosure"]["lo"].get<std::string>() + ", " +
         c["enclosure"]["hi"].get<std::string>() + "]";
}

void emit_verify(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ostream& os = std::cout;
  render_entries(os, "log-concavity", report["log_concavity"]);
  render_entries(os, "power inequalities", report["power"]);
  if (report.contains("minkowski")) {
    const auto& m = report["minkowski"];
    os << "minkowski root superadditivity: "
       << (m["pass"].get<bool>() ? "pass" : "VIOLATION")
       << (m["equality"].get<bool>() ? " (equality)" : "") << "\n";
  }
  if (report.contains("equality_conditions") &&
      !report["equality_conditions"].contains("skipped")) {
    const auto& e = report["equality_conditions"];
    os << "equality conditions agree: "
       << (e["all_agree"].get<bool>() ? "yes" : "NO") << "\n";
  }
  if (report.contains("proportionality"))
    os << "proportional: "
       << (report["proportionality"]["proportional"].get<bool>() ? "yes" : "no")
       << "\n";
  for (const auto& u : report["undecided"])
    os << "undecided at precision cap: " << u.get<std::string>() << "\n";
  os << "verdict: " << report["verdict"].get<std::string>() << "\n";
}

void emit_bounds(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ostream& os = std::cout;
  os << "inradius  in  [" << certified_text(report["inradius"]["lower"])
     << ", " << certified_text(report["inradius"]["upper"]) << "]\n";
  os << "outradius in  [" << certified_text(report["outradius"]["lower"])
     << ", " << certified_text(report["outradius"]["upper"]) << "]\n";
  if (report.contains("lp"))
    os << "LP radii: r = " << report["lp"]["r"].get<std::string>()
       << ", R = " << report["lp"]["R"].get<std::string>() << "\n";
  if (report.contains("diskant")) {
    const auto& d = report["diskant"];
    os << "diskant (slope " << d["slope"].get<std::string>() << "): "
       << (d["pass"].get<bool>() ? "pass" : "VIOLATION")
       << (d["exact_tie"].get<bool>() ? " (exact tie)" : "") << "\n";
  }
  if (report.contains("bonnesen")) {
    const auto& b = report["bonnesen"];
    os << "bonnesen: " << (b["pass"].get<bool>() ? "pass" : "VIOLATION")
       << (b["exact_tie"].get<bool>() ? " (exact tie)" : "") << "\n";
  }
  for (const auto& u : report["undecided"])
    os << "undecided at precision cap: " << u.get<std::string>() << "\n";
  os << "verdict: " << report["verdict"].get<std::string>() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{
      "nefcalc: exact intersection-number sequences of rational polytopes "
      "and certified inequality verification"};
  app.require_subcommand(1);
  bool as_json = false;
  unsigned flag_bits = 0;
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");
  app.add_option("--precision-bits", flag_bits,
                 "interval refinement cap in bits (default 4096; overrides "
                 "NEFCALC_PRECISION_BITS)");

  std::vector<std::string> mv_files;
  auto* mixedvol = app.add_subcommand(
      "mixedvol", "exact mixed volume of d polytopes in dimension d");
  mixedvol->add_option("files", mv_files, "polytope JSON files")->required();

  std::string seq_p, seq_q;
  auto* sequence = app.add_subcommand(
      "sequence", "intersection sequence s_i of a polytope pair");
  sequence->add_option("P", seq_p, "first polytope JSON")->required();
  sequence->add_option("Q", seq_q, "second polytope JSON")->required();

  std::vector<std::string> verify_files;
  std::string verify_seq_path;
  auto* verify = app.add_subcommand(
      "verify", "verify every applicable inequality for a pair or sequence");
  verify->add_option("files", verify_files,
                     "two polytope JSON files (pair mode)");
  verify->add_option("--sequence", verify_seq_path,
                     "sequence JSON file (free-sequence mode)");

  std::vector<std::string> bounds_files;
  std::string bounds_seq_path, slope_text;
  auto* bounds = app.add_subcommand(
      "bounds", "certified radius bounds, Diskant and Bonnesen");
  bounds->add_option("files", bounds_files,
                     "two polytope JSON files (pair mode)");
  bounds->add_option("--sequence", bounds_seq_path,
                     "sequence JSON file (sequence mode)");
  bounds->add_option("--slope", slope_text, "exact slope override, p/q");

  std::string radii_p, radii_q;
  auto* radii = app.add_subcommand(
      "radii", "exact LP inradius/outradius with witness and certificate");
  radii->add_option("P", radii_p, "outer polytope JSON")->required();
  radii->add_option("Q", radii_q, "inner polytope JSON")->required();

  std::string der_p, der_q;
  auto* derivative = app.add_subcommand(
      "derivative", "t^1 coefficient of vol(P+tQ) vs d*V(P^[d-1],Q)");
  derivative->add_option("P", der_p, "polytope JSON")->required();
  derivative->add_option("Q", der_q, "polytope JSON")->required();

  std::uint64_t gen_seed = 1;
  int gen_dim = 2, gen_maxv = 8, gen_count = 1;
  std::string gen_prefix = "poly";
  auto* generate = app.add_subcommand(
      "generate", "deterministic random full-dimensional polytopes");
  generate->add_option("--seed", gen_seed, "stream seed");
  generate->add_option("--dim", gen_dim, "dimension, 1..4");
  generate->add_option("--max-vertices", gen_maxv, "vertex budget");
  generate->add_option("--count", gen_count, "number of polytopes");
  generate->add_option("--prefix", gen_prefix,
                       "output path prefix (<prefix>-<index>.json)");

  CLI11_PARSE(app, argc, argv);
  unsigned bits = resolve_bits(flag_bits);

  if (mixedvol->parsed()) {
    std::vector<Poly> bodies(mv_files.size());
    std::vector<const nef_polytope*> handles;
    for (std::size_t i = 0; i < mv_files.size(); ++i) {
      load_polytope(mv_files[i], bodies[i]);
      handles.push_back(bodies[i].h);
    }
    char* rep = nullptr;
    int status = nef_mixed_volume(handles.data(),
                                  static_cast<int>(handles.size()), &rep);
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(rep));
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "V = " << j["mixed_volume"].get<std::string>() << "\n";
      if (j.contains("sequence")) {
        std::cout << "s =";
        for (const auto& v : j["sequence"]["s"])
          std::cout << " " << v.get<std::string>();
        std::cout << "\n";
      }
    }
    return kExitPass;
  }

  if (sequence->parsed()) {
    Poly p, q;
    load_polytope(seq_p, p);
    load_polytope(seq_q, q);
    Seq s;
    int status = nef_intersection_sequence(p.h, q.h, &s.h);
    if (status != NEF_OK) fail_status(status);
    char* text = nullptr;
    status = nef_sequence_to_json(s.h, &text);
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(text));
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "s =";
      for (const auto& v : j["s"]) std::cout << " " << v.get<std::string>();
      std::cout << "\n";
    }
    return kExitPass;
  }

  if (verify->parsed()) {
    char* rep = nullptr;
    int status;
    if (!verify_seq_path.empty()) {
      if (!verify_files.empty())
        fail(kExitInput, "give either a pair of files or --sequence");
      Seq s;
      load_sequence(verify_seq_path, s);
      status = nef_verify_sequence(s.h, bits, &rep);
    } else {
      if (verify_files.size() != 2)
        fail(kExitInput, "verify needs two polytope files or --sequence");
      Poly p, q;
      load_polytope(verify_files[0], p);
      load_polytope(verify_files[1], q);
      status = nef_verify_pair(p.h, q.h, bits, &rep);
    }
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(rep));
    emit_verify(j, as_json);
    return verdict_exit(j);
  }

  if (bounds->parsed()) {
    const char* slope = slope_text.empty() ? nullptr : slope_text.c_str();
    char* rep = nullptr;
    int status;
    if (!bounds_seq_path.empty()) {
      if (!bounds_files.empty())
        fail(kExitInput, "give either a pair of files or --sequence");
      Seq s;
      load_sequence(bounds_seq_path, s);
      status = nef_bounds_sequence(s.h, slope, bits, &rep);
    } else {
      if (bounds_files.size() != 2)
        fail(kExitInput, "bounds needs two polytope files or --sequence");
      Poly p, q;
      load_polytope(bounds_files[0], p);
      load_polytope(bounds_files[1], q);
      status = nef_bounds_pair(p.h, q.h, slope, bits, &rep);
    }
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(rep));
    emit_bounds(j, as_json);
    return verdict_exit(j);
  }

  if (radii->parsed()) {
    Poly p, q;
    load_polytope(radii_p, p);
    load_polytope(radii_q, q);
    char* rep = nullptr;
    int status = nef_radii(p.h, q.h, &rep);
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(rep));
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "r = " << j["t"].get<std::string>() << "  at x = (";
      for (std::size_t i = 0; i < j["x"].size(); ++i)
        std::cout << (i ? ", " : "") << j["x"][i].get<std::string>();
      std::cout << ")\nR = " << j["R"].get<std::string>() << "\n";
    }
    return kExitPass;
  }

  if (derivative->parsed()) {
    Poly p, q;
    load_polytope(der_p, p);
    load_polytope(der_q, q);
    char* rep = nullptr;
    int status = nef_derivative_check(p.h, q.h, &rep);
    if (status != NEF_OK) fail_status(status);
    json j = json::parse(take(rep));
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "t^1 coefficient " << j["t1_coefficient"].get<std::string>()
                << " vs d*V " << j["directional"].get<std::string>() << ": "
                << (j["equal"].get<bool>() ? "equal" : "DIFFER") << "\n";
    }
    return j["equal"].get<bool>() ? kExitPass : kExitViolation;
  }

  if (generate->parsed()) {
    for (int i = 0; i < gen_count; ++i) {
      nef_polytope* h = nullptr;
      int status = nef_generate(gen_seed, gen_dim, gen_maxv, i, &h);
      if (status != NEF_OK) fail_status(status);
      char* text = nullptr;
      status = nef_polytope_to_json(h, &text);
      nef_polytope_free(h);
      if (status != NEF_OK) fail_status(status);
      std::string path = gen_prefix + "-" + std::to_string(i) + ".json";
      std::ofstream out(path, std::ios::binary);
      if (!out) fail(kExitInput, "cannot write " + path);
      out << take(text) << "\n";
      if (!as_json) std::cout << path << "\n";
    }
    return kExitPass;
  }

  fail(kExitInput, "no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
