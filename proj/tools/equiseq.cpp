#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equiseq/equiseq.hpp"
#include "equiseq/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// --check recomputes everything with a quadratic oracle, so keep it at
// desk scale.
constexpr std::uint64_t kCheckLimit = 4096;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Request {
  std::string command;
  std::string mode;
  std::string text_path = "-";
  std::uint64_t k = 0;
  std::string pattern;
  std::string algo = "auto";
  std::string format = "tsv";
  std::uint64_t d = 0;
  bool check = false;
  bool strip_newlines = true;
  unsigned threads = 1;
};

// The computed answer plus the engine that produced it. `occurrences` is
// populated in locate mode only.
struct Outcome {
  std::uint64_t count = 0;
  std::optional<std::vector<equiseq::Occurrence>> occurrences;
  std::string algo;
};

std::string read_text_bytes(const std::string& path) {
  std::string bytes;
  if (path == "-") {
    bytes.assign(std::istreambuf_iterator<char>(std::cin),
                 std::istreambuf_iterator<char>());
    if (std::cin.bad()) throw IoError("failed to read standard input");
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    bytes.assign(std::istreambuf_iterator<char>(in),
                 std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed to read " + path);
  }
  return bytes;
}

Outcome run_subcadence(const equiseq::Text& text, const Request& r) {
  namespace sc = equiseq::subcadence;
  Outcome out;
  if (r.algo == "brute") {
    auto occs = equiseq::oracle::brute_subcadences(text, r.k, r.d);
    out.count = occs.size();
    out.algo = "brute";
    if (r.mode == "locate") out.occurrences = std::move(occs);
    return out;
  }
  sc::Query q;
  q.k = r.k;
  q.d_filter = r.d;
  q.threads = r.threads;
  if (r.algo == "split") q.strategy = sc::Strategy::Split;
  else if (r.algo == "bitpar") q.strategy = sc::Strategy::BitParallel;
  else if (r.algo == "pairs") q.strategy = sc::Strategy::Pairs;
  if (r.mode == "locate") {
    auto occs = sc::locate(text, q, &out.algo);
    out.count = occs.size();
    out.occurrences = std::move(occs);
  } else {
    out.count = sc::count(text, q, &out.algo);
  }
  return out;
}

Outcome run_cadence(const equiseq::Text& text, const Request& r) {
  namespace cd = equiseq::cadence;
  Outcome out;
  if (r.algo == "brute") {
    auto occs = equiseq::oracle::brute_cadences(text, r.k, r.d);
    out.count = occs.size();
    out.algo = "brute";
    if (r.mode == "locate") out.occurrences = std::move(occs);
    return out;
  }
  cd::Query q;
  q.k = r.k;
  q.d_filter = r.d;
  q.threads = r.threads;
  if (r.algo == "split") q.strategy = cd::Strategy::Filter;
  else if (r.algo == "window") q.strategy = cd::Strategy::WindowedBitParallel;
  if (r.mode == "locate") {
    auto occs = cd::locate(text, q, &out.algo);
    out.count = occs.size();
    out.occurrences = std::move(occs);
  } else {
    out.count = cd::count(text, q, &out.algo);
  }
  return out;
}

Outcome run_espm(const equiseq::Text& text, const equiseq::Pattern& p,
                 const Request& r) {
  namespace es = equiseq::espm;
  Outcome out;
  if (r.algo == "brute") {
    auto occs = equiseq::oracle::brute_esp(text, p, r.d);
    out.count = occs.size();
    out.algo = "brute";
    if (r.mode == "locate") out.occurrences = std::move(occs);
    return out;
  }
  es::Options opt;
  opt.d_filter = r.d;
  opt.threads = r.threads;
  if (r.algo == "split") opt.strategy = es::Strategy::Split;
  else if (r.algo == "bitpar") opt.strategy = es::Strategy::BitParallel;
  if (r.mode == "locate") {
    auto occs = es::locate(text, p, opt, &out.algo);
    out.count = occs.size();
    out.occurrences = std::move(occs);
  } else {
    out.count = es::count(text, p, opt, &out.algo);
  }
  return out;
}

Outcome run_espm3(const equiseq::Text& text, const equiseq::Pattern& p,
                  const Request& r) {
  Outcome out;
  if (r.algo == "brute") {
    out.count = equiseq::oracle::brute_esp(text, p).size();
    out.algo = "brute";
  } else {
    out.count = equiseq::length3::count_esp3(text, p).total;
    out.algo = "conv";
  }
  return out;
}

Outcome run_abelian3(const equiseq::Text& text, const equiseq::Pattern& p,
                     const Request& r) {
  Outcome out;
  if (r.algo == "brute") {
    out.count = equiseq::oracle::brute_abelian3(text, p).size();
    out.algo = "brute";
  } else {
    out.count = equiseq::length3::count_abelian3(text, p).total;
    out.algo = "conv";
  }
  return out;
}

Outcome run_request(const equiseq::Text& text, const Request& r) {
  if (r.command == "subcadence") return run_subcadence(text, r);
  if (r.command == "cadence") return run_cadence(text, r);
  equiseq::Pattern p(r.pattern);
  if (r.command == "espm") return run_espm(text, p, r);
  if (p.size() != 3)
    throw UsageError(r.command + " requires a pattern of exactly 3 bytes");
  if (r.command == "espm3") return run_espm3(text, p, r);
  return run_abelian3(text, p, r);
}

// Recomputes the answer with the corresponding brute oracle and reports
// the first disagreement, if any, to the error stream.
bool check_against_oracle(const equiseq::Text& text, const Request& r,
                          const Outcome& got) {
  namespace oc = equiseq::oracle;
  std::vector<equiseq::Occurrence> want;
  if (r.command == "subcadence") {
    want = oc::brute_subcadences(text, r.k, r.d);
  } else if (r.command == "cadence") {
    want = oc::brute_cadences(text, r.k, r.d);
  } else if (r.command == "abelian3") {
    want = oc::brute_abelian3(text, equiseq::Pattern(r.pattern), r.d);
  } else {
    want = oc::brute_esp(text, equiseq::Pattern(r.pattern), r.d);
  }
  if (got.count != want.size()) {
    std::cerr << "check failed: " << r.command << " count " << got.count
              << " != oracle " << want.size() << "\n";
    return false;
  }
  if (!got.occurrences) return true;
  for (std::size_t j = 0; j < want.size(); ++j) {
    const auto& a = (*got.occurrences)[j];
    const auto& b = want[j];
    if (a != b) {
      std::cerr << "check failed: occurrence " << j << " is (" << a.i << ","
                << a.d << ") but oracle has (" << b.i << "," << b.d << ")\n";
      return false;
    }
  }
  return true;
}

nlohmann::ordered_json params_json(const Request& r) {
  nlohmann::ordered_json params;
  if (r.command == "subcadence" || r.command == "cadence") {
    params["k"] = r.k;
    params["d"] = r.d ? nlohmann::ordered_json(r.d)
                      : nlohmann::ordered_json(nullptr);
  } else if (r.command == "espm") {
    params["pattern"] = r.pattern;
    params["d"] = r.d ? nlohmann::ordered_json(r.d)
                      : nlohmann::ordered_json(nullptr);
  } else {
    params["pattern"] = r.pattern;
  }
  return params;
}

void print_outcome(const Request& r, const equiseq::Text& text,
                   const Outcome& out) {
  if (r.mode == "locate") {
    if (r.format == "json") {
      nlohmann::ordered_json j;
      auto& occs = j["occurrences"] = nlohmann::ordered_json::array();
      for (const auto& occ : *out.occurrences)
        occs.push_back({occ.i, occ.d});
      j["count"] = out.count;
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& occ : *out.occurrences)
        std::cout << occ.i << "\t" << occ.d << "\n";
    }
    return;
  }
  if (r.format == "json") {
    nlohmann::ordered_json j;
    j["count"] = out.count;
    j["n"] = text.size();
    j["params"] = params_json(r);
    j["algo"] = out.algo;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << out.count << "\n";
  }
}

void add_common_options(CLI::App* sub, Request& r, bool takes_d,
                        const std::vector<std::string>& algos) {
  sub->add_option("--text", r.text_path,
                  "Text file to read, or '-' for standard input")
      ->capture_default_str();
  sub->add_option("--algo", r.algo, "Engine to use")
      ->check(CLI::IsMember(algos))
      ->capture_default_str();
  sub->add_option("--format", r.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  if (takes_d)
    sub->add_option("--d", r.d, "Restrict to one distance (0 = all)");
  sub->add_flag("--check", r.check,
                "Also run the brute oracle and fail on disagreement");
  sub->add_flag("--strip-newlines,!--no-strip-newlines", r.strip_newlines,
                "Drop LF/CR bytes from the text before processing");
  sub->add_option("--threads", r.threads, "Worker threads for the scan")
      ->check(CLI::PositiveNumber);
}

void add_mode_positional(CLI::App* sub, Request& r, bool locatable) {
  auto modes = locatable ? std::vector<std::string>{"count", "locate"}
                         : std::vector<std::string>{"count"};
  sub->add_option("mode", r.mode, "What to compute")
      ->required()
      ->check(CLI::IsMember(modes));
}

int run(int argc, char** argv) {
  Request r;
  CLI::App app{"Count and locate equidistant subsequence structures"};
  app.require_subcommand(1);

  auto* sub_subcad =
      app.add_subcommand("subcadence", "Equally spaced repeats of one "
                                       "character, k samples long");
  add_mode_positional(sub_subcad, r, true);
  sub_subcad->add_option("--k", r.k, "Number of samples")->required();
  add_common_options(sub_subcad, r, true,
                     {"auto", "split", "bitpar", "pairs", "brute"});

  auto* sub_cad =
      app.add_subcommand("cadence", "Sub-cadences that extend past both "
                                    "ends of the text");
  add_mode_positional(sub_cad, r, true);
  sub_cad->add_option("--k", r.k, "Number of samples")->required();
  add_common_options(sub_cad, r, true, {"auto", "split", "window", "brute"});

  auto* sub_espm =
      app.add_subcommand("espm", "Occurrences of a pattern as an "
                                 "equidistant subsequence");
  add_mode_positional(sub_espm, r, true);
  sub_espm->add_option("--pattern", r.pattern, "Pattern bytes")->required();
  add_common_options(sub_espm, r, true, {"auto", "split", "bitpar", "brute"});

  auto* sub_espm3 =
      app.add_subcommand("espm3", "Count a length-3 pattern by "
                                  "convolution");
  add_mode_positional(sub_espm3, r, false);
  sub_espm3->add_option("--pattern", r.pattern, "Pattern bytes (exactly 3)")
      ->required();
  add_common_options(sub_espm3, r, false, {"auto", "conv", "brute"});

  auto* sub_abelian3 =
      app.add_subcommand("abelian3", "Count occurrences matching a "
                                     "length-3 pattern up to reordering");
  add_mode_positional(sub_abelian3, r, false);
  sub_abelian3
      ->add_option("--pattern", r.pattern, "Pattern bytes (exactly 3)")
      ->required();
  add_common_options(sub_abelian3, r, false, {"auto", "conv", "brute"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  r.command = app.get_subcommands().front()->get_name();

  if ((r.command == "subcadence" || r.command == "cadence") && r.k < 2)
    throw UsageError("k must be at least 2");

  std::string bytes = read_text_bytes(r.text_path);
  if (r.strip_newlines) {
    std::erase(bytes, '\n');
    std::erase(bytes, '\r');
  }
  equiseq::Text text(std::move(bytes));

  if (r.check && text.size() > kCheckLimit)
    throw UsageError("--check is limited to texts of at most " +
                     std::to_string(kCheckLimit) + " bytes");

  Outcome out = run_request(text, r);
  if (out.occurrences)
    std::sort(out.occurrences->begin(), out.occurrences->end());

  if (r.check && !check_against_oracle(text, r, out)) return kExitMismatch;

  print_outcome(r, text, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
