#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Feeds `input` to the installed binary over a pipe and captures stdout.
// Inputs in this file are plain lowercase text, safe to single-quote.
CliResult run_cli(const std::string& args, const std::string& input = "") {
  const std::string cmd = "printf '%s' '" + input + "' | '" EQUISEQ_CLI_BIN
                          "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* kSample = "caaacaabaabaabcabc";

}  // namespace

TEST_CASE("locate prints tab-separated occurrences sorted by distance") {
  const auto r = run_cli("subcadence locate --k 4 --d 3", kSample);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\t3\n4\t3\n7\t3\n8\t3\n");

  const auto esp = run_cli("espm locate --pattern aacc --d 3", kSample);
  CHECK(esp.exit_code == 0);
  CHECK(esp.out == "9\t3\n");
}

TEST_CASE("count prints a bare integer in tsv mode") {
  const auto r = run_cli("cadence count --k 2", "aaaa");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("json count reports size, parameters and the engine used") {
  const auto r = run_cli("subcadence count --k 4 --format json", kSample);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["n"] == 18);
  CHECK(j["params"]["k"] == 4);
  CHECK(j["params"]["d"].is_null());
  CHECK(j["algo"].is_string());
  CHECK(j["algo"] != "auto");

  const auto forced =
      run_cli("subcadence count --k 4 --format json --algo split", kSample);
  CHECK(nlohmann::json::parse(forced.out)["algo"] == "split");
}

TEST_CASE("json locate lists occurrence pairs") {
  const auto r =
      run_cli("espm locate --pattern aacc --d 3 --format json", kSample);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["occurrences"].size() == 1);
  CHECK(j["occurrences"][0][0] == 9);
  CHECK(j["occurrences"][0][1] == 3);
  CHECK(j["count"] == 1);
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run_cli("subcadence count --k 1", "aaaa").exit_code == 2);
  CHECK(run_cli("subcadence count --k 4 --algo window", "aaaa").exit_code == 2);
  CHECK(run_cli("espm3 count --pattern ab", "aaa").exit_code == 2);
  CHECK(run_cli("espm3 count --pattern abc --d 2", "aaa").exit_code == 2);
  CHECK(run_cli("espm3 locate --pattern abc", "aaa").exit_code == 2);
  CHECK(run_cli("cadence count", "aaaa").exit_code == 2);
  CHECK(run_cli("nonsense count --k 2", "aaaa").exit_code == 2);
}

TEST_CASE("unreadable input exits with code 3") {
  CHECK(run_cli("subcadence count --k 2 --text /no/such/file").exit_code == 3);
}

TEST_CASE("differential mode accepts matching engines and guards its scale") {
  CHECK(run_cli("subcadence locate --k 4 --check", kSample).exit_code == 0);
  CHECK(run_cli("cadence count --k 3 --check", kSample).exit_code == 0);
  CHECK(run_cli("abelian3 count --pattern aab --check", kSample).exit_code ==
        0);
  const std::string big(5000, 'a');
  CHECK(run_cli("subcadence count --k 2 --check", big).exit_code == 2);
  CHECK(run_cli("subcadence count --k 2", big).exit_code == 0);
}

TEST_CASE("thread count never changes the bytes produced") {
  const std::string text(400, 'a');
  const auto one = run_cli("subcadence locate --k 3 --threads 1", text);
  const auto many = run_cli("subcadence locate --k 3 --threads 7", text);
  CHECK(one.exit_code == 0);
  CHECK(many.exit_code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("file input matches standard input and newline stripping folds") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "equiseq_cli_test.txt";
  {
    std::ofstream f(path);
    f << "caaac\naabaa\nbaabc\nabc\n";
  }
  const auto from_file =
      run_cli("subcadence count --k 4 --text '" + path.string() + "'");
  const auto from_stdin = run_cli("subcadence count --k 4", kSample);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == from_stdin.out);

  const auto raw = run_cli("subcadence count --k 4 --no-strip-newlines --text '" +
                           path.string() + "'");
  CHECK(raw.exit_code == 0);
  CHECK(raw.out != from_file.out);
  fs::remove(path);
}

TEST_CASE("length-3 engines agree through the command line") {
  const auto conv = run_cli("espm3 count --pattern aab", kSample);
  const auto brute = run_cli("espm3 count --pattern aab --algo brute", kSample);
  CHECK(conv.exit_code == 0);
  CHECK(conv.out == brute.out);
  const auto aconv = run_cli("abelian3 count --pattern aab", kSample);
  const auto abrute =
      run_cli("abelian3 count --pattern aab --algo brute", kSample);
  CHECK(aconv.out == abrute.out);
  CHECK(aconv.out != "0\n");
}
