#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "taukit/commands.hpp"

namespace fs = std::filesystem;

namespace {

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Batch output keeps file attribution: a header line per file in text
// mode, a leading "file" key per report line in json mode.
int run_directory(const std::string& command, const std::vector<std::string>& options,
                  const fs::path& dir, bool json) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no .alg files in " << dir.string() << "\n";
    return 1;
  }
  int worst = 0;
  for (const auto& f : files) {
    std::string text;
    if (!read_file(f, text)) {
      std::cerr << "error: cannot read " << f.string() << "\n";
      worst = std::max(worst, 1);
      continue;
    }
    taukit::RunResult r = taukit::run_command(command, options, text, f.stem().string());
    worst = std::max(worst, r.exit_code);
    if (json) {
      auto report = nlohmann::ordered_json::parse(r.json);
      nlohmann::ordered_json line;
      line["file"] = f.filename().string();
      for (const auto& [k, v] : report.items()) line[k] = v;
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "== " << f.filename().string() << " ==\n" << r.text << "\n";
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool json = false;
  std::vector<std::string> rest;
  for (const std::string& a : args) {
    if (a == "--json")
      json = true;
    else
      rest.push_back(a);
  }

  if (rest.empty()) {
    std::cout << taukit::usage_text();
    return 1;
  }
  std::string command = rest[0];
  if (command == "help" || command == "--help" || command == "-h") {
    std::cout << taukit::usage_text();
    return 0;
  }
  if (rest.size() < 2) {
    std::cerr << "error: missing input path\n";
    return 1;
  }
  fs::path path = rest[1];
  std::vector<std::string> options(rest.begin() + 2, rest.end());

  std::error_code ec;
  if (fs::is_directory(path, ec)) return run_directory(command, options, path, json);

  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path.string() << "\n";
    return 1;
  }
  taukit::RunResult r = taukit::run_command(command, options, text, path.stem().string());
  if (json)
    std::cout << r.json << "\n";
  else
    std::cout << r.text;
  return r.exit_code;
}
