#include "sclkit/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace sclkit::cli {

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void RunReport::add_constant(const std::string& key, const std::string& value) {
  constants.emplace_back(key, value);
}
void RunReport::add_result(const std::string& key, const std::string& value) {
  results.emplace_back(key, value);
}
void RunReport::add_verdict(const std::string& key, const std::string& value) {
  verdicts.emplace_back(key, value);
}

namespace {
std::string hex64(uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", (unsigned long long)v);
  return buf;
}
}  // namespace

std::string RunReport::text() const {
  std::string out = "sclkit " + subcommand + "\n";
  out += "inputs_digest: " + hex64(inputs_digest) + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  auto section = [&out](const char* name,
                        const std::vector<std::pair<std::string, std::string>>& kv) {
    if (kv.empty()) return;
    out += std::string("[") + name + "]\n";
    for (const auto& [k, v] : kv) out += k + ": " + v + "\n";
  };
  section("constants", constants);
  section("results", results);
  section("verdicts", verdicts);
  return out;
}

std::string RunReport::json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["inputs_digest"] = hex64(inputs_digest);
  j["seed"] = seed;
  auto fill = [](const std::vector<std::pair<std::string, std::string>>& kv) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : kv) o[k] = v;
    return o;
  };
  j["constants"] = fill(constants);
  j["results"] = fill(results);
  j["verdicts"] = fill(verdicts);
  return j.dump(2) + "\n";
}

}  // namespace sclkit::cli
