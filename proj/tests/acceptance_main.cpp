#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "sclkit/acceptance.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[i + 1], nullptr, 10);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 2;
    }
  }
  auto rows = sclkit::accept::run_all(seed);
  std::fputs(sclkit::accept::format_table(rows).c_str(), stdout);
  int failed = 0;
  for (const auto& r : rows)
    if (!r.pass) ++failed;
  return failed;
}
