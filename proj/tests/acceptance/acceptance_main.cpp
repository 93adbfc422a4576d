// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.
// Optional arguments select criteria by number.
#include "quadmaps/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <vector>

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= quadmaps::kCriteriaCount; ++i) ids.push_back(i);
  bool ok = true;
  for (int id : ids) {
    auto r = quadmaps::run_criterion(id);
    std::printf("%s\n", quadmaps::format_result(r).c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
