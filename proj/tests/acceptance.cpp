// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// detail for every failing check and for diagnostics. Arguments select
// criteria by number; no arguments runs all of them.
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>

#include "matgeg/verify.hpp"

using namespace matgeg;

namespace {

std::string shorten(const std::string& s, std::size_t n = 400) {
  return s.size() <= n ? s : s.substr(0, n) + "... (" + std::to_string(s.size()) + " chars)";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> pick;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "-v") {
      verbose = true;
      continue;
    }
    pick.insert(std::atoi(a.c_str()));
  }
  if (pick.empty())
    for (int k = 1; k <= acceptance_criterion_count(); ++k) pick.insert(k);

  int failed = 0;
  for (int k : pick) {
    Stopwatch sw;
    std::vector<CheckRecord> recs;
    try {
      recs = acceptance_criterion(k);
    } catch (const std::exception& e) {
      recs.push_back(bool_check("criterion raised", false, json{{"exception", e.what()}}, e.what()));
    }
    bool ok = !recs.empty();
    std::size_t counted = 0, passed = 0;
    for (const auto& r : recs) {
      if (r.diagnostic) continue;
      ++counted;
      passed += r.passed();
      ok = ok && r.passed();
    }
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << k << ": " << (ok ? "PASS" : "FAIL") << "  " << acceptance_title(k)
              << "  [" << passed << '/' << counted << " checks, " << std::fixed << std::setprecision(2) << sw.seconds()
              << "s]\n";
    for (const auto& r : recs) {
      if (r.passed() && !r.diagnostic && !verbose) continue;
      std::cout << "    " << (r.diagnostic ? "diagnostic " : "") << status_name(r.status) << ": " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
      std::cout << '\n';
      if (!r.passed() && r.witness) std::cout << "      witness: " << shorten(r.witness->dump()) << '\n';
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
