#include "localchrom/acceptance.hpp"

#include <fstream>
#include <iostream>
#include <map>

using namespace localchrom;

int main(int argc, char** argv) {
  acceptance::Context ctx;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open golden file " << argv[1] << "\n";
      return 2;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(line);
    ctx.search_golden = lines;
  }
  auto report = acceptance::verify_paper(ctx);
  std::map<int, std::vector<const acceptance::Entry*>> by_criterion;
  for (const auto& e : report.entries) by_criterion[e.criterion].push_back(&e);
  bool ok = true;
  for (int k = 1; k <= 12; ++k) {
    bool pass = !by_criterion[k].empty();
    std::string detail;
    for (const auto* e : by_criterion[k]) {
      pass = pass && e->status == acceptance::Status::PASS;
      detail += (detail.empty() ? "" : "; ") + e->claim_id + " " + acceptance::to_string(e->status);
      if (e->status != acceptance::Status::PASS) detail += " (" + e->detail + ")";
    }
    if (by_criterion[k].empty()) detail = "no claim";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k << ": " << detail << "\n";
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
