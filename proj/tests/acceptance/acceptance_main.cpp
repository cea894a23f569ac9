// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

// Runs the fifteen acceptance criteria at full size and prints one line per
// criterion. Exits non-zero when any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "hext/checks.hpp"

int main(int argc, char** argv) {
  hext::CheckOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--quick") opt.quick = true;
  }
  std::vector<std::string> names;
  std::vector<int> criteria;
  for (const auto& c : hext::check_catalog()) {
    if (c.criterion > 0) {
      names.push_back(c.name);
      criteria.push_back(c.criterion);
    }
  }
  int failures = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const hext::CheckSuite s = hext::run_check(names[i], opt);
    std::size_t failed = 0;
    for (const auto& r : s.reports) failed += r.pass ? 0 : 1;
    std::printf("criterion %2d %-18s %s  reports=%zu failed=%zu worst_rel_err=%.3g time=%.1fs\n",
                criteria[i], s.name.c_str(), s.pass() ? "PASS" : "FAIL", s.reports.size(), failed,
                s.worst_rel_err(), s.seconds);
    for (const auto& r : s.reports) {
      if (!r.pass) std::printf("    failed: %s lhs=%.12g rhs=%.12g rel_err=%.3g tol=%.3g %s\n",
                               r.name.c_str(), r.lhs, r.rhs, r.rel_err, r.tol, r.notes.c_str());
    }
    std::fflush(stdout);
    failures += s.pass() ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", names.size(), failures);
  return failures == 0 ? 0 : 1;
}
