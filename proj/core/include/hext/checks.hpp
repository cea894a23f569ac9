// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hext/report.hpp"

namespace hext {

// Overrides narrow a check to one parameter value; unset fields keep the
// default grid. Quick mode shrinks grids and doubles tolerances.
struct CheckOptions {
  bool quick = false;
  std::uint64_t seed = 0;
  std::optional<int> n, m, ell;
  std::optional<double> s, rho, delta, tol;
};

struct CheckInfo {
  std::string name;
  // Acceptance criterion number, or 0 for the additional invariant checks.
  int criterion = 0;
  std::string summary;
};

// Every named check, criteria first in numerical order.
const std::vector<CheckInfo>& check_catalog();
const CheckInfo& find_check(const std::string& name);

// Runs one check. Quadrature failures become failing reports; unknown names
// and invalid overrides throw DomainError.
CheckSuite run_check(const std::string& name, const CheckOptions& opt = {});
// Runs checks concurrently on `jobs` threads (0 picks the hardware count);
// results come back in the order of `names`.
std::vector<CheckSuite> run_checks(const std::vector<std::string>& names,
                                   const CheckOptions& opt = {}, int jobs = 0);

}  // namespace hext
