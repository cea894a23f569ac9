// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hext {

// One verified identity or inequality.
struct CheckReport {
  std::string name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string notes;

  // pass when |lhs - rhs| <= tol * max(|rhs|, abs_floor).
  static CheckReport equality(std::string name, std::map<std::string, double> params, double lhs,
                              double rhs, double tol, std::string notes = {},
                              double abs_floor = 0.0);
  // pass when lhs >= rhs - tol * |lhs|.
  static CheckReport inequality(std::string name, std::map<std::string, double> params,
                                double lhs, double rhs, double tol, std::string notes = {});

  std::string to_json() const;
  static CheckReport from_json(const std::string& text);
};

// A named group of reports with an overall verdict.
struct CheckSuite {
  std::string name;
  std::vector<CheckReport> reports;
  double seconds = 0.0;

  bool pass() const;
  // Over asserted reports; informational ones carry an infinite tolerance.
  double worst_rel_err() const;
  std::string to_json() const;
};

std::ostream& operator<<(std::ostream& os, const CheckReport& r);

}  // namespace hext
