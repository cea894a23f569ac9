// Copyright 2026 The hext Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0

#include "hext/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

namespace hext {
namespace {

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

double read_number(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return NAN;
}

nlohmann::json to_object(const CheckReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  return {{"name", r.name}, {"params", params},         {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)}, {"abs_err", number(r.abs_err)}, {"rel_err", number(r.rel_err)},
          {"tol", number(r.tol)}, {"pass", r.pass},            {"notes", r.notes}};
}

}  // namespace

CheckReport CheckReport::equality(std::string name, std::map<std::string, double> params,
                                  double lhs, double rhs, double tol, std::string notes,
                                  double abs_floor) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.notes = std::move(notes);
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(rhs), abs_floor);
  r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && r.rel_err <= tol;
  return r;
}

CheckReport CheckReport::inequality(std::string name, std::map<std::string, double> params,
                                    double lhs, double rhs, double tol, std::string notes) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.notes = std::move(notes);
  r.abs_err = std::max(0.0, rhs - lhs);
  r.rel_err = lhs != 0.0 ? r.abs_err / std::abs(lhs) : r.abs_err;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs >= rhs - tol * std::abs(lhs);
  return r;
}

std::string CheckReport::to_json() const { return to_object(*this).dump(); }

CheckReport CheckReport::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params[k] = read_number(v);
  r.lhs = read_number(j.at("lhs"));
  r.rhs = read_number(j.at("rhs"));
  r.abs_err = read_number(j.at("abs_err"));
  r.rel_err = read_number(j.at("rel_err"));
  r.tol = read_number(j.at("tol"));
  r.pass = j.at("pass").get<bool>();
  r.notes = j.value("notes", "");
  return r;
}

bool CheckSuite::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

double CheckSuite::worst_rel_err() const {
  double w = 0.0;
  for (const auto& r : reports) {
    if (std::isfinite(r.tol)) w = std::max(w, r.rel_err);
  }
  return w;
}

std::string CheckSuite::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_object(r));
  nlohmann::json j = {{"name", name},
                      {"pass", pass()},
                      {"worst_rel_err", number(worst_rel_err())},
                      {"seconds", seconds},
                      {"reports", list}};
  return j.dump(2);
}

std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
  return os << (r.pass ? "PASS " : "FAIL ") << r.name << " lhs=" << r.lhs << " rhs=" << r.rhs
            << " rel_err=" << r.rel_err << " tol=" << r.tol;
}

}  // namespace hext
