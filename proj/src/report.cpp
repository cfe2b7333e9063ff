#include "ordproj/report.hpp"

#include <algorithm>

namespace ordproj {

void CheckReport::add(std::string label, bool pass, double residual, std::string note) {
  clauses.push_back({std::move(label), pass, residual, std::move(note)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.clauses) clauses.push_back({prefix + c.label, c.pass, c.residual, c.note});
}

bool CheckReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

double CheckReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& c : clauses) worst = std::max(worst, c.residual);
  return worst;
}

const Clause* CheckReport::find(const std::string& label) const {
  for (const auto& c : clauses)
    if (c.label == label) return &c;
  return nullptr;
}

std::string CheckReport::failures() const {
  std::string out;
  for (const auto& c : clauses) {
    if (c.pass) continue;
    if (!out.empty()) out += ", ";
    out += c.label;
  }
  return out;
}

}  // namespace ordproj
