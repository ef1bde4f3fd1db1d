#include "gcgeo/report.hpp"

#include <sstream>

namespace gcgeo {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

void Report::pass(const std::string& name, const std::string& notes) {
  add({name, CheckStatus::pass, std::nullopt, notes});
}

void Report::fail(const std::string& name, const std::string& residual, const std::string& notes) {
  add({name, CheckStatus::fail, residual, notes});
}

void Report::skip(const std::string& name, const std::string& notes) {
  add({name, CheckStatus::skip, std::nullopt, notes});
}

void Report::check(const std::string& name, bool ok, const std::string& residual,
                   const std::string& notes) {
  if (ok)
    pass(name, notes);
  else
    fail(name, residual, notes);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckEntry e : other.entries_) {
    e.name = prefix.empty() ? e.name : prefix + "." + e.name;
    entries_.push_back(std::move(e));
  }
}

bool Report::all_pass() const {
  for (const auto& e : entries_)
    if (e.status == CheckStatus::fail) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << "[" << to_string(e.status) << "] " << e.name;
    if (e.residual && !e.residual->empty()) os << "  residual: " << *e.residual;
    if (!e.notes.empty()) os << "  (" << e.notes << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace gcgeo
