#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gcgeo {

enum class CheckStatus { pass, fail, skip };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> residual;
  std::string notes;
};

class Report {
public:
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }
  void pass(const std::string& name, const std::string& notes = "");
  void fail(const std::string& name, const std::string& residual, const std::string& notes = "");
  void skip(const std::string& name, const std::string& notes = "");
  void check(const std::string& name, bool ok, const std::string& residual = "",
             const std::string& notes = "");
  void merge(const Report& other, const std::string& prefix = "");

  const std::vector<CheckEntry>& entries() const { return entries_; }
  bool all_pass() const;
  std::string text() const;

private:
  std::vector<CheckEntry> entries_;
};

std::string to_string(CheckStatus s);

}  // namespace gcgeo
