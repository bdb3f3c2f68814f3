#pragma once

#include <map>
#include <string>
#include <vector>

namespace ncgkk {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  // What identity or property the check establishes.
  std::string statement;
  CheckStatus status = CheckStatus::pass;
  // Residual, count summary, or failing witness expression.
  std::string detail;
};

class VerificationReport {
public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  // Throws std::logic_error on a duplicate id.
  void add(CheckRecord record);
  void add(std::string id, std::string statement, bool ok, std::string detail);
  void merge(const VerificationReport &other);

  const std::string &suite() const { return suite_; }
  // Sorted by id.
  std::vector<CheckRecord> checks() const;
  bool passed() const;
  std::size_t count(CheckStatus s) const;

  void set_seconds(double s) { seconds_ = s; }
  double seconds() const { return seconds_; }
  void set_config(std::map<std::string, std::string> echo) { config_ = std::move(echo); }

  // Human-readable, deterministic (no timing).
  std::string to_text() const;
  // Includes timing and the configuration echo.
  std::string to_json() const;

private:
  std::string suite_;
  std::map<std::string, CheckRecord> checks_;
  double seconds_ = 0.0;
  std::map<std::string, std::string> config_;
};

} // namespace ncgkk
