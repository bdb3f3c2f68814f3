#include "ncgkk/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ncgkk {

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::skip:
    return "skip";
  }
  return "unknown";
}

void VerificationReport::add(CheckRecord record) {
  const auto id = record.id;
  if (!checks_.emplace(id, std::move(record)).second)
    throw std::logic_error("VerificationReport: duplicate check id " + id);
}

void VerificationReport::add(std::string id, std::string statement, bool ok, std::string detail) {
  add(CheckRecord{std::move(id), std::move(statement), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport &other) {
  for (const auto &[id, rec] : other.checks_)
    add(rec);
  seconds_ += other.seconds_;
}

std::vector<CheckRecord> VerificationReport::checks() const {
  std::vector<CheckRecord> out;
  for (const auto &[id, rec] : checks_)
    out.push_back(rec);
  return out;
}

bool VerificationReport::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto &[id, rec] : checks_)
    n += rec.status == s;
  return n;
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto &[id, rec] : checks_) {
    out += "[" + to_string(rec.status) + "] " + id + ": " + rec.statement;
    if (!rec.detail.empty())
      out += " (" + rec.detail + ")";
    out += "\n";
  }
  out += "suite " + suite_ + ": " + std::to_string(count(CheckStatus::pass)) + " passed, " +
         std::to_string(count(CheckStatus::fail)) + " failed, " + std::to_string(count(CheckStatus::skip)) +
         " skipped: " + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = passed() ? "pass" : "fail";
  j["seconds"] = seconds_;
  j["config"] = config_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto &[id, rec] : checks_)
    arr.push_back({{"id", id}, {"statement", rec.statement}, {"status", to_string(rec.status)}, {"detail", rec.detail}});
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

} // namespace ncgkk
