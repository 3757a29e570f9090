#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace amalgam {

enum class CheckStatus { pass, fail, skip, inconclusive };

std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& s);

struct Check {
  std::string id;
  /// The claim being checked, in words.
  std::string paper_ref;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  std::int64_t millis = 0;
};

/// What a check body returns; timing is filled in by VerificationReport::run.
struct Outcome {
  CheckStatus status;
  std::string witness;

  static Outcome pass(std::string w = {}) { return {CheckStatus::pass, std::move(w)}; }
  static Outcome fail(std::string w) { return {CheckStatus::fail, std::move(w)}; }
  static Outcome skip(std::string why) { return {CheckStatus::skip, std::move(why)}; }
  static Outcome inconclusive(std::string w) { return {CheckStatus::inconclusive, std::move(w)}; }
  static Outcome expect(bool ok, std::string w) { return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(w)}; }
};

/// Ordered list of named checks. Ids are unique; failed checks carry a
/// witness.
class VerificationReport {
 public:
  VerificationReport() = default;
  VerificationReport(std::string command, std::uint64_t seed) : command_(std::move(command)), seed_(seed) {}

  /// Throws std::invalid_argument on a duplicate id or a witness-less failure.
  void add(Check check);

  /// Times body(); an escaping exception becomes a failure whose witness is
  /// the exception message.
  const Check& run(const std::string& id, const std::string& claim, const std::function<Outcome()>& body);

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  const std::string& command() const { return command_; }
  std::uint64_t seed() const { return seed_; }

  bool any(CheckStatus s) const;
  /// 1 if any check failed, else 2 if any was inconclusive, else 0.
  int exit_code() const;

  void merge(const VerificationReport& other);

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;

 private:
  std::string command_;
  std::uint64_t seed_ = 0;
  std::vector<Check> checks_;
};

enum class ReportFormat { text, json };

/// Writes the report to path ("-" for stdout) and returns its exit code.
/// Throws std::runtime_error (IoError) if the file cannot be written.
int write_report(const VerificationReport& report, ReportFormat format, const std::string& path);

}  // namespace amalgam
