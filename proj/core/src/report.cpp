#include "amalgam/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace amalgam {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus parse_check_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skip") return CheckStatus::skip;
  if (s == "inconclusive") return CheckStatus::inconclusive;
  throw std::invalid_argument("unknown check status: " + s);
}

void VerificationReport::add(Check check) {
  if (find(check.id) != nullptr) throw std::invalid_argument("duplicate check id: " + check.id);
  if (check.status == CheckStatus::fail && check.witness.empty()) {
    throw std::invalid_argument("failed check without witness: " + check.id);
  }
  checks_.push_back(std::move(check));
}

const Check& VerificationReport::run(const std::string& id, const std::string& claim,
                                     const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome{CheckStatus::fail, {}};
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = Outcome::fail(std::string("exception: ") + e.what());
  }
  if (outcome.status == CheckStatus::fail && outcome.witness.empty()) outcome.witness = "(no detail)";
  const auto elapsed = std::chrono::steady_clock::now() - start;
  add(Check{id, claim, outcome.status, std::move(outcome.witness),
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()});
  return checks_.back();
}

const Check* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::any(CheckStatus s) const {
  return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) { return c.status == s; });
}

int VerificationReport::exit_code() const {
  if (any(CheckStatus::fail)) return 1;
  if (any(CheckStatus::inconclusive)) return 2;
  return 0;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const Check& c : other.checks_) add(c);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : checks_) {
    checks.push_back({{"id", c.id},
                      {"paper_ref", c.paper_ref},
                      {"status", to_string(c.status)},
                      {"witness", c.witness},
                      {"millis", c.millis}});
  }
  return {{"command", command_},
          {"seed", seed_},
          {"toolchain", {{"compiler", __VERSION__}, {"cplusplus", __cplusplus}}},
          {"checks", checks}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r(j.value("command", std::string{}), j.value("seed", std::uint64_t{0}));
  for (const auto& c : j.at("checks")) {
    r.add(Check{c.at("id").get<std::string>(), c.value("paper_ref", std::string{}),
                parse_check_status(c.at("status").get<std::string>()), c.value("witness", std::string{}),
                c.value("millis", std::int64_t{0})});
  }
  return r;
}

std::string VerificationReport::to_text() const {
  std::size_t id_width = 2;
  for (const Check& c : checks_) id_width = std::max(id_width, c.id.size());
  std::ostringstream out;
  out << "command: " << command_ << "  seed: " << seed_ << '\n';
  for (const Check& c : checks_) {
    out << std::left << std::setw(static_cast<int>(id_width)) << c.id << "  " << std::setw(12)
        << to_string(c.status) << std::right << std::setw(8) << c.millis << " ms  " << c.witness << '\n';
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const Check& c : checks_) ++counts[static_cast<int>(c.status)];
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped, " << counts[3]
      << " inconclusive\n";
  return out.str();
}

int write_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::json ? report.to_json().dump(2) + "\n" : report.to_text();
  if (path == "-") {
    std::cout << body;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report to " + path);
    out << body;
    if (!out) throw std::runtime_error("error writing report to " + path);
  }
  return report.exit_code();
}

}  // namespace amalgam
