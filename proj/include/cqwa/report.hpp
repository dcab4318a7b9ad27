#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cqwa {

enum class CheckStatus { Pass, Fail };

struct Check {
  std::string id;
  std::string tag;
  CheckStatus status = CheckStatus::Pass;
  std::optional<std::string> witness;  // always set when status is Fail
};

// Ordered list of named checks. Checks keep the order they were added in.
class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void pass(const std::string& id, const std::string& tag, std::optional<std::string> note = std::nullopt);
  void fail(const std::string& id, const std::string& tag, const std::string& witness);
  void record(const std::string& id, const std::string& tag, bool ok, const std::string& witness);
  void append(const Report& other);

  bool passed() const;
  std::size_t failures() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

std::string format_report(const Report& r, bool failures_only = false);

}  // namespace cqwa
