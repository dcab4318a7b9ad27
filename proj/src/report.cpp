#include "cqwa/report.hpp"

#include <sstream>

namespace cqwa {

void Report::pass(const std::string& id, const std::string& tag, std::optional<std::string> note) {
  checks_.push_back({id, tag, CheckStatus::Pass, std::move(note)});
}

void Report::fail(const std::string& id, const std::string& tag, const std::string& witness) {
  checks_.push_back({id, tag, CheckStatus::Fail, witness.empty() ? std::string("(no detail)") : witness});
}

void Report::record(const std::string& id, const std::string& tag, bool ok, const std::string& witness) {
  if (ok)
    pass(id, tag);
  else
    fail(id, tag, witness);
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

std::string format_report(const Report& r, bool failures_only) {
  std::ostringstream out;
  for (const auto& c : r.checks()) {
    bool ok = c.status == CheckStatus::Pass;
    if (ok && failures_only) continue;
    out << (ok ? "PASS " : "FAIL ") << c.id << "  [" << c.tag << "]\n";
    if (c.witness) out << "     " << (ok ? "note: " : "witness: ") << *c.witness << "\n";
  }
  out << r.suite() << ": " << (r.checks().size() - r.failures()) << "/" << r.checks().size() << " checks passed\n";
  return out.str();
}

}  // namespace cqwa
