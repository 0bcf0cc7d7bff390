#include "xq/report.hpp"

namespace xq {

void Report::pass(std::string id, std::string description, std::size_t sampled) {
  checks_.push_back({std::move(id), std::move(description), true, std::nullopt, sampled});
}

void Report::fail(std::string id, std::string description, std::string witness,
                  std::size_t sampled) {
  checks_.push_back({std::move(id), std::move(description), false, std::move(witness), sampled});
}

void Report::record(std::string id, std::string description,
                    const std::optional<std::string>& witness, std::size_t sampled) {
  if (witness)
    fail(std::move(id), std::move(description), *witness, sampled);
  else
    pass(std::move(id), std::move(description), sampled);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckResult c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

void Report::print(std::ostream& os) const {
  if (!subject_.empty()) os << subject_ << "\n";
  if (sampling)
    os << "  sampling: seed " << sampling->seed << ", depth " << sampling->depth
       << ", word length <= " << sampling->max_length << "\n";
  for (const auto& c : checks_) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << "  " << c.description;
    if (c.sampled) os << " (" << c.sampled << " sampled)";
    os << "\n";
    if (c.witness) os << "         witness: " << *c.witness << "\n";
  }
  os << "  verdict: " << (passed() ? "all checks pass" : "some checks fail") << "\n";
}

}  // namespace xq
