#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace xq {

/// Controls the randomized part of axiom checks.
struct SamplingOptions {
  std::uint64_t seed = 1;
  std::size_t depth = 200;      // random products per sampled axiom
  std::size_t max_length = 6;   // word length of sampled elements
};

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = true;
  std::optional<std::string> witness;
  std::size_t sampled = 0;  // random cases examined on top of generator-exact checks
};

class Report {
 public:
  explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void pass(std::string id, std::string description, std::size_t sampled = 0);
  void fail(std::string id, std::string description, std::string witness, std::size_t sampled = 0);
  /// pass() when witness is empty, fail() otherwise.
  void record(std::string id, std::string description, const std::optional<std::string>& witness,
              std::size_t sampled = 0);
  /// Appends another report's checks, prefixing their ids.
  void merge(const Report& other, const std::string& prefix);

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& id) const;
  bool passed() const;

  std::optional<SamplingOptions> sampling;

  void print(std::ostream& os) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

}  // namespace xq
