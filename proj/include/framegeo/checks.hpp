#ifndef FRAMEGEO_CHECKS_HPP
#define FRAMEGEO_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

namespace framegeo {

/// Outcome of one identity check. Witness indices are 1-based frame
/// labels (plus a trailing component index for vector-valued identities)
/// so they read like the e_1..e_n notation used in reports.
struct IdentityRecord {
  enum class Status { Pass, Fail, Skipped };

  std::string id;        // stable machine id, e.g. "nabla-xi"
  std::string statement; // human-readable formula
  Status status = Status::Skipped;
  std::vector<int> witness;     // first failing slot, empty on pass
  std::optional<std::string> left;  // value of the left side at the witness
  std::optional<std::string> right; // value of the right side at the witness

  bool passed() const { return status == Status::Pass; }

  static IdentityRecord pass(std::string id, std::string statement) {
    IdentityRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.status = Status::Pass;
    return r;
  }

  static IdentityRecord fail(std::string id, std::string statement,
                             std::vector<int> witness, std::string left,
                             std::string right) {
    IdentityRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.status = Status::Fail;
    r.witness = std::move(witness);
    r.left = std::move(left);
    r.right = std::move(right);
    return r;
  }

  static IdentityRecord skipped(std::string id, std::string statement) {
    IdentityRecord r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.status = Status::Skipped;
    return r;
  }
};

struct VerificationReport {
  std::vector<IdentityRecord> records;
  /// Identities quantified over all vector fields are checked on frame
  /// slots only; multilinearity over constant coefficients makes that
  /// equivalent. The note states this in every serialized report.
  static constexpr const char* kFrameSlotNote =
      "identities quantified over all vector fields are checked on frame "
      "slots; equivalent by multilinearity for constant-component tensors";

  bool all_passed() const {
    for (const auto& r : records)
      if (r.status == IdentityRecord::Status::Fail) return false;
    return true;
  }

  const IdentityRecord* find(const std::string& id) const {
    for (const auto& r : records)
      if (r.id == id) return &r;
    return nullptr;
  }
};

} // namespace framegeo

#endif
