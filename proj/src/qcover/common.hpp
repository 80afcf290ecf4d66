#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcover {

/// Exact rational scalar used throughout; all arithmetic in this project is exact.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Errors carry a stable `code()` so the CLI can map them to exit status and
/// reports can name the failure class without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Arithmetic-layer failures.
struct InexactDivision : Error {
  explicit InexactDivision(const std::string& m) : Error("InexactDivision", m) {}
};
struct NotExpandable : Error {
  explicit NotExpandable(const std::string& m) : Error("NotExpandable", m) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m) : Error("DivisionByZero", m) {}
};

// Input / datum validation failures.
struct BadInput : Error {
  explicit BadInput(const std::string& m) : Error("BadInput", m) {}
};
struct IncompatibleAutomorphism : Error {
  explicit IncompatibleAutomorphism(const std::string& m)
      : Error("IncompatibleAutomorphism", m) {}
};
struct C4Violation : Error {
  explicit C4Violation(const std::string& m) : Error("C4Violation", m) {}
};
struct C6Violation : Error {
  explicit C6Violation(const std::string& m) : Error("C6Violation", m) {}
};
struct GcdNotOne : Error {
  explicit GcdNotOne(const std::string& m) : Error("GcdNotOne", m) {}
};
struct WeightMismatch : Error {
  explicit WeightMismatch(const std::string& m) : Error("WeightMismatch", m) {}
};

// Verification failures (these signal convention mismatches or genuine
// mathematical failures; they are never silently patched downstream).
struct RelationFailure : Error {
  explicit RelationFailure(const std::string& m) : Error("RelationFailure", m) {}
};
struct NotInSpan : Error {
  explicit NotInSpan(const std::string& m) : Error("NotInSpan", m) {}
};
struct IdempotencyFailure : Error {
  explicit IdempotencyFailure(const std::string& m) : Error("IdempotencyFailure", m) {}
};
struct IdentityFailure : Error {
  explicit IdentityFailure(const std::string& m) : Error("IdentityFailure", m) {}
};
struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& m) : Error("TruncationTooSmall", m) {}
};

/// Binomial coefficient C(n,k) as a plain integer (small arguments only).
inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

/// C(n,2) shows up constantly as a grading shift.
inline long choose2(long n) { return n * (n - 1) / 2; }

inline long lcm_long(long a, long b) {
  long g = std::__gcd(a, b);
  return a / g * b;
}

}  // namespace qcover
