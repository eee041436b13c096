#pragma once

#include <stdexcept>
#include <string>

namespace colorideals {

/// Malformed literal or config text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A predicate-defined ideal failed its downward-closure audit.
class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace colorideals
