#pragma once

#include <stdexcept>
#include <string>

namespace planprobe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Schema or invariant breach in data handed to us (lexicon files, constraint
// sets, malformed cases).
struct ValidationError : Error {
  using Error::Error;
};

// Structural parse failure; `where` is a JSON-pointer-like path into the blob.
struct ParseError : Error {
  ParseError(const std::string& message, std::string where_path)
      : Error(message + " at " + where_path), where(std::move(where_path)) {}
  std::string where;
};

// Synthesis could not produce a case within its retry budget.
struct GenerationError : Error {
  using Error::Error;
};

// Endpoint unreachable / HTTP-level failure. Distinct from ValidationError so
// callers can tell a dead endpoint from bad content.
struct TransportError : Error {
  using Error::Error;
};

// Canonicalization/equivalence requested on an unsatisfiable set.
struct UnsatError : Error {
  using Error::Error;
};

// evaluate() called with an assignment that does not cover every action.
struct IncompleteAssignment : Error {
  using Error::Error;
};

}  // namespace planprobe
