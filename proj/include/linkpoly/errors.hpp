#pragma once

#include <stdexcept>

namespace linkpoly {

// Bad user input: malformed files, contract violations, caps exceeded.
// The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant: a non-exact division where exactness is
// guaranteed, or two routes to the same polynomial disagreeing. Exit code 2.
class InternalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkpoly
