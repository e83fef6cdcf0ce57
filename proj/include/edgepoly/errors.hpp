#pragma once

#include <stdexcept>
#include <string>

namespace edgepoly {

/// Malformed or invalid input: bad JSON, duplicate edges, isolated vertices,
/// violations of the loop-closure condition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds the desk-scale limits of an enumeration routine.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested computation has no answer for this graph family,
/// e.g. a Groebner basis for a non-simple edge polytope.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The toric ideal is zero, so there is nothing to compute a basis of.
class ZeroIdealError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgepoly
