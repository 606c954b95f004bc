#pragma once

#include <stdexcept>
#include <string>

namespace qid {

// A torus computation ran out of its grid budget before reaching a stopping
// condition.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A min-modulus certificate is missing, refuted by sampling, or too weak for
// safe phase unwrapping.
class certificate_error : public std::runtime_error {
 public:
  explicit certificate_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// truncate_normalize cannot renormalize: the head partial sum has modulus
// below 1/2.
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace qid
