#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

// An operation was called outside its contract (bad range, wrong dimension,
// empty polytope where a non-empty one is required, ...).
class contract_violation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Malformed user-facing input: family documents, rational strings, labels.
class invalid_input : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace kstab
