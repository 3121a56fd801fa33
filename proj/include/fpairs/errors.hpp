#pragma once

#include <stdexcept>
#include <string>

namespace fpairs {

// All library errors derive from fpairs::error so callers can catch them
// as a family; each concrete type names one contract violation.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FPAIRS_DEFINE_ERROR(name)                                   \
  class name : public error {                                       \
   public:                                                          \
    explicit name(const std::string& what) : error(#name ": " + what) {} \
  }

FPAIRS_DEFINE_ERROR(not_invertible);
FPAIRS_DEFINE_ERROR(dimension_mismatch);
FPAIRS_DEFINE_ERROR(order_mismatch);
FPAIRS_DEFINE_ERROR(ring_mismatch);
FPAIRS_DEFINE_ERROR(arity_mismatch);
FPAIRS_DEFINE_ERROR(budget_exceeded);
FPAIRS_DEFINE_ERROR(degree_too_high);
FPAIRS_DEFINE_ERROR(non_invertible_denominator);
FPAIRS_DEFINE_ERROR(invalid_instance);
FPAIRS_DEFINE_ERROR(invalid_argument);

#undef FPAIRS_DEFINE_ERROR

}  // namespace fpairs
