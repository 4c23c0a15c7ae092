#pragma once

#include <stdexcept>
#include <string>

namespace stegc {

// Mirrors stegc_status in the public C header; numeric values must stay in sync.
enum class Status : int {
  ok = 0,
  invalid_argument = 1,
  malformed_header = 2,
  truncated_data = 3,
  unsupported_depth = 4,
  unsupported_color_type = 5,
  unsupported_format = 6,
  capacity_exceeded = 7,
  contains_terminator = 8,
  key_mismatch = 9,
  missing_terminator = 10,
  dimension_mismatch = 11,
  index_out_of_range = 12,
  length_exceeds_capacity = 13,
  io_error = 14,
};

const char* status_name(Status status) noexcept;

class Error : public std::runtime_error {
public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const noexcept { return status_; }

private:
  Status status_;
};

[[noreturn]] void fail(Status status, const std::string& message);

}  // namespace stegc
