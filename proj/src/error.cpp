#include "error.hpp"

namespace stegc {

const char* status_name(Status status) noexcept {
  switch (status) {
    case Status::ok: return "ok";
    case Status::invalid_argument: return "invalid-argument";
    case Status::malformed_header: return "malformed-header";
    case Status::truncated_data: return "truncated-data";
    case Status::unsupported_depth: return "unsupported-depth";
    case Status::unsupported_color_type: return "unsupported-color-type";
    case Status::unsupported_format: return "unsupported-format";
    case Status::capacity_exceeded: return "capacity-exceeded";
    case Status::contains_terminator: return "contains-terminator";
    case Status::key_mismatch: return "key-mismatch";
    case Status::missing_terminator: return "missing-terminator";
    case Status::dimension_mismatch: return "dimension-mismatch";
    case Status::index_out_of_range: return "index-out-of-range";
    case Status::length_exceeds_capacity: return "length-exceeds-capacity";
    case Status::io_error: return "io-error";
  }
  return "unknown";
}

void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace stegc
