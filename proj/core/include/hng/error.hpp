#ifndef HNG_ERROR_HPP
#define HNG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hng {

enum class Errc {
  parameter_out_of_range,
  order_cap_exceeded,
  invalid_vertex,
  malformed_graph6,
  order_out_of_range,
  io_error,
  corrupt_catalog,
  stale_cache,
  too_many_edges,
  not_in_class,
  invalid_type_for_family,
  missing_obstruction_set,
  missing_dependency,
  usage,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception; `code()` lets
/// the CLI map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hng

#endif  // HNG_ERROR_HPP
