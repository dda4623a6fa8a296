#ifndef TKT_ERRORS_HPP
#define TKT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tkt {

// Malformed input text (PD codes, JSON files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid diagram, region, braid or bound arguments.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The skein search exceeded its configured node budget.
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tkt

#endif
