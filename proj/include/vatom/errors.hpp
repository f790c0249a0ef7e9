#pragma once

#include <stdexcept>
#include <string>

namespace vatom {

// Error taxonomy shared by the whole library. The CLI maps each category
// to a distinct process exit code (see tools/vatom.cpp).
enum class errc {
  validation = 2,       // bad config / bad arguments
  projection_floor = 3, // ground-detection probability below the floor
  truncation = 4,       // Fock-space truncation margin violated
  numerical = 5,        // solver/root-finder failure
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct validation_error : error {
  explicit validation_error(const std::string& what) : error(errc::validation, what) {}
};

struct projection_floor_error : error {
  explicit projection_floor_error(const std::string& what)
      : error(errc::projection_floor, what) {}
};

struct truncation_error : error {
  explicit truncation_error(const std::string& what) : error(errc::truncation, what) {}
};

struct numerical_error : error {
  explicit numerical_error(const std::string& what) : error(errc::numerical, what) {}
};

}  // namespace vatom
