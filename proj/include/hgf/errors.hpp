#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hgf {

// Eigenvalues or newform reductions need a larger extension degree.
class FieldTooSmall : public std::runtime_error {
 public:
  FieldTooSmall(const std::string& what, std::vector<unsigned> degrees)
      : std::runtime_error(what), degrees_(std::move(degrees)) {}
  const std::vector<unsigned>& factor_degrees() const { return degrees_; }

 private:
  std::vector<unsigned> degrees_;
};

std::string enlarge_message(const std::string& subject, unsigned r, const std::vector<unsigned>& degrees);

}  // namespace hgf
