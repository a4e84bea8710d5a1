#include "cube_spectra/errors.hpp"

namespace cube {

void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}

}  // namespace cube
