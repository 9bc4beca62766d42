#include "singindex/error.hpp"

namespace singindex {

DegreeCapExceeded::DegreeCapExceeded(unsigned cap, unsigned degree)
    : Error("degree cap " + std::to_string(cap) + " exceeded (degree " + std::to_string(degree) + ")"),
      cap_(cap),
      degree_(degree) {}

}  // namespace singindex
