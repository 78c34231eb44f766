#pragma once

#include <stdexcept>

namespace pinnacle {

/// An enumeration-based method was asked for an instance beyond its guard.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pinnacle
