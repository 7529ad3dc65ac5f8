#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spt {

// A directed cycle was found where the caller required an acyclic arc set.
class CycleError : public std::runtime_error {
public:
    explicit CycleError(std::vector<int> cycle);
    const std::vector<int>& cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

// An instance failed its class validator (or a generator ran out of retries).
class InvalidInstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact oracles refuse inputs above their guard size.
class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace spt
