#pragma once

#include <stdexcept>
#include <string>

namespace homlab {

// Bad parameters, malformed files, violated preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string & what) : std::runtime_error(what) {}
};

// An exact answer was requested beyond the configured exact cutoff.
struct cutoff_error : std::runtime_error {
    explicit cutoff_error(const std::string & what) : std::runtime_error(what) {}
};

// A search exceeded its budget; distinct from a negative answer.
struct undecided_error : std::runtime_error {
    explicit undecided_error(const std::string & what) : std::runtime_error(what) {}
};

}
