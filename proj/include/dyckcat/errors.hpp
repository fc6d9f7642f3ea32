#pragma once

#include <stdexcept>
#include <string>

namespace dyckcat {

// Malformed values: foreign symbols, odd lengths, non-interval dimension
// vectors, unparseable chain specs.
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or exploration would exceed a configured bound.
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A unitary shift left the set of valid Dyck words.
struct invalid_shift_error : std::runtime_error {
    explicit invalid_shift_error(const std::string& what) : std::runtime_error(what) {}
};

// exact_div was asked for a quotient that does not exist. A mutation walk
// raising this means the exchange arithmetic is broken, not the input.
struct divisibility_error : std::runtime_error {
    explicit divisibility_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant the library maintains internally was violated.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dyckcat
