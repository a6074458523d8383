#pragma once

#include <stdexcept>
#include <string>

namespace pst {

// Thrown when a caller breaks a documented precondition.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const char* message) {
    if (!condition) throw contract_error(message);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) throw contract_error(message);
}

}  // namespace pst
