#pragma once

#include <string>

namespace testsupport {

// FIXTURES_DIR comes in as a compile definition from CMake.
inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace testsupport
