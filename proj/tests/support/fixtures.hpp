// fixtures.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lexm::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(LEXM_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace lexm::test
