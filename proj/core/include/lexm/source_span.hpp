// source_span.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>

namespace lexm {

/// Half-open byte range [byte_start, byte_end) within one source file,
/// plus the 1-based line/column of its first byte. Columns count bytes.
struct SourceSpan {
    std::string path;
    std::size_t byte_start = 0;
    std::size_t byte_end = 0;
    int line = 1;
    int col = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

} // namespace lexm
