// text.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "lexm/model.hpp"

namespace lexm {

/// Flattens an inline sequence to prose. Text verbatim, terms as their term,
/// citations canonical when set and raw otherwise, cross-references as their
/// resolved number (target when unresolved), variable slots bracketed as
/// ⟨name⟩, connectives as their English word.
std::string plain_text(const InlineSeq& content);

/// Trims leading/trailing whitespace and collapses interior whitespace runs
/// to single spaces. No case folding. Idempotent.
std::string normalize_text(std::string_view s);

bool is_space_byte(char c);

/// True if every byte of `s` is whitespace (including the empty string).
bool all_whitespace(std::string_view s);

} // namespace lexm
