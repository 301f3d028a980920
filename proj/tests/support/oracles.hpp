// oracles.hpp
// Copyright (c) 2026, lexm contributors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only to check the library.
// Each deliberately takes a different route than the production code:
// enumeration instead of arithmetic, plain recursion instead of table
// backtracking, character scanning instead of the real parser.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lexm::test {

/// Successor in the marker sequence a, b, ..., z, aa, ab, ...
std::string next_alpha_oracle(std::string s);

/// N-th marker (0-based) by brute-force enumeration from "a".
std::string nth_alpha_oracle(int n);

/// Length of the longest common subsequence of two word lists, memoized
/// recursion. Intended for inputs of at most a few hundred words.
int lcs_length_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Strips markup from source text by character scanning: comments removed,
/// escapes resolved, command names and braces dropped keeping argument text,
/// optional arguments dropped entirely, \or and \and replaced by their word,
/// \var arguments kept. Only meaningful for sources that parse without
/// diagnostics.
std::string detag_oracle(std::string_view source);

/// Whitespace-insensitive equality (every whitespace byte removed).
bool equal_ignoring_whitespace(std::string_view a, std::string_view b);

} // namespace lexm::test
