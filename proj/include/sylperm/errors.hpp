/*
 * Copyright 2026 The sylperm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYLPERM_ERRORS_HPP
#define SYLPERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sylperm {

/// Thrown when an input exceeds a configured size cap. Caps are explicit
/// configuration values; nothing is ever silently truncated.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed matrix text input. Carries the 1-based line number
/// of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

/// Thrown when an internal cross-check fails (e.g. a nonzero remainder in
/// the Glynn division). Indicates an arithmetic bug, never bad user input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sylperm

#endif
