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

#ifndef SYLPERM_VALUATION_HPP
#define SYLPERM_VALUATION_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylperm {

using ExactInt = boost::multiprecision::cpp_int;

/// 2-adic valuation value: a nonnegative exponent, or Infinity for the
/// valuation of zero. Infinity compares greater than every finite value and
/// absorbs addition, so valuation bounds on possibly-zero terms hold uniformly.
class Valuation {
public:
    constexpr Valuation(std::int64_t exponent) : value_(exponent) {
        if (exponent < 0) throw std::invalid_argument("valuation exponent must be nonnegative");
    }

    static constexpr Valuation infinity() { return Valuation(InfinityTag{}); }

    constexpr bool is_infinite() const noexcept { return value_ < 0; }

    constexpr std::int64_t value() const {
        if (is_infinite()) throw std::logic_error("infinite valuation has no finite value");
        return value_;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Valuation a, Valuation b) noexcept {
        return a.rank() == b.rank();
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) noexcept {
        return a.rank() <=> b.rank();
    }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    struct InfinityTag {};
    constexpr explicit Valuation(InfinityTag) : value_(-1) {}

    // Order-preserving key with infinity on top.
    constexpr std::pair<int, std::int64_t> rank() const noexcept {
        return is_infinite() ? std::pair<int, std::int64_t>{1, 0}
                             : std::pair<int, std::int64_t>{0, value_};
    }

    std::int64_t value_; // -1 encodes infinity
};

/// nu2(x): the largest e with 2^e dividing x. Sign-blind; nu2(0) = Infinity.
inline Valuation nu2(const ExactInt& x) {
    if (x == 0) return Valuation::infinity();
    return Valuation(static_cast<std::int64_t>(boost::multiprecision::lsb(abs(x))));
}

/// Number of ones in the binary expansion (the digit sum s_k).
inline int digit_sum_base2(std::uint64_t k) noexcept { return std::popcount(k); }

/// nu2(k!) by the digit-sum identity: k minus the binary digit sum of k.
inline std::int64_t nu2_factorial(std::uint64_t k) noexcept {
    return static_cast<std::int64_t>(k) - digit_sum_base2(k);
}

} // namespace sylperm

#endif
