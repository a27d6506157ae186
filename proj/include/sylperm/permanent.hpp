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

#ifndef SYLPERM_PERMANENT_HPP
#define SYLPERM_PERMANENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "sylperm/errors.hpp"
#include "sylperm/matrix.hpp"
#include "sylperm/valuation.hpp"

namespace sylperm {

using Int256 = boost::multiprecision::int256_t;

enum class EngineChoice { Naive, Laplace, Ryser, Glynn, SumExpansion, SylvesterFast };

constexpr std::string_view engine_name(EngineChoice engine) noexcept {
    switch (engine) {
    case EngineChoice::Naive: return "naive";
    case EngineChoice::Laplace: return "laplace";
    case EngineChoice::Ryser: return "ryser";
    case EngineChoice::Glynn: return "glynn";
    case EngineChoice::SumExpansion: return "sum-expansion";
    case EngineChoice::SylvesterFast: return "sylvester-fast";
    }
    return "unknown";
}

inline std::optional<EngineChoice> engine_from_name(std::string_view name) noexcept {
    for (EngineChoice e : {EngineChoice::Naive, EngineChoice::Laplace, EngineChoice::Ryser,
                           EngineChoice::Glynn, EngineChoice::SumExpansion,
                           EngineChoice::SylvesterFast})
        if (engine_name(e) == name) return e;
    return std::nullopt;
}

/// Size caps per engine. Exceeding a cap raises SizeLimitError; nothing is
/// ever truncated. The defaults bound the per-call work at desk scale.
struct EngineLimits {
    Index naive_max = 10;     // m! terms
    Index laplace_max = 12;   // recursive blow-up
    Index ryser_max = 34;     // 2^m Gray steps
    Index glynn_max = 34;     // 2^(m-1) Gray steps
    Index expansion_max = 8;  // C(m,k)^2 submatrix permanents
};

inline ExactInt factorial(Index k) {
    if (k < 0) throw std::invalid_argument("factorial argument must be nonnegative");
    ExactInt f = 1;
    for (Index i = 2; i <= k; ++i) f *= i;
    return f;
}

namespace detail {

inline std::uint64_t unsigned_abs(std::int64_t v) noexcept {
    return v < 0 ? 0ull - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

inline std::uint64_t gray(std::uint64_t k) noexcept { return k ^ (k >> 1); }

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Decides whether the fixed-width scan path is provably safe for a matrix
/// of size m whose entries are bounded by max_abs in magnitude.
///
/// line_bound = m * max_abs bounds every running row/column sum, so the
/// largest possible term is line_bound^m and the sum of 2^m terms is bounded
/// by 2^m * line_bound^m. The fast path requires that total to fit a 256-bit
/// accumulator with margin, and chunk_len is the largest number of factors
/// whose partial product always fits a signed 128-bit chunk. When the bound
/// fails, engines fall back to unbounded integers.
struct ScanPlan {
    bool fast = false;
    int chunk_len = 1;
};

inline ScanPlan plan_scan(Index m, std::uint64_t max_abs) {
    ScanPlan plan;
    const ExactInt line_bound = ExactInt(max_abs) * m;
    if (2 * line_bound > std::numeric_limits<std::int64_t>::max()) return plan;
    ExactInt term_bound = 1;
    for (Index i = 0; i < m; ++i) term_bound *= line_bound;
    if ((term_bound << static_cast<unsigned>(m)) > (ExactInt(1) << 254)) return plan;

    const ExactInt lb = line_bound > 2 ? line_bound : ExactInt(2);
    const ExactInt chunk_limit = ExactInt(1) << 126;
    ExactInt p = lb;
    int len = 1;
    while (len < m && p * lb <= chunk_limit) {
        p *= lb;
        ++len;
    }
    plan.fast = true;
    plan.chunk_len = len;
    return plan;
}

/// Exact product of `count` 64-bit values, folded through 128-bit chunks
/// into a 256-bit result. Safe whenever the ScanPlan that produced chunk_len
/// accepted the input.
inline Int256 chunked_product(const std::int64_t* values, Index count, int chunk_len) {
    Int256 out = 1;
    __int128 chunk = 1;
    int used = 0;
    for (Index i = 0; i < count; ++i) {
        chunk *= values[i];
        if (++used == chunk_len) {
            out *= Int256(chunk);
            chunk = 1;
            used = 0;
        }
    }
    if (used) out *= Int256(chunk);
    return out;
}

/// Splits [0, total) into at most `threads` contiguous blocks and runs `fn`
/// on each, one thread per block. Partials come back in block order; since
/// all accumulation is exact integer addition, the combined value is
/// identical for every thread count.
template <typename Acc, typename Fn>
std::vector<Acc> run_partitioned(std::uint64_t total, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (total < (std::uint64_t(1) << 12)) threads = 1; // not worth spawning
    const std::uint64_t blocks =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total ? total : 1);
    std::vector<Acc> partials(static_cast<std::size_t>(blocks));
    if (blocks <= 1) {
        partials[0] = fn(0, total);
        return partials;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(blocks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(blocks - 1));
    auto work = [&](std::uint64_t b) {
        const std::uint64_t lo = total / blocks * b + std::min(b, total % blocks);
        const std::uint64_t hi = total / blocks * (b + 1) + std::min(b + 1, total % blocks);
        try {
            partials[static_cast<std::size_t>(b)] = fn(lo, hi);
        } catch (...) {
            errors[static_cast<std::size_t>(b)] = std::current_exception();
        }
    };
    for (std::uint64_t b = 1; b < blocks; ++b) pool.emplace_back(work, b);
    work(0);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return partials;
}

// Ryser scan state, fixed-width path. `cols` is column-contiguous.
inline Int256 ryser_block_fast(const std::vector<std::int64_t>& cols, Index m, std::uint64_t lo,
                               std::uint64_t hi, int chunk_len) {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(m), 0);
    std::int64_t* rs = sums.data();
    std::uint64_t g = gray(lo);
    for (Index j = 0; j < m; ++j)
        if ((g >> j) & 1) {
            const std::int64_t* col = cols.data() + j * m;
            for (Index i = 0; i < m; ++i) rs[i] += col[i];
        }
    Index zeros = 0;
    for (Index i = 0; i < m; ++i) zeros += rs[i] == 0;

    Int256 acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
        if (k != lo) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = std::uint64_t(1) << j;
            g ^= bit;
            const std::int64_t* col = cols.data() + static_cast<Index>(j) * m;
            if (g & bit)
                for (Index i = 0; i < m; ++i) rs[i] += col[i];
            else
                for (Index i = 0; i < m; ++i) rs[i] -= col[i];
            zeros = 0;
            for (Index i = 0; i < m; ++i) zeros += rs[i] == 0;
        }
        if (zeros == 0) {
            const Int256 term = chunked_product(rs, m, chunk_len);
            if ((static_cast<std::uint64_t>(m) + k) & 1)
                acc -= term;
            else
                acc += term;
        }
    }
    return acc;
}

// Ryser scan state, unbounded path for inputs whose worst case exceeds the
// fixed-width proof.
inline ExactInt ryser_block_big(const std::vector<std::int64_t>& cols, Index m, std::uint64_t lo,
                                std::uint64_t hi) {
    std::vector<ExactInt> rs(static_cast<std::size_t>(m), ExactInt(0));
    std::uint64_t g = gray(lo);
    for (Index j = 0; j < m; ++j)
        if ((g >> j) & 1)
            for (Index i = 0; i < m; ++i) rs[static_cast<std::size_t>(i)] += cols[j * m + i];
    ExactInt acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
        if (k != lo) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = std::uint64_t(1) << j;
            g ^= bit;
            const std::int64_t* col = cols.data() + static_cast<Index>(j) * m;
            if (g & bit)
                for (Index i = 0; i < m; ++i) rs[static_cast<std::size_t>(i)] += col[i];
            else
                for (Index i = 0; i < m; ++i) rs[static_cast<std::size_t>(i)] -= col[i];
        }
        ExactInt term = 1;
        bool zero = false;
        for (Index i = 0; i < m && !zero; ++i) {
            if (rs[static_cast<std::size_t>(i)] == 0)
                zero = true;
            else
                term *= rs[static_cast<std::size_t>(i)];
        }
        if (zero) continue;
        if ((static_cast<std::uint64_t>(m) + k) & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Glynn scan state, fixed-width path. `rows` is row-contiguous; bit i of the
// Gray code means delta_{i+1} = -1 (delta_0 is pinned to +1).
inline Int256 glynn_block_fast(const std::vector<std::int64_t>& rows, Index m, std::uint64_t lo,
                               std::uint64_t hi, int chunk_len) {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(m), 0);
    std::int64_t* cs = sums.data();
    for (Index i = 0; i < m; ++i) {
        const std::int64_t* row = rows.data() + i * m;
        for (Index j = 0; j < m; ++j) cs[j] += row[j];
    }
    std::uint64_t g = gray(lo);
    for (Index b = 0; b + 1 < m; ++b)
        if ((g >> b) & 1) {
            const std::int64_t* row = rows.data() + (b + 1) * m;
            for (Index j = 0; j < m; ++j) cs[j] -= 2 * row[j];
        }
    Index zeros = 0;
    for (Index j = 0; j < m; ++j) zeros += cs[j] == 0;

    Int256 acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
        if (k != lo) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = std::uint64_t(1) << b;
            g ^= bit;
            const std::int64_t* row = rows.data() + static_cast<Index>(b + 1) * m;
            if (g & bit)
                for (Index j = 0; j < m; ++j) cs[j] -= 2 * row[j];
            else
                for (Index j = 0; j < m; ++j) cs[j] += 2 * row[j];
            zeros = 0;
            for (Index j = 0; j < m; ++j) zeros += cs[j] == 0;
        }
        if (zeros == 0) {
            const Int256 term = chunked_product(cs, m, chunk_len);
            if (k & 1)
                acc -= term;
            else
                acc += term;
        }
    }
    return acc;
}

inline ExactInt glynn_block_big(const std::vector<std::int64_t>& rows, Index m, std::uint64_t lo,
                                std::uint64_t hi) {
    std::vector<ExactInt> cs(static_cast<std::size_t>(m), ExactInt(0));
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) cs[static_cast<std::size_t>(j)] += rows[i * m + j];
    std::uint64_t g = gray(lo);
    for (Index b = 0; b + 1 < m; ++b)
        if ((g >> b) & 1)
            for (Index j = 0; j < m; ++j)
                cs[static_cast<std::size_t>(j)] -= 2 * ExactInt(rows[(b + 1) * m + j]);
    ExactInt acc = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
        if (k != lo) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(k));
            const std::uint64_t bit = std::uint64_t(1) << b;
            g ^= bit;
            const std::int64_t* row = rows.data() + static_cast<Index>(b + 1) * m;
            if (g & bit)
                for (Index j = 0; j < m; ++j) cs[static_cast<std::size_t>(j)] -= 2 * ExactInt(row[j]);
            else
                for (Index j = 0; j < m; ++j) cs[static_cast<std::size_t>(j)] += 2 * ExactInt(row[j]);
        }
        ExactInt term = 1;
        bool zero = false;
        for (Index j = 0; j < m && !zero; ++j) {
            if (cs[static_cast<std::size_t>(j)] == 0)
                zero = true;
            else
                term *= cs[static_cast<std::size_t>(j)];
        }
        if (zero) continue;
        if (k & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
    static_assert(std::is_integral_v<typename Derived::Scalar>,
                  "permanent engines operate on exact integer matrices");
    if (a.rows() != a.cols()) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

// Copies an expression into a contiguous buffer; `by_cols` selects
// column-contiguous (Ryser) vs row-contiguous (Glynn) layout.
template <typename Derived>
std::vector<std::int64_t> flatten(const Eigen::MatrixBase<Derived>& a, bool by_cols,
                                  std::uint64_t* max_abs) {
    const Index m = a.rows();
    std::vector<std::int64_t> buf(static_cast<std::size_t>(m * m));
    std::uint64_t ma = 0;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            const std::int64_t v = static_cast<std::int64_t>(a(i, j));
            buf[static_cast<std::size_t>(by_cols ? j * m + i : i * m + j)] = v;
            ma = std::max(ma, unsigned_abs(v));
        }
    if (max_abs) *max_abs = ma;
    return buf;
}

} // namespace detail

/**
 * Permanent by full permutation enumeration. This is the ground-truth
 * reference: every other engine is cross-checked against it on the overlap.
 * Capped hard because the term count is m!.
 */
template <typename Derived>
ExactInt per_naive(const Eigen::MatrixBase<Derived>& a, const EngineLimits& limits = {}) {
    detail::require_square(a, "per_naive");
    const Index m = a.rows();
    if (m > limits.naive_max)
        throw SizeLimitError("per_naive accepts size <= " + std::to_string(limits.naive_max));
    if (m == 0) return 1;
    const IntMatrix mat = a.derived().template cast<Entry>();
    std::vector<Index> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), Index(0));
    ExactInt total = 0;
    do {
        ExactInt prod = 1;
        for (Index k = 0; k < m; ++k) {
            const Entry e = mat(k, perm[static_cast<std::size_t>(k)]);
            if (e == 0) {
                prod = 0;
                break;
            }
            prod *= e;
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace detail {

inline ExactInt per_laplace_rec(const IntMatrix& a, Index col) {
    const Index m = a.rows();
    if (m == 0) return 1;
    ExactInt sum = 0;
    for (Index k = 0; k < m; ++k) {
        const Entry coeff = a(k, col);
        if (coeff == 0) continue;
        sum += ExactInt(coeff) * per_laplace_rec(minor(a, {k + 1, col + 1}), 0);
    }
    return sum;
}

} // namespace detail

/**
 * Permanent by Laplace expansion along column `col` (0-based): the sign-free
 * sum of entry times minor permanent. The value is independent of the column
 * chosen. Recursion below the top level expands along the first column.
 */
template <typename Derived>
ExactInt per_laplace(const Eigen::MatrixBase<Derived>& a, Index col = 0,
                     const EngineLimits& limits = {}) {
    detail::require_square(a, "per_laplace");
    const Index m = a.rows();
    if (m > limits.laplace_max)
        throw SizeLimitError("per_laplace accepts size <= " + std::to_string(limits.laplace_max));
    if (m == 0) return 1;
    if (col < 0 || col >= m) throw std::invalid_argument("expansion column out of range");
    const IntMatrix mat = a.derived().template cast<Entry>();
    return detail::per_laplace_rec(mat, col);
}

/**
 * @brief Permanent by Ryser inclusion-exclusion over column subsets.
 *
 * The 2^m subsets are walked in Gray-code order so each step updates the m
 * running row sums by a single column. The index range splits into
 * contiguous blocks, one thread per block, each block rebuilding its
 * starting row sums from scratch; exact integer addition makes the result
 * bit-identical for every thread count.
 *
 * Accumulation uses 256-bit fixed-width integers only when the worst-case
 * bound 2^m * (m * max|a_ij|)^m provably fits; otherwise the scan runs on
 * unbounded integers.
 *
 * @param a        square integer matrix
 * @param threads  worker count; 0 means hardware concurrency
 * @return the exact permanent
 */
template <typename Derived>
ExactInt per_ryser(const Eigen::MatrixBase<Derived>& a, int threads = 0,
                   const EngineLimits& limits = {}) {
    detail::require_square(a, "per_ryser");
    const Index m = a.rows();
    if (m > limits.ryser_max)
        throw SizeLimitError("per_ryser accepts size <= " + std::to_string(limits.ryser_max));
    if (m == 0) return 1;
    std::uint64_t max_abs = 0;
    const auto cols = detail::flatten(a, /*by_cols=*/true, &max_abs);
    const auto plan = detail::plan_scan(m, max_abs);
    const std::uint64_t total = std::uint64_t(1) << m;
    ExactInt sum = 0;
    if (plan.fast) {
        auto partials = detail::run_partitioned<Int256>(
            total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
                return detail::ryser_block_fast(cols, m, lo, hi, plan.chunk_len);
            });
        Int256 s = 0;
        for (const auto& p : partials) s += p;
        sum = ExactInt(s);
    } else {
        auto partials = detail::run_partitioned<ExactInt>(
            total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
                return detail::ryser_block_big(cols, m, lo, hi);
            });
        for (const auto& p : partials) sum += p;
    }
    return sum;
}

/**
 * @brief Permanent by Glynn's average over +-1 sign vectors.
 *
 * With delta_0 pinned to +1 there are 2^(m-1) terms, walked in Gray-code
 * order over the remaining sign flips; each step updates the m running
 * column sums by +-2 times one row. The final division by 2^(m-1) must be
 * exact; a nonzero remainder signals an arithmetic bug and raises
 * ConsistencyError. Parallel execution follows the same block contract as
 * per_ryser.
 */
template <typename Derived>
ExactInt per_glynn(const Eigen::MatrixBase<Derived>& a, int threads = 0,
                   const EngineLimits& limits = {}) {
    detail::require_square(a, "per_glynn");
    const Index m = a.rows();
    if (m > limits.glynn_max)
        throw SizeLimitError("per_glynn accepts size <= " + std::to_string(limits.glynn_max));
    if (m == 0) return 1;
    std::uint64_t max_abs = 0;
    const auto rows = detail::flatten(a, /*by_cols=*/false, &max_abs);
    const auto plan = detail::plan_scan(m, max_abs);
    const std::uint64_t total = std::uint64_t(1) << (m - 1);
    ExactInt sum = 0;
    if (plan.fast) {
        auto partials = detail::run_partitioned<Int256>(
            total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
                return detail::glynn_block_fast(rows, m, lo, hi, plan.chunk_len);
            });
        Int256 s = 0;
        for (const auto& p : partials) s += p;
        sum = ExactInt(s);
    } else {
        auto partials = detail::run_partitioned<ExactInt>(
            total, threads, [&](std::uint64_t lo, std::uint64_t hi) {
                return detail::glynn_block_big(rows, m, lo, hi);
            });
        for (const auto& p : partials) sum += p;
    }
    ExactInt quotient, remainder;
    boost::multiprecision::divide_qr(sum, ExactInt(1) << static_cast<unsigned>(m - 1), quotient,
                                     remainder);
    if (remainder != 0)
        throw ConsistencyError("Glynn sum is not divisible by 2^(m-1); arithmetic bug");
    return quotient;
}

namespace detail {

// Lexicographically next k-combination out of {0, ..., n-1}; false when done.
inline bool next_combination(std::vector<Index>& c, Index n) {
    const Index k = static_cast<Index>(c.size());
    for (Index i = k; i-- > 0;) {
        if (c[static_cast<std::size_t>(i)] < n - (k - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (Index j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/**
 * p_k(B): the sum of the permanents of all k x k submatrices of B, over
 * every pair of row and column subsets of size k. p_0 = 1 by convention.
 */
template <typename Derived>
ExactInt p_k_sum(const Eigen::MatrixBase<Derived>& b, Index k, const EngineLimits& limits = {}) {
    detail::require_square(b, "p_k_sum");
    const Index m = b.rows();
    if (m > limits.expansion_max)
        throw SizeLimitError("p_k_sum accepts size <= " + std::to_string(limits.expansion_max));
    if (k < 0 || k > m) throw std::invalid_argument("submatrix order k must satisfy 0 <= k <= m");
    if (k == 0) return 1;
    std::vector<Index> row_sel(static_cast<std::size_t>(k));
    ExactInt total = 0;
    std::iota(row_sel.begin(), row_sel.end(), Index(0));
    do {
        std::vector<Index> col_sel(static_cast<std::size_t>(k));
        std::iota(col_sel.begin(), col_sel.end(), Index(0));
        do {
            total += per_ryser(b.derived()(row_sel, col_sel), 1, limits);
        } while (detail::next_combination(col_sel, m));
    } while (detail::next_combination(row_sel, m));
    return total;
}

/**
 * @brief Permanent of a +-1 matrix via the sum-expansion identity.
 *
 * Decomposes A = J - 2B with B a (0,1)-matrix and evaluates
 *   Per(A) = sum_{k=0}^{m} (-1)^k 2^k (m-k)! p_k(B)
 * exactly. The k = m term carries (m-m)! = 1.
 */
inline ExactInt per_sum_expansion(const SignMatrix& a, const EngineLimits& limits = {}) {
    const Index m = a.size();
    if (m > limits.expansion_max)
        throw SizeLimitError("per_sum_expansion accepts size <= " +
                             std::to_string(limits.expansion_max));
    if (m == 0) return 1;
    IntMatrix b(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            const Entry v = (1 - a(i, j)) / 2;
            if (v != 0 && v != 1)
                throw ConsistencyError("decomposition A = J - 2B produced a non-(0,1) entry");
            b(i, j) = v;
        }
    ExactInt total = 0;
    ExactInt pow2 = 1;
    for (Index k = 0; k <= m; ++k) {
        const ExactInt term = pow2 * factorial(m - k) * p_k_sum(b, k, limits);
        if (k & 1)
            total -= term;
        else
            total += term;
        pow2 *= 2;
    }
    return total;
}

/**
 * Sylvester fast path: Per(H_n) = 2^n * Per(S_{1,1}) by the Laplace
 * reduction, with the (2^n - 1)-sized minor handled by per_ryser. Valid for
 * 2 <= n <= 5; n = 5 walks 2^31 Gray steps.
 */
inline ExactInt per_sylvester_fast(int n, int threads = 0, const EngineLimits& limits = {}) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("per_sylvester_fast accepts 2 <= n <= 5");
    const SignMatrix s = sylvester(n);
    const IntMatrix reduced = minor(s.entries(), MinorSpec{1, 1});
    return (ExactInt(1) << static_cast<unsigned>(n)) * per_ryser(reduced, threads, limits);
}

/// Dispatch by engine choice. SumExpansion requires +-1 entries and
/// SylvesterFast requires a Sylvester-origin matrix.
inline ExactInt permanent(const SignMatrix& a, EngineChoice engine, int threads = 0,
                          const EngineLimits& limits = {}) {
    switch (engine) {
    case EngineChoice::Naive: return per_naive(a.entries(), limits);
    case EngineChoice::Laplace: return per_laplace(a.entries(), 0, limits);
    case EngineChoice::Ryser: return per_ryser(a.entries(), threads, limits);
    case EngineChoice::Glynn: return per_glynn(a.entries(), threads, limits);
    case EngineChoice::SumExpansion: return per_sum_expansion(a, limits);
    case EngineChoice::SylvesterFast:
        if (!a.is_sylvester())
            throw std::invalid_argument("sylvester-fast requires a Sylvester-origin matrix");
        return per_sylvester_fast(a.sylvester_order(), threads, limits);
    }
    throw std::invalid_argument("unknown engine");
}

inline ExactInt permanent(const IntMatrix& a, EngineChoice engine, int threads = 0,
                          const EngineLimits& limits = {}) {
    switch (engine) {
    case EngineChoice::Naive: return per_naive(a, limits);
    case EngineChoice::Laplace: return per_laplace(a, 0, limits);
    case EngineChoice::Ryser: return per_ryser(a, threads, limits);
    case EngineChoice::Glynn: return per_glynn(a, threads, limits);
    case EngineChoice::SumExpansion: return per_sum_expansion(SignMatrix(a), limits);
    case EngineChoice::SylvesterFast:
        throw std::invalid_argument("sylvester-fast requires a Sylvester-origin matrix");
    }
    throw std::invalid_argument("unknown engine");
}

} // namespace sylperm

#endif
