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

#ifndef SYLPERM_MATRIX_HPP
#define SYLPERM_MATRIX_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <bit>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sylperm/errors.hpp"

// glibc historically leaked minor()/major() macros through <sys/types.h>.
#ifdef minor
#undef minor
#endif

namespace sylperm {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Entry type shared by sign matrices and general integer matrices.
using Entry = std::int64_t;
using IntMatrix = DenseMatrix<Entry>;
using Index = Eigen::Index;

/// Largest Sylvester order the generator accepts by default (4096x4096).
inline constexpr int kDefaultMaxSylvesterOrder = 12;
/// Largest matrix dimension accepted by constructors and parsers.
inline constexpr Index kDefaultMaxMatrixSize = Index(1) << kDefaultMaxSylvesterOrder;

/// Removal spec for the minor S_{i,j}: indices are 1-based, matching the
/// usual mathematical notation. Conversion to 0-based happens inside.
struct MinorSpec {
    Index removed_row = 1;
    Index removed_col = 1;
};

/// Square matrix with entries restricted to {+1, -1}.
///
/// A SignMatrix remembers whether it was produced by the Sylvester generator
/// (and at which order) or assembled from general entries. The invariant is
/// checked on construction; instances are immutable afterwards and safe to
/// share across threads.
class SignMatrix {
public:
    /// Wraps a validated +-1 matrix of general origin.
    explicit SignMatrix(IntMatrix entries) : entries_(std::move(entries)) {
        if (entries_.rows() != entries_.cols())
            throw std::invalid_argument("sign matrix must be square");
        for (Index i = 0; i < entries_.rows(); ++i)
            for (Index j = 0; j < entries_.cols(); ++j)
                if (entries_(i, j) != 1 && entries_(i, j) != -1)
                    throw std::invalid_argument("sign matrix entries must be +1 or -1");
    }

    const IntMatrix& entries() const noexcept { return entries_; }
    Index size() const noexcept { return entries_.rows(); }
    Entry operator()(Index row, Index col) const { return entries_(row, col); }

    bool is_sylvester() const noexcept { return sylvester_order_ >= 0; }

    /// Order n with size() == 2^n; only valid when is_sylvester().
    int sylvester_order() const {
        if (!is_sylvester()) throw std::logic_error("matrix is not of Sylvester origin");
        return sylvester_order_;
    }

    bool operator==(const SignMatrix& other) const { return entries_ == other.entries_; }

private:
    friend SignMatrix sylvester(int n, int max_order);

    struct SylvesterTag {};
    SignMatrix(IntMatrix entries, int order, SylvesterTag)
        : entries_(std::move(entries)), sylvester_order_(order) {}

    IntMatrix entries_;
    int sylvester_order_ = -1;
};

/// Builds the 2^n x 2^n Sylvester-Hadamard matrix.
///
/// Production path is the closed form entries[a][c] = (-1)^popcount(a AND c);
/// it is O(1) per entry and makes the row group law literal. The block and
/// Kronecker constructions below exist as independent cross-check routes.
inline SignMatrix sylvester(int n, int max_order = kDefaultMaxSylvesterOrder) {
    if (n < 0) throw std::invalid_argument("Sylvester order must be nonnegative");
    if (n > max_order)
        throw SizeLimitError("Sylvester order " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(max_order));
    const Index m = Index(1) << n;
    IntMatrix entries(m, m);
    for (Index a = 0; a < m; ++a)
        for (Index c = 0; c < m; ++c)
            entries(a, c) =
                (std::popcount(static_cast<std::uint64_t>(a) & static_cast<std::uint64_t>(c)) & 1)
                    ? -1
                    : 1;
    return SignMatrix(std::move(entries), n, SignMatrix::SylvesterTag{});
}

/// Block-recursive construction route: H_n = [H_{n-1}, H_{n-1}; H_{n-1}, -H_{n-1}].
inline IntMatrix sylvester_block_recursive(int n, int max_order = kDefaultMaxSylvesterOrder) {
    if (n < 0) throw std::invalid_argument("Sylvester order must be nonnegative");
    if (n > max_order)
        throw SizeLimitError("Sylvester order exceeds the cap of " + std::to_string(max_order));
    IntMatrix h(1, 1);
    h(0, 0) = 1;
    for (int level = 0; level < n; ++level) {
        const Index half = h.rows();
        IntMatrix next(2 * half, 2 * half);
        next.topLeftCorner(half, half) = h;
        next.topRightCorner(half, half) = h;
        next.bottomLeftCorner(half, half) = h;
        next.bottomRightCorner(half, half) = -h;
        h = std::move(next);
    }
    return h;
}

/// Standard Kronecker product; the result dimension is capped.
template <typename DerivedA, typename DerivedB>
IntMatrix kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                    Index max_size = kDefaultMaxMatrixSize) {
    if (a.rows() * b.rows() > max_size || a.cols() * b.cols() > max_size)
        throw SizeLimitError("Kronecker product size exceeds the cap of " +
                             std::to_string(max_size));
    return Eigen::kroneckerProduct(a.derived(), b.derived());
}

/// Kronecker-power construction route: the n-fold product H (x) ... (x) H.
inline IntMatrix sylvester_kronecker_power(int n, int max_order = kDefaultMaxSylvesterOrder) {
    if (n < 0) throw std::invalid_argument("Sylvester order must be nonnegative");
    if (n > max_order)
        throw SizeLimitError("Sylvester order exceeds the cap of " + std::to_string(max_order));
    IntMatrix base(2, 2);
    base << 1, 1, 1, -1;
    IntMatrix h(1, 1);
    h(0, 0) = 1;
    for (int level = 0; level < n; ++level) h = kronecker(h, base, Index(1) << n);
    return h;
}

/// Deletes the selected row and column (1-based). A 1x1 input yields the 0x0 matrix.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> minor(const Eigen::MatrixBase<Derived>& a, MinorSpec spec) {
    const Index m = a.rows();
    if (a.cols() != m) throw std::invalid_argument("minor requires a square matrix");
    if (m < 1) throw std::invalid_argument("minor requires a nonempty matrix");
    if (spec.removed_row < 1 || spec.removed_row > m || spec.removed_col < 1 ||
        spec.removed_col > m)
        throw std::invalid_argument("minor indices out of range");
    const Index ri = spec.removed_row - 1;
    const Index ci = spec.removed_col - 1;
    DenseMatrix<typename Derived::Scalar> out(m - 1, m - 1);
    for (Index i = 0; i < m; ++i) {
        if (i == ri) continue;
        for (Index j = 0; j < m; ++j) {
            if (j == ci) continue;
            out(i - (i > ri), j - (j > ci)) = a(i, j);
        }
    }
    return out;
}

inline SignMatrix minor(const SignMatrix& a, MinorSpec spec) {
    return SignMatrix(minor(a.entries(), spec));
}

/// Multiplies every row elementwise by row k (0-based). For a Sylvester
/// matrix this permutes the rows: row a becomes row (a XOR k).
inline SignMatrix row_product(const SignMatrix& a, Index k) {
    if (k < 0 || k >= a.size()) throw std::invalid_argument("row index out of range");
    IntMatrix out = a.entries();
    for (Index i = 0; i < out.rows(); ++i)
        out.row(i) = out.row(i).cwiseProduct(a.entries().row(k));
    return SignMatrix(std::move(out));
}

/// True iff A * A^T == m * I holds exactly.
inline bool is_hadamard(const SignMatrix& a) {
    const Index m = a.size();
    const IntMatrix gram = a.entries() * a.entries().transpose();
    IntMatrix expected = IntMatrix::Zero(m, m);
    expected.diagonal().setConstant(m);
    return gram == expected;
}

/// Exact sum and entry product of one line (row or column).
struct LineStat {
    Entry sum = 0;
    Entry product = 1;
};

struct LineStats {
    std::vector<LineStat> rows;
    std::vector<LineStat> cols;
};

inline LineStats line_stats(const SignMatrix& a) {
    const Index m = a.size();
    LineStats stats;
    stats.rows.assign(static_cast<std::size_t>(m), LineStat{});
    stats.cols.assign(static_cast<std::size_t>(m), LineStat{});
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            const Entry e = a(i, j);
            stats.rows[static_cast<std::size_t>(i)].sum += e;
            stats.rows[static_cast<std::size_t>(i)].product *= e;
            stats.cols[static_cast<std::size_t>(j)].sum += e;
            stats.cols[static_cast<std::size_t>(j)].product *= e;
        }
    }
    return stats;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline Entry parse_entry(std::string_view token, long line_no) {
    Entry value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first; // from_chars rejects a leading '+'
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("token '" + std::string(token) + "' does not fit a 64-bit integer",
                         line_no);
    if (ec != std::errc() || ptr != last)
        throw ParseError("token '" + std::string(token) + "' is not an integer", line_no);
    return value;
}

} // namespace detail

/// Parses the shared matrix text format: line 1 holds the size m, lines
/// 2..m+1 hold m whitespace-separated integers each. Rejects non-integer
/// tokens, wrong counts, and trailing garbage, citing the offending line.
inline IntMatrix parse_matrix(std::string_view text, Index max_size = kDefaultMaxMatrixSize) {
    const auto lines = detail::split_lines(text);
    std::size_t line_idx = 0;
    auto next_tokens = [&](long* line_no) -> std::vector<std::string_view> {
        if (line_idx >= lines.size()) {
            *line_no = static_cast<long>(lines.size());
            return {};
        }
        auto tokens = detail::split_tokens(lines[line_idx]);
        ++line_idx;
        *line_no = static_cast<long>(line_idx);
        return tokens;
    };

    long line_no = 0;
    const auto header = next_tokens(&line_no);
    if (header.empty()) throw ParseError("missing matrix size", line_no == 0 ? 1 : line_no);
    if (header.size() != 1)
        throw ParseError("expected a single size token, got " + std::to_string(header.size()),
                         line_no);
    const Entry msize = detail::parse_entry(header[0], line_no);
    if (msize < 0) throw ParseError("matrix size must be nonnegative", line_no);
    if (msize > max_size)
        throw SizeLimitError("matrix size " + std::to_string(msize) + " exceeds the cap of " +
                             std::to_string(max_size));
    const Index m = static_cast<Index>(msize);

    IntMatrix out(m, m);
    for (Index r = 0; r < m; ++r) {
        const auto tokens = next_tokens(&line_no);
        if (tokens.size() != static_cast<std::size_t>(m))
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                                 std::to_string(tokens.size()) + " entries, expected " +
                                 std::to_string(m),
                             line_no);
        for (Index c = 0; c < m; ++c)
            out(r, c) = detail::parse_entry(tokens[static_cast<std::size_t>(c)], line_no);
    }
    for (; line_idx < lines.size(); ++line_idx)
        if (!detail::split_tokens(lines[line_idx]).empty())
            throw ParseError("unexpected content after the last row",
                             static_cast<long>(line_idx + 1));
    return out;
}

/// Parses with the SignMatrix entry restriction; out-of-range entries are
/// reported with their line number.
inline SignMatrix parse_sign_matrix(std::string_view text,
                                    Index max_size = kDefaultMaxMatrixSize) {
    IntMatrix m = parse_matrix(text, max_size);
    // Re-scan for a line-accurate message before the type-level check.
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 1 && m(i, j) != -1)
                throw ParseError("entry '" + std::to_string(m(i, j)) + "' outside {+1, -1}",
                                 static_cast<long>(i) + 2);
    return SignMatrix(std::move(m));
}

inline std::string format_matrix(const IntMatrix& a) {
    std::string out = std::to_string(a.rows());
    out.push_back('\n');
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (j) out.push_back(' ');
            out += std::to_string(a(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

inline std::string format_matrix(const SignMatrix& a) { return format_matrix(a.entries()); }

} // namespace sylperm

#endif
