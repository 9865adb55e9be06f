#pragma once

// Stirling numbers of both kinds.
//
// The triangular recurrences are the reference computation.  The explicit
// alternating sum and the set-partition enumeration exist as independent
// witnesses and are slower by design of what they compute.

#include <cstddef>
#include <span>
#include <vector>

#include "sforge/exactnum.hpp"

namespace sforge {

/// Lower-triangular table entry(m, n) for 0 <= n <= m <= max_m.
class Triangle {
public:
    explicit Triangle(std::vector<std::vector<Integer>> rows);

    unsigned max_m() const { return static_cast<unsigned>(rows_.size() - 1); }

    /// Zero outside the stored triangle (n > m).  Throws std::out_of_range
    /// when m > max_m.
    Integer at(unsigned m, unsigned n) const;

    /// Row m holds entries n = 0..m.
    std::span<const Integer> row(unsigned m) const;

    Integer row_sum(unsigned m) const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::vector<std::vector<Integer>> rows_;
};

inline constexpr unsigned kMaxTableSize = 200;
inline constexpr unsigned kMaxEnumerationSize = 12;

/// S(m, n) from S(m,n) = n S(m-1,n) + S(m-1,n-1).  Only the columns up to n
/// are evaluated.
Integer stirling2(unsigned m, unsigned n);

/// S(m, n) = (1/n!) sum_k C(n,k) (-1)^(n-k) k^m, with 0^0 = 1.
/// Throws IdentityViolation if the final division is inexact.
Integer stirling2_explicit(unsigned m, unsigned n);

/// Number of partitions of {1..m} into exactly n non-empty blocks, found by
/// enumerating restricted growth strings.  Throws SizeLimitError for m > 12.
Integer count_set_partitions(unsigned m, unsigned n);

/// Entry n of the result counts partitions of {1..m} into n blocks, for
/// n = 0..m.  One enumeration pass serves the whole row.
/// Throws SizeLimitError for m > 12.
std::vector<Integer> set_partition_counts(unsigned m);

/// Unsigned first-kind number from s(m,k) = s(m-1,k-1) + (m-1) s(m-1,k).
Integer stirling1_unsigned(unsigned m, unsigned k);

/// (-1)^(m-k) times the unsigned first-kind number.
Integer stirling1_signed(unsigned m, unsigned k);

/// sum_k S(m,k) s(k,n); equals 1 when m == n and 0 otherwise.
Integer orthogonality_sum(unsigned m, unsigned n);

/// Second-kind triangle.  Throws SizeLimitError when max_m > 200.
Triangle second_kind_table(unsigned max_m);

/// Unsigned first-kind triangle.  Throws SizeLimitError when max_m > 200.
Triangle first_kind_table(unsigned max_m);

/// Signed first-kind triangle.  Throws SizeLimitError when max_m > 200.
Triangle signed_first_kind_table(unsigned max_m);

}  // namespace sforge
