#include "sforge/stirling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sforge/errors.hpp"

namespace sforge {

Triangle::Triangle(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("Triangle: no rows");
    for (std::size_t m = 0; m < rows_.size(); ++m)
        if (rows_[m].size() != m + 1)
            throw std::invalid_argument("Triangle: row " + std::to_string(m) + " has wrong length");
}

Integer Triangle::at(unsigned m, unsigned n) const {
    if (m > max_m())
        throw std::out_of_range("Triangle::at: m beyond table");
    return n > m ? Integer(0) : rows_[m][n];
}

std::span<const Integer> Triangle::row(unsigned m) const {
    if (m > max_m())
        throw std::out_of_range("Triangle::row: m beyond table");
    return rows_[m];
}

Integer Triangle::row_sum(unsigned m) const {
    Integer sum = 0;
    for (const auto& v : row(m))
        sum += v;
    return sum;
}

Integer stirling2(unsigned m, unsigned n) {
    if (n > m)
        return 0;
    // col[j] holds S(i, j) after processing row i.
    std::vector<Integer> col(n + 1, Integer(0));
    col[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        const unsigned top = std::min(i, n);
        for (unsigned j = top; j >= 1; --j)
            col[j] = j * col[j] + col[j - 1];
        col[0] = 0;
    }
    return col[n];
}

Integer stirling2_explicit(unsigned m, unsigned n) {
    Integer sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Integer term = binomial(n, k) * pow(Integer(k), m);
        if ((n - k) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    const Integer nf = factorial(n);
    if (!mpz_divisible_p(sum.get_mpz_t(), nf.get_mpz_t()))
        throw IdentityViolation("stirling2_explicit: alternating sum not divisible by n!");
    Integer q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), nf.get_mpz_t());
    return q;
}

std::vector<Integer> set_partition_counts(unsigned m) {
    if (m > kMaxEnumerationSize)
        throw SizeLimitError("set partition enumeration limited to m <= " +
                             std::to_string(kMaxEnumerationSize));
    std::vector<unsigned long> counts(m + 1, 0);
    if (m == 0) {
        counts[0] = 1;
    } else {
        // Restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
        // prefix_max[i] = max(a[0..i]).
        std::vector<unsigned> a(m, 0), prefix_max(m, 0);
        while (true) {
            ++counts[prefix_max[m - 1] + 1];
            // Find the rightmost position that can still be incremented.
            unsigned i = m - 1;
            while (i > 0 && a[i] == prefix_max[i - 1] + 1)
                --i;
            if (i == 0)
                break;
            ++a[i];
            prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
            for (unsigned j = i + 1; j < m; ++j) {
                a[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
        }
    }
    std::vector<Integer> out;
    out.reserve(counts.size());
    for (auto c : counts)
        out.emplace_back(c);
    return out;
}

Integer count_set_partitions(unsigned m, unsigned n) {
    auto row = set_partition_counts(m);
    return n > m ? Integer(0) : row[n];
}

Integer stirling1_unsigned(unsigned m, unsigned k) {
    if (k > m)
        return 0;
    std::vector<Integer> col(k + 1, Integer(0));
    col[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        const unsigned top = std::min(i, k);
        for (unsigned j = top; j >= 1; --j)
            col[j] = col[j - 1] + (i - 1) * col[j];
        col[0] = 0;
    }
    return col[k];
}

Integer stirling1_signed(unsigned m, unsigned k) {
    Integer v = stirling1_unsigned(m, k);
    if (k <= m && (m - k) % 2 == 1)
        v = -v;
    return v;
}

Integer orthogonality_sum(unsigned m, unsigned n) {
    const Triangle s2 = second_kind_table(m);
    // s(k, n) is needed for k <= m only.
    const Triangle s1 = signed_first_kind_table(m);
    Integer sum = 0;
    for (unsigned k = n; k <= m; ++k)
        sum += s2.at(m, k) * s1.at(k, n);
    return sum;
}

namespace {

void check_table_size(unsigned max_m) {
    if (max_m > kMaxTableSize)
        throw SizeLimitError("table size limited to max_m <= " + std::to_string(kMaxTableSize));
}

}  // namespace

Triangle second_kind_table(unsigned max_m) {
    check_table_size(max_m);
    std::vector<std::vector<Integer>> rows(max_m + 1);
    rows[0] = {Integer(1)};
    for (unsigned m = 1; m <= max_m; ++m) {
        auto& prev = rows[m - 1];
        auto& cur = rows[m];
        cur.assign(m + 1, Integer(0));
        for (unsigned n = 1; n <= m; ++n)
            cur[n] = (n < m ? Integer(n * prev[n]) : Integer(0)) + prev[n - 1];
    }
    return Triangle(std::move(rows));
}

Triangle first_kind_table(unsigned max_m) {
    check_table_size(max_m);
    std::vector<std::vector<Integer>> rows(max_m + 1);
    rows[0] = {Integer(1)};
    for (unsigned m = 1; m <= max_m; ++m) {
        auto& prev = rows[m - 1];
        auto& cur = rows[m];
        cur.assign(m + 1, Integer(0));
        for (unsigned k = 1; k <= m; ++k)
            cur[k] = prev[k - 1] + (k < m ? Integer((m - 1) * prev[k]) : Integer(0));
    }
    return Triangle(std::move(rows));
}

Triangle signed_first_kind_table(unsigned max_m) {
    const Triangle unsigned_table = first_kind_table(max_m);
    std::vector<std::vector<Integer>> rows(max_m + 1);
    for (unsigned m = 0; m <= max_m; ++m) {
        auto row = unsigned_table.row(m);
        rows[m].assign(row.begin(), row.end());
        for (unsigned k = 0; k <= m; ++k)
            if ((m - k) % 2 == 1)
                rows[m][k] = -rows[m][k];
    }
    return Triangle(std::move(rows));
}

}  // namespace sforge
