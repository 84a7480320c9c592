#include "plancat/fuss_catalan.hpp"

#include <stdexcept>

namespace plancat {

BigCount binomial(long long top, long long bottom) {
    if (bottom == -1) return top == -1 ? 1 : 0;
    if (bottom < 0 || top < bottom) return 0;
    if (bottom > top - bottom) bottom = top - bottom;
    BigCount result = 1;
    for (long long i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;  // product of i consecutive integers is divisible by i!
    }
    return result;
}

BigCount fuss_catalan(int p, int n) {
    if (p < 1) throw std::invalid_argument("fuss_catalan requires p >= 1");
    if (n < 0) throw std::invalid_argument("fuss_catalan requires n >= 0");
    const long long top = static_cast<long long>(p) * n + 1;
    BigCount numerator = binomial(top, n);
    BigCount quotient, remainder;
    boost::multiprecision::divide_qr(numerator, BigCount(top), quotient, remainder);
    if (remainder != 0) throw std::logic_error("fuss_catalan division not exact");
    return quotient;
}

namespace {

std::vector<BigCount> next_row(int p, int n, const std::vector<BigCount>& prev) {
    // prev holds F^p(n-1, 0..n-1).
    std::vector<BigCount> row(n + 1);
    row[0] = 0;
    for (int k = 1; k <= n; ++k) {
        BigCount sum = 0;
        for (int j = k - 1; j <= n - 1; ++j)
            sum += binomial(j - k + p - 1, p - 2) * prev[j];
        row[k] = std::move(sum);
    }
    return row;
}

}  // namespace

std::vector<BigCount> triangle_row(int p, int n) {
    if (p < 1) throw std::invalid_argument("triangle_row requires p >= 1");
    if (n < 0) throw std::invalid_argument("triangle_row requires n >= 0");
    std::vector<BigCount> row = {1};
    for (int i = 1; i <= n; ++i) row = next_row(p, i, row);
    return row;
}

BigCount t_entry(int p, int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("t_entry index out of range");
    return triangle_row(p, n)[n - k];
}

Triangle::Triangle(int p, int max_n) : p_(p) {
    if (p < 1) throw std::invalid_argument("Triangle requires p >= 1");
    if (max_n < 0) throw std::invalid_argument("Triangle requires max_n >= 0");
    rows_.reserve(max_n + 1);
    rows_.push_back({1});
    for (int n = 1; n <= max_n; ++n) rows_.push_back(next_row(p, n, rows_.back()));
}

BigCount Triangle::row_sum(int n) const {
    BigCount sum = 0;
    for (const auto& v : rows_[n]) sum += v;
    return sum;
}

}  // namespace plancat
