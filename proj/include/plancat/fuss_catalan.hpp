#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

// Exact arithmetic: the one-parameter Fuss-Catalan numbers
// A(p, n) = C(p*n + 1, n) / (p*n + 1) and the triangle F^p(n, k) they row-sum
// to. Everything is exact integer arithmetic; no floating point.

namespace plancat {

using BigCount = boost::multiprecision::cpp_int;

// Exact binomial coefficient by multiplicative evaluation with running
// division. bottom = -1 uses the convention C(-1, -1) = 1, C(x, -1) = 0
// otherwise, which is what the p = 1 triangle recurrence needs; any other
// negative bottom (or top < bottom) gives 0.
BigCount binomial(long long top, long long bottom);

// A(p, n) = C(p*n + 1, n) / (p*n + 1). The division is always exact; p >= 1.
BigCount fuss_catalan(int p, int n);

// Row n of the triangle: F^p(n, k) for k = 0..n, from the initial conditions
// F^p(0,0) = 1, F^p(n,0) = 0 (n > 0) and
//   F^p(n, k) = sum_{j=k-1}^{n-1} C(j - k + p - 1, p - 2) * F^p(n-1, j).
std::vector<BigCount> triangle_row(int p, int n);

// The reflected triangle entry T^p(n, k) = F^p(n, n - k); 0 <= k <= n.
BigCount t_entry(int p, int n, int k);

// Rows 0..max_n of F^p, computed once, with row sums available.
class Triangle {
  public:
    Triangle(int p, int max_n);

    int p() const { return p_; }
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<BigCount>& row(int n) const { return rows_[n]; }
    BigCount row_sum(int n) const;

  private:
    int p_;
    std::vector<std::vector<BigCount>> rows_;
};

}  // namespace plancat
