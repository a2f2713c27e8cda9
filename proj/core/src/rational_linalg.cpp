#include "mimodof/rational_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace mimodof {

namespace {

// Incremental echelon of augmented rows [coeffs | rhs]. Each added row is
// reduced against the pivots of the rows already present, so membership of a
// dependent row is detected at insertion time and removal is a plain pop.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}

  int size() const { return static_cast<int>(rows_.size()); }

  bool try_add(RatVec aug_row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat c = aug_row[pivot_cols_[i]];
      if (c != Rat(0)) {
        const Rat factor = c / rows_[i][pivot_cols_[i]];
        for (int j = 0; j <= n_; ++j) aug_row[j] -= factor * rows_[i][j];
      }
    }
    int pivot = -1;
    for (int j = 0; j < n_; ++j) {
      if (aug_row[j] != Rat(0)) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    pivot_cols_.push_back(pivot);
    rows_.push_back(std::move(aug_row));
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivot_cols_.pop_back();
  }

  // Valid once size() == n: rows form a column-permuted triangular system.
  RatVec solve() const {
    RatVec x(n_, Rat(0));
    for (int i = n_ - 1; i >= 0; --i) {
      Rat acc = rows_[i][n_];
      for (int k = i + 1; k < n_; ++k) {
        acc -= rows_[i][pivot_cols_[k]] * x[pivot_cols_[k]];
      }
      x[pivot_cols_[i]] = acc / rows_[i][pivot_cols_[i]];
    }
    return x;
  }

 private:
  int n_;
  std::vector<RatVec> rows_;
  std::vector<int> pivot_cols_;
};

}  // namespace

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const int n = static_cast<int>(a.size());
  Echelon e(n);
  for (int i = 0; i < n; ++i) {
    RatVec aug = std::move(a[i]);
    aug.push_back(b[i]);
    if (!e.try_add(std::move(aug))) return std::nullopt;
  }
  return e.solve();
}

int exact_rank(RatMat a) {
  if (a.empty()) return 0;
  const int n = static_cast<int>(a[0].size());
  Echelon e(n);
  int rank = 0;
  for (auto& row : a) {
    row.push_back(Rat(0));
    if (e.try_add(std::move(row))) ++rank;
  }
  return rank;
}

std::vector<RatVec> enumerate_basic_feasible_points(const RatMat& a,
                                                    const RatVec& b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return {};
  const int n = static_cast<int>(a[0].size());
  const int total = m + n;  // inequality rows, then the n sign constraints

  auto constraint_row = [&](int idx) {
    RatVec aug(n + 1, Rat(0));
    if (idx < m) {
      for (int j = 0; j < n; ++j) aug[j] = a[idx][j];
      aug[n] = b[idx];
    } else {
      aug[idx - m] = Rat(1);  // x_j = 0
    }
    return aug;
  };

  auto feasible = [&](const RatVec& x) {
    for (const Rat& v : x) {
      if (v < Rat(0)) return false;
    }
    for (int i = 0; i < m; ++i) {
      Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += a[i][j] * x[j];
      if (lhs > b[i]) return false;
    }
    return true;
  };

  std::set<RatVec> points;
  Echelon e(n);
  // Depth-first over index-increasing constraint subsets; singular
  // combinations are pruned as soon as a dependent row appears.
  auto rec = [&](auto&& self, int start) -> void {
    if (e.size() == n) {
      RatVec x = e.solve();
      if (feasible(x)) points.insert(std::move(x));
      return;
    }
    const int needed = n - e.size();
    for (int i = start; i + needed <= total; ++i) {
      if (e.try_add(constraint_row(i))) {
        self(self, i + 1);
        e.pop();
      }
    }
  };
  rec(rec, 0);

  return {points.begin(), points.end()};
}

}  // namespace mimodof
