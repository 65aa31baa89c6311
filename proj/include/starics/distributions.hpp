#pragma once

#include <optional>
#include <vector>

#include "starics/big_int.hpp"

namespace starics {

/// Diameter of ST_n: floor((n-1)/2) + n - 1.
int diameter(int n);

enum class DistributionKind { vertices, classes };

/// Exact counts per weight omega = 0..D(n). Every weight is realized, so a
/// zero entry means a construction bug and is rejected.
class WeightDistribution {
 public:
  WeightDistribution(int n, DistributionKind kind, std::vector<BigInt> counts);

  int n() const { return n_; }
  DistributionKind kind() const { return kind_; }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& operator[](int omega) const { return counts_.at(static_cast<std::size_t>(omega)); }
  int max_weight() const { return static_cast<int>(counts_.size()) - 1; }
  BigInt total() const;

 private:
  int n_;
  DistributionKind kind_;
  std::vector<BigInt> counts_;
};

enum class Method {
  enumerate,     // walk every admissible string (1-ics class)
  cycle_counts,  // aggregate by (c1, moved symbols, cycle count); polynomial in n
};

WeightDistribution vertex_weight_distribution(int n, Method method = Method::enumerate);
WeightDistribution class_weight_distribution(int n, Method method = Method::enumerate);

/// (n-2)(n-4)...3 for odd n >= 3.
BigInt antipode_count(int n);

/// Weight distribution of the E-set C_i = {sigma : sigma_1 = i} in ST_n.
struct EsetDistribution {
  int n = 0;
  int symbol = 0;
  std::vector<BigInt> counts;  // length D(n) + 1

  BigInt total() const;
};

EsetDistribution eset_distribution(int n, int symbol);

/// S_j^h = C(j+h-1, h); 0 for j <= 0.
BigInt S(int j, int h);
/// S_j^h through S_j^0 = 1 and S_j^h = sum_{k=1}^{j} S_k^{h-1}.
BigInt S_by_recurrence(int j, int h);

/// Admissible strings of weight omega with exactly `length` indices, optionally
/// restricted to i_j <= n - 1.
BigInt W_enum(int omega, int length, std::optional<int> n = std::nullopt);
BigInt W_restricted(int omega, int length, int n);

/// Literal evaluation of the closed-form string count sum_i S_{omega-i(k+1)}^k.
/// Experimental: it does not match W_enum.
BigInt W_closed(int omega, int k);
/// Literal evaluation of the bounded variant built on W_closed. Experimental.
BigInt W_closed_bounded(int omega, int k, int n);

struct ClosedFormComparison {
  int omega = 0;
  int k = 0;
  BigInt closed;
  BigInt enumerated;
};

/// W_closed against W_enum (unbounded) for 0 <= omega <= max_omega, 1 <= k <= max_k.
std::vector<ClosedFormComparison> compare_closed_forms(int max_omega, int max_k);

}  // namespace starics
