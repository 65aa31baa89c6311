#include "starics/distributions.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace starics {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
}

// Walks every 1-ics class of S_n once: the sorted non-1 cycle lengths (parts
// >= 2, the prefix of the index string) and, for each, every length of 1's
// cycle that still fits. `visit(weight, last_index, denominator)` receives the
// class weight, i_j, and prod l^{mult_l} mult_l! over the parts.
template <typename Visit>
void for_each_class(int n, Visit&& visit) {
  struct Frame {
    int sum;
    int parts;
    int last_part;
    int run;  // multiplicity of last_part so far
    BigInt denominator;
  };
  std::vector<Frame> stack{{0, 0, 2, 0, BigInt(1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (int last_index = f.sum; last_index <= n - 1; ++last_index)
      visit(last_index + f.parts, last_index, f.denominator);
    for (int part = f.last_part; f.sum + part <= n - 1; ++part) {
      const int run = part == f.last_part ? f.run + 1 : 1;
      stack.push_back({f.sum + part, f.parts + 1, part, run, f.denominator * part * run});
    }
  }
}

std::vector<BigInt> falling_table(int n) {
  std::vector<BigInt> table(static_cast<std::size_t>(n));
  table[0] = 1;
  for (int i = 1; i < n; ++i) table[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(i - 1)] * (n - i);
  return table;
}

// d[s][c]: permutations of s symbols with c cycles, all of length >= 2.
std::vector<std::vector<BigInt>> derangement_cycle_table(int max_s) {
  std::vector<std::vector<BigInt>> d(static_cast<std::size_t>(max_s) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(max_s) / 2 + 2));
  d[0][0] = 1;
  for (int s = 2; s <= max_s; ++s)
    for (int c = 1; c <= s / 2; ++c)
      d[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] =
          (s - 1) * (d[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(c)] +
                     d[static_cast<std::size_t>(s - 2)][static_cast<std::size_t>(c - 1)]);
  return d;
}

// q[s][c]: partitions of s into exactly c parts, each >= 2.
std::vector<std::vector<BigInt>> partition_table(int max_s) {
  // p[m][k]: partitions of m into exactly k positive parts.
  std::vector<std::vector<BigInt>> p(static_cast<std::size_t>(max_s) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(max_s) + 1));
  p[0][0] = 1;
  for (int m = 1; m <= max_s; ++m)
    for (int k = 1; k <= m; ++k)
      p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          p[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
          p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
  std::vector<std::vector<BigInt>> q(static_cast<std::size_t>(max_s) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(max_s) / 2 + 2));
  for (int s = 0; s <= max_s; ++s)
    for (int c = 0; 2 * c <= s; ++c)
      q[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] =
          p[static_cast<std::size_t>(s - c)][static_cast<std::size_t>(c)];
  return q;
}

// Weight of a class with 1's cycle of length c1 and `cycles` other proper
// cycles covering `moved` symbols.
int class_weight(int c1, int moved, int cycles) {
  return c1 == 1 ? moved + cycles : moved + cycles + c1 - 1;
}

}  // namespace

int diameter(int n) {
  require_n(n);
  return (n - 1) / 2 + n - 1;
}

WeightDistribution::WeightDistribution(int n, DistributionKind kind, std::vector<BigInt> counts)
    : n_(n), kind_(kind), counts_(std::move(counts)) {
  require_n(n);
  if (static_cast<int>(counts_.size()) != diameter(n) + 1)
    throw std::logic_error("weight distribution of ST_" + std::to_string(n) + " must have D(n)+1 entries");
  for (std::size_t w = 0; w < counts_.size(); ++w)
    if (counts_[w] <= 0)
      throw std::logic_error("weight " + std::to_string(w) + " unrealized in ST_" + std::to_string(n));
}

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

WeightDistribution vertex_weight_distribution(int n, Method method) {
  require_n(n);
  std::vector<BigInt> counts(static_cast<std::size_t>(diameter(n)) + 1);
  if (method == Method::enumerate) {
    const auto falling = falling_table(n);
    for_each_class(n, [&](int w, int last_index, const BigInt& denominator) {
      counts[static_cast<std::size_t>(w)] +=
          exact_divide(falling[static_cast<std::size_t>(last_index)], denominator, "class cardinality");
    });
  } else {
    const auto d = derangement_cycle_table(n);
    for (int c1 = 1; c1 <= n; ++c1) {
      const BigInt first_cycle = falling_factorial(n - 1, c1 - 1);
      for (int moved = 0; moved <= n - c1; ++moved) {
        const BigInt placed = first_cycle * binomial(n - c1, moved);
        for (int cycles = 0; 2 * cycles <= moved; ++cycles) {
          const auto& ways = d[static_cast<std::size_t>(moved)][static_cast<std::size_t>(cycles)];
          if (ways == 0) continue;
          counts[static_cast<std::size_t>(class_weight(c1, moved, cycles))] += placed * ways;
        }
      }
    }
  }
  return WeightDistribution(n, DistributionKind::vertices, std::move(counts));
}

WeightDistribution class_weight_distribution(int n, Method method) {
  require_n(n);
  std::vector<BigInt> counts(static_cast<std::size_t>(diameter(n)) + 1);
  if (method == Method::enumerate) {
    for_each_class(n, [&](int w, int, const BigInt&) { counts[static_cast<std::size_t>(w)] += 1; });
  } else {
    const auto q = partition_table(n);
    for (int c1 = 1; c1 <= n; ++c1)
      for (int moved = 0; moved <= n - c1; ++moved)
        for (int cycles = 0; 2 * cycles <= moved; ++cycles) {
          const auto& ways = q[static_cast<std::size_t>(moved)][static_cast<std::size_t>(cycles)];
          if (ways == 0) continue;
          counts[static_cast<std::size_t>(class_weight(c1, moved, cycles))] += ways;
        }
  }
  return WeightDistribution(n, DistributionKind::classes, std::move(counts));
}

BigInt antipode_count(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("antipode_count needs odd n >= 3, got " + std::to_string(n));
  BigInt product = 1;
  for (int k = n - 2; k >= 3; k -= 2) product *= k;
  return product;
}

BigInt EsetDistribution::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

EsetDistribution eset_distribution(int n, int symbol) {
  if (n < 3) throw std::invalid_argument("eset_distribution needs n >= 3, got " + std::to_string(n));
  if (symbol < 1 || symbol > n)
    throw std::invalid_argument("symbol " + std::to_string(symbol) + " outside 1.." + std::to_string(n));
  EsetDistribution out;
  out.n = n;
  out.symbol = symbol;
  out.counts.assign(static_cast<std::size_t>(diameter(n)) + 1, BigInt(0));

  const auto smaller = vertex_weight_distribution(n - 1);
  for (int w = 1; w <= diameter(n); ++w)
    if (w - 1 <= smaller.max_weight()) out.counts[static_cast<std::size_t>(w)] = smaller[w - 1];
  if (symbol >= 2) return out;

  const auto whole = vertex_weight_distribution(n);
  for (int w = 0; w <= diameter(n); ++w) {
    auto& c = out.counts[static_cast<std::size_t>(w)];
    c = whole[w] - (n - 1) * c;
  }
  return out;
}

BigInt S(int j, int h) {
  if (h < 0) throw std::invalid_argument("S needs h >= 0");
  if (j <= 0) return 0;
  return binomial(j + h - 1, h);
}

BigInt S_by_recurrence(int j, int h) {
  if (h < 0) throw std::invalid_argument("S needs h >= 0");
  if (j <= 0) return 0;
  // row[k] = S_k^level for k = 1..j
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, BigInt(1));
  row[0] = 0;
  for (int level = 1; level <= h; ++level) {
    std::vector<BigInt> next(row.size());
    BigInt running = 0;
    for (int k = 1; k <= j; ++k) {
      running += row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = running;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

BigInt W_enum(int omega, int length, std::optional<int> n) {
  if (omega < 0 || length < 1) throw std::invalid_argument("W_enum needs omega >= 0 and length >= 1");
  const int last_index = omega - (length - 1);
  if (last_index < 0) return 0;
  if (n && last_index > *n - 1) return 0;
  const int parts = length - 1;
  if (parts == 0) return 1;
  // Nondecreasing prefixes of `parts` steps, each >= 2, with sum <= last_index;
  // the final step absorbs the remainder.
  BigInt total = 0;
  std::vector<int> stack_sum{0}, stack_count{0}, stack_min{2};
  while (!stack_sum.empty()) {
    const int sum = stack_sum.back(), count = stack_count.back(), min_part = stack_min.back();
    stack_sum.pop_back();
    stack_count.pop_back();
    stack_min.pop_back();
    if (count == parts) {
      total += 1;
      continue;
    }
    const int remaining = parts - count;
    for (int part = min_part; sum + part * remaining <= last_index; ++part) {
      stack_sum.push_back(sum + part);
      stack_count.push_back(count + 1);
      stack_min.push_back(part);
    }
  }
  return total;
}

BigInt W_restricted(int omega, int length, int n) {
  require_n(n);
  return W_enum(omega, length, n);
}

BigInt W_closed(int omega, int k) {
  if (omega < 0 || k < 0) throw std::invalid_argument("W_closed needs omega >= 0 and k >= 0");
  BigInt total = 0;
  for (int i = 0; i <= omega / (k + 1); ++i) total += S(omega - i * (k + 1), k);
  return total;
}

BigInt W_closed_bounded(int omega, int k, int n) {
  require_n(n);
  BigInt value = W_closed(omega, k);
  if (k < n) return value;
  for (int j = 0; j <= k - n; ++j) value -= W_closed(omega, j);
  return value;
}

std::vector<ClosedFormComparison> compare_closed_forms(int max_omega, int max_k) {
  std::vector<ClosedFormComparison> rows;
  for (int omega = 0; omega <= max_omega; ++omega)
    for (int k = 1; k <= max_k; ++k) rows.push_back({omega, k, W_closed(omega, k), W_enum(omega, k)});
  return rows;
}

}  // namespace starics
