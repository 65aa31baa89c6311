#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starics {

/// A permutation of {1..n} in one-line notation: position p (1-based) holds
/// sigma_p. This is a vertex of the star graph ST_n.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `entries` is a bijection of {1..n}, n >= 2.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Symbol at 1-based position `position`.
  int at(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }

  /// 1-based position holding `symbol`.
  int position_of(int symbol) const;

  std::span<const int> entries() const { return entries_; }

  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  friend Permutation apply_star_generator(const Permutation& p, int i);
  std::vector<int> entries_;
};

using Cycle = std::vector<int>;

/// Proper cycles (length >= 2) of a permutation. The cycle through 1 comes
/// first and starts at 1; every other cycle starts at its largest symbol, and
/// those cycles are ordered by decreasing leading symbol. Following a cycle
/// means p -> sigma_p.
struct CycleStructure {
  std::vector<Cycle> cycles;

  int moved_symbols() const;
  int count() const { return static_cast<int>(cycles.size()); }
  bool operator==(const CycleStructure&) const = default;
};

/// Canonical 1-invariant cycle structure: the length of the cycle holding 1
/// (1 when 1 is fixed) plus the sorted lengths of the other proper cycles.
struct IcsKey {
  int c1 = 1;
  std::vector<int> others;

  /// The last index i_j of the matching Lambda vertex: (c1 - 1) + sum(others).
  int last_index() const;

  /// Number of symbols moved by members of the class.
  int support() const;

  /// The class is nonempty in S_n (1 and the other cycles fit in n symbols).
  bool fits(int n) const { return last_index() <= n - 1; }

  auto operator<=>(const IcsKey&) const = default;
  bool operator==(const IcsKey&) const = default;
};

/// Swap the entries at positions 1 and i. Throws std::invalid_argument unless 2 <= i <= n.
Permutation apply_star_generator(const Permutation& p, int i);

CycleStructure cycle_structure(const Permutation& p);

IcsKey ics_key(const Permutation& p);

/// Distance from the identity in ST_n: S + C when 1 is fixed, S + C - 2
/// otherwise, where S counts moved symbols and C counts proper cycles.
int weight(const Permutation& p);

enum class PermFormat {
  automatic,  // compact digits for n <= 9, comma-separated otherwise
  compact,    // one digit per symbol, a=10 .. g=16
  decimal,    // comma-separated
};

std::string format_permutation(const Permutation& p, PermFormat format = PermFormat::automatic);

/// Only the first `length` symbols, compact; used for the ledger's Sigma(u) field.
std::string format_prefix(const Permutation& p, int length);

/// Accepts compact digits ("13254", "a" = 10) or comma/space separated decimals.
Permutation parse_permutation(std::string_view text);

/// "(165.432)"; empty string for the identity.
std::string format_cycles(const CycleStructure& cs);

std::string format_ics(const IcsKey& key);

}  // namespace starics
