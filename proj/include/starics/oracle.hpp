#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "starics/perm_core.hpp"
#include "starics/threading.hpp"

namespace starics::oracle {

/// Rank of a permutation in 0..n!-1 (Lehmer code, lexicographic order).
std::uint64_t rank(const Permutation& p);
Permutation unrank(std::uint64_t r, int n);

struct BfsOptions {
  bool allow_ten = false;  // n = 10 needs ~3.5 MB of distances and a few seconds
  int threads = 0;         // 0: STAR_ICS_THREADS or hardware concurrency
};

/// Distances from the identity over the whole Cayley graph ST_n.
struct BfsResult {
  int n = 0;
  std::vector<std::uint8_t> distance;  // indexed by rank
  std::vector<std::uint64_t> histogram;
  int max_distance = 0;
};

/// Thrown when a request would exceed the oracle's resource guard.
class ResourceGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BfsResult bfs(int n, const BfsOptions& options = {});

struct ClassEntry {
  int distance = -1;
  std::uint64_t size = 0;
  bool consistent = true;  // every member at the same distance
};

struct ClassHistogram {
  int n = 0;
  std::map<IcsKey, ClassEntry> classes;
  bool consistent = true;
};

ClassHistogram class_histogram(int n);
ClassHistogram class_histogram(const BfsResult& distances);

/// Distance histogram of the permutations with sigma_1 = symbol.
std::vector<std::uint64_t> eset_histogram(int n, int symbol);
std::vector<std::uint64_t> eset_histogram(const BfsResult& distances, int symbol);

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json diagnostic;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

/// Projects every edge of ST_n onto Gamma_n and checks the quotient claims:
/// projection, class sizes, horizontal fibers and vertical/thread fibers.
VerificationReport verify_quotient(int n, const GammaGraph& gamma);

/// Checks one thread's head and tail classes are adjacent in ST_n by walking
/// a single class representative; no full edge scan.
CheckResult spot_check_thread(const GammaGraph& gamma, const IndexString& tail);

/// Worker count: STAR_ICS_THREADS when set and positive, else hardware concurrency.
int worker_limit();

}  // namespace starics::oracle
