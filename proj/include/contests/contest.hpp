#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace contests {

/// Hard cap on the total player count; keeps every information measure
/// exactly representable in 64-bit integers (worst case C(64,32) < 2^63).
constexpr int kMaxTotalPlayers = 64;

/// A disclosure structure: players arrive in periods of sizes (n_1,...,n_T),
/// and cumulative effort is disclosed after each period. Equivalently an
/// ordered composition of the player count n.
class Contest {
 public:
  explicit Contest(std::vector<int> periods);

  static Contest simultaneous(int n) { return Contest({n}); }
  static Contest sequential(int n) { return Contest(std::vector<int>(n, 1)); }
  static Contest first_mover(int n);

  /// Composition from its disclosure bitmask: bit p-1 set means cumulative
  /// effort is disclosed after player p (p = 1..n-1).
  static Contest from_id(int n, std::uint64_t id);

  /// Parses a comma list such as "1,2,2".
  static Contest parse(std::string_view text);

  const std::vector<int>& periods() const { return periods_; }
  int n() const { return n_; }
  int num_periods() const { return static_cast<int>(periods_.size()); }

  /// Disclosure bitmask; the deterministic identifier used in output files.
  std::uint64_t id() const;

  std::string str() const;

  bool operator==(const Contest&) const = default;

 private:
  std::vector<int> periods_;
  int n_ = 0;
};

/// Information measures S_k = elementary symmetric polynomials of the period
/// sizes, k = 1..T, via the Vieta product recurrence in exact integers.
using InfoMeasures = std::vector<std::int64_t>;

InfoMeasures info_measures(std::span<const int> parts);
InfoMeasures info_measures(const Contest& c);

/// Measures of the subcontest starting after period t (empty when t = T).
InfoMeasures subcontest_measures(const Contest& c, int t);

/// Subcontest (n_{t+1},...,n_T); t = 0 returns the contest itself and t = T
/// the empty subcontest (nullopt).
std::optional<Contest> subcontest(const Contest& c, int t);

/// True when `coarser` can be obtained by merging consecutive periods of
/// `finer`, i.e. the disclosure set of `coarser` is a subset of `finer`'s.
/// Reflexive. Throws on mismatched player totals.
bool refines(const Contest& finer, const Contest& coarser);

/// All 2^{n-1} compositions of n in lexicographic order.
std::vector<Contest> enumerate_contests(int n, int max_n = kMaxTotalPlayers);
void for_each_contest(int n, const std::function<void(const Contest&)>& fn,
                      int max_n = kMaxTotalPlayers);

}  // namespace contests
