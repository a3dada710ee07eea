#include "contests/contest.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace contests {

Contest::Contest(std::vector<int> periods) : periods_(std::move(periods)) {
  if (periods_.empty()) throw std::invalid_argument("Contest: needs at least one period");
  for (int p : periods_)
    if (p < 1) throw std::invalid_argument("Contest: period sizes must be >= 1");
  n_ = std::accumulate(periods_.begin(), periods_.end(), 0);
  if (n_ > kMaxTotalPlayers)
    throw std::invalid_argument("Contest: more than " + std::to_string(kMaxTotalPlayers) +
                                " players");
}

Contest Contest::first_mover(int n) {
  if (n < 2) throw std::invalid_argument("Contest::first_mover: needs n >= 2");
  return Contest({1, n - 1});
}

Contest Contest::from_id(int n, std::uint64_t id) {
  if (n < 1 || n > kMaxTotalPlayers) throw std::invalid_argument("Contest::from_id: bad n");
  if ((id >> (n - 1)) != 0)
    throw std::invalid_argument("Contest::from_id: id out of range for n");
  std::vector<int> periods;
  int size = 0;
  for (int p = 1; p <= n; ++p) {
    ++size;
    const bool disclose = p < n && (id >> (p - 1)) & 1;
    if (disclose || p == n) {
      periods.push_back(size);
      size = 0;
    }
  }
  return Contest(std::move(periods));
}

Contest Contest::parse(std::string_view text) {
  std::vector<int> periods;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc{} || ptr != text.data() + comma)
      throw std::invalid_argument("Contest::parse: bad literal '" + std::string(text) + "'");
    periods.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Contest(std::move(periods));
}

std::uint64_t Contest::id() const {
  std::uint64_t id = 0;
  int cum = 0;
  for (std::size_t t = 0; t + 1 < periods_.size(); ++t) {
    cum += periods_[t];
    id |= std::uint64_t{1} << (cum - 1);
  }
  return id;
}

std::string Contest::str() const {
  std::string s;
  for (std::size_t t = 0; t < periods_.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(periods_[t]);
  }
  return s;
}

InfoMeasures info_measures(std::span<const int> parts) {
  // coefficients of prod_t (z + n_t); S_k is the z^{T-k} coefficient
  InfoMeasures s(parts.size() + 1, 0);
  s[0] = 1;
  std::size_t used = 0;
  for (int p : parts) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) s[k] += s[k - 1] * p;
  }
  s.erase(s.begin());
  return s;
}

InfoMeasures info_measures(const Contest& c) { return info_measures(std::span(c.periods())); }

InfoMeasures subcontest_measures(const Contest& c, int t) {
  const int T = c.num_periods();
  if (t < 0 || t > T) throw std::out_of_range("subcontest: t out of range");
  return info_measures(std::span(c.periods()).subspan(t));
}

std::optional<Contest> subcontest(const Contest& c, int t) {
  const int T = c.num_periods();
  if (t < 0 || t > T) throw std::out_of_range("subcontest: t out of range");
  if (t == T) return std::nullopt;
  return Contest(std::vector<int>(c.periods().begin() + t, c.periods().end()));
}

bool refines(const Contest& finer, const Contest& coarser) {
  if (finer.n() != coarser.n())
    throw std::invalid_argument("refines: contests must have the same player count");
  const std::uint64_t f = finer.id(), c = coarser.id();
  return (f & c) == c;
}

void for_each_contest(int n, const std::function<void(const Contest&)>& fn, int max_n) {
  if (n < 1 || n > max_n || n > kMaxTotalPlayers)
    throw std::invalid_argument("for_each_contest: n out of range [1, " +
                                std::to_string(std::min(max_n, kMaxTotalPlayers)) + "]");
  std::vector<int> parts;
  // lexicographic: extend with every first part, recurse on the remainder
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(Contest(parts));
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  rec(rec, n);
}

std::vector<Contest> enumerate_contests(int n, int max_n) {
  std::vector<Contest> out;
  if (n <= 24) out.reserve(std::size_t{1} << (n - 1));
  for_each_contest(n, [&](const Contest& c) { out.push_back(c); }, max_n);
  return out;
}

}  // namespace contests
