#include "updown/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace updown {

StrictPartition::StrictPartition(std::vector<std::int64_t> parts)
    : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("StrictPartition: parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument(
          "StrictPartition: parts must be strictly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool StrictPartition::contains(const StrictPartition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

std::string StrictPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

namespace {

void enumerate_rec(std::int64_t n, std::int64_t max_part,
                   std::vector<std::int64_t>& prefix,
                   std::vector<StrictPartition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Largest first part first gives decreasing lexicographic order.
  for (std::int64_t p = std::min<std::int64_t>(max_part, n); p >= 1; --p) {
    // The remainder must be a sum of distinct parts < p, whose maximum is
    // p(p-1)/2.
    std::int64_t rest = n - p;
    if (rest > p * (p - 1) / 2) break;
    prefix.push_back(p);
    enumerate_rec(rest, p - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(std::int64_t n) {
  if (n < 0) throw std::domain_error("enumerate_strict: negative weight");
  std::vector<StrictPartition> out;
  std::vector<std::int64_t> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::uint64_t count_strict(std::int64_t n) {
  if (n < 0) throw std::domain_error("count_strict: negative weight");
  // Partitions into distinct parts, counted by the standard weight-bounded
  // dynamic program.
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (std::int64_t p = 1; p <= n; ++p)
    for (std::int64_t w = n; w >= p; --w) dp[w] += dp[w - p];
  return dp[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> addable_contents(const StrictPartition& la) {
  const auto& p = la.parts();
  const std::size_t l = p.size();
  std::vector<std::int64_t> xs;
  // New one-box row (content 0): allowed when the diagram is empty or its
  // last row has at least two boxes.
  if (l == 0 || p[l - 1] >= 2) xs.push_back(0);
  // Extending row i (content lambda_i): allowed for the first row always,
  // otherwise when the gap to the previous row leaves space.
  for (std::size_t i = l; i-- > 0;) {
    if (i == 0 || p[i] + 1 < p[i - 1]) xs.push_back(p[i]);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::vector<std::int64_t> removable_contents(const StrictPartition& la) {
  const auto& p = la.parts();
  const std::size_t l = p.size();
  std::vector<std::int64_t> ys;
  for (std::size_t i = 0; i < l; ++i) {
    // Shrinking row i (content lambda_i - 1): allowed for the last row
    // always, otherwise when the result stays strictly decreasing.
    if (i + 1 == l || p[i] - 1 > p[i + 1]) ys.push_back(p[i] - 1);
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

StrictPartition add_box(const StrictPartition& la, std::int64_t content) {
  auto p = la.parts();
  if (content == 0) {
    if (!p.empty() && p.back() < 2)
      throw std::domain_error("add_box: content 0 is not addable to " +
                              la.to_string());
    p.push_back(1);
    return StrictPartition(std::move(p));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == content) {
      if (i > 0 && p[i] + 1 >= p[i - 1])
        throw std::domain_error("add_box: content " + std::to_string(content) +
                                " is not addable to " + la.to_string());
      ++p[i];
      return StrictPartition(std::move(p));
    }
  }
  throw std::domain_error("add_box: content " + std::to_string(content) +
                          " is not addable to " + la.to_string());
}

StrictPartition remove_box(const StrictPartition& la, std::int64_t content) {
  auto p = la.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == content + 1) {
      if (i + 1 < p.size() && p[i] - 1 <= p[i + 1])
        throw std::domain_error("remove_box: content " +
                                std::to_string(content) +
                                " is not removable from " + la.to_string());
      --p[i];
      if (p[i] == 0) p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
      return StrictPartition(std::move(p));
    }
  }
  throw std::domain_error("remove_box: content " + std::to_string(content) +
                          " is not removable from " + la.to_string());
}

KerovCoordinates kerov_coordinates(const StrictPartition& la) {
  return KerovCoordinates{addable_contents(la), removable_contents(la)};
}

bool interlacing_valid(const KerovCoordinates& kc) {
  const auto& X = kc.X;
  const auto& Y = kc.Y;
  auto ascending = [](const std::vector<std::int64_t>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] <= v[i - 1]) return false;
    return true;
  };
  if (!ascending(X) || !ascending(Y)) return false;
  if (X.empty()) return false;
  if (X[0] == 0) {
    // 0 = x_0 < y_1 < x_1 < ... < y_d < x_d
    if (X.size() != Y.size() + 1) return false;
    std::int64_t prev = 0;
    for (std::size_t j = 0; j < Y.size(); ++j) {
      if (!(prev < Y[j] && Y[j] < X[j + 1])) return false;
      prev = X[j + 1];
    }
    return true;
  }
  // 0 = y_1 < x_1 < y_2 < ... < y_d < x_d
  if (X.size() != Y.size()) return false;
  if (Y.empty() || Y[0] != 0) return false;
  for (std::size_t j = 0; j < Y.size(); ++j) {
    if (!(Y[j] < X[j])) return false;
    if (j + 1 < Y.size() && !(X[j] < Y[j + 1])) return false;
  }
  return true;
}

StrictPartition from_kerov(const KerovCoordinates& kc) {
  if (!interlacing_valid(kc))
    throw std::invalid_argument("from_kerov: coordinates do not interlace");
  // Drop a leading 0 from X; what remains pairs with Y as y_j < x_j.
  std::vector<std::int64_t> xs(kc.X.begin() + (kc.X[0] == 0 ? 1 : 0),
                               kc.X.end());
  const auto& ys = kc.Y;
  // The diagram consists, for j = d..1, of the run of rows with lengths
  // x_j, x_j - 1, ..., y_j + 1.
  std::vector<std::int64_t> parts;
  for (std::size_t j = xs.size(); j-- > 0;) {
    for (std::int64_t v = xs[j]; v > ys[j]; --v) parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

int edge_multiplicity(const StrictPartition& mu, const StrictPartition& la) {
  if (la.weight() != mu.weight() + 1) return 0;
  const auto& a = mu.parts();
  const auto& b = la.parts();
  if (b.size() == a.size()) {
    // One row grew by one box.
    std::size_t diffs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] == a[i]) continue;
      if (b[i] != a[i] + 1) return 0;
      ++diffs;
    }
    return diffs == 1 ? 2 : 0;
  }
  if (b.size() == a.size() + 1) {
    // A new one-box row appeared.
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b[i] != a[i]) return 0;
    return b.back() == 1 ? 1 : 0;
  }
  return 0;
}

FrobeniusDouble double_diagram(const StrictPartition& la) {
  FrobeniusDouble fd;
  fd.twice_a.reserve(la.length());
  fd.twice_b.reserve(la.length());
  for (auto p : la.parts()) {
    fd.twice_a.push_back(2 * p + 1);
    fd.twice_b.push_back(2 * p - 1);
  }
  return fd;
}

}  // namespace updown
