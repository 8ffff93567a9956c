#include "spiny/finite_map.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "spiny/error.hpp"

namespace spiny {

FiniteMap::FiniteMap(int target_degree, std::vector<int> values)
    : target_degree_(target_degree), values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInput("finite map must have a nonempty source");
  }
  if (target_degree_ < 0) {
    throw InvalidInput("finite map target degree must be nonnegative");
  }
  for (int v : values_) {
    if (v < 0 || v > target_degree_) {
      throw InvalidInput("finite map value " + std::to_string(v) +
                         " outside [" + std::to_string(target_degree_) + "]");
    }
  }
}

FiniteMap FiniteMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  return FiniteMap(n, std::move(v));
}

bool FiniteMap::is_surjective() const { return image_size() == target_degree_ + 1; }

bool FiniteMap::is_injective() const {
  return image_size() == static_cast<int>(values_.size());
}

bool FiniteMap::is_identity() const {
  if (source_degree() != target_degree_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int FiniteMap::image_size() const {
  std::vector<char> hit(static_cast<std::size_t>(target_degree_ + 1), 0);
  int count = 0;
  for (int v : values_) {
    if (!hit[static_cast<std::size_t>(v)]) {
      hit[static_cast<std::size_t>(v)] = 1;
      ++count;
    }
  }
  return count;
}

std::string FiniteMap::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FiniteMap& f) {
  os << "[" << f.source_degree() << "]->[" << f.target_degree() << "](";
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (i) os << ",";
    os << f.values()[i];
  }
  return os << ")";
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (f.target_degree() != g.source_degree()) {
    throw InvalidInput("cannot compose: inner map has target degree " +
                       std::to_string(f.target_degree()) +
                       " but outer map has source degree " +
                       std::to_string(g.source_degree()));
  }
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return FiniteMap(g.target_degree(), std::move(v));
}

EpiMono factor_epi_mono(const FiniteMap& alpha) {
  std::vector<int> image(alpha.values().begin(), alpha.values().end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> rank(static_cast<std::size_t>(alpha.target_degree() + 1), -1);
  for (std::size_t r = 0; r < image.size(); ++r) {
    rank[static_cast<std::size_t>(image[r])] = static_cast<int>(r);
  }
  std::vector<int> epi;
  epi.reserve(alpha.values().size());
  for (int v : alpha.values()) epi.push_back(rank[static_cast<std::size_t>(v)]);
  const int k = static_cast<int>(image.size()) - 1;
  return {FiniteMap(k, std::move(epi)), FiniteMap(alpha.target_degree(), image)};
}

FiniteMap inverse(const FiniteMap& perm) {
  if (!perm.is_bijective()) {
    throw PreconditionViolation("inverse of non-bijective map " + perm.to_string());
  }
  std::vector<int> v(perm.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[static_cast<std::size_t>(perm(static_cast<int>(i)))] = static_cast<int>(i);
  }
  return FiniteMap(perm.source_degree(), std::move(v));
}

namespace maps {

FiniteMap swap01() { return FiniteMap(1, {1, 0}); }

FiniteMap chi() { return FiniteMap(1, {1, 0, 1}); }

FiniteMap iota(int k) { return FiniteMap(1, {k}); }

FiniteMap coface(int n, int i) {
  std::vector<int> v;
  for (int t = 0; t <= n; ++t) {
    if (t != i) v.push_back(t);
  }
  return FiniteMap(n, std::move(v));
}

FiniteMap transposition(int n, int i, int j) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
  return FiniteMap(n, std::move(v));
}

FiniteMap constant(int m, int n, int c) {
  return FiniteMap(n, std::vector<int>(static_cast<std::size_t>(m + 1), c));
}

}  // namespace maps

namespace {

// Odometer over all sequences of length m+1 with entries in [n].
template <typename Keep>
std::vector<FiniteMap> odometer(int m, int n, Keep keep) {
  std::vector<FiniteMap> out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    FiniteMap f(n, v);
    if (keep(f)) out.push_back(std::move(f));
    int pos = m;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) {
      v[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  return out;
}

void restricted_growth(int m, int k, std::vector<int>& v, int pos, int max_used,
                       std::vector<FiniteMap>& out) {
  const int remaining = m + 1 - pos;
  if (pos == m + 1) {
    if (k < 0) {
      out.emplace_back(max_used, v);
    } else if (max_used == k) {
      out.emplace_back(k, v);
    }
    return;
  }
  if (k >= 0 && max_used + remaining < k) return;
  const int limit = k < 0 ? max_used + 1 : std::min(max_used + 1, k);
  for (int c = 0; c <= limit; ++c) {
    v[static_cast<std::size_t>(pos)] = c;
    restricted_growth(m, k, v, pos + 1, std::max(max_used, c), out);
  }
}

}  // namespace

std::vector<FiniteMap> all_maps(int m, int n) {
  return odometer(m, n, [](const FiniteMap&) { return true; });
}

std::vector<FiniteMap> all_surjections(int m, int k) {
  if (k > m) return {};
  return odometer(m, k, [](const FiniteMap& f) { return f.is_surjective(); });
}

std::vector<FiniteMap> all_injections(int m, int n) {
  if (m > n) return {};
  return odometer(m, n, [](const FiniteMap& f) { return f.is_injective(); });
}

std::vector<FiniteMap> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  std::vector<FiniteMap> out;
  do {
    out.emplace_back(n, v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<FiniteMap> canonical_surjections(int m, int k) {
  std::vector<FiniteMap> out;
  if (k > m) return out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  restricted_growth(m, k, v, 1, 0, out);
  return out;
}

FiniteMap canonical_surjection_of(std::span<const int> labels) {
  std::vector<int> out(labels.size());
  std::vector<std::pair<int, int>> seen;  // label -> block
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], next);
      out[i] = next++;
    } else {
      out[i] = it->second;
    }
  }
  return FiniteMap(next - 1, std::move(out));
}

}  // namespace spiny
