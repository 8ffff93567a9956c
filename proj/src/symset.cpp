#include "spiny/symset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "spiny/error.hpp"

namespace spiny {

namespace {

void sort_unique(std::vector<SimplexMatrix>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<SimplexMatrix>& v, const SimplexMatrix& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// The maps whose action generates closure of a nondegenerate n-simplex.
std::vector<FiniteMap> closure_generators(int n) {
  std::vector<FiniteMap> out;
  out.push_back(maps::coface(n, n));
  for (int i = 0; i < n; ++i) out.push_back(maps::transposition(n, i, i + 1));
  return out;
}

std::string describe(const EdgeStructure& e, const SimplexMatrix& x) {
  if (x.degree() == 1 && x(0, 1) < e.num_edges()) return "edge '" + e.edge_name(x(0, 1)) + "'";
  if (x.degree() == 0 && x(0, 0) < e.num_edges()) {
    return "object '" + e.object_name(e.dom(x(0, 0))) + "'";
  }
  return "simplex " + x.to_string(e);
}

}  // namespace

TruncatedSymSet::TruncatedSymSet(int truncation, EdgeStructure edges,
                                 std::vector<std::vector<SimplexMatrix>> nondegenerate)
    : truncation_(truncation), edges_(std::move(edges)) {
  if (truncation_ < 1) {
    throw InvalidInput("truncation must be at least 1, got " + std::to_string(truncation_));
  }
  basis_.resize(std::max<std::size_t>(static_cast<std::size_t>(truncation_) + 1,
                                      nondegenerate.size()));
  for (ObjectId o = 0; o < edges_.num_objects(); ++o) {
    basis_[0].push_back(SimplexMatrix::of_object(edges_, o));
  }
  for (EdgeId f = 0; f < edges_.num_edges(); ++f) {
    if (!edges_.is_identity(f)) basis_[1].push_back(SimplexMatrix::of_edge(edges_, f));
  }
  for (std::size_t n = 2; n < nondegenerate.size(); ++n) {
    for (auto& x : nondegenerate[n]) {
      if (x.degree() != static_cast<int>(n)) {
        throw InvalidInput("simplex of degree " + std::to_string(x.degree()) +
                           " listed under degree " + std::to_string(n));
      }
    }
    basis_[n] = std::move(nondegenerate[n]);
  }
  for (auto& level : basis_) sort_unique(level);
  while (basis_.size() > static_cast<std::size_t>(truncation_) + 1 && basis_.back().empty()) {
    basis_.pop_back();
  }
}

std::span<const SimplexMatrix> TruncatedSymSet::nondegenerate(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= basis_.size()) return {};
  return basis_[static_cast<std::size_t>(n)];
}

std::size_t TruncatedSymSet::total_nondegenerate() const {
  std::size_t total = 0;
  for (const auto& level : basis_) total += level.size();
  return total;
}

std::uint64_t TruncatedSymSet::simplex_count(int n) const {
  std::uint64_t total = 0;
  for (int k = 0; k <= n && static_cast<std::size_t>(k) < basis_.size(); ++k) {
    total += basis_[static_cast<std::size_t>(k)].size() * stirling2(n + 1, k + 1);
  }
  return total;
}

void TruncatedSymSet::for_each_simplex(
    int n, const std::function<void(const SimplexMatrix&)>& f) const {
  if (n < 0) throw PreconditionViolation("negative degree");
  for (int k = 0; k <= n && static_cast<std::size_t>(k) < basis_.size(); ++k) {
    const auto& level = basis_[static_cast<std::size_t>(k)];
    if (level.empty()) continue;
    for (const FiniteMap& sigma : canonical_surjections(n, k)) {
      for (const SimplexMatrix& y : level) f(y.act(sigma));
    }
  }
}

std::vector<SimplexMatrix> TruncatedSymSet::simplices(int n) const {
  std::vector<SimplexMatrix> out;
  out.reserve(static_cast<std::size_t>(simplex_count(n)));
  for_each_simplex(n, [&](const SimplexMatrix& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

bool TruncatedSymSet::contains(const SimplexMatrix& x) const {
  for (EdgeId f : x.entries()) {
    if (f >= edges_.num_edges()) return false;
  }
  auto r = factor_by_rows(x);
  const auto k = static_cast<std::size_t>(r.base.degree());
  if (k >= basis_.size() || !sorted_contains(basis_[k], r.base)) return false;
  return r.base.act(r.surjection) == x;
}

SimplexMatrix apply_map(const TruncatedSymSet& X, const SimplexMatrix& x,
                        const FiniteMap& alpha) {
  if (alpha.source_degree() > X.truncation()) {
    throw PreconditionViolation("truncation exceeded: map " + alpha.to_string() +
                                " has source degree above " +
                                std::to_string(X.truncation()));
  }
  return x.act(alpha);
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.message << "\n";
  return os.str();
}

ValidationReport validate(const TruncatedSymSet& X) {
  ValidationReport report;
  const EdgeStructure& E = X.edges();
  for (auto& msg : E.violations()) {
    report.violations.push_back({Violation::Kind::edge_structure, msg});
  }
  if (!report.ok()) return report;

  for (int n = 2;; ++n) {
    const auto level = X.nondegenerate(n);
    if (level.empty() && n > X.truncation()) break;
    if (!level.empty() && n > X.truncation()) {
      report.violations.push_back(
          {Violation::Kind::degree, std::to_string(level.size()) + " simplices of degree " +
                                        std::to_string(n) + " exceed truncation " +
                                        std::to_string(X.truncation())});
      continue;
    }
    const auto gens = closure_generators(n);
    for (const SimplexMatrix& x : level) {
      auto bad = x.violations(E);
      if (!bad.empty()) {
        for (auto& msg : bad) {
          report.violations.push_back(
              {Violation::Kind::matrix, "simplex " + x.to_string(E) + ": " + msg});
        }
        continue;
      }
      if (x.has_repeated_rows()) {
        report.violations.push_back({Violation::Kind::degenerate_listed,
                                     "simplex " + x.to_string(E) +
                                         " is stored as nondegenerate but has equal rows"});
      }
      for (const FiniteMap& g : gens) {
        SimplexMatrix y = x.act(g);
        if (!X.contains(y)) {
          report.violations.push_back(
              {Violation::Kind::closure, "closure: " + describe(E, x) + " . " +
                                             g.to_string() + " = " + y.to_string(E) +
                                             " is missing from W_" +
                                             std::to_string(y.degree())});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_explicit(int truncation, const EdgeStructure& E,
                                   const std::map<int, std::vector<SimplexMatrix>>& simplices) {
  ValidationReport report;
  for (auto& msg : E.violations()) {
    report.violations.push_back({Violation::Kind::edge_structure, msg});
  }
  if (!report.ok()) return report;

  std::vector<std::unordered_set<SimplexMatrix, SimplexMatrixHash>> W(
      static_cast<std::size_t>(truncation) + 1);
  for (ObjectId o = 0; o < E.num_objects(); ++o) W[0].insert(SimplexMatrix::of_object(E, o));
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (truncation >= 1) W[1].insert(SimplexMatrix::of_edge(E, f));
  }
  for (const auto& [n, level] : simplices) {
    if (n < 2 || n > truncation) {
      report.violations.push_back(
          {Violation::Kind::degree, "simplices listed at degree " + std::to_string(n) +
                                        " outside [2, " + std::to_string(truncation) + "]"});
      continue;
    }
    for (const SimplexMatrix& x : level) {
      if (x.degree() != n) {
        report.violations.push_back({Violation::Kind::degree,
                                     "simplex of degree " + std::to_string(x.degree()) +
                                         " listed at degree " + std::to_string(n)});
        continue;
      }
      auto bad = x.violations(E);
      for (auto& msg : bad) {
        report.violations.push_back(
            {Violation::Kind::matrix, "simplex " + x.to_string(E) + ": " + msg});
      }
      if (bad.empty()) W[static_cast<std::size_t>(n)].insert(x);
    }
  }

  for (int n = 0; n <= truncation; ++n) {
    std::vector<SimplexMatrix> level(W[static_cast<std::size_t>(n)].begin(),
                                     W[static_cast<std::size_t>(n)].end());
    std::sort(level.begin(), level.end());
    for (int m = 0; m <= truncation; ++m) {
      const auto alphas = all_maps(m, n);
      for (const SimplexMatrix& x : level) {
        for (const FiniteMap& a : alphas) {
          SimplexMatrix y = x.act(a);
          if (!W[static_cast<std::size_t>(m)].contains(y)) {
            report.violations.push_back(
                {Violation::Kind::closure, "closure: " + describe(E, x) + " . " +
                                               a.to_string() + " = " + y.to_string(E) +
                                               " is missing from W_" + std::to_string(m)});
          }
        }
      }
    }
  }
  return report;
}

TruncatedSymSet closure_generate(const EdgeStructure& E, int truncation,
                                 std::span<const SimplexMatrix> generators) {
  for (const SimplexMatrix& g : generators) {
    if (g.degree() > truncation) {
      throw PreconditionViolation("generator of degree " + std::to_string(g.degree()) +
                                  " exceeds truncation " + std::to_string(truncation));
    }
    auto bad = g.violations(E);
    if (!bad.empty()) {
      throw InvalidInput("malformed generator " + g.to_string(E) + ": " + bad.front());
    }
  }
  std::vector<std::set<SimplexMatrix>> found(static_cast<std::size_t>(truncation) + 1);
  std::deque<SimplexMatrix> work(generators.begin(), generators.end());
  while (!work.empty()) {
    SimplexMatrix y = std::move(work.front());
    work.pop_front();
    auto r = factor_by_rows(y);
    const int k = r.base.degree();
    if (k < 2) continue;
    if (!found[static_cast<std::size_t>(k)].insert(r.base).second) continue;
    for (const FiniteMap& g : closure_generators(k)) work.push_back(r.base.act(g));
  }
  std::vector<std::vector<SimplexMatrix>> lists(found.size());
  for (std::size_t n = 0; n < found.size(); ++n) {
    lists[n].assign(found[n].begin(), found[n].end());
  }
  return TruncatedSymSet(truncation, E, std::move(lists));
}

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      const auto ii = static_cast<std::size_t>(i);
      const auto jj = static_cast<std::size_t>(j);
      s[ii][jj] = jj * s[ii - 1][jj] + s[ii - 1][jj - 1];
    }
  }
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace spiny
