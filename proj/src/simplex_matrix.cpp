#include "spiny/simplex_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "spiny/error.hpp"

namespace spiny {

SimplexMatrix::SimplexMatrix(int degree, std::vector<EdgeId> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree_ < 0) throw InvalidInput("simplex degree must be nonnegative");
  const auto n = static_cast<std::size_t>(degree_ + 1);
  if (entries_.size() != n * n) {
    throw InvalidInput("simplex of degree " + std::to_string(degree_) + " needs " +
                       std::to_string(n * n) + " entries, got " +
                       std::to_string(entries_.size()));
  }
}

SimplexMatrix SimplexMatrix::of_edge(const EdgeStructure& e, EdgeId f) {
  return SimplexMatrix(1, {e.ident(e.dom(f)), f, e.inv(f), e.ident(e.cod(f))});
}

SimplexMatrix SimplexMatrix::of_object(const EdgeStructure& e, ObjectId o) {
  return SimplexMatrix(0, {e.ident(o)});
}

SimplexMatrix SimplexMatrix::act(const FiniteMap& alpha) const {
  if (alpha.target_degree() != degree_) {
    throw InvalidInput("cannot act by " + alpha.to_string() + " on a simplex of degree " +
                       std::to_string(degree_));
  }
  const int m = alpha.source_degree();
  std::vector<EdgeId> out(static_cast<std::size_t>((m + 1) * (m + 1)));
  std::size_t k = 0;
  for (int i = 0; i <= m; ++i) {
    const auto r = row(alpha(i));
    for (int j = 0; j <= m; ++j) out[k++] = r[static_cast<std::size_t>(alpha(j))];
  }
  return SimplexMatrix(m, std::move(out));
}

std::vector<ObjectId> SimplexMatrix::object_labels(const EdgeStructure& e) const {
  std::vector<ObjectId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(e.dom((*this)(i, i)));
  return out;
}

std::vector<EdgeId> SimplexMatrix::superdiagonal() const {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (int i = 1; i <= degree_; ++i) out.push_back((*this)(i - 1, i));
  return out;
}

bool SimplexMatrix::has_repeated_rows() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (std::ranges::equal(row(i), row(j))) return true;
    }
  }
  return false;
}

bool SimplexMatrix::has_offdiagonal_identity(const EdgeStructure& e) const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && e.is_identity((*this)(i, j))) return true;
    }
  }
  return false;
}

std::vector<std::string> SimplexMatrix::violations(const EdgeStructure& e) const {
  std::vector<std::string> out;
  for (EdgeId f : entries_) {
    if (f >= e.num_edges()) {
      out.push_back("entry " + std::to_string(f) + " is not an edge");
      return out;
    }
  }
  const auto labels = object_labels(e);
  for (int i = 0; i < size(); ++i) {
    const auto ii = static_cast<std::size_t>(i);
    if ((*this)(i, i) != e.ident(labels[ii])) {
      out.push_back("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                    ") is '" + e.edge_name((*this)(i, i)) + "', not an identity");
    }
    for (int j = 0; j < size(); ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const EdgeId f = (*this)(i, j);
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if ((*this)(j, i) != e.inv(f)) {
        out.push_back("entry " + at + " is '" + e.edge_name(f) + "' but its transpose '" +
                      e.edge_name((*this)(j, i)) + "' is not its inverse");
      }
      if (e.dom(f) != labels[ii] || e.cod(f) != labels[jj]) {
        out.push_back("entry " + at + " '" + e.edge_name(f) +
                      "' does not run between the row and column objects");
      }
    }
  }
  return out;
}

std::string SimplexMatrix::to_string(const EdgeStructure& e) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < size(); ++j) {
      if (j) os << " ";
      const EdgeId f = (*this)(i, j);
      os << (f < e.num_edges() ? e.edge_name(f) : "?" + std::to_string(f));
    }
  }
  os << "]";
  return os.str();
}

std::size_t SimplexMatrixHash::operator()(const SimplexMatrix& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.degree()) * 0x9e3779b97f4a7c15ULL;
  for (EdgeId f : x.entries()) {
    h ^= f + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RowFactorization factor_by_rows(const SimplexMatrix& x) {
  const int n = x.size();
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    int cls = -1;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (std::ranges::equal(x.row(reps[r]), x.row(i))) {
        cls = static_cast<int>(r);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(i);
    }
    labels[static_cast<std::size_t>(i)] = cls;
  }
  FiniteMap sigma(static_cast<int>(reps.size()) - 1, std::move(labels));
  FiniteMap section(x.degree(), reps);
  return {x.act(section), std::move(sigma)};
}

}  // namespace spiny
