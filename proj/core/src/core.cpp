#include "zzlab/core.hpp"

#include <algorithm>
#include <queue>

namespace zzlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateDart: return "DuplicateDart";
    case Errc::MissingDart: return "MissingDart";
    case Errc::FixedDart: return "FixedDart";
    case Errc::PortOutOfRange: return "PortOutOfRange";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::UnknownVariant: return "UnknownVariant";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DisconnectedFactor: return "DisconnectedFactor";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NegativeResidual: return "NegativeResidual";
    case Errc::OddDegree: return "OddDegree";
    case Errc::DegreeNot4: return "DegreeNot4";
    case Errc::CorrespondenceViolated: return "CorrespondenceViolated";
    case Errc::NotPartitionPreserving: return "NotPartitionPreserving";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::MultiplicityMismatch: return "MultiplicityMismatch";
    case Errc::OrderingMismatch: return "OrderingMismatch";
    case Errc::SpectrumMismatch: return "SpectrumMismatch";
    case Errc::FormatError: return "FormatError";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  IntMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
  std::vector<std::int64_t> sums(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

static std::string dart_str(const Dart& d) {
  return "(" + std::to_string(d.vertex) + "," + std::to_string(d.port) + ")";
}

RotationGraph RotationGraph::build(int degree, std::vector<std::string> vertex_names,
                                   const std::vector<DartPair>& pairs) {
  if (degree < 1) fail(Errc::SizeTooSmall, "degree must be positive");
  const int n = static_cast<int>(vertex_names.size());

  RotationGraph g;
  g.degree_ = degree;
  g.names_ = std::move(vertex_names);
  g.rot_.assign(static_cast<std::size_t>(n) * degree, -1);

  auto check = [&](const Dart& d) {
    if (d.vertex < 0 || d.vertex >= n)
      fail(Errc::VertexOutOfRange, "dart " + dart_str(d) + " names vertex outside 0.." + std::to_string(n - 1));
    if (d.port < 1 || d.port > degree)
      fail(Errc::PortOutOfRange, "dart " + dart_str(d) + " has port outside 1.." + std::to_string(degree));
  };

  for (const auto& [a, b] : pairs) {
    check(a);
    check(b);
    if (a == b) fail(Errc::FixedDart, "dart " + dart_str(a) + " paired with itself");
    int ia = g.dart_id(a), ib = g.dart_id(b);
    if (g.rot_[ia] != -1) fail(Errc::DuplicateDart, "dart " + dart_str(a) + " appears in more than one pair");
    if (g.rot_[ib] != -1) fail(Errc::DuplicateDart, "dart " + dart_str(b) + " appears in more than one pair");
    g.rot_[ia] = ib;
    g.rot_[ib] = ia;
  }

  for (int id = 0; id < g.dart_count(); ++id)
    if (g.rot_[id] == -1)
      fail(Errc::MissingDart, "dart " + dart_str(g.dart(id)) + " is not covered by any pair");

  return g;
}

std::vector<DartPair> RotationGraph::dart_pairs() const {
  std::vector<DartPair> out;
  out.reserve(rot_.size() / 2);
  for (int id = 0; id < dart_count(); ++id)
    if (id < rot_[id]) out.emplace_back(dart(id), dart(rot_[id]));
  return out;
}

IntMatrix RotationGraph::adjacency_matrix() const {
  IntMatrix a(vertex_count(), vertex_count());
  for (const auto& [x, y] : dart_pairs()) {
    if (x.vertex == y.vertex) {
      a(x.vertex, x.vertex) += 2;
    } else {
      a(x.vertex, y.vertex) += 1;
      a(y.vertex, x.vertex) += 1;
    }
  }
  return a;
}

std::vector<std::vector<int>> RotationGraph::connected_components() const {
  const int n = vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int p = 1; p <= degree_; ++p) {
        int w = rot({v, p}).vertex;
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool RotationGraph::is_connected() const {
  return vertex_count() <= 1 || connected_components().size() == 1;
}

std::vector<int> RotationGraph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  std::vector<int> out;
  out.reserve(degree_);
  for (int p = 1; p <= degree_; ++p) out.push_back(rot({v, p}).vertex);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zzlab
