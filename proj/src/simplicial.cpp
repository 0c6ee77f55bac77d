#include "sheafbn/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {
namespace {

std::string simplex_name(const Simplex& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "-";
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex checked_sorted(const Simplex& raw, int vertex_count) {
  require(!raw.empty(), "EmptyInput", "empty simplex");
  Simplex s = raw;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    require(s[i] >= 0 && s[i] < vertex_count, "InvalidVertexIndex",
            "vertex " + std::to_string(s[i]) + " out of range");
    require(i == 0 || s[i] != s[i - 1], "InvalidSimplex",
            "repeated vertex in " + simplex_name(raw));
  }
  return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    int vertex_count, const std::vector<Simplex>& maximal) {
  require(!maximal.empty(), "EmptyInput", "no simplices given");
  require(vertex_count > 0, "EmptyInput", "no vertices");
  std::set<Simplex> closed;
  for (const Simplex& raw : maximal) {
    Simplex s = checked_sorted(raw, vertex_count);
    // enumerate all nonempty subsets
    const size_t k = s.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex face;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closed.insert(std::move(face));
    }
  }
  std::vector<Simplex> all(closed.begin(), closed.end());
  return from_all(vertex_count, all);
}

SimplicialComplex SimplicialComplex::from_all(
    int vertex_count, const std::vector<Simplex>& simplices) {
  require(!simplices.empty(), "EmptyInput", "no simplices given");
  require(vertex_count > 0, "EmptyInput", "no vertices");
  std::set<Simplex> dedup;
  for (const Simplex& raw : simplices)
    dedup.insert(checked_sorted(raw, vertex_count));
  SimplicialComplex x;
  x.vertex_count_ = vertex_count;
  for (const Simplex& s : dedup) {
    const size_t d = s.size() - 1;
    if (x.by_dim_.size() <= d) x.by_dim_.resize(d + 1);
    x.by_dim_[d].push_back(s);
    // each facet of s must itself be present
    if (d > 0)
      for (size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        require(dedup.count(face) != 0, "NotClosed",
                "missing face " + simplex_name(face) + " of " +
                    simplex_name(s));
      }
  }
  std::vector<bool> seen(static_cast<size_t>(vertex_count), false);
  for (const Simplex& v : x.by_dim_[0]) seen[static_cast<size_t>(v[0])] = true;
  for (int v = 0; v < vertex_count; ++v)
    require(seen[static_cast<size_t>(v)], "InvalidVertexIndex",
            "vertex " + std::to_string(v) + " appears in no simplex");
  return x;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> empty;
  if (d < 0 || d > dimension()) return empty;
  return by_dim_[static_cast<size_t>(d)];
}

bool SimplicialComplex::has(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  const std::vector<Simplex>& list = simplices(d);
  return std::binary_search(list.begin(), list.end(), s);
}

Index SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  const std::vector<Simplex>& list = simplices(d);
  auto it = std::lower_bound(list.begin(), list.end(), s);
  require(it != list.end() && *it == s, "NotASimplex",
          simplex_name(s) + " is not a simplex of the complex");
  return static_cast<Index>(it - list.begin());
}

Matrix SimplicialComplex::boundary_matrix(int d, const RingSpec& ring) const {
  require(d >= 1 && d <= dimension(), "DegreeOutOfRange",
          "boundary degree " + std::to_string(d));
  Matrix m(ring, count(d - 1), count(d));
  const std::vector<Simplex>& top = simplices(d);
  for (Index j = 0; j < static_cast<Index>(top.size()); ++j) {
    const Simplex& s = top[static_cast<size_t>(j)];
    int sign = 1;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      m.set(index_of(face), j, m(index_of(face), j) + sign);
      sign = -sign;
    }
  }
  return m;
}

Index SimplicialComplex::euler_characteristic() const {
  Index chi = 0;
  for (int d = 0; d <= dimension(); ++d)
    chi += (d % 2 == 0) ? count(d) : -count(d);
  return chi;
}

std::vector<int> SimplicialComplex::vertex_components() const {
  const int n = vertex_count_;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Simplex& e : simplices(1)) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    comp[static_cast<size_t>(start)] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool SimplicialComplex::is_connected() const {
  std::vector<int> comp = vertex_components();
  for (int c : comp)
    if (c != 0) return false;
  return true;
}

FpModule homology(const SimplicialComplex& x, int n, const RingSpec& ring) {
  require(n >= 0 && n <= x.dimension(), "DegreeOutOfRange",
          "homology degree " + std::to_string(n));
  Matrix lower = n >= 1 ? x.boundary_matrix(n, ring)
                        : Matrix(ring, 0, x.count(0));
  Matrix upper = n + 1 <= x.dimension()
                     ? x.boundary_matrix(n + 1, ring)
                     : Matrix(ring, x.count(n), 0);
  return subquotient(lower, upper);
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::vector<int> vertex_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(vertex_images)) {
  require(static_cast<int>(images_.size()) == source_.vertex_count(),
          "InvalidVertexIndex", "one image per source vertex required");
  for (int v : images_)
    require(v >= 0 && v < target_.vertex_count(), "InvalidVertexIndex",
            "image vertex " + std::to_string(v) + " out of range");
  for (int d = 0; d <= source_.dimension(); ++d)
    for (const Simplex& s : source_.simplices(d))
      require(target_.has(image(s)), "NotSimplicial",
              "image of " + simplex_name(s) + " spans no simplex");
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  for (int v : s) out.push_back(apply(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sheafbn
