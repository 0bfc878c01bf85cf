#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rota/core/errors.hpp"
#include "rota/slice/slice_rank.hpp"

namespace rota {

std::vector<int> cyclic_shift(std::span<const int> tuple, int n) {
  std::vector<int> out;
  out.reserve(tuple.size());
  for (int v : tuple) {
    if (v < 1 || v > n) throw ValidationError("cyclic shift entry " + std::to_string(v) + " outside [1, n]");
    out.push_back(v == n ? 1 : v + 1);
  }
  return out;
}

DiagonalCertificate diagonal_certificate_for_power(int n, int k) {
  if (n < 1 || k < 1) throw ValidationError("diagonal certificate needs n, k >= 1");
  const auto flatten = [n](const std::vector<int>& t) {
    int idx = 0;
    for (int v : t) idx = idx * n + (v - 1);
    return idx + 1;
  };
  DiagonalCertificate cert;
  std::vector<int> base(static_cast<std::size_t>(k), 1);
  while (true) {
    Index point;
    std::vector<int> cur = base;
    for (int l = 0; l < n; ++l) {
      point.push_back(flatten(cur));
      cur = cyclic_shift(cur, n);
    }
    cert.points.push_back(std::move(point));
    // Odometer over [n]^k, last coordinate fastest.
    int pos = k - 1;
    while (pos >= 0 && base[static_cast<std::size_t>(pos)] == n) base[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++base[static_cast<std::size_t>(pos)];
  }
  return cert;
}

namespace {

bool differ_everywhere(const Index& a, const Index& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == b[j]) return false;
  }
  return true;
}

// Maximum clique with greedy-colouring bounds over <= 64 vertices.
class MaxClique {
 public:
  explicit MaxClique(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::vector<int> solve() {
    std::uint64_t all = adj_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj_.size()) - 1;
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, std::uint64_t candidates) {
    std::vector<int> order;
    std::vector<int> colour;
    int c = 0;
    std::uint64_t uncoloured = candidates;
    while (uncoloured != 0) {
      ++c;
      std::uint64_t avail = uncoloured;
      while (avail != 0) {
        const int v = std::countr_zero(avail);
        const std::uint64_t bit = std::uint64_t{1} << v;
        avail &= ~bit & ~adj_[static_cast<std::size_t>(v)];
        uncoloured &= ~bit;
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colour[i]) <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      const std::uint64_t next = candidates & adj_[static_cast<std::size_t>(v)];
      if (next == 0) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::vector<int> best_;
};

}  // namespace

DiagonalCertificate diagonal_lower_bound(const SparseTensor& x) {
  std::vector<Index> points;
  for (const auto& [idx, v] : x.support()) points.push_back(idx);
  DiagonalCertificate cert;
  if (points.size() <= kExactDiagonalLimit) {
    std::vector<std::uint64_t> adj(points.size(), 0);
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = 0; b < points.size(); ++b) {
        if (a != b && differ_everywhere(points[a], points[b])) adj[a] |= std::uint64_t{1} << b;
      }
    }
    auto members = MaxClique(std::move(adj)).solve();
    std::sort(members.begin(), members.end());
    for (int m : members) cert.points.push_back(points[static_cast<std::size_t>(m)]);
    return cert;
  }
  for (const auto& p : points) {
    bool ok = true;
    for (const auto& q : cert.points) ok = ok && differ_everywhere(p, q);
    if (ok) cert.points.push_back(p);
  }
  return cert;
}

bool verify_diagonal_certificate(const SparseTensor& x, const DiagonalCertificate& cert) {
  for (std::size_t a = 0; a < cert.points.size(); ++a) {
    validate_index(cert.points[a], x.order(), x.dim());
    if (is_zero(x.get(cert.points[a]))) return false;
    for (std::size_t b = a + 1; b < cert.points.size(); ++b) {
      if (!differ_everywhere(cert.points[a], cert.points[b])) return false;
    }
  }
  return true;
}

}  // namespace rota
