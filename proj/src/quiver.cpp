#include "qv/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace qv {

int Quiver::vertex(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end()) fail(ErrorKind::UnknownVertex, "'" + id + "'");
  return it->second;
}

bool Quiver::has_loop_at(int v) const {
  for (const Arrow& a : arrows)
    if (a.src == v && a.tgt == v) return true;
  return false;
}

Quiver build_quiver(const std::vector<std::string>& vertices,
                    const std::vector<std::pair<std::string, std::string>>& arrows) {
  Quiver q;
  q.vertices = vertices;
  for (int i = 0; i < q.num_vertices(); ++i) {
    auto [it, fresh] = q.index.emplace(q.vertices[i], i);
    (void)it;
    if (!fresh) fail(ErrorKind::DuplicateVertexId, "'" + q.vertices[i] + "'");
  }
  q.arrows.reserve(arrows.size());
  for (const auto& [src, tgt] : arrows) q.arrows.push_back({q.vertex(src), q.vertex(tgt)});
  return q;
}

std::string DoubleQuiver::arrow_label(int a) const {
  const Arrow& ar = arrows.at(a);
  std::string label = base.vertices[ar.src] + ">" + base.vertices[ar.tgt];
  if (is_reversed(a)) label += "*";
  return label;
}

DoubleQuiver double_quiver(const Quiver& q) {
  DoubleQuiver d;
  d.base = q;
  d.arrows = q.arrows;
  d.arrows.reserve(2 * q.arrows.size());
  for (const Arrow& a : q.arrows) d.arrows.push_back({a.tgt, a.src});
  return d;
}

Unframed framed_to_unframed(const Quiver& q, const DimVector& alpha,
                            const std::vector<std::int64_t>& framing,
                            const std::string& new_vertex_id) {
  require(alpha.size() == static_cast<size_t>(q.num_vertices()) &&
              framing.size() == alpha.size(),
          ErrorKind::InvalidParams, "framing/dimension size mismatch");
  std::vector<std::string> vertices = q.vertices;
  vertices.push_back(new_vertex_id);
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const Arrow& a : q.arrows) arrows.emplace_back(q.vertices[a.src], q.vertices[a.tgt]);
  for (int v = 0; v < q.num_vertices(); ++v) {
    require(framing[v] >= 0, ErrorKind::InvalidParams, "negative framing");
    for (std::int64_t k = 0; k < framing[v]; ++k) arrows.emplace_back(new_vertex_id, q.vertices[v]);
  }
  Unframed u;
  u.q = build_quiver(vertices, arrows);  // rejects a clash with new_vertex_id
  u.alpha = alpha;
  u.alpha.push_back(1);
  u.infinity = q.num_vertices();
  return u;
}

Stability unframe_stability(const Unframed& u, const Stability& framed_theta) {
  require(framed_theta.size() + 1 == static_cast<size_t>(u.q.num_vertices()),
          ErrorKind::InvalidParams, "framed stability has wrong size");
  Stability theta = framed_theta;
  Rat balance = 0;
  for (size_t v = 0; v < framed_theta.size(); ++v) balance += framed_theta[v] * u.alpha[v];
  theta.push_back(-balance);  // alpha_infinity == 1
  return theta;
}

static void check_pair(const Quiver& q, const DimVector& a, const DimVector& b) {
  require(a.size() == static_cast<size_t>(q.num_vertices()) && b.size() == a.size(),
          ErrorKind::InvalidParams, "dimension vector size mismatch");
}

Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_pair(q, a, b);
  Int total = 0;
  for (int v = 0; v < q.num_vertices(); ++v) total += Int(a[v]) * b[v];
  for (const Arrow& ar : q.arrows) total -= Int(a[ar.src]) * b[ar.tgt];
  return total;
}

Int sym_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

Int tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

bool has_connected_support(const Quiver& q, const DimVector& b) {
  int n = q.num_vertices();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (b[v] != 0) {
      start = v;
      break;
    }
  if (start < 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& a : q.arrows) {
      int other = -1;
      if (a.src == v && b[a.tgt] != 0) other = a.tgt;
      if (a.tgt == v && b[a.src] != 0) other = a.src;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (b[v] != 0 && !seen[v]) return false;
  return true;
}

bool is_positive_root(const Quiver& q, const DimVector& b0) {
  require(b0.size() == static_cast<size_t>(q.num_vertices()), ErrorKind::InvalidParams,
          "dimension vector size mismatch");
  int n = q.num_vertices();
  std::int64_t height = 0;
  bool zero = true;
  for (int v = 0; v < n; ++v) {
    if (b0[v] < 0) return false;
    if (b0[v] != 0) {
      zero = false;
      if (q.has_loop_at(v))
        fail(ErrorKind::Unsupported, "root test with a loop in the support");
    }
    height += b0[v];
  }
  if (zero) fail(ErrorKind::ZeroVector, "root test on the zero vector");

  // (e_v, e_w) for v != w is minus the number of arrows between v and w; the
  // diagonal is 2 on loop-free vertices.  Precomputed once.
  std::vector<std::vector<std::int64_t>> sym(n, std::vector<std::int64_t>(n, 0));
  for (int v = 0; v < n; ++v) sym[v][v] = 2;
  for (const Arrow& a : q.arrows)
    if (a.src != a.tgt) {
      --sym[a.src][a.tgt];
      --sym[a.tgt][a.src];
    }

  DimVector b = b0;
  // Every reflection lowers the height by at least 1 while b stays
  // nonnegative, so this bound is generous.
  std::int64_t guard = 4 * height * height + 4 * height + 16;
  while (guard-- > 0) {
    int support_size = 0, unit_at = -1;
    for (int v = 0; v < n; ++v) {
      if (b[v] < 0) return false;
      if (b[v] != 0) {
        ++support_size;
        unit_at = v;
      }
    }
    if (support_size == 1 && b[unit_at] == 1) return true;  // simple root
    int pivot = -1;
    for (int v = 0; v < n; ++v) {
      if (b[v] == 0) continue;
      std::int64_t pairing = 0;
      for (int w = 0; w < n; ++w) pairing += sym[v][w] * b[w];
      if (pairing > 0) {
        pivot = v;
        b[v] -= pairing;  // reflect at v
        break;
      }
    }
    if (pivot < 0) {
      // Fixed point of all reflections: a fundamental-region vector, which is
      // a (necessarily imaginary) root exactly when its support is connected.
      return has_connected_support(q, b);
    }
  }
  fail(ErrorKind::Internal, "reflection loop exceeded its bound");
}

void validate_stability(const Quiver& q, const DimVector& alpha, const Stability& theta) {
  require(alpha.size() == static_cast<size_t>(q.num_vertices()), ErrorKind::InvalidParams,
          "dimension vector size mismatch");
  require(theta.size() == alpha.size(), ErrorKind::InvalidParams, "stability size mismatch");
  for (std::int64_t a : alpha)
    require(a >= 0, ErrorKind::InvalidParams, "negative dimension");
  Rat pairing = dot(theta, alpha);
  if (pairing != 0)
    fail(ErrorKind::InvalidStability,
         "theta . alpha = " + format_rational(pairing) + ", expected 0");
}

Rat dot(const Stability& theta, const DimVector& v) {
  require(theta.size() == v.size(), ErrorKind::InvalidParams, "size mismatch in pairing");
  Rat total = 0;
  for (size_t i = 0; i < v.size(); ++i) total += theta[i] * v[i];
  return total;
}

std::string format_dim_vector(const Quiver& q, const DimVector& v) {
  std::string out = "(";
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace qv
