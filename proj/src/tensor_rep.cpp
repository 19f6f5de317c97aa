#include "trainlab/tensor_rep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "trainlab/permutations.hpp"

namespace trainlab {
namespace {

using Strides = std::vector<std::size_t>;

Strides row_major(const std::vector<int>& dims) {
  Strides st(dims.size(), 1);
  for (int a = static_cast<int>(dims.size()) - 2; a >= 0; --a) st[a] = st[a + 1] * dims[a + 1];
  return st;
}

std::size_t product(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

// Offsets of all digit combinations over the listed axes, row-major in the
// order given.
std::vector<std::size_t> offsets(const std::vector<int>& dims, const Strides& st, const std::vector<int>& axes) {
  std::vector<std::size_t> out{0};
  for (int a : axes) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[a]);
    for (std::size_t o : out)
      for (int x = 0; x < dims[a]; ++x) next.push_back(o + x * st[a]);
    out = std::move(next);
  }
  return out;
}

std::vector<int> slot_dims(const PairConfig& cfg, const RepParams& rp, int smell) {
  std::vector<int> d;
  for (const auto& [color, mel] : cfg.slots(smell)) d.push_back(rp.dims[color - 1]);
  return d;
}

// Moves axis a of src to axis perm[a] of the result.
Vec permute_axes(const Vec& src, const std::vector<int>& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  std::vector<int> out_dims(n);
  for (int a = 0; a < n; ++a) out_dims[perm[a]] = dims[a];
  const auto out_st = row_major(out_dims);
  Strides jump(n);
  for (int a = 0; a < n; ++a) jump[a] = out_st[perm[a]];
  Vec out(src.size());
  std::vector<int> digit(n, 0);
  std::size_t off = 0;
  for (Eigen::Index x = 0; x < src.size(); ++x) {
    out[off] = src[x];
    for (int a = n - 1; a >= 0; --a) {
      if (++digit[a] < dims[a]) {
        off += jump[a];
        break;
      }
      off -= jump[a] * (dims[a] - 1);
      digit[a] = 0;
    }
  }
  return out;
}

struct Layout {
  std::map<GroundPoint, int> pos;
  std::vector<int> dims;
  Strides st;

  explicit Layout(const TruncatedState& s) : dims(s.dims), st(row_major(s.dims)) {
    for (std::size_t a = 0; a < s.factors.size(); ++a) pos[s.factors[a]] = static_cast<int>(a);
  }
  std::vector<int> axes_of(const std::vector<GroundPoint>& pts) const {
    std::vector<int> out;
    for (const auto& w : pts) out.push_back(pos.at(w));
    return out;
  }
  std::vector<int> block_axes(const PairConfig& cfg, int smell, int level) const {
    std::vector<int> out;
    for (const auto& [color, mel] : cfg.slots(smell)) out.push_back(pos.at(GroundPoint::R(color, smell, level, mel)));
    return out;
  }
};

void check_window(const PairConfig& cfg, const MultiIndex& alpha, const MultiIndex& window) {
  check_multi_index(cfg, alpha);
  check_multi_index(cfg, window);
  if (!alpha.leq(window))
    throw Error(ErrorCode::DimensionMismatch, "multi-index " + alpha.str() + " exceeds window " + window.str());
}

// (offset, value) pairs of the xi-tail over blocks (alpha_i, window_i].
std::vector<std::pair<std::size_t, cd>> tail_terms(const PairConfig& cfg, const RepParams& rp, const Layout& L,
                                                    const MultiIndex& alpha, const MultiIndex& window) {
  std::vector<std::pair<std::size_t, cd>> terms{{0, cd(1.0)}};
  for (int i = 1; i <= cfg.p(); ++i)
    for (int k = alpha[i] + 1; k <= window[i]; ++k) {
      const auto boff = offsets(L.dims, L.st, L.block_axes(cfg, i, k));
      const Vec& xi = rp.xi[i - 1];
      std::vector<std::pair<std::size_t, cd>> next;
      next.reserve(terms.size() * boff.size());
      for (const auto& [o, v] : terms)
        for (std::size_t x = 0; x < boff.size(); ++x)
          if (xi[x] != cd(0.0)) next.emplace_back(o + boff[x], v * xi[x]);
      terms = std::move(next);
    }
  return terms;
}

// ---- small tensor network ----

struct Tensor {
  std::vector<int> legs;
  std::vector<int> dims;
  Vec data;
};

Tensor contract(const Tensor& A, const Tensor& B) {
  const auto sa = row_major(A.dims);
  const auto sb = row_major(B.dims);
  std::vector<int> shared_a, shared_b, shared_d;
  std::vector<std::size_t> res_ja, res_jb;
  Tensor R;
  for (std::size_t a = 0; a < A.legs.size(); ++a) {
    auto it = std::find(B.legs.begin(), B.legs.end(), A.legs[a]);
    if (it != B.legs.end()) {
      shared_a.push_back(static_cast<int>(a));
      shared_b.push_back(static_cast<int>(it - B.legs.begin()));
      shared_d.push_back(A.dims[a]);
    } else {
      R.legs.push_back(A.legs[a]);
      R.dims.push_back(A.dims[a]);
      res_ja.push_back(sa[a]);
      res_jb.push_back(0);
    }
  }
  for (std::size_t b = 0; b < B.legs.size(); ++b) {
    if (std::find(A.legs.begin(), A.legs.end(), B.legs[b]) != A.legs.end()) continue;
    R.legs.push_back(B.legs[b]);
    R.dims.push_back(B.dims[b]);
    res_ja.push_back(0);
    res_jb.push_back(sb[b]);
  }
  // shared offsets
  std::vector<std::size_t> soa{0}, sob{0};
  for (std::size_t t = 0; t < shared_a.size(); ++t) {
    std::vector<std::size_t> na, nb;
    for (std::size_t u = 0; u < soa.size(); ++u)
      for (int x = 0; x < shared_d[t]; ++x) {
        na.push_back(soa[u] + x * sa[shared_a[t]]);
        nb.push_back(sob[u] + x * sb[shared_b[t]]);
      }
    soa = std::move(na);
    sob = std::move(nb);
  }
  const std::size_t n = product(R.dims);
  R.data = Vec::Zero(static_cast<Eigen::Index>(n));
  const int r = static_cast<int>(R.dims.size());
  std::vector<int> digit(r, 0);
  std::size_t oa = 0, ob = 0;
  for (std::size_t x = 0; x < n; ++x) {
    cd sum = 0.0;
    for (std::size_t s = 0; s < soa.size(); ++s) sum += A.data[oa + soa[s]] * B.data[ob + sob[s]];
    R.data[x] = sum;
    for (int a = r - 1; a >= 0; --a) {
      if (++digit[a] < R.dims[a]) {
        oa += res_ja[a];
        ob += res_jb[a];
        break;
      }
      oa -= res_ja[a] * (R.dims[a] - 1);
      ob -= res_jb[a] * (R.dims[a] - 1);
      digit[a] = 0;
    }
  }
  return R;
}

}  // namespace

std::size_t block_dim(const PairConfig& cfg, const RepParams& rp, int smell) {
  return product(slot_dims(cfg, rp, smell));
}

std::size_t max_dense_dim() {
  if (const char* env = std::getenv("TRAINLAB_MAX_DIM")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::size_t{1} << 20;
}

Vec symmetrize_block(const PairConfig& cfg, const RepParams& rp, int smell, const Vec& v) {
  const auto slots = cfg.slots(smell);
  const auto dims = slot_dims(cfg, rp, smell);
  const int n = static_cast<int>(slots.size());
  // positions grouped by color; every within-color permutation
  std::vector<std::vector<int>> groups;
  for (int a = 0; a < n; ++a) {
    if (a == 0 || slots[a].first != slots[a - 1].first) groups.emplace_back();
    groups.back().push_back(a);
  }
  std::vector<std::vector<int>> perms{std::vector<int>(n)};
  std::iota(perms[0].begin(), perms[0].end(), 0);
  for (const auto& grp : groups) {
    std::vector<std::vector<int>> next;
    std::vector<int> img = grp;
    do {
      for (auto p : perms) {
        for (std::size_t t = 0; t < grp.size(); ++t) p[grp[t]] = img[t];
        next.push_back(p);
      }
    } while (std::next_permutation(img.begin(), img.end()));
    perms = std::move(next);
  }
  Vec acc = Vec::Zero(v.size());
  for (const auto& p : perms) acc += permute_axes(v, dims, p);
  return acc / static_cast<double>(perms.size());
}

void validate_rep(const PairConfig& cfg, const RepParams& rp) {
  if (static_cast<int>(rp.dims.size()) != cfg.q())
    throw Error(ErrorCode::DimensionMismatch, "dims must have q entries");
  for (int d : rp.dims)
    if (d < 1) throw Error(ErrorCode::InvalidRepParams, "dimensions must be >= 1");
  if (static_cast<int>(rp.xi.size()) != cfg.p()) throw Error(ErrorCode::DimensionMismatch, "one xi per smell expected");
  for (int i = 1; i <= cfg.p(); ++i) {
    const Vec& xi = rp.xi[i - 1];
    if (static_cast<std::size_t>(xi.size()) != block_dim(cfg, rp, i))
      throw Error(ErrorCode::DimensionMismatch, "xi of smell " + std::to_string(i) + " has the wrong size");
    if (std::abs(xi.norm() - 1.0) > 1e-12)
      throw Error(ErrorCode::InvalidRepParams, "xi of smell " + std::to_string(i) + " is not a unit vector");
    if (cfg.kind() == Kind::Wreath && (symmetrize_block(cfg, rp, i, xi) - xi).cwiseAbs().maxCoeff() > 1e-12)
      throw Error(ErrorCode::InvalidRepParams,
                  "xi of smell " + std::to_string(i) + " is not symmetric under equal-color slot permutations");
  }
  std::size_t expected = 0;
  for (int j = 1; j <= cfg.q(); ++j) expected += cfg.lambda(j);
  if (rp.exceptional.size() != expected) throw Error(ErrorCode::InvalidRepParams, "one vector per exceptional point expected");
  for (const auto& [w, v] : rp.exceptional) {
    if (!w.exceptional || !contains(cfg, w)) throw Error(ErrorCode::InvalidRepParams, w.str() + " is not an exceptional point");
    if (v.size() != rp.dims[w.color - 1]) throw Error(ErrorCode::DimensionMismatch, "vector of " + w.str() + " has the wrong size");
    if (std::abs(v.norm() - 1.0) > 1e-12) throw Error(ErrorCode::InvalidRepParams, "vector of " + w.str() + " is not a unit vector");
  }
}

RepParams random_rep(const PairConfig& cfg, const std::vector<int>& dims, std::uint64_t seed, bool symmetric) {
  RepParams rp;
  rp.dims = dims;
  if (static_cast<int>(dims.size()) != cfg.q()) throw Error(ErrorCode::DimensionMismatch, "dims must have q entries");
  Rng rng(seed);
  auto gaussian = [&](std::size_t n) {
    Vec v(static_cast<Eigen::Index>(n));
    for (auto& x : v) {
      const double re = rng.normal();
      x = cd(re, rng.normal());
    }
    return v;
  };
  for (int i = 1; i <= cfg.p(); ++i) {
    Vec v = gaussian(block_dim(cfg, rp, i));
    if (symmetric) v = symmetrize_block(cfg, rp, i, v);
    rp.xi.push_back(v / v.norm());
  }
  for (int j = 1; j <= cfg.q(); ++j)
    for (int l = 1; l <= cfg.lambda(j); ++l) {
      Vec v = gaussian(dims[j - 1]);
      rp.exceptional[GroundPoint::L(j, l)] = v / v.norm();
    }
  return rp;
}

RepParams random_rep(const PairConfig& cfg, const std::vector<int>& dims, std::uint64_t seed) {
  return random_rep(cfg, dims, seed, cfg.kind() == Kind::Wreath);
}

std::size_t head_dim(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha) {
  std::size_t n = 1;
  for (const auto& w : omega_fixed(cfg, alpha)) n *= rp.dims[w.color - 1];
  return n;
}

TruncatedState make_state(const PairConfig& cfg, const RepParams& rp, const MultiIndex& window) {
  check_multi_index(cfg, window);
  TruncatedState s;
  s.window = window;
  s.factors = enumerate_window(cfg, window);
  const std::size_t cap = max_dense_dim();
  std::size_t n = 1;
  for (const auto& w : s.factors) {
    s.dims.push_back(rp.dims[w.color - 1]);
    n *= rp.dims[w.color - 1];
    if (n > cap)
      throw Error(ErrorCode::DimensionCap, "dense state over window " + window.str() + " exceeds " + std::to_string(cap));
  }
  s.data = Vec::Zero(static_cast<Eigen::Index>(n));
  return s;
}

TruncatedState xi_tail_state(const PairConfig& cfg, const RepParams& rp, const Vec& head, const MultiIndex& alpha,
                             const MultiIndex& window) {
  check_window(cfg, alpha, window);
  if (static_cast<std::size_t>(head.size()) != head_dim(cfg, rp, alpha))
    throw Error(ErrorCode::DimensionMismatch, "head has the wrong size for " + alpha.str());
  auto s = make_state(cfg, rp, window);
  const Layout L(s);
  const auto hoff = offsets(L.dims, L.st, L.axes_of(omega_fixed(cfg, alpha)));
  const auto tail = tail_terms(cfg, rp, L, alpha, window);
  for (std::size_t h = 0; h < hoff.size(); ++h) {
    if (head[h] == cd(0.0)) continue;
    for (const auto& [o, v] : tail) s.data[hoff[h] + o] = head[h] * v;
  }
  return s;
}

TruncatedState vacuum(const PairConfig& cfg, const RepParams& rp, const MultiIndex& window) {
  Vec head = Vec::Ones(1);
  for (const auto& w : omega_fixed(cfg, MultiIndex::zeros(cfg.p()))) {
    const Vec& e = rp.exceptional.at(w);
    Vec next(head.size() * e.size());
    for (Eigen::Index a = 0; a < head.size(); ++a)
      for (Eigen::Index b = 0; b < e.size(); ++b) next[a * e.size() + b] = head[a] * e[b];
    head = std::move(next);
  }
  return xi_tail_state(cfg, rp, head, MultiIndex::zeros(cfg.p()), window);
}

TruncatedState apply_group(const GroupElement& g, const TruncatedState& s) {
  const Layout L(s);
  for (const auto& [from, to] : g.moved())
    if (!L.pos.contains(from) || !L.pos.contains(to))
      throw Error(ErrorCode::SupportExceedsWindow, "point " + from.str() + " moves outside window " + s.window.str());
  std::vector<int> perm(s.factors.size());
  for (std::size_t a = 0; a < s.factors.size(); ++a) perm[a] = L.pos.at(g(s.factors[a]));
  TruncatedState out = s;
  out.data = permute_axes(s.data, s.dims, perm);
  return out;
}

TruncatedState project_alpha(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha,
                             const TruncatedState& s, bool symmetrize) {
  check_multi_index(cfg, alpha);
  const Layout L(s);
  TruncatedState out = s;
  for (int i = 1; i <= cfg.p(); ++i) {
    const Vec& xi = rp.xi[i - 1];
    // <Sym v, xi> = <v, Sym xi>: symmetrizing the block before pairing is
    // pairing against the symmetrized xi.
    const Vec bra = symmetrize && cfg.kind() == Kind::Wreath ? symmetrize_block(cfg, rp, i, xi) : xi;
    for (int k = alpha[i] + 1; k <= s.window[i]; ++k) {
      const auto baxes = L.block_axes(cfg, i, k);
      std::vector<int> rest;
      for (int a = 0; a < static_cast<int>(s.factors.size()); ++a)
        if (std::find(baxes.begin(), baxes.end(), a) == baxes.end()) rest.push_back(a);
      const auto boff = offsets(L.dims, L.st, baxes);
      const auto roff = offsets(L.dims, L.st, rest);
      for (std::size_t o : roff) {
        cd c = 0.0;
        for (std::size_t x = 0; x < boff.size(); ++x) c += out.data[o + boff[x]] * std::conj(bra[x]);
        for (std::size_t x = 0; x < boff.size(); ++x) out.data[o + boff[x]] = c * xi[x];
      }
    }
  }
  return out;
}

Vec extract_head(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha, const TruncatedState& s) {
  check_window(cfg, alpha, s.window);
  const Layout L(s);
  const auto hoff = offsets(L.dims, L.st, L.axes_of(omega_fixed(cfg, alpha)));
  const auto tail = tail_terms(cfg, rp, L, alpha, s.window);
  Vec out = Vec::Zero(static_cast<Eigen::Index>(hoff.size()));
  for (std::size_t h = 0; h < hoff.size(); ++h) {
    cd acc = 0.0;
    for (const auto& [o, v] : tail) acc += s.data[hoff[h] + o] * std::conj(v);
    out[h] = acc;
  }
  return out;
}

cd inner(const TruncatedState& a, const TruncatedState& b) {
  if (a.factors != b.factors) throw Error(ErrorCode::DimensionMismatch, "states live on different windows");
  return b.data.dot(a.data);
}

OpenTensor contract_graph(const PairConfig& cfg, const RepParams& rp, const Graph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> inc(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    inc[g.edges[e].plus].push_back(static_cast<int>(e));
    inc[g.edges[e].minus].push_back(static_cast<int>(e));
  }
  auto vertex_tensor = [&](int v) {
    const auto& node = g.nodes[v];
    const auto slots = cfg.slots(node.smell);
    Tensor t;
    t.legs.assign(slots.size(), -1);
    for (int e : inc[v]) {
      const auto& edge = g.edges[e];
      const int mel = edge.plus == v ? edge.mel_plus : edge.mel_minus;
      if (mel < 1) throw Error(ErrorCode::MalformedDiagram, "contraction needs melodies at every vertex");
      t.legs[cfg.slot_position(node.smell, edge.color, mel)] = e;
    }
    for (const auto& [color, mel] : slots) t.dims.push_back(rp.dims[color - 1]);
    const Vec& xi = rp.xi[node.smell - 1];
    t.data = node.sign == Sign::Plus ? xi : Vec(xi.conjugate());
    return t;
  };
  // Breadth-first absorption from the first vertex keeps the frontier small.
  Tensor acc{{}, {}, Vec::Ones(1)};
  std::vector<bool> done(n, false);
  for (int root = 0; root < n; ++root) {
    if (done[root] || g.nodes[root].is_tag) continue;
    std::vector<int> queue{root};
    done[root] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      acc = contract(acc, vertex_tensor(v));
      if (static_cast<std::size_t>(acc.data.size()) > max_dense_dim())
        throw Error(ErrorCode::DimensionCap, "contraction frontier exceeds " + std::to_string(max_dense_dim()));
      for (int e : inc[v]) {
        const int w = g.edges[e].plus == v ? g.edges[e].minus : g.edges[e].plus;
        if (!done[w] && !g.nodes[w].is_tag) {
          done[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  OpenTensor out;
  for (int v = 0; v < n; ++v)
    if (g.nodes[v].is_tag) {
      out.tags.push_back(v);
      out.dims.push_back(rp.dims[g.nodes[v].label.color - 1]);
    }
  const auto ost = row_major(out.dims);
  const auto ast = row_major(acc.dims);
  const std::size_t total = product(out.dims);
  out.data = Vec::Zero(static_cast<Eigen::Index>(total));
  for (std::size_t x = 0; x < total; ++x) {
    // digits per tag, then per edge; tags sharing an edge must agree
    std::map<int, int> edge_digit;
    bool ok = true;
    for (std::size_t t = 0; t < out.tags.size() && ok; ++t) {
      const int digit = static_cast<int>((x / ost[t]) % out.dims[t]);
      const int e = inc[out.tags[t]].at(0);
      auto [it, fresh] = edge_digit.emplace(e, digit);
      ok = fresh || it->second == digit;
    }
    if (!ok) continue;
    std::size_t off = 0;
    for (std::size_t a = 0; a < acc.legs.size(); ++a) off += edge_digit.at(acc.legs[a]) * ast[a];
    out.data[x] = acc.data[off];
  }
  return out;
}

Mat rho_bar(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& alpha,
            const MultiIndex& beta) {
  const auto raw = encode(cfg, g, alpha, beta);
  const auto src = omega_fixed(cfg, alpha);
  const auto dst = omega_fixed(cfg, beta);
  std::map<GroundPoint, int> src_pos, dst_pos;
  std::vector<int> src_dims, dst_dims;
  for (const auto& w : src) {
    src_pos[w] = static_cast<int>(src_dims.size());
    src_dims.push_back(rp.dims[w.color - 1]);
  }
  for (const auto& w : dst) {
    dst_pos[w] = static_cast<int>(dst_dims.size());
    dst_dims.push_back(rp.dims[w.color - 1]);
  }
  const std::size_t nu = product(src_dims), nv = product(dst_dims);
  if (nu > max_dense_dim() / nv)
    throw Error(ErrorCode::DimensionCap, "rho_bar " + alpha.str() + " -> " + beta.str() + " has " +
                                             std::to_string(nv) + " x " + std::to_string(nu) + " entries");
  const auto sst = row_major(src_dims), dstt = row_major(dst_dims);

  cd scalar = 1.0;
  // per open component: data, and for each u / v the partial offset
  struct Piece {
    Vec data;
    std::vector<std::size_t> off_u, off_v;
  };
  std::vector<Piece> pieces;
  for (const auto& ids : raw.graph.components()) {
    const Graph c = raw.graph.induced(ids);
    if (is_removable(Kind::Plain, c)) continue;  // <xi, xi> = 1
    const auto t = contract_graph(cfg, rp, c);
    if (t.tags.empty()) {
      scalar *= t.data[0];
      continue;
    }
    const auto tst = row_major(t.dims);
    Piece p{t.data, std::vector<std::size_t>(nu, 0), std::vector<std::size_t>(nv, 0)};
    for (std::size_t a = 0; a < t.tags.size(); ++a) {
      const auto& node = c.nodes[t.tags[a]];
      if (node.sign == Sign::Plus) {
        const int ax = src_pos.at(node.label);
        for (std::size_t u = 0; u < nu; ++u) p.off_u[u] += ((u / sst[ax]) % src_dims[ax]) * tst[a];
      } else {
        const int ax = dst_pos.at(node.label);
        for (std::size_t v = 0; v < nv; ++v) p.off_v[v] += ((v / dstt[ax]) % dst_dims[ax]) * tst[a];
      }
    }
    pieces.push_back(std::move(p));
  }
  Mat m(static_cast<Eigen::Index>(nv), static_cast<Eigen::Index>(nu));
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v = 0; v < nv; ++v) {
      cd x = scalar;
      for (const auto& p : pieces) x *= p.data[p.off_u[u] + p.off_v[v]];
      m(v, u) = x;
    }
  return m;
}

Mat rho_bar_dense(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& alpha,
                  const MultiIndex& beta, const MultiIndex& window) {
  check_window(cfg, alpha, window);
  check_window(cfg, beta, window);
  const std::size_t nu = head_dim(cfg, rp, alpha);
  const std::size_t nv = head_dim(cfg, rp, beta);
  Mat m(static_cast<Eigen::Index>(nv), static_cast<Eigen::Index>(nu));
  for (std::size_t u = 0; u < nu; ++u) {
    Vec e = Vec::Zero(static_cast<Eigen::Index>(nu));
    e[u] = 1.0;
    const auto moved = apply_group(g, xi_tail_state(cfg, rp, e, alpha, window));
    m.col(static_cast<Eigen::Index>(u)) = extract_head(cfg, rp, beta, moved);
  }
  return m;
}

MultiIndex support_window(const PairConfig&, const GroupElement& g, const MultiIndex& alpha) {
  MultiIndex w = alpha;
  for (const auto& [from, to] : g.moved())
    for (const auto& pt : {from, to})
      if (!pt.exceptional) w.entries[pt.smell - 1] = std::max(w.entries[pt.smell - 1], pt.level);
  return w;
}

}  // namespace trainlab
