#include "trainlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace trainlab {
namespace {

constexpr int kFailNotes = 3;

GroupElement sample(const PairConfig& cfg, const SuiteOptions& opt, Rng& rng) {
  return random_element(cfg, opt.support, rng);
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Vec random_unit(std::size_t n, Rng& rng) {
  Vec v(static_cast<Eigen::Index>(n));
  for (auto& x : v) {
    const double re = rng.normal();
    x = cd(re, rng.normal());
  }
  return v / v.norm();
}

// Runs one case; a case over the dense cap is a skip, not a failure.
template <class F>
void capped(CheckResult& r, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DimensionCap) throw;
    ++r.skipped;
  }
}

void note_skips(CheckResult& r, const char* what) {
  if (r.skipped) r.note += (r.note.empty() ? "" : "; ") + std::to_string(r.skipped) + " " + what + " over the dense cap";
}

MultiIndex plus_one(const MultiIndex& a, int n) {
  MultiIndex out = a;
  for (auto& x : out.entries) x += n;
  return out;
}

}  // namespace

void CheckResult::fail(const std::string& why) {
  if (failed < kFailNotes) note += (note.empty() ? "" : "; ") + why;
  ++failed;
}

void CheckResult::residual(double r, double tol) {
  max_residual = std::max(max_residual, r);
  if (r <= tol) {
    pass();
  } else {
    std::ostringstream os;
    os << "residual " << r << " > " << tol;
    fail(os.str());
  }
}

void CheckResult::merge(const CheckResult& o) {
  passed += o.passed;
  failed += o.failed;
  skipped += o.skipped;
  max_residual = std::max(max_residual, o.max_residual);
  if (!o.note.empty() && note.find(o.note) == std::string::npos) note += (note.empty() ? "" : "; ") + o.note;
}

MultiIndex random_small_index(const PairConfig& cfg, Rng& rng) {
  MultiIndex a;
  for (int i = 0; i < cfg.p(); ++i) a.entries.push_back(static_cast<int>(rng.below(2)));
  return a;
}

CheckResult check_encoding(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult r{"encoding bijectivity"};
  Rng rng(opt.seed);
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng), b = random_small_index(cfg, rng);
    const auto g = sample(cfg, opt, rng);
    const auto raw = encode(cfg, g, a, b);
    if (decode(cfg, raw) == g)
      r.pass();
    else
      r.fail("decode(encode(g)) != g");
  }
  return r;
}

std::vector<CheckResult> check_products(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult stab{"eventual constancy"}, rep{"representative independence"}, cross{"glue = forcing apart"},
      diag{"alpha-index diagnostic"};
  Rng rng(opt.seed + 1);
  long alpha_breaks = 0, alpha_total = 0;
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng), b = random_small_index(cfg, rng), c = random_small_index(cfg, rng);
    const auto g = sample(cfg, opt, rng), h = sample(cfg, opt, rng);
    const int n0 = stabilization_bound(g, h, b);
    const auto p0 = force_apart_product(cfg, g, h, a, b, c, n0);
    const auto p1 = force_apart_product(cfg, g, h, a, b, c, n0 + 1);
    const auto p2 = force_apart_product(cfg, g, h, a, b, c, n0 + 2);
    if (p0 == p1 && p1 == p2)
      stab.pass();
    else
      stab.fail("certificate moved between N0 and N0+2");
    const auto glued = glue_product(cfg, coset_of(cfg, g, b, c), coset_of(cfg, h, a, b));
    if (glued == p0)
      cross.pass();
    else
      cross.fail("glue and forcing apart differ");

    const auto alpha_base = force_apart_product_alpha_index(cfg, g, h, a, b, c, n0);
    for (int k = 0; k < opt.perturbations; ++k) {
      const auto g2 = compose(compose(sample_k(cfg, c, opt.support, rng), g), sample_k(cfg, b, opt.support, rng));
      const auto h2 = compose(compose(sample_k(cfg, b, opt.support, rng), h), sample_k(cfg, a, opt.support, rng));
      const int n2 = stabilization_bound(g2, h2, b);
      const auto q = force_apart_product(cfg, g2, h2, a, b, c, n2);
      if (q == p0)
        rep.pass();
      else
        rep.fail("perturbed representatives changed the product");
      if (glue_product(cfg, coset_of(cfg, g2, b, c), coset_of(cfg, h2, a, b)) == q)
        cross.pass();
      else
        cross.fail("glue and forcing apart differ on perturbed factors");
      ++alpha_total;
      if (!(force_apart_product_alpha_index(cfg, g2, h2, a, b, c, n2) == alpha_base)) ++alpha_breaks;
    }
  }
  diag.passed = alpha_total;
  diag.note = "alpha-indexed forcing broke representative independence in " + std::to_string(alpha_breaks) + " of " +
              std::to_string(alpha_total) + " perturbations (informational)";
  return {stab, rep, cross, diag};
}

CheckResult check_associativity(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult r{"associativity"};
  Rng rng(opt.seed + 2);
  for (int t = 0; t < opt.cases; ++t) {
    const auto d = random_small_index(cfg, rng), a = random_small_index(cfg, rng), b = random_small_index(cfg, rng),
               c = random_small_index(cfg, rng);
    const auto G = coset_of(cfg, sample(cfg, opt, rng), b, c);
    const auto H = coset_of(cfg, sample(cfg, opt, rng), a, b);
    const auto F = coset_of(cfg, sample(cfg, opt, rng), d, a);
    if (glue_product(cfg, glue_product(cfg, G, H), F) == glue_product(cfg, G, glue_product(cfg, H, F)))
      r.pass();
    else
      r.fail("(gh)f != g(hf)");
  }
  return r;
}

CheckResult check_involution(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult r{"involution laws"};
  Rng rng(opt.seed + 3);
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng), b = random_small_index(cfg, rng), c = random_small_index(cfg, rng);
    const auto g = sample(cfg, opt, rng);
    const auto G = coset_of(cfg, g, b, c);
    const auto H = coset_of(cfg, sample(cfg, opt, rng), a, b);
    const auto P = glue_product(cfg, G, H);
    if (involution(cfg, P) == glue_product(cfg, involution(cfg, H), involution(cfg, G)))
      r.pass();
    else
      r.fail("(gh)^box != h^box g^box");
    if (involution(cfg, involution(cfg, P)) == P)
      r.pass();
    else
      r.fail("box twice is not the identity");
    if (involution(cfg, G) == coset_of(cfg, inverse(g), c, b))
      r.pass();
    else
      r.fail("box differs from the coset of the inverse");
  }
  return r;
}

CheckResult check_multiplicativity(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt) {
  CheckResult r{"rho_bar multiplicativity"};
  Rng rng(opt.seed + 4);
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng), b = random_small_index(cfg, rng), c = random_small_index(cfg, rng);
    const auto g = sample(cfg, opt, rng), h = sample(cfg, opt, rng);
    capped(r, [&] {
      const Mat G = rho_bar(cfg, rp, g, b, c);
      const Mat GH = G * rho_bar(cfg, rp, h, a, b);
      // g theta h, and the minimal lift of the glued diagram
      const auto f = compose(compose(g, theta(cfg, b, stabilization_bound(g, h, b))), h);
      r.residual(max_abs(GH - rho_bar(cfg, rp, f, a, c)), 1e-10);
      const auto glued = glue_product(cfg, coset_of(cfg, g, b, c), coset_of(cfg, h, a, b));
      r.residual(max_abs(GH - rho_bar(cfg, rp, lift(cfg, glued), a, c)), 1e-10);
      // dense cross-check of the contraction where the window fits the cap
      auto w = support_window(cfg, g, b);
      for (int i = 0; i < cfg.p(); ++i) w.entries[i] = std::max(w.entries[i], c.entries[i]);
      capped(r, [&] { r.residual(max_abs(rho_bar_dense(cfg, rp, g, b, c, w) - G), 1e-10); });
    });
  }
  note_skips(r, "cases");
  return r;
}

std::vector<CheckResult> check_contractive_star(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt) {
  CheckResult norm{"contractivity"}, star{"*-compatibility"};
  Rng rng(opt.seed + 5);
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng), b = random_small_index(cfg, rng);
    const auto g = sample(cfg, opt, rng);
    capped(norm, [&] {
      const Mat G = rho_bar(cfg, rp, g, a, b);
      const Mat Ginv = rho_bar(cfg, rp, inverse(g), b, a);
      Eigen::JacobiSVD<Mat> svd(G);
      const double s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
      norm.residual(std::max(0.0, s - 1.0), 1e-12);
      star.residual(max_abs(G.adjoint() - Ginv), 1e-12);
    });
  }
  star.skipped = norm.skipped;
  note_skips(norm, "cases");
  note_skips(star, "cases");
  return {norm, star};
}

CheckResult check_projection(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt) {
  CheckResult r{"projection realization"};
  Rng rng(opt.seed + 6);
  for (int t = 0; t < opt.cases; ++t) {
    const auto a = random_small_index(cfg, rng);
    const auto tail = plus_one(a, 1);  // u, v arbitrary up to here
    const int N = 1;
    const auto window = plus_one(a, 2 * N);
    capped(r, [&] {
      make_state(cfg, rp, window);  // cap probe before drawing heads
      const auto u = xi_tail_state(cfg, rp, random_unit(head_dim(cfg, rp, tail), rng), tail, window);
      const auto v = xi_tail_state(cfg, rp, random_unit(head_dim(cfg, rp, tail), rng), tail, window);
      const auto pu = project_alpha(cfg, rp, a, u);
      r.residual(std::abs(inner(apply_group(theta(cfg, a, N), u), v) - inner(pu, v)), 1e-12);
      // projection axioms
      r.residual((project_alpha(cfg, rp, a, pu).data - pu.data).cwiseAbs().maxCoeff(), 1e-12);
      r.residual(std::abs(inner(pu, v) - inner(u, project_alpha(cfg, rp, a, v))), 1e-12);
      if (cfg.kind() == Kind::Wreath)
        r.residual((project_alpha(cfg, rp, a, u, true).data - pu.data).cwiseAbs().maxCoeff(), 1e-12);
    });
  }
  note_skips(r, "cases");
  return r;
}

std::vector<CheckResult> check_spherical(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt) {
  CheckResult agree{"spherical agreement"}, bi{"oracle biinvariance"};
  for (int l : cfg.Lambda())
    if (l != 0) {
      agree.note = bi.note = "needs Lambda = 0";
      return {agree, bi};
    }
  Rng rng(opt.seed + 7);
  const auto z = MultiIndex::zeros(cfg.p());
  for (int t = 0; t < opt.cases; ++t) {
    const auto g = sample(cfg, opt, rng);
    const auto g2 = compose(compose(sample_k(cfg, z, opt.support, rng), g), sample_k(cfg, z, opt.support, rng));
    std::optional<cd> oracle;
    capped(agree, [&] {
      oracle = spherical_oracle(cfg, rp, g, support_window(cfg, g, z));
      agree.residual(std::abs(spherical_value(cfg, rp, coset_of(cfg, g, z, z), true) - *oracle), 1e-10);
    });
    if (!oracle) {
      ++bi.skipped;
      continue;
    }
    capped(bi, [&] { bi.residual(std::abs(spherical_oracle(cfg, rp, g2, support_window(cfg, g2, z)) - *oracle), 1e-10); });
  }
  note_skips(agree, "cases");
  note_skips(bi, "cases");
  return {agree, bi};
}

CheckResult check_gram(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult r{"Gram closed form"};
  if (cfg.q() != 1 || cfg.Lambda()[0] != 0) {
    r.note = "Young shape only";
    return r;
  }
  for (int z : cfg.Z()[0])
    if (z != 1) {
      r.note = "Young shape only";
      return r;
    }
  Rng rng(opt.seed + 8);
  const int p = cfg.p();
  const auto zero = MultiIndex::zeros(p);
  for (int t = 0; t < opt.cases; ++t) {
    // Gram of random unit vectors; every fourth case rank one
    const int d = t % 4 == 3 ? 1 : 1 + static_cast<int>(rng.below(3));
    std::vector<Vec> eta;
    for (int k = 0; k < p; ++k) eta.push_back(random_unit(d, rng));
    GramSpec gram{Mat(p, p)};
    for (int k = 0; k < p; ++k)
      for (int l = 0; l < p; ++l) gram.a(k, l) = eta[l].dot(eta[k]);
    const auto rp = gram_realization(cfg, gram);
    const auto g = sample(cfg, opt, rng);
    const auto m = coset_of(cfg, g, zero, zero);
    r.residual(std::abs(gram_spherical(cfg, gram, m) - spherical_value(cfg, rp, m)), 1e-10);
    r.residual(std::abs(gram_spherical(cfg, gram, m) - spherical_oracle(cfg, rp, g, support_window(cfg, g, zero))), 1e-10);
    if (p >= 2) {
      const auto swap = GroupElement::from_cycles({{GroundPoint::R(1, 1, 1, 1), GroundPoint::R(1, 2, 1, 1)}});
      const auto sm = coset_of(cfg, swap, zero, zero);
      const double a12 = std::norm(gram.a(0, 1));
      r.residual(std::abs(gram_spherical(cfg, gram, sm) - a12), 1e-10);
      r.residual(std::abs(spherical_value(cfg, rp, sm) - a12), 1e-10);
    }
  }
  return r;
}

GroupElement belyi_torus_element(const PairConfig&) {
  std::map<GroundPoint, GroundPoint> map;
  for (int k = 1; k <= 3; ++k) {
    map[GroundPoint::R(2, 1, k, 1)] = GroundPoint::R(2, 1, k % 3 + 1, 1);
    map[GroundPoint::R(3, 1, k, 1)] = GroundPoint::R(3, 1, (k + 1) % 3 + 1, 1);
  }
  return GroupElement::from_map(map);
}

CheckResult check_topology(const PairConfig& cfg, const SuiteOptions& opt) {
  CheckResult r{"topology"};
  if (cfg.kind() != Kind::Plain) {
    r.note = "plain kind only";
    return r;
  }
  const bool belyi = cfg.q() == 3 && cfg.p() == 1 && cfg.Z() == std::vector<std::vector<int>>{{1}, {1}, {1}} &&
                     cfg.Lambda() == std::vector<int>(3, 0);
  auto check_surface = [&](const SurfaceComplex& s) {
    for (const auto& c : s.components) {
      bool ok = c.chi == c.V - c.E + c.F && c.V == c.V_trace;
      if (c.genus) ok = ok && c.chi % 2 == 0 && *c.genus >= 0;
      if (ok)
        r.pass();
      else
        r.fail("surface counts disagree");
    }
  };
  // a pure envelope before cleanup is a sphere
  for (int i = 1; i <= cfg.p(); ++i) {
    Graph env;
    const int a = env.add_node(Node::vertex(Sign::Plus, i));
    const int b = env.add_node(Node::vertex(Sign::Minus, i));
    for (const auto& [color, mel] : cfg.slots(i)) env.edges.push_back({a, b, color, mel, mel});
    const auto s = surface_of_graph(cfg, env, default_orders(cfg));
    check_surface(s);
    if (s.components.size() == 1 && s.components[0].chi == 2)
      r.pass();
    else
      r.fail("pure envelope is not a sphere");
  }
  Rng rng(opt.seed + 9);
  const auto zero = MultiIndex::zeros(cfg.p());
  for (int t = 0; t < opt.cases; ++t) {
    const bool closed = t % 2 == 0;
    const auto a = closed ? zero : random_small_index(cfg, rng);
    const auto b = closed ? zero : random_small_index(cfg, rng);
    const auto m = coset_of(cfg, random_element(cfg, opt.support + 1, rng), a, b);
    check_surface(surface_view(cfg, m));
    if (belyi && closed) {
      const auto bd = belyi_data(cfg, m);
      const auto sv = surface_view(cfg, m);
      for (std::size_t c = 0; c < bd.components.size(); ++c) {
        if (product_is_identity(bd.components[c]))
          r.pass();
        else
          r.fail("sigma1 sigma2 sigma3 != id");
        if (sv.components[c].genus && *sv.components[c].genus == bd.components[c].genus)
          r.pass();
        else
          r.fail("Belyi genus differs from the surface genus");
      }
    }
  }
  if (belyi) {
    // trivial covering: one sheet, three edges between one + and one - vertex
    Graph sheet;
    const int a = sheet.add_node(Node::vertex(Sign::Plus, 1));
    const int b = sheet.add_node(Node::vertex(Sign::Minus, 1));
    for (int c = 1; c <= 3; ++c) sheet.edges.push_back({a, b, c, 1, 1});
    const auto triv = belyi_of_graph(cfg, sheet);
    if (triv.components.size() == 1 && triv.components[0].degree == 1 && triv.components[0].genus == 0 &&
        product_is_identity(triv.components[0]))
      r.pass();
    else
      r.fail("trivial covering is not a degree-1 sphere");
    const auto m = coset_of(cfg, belyi_torus_element(cfg), zero, zero);
    const auto bd = belyi_data(cfg, m);
    const auto sv = surface_view(cfg, m);
    bool ok = bd.components.size() == 1 && bd.components[0].degree == 3 && bd.components[0].chi == 0 &&
              bd.components[0].genus == 1 && sv.components.size() == 1 && sv.components[0].genus == 1 &&
              sv.components[0].V == sv.components[0].V_trace;
    for (const auto& s : bd.components[0].sigma) ok = ok && cycle_count(s) == 1;
    if (ok)
      r.pass();
    else
      r.fail("degree-3 torus example");
  }
  return r;
}

CheckResult check_view_faithfulness(const PairConfig& cfg) {
  CheckResult r{"view faithfulness"};
  const bool young = cfg.q() == 1 && std::all_of(cfg.Z()[0].begin(), cfg.Z()[0].end(), [](int z) { return z == 1; });
  const bool chips = cfg.q() == 1 && std::all_of(cfg.Z()[0].begin(), cfg.Z()[0].end(), [](int z) { return z == 2; });
  if (!young && !chips) {
    r.note = "Young or chips shape only";
    return r;
  }
  const auto pts = enumerate_window(cfg, MultiIndex{std::vector<int>(cfg.p(), 3)});
  if (pts.size() > 8) {
    r.note = "window too large to enumerate";
    return r;
  }
  std::vector<int> perm(pts.size());
  std::vector<GroupElement> elements;
  for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = static_cast<int>(t);
  do {
    std::map<GroundPoint, GroundPoint> map;
    for (std::size_t t = 0; t < perm.size(); ++t) map[pts[t]] = pts[perm[t]];
    elements.push_back(GroupElement::from_map(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int p = cfg.p();
  for (int mask = 0; mask < (1 << (2 * p)); ++mask) {
    MultiIndex a, b;
    for (int i = 0; i < p; ++i) {
      a.entries.push_back((mask >> i) & 1);
      b.entries.push_back((mask >> (p + i)) & 1);
    }
    std::map<std::string, std::string> view_of, cert_of;
    std::map<std::string, Morphism> sample_of;
    for (const auto& g : elements) {
      const auto m = coset_of(cfg, g, a, b);
      const std::string v = young ? young_view(cfg, m).str() : chip_view(cfg, m).str();
      auto [vi, vnew] = view_of.emplace(m.certificate(), v);
      auto [ci, cnew] = cert_of.emplace(v, m.certificate());
      if (vi->second == v && ci->second == m.certificate())
        r.pass();
      else
        r.fail("views and certificates separate different pairs at " + a.str() + "->" + b.str());
      if (vnew) sample_of.emplace(m.certificate(), m);
    }
    // each distinct view rebuilds its morphism
    for (const auto& [cert, m] : sample_of) {
      const auto back = young ? segments_to_morphism(cfg, young_view(cfg, m)) : chips_to_morphism(cfg, chip_view(cfg, m));
      if (back == m)
        r.pass();
      else
        r.fail("view does not rebuild its morphism");
    }
  }
  return r;
}

std::vector<CheckResult> run_suite(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_encoding(cfg, opt));
  for (auto& c : check_products(cfg, opt)) out.push_back(c);
  out.push_back(check_associativity(cfg, opt));
  out.push_back(check_involution(cfg, opt));
  out.push_back(check_multiplicativity(cfg, rp, opt));
  for (auto& c : check_contractive_star(cfg, rp, opt)) out.push_back(c);
  out.push_back(check_projection(cfg, rp, opt));
  for (auto& c : check_spherical(cfg, rp, opt)) out.push_back(c);
  out.push_back(check_gram(cfg, opt));
  out.push_back(check_topology(cfg, opt));
  out.push_back(check_view_faithfulness(cfg));
  return out;
}

}  // namespace trainlab
