#include "trainlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace trainlab {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

Sign sign_from_json(const json& j) {
  if (j == "+") return Sign::Plus;
  if (j == "-") return Sign::Minus;
  bad("sign must be \"+\" or \"-\"");
}

const char* sign_str(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Vec coords_from_json(const json& j) {
  if (!j.is_array()) bad("coords must be a list of [re, im]");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& c = j[k];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) bad("coordinate must be [re, im]");
    v(static_cast<Eigen::Index>(k)) = cd(c[0].get<double>(), c[1].get<double>());
  }
  return v;
}

json coords_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

MultiIndex parse_multi_index(const std::string& text, int p) {
  if (text == "0") return MultiIndex::zeros(p);
  MultiIndex out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.entries.push_back(std::stoi(part, &used));
      if (used != part.size()) bad("bad multi-index \"" + text + "\"");
    } catch (const std::logic_error&) {
      bad("bad multi-index \"" + text + "\"");
    }
  }
  return out;
}

MultiIndex multi_index_from_json(const json& j) { return MultiIndex{int_list(j, "multi-index")}; }

PairConfig config_from_json(const json& j) {
  RawConfig raw;
  raw.q = as_int(field(j, "q"), "q");
  raw.p = as_int(field(j, "p"), "p");
  const auto& z = field(j, "Z");
  if (!z.is_array()) bad("Z must be a list of rows");
  for (const auto& row : z) raw.Z.push_back(int_list(row, "Z row"));
  raw.Lambda = int_list(field(j, "Lambda"), "Lambda");
  const auto& kind = field(j, "kind");
  if (kind == "wreath")
    raw.kind = Kind::Wreath;
  else if (kind == "plain")
    raw.kind = Kind::Plain;
  else
    bad("kind must be \"wreath\" or \"plain\"");
  raw.trunc = as_int(field(j, "trunc"), "trunc");
  return validate_config(raw);
}

std::vector<int> config_dims(const json& j, const PairConfig& cfg) {
  if (!j.contains("dims")) return std::vector<int>(static_cast<std::size_t>(cfg.q()), 2);
  auto dims = int_list(j.at("dims"), "dims");
  if (static_cast<int>(dims.size()) != cfg.q()) bad("dims needs one entry per color");
  for (int d : dims)
    if (d < 1) bad("dims must be positive");
  return dims;
}

json to_json(const PairConfig& cfg) {
  return json{{"q", cfg.q()},   {"p", cfg.p()},   {"Z", cfg.Z()}, {"Lambda", cfg.Lambda()},
              {"kind", kind_name(cfg.kind())}, {"trunc", cfg.trunc()}};
}

GroundPoint point_from_json(const json& j) {
  const int color = as_int(field(j, "j"), "j");
  const auto& t = field(j, "t");
  if (t == "L") return GroundPoint::L(color, as_int(field(j, "idx"), "idx"));
  if (t == "R")
    return GroundPoint::R(color, as_int(field(j, "i"), "i"), as_int(field(j, "k"), "k"), as_int(field(j, "m"), "m"));
  bad("point type must be \"L\" or \"R\"");
}

json to_json(const GroundPoint& pt) {
  if (pt.exceptional) return json{{"j", pt.color}, {"t", "L"}, {"idx", pt.idx}};
  return json{{"j", pt.color}, {"t", "R"}, {"i", pt.smell}, {"k", pt.level}, {"m", pt.melody}};
}

GroupElement element_from_json(const json& j) {
  const auto& cs = field(j, "cycles");
  if (!cs.is_array()) bad("cycles must be a list");
  std::vector<std::vector<GroundPoint>> cycles;
  for (const auto& c : cs) {
    if (!c.is_array()) bad("cycle must be a list of points");
    auto& cyc = cycles.emplace_back();
    for (const auto& p : c) cyc.push_back(point_from_json(p));
  }
  return GroupElement::from_cycles(cycles);
}

json to_json(const GroupElement& g) {
  json cycles = json::array();
  for (const auto& c : g.cycles()) {
    json cj = json::array();
    for (const auto& p : c) cj.push_back(to_json(p));
    cycles.push_back(cj);
  }
  return json{{"cycles", cycles}};
}

Morphism morphism_from_json(const PairConfig& cfg, const json& j) {
  const auto source = multi_index_from_json(field(j, "source"));
  const auto target = multi_index_from_json(field(j, "target"));
  const auto& comps = field(j, "components");
  if (!comps.is_array()) bad("components must be a list");
  Graph g;
  for (const auto& c : comps) {
    std::vector<int> vid, tid;
    for (const auto& v : field(c, "vertices"))
      vid.push_back(g.add_node(Node::vertex(sign_from_json(field(v, "sign")), as_int(field(v, "smell"), "smell"))));
    for (const auto& t : field(c, "tags"))
      tid.push_back(g.add_node(Node::tag(sign_from_json(field(t, "sign")), point_from_json(field(t, "label")))));
    auto slot = [&](const json& s) {
      const bool vertex = s.is_object() && s.contains("v");
      const bool tag = s.is_object() && s.contains("t");
      if (vertex == tag) bad("slot must be {\"v\": i} or {\"t\": i}");
      const int k = as_int(s.at(vertex ? "v" : "t"), "slot index");
      const auto& ids = vertex ? vid : tid;
      if (k < 0 || k >= static_cast<int>(ids.size())) bad("slot index " + std::to_string(k) + " out of range");
      return ids[static_cast<std::size_t>(k)];
    };
    for (const auto& e : field(c, "edges")) {
      Edge edge;
      edge.plus = slot(field(e, "from"));
      edge.minus = slot(field(e, "to"));
      edge.color = as_int(field(e, "color"), "color");
      if (e.contains("mel+")) edge.mel_plus = as_int(e.at("mel+"), "mel+");
      if (e.contains("mel-")) edge.mel_minus = as_int(e.at("mel-"), "mel-");
      g.edges.push_back(edge);
    }
  }
  return make_morphism(cfg, g, source, target);
}

json to_json(const Morphism& m) {
  json comps = json::array();
  for (const auto& c : m.diagram.components) {
    std::vector<int> local(c.graph.nodes.size());
    json vertices = json::array(), tags = json::array();
    for (std::size_t n = 0; n < c.graph.nodes.size(); ++n) {
      const auto& node = c.graph.nodes[n];
      if (node.is_tag) {
        local[n] = static_cast<int>(tags.size());
        tags.push_back(json{{"sign", sign_str(node.sign)}, {"label", to_json(node.label)}});
      } else {
        local[n] = static_cast<int>(vertices.size());
        vertices.push_back(json{{"sign", sign_str(node.sign)}, {"smell", node.smell}});
      }
    }
    auto slot = [&](int n) {
      return json{{c.graph.nodes[static_cast<std::size_t>(n)].is_tag ? "t" : "v", local[static_cast<std::size_t>(n)]}};
    };
    json edges = json::array();
    for (const auto& e : c.graph.edges) {
      json ej{{"from", slot(e.plus)}, {"to", slot(e.minus)}, {"color", e.color}};
      if (e.mel_plus) ej["mel+"] = e.mel_plus;
      if (e.mel_minus) ej["mel-"] = e.mel_minus;
      edges.push_back(ej);
    }
    comps.push_back(json{{"vertices", vertices}, {"tags", tags}, {"edges", edges}});
  }
  return json{{"source", m.source.entries},
              {"target", m.target.entries},
              {"components", comps},
              {"certificate", m.certificate()}};
}

RepParams rep_from_json(const PairConfig& cfg, const json& j) {
  RepParams rp;
  rp.dims = int_list(field(j, "dims"), "dims");
  rp.xi.assign(static_cast<std::size_t>(cfg.p()), Vec());
  for (const auto& x : field(j, "xi")) {
    const int smell = as_int(field(x, "smell"), "smell");
    if (smell < 1 || smell > cfg.p()) bad("xi smell " + std::to_string(smell) + " out of range");
    rp.xi[static_cast<std::size_t>(smell - 1)] = coords_from_json(field(x, "coords"));
  }
  if (j.contains("exceptional"))
    for (const auto& x : j.at("exceptional")) rp.exceptional[point_from_json(field(x, "point"))] = coords_from_json(field(x, "coords"));
  validate_rep(cfg, rp);
  return rp;
}

json to_json(const RepParams& rp) {
  json xi = json::array(), exc = json::array();
  for (std::size_t i = 0; i < rp.xi.size(); ++i)
    xi.push_back(json{{"smell", i + 1}, {"coords", coords_to_json(rp.xi[i])}});
  for (const auto& [pt, v] : rp.exceptional) exc.push_back(json{{"point", to_json(pt)}, {"coords", coords_to_json(v)}});
  return json{{"dims", rp.dims}, {"xi", xi}, {"exceptional", exc}};
}

json to_json(cd z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

json to_json(const SphericalValue& v) {
  json per = json::array();
  for (const auto& z : v.per_component) per.push_back(to_json(z));
  return json{{"value", to_json(v.value)}, {"per_component", per}};
}

json to_json(const SurfaceComplex& s) {
  json orders = json::array();
  for (const auto& o : s.orders) {
    json oj = json::array();
    for (const auto& [c, m] : o) oj.push_back(json::array({c, m}));
    orders.push_back(oj);
  }
  json comps = json::array();
  for (const auto& c : s.components) {
    json cj{{"V", c.V}, {"E", c.E}, {"F", c.F}, {"chi", c.chi}};
    if (c.genus) cj["genus"] = *c.genus;
    cj["boundary_tags"] = c.boundary_tags;
    comps.push_back(cj);
  }
  return json{{"orders", orders}, {"components", comps}};
}

json to_json(const BelyiData& b) {
  json comps = json::array();
  for (const auto& c : b.components) {
    json sig = json::array();
    for (const auto& s : c.sigma) sig.push_back(perm_cycles(s));
    comps.push_back(json{{"degree", c.degree},
                         {"sigma", sig},
                         {"cycle_counts", c.cycle_counts},
                         {"chi", c.chi},
                         {"genus", c.genus}});
  }
  return json{{"components", comps}};
}

json to_json(const std::vector<CheckResult>& report) {
  json checks = json::array();
  bool ok = true;
  for (const auto& c : report) {
    ok = ok && c.ok();
    json cj{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped},
            {"max_residual", c.max_residual}};
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  return json{{"ok", ok}, {"checks", checks}};
}

}  // namespace trainlab
