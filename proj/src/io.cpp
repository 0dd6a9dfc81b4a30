#include "latticeflow/io.hpp"

#include <cctype>

namespace lf::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadJson", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

ZVec zvec(const json& j) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  ZVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = as_int(j[i]);
  return v;
}

std::vector<std::int64_t> ints(const json& j) {
  ZVec v = zvec(j);
  return {v.begin(), v.end()};
}

json arr(const ZVec& v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

std::string str(const Integer& x) { return x.str(); }

Rational rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad("expected a rational string, got " + j.dump());
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const std::exception&) {
    bad("not a rational: " + j.get<std::string>());
  }
}

Integer integer(const json& j) {
  Rational q = rat(j);
  if (denominator(q) != 1) bad("expected an integer, got " + j.dump());
  return numerator(q);
}

json rats(const RatVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

RatVector rat_vec(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rat(j[i]);
  return v;
}

json exponent_json(const Exponent& u) {
  json out = json::object();
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (u(i)) out[std::to_string(i)] = u(i);
  return out;
}

Exponent exponent_from(const json& j, int n) {
  if (!j.is_object()) bad("monomial must be an object");
  Exponent u = Exponent::Zero(n);
  for (auto& [k, v] : j.items()) {
    int i = -1;
    try {
      size_t pos = 0;
      i = std::stoi(k, &pos);
      if (pos != k.size()) i = -1;
    } catch (const std::exception&) {
    }
    if (i < 0 || i >= n) bad("variable index out of range: " + k);
    u(i) = as_int(v);
    if (u(i) < 0) bad("negative exponent");
  }
  return u;
}

std::vector<int> int_list(const json& j) {
  std::vector<int> out;
  for (auto x : ints(j)) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace

json to_json(const DirectedGraph& g) {
  json e = json::array();
  for (auto& ed : g.edges()) e.push_back({g.ids()[static_cast<size_t>(ed.tail)], g.ids()[static_cast<size_t>(ed.head)]});
  return {{"vertices", g.ids()}, {"edges", e}};
}

DirectedGraph graph_from_json(const json& j) {
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("\"vertices\" must be an array");
  std::vector<std::string> ids;
  for (auto& v : vs) ids.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  DirectedGraph g(ids);
  auto id = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("edge must be [tail, head]");
    g.add_edge(g.index_of(id(e[0])), g.index_of(id(e[1])));
  }
  return g;
}

json to_json(const FlowPolytope& p) {
  json u = json::array();
  for (auto& c : p.upper()) u.push_back(c ? json(*c) : json("inf"));
  return {{"graph", to_json(p.graph())}, {"demand", arr(p.demand())}, {"lower", arr(p.lower())}, {"upper", u}};
}

FlowPolytope polytope_from_json(const json& j) {
  DirectedGraph g = graph_from_json(field(j, "graph"));
  ZVec d = zvec(field(j, "demand"));
  const int m = g.num_edges();
  ZVec l = j.contains("lower") ? zvec(j["lower"]) : ZVec::Zero(m);
  std::vector<Capacity> u(static_cast<size_t>(m));
  if (j.contains("upper")) {
    const json& ju = j["upper"];
    if (!ju.is_array() || static_cast<int>(ju.size()) != m) bad("\"upper\" needs one entry per edge");
    for (int e = 0; e < m; ++e) {
      const json& x = ju[static_cast<size_t>(e)];
      if (x.is_string() && x.get<std::string>() == "inf") continue;
      u[static_cast<size_t>(e)] = as_int(x);
    }
  }
  return FlowPolytope(g, d, l, u);
}

json to_json(const TransportSpec& s) { return {{"r", s.r}, {"c", s.c}}; }

TransportSpec transport_from_json(const json& j) { return {ints(field(j, "r")), ints(field(j, "c"))}; }

json to_json(const PointConfiguration& a) {
  json pts = json::array();
  for (auto& p : a.points()) pts.push_back(arr(p));
  json out = {{"points", pts}};
  if (auto& c = a.certificate()) {
    json phi = json::array();
    for (Eigen::Index i = 0; i < c->phi.size(); ++i) phi.push_back(str(c->phi(i)));
    out["certificate"] = {{"phi", phi}, {"c", str(c->c)}};
  }
  return out;
}

PointConfiguration configuration_from_json(const json& j) {
  std::vector<ZVec> pts;
  for (auto& p : field(j, "points")) pts.push_back(zvec(p));
  std::optional<HomogeneityCertificate> cert;
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    const json& phi = field(c, "phi");
    HomogeneityCertificate h{IntVector(static_cast<Eigen::Index>(phi.size())), integer(field(c, "c"))};
    for (size_t i = 0; i < phi.size(); ++i) h.phi(static_cast<Eigen::Index>(i)) = integer(phi[i]);
    cert = h;
  }
  return PointConfiguration(std::move(pts), cert);
}

json to_json(const Subdivision& d, bool include_points) {
  json out = {{"maximal_cells", d.maximal_cells()}};
  if (include_points) out["points"] = to_json(d.config())["points"];
  return out;
}

Subdivision subdivision_from_json(const json& j, const PointConfiguration& a) {
  std::vector<Subset> cells;
  for (auto& c : field(j, "maximal_cells")) {
    Subset s = int_list(c);
    for (int i : s)
      if (i < 0 || i >= a.size()) bad("cell index out of range");
    cells.push_back(s);
  }
  return Subdivision(a, cells);
}

Subdivision subdivision_from_json(const json& j) {
  return subdivision_from_json(j, configuration_from_json({{"points", field(j, "points")}}));
}

json to_json(const RegularityCertificate& c) {
  json fs = json::array();
  for (auto& f : c.functionals) fs.push_back({{"lin", rats(f.lin)}, {"c", to_string(f.c)}});
  return {{"weights", rats(c.weights)}, {"functionals", fs}};
}

RegularityCertificate certificate_from_json(const json& j) {
  RegularityCertificate c;
  c.weights = rat_vec(field(j, "weights"));
  if (j.contains("functionals"))
    for (auto& f : j["functionals"]) c.functionals.push_back({rat_vec(field(f, "lin")), rat(field(f, "c"))});
  return c;
}

json to_json(const Binomial& b) { return {{"lead", exponent_json(b.lead)}, {"trail", exponent_json(b.trail)}}; }

Binomial binomial_from_json(const json& j, int n) {
  return {exponent_from(field(j, "lead"), n), exponent_from(field(j, "trail"), n)};
}

json to_json(const TermOrder& o) {
  if (o.kind == TermOrder::Kind::Grevlex) return {{"kind", "grevlex"}, {"perm", o.perm}};
  return {{"kind", "weight"}, {"w", rats(o.w)}, {"perm", o.perm}};
}

TermOrder order_from_json(const json& j, int n) {
  const json& k = field(j, "kind");
  std::vector<int> perm = j.contains("perm") ? int_list(j["perm"]) : std::vector<int>{};
  if (!perm.empty()) {
    std::vector<int> s = perm;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
      if (s[static_cast<size_t>(i)] != i || static_cast<int>(s.size()) != n) bad("\"perm\" is not a permutation");
  }
  if (k == "grevlex") return perm.empty() ? TermOrder::grevlex(n) : TermOrder::grevlex(perm);
  if (k == "weight") {
    RatVector w = rat_vec(field(j, "w"));
    if (w.size() != n) bad("\"w\" needs one entry per variable");
    return TermOrder::weight(w, perm);
  }
  bad("unknown order kind " + k.dump());
}

Binomial binomial_from_string(const std::string& s, int n) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto number = [&] {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("BadBinomial", "expected a number at position " + std::to_string(start));
    return std::stol(s.substr(start, pos - start));
  };
  auto monomial = [&] {
    Exponent u = Exponent::Zero(n);
    skip();
    if (pos < s.size() && s[pos] == '1') {
      ++pos;
      return u;
    }
    for (;;) {
      skip();
      if (pos >= s.size() || s[pos] != 'x') throw Error("BadBinomial", "expected a variable in \"" + s + "\"");
      ++pos;
      long i = number();
      if (i < 1 || i > n) throw Error("BadBinomial", "variable x" + std::to_string(i) + " out of range");
      long e = 1;
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = number();
      }
      u(i - 1) += e;
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      return u;
    }
  };
  Binomial b;
  b.lead = monomial();
  skip();
  if (pos >= s.size() || s[pos] != '-') throw Error("BadBinomial", "expected \" - \" in \"" + s + "\"");
  ++pos;
  b.trail = monomial();
  skip();
  if (pos != s.size()) throw Error("BadBinomial", "trailing text in \"" + s + "\"");
  return b;
}

InputKind input_kind(const json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  if (j.contains("graph")) return InputKind::Polytope;
  if (j.contains("r") && j.contains("c")) return InputKind::Transport;
  if (j.contains("points")) return InputKind::Configuration;
  bad("cannot tell the input kind: expected \"graph\", \"r\"/\"c\" or \"points\"");
}

}  // namespace lf::io
