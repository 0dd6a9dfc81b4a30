// latticeflow: command-line front end. Exit 0 on success, 1 on domain errors, 2 on usage errors.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latticeflow/cells.hpp"
#include "latticeflow/io.hpp"
#include "latticeflow/suites.hpp"

using namespace lf;
using io::json;

namespace {

struct Options {
  std::string transport, input, format = "table";
};

// Lattice point guard for enumeration; LATTICEFLOW_GUARD overrides.
std::size_t point_guard() {
  if (const char* g = std::getenv("LATTICEFLOW_GUARD")) {
    try {
      return std::stoul(g);
    } catch (const std::exception&) {
      throw Error("BadGuard", std::string("LATTICEFLOW_GUARD=") + g);
    }
  }
  return 200000;
}

std::optional<std::vector<std::int64_t>> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

// "1,1,10/3,3,3,3"
std::optional<TransportSpec> parse_transport(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::nullopt;
  auto r = parse_ints(s.substr(0, slash)), c = parse_ints(s.substr(slash + 1));
  if (!r || !c) return std::nullopt;
  return TransportSpec{*r, *c};
}

std::string check_transport(const std::string& s) {
  return parse_transport(s) ? "" : "expected margins like 1,1,10/3,3,3,3";
}

// Rows separated by '/', flattened row-major.
std::string check_rows(const std::string& s) {
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '/'))
    if (!parse_ints(row)) return "expected integer rows like 1,0,2/0,1,1";
  return "";
}

ZVec parse_rows(const std::string& s) {
  std::vector<std::int64_t> all;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '/')) {
    auto xs = parse_ints(row);
    all.insert(all.end(), xs->begin(), xs->end());
  }
  return ZVec::Map(all.data(), static_cast<Eigen::Index>(all.size()));
}

json read_json(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw Error("CannotRead", arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("BadJson", e.what());
  }
}

// The object a subcommand works on.
struct Input {
  std::optional<TransportSpec> spec;
  std::optional<FlowPolytope> poly;
  std::optional<PointConfiguration> config;

  const FlowPolytope& polytope() const {
    if (!poly) throw Error("NeedsPolytope", "this command needs --transport or a polytope input");
    return *poly;
  }
  const PointConfiguration& points() {
    if (!config) config = lattice_configuration(polytope(), {1, point_guard()});
    return *config;
  }
};

Input load(const Options& o) {
  Input in;
  if (!o.transport.empty()) {
    in.spec = parse_transport(o.transport);
  } else {
    json j = read_json(o.input);
    switch (io::input_kind(j)) {
      case io::InputKind::Transport: in.spec = io::transport_from_json(j); break;
      case io::InputKind::Polytope: in.poly = io::polytope_from_json(j); break;
      case io::InputKind::Configuration: {
        in.config = io::configuration_from_json(j);
        if (!in.config->certificate())
          if (auto c = homogeneity_certificate(*in.config)) in.config->set_certificate(c);
        break;
      }
    }
  }
  if (in.spec)
    in.poly = transport_polytope(*in.spec);
  else if (in.poly)
    in.spec = transport_shape(*in.poly);
  return in;
}

std::string join(const ZVec& v, const char* sep = " ") {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? sep : "") << v(i);
  return os.str();
}

// Matrix rows separated by two spaces, so one point is one line.
std::string point_line(const ZVec& p, const std::optional<TransportSpec>& s) {
  if (!s) return join(p);
  std::ostringstream os;
  for (int i = 0; i < s->m(); ++i) os << (i ? "  " : "") << join(p.segment(i * s->n(), s->n()));
  return os.str();
}

void print_matrix(std::ostream& os, const ZMat& m, const std::string& indent) {
  int w = 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) w = std::max<int>(w, static_cast<int>(std::to_string(m.data()[i]).size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent;
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(w) << m(i, j);
    os << "\n";
  }
}

json matrix_json(const ZMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::int64_t> r(m.row(i).begin(), m.row(i).end());
    rows.push_back(r);
  }
  return rows;
}

json point_json(const ZVec& p, const std::optional<TransportSpec>& s) {
  if (s) return matrix_json(flow_to_matrix(p, s->m(), s->n()));
  return std::vector<std::int64_t>(p.begin(), p.end());
}

std::string one_based(const Subset& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i] + 1;
  return os.str();
}

json binomials_json(const std::vector<Binomial>& g) {
  json out = json::array();
  for (auto& b : g) out.push_back(io::to_json(b));
  return out;
}

std::vector<std::string> binomial_text(const std::vector<Binomial>& g) {
  std::vector<std::string> out;
  for (auto& b : g) out.push_back(to_string(b));
  return out;
}

const char* tf(bool b) { return b ? "true" : "false"; }

void emit(const Options& o, const json& j, const std::string& table) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

int cmd_points(const Options& o) {
  Input in = load(o);
  const PointConfiguration& a = in.points();
  std::ostringstream t;
  for (auto& p : a.points()) t << point_line(p, in.spec) << "\n";
  json j = io::to_json(a);
  if (in.spec) j["shape"] = {in.spec->m(), in.spec->n()};
  emit(o, j, t.str());
  return 0;
}

int cmd_dim(const Options& o) {
  Input in = load(o);
  DimensionReport d = in.poly ? dimension(*in.poly) : DimensionReport{affine_dim(in.points(), in.points().all()), 0, false};
  json j = {{"dim", d.dim}};
  std::ostringstream t;
  t << "dim " << d.dim << "\n";
  if (in.poly) {
    j["bound"] = d.bound, j["maximal"] = d.maximal;
    t << "bound " << d.bound << "\nmaximal " << tf(d.maximal) << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_smooth(const Options& o) {
  Input in = load(o);
  SmoothnessReport g = is_smooth_general(in.points());
  json j = {{"general", g.smooth}, {"dim", g.dim}};
  std::ostringstream t;
  if (in.spec) {
    bool tr = is_smooth_transport(*in.spec);
    json chis = json::array();
    for (auto& [i, jj] : chi(*in.spec)) chis.push_back({{"rows", i}, {"cols", jj}});
    j["transport"] = tr, j["agree"] = tr == g.smooth, j["chi"] = chis;
    t << "transport " << tf(tr) << "\n";
  }
  t << "general " << tf(g.smooth) << "\n";
  if (in.spec) t << "agree " << tf(j["agree"].get<bool>()) << "\n";
  json bad = json::array();
  for (auto& v : g.vertices) {
    if (v.unimodular) continue;
    const ZVec& p = in.points().point(v.vertex);
    bad.push_back({{"vertex", v.vertex}, {"facets", v.facets}, {"index", v.index.str()}});
    t << "vertex " << point_line(p, in.spec) << " facets " << v.facets << " index " << v.index << "\n";
  }
  j["non_smooth_vertices"] = bad;
  emit(o, j, t.str());
  return 0;
}

int cmd_decompose(const Options& o, const std::string& flow, std::int64_t k) {
  Input in = load(o);
  auto parts = bvn_decompose(in.polytope(), parse_rows(flow), k);
  json j = json::array();
  std::ostringstream t;
  for (auto& p : parts) j.push_back(point_json(p, in.spec)), t << point_line(p, in.spec) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_cells(const Options& o) {
  Input in = load(o);
  auto full = enumerate_full_cells(in.polytope());
  json j = json::array();
  std::ostringstream t;
  for (auto& c : full) {
    j.push_back({{"key", std::vector<std::int64_t>(c.key.k.begin(), c.key.k.end())},
                 {"type", c.type.label()},
                 {"canonical", c.type.canonical_label()},
                 {"points", c.points}});
    t << c.type.label() << "  class " << c.type.canonical_label() << "  key " << point_line(c.key.k, in.spec)
      << "  points " << one_based(c.points) << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_catalog(const Options& o, bool with_gens) {
  auto rows = catalog_3x4();
  json j = json::array();
  std::ostringstream t;
  t << "type                      points  degree  generators  complement\n";
  for (auto& r : rows) {
    json row = {{"r", r.r}, {"c", r.c}, {"points", r.points}, {"degree", r.degree},
                {"generators", binomials_json(r.gens)}, {"text", binomial_text(r.gens)}};
    std::string comp;
    if (r.complement) {
      row["complement"] = {{"r", r.complement->first}, {"c", r.complement->second}};
      CatalogRow tmp;
      tmp.r = r.complement->first, tmp.c = r.complement->second;
      comp = tmp.label();
    }
    j.push_back(row);
    t << std::left << std::setw(26) << r.label() << std::right << std::setw(6) << r.points << std::setw(8) << r.degree
      << std::setw(12) << r.gens.size() << "  " << comp << "\n";
    if (with_gens)
      for (auto& b : r.gens) t << "    " << to_string(b) << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_triangulate(const Options& o, const std::string& method, const std::string& weights) {
  Input in = load(o);
  const PointConfiguration& a = in.points();
  CertifiedSubdivision cs;
  if (method == "regular") {
    ZVec w = parse_rows(weights);
    if (w.size() != a.size()) throw Error("DimensionMismatch", "one weight per point needed");
    auto [sub, cert] = regular_subdivision(a, cast_vec<Rational>(w));
    cs = {sub, cert};
  } else if (method == "hyperplane") {
    cs = hyperplane_subdivision(a);
  } else {
    auto trivial = trivial_subdivision(a);
    auto cert = verify_weights(trivial, RatVector::Zero(a.size()));
    cs = pulling_refinement({trivial, *cert});
  }
  const bool tri = cs.sub.is_triangulation();
  json j = io::to_json(cs.sub);
  j["regularity"] = io::to_json(cs.cert);
  j["triangulation"] = tri;
  std::ostringstream t;
  for (auto& c : cs.sub.maximal_cells()) t << one_based(c) << "\n";
  if (tri) {
    j["unimodular"] = is_unimodular_triangulation(cs.sub);
    t << "unimodular " << tf(j["unimodular"].get<bool>()) << "\n";
  }
  t << "regular " << tf(verify_certificate(cs.sub, cs.cert)) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_gens(const Options& o, int dmax) {
  Input in = load(o);
  const PointConfiguration& a = in.points();
  GeneratingSet g = dmax > 0 ? minimal_generating_set(a, dmax) : certified_generating_set(a).set;
  json j = {{"degree", g.degree}, {"generators", binomials_json(g.gens)}, {"text", binomial_text(g.gens)}};
  std::ostringstream t;
  for (auto& b : g.gens) t << to_string(b) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_gb(const Options& o, const std::string& method, const std::string& order) {
  Input in = load(o);
  const PointConfiguration& a = in.points();
  TermOrder ord = TermOrder::grevlex(a.size());
  std::vector<Binomial> gb;
  if (method == "buchberger") {
    if (!order.empty()) ord = io::order_from_json(read_json(order), a.size());
    gb = buchberger_reduce(certified_generating_set(a).set.gens, ord, 16, &a);
  } else {
    CertifiedSubdivision t = pulling_refinement(hyperplane_subdivision(a));
    TriangulationBasis b = gb_from_triangulation(a, t.sub, t.cert);
    ord = b.order, gb = b.gb;
  }
  json j = {{"order", io::to_json(ord)}, {"basis", binomials_json(gb)}, {"text", binomial_text(gb)}};
  std::ostringstream t;
  for (auto& b : gb) t << to_string(b) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_family(const Options& o, int m, int n) {
  HighDegreeFamily f = high_degree_family(m, n);
  json j = {{"m", m}, {"n", n}, {"r", f.spec.r}, {"c", f.spec.c}, {"degree", f.degree},
            {"identity", f.identity_holds()}, {"shift", matrix_json(f.shift)}};
  std::ostringstream t;
  t << "r " << join(ZVec::Map(f.spec.r.data(), m)) << "\nc " << join(ZVec::Map(f.spec.c.data(), n)) << "\n";
  t << "degree " << f.degree << "\nidentity " << tf(f.identity_holds()) << "\n";
  for (auto side : {std::pair{"lhs", &f.lhs}, std::pair{"rhs", &f.rhs}}) {
    json terms = json::array();
    for (auto& [mat, mult] : *side.second) {
      terms.push_back({{"matrix", matrix_json(mat)}, {"multiplicity", mult}});
      t << side.first << " multiplicity " << mult << "\n";
      print_matrix(t, mat, "  ");
    }
    j[side.first] = terms;
  }
  t << "rhs sum\n";
  print_matrix(t, f.rhs_sum(), "  ");
  j["rhs_sum"] = matrix_json(f.rhs_sum());
  emit(o, j, t.str());
  return 0;
}

int cmd_rescue(const Options& o, const std::string& relation) {
  Input in = load(o);
  const PointConfiguration& a = in.points();
  CubicRelation rel = cubic_relation(a, io::binomial_from_string(relation, a.size()));
  RescueSearch s = rescuer_search(in.polytope(), rel);
  json j = {{"ambient_points", s.ambient_points}, {"candidates", s.candidates}};
  std::ostringstream t;
  if (!s.found) {
    j["rescuer"] = nullptr;
    t << "none\n";
  } else {
    const Rescuer& r = *s.found;
    const bool one = r.kind == Rescuer::Kind::One;
    json ms = json::array();
    for (auto& m : r.matrices) ms.push_back(point_json(m, in.spec));
    json roles = json::array();
    for (auto* side : {&r.roles.lhs, &r.roles.rhs})
      for (auto& x : *side) roles.push_back(point_json(x, in.spec));
    j["rescuer"] = {{"kind", one ? "1-rescuer" : "3-rescuer"}, {"matrices", ms}, {"roles", roles}};
    t << (one ? "1-rescuer" : "3-rescuer") << "\n";
    for (auto& m : r.matrices) t << "  " << point_line(m, in.spec) << "\n";
    const char* names = "ABCDEF";
    int k = 0;
    for (auto* side : {&r.roles.lhs, &r.roles.rhs})
      for (auto& x : *side) t << names[k++] << " " << point_line(x, in.spec) << "\n";
  }
  t << "ambient points " << s.ambient_points << ", candidates " << s.candidates << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_check(const Options& o, std::vector<std::string> names, std::uint64_t seed, int count) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();
  SuiteOptions opt{seed, count, 0};
  if (std::getenv("LATTICEFLOW_GUARD")) opt.point_guard = point_guard();
  json j = json::array();
  std::ostringstream t;
  bool ok = true;
  for (auto& n : names) {
    SuiteResult r = run_suite(n, opt);
    ok &= r.pass;
    j.push_back({{"suite", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
    t << r.name << " " << (r.pass ? "PASS" : "FAIL") << " cases=" << r.cases << " " << r.detail << "\n";
  }
  emit(o, j, t.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice points, subdivisions and toric ideals of flow polytopes"};
  app.require_subcommand(1);
  Options o;

  auto with_input = [&](CLI::App* sc) {
    auto* t = sc->add_option("--transport", o.transport, "margins r/c, e.g. 1,1,10/3,3,3,3")->check(check_transport);
    auto* i = sc->add_option("-i,--input", o.input, "JSON file, or inline JSON starting with '{'");
    t->excludes(i);
    i->excludes(t);
    sc->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
    return sc;
  };
  auto with_format = [&](CLI::App* sc) {
    sc->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
    return sc;
  };

  auto* points = with_input(app.add_subcommand("points", "enumerate lattice points"));
  auto* dim = with_input(app.add_subcommand("dim", "dimension and the |E| - |V| + components bound"));
  auto* smooth = with_input(app.add_subcommand("smooth", "smoothness by the margin criterion and by normal cones"));

  auto* decompose = with_input(app.add_subcommand("decompose", "split f in kF into k lattice points of F"));
  std::string flow;
  std::int64_t k = 1;
  decompose->add_option("--flow", flow, "flow, matrix rows separated by '/'")->required()->check(check_rows);
  decompose->add_option("-k", k, "dilation factor")->required()->check(CLI::PositiveNumber);

  auto* cells = with_input(app.add_subcommand("cells", "full-dimensional cells and their types"));

  auto* catalog = with_format(app.add_subcommand("catalog-3x4", "generator table of the 3x4 cell types"));
  bool with_gens = false;
  catalog->add_flag("--generators", with_gens, "list binomials under each row");

  auto* triangulate = with_input(app.add_subcommand("triangulate", "pulling, regular or hyperplane subdivision"));
  std::string method = "pulling", weights;
  triangulate->add_option("--method", method)->check(CLI::IsMember({"pulling", "regular", "hyperplane"}));
  triangulate->add_option("--weights", weights, "one weight per point, for --method regular")->check(check_rows);

  auto* gens = with_input(app.add_subcommand("gens", "minimal generating set of the toric ideal"));
  int dmax = 0;
  gens->add_option("--dmax", dmax, "plain fiber search up to this degree instead of the certified run");

  auto* gb = with_input(app.add_subcommand("gb", "Groebner basis from a triangulation or by Buchberger"));
  std::string gb_method = "triangulation", order;
  gb->add_option("--method", gb_method)->check(CLI::IsMember({"triangulation", "buchberger"}));
  gb->add_option("--order", order, "order JSON (file or inline), for --method buchberger");

  auto* family = with_format(app.add_subcommand("family", "high-degree relation on an even m x n shape"));
  int fm = 4, fn = 4;
  family->add_option("-m", fm)->required();
  family->add_option("-n", fn)->required();

  auto* rescue = with_input(app.add_subcommand("rescue", "rescuer search for a cubic relation"));
  std::string relation;
  rescue->add_option("--relation", relation, "e.g. \"x1*x5*x7 - x2*x4*x8\", indices as printed by points")->required();

  auto* check = with_format(app.add_subcommand("check", "run property suites"));
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  int count = 0;
  std::vector<std::string> valid = suite_names();
  valid.push_back("all");
  check->add_option("suites", suites, "suite names, or all")->check(CLI::IsMember(valid));
  check->add_option("--seed", seed);
  check->add_option("--count", count, "instances per suite (0 = the suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    auto parsed = app.get_subcommands();
    std::cerr << (parsed.empty() ? app.help() : parsed.back()->help());
    return 2;
  }

  const std::vector<CLI::App*> need_input{points, dim, smooth, decompose, cells, triangulate, gens, gb, rescue};
  for (auto* sc : need_input)
    if (sc->parsed() && o.transport.empty() && o.input.empty()) {
      std::cerr << "error: " << sc->get_name() << " needs --transport or --input\n" << sc->help();
      return 2;
    }
  if (triangulate->parsed() && method == "regular" && weights.empty()) {
    std::cerr << "error: --method regular needs --weights\n" << triangulate->help();
    return 2;
  }

  try {
    if (points->parsed()) return cmd_points(o);
    if (dim->parsed()) return cmd_dim(o);
    if (smooth->parsed()) return cmd_smooth(o);
    if (decompose->parsed()) return cmd_decompose(o, flow, k);
    if (cells->parsed()) return cmd_cells(o);
    if (catalog->parsed()) return cmd_catalog(o, with_gens);
    if (triangulate->parsed()) return cmd_triangulate(o, method, weights);
    if (gens->parsed()) return cmd_gens(o, dmax);
    if (gb->parsed()) return cmd_gb(o, gb_method, order);
    if (family->parsed()) return cmd_family(o, fm, fn);
    if (rescue->parsed()) return cmd_rescue(o, relation);
    if (check->parsed()) return cmd_check(o, suites, seed, count);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
