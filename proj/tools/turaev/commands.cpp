#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "suite.hpp"
#include "turaev/abelian.hpp"
#include "turaev/alexander.hpp"
#include "turaev/alexander_norm.hpp"
#include "turaev/certify.hpp"
#include "turaev/complex.hpp"
#include "turaev/covers.hpp"
#include "turaev/divisibility.hpp"
#include "turaev/fixtures.hpp"
#include "turaev/link.hpp"
#include "turaev/twisted_homology.hpp"

namespace turaev::cli {

namespace {

constexpr const char* kConvention = "Fox E1: gcd of the (m-1)-minors of the Fox matrix, unit-normalized";

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

void describe_input(Report& r, const Source& src, const std::string& key = "source") {
  r.inputs()[key] = {{"name", src.name}, {"digest", digest(src.text)}};
}

bool looks_like_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    return line.compare(start, 5, "gens:") == 0;
  }
  return false;
}

Json exponent_json(const Exponent& e) {
  Json out = Json::array();
  for (long x : e) out.push_back(x);
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(exact(x));
  return out;
}

Json class_json(const CohomClass& c) {
  Json out = Json::object();
  for (const auto& [k, v] : c.values()) out[k] = exact(v);
  return out;
}

Json cochain_json(const TwoComplex& x, const Cochain1& k) {
  Json out = Json::object();
  for (std::size_t e = 0; e < x.num_edges(); ++e) out[x.edges()[e].name] = exact(k[e]);
  return out;
}

Json group_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& z : g.torsion) t.push_back(z.get_str());
  return {{"betti", g.betti}, {"torsion", t}};
}

Json norm_json(const TwoComplex& x, const NormResult& n) {
  Json out = {{"value", exact(n.value)},
              {"certificate", to_string(n.certificate)},
              {"integral", n.value_is_integral()},
              {"optimal_cochain", cochain_json(x, n.optimal_cochain)}};
  if (!n.internal_error.empty()) out["internal_error"] = n.internal_error;
  return out;
}

}  // namespace

Source load_source(const std::string& spec) {
  const std::string prefix = "fixture:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    if (name == "torus") return {spec, fixtures::torus_complex()};
    if (auto text = fixtures::presentation(name)) return {spec, *text};
    if (auto pd = pd_fixture(name)) return {spec, wirtinger(parse_pd(*pd)).presentation.to_string() + "\n"};
    throw PreconditionError("unknown fixture '" + name + "'");
  }
  std::ifstream in(spec);
  if (!in) throw PreconditionError("cannot read '" + spec + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return {spec, os.str()};
}

Report cmd_norm(const Source& src, const std::string& phi_text, NormMethod method) {
  Report r("norm");
  describe_input(r, src);
  const CohomClass phi = CohomClass::parse(phi_text);
  r.inputs()["phi"] = class_json(phi);
  r.inputs()["method"] = to_string(method);
  const bool from_presentation = looks_like_presentation(src.text);
  const TwoComplex x = from_presentation ? complex_from_presentation(parse_presentation(src.text))
                                         : parse_complex(src.text);
  r.results()["complex"] = {{"vertices", x.num_vertices()},
                            {"edges", x.num_edges()},
                            {"faces", x.num_faces()},
                            {"euler_characteristic", x.euler_characteristic()}};
  const bool empty = boundary_is_empty(x);
  r.check("boundary empty (n_e >= 2 for every edge)", empty);
  if (!empty) return r;
  const Cochain1 k = cochain_from_values(x, phi);
  const bool cocycle = is_cocycle(x, k);
  r.check("class vanishes on every face", cocycle);
  if (!cocycle) return r;
  const auto n = turaev_norm(x, k, method);
  r.results()["norm"] = norm_json(x, n);
  r.check("value integral", n.value_is_integral(), false,
          n.value_is_integral() ? "" : "half-integral optimum reported exactly, not rounded");
  r.check("no internal LP fallback", n.internal_error.empty());
  return r;
}

Report cmd_certify(const std::vector<Source>& srcs, const std::vector<std::string>& phis) {
  Report r("certify");
  if (srcs.empty()) throw PreconditionError("no presentation files");
  if (phis.size() != 1 && phis.size() != srcs.size())
    throw PreconditionError("give one --phi for all files or one per file");
  std::vector<ClassedPresentation> inputs;
  Json files = Json::array();
  for (std::size_t i = 0; i < srcs.size(); ++i) {
    const Presentation p = parse_presentation(srcs[i].text);
    const CohomClass phi = restrict_class(p, CohomClass::parse(phis.size() == 1 ? phis[0] : phis[i]));
    files.push_back({{"name", srcs[i].name}, {"digest", digest(srcs[i].text)}, {"phi", class_json(phi)}});
    inputs.push_back({p, phi});
  }
  r.inputs()["presentations"] = files;
  const Sandwich s = certify_tbar(inputs);
  Json res = {{"lower", exact(s.lower)}, {"upper", exact(s.upper)}, {"certified", s.certified}};
  if (s.certified) res["value"] = exact(s.lower);
  else res["interval"] = Json::array({exact(s.lower), exact(s.upper)});
  res["a_bound"] = s.bounds.a_bound ? Json(exact(*s.bounds.a_bound)) : Json(nullptr);
  res["degree_bound"] = s.bounds.deg_bound ? Json(exact(*s.bounds.deg_bound)) : Json(nullptr);
  res["upper_terms"] = rationals_json(s.upper_terms);
  res["b1"] = s.bounds.b1;
  res["alexander_polynomial"] = s.bounds.delta.to_string();
  res["alexander_polynomial_phi"] = s.bounds.delta_phi ? Json(s.bounds.delta_phi->to_string()) : Json(nullptr);
  res["divisibility"] = s.bounds.divisibility ? Json(s.bounds.divisibility->get_str()) : Json(nullptr);
  res["convention"] = kConvention;
  res["notes"] = s.bounds.notes;
  r.results() = res;
  r.add_checks(s.checks);
  return r;
}

Report cmd_alex(const Source& src, const std::optional<std::string>& phi_text) {
  Report r("alex");
  describe_input(r, src);
  const Presentation p = parse_presentation(src.text);
  if (phi_text) {
    const CohomClass phi = restrict_class(p, CohomClass::parse(*phi_text));
    r.inputs()["phi"] = class_json(phi);
    const auto d = alexander_polynomial(p, phi);
    r.results()["polynomial"] = d.to_string();
    r.results()["variables"] = Json::array({"t"});
    r.results()["degree"] = d.is_zero() ? Json(nullptr) : Json(degree(d));
  } else {
    const auto psi = free_abelianization(p);
    r.check("b1 >= 1", psi.rank() >= 1, true, "b1 = " + std::to_string(psi.rank()));
    if (psi.rank() == 0) return r;
    const auto d = alexander_polynomial(p, psi);
    const auto names = default_variable_names(psi.rank());
    r.results()["polynomial"] = d.to_string(names);
    r.results()["variables"] = names;
    Json basis = Json::object();
    for (std::size_t g = 0; g < p.num_generators(); ++g) basis[p.generators()[g]] = exponent_json(psi.image(g));
    r.results()["generator_images"] = basis;
  }
  r.results()["convention"] = kConvention;
  return r;
}

Report cmd_anorm(const Source& src, const std::string& phi_text, bool polytope) {
  Report r("anorm");
  describe_input(r, src);
  const Presentation p = parse_presentation(src.text);
  const CohomClass phi = restrict_class(p, CohomClass::parse(phi_text));
  r.inputs()["phi"] = class_json(phi);
  require_class(p, phi);
  const auto psi = free_abelianization(p);
  r.check("b1 >= 1", psi.rank() >= 1, true, "b1 = " + std::to_string(psi.rank()));
  if (psi.rank() == 0) return r;
  const auto d = alexander_polynomial(p, psi);
  const auto coords = class_coordinates(p, psi, phi);
  r.results()["alexander_polynomial"] = d.to_string();
  r.results()["phi_coordinates"] = rationals_json(coords);
  r.results()["value"] = exact(alexander_norm(d, coords));
  r.results()["degenerate"] = d.is_zero();
  Json pts = Json::array();
  for (const auto& e : support(d)) pts.push_back(exponent_json(e));
  r.results()["support"] = pts;
  if (polytope) {
    Json verts = Json::array();
    for (const auto& e : newton_polytope_vertices(d)) verts.push_back(exponent_json(e));
    r.results()["polytope_vertices"] = verts;
  }
  r.check("a-norm is a lower bound (b1 >= 2, Delta != 0)", psi.rank() >= 2 && !d.is_zero(), false,
          "b1 = " + std::to_string(psi.rank()));
  return r;
}

Report cmd_cover(const Source& src, const std::string& phi_text, std::size_t order, bool check_inequality,
                 NormMethod method) {
  Report r("cover");
  describe_input(r, src);
  const Presentation p = parse_presentation(src.text);
  const CohomClass phi = restrict_class(p, CohomClass::parse(phi_text));
  r.inputs()["phi"] = class_json(phi);
  r.inputs()["order"] = order;
  const auto spec = CoverSpec::cyclic(p, phi, order);
  const TwoComplex base = complex_from_presentation(p);
  const TwoComplex cover = cover_complex(p, spec);
  r.results()["cover"] = {{"vertices", cover.num_vertices()},
                          {"edges", cover.num_edges()},
                          {"faces", cover.num_faces()},
                          {"euler_characteristic", cover.euler_characteristic()},
                          {"h1", group_json(h1_structure(cover))}};
  r.results()["base_h1"] = group_json(h1_structure(base));
  r.results()["lifted_class"] = class_json(lift_class(p, spec, phi));
  r.check("euler characteristic multiplies",
          cover.euler_characteristic() == static_cast<long>(order) * base.euler_characteristic());
  if (check_inequality) {
    const bool good = p.is_good();
    r.check("presentation good", good, true, good ? "" : "run make_good first; the base needs empty boundary");
    if (!good) return r;
    const auto ineq = verify_cover_inequality(p, spec, phi, method);
    r.results()["inequality"] = {{"lhs", exact(ineq.lhs)}, {"rhs", exact(ineq.rhs)}, {"holds", ineq.holds}};
    r.check("t_cover(p*phi) <= n t_base(phi)", ineq.holds, true, exact(ineq.lhs) + " <= " + exact(ineq.rhs));
  }
  return r;
}

Report cmd_homology(const Source& src, const std::string& phi_text) {
  Report r("homology");
  describe_input(r, src);
  const Presentation p = parse_presentation(src.text);
  const CohomClass phi = restrict_class(p, CohomClass::parse(phi_text));
  r.inputs()["phi"] = class_json(phi);
  const auto h = h1_qt(p, phi);
  Json factors = Json::array();
  for (const auto& f : h.invariant_factors) factors.push_back(f.to_string());
  r.results()["module"] = h.to_string();
  r.results()["free_rank"] = h.free_rank;
  r.results()["invariant_factors"] = factors;
  r.results()["min_generators_torsion"] = min_generators_torsion(h);
  r.check("d2 d1 = 0", true);
  return r;
}

Report cmd_knot(const std::string& pd_text, const std::string& label) {
  Report r("knot");
  r.inputs()["pd"] = {{"name", label}, {"code", pd_text}};
  const auto pd = parse_pd(pd_text);
  const auto w = wirtinger(pd);
  r.results()["crossings"] = pd.crossings.size();
  r.results()["components"] = w.num_components;
  r.results()["presentation"] = w.presentation.to_string();
  Json classes = Json::array();
  for (const auto& c : w.meridian_classes) classes.push_back(c.to_string());
  r.results()["meridian_classes"] = classes;
  r.results()["t_P"] = exact(presentation_complexity(w.presentation, w.total_meridian_class()));
  const auto h = abelian_invariants(w.presentation);
  r.check("presentation good", w.presentation.is_good());
  r.check("H1 is free of rank #components", h.betti == w.num_components && h.torsion.empty(), true,
          "b1 = " + std::to_string(h.betti));
  return r;
}

Report cmd_divtest(long x, long y) {
  Report r("divtest");
  r.inputs()["psi"] = Json::array({x, y});
  const auto [alpha, beta] = div_counterexample(x, y);
  const std::vector<Integer> sum{alpha[0] + beta[0], alpha[1] + beta[1]};
  auto vec = [](const std::vector<Integer>& v) { return Json::array({v[0].get_str(), v[1].get_str()}); };
  const Integer da = divisibility(alpha), db = divisibility(beta), ds = divisibility(sum);
  r.results()["prime"] = next_prime_above(1 + abs(Integer(y))).get_str();
  r.results()["alpha"] = vec(alpha);
  r.results()["beta"] = vec(beta);
  r.results()["div_alpha"] = da.get_str();
  r.results()["div_beta"] = db.get_str();
  r.results()["div_sum"] = ds.get_str();
  r.check("div(alpha) + div(beta) < div(alpha + beta)", da + db < ds, true,
          da.get_str() + " + " + db.get_str() + " < " + ds.get_str());
  return r;
}

Report cmd_suite(std::uint64_t seed) {
  Report r("paper-suite");
  r.inputs()["seed"] = std::to_string(seed);
  Json rows = Json::array();
  for (const auto& c : suite::run_all(seed)) {
    rows.push_back({{"criterion", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
    r.check(std::to_string(c.id) + ". " + c.title, c.passed, true, c.detail);
  }
  r.results()["criteria"] = rows.size();
  return r;
}

}  // namespace turaev::cli
