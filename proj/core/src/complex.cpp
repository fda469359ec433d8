#include "turaev/complex.hpp"

#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace turaev {

bool Cochain1::is_integral() const {
  for (const auto& v : values_)
    if (!turaev::is_integral(v)) return false;
  return true;
}

bool Cochain1::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

Cochain1 Cochain1::operator+(const Cochain1& rhs) const {
  if (rhs.size() != size()) throw PreconditionError("cochain size mismatch");
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = values_[i] + rhs.values_[i];
  return Cochain1(std::move(out));
}

Cochain1 Cochain1::scaled(const Rational& c) const {
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = c * values_[i];
  return Cochain1(std::move(out));
}

TwoComplex::TwoComplex(std::size_t num_vertices, std::vector<Edge> edges,
                       std::vector<AttachingWalk> faces)
    : num_vertices_(num_vertices), edges_(std::move(edges)), faces_(std::move(faces)) {
  if (num_vertices_ == 0) throw PreconditionError("complex needs at least one vertex");
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.source >= num_vertices_ || e.target >= num_vertices_)
      throw PreconditionError("edge " + std::to_string(i) + " has an out-of-range endpoint");
    if (e.name.empty()) e.name = "e" + std::to_string(i);
    if (!names.insert(e.name).second) throw PreconditionError("duplicate edge name '" + e.name + "'");
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& walk = faces_[f];
    if (walk.empty()) throw PreconditionError("face " + std::to_string(f) + " has an empty attaching walk");
    for (const auto& s : walk)
      if (s.edge >= edges_.size() || (s.dir != 1 && s.dir != -1))
        throw PreconditionError("face " + std::to_string(f) + " references an invalid edge step");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& next = walk[(i + 1) % walk.size()];
      if (step_end(walk[i]) != step_start(next))
        throw PreconditionError("attaching walk of face " + std::to_string(f) + " is not a closed path");
    }
  }
  // Connectivity through the 1-skeleton.
  std::vector<std::vector<std::size_t>> adj(num_vertices_);
  for (const auto& e : edges_) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<bool> seen(num_vertices_, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != num_vertices_) throw PreconditionError("complex is not connected");
}

std::optional<std::size_t> TwoComplex::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::size_t TwoComplex::step_start(const WalkStep& s) const {
  return s.dir > 0 ? edges_[s.edge].source : edges_[s.edge].target;
}
std::size_t TwoComplex::step_end(const WalkStep& s) const {
  return s.dir > 0 ? edges_[s.edge].target : edges_[s.edge].source;
}

std::vector<std::size_t> TwoComplex::edge_multiplicities() const {
  std::vector<std::size_t> n(edges_.size(), 0);
  for (const auto& walk : faces_)
    for (const auto& s : walk) ++n[s.edge];
  return n;
}

long TwoComplex::euler_characteristic() const {
  return static_cast<long>(num_vertices_) - static_cast<long>(edges_.size()) +
         static_cast<long>(faces_.size());
}

std::string TwoComplex::serialize() const {
  std::ostringstream os;
  os << "vertices: " << num_vertices_ << '\n';
  for (std::size_t i = 0; i < edges_.size(); ++i)
    os << "edge " << i << ": " << edges_[i].source << ' ' << edges_[i].target << ' ' << edges_[i].name << '\n';
  for (const auto& walk : faces_) {
    os << "face:";
    for (const auto& s : walk) os << ' ' << (s.dir > 0 ? '+' : '-') << s.edge;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ComplexParser {
 public:
  explicit ComplexParser(std::string_view text) : s_(text) {}

  TwoComplex parse() {
    std::optional<std::size_t> nv;
    std::vector<Edge> edges;
    std::vector<AttachingWalk> faces;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      const std::size_t at = pos_;
      const std::string kw = word();
      if (kw == "vertices") {
        if (nv) throw ParseError("duplicate 'vertices:' line", at);
        colon();
        nv = number();
      } else if (kw == "edge") {
        const std::size_t idx = number();
        if (idx != edges.size()) throw ParseError("edges must be listed in order 0, 1, ...", at);
        colon();
        Edge e;
        e.source = number();
        e.target = number();
        skip_blank();
        if (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '#') e.name = word();
        edges.push_back(std::move(e));
      } else if (kw == "face") {
        colon();
        AttachingWalk walk;
        for (;;) {
          skip_blank();
          if (pos_ >= s_.size() || s_[pos_] == '\n' || s_[pos_] == '#') break;
          int dir = 1;
          if (s_[pos_] == '+' || s_[pos_] == '-') dir = s_[pos_++] == '-' ? -1 : 1;
          walk.push_back({number_here(), dir});
        }
        if (walk.empty()) throw ParseError("empty face", at);
        faces.push_back(std::move(walk));
      } else {
        throw ParseError("unknown keyword '" + kw + "'", at);
      }
    }
    if (!nv) throw ParseError("missing 'vertices:' line", 0);
    try {
      return TwoComplex(*nv, std::move(edges), std::move(faces));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), s_.size());
    }
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  // Spaces and tabs only; newlines end edge and face lines.
  void skip_blank() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  std::string word() {
    skip_blank();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ':' &&
           s_[pos_] != '#')
      ++pos_;
    if (b == pos_) throw ParseError("expected a word", b);
    return std::string(s_.substr(b, pos_ - b));
  }
  void colon() {
    skip_blank();
    if (pos_ >= s_.size() || s_[pos_] != ':') throw ParseError("expected ':'", pos_);
    ++pos_;
  }
  std::size_t number() {
    skip_blank();
    return number_here();
  }
  std::size_t number_here() {
    const std::size_t b = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
      if (v > 100000000) throw ParseError("number too large", b);
    }
    if (b == pos_) throw ParseError("expected a number", b);
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

TwoComplex parse_complex(std::string_view text) { return ComplexParser(text).parse(); }

TwoComplex complex_from_presentation(const Presentation& p) {
  std::vector<Edge> edges;
  for (const auto& g : p.generators()) edges.push_back({0, 0, g});
  std::vector<AttachingWalk> faces;
  for (const auto& r : p.relators()) {
    if (r.empty()) throw PreconditionError("empty relator has no attaching walk");
    AttachingWalk walk;
    for (const auto& l : r.letters()) walk.push_back({l.gen, l.exp});
    faces.push_back(std::move(walk));
  }
  return TwoComplex(1, std::move(edges), std::move(faces));
}

bool boundary_is_empty(const TwoComplex& x) {
  for (auto n : x.edge_multiplicities())
    if (n < 2) return false;
  return true;
}

std::vector<bool> spanning_tree(const TwoComplex& x) {
  std::vector<std::vector<std::size_t>> incident(x.num_vertices());
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    incident[x.edges()[e].source].push_back(e);
    if (x.edges()[e].target != x.edges()[e].source) incident[x.edges()[e].target].push_back(e);
  }
  std::vector<bool> tree(x.num_edges(), false);
  std::vector<bool> seen(x.num_vertices(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e : incident[v]) {
      const auto& edge = x.edges()[e];
      const std::size_t w = edge.source == v ? edge.target : edge.source;
      if (!seen[w]) {
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  return tree;
}

bool is_cocycle(const TwoComplex& x, const Cochain1& k) {
  if (k.size() != x.num_edges()) return false;
  for (const auto& walk : x.faces()) {
    Rational s = 0;
    for (const auto& st : walk) s += st.dir * k[st.edge];
    if (s != 0) return false;
  }
  return true;
}

Cochain1 coboundary(const TwoComplex& x, const std::vector<Rational>& f) {
  if (f.size() != x.num_vertices()) throw PreconditionError("potential has wrong size");
  std::vector<Rational> out;
  out.reserve(x.num_edges());
  for (const auto& e : x.edges()) out.push_back(f[e.target] - f[e.source]);
  return Cochain1(std::move(out));
}

Cochain1 cochain_from_values(const TwoComplex& x, const CohomClass& phi) {
  for (const auto& [name, v] : phi.values())
    if (!x.find_edge(name)) throw PreconditionError("class names unknown edge '" + name + "'");
  std::vector<Rational> vals;
  for (const auto& e : x.edges()) vals.push_back(phi.value(e.name));
  return Cochain1(std::move(vals));
}

Cochain1 normalize_cocycle(const TwoComplex& x, const Cochain1& k) {
  if (!is_cocycle(x, k)) throw PreconditionError("not a cocycle: some attaching walk has nonzero value");
  const auto tree = spanning_tree(x);
  // Potential along the tree: f(target) - f(source) = k(e) on tree edges.
  std::vector<Rational> f(x.num_vertices(), Rational(0));
  std::vector<bool> seen(x.num_vertices(), false);
  seen[0] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
      if (!tree[e]) continue;
      const auto& edge = x.edges()[e];
      if (seen[edge.source] && !seen[edge.target]) {
        f[edge.target] = f[edge.source] + k[e];
        seen[edge.target] = progress = true;
      } else if (seen[edge.target] && !seen[edge.source]) {
        f[edge.source] = f[edge.target] - k[e];
        seen[edge.source] = progress = true;
      }
    }
  }
  Cochain1 out = k + coboundary(x, f).scaled(-1);
  for (std::size_t e = 0; e < x.num_edges(); ++e)
    if (tree[e] && out[e] != 0) throw InternalError("normalized cocycle is nonzero on the tree");
  return out;
}

Cochain1 cocycle_from_class(const TwoComplex& x, const CohomClass& phi) {
  return normalize_cocycle(x, cochain_from_values(x, phi));
}

IntMatrix boundary_matrix_2(const TwoComplex& x) {
  IntMatrix d2(x.num_faces(), x.num_edges(), Integer(0));
  for (std::size_t f = 0; f < x.num_faces(); ++f)
    for (const auto& s : x.faces()[f]) d2(f, s.edge) += s.dir;
  return d2;
}

IntMatrix boundary_matrix_1(const TwoComplex& x) {
  IntMatrix d1(x.num_edges(), x.num_vertices(), Integer(0));
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    d1(e, x.edges()[e].target) += 1;
    d1(e, x.edges()[e].source) -= 1;
  }
  return d1;
}

AbelianGroup h1_structure(const TwoComplex& x) {
  const auto rank1 = integer_invariant_factors(boundary_matrix_1(x)).size();
  const auto d2 = integer_invariant_factors(boundary_matrix_2(x));
  // ker d1 is a direct summand of Z^E, so the torsion of ker d1 / im d2 is
  // the torsion of Z^E / im d2.
  AbelianGroup g;
  g.betti = x.num_edges() - rank1 - d2.size();
  for (const auto& d : d2)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace turaev
