#include "turaev/link.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace turaev {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_space();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  for (;;) {
    skip_space();
    if (i >= text.size()) break;
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] != 'X') throw ParseError("expected a crossing X(a,b,c,d)", i);
    ++i;
    skip_space();
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw ParseError("expected '(' or '['", i);
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<long, 4> x{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      skip_space();
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected a positive arc label", start);
      if (i - start > 9) throw ParseError("arc label too large", start);
      x[k] = std::stol(std::string(text.substr(start, i - start)));
      if (x[k] <= 0) throw ParseError("arc labels must be positive", start);
    }
    expect(close);
    pd.crossings.push_back(x);
  }
  if (pd.crossings.empty()) throw ParseError("PD code has no crossings", 0);

  std::map<long, int> count;
  for (const auto& x : pd.crossings)
    for (long l : x) ++count[l];
  for (const auto& [l, c] : count)
    if (c != 2)
      throw ParseError("arc label " + std::to_string(l) + " occurs " + std::to_string(c) + " times, expected 2",
                       0);
  return pd;
}

WirtingerPresentation wirtinger(const PDCode& pd) {
  std::vector<long> labels;
  for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto idx = [&](long l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  const std::size_t nl = labels.size();

  // Components: the under-strand joins a-c and the over-strand joins b-d.
  UnionFind comp(nl);
  for (const auto& x : pd.crossings) {
    comp.unite(idx(x[0]), idx(x[2]));
    comp.unite(idx(x[1]), idx(x[3]));
  }
  std::map<std::size_t, std::pair<long, long>> range;  // root -> (lo, hi)
  std::map<std::size_t, std::size_t> size;
  for (std::size_t i = 0; i < nl; ++i) {
    const auto r = comp.find(i);
    auto [it, inserted] = range.emplace(r, std::make_pair(labels[i], labels[i]));
    if (!inserted) {
      it->second.first = std::min(it->second.first, labels[i]);
      it->second.second = std::max(it->second.second, labels[i]);
    }
    ++size[r];
  }
  std::map<std::size_t, std::size_t> component_of_root;
  for (const auto& [r, lh] : range) {
    if (lh.second - lh.first + 1 != static_cast<long>(size[r]))
      throw PreconditionError("arc labels of a component are not a contiguous range");
    component_of_root.emplace(r, component_of_root.size());
  }
  // Two closed curves in the plane cross an even number of times.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_crossings;
  for (const auto& x : pd.crossings) {
    const auto u = component_of_root.at(comp.find(idx(x[0])));
    const auto o = component_of_root.at(comp.find(idx(x[1])));
    if (u != o) ++pair_crossings[{std::min(u, o), std::max(u, o)}];
  }
  for (const auto& [key, count] : pair_crossings)
    if (count % 2 != 0) throw PreconditionError("two components cross an odd number of times; not a planar diagram");
  auto succ = [&](long l) {
    const auto& [lo, hi] = range.at(comp.find(idx(l)));
    return l == hi ? lo : l + 1;
  };

  // Arcs: labels joined by passing over a crossing.
  UnionFind arcs(nl);
  for (const auto& x : pd.crossings) arcs.unite(idx(x[1]), idx(x[3]));
  std::map<std::size_t, std::size_t> gen_of_root;  // roots are smallest labels
  for (std::size_t i = 0; i < nl; ++i) gen_of_root.emplace(arcs.find(i), gen_of_root.size());
  auto gen = [&](long l) { return gen_of_root.at(arcs.find(idx(l))); };

  std::vector<std::string> names;
  for (std::size_t g = 0; g < gen_of_root.size(); ++g) names.push_back("x" + std::to_string(g + 1));

  std::vector<FreeWord> relators;
  for (const auto& x : pd.crossings) {
    const auto [a, b, c, d] = x;
    if (c != succ(a)) throw PreconditionError("under-strand of a crossing does not follow label order");
    const bool forward = d == succ(b);
    const bool backward = b == succ(d);
    if (!forward && !backward) throw PreconditionError("over-strand labels of a crossing are not adjacent");
    const int e = (forward && (!backward || b < d)) ? 1 : -1;
    const std::size_t o = gen(b);
    relators.push_back(FreeWord({{o, e}, {gen(a), 1}, {o, -e}, {gen(c), -1}}));
  }

  WirtingerPresentation out;
  out.num_components = component_of_root.size();
  out.presentation = Presentation(names, relators);
  IntMatrix images(names.size(), out.num_components, Integer(0));
  out.arc_component.assign(names.size(), 0);
  for (std::size_t i = 0; i < nl; ++i) {
    const std::size_t g = gen(labels[i]);
    out.arc_component[g] = component_of_root.at(comp.find(i));
  }
  out.meridian_classes.resize(out.num_components);
  for (std::size_t g = 0; g < names.size(); ++g) {
    images(g, out.arc_component[g]) = 1;
    for (std::size_t k = 0; k < out.num_components; ++k)
      out.meridian_classes[k].set(names[g], k == out.arc_component[g] ? 1 : 0);
  }
  out.meridian_map = AbelianizationMap(images);
  out.meridian_map.require_valid_on(out.presentation);
  return out;
}

CohomClass WirtingerPresentation::total_meridian_class() const {
  CohomClass out;
  for (const auto& name : presentation.generators()) out.set(name, 1);
  return out;
}

std::optional<std::string> pd_fixture(std::string_view name) {
  if (name == "trefoil") return "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
  if (name == "fig8") return "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
  if (name == "whitehead") return "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)";
  return std::nullopt;
}

std::vector<std::string> pd_fixture_names() { return {"trefoil", "fig8", "whitehead"}; }

}  // namespace turaev
