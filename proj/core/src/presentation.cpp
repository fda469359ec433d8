#include "turaev/presentation.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace turaev {

Presentation::Presentation(std::vector<std::string> generators, std::vector<FreeWord> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw PreconditionError("empty generator name");
    if (!seen.insert(g).second) throw PreconditionError("duplicate generator '" + g + "'");
  }
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (l.gen >= generators_.size() || (l.exp != 1 && l.exp != -1))
        throw PreconditionError("relator letter out of range");
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  return std::nullopt;
}

std::size_t Presentation::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("unknown generator '" + std::string(name) + "'");
}

std::size_t Presentation::occurrence_count(std::size_t gen) const {
  if (gen >= generators_.size()) throw PreconditionError("generator index out of range");
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.count(gen);
  return n;
}

bool Presentation::is_good() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (occurrence_count(i) < 2) return false;
  return true;
}

std::string Presentation::format_word(const FreeWord& w) const {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generators_.at(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators_) out += " " + g;
  out += " ; rels:";
  for (std::size_t j = 0; j < relators_.size(); ++j) {
    out += j == 0 ? " " : " , ";
    out += format_word(relators_[j]);
  }
  return out;
}

IntMatrix Presentation::relator_matrix() const {
  IntMatrix m(relators_.size(), generators_.size(), Integer(0));
  for (std::size_t j = 0; j < relators_.size(); ++j)
    for (const auto& l : relators_[j].letters()) m(j, l.gen) += l.exp;
  return m;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : s_(text) {}

  Presentation parse() {
    expect_keyword("gens");
    std::vector<std::string> gens;
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] != ';') {
      const std::size_t at = pos_;
      std::string id = ident();
      if (id == "gens" || id == "rels") throw ParseError("reserved word used as generator", at);
      for (const auto& g : gens)
        if (g == id) throw ParseError("duplicate generator '" + id + "'", at);
      gens.push_back(std::move(id));
      skip_ws();
    }
    if (pos_ >= s_.size()) throw ParseError("expected ';' after generator list", pos_);
    ++pos_;
    gens_ = &gens;
    expect_keyword("rels");
    std::vector<FreeWord> rels;
    skip_ws();
    if (pos_ < s_.size()) {
      for (;;) {
        const std::size_t at = pos_;
        FreeWord w = word();
        if (w.empty()) throw ParseError("empty relator", at);
        w = w.reduced();
        if (!w.empty()) rels.push_back(std::move(w));
        skip_ws();
        if (pos_ >= s_.size()) break;
        if (s_[pos_] != ',') throw ParseError("expected ',' between relators", pos_);
        ++pos_;
      }
    }
    return Presentation(std::move(gens), std::move(rels));
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

  void expect_keyword(std::string_view kw) {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= s_.size() || !is_ident_start(s_[pos_]) || ident() != kw)
      throw ParseError("expected '" + std::string(kw) + ":'", at);
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ':')
      throw ParseError("expected ':' after '" + std::string(kw) + "'", pos_);
    ++pos_;
  }

  std::string ident() {
    if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) throw ParseError("expected identifier", pos_);
    const std::size_t b = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  // Optional "^k" suffix; returns k (default 1).
  long power() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer exponent", at);
    long k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + (s_[pos_++] - '0');
      if (k > 1000000) throw ParseError("exponent too large", at);
    }
    if (k == 0) throw ParseError("zero exponent", at);
    return neg ? -k : k;
  }

  static FreeWord raise(const FreeWord& w, long k) {
    const FreeWord base = k < 0 ? w.inverse() : w;
    FreeWord out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
    return out;
  }

  FreeWord word() {
    FreeWord out;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ',' || s_[pos_] == ']') return out;
      if (s_[pos_] == '[') {
        ++pos_;
        const FreeWord g = word();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ',') throw ParseError("expected ',' in commutator", pos_);
        ++pos_;
        const FreeWord h = word();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ']') throw ParseError("expected ']'", pos_);
        ++pos_;
        const FreeWord comm = g * h * g.inverse() * h.inverse();
        out = out * raise(comm, power());
        continue;
      }
      const std::size_t at = pos_;
      if (!is_ident_start(s_[pos_])) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", at);
      const std::string id = ident();
      std::optional<std::size_t> idx;
      for (std::size_t i = 0; i < gens_->size(); ++i)
        if ((*gens_)[i] == id) idx = i;
      if (!idx) throw ParseError("unknown generator '" + id + "' in relator", at);
      out = out * raise(FreeWord({Letter{*idx, 1}}), power());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

// ---------------------------------------------------------------------------
// Good presentations

Presentation make_good(const Presentation& p) {
  std::vector<std::string> gens = p.generators();
  std::vector<FreeWord> rels = p.relators();

  auto count = [&](std::size_t g) {
    std::size_t n = 0;
    for (const auto& r : rels) n += r.count(g);
    return n;
  };

  // A generator with #(x)=1 occurs in exactly one relator, once. Solving that
  // relator for x and substituting touches no other relator, so the Tietze
  // move deletes the generator together with that relator.
  std::vector<bool> alive(gens.size(), true);
  for (;;) {
    std::optional<std::size_t> victim;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (alive[g] && count(g) == 1) {
        victim = g;
        break;
      }
    if (!victim) break;
    alive[*victim] = false;
    for (auto it = rels.begin(); it != rels.end(); ++it)
      if (it->count(*victim) == 1) {
        rels.erase(it);
        break;
      }
  }

  std::vector<std::size_t> remap(gens.size(), 0);
  std::vector<std::string> new_gens;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (alive[g]) {
      remap[g] = new_gens.size();
      new_gens.push_back(gens[g]);
    }
  std::vector<FreeWord> new_rels;
  for (const auto& r : rels) {
    std::vector<Letter> ls;
    for (const auto& l : r.letters()) ls.push_back({remap[l.gen], l.exp});
    new_rels.emplace_back(std::move(ls));
  }
  for (std::size_t g = 0; g < new_gens.size(); ++g) {
    std::size_t n = 0;
    for (const auto& r : new_rels) n += r.count(g);
    if (n == 0) new_rels.emplace_back(std::vector<Letter>{{g, 1}, {g, -1}});
  }
  return Presentation(std::move(new_gens), std::move(new_rels));
}

// ---------------------------------------------------------------------------
// Classes

CohomClass::CohomClass(std::map<std::string, Rational> values) : values_(std::move(values)) {
  for (auto& [k, v] : values_) v.canonicalize();
}

CohomClass CohomClass::parse(std::string_view text) {
  std::map<std::string, Rational> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      bool blank = true;
      for (char c : item)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank || end != text.size() || pos != 0)
        throw ParseError("expected name=value in class", pos);
    } else {
      std::string name(item.substr(0, eq));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      std::size_t lead = 0;
      while (lead < name.size() && std::isspace(static_cast<unsigned char>(name[lead]))) ++lead;
      name = name.substr(lead);
      if (name.empty() || !is_ident_start(name[0])) throw ParseError("invalid name in class", pos);
      for (char c : name)
        if (!is_ident_char(c) && c != '.') throw ParseError("invalid name in class", pos);
      if (values.count(name)) throw ParseError("duplicate name '" + name + "' in class", pos);
      values[name] = parse_rational(item.substr(eq + 1));
    }
    pos = end + 1;
  }
  return CohomClass(std::move(values));
}

Rational CohomClass::value(std::string_view name) const {
  auto it = values_.find(std::string(name));
  return it == values_.end() ? Rational(0) : it->second;
}

void CohomClass::set(const std::string& name, const Rational& v) {
  values_[name] = v;
  values_[name].canonicalize();
}

bool CohomClass::is_zero() const {
  for (const auto& [k, v] : values_)
    if (v != 0) return false;
  return true;
}

bool CohomClass::is_integral() const {
  for (const auto& [k, v] : values_)
    if (!turaev::is_integral(v)) return false;
  return true;
}

Integer CohomClass::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [k, v] : values_) l = lcm(l, v.get_den());
  return l;
}

CohomClass CohomClass::scaled(const Rational& c) const {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : values_) out[k] = c * v;
  return CohomClass(std::move(out));
}

CohomClass CohomClass::operator+(const CohomClass& rhs) const {
  std::map<std::string, Rational> out = values_;
  for (const auto& [k, v] : rhs.values_) out[k] += v;
  return CohomClass(std::move(out));
}

std::string CohomClass::to_string() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    if (!out.empty()) out += ',';
    out += k + "=" + turaev::to_string(v);
  }
  return out;
}

std::vector<Rational> class_values(const Presentation& p, const CohomClass& phi) {
  for (const auto& [name, v] : phi.values())
    if (!p.find(name)) throw PreconditionError("class names unknown generator '" + name + "'");
  std::vector<Rational> out;
  out.reserve(p.num_generators());
  for (const auto& g : p.generators()) out.push_back(phi.value(g));
  return out;
}

Rational evaluate(const std::vector<Rational>& values, const FreeWord& w) {
  Rational s = 0;
  for (const auto& l : w.letters()) s += l.exp * values.at(l.gen);
  return s;
}

bool is_class(const Presentation& p, const CohomClass& phi) {
  const auto vals = class_values(p, phi);
  for (const auto& r : p.relators())
    if (evaluate(vals, r) != 0) return false;
  return true;
}

void require_class(const Presentation& p, const CohomClass& phi) {
  const auto vals = class_values(p, phi);
  for (const auto& r : p.relators())
    if (evaluate(vals, r) != 0)
      throw PreconditionError("not a cohomology class: relator '" + p.format_word(r) +
                              "' evaluates to " + to_string(evaluate(vals, r)));
}

Rational presentation_complexity(const Presentation& p, const CohomClass& phi) {
  if (!p.is_good()) throw PreconditionError("presentation is not good; apply make_good first");
  require_class(p, phi);
  const auto vals = class_values(p, phi);
  Rational t = 0;
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    const Rational w = make_rational(static_cast<long>(p.occurrence_count(i)), 2) - 1;
    t += w * abs(vals[i]);
  }
  return t;
}

CohomClass restrict_class(const Presentation& p, const CohomClass& phi) {
  std::map<std::string, Rational> out;
  for (const auto& g : p.generators()) out[g] = phi.value(g);
  return CohomClass(std::move(out));
}

}  // namespace turaev
