#include "nk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nk {

// ---- FreeWord ------------------------------------------------------------------

namespace {

std::vector<Letter> reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(reduce(letters)) {}

bool is_freely_reduced(const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].gen == letters[i - 1].gen && letters[i].sign == -letters[i - 1].sign) return false;
  }
  return true;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord FreeWord::prefix(std::size_t n) const {
  FreeWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  // Cancel at the junction only; both factors are already reduced.
  std::size_t cancel = 0;
  const auto& x = a.letters_;
  const auto& y = b.letters_;
  while (cancel < x.size() && cancel < y.size() && x[x.size() - 1 - cancel] == y[cancel].inverse()) ++cancel;
  FreeWord w;
  w.letters_.reserve(x.size() + y.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), x.begin(), x.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), y.begin() + static_cast<std::ptrdiff_t>(cancel), y.end());
  return w;
}

long FreeWord::xi_sum(const std::vector<int>& xi) const {
  long s = 0;
  for (const Letter& l : letters_) s += static_cast<long>(l.sign) * xi.at(l.gen);
  return s;
}

bool FreeWord::contains(GeneratorId g) const {
  return std::any_of(letters_.begin(), letters_.end(), [g](const Letter& l) { return l.gen == g; });
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

// ---- Presentation ----------------------------------------------------------------

Presentation Presentation::from_draft(PresentationDraft draft) {
  const std::size_t g = draft.names.size();
  {
    std::set<std::string> seen;
    for (const auto& n : draft.names) {
      if (n.empty()) throw PresentationError("empty generator name");
      if (!seen.insert(n).second) throw PresentationError("duplicate generator '" + n + "'");
    }
  }
  if (draft.xi.empty()) draft.xi.assign(g, 1);
  if (draft.xi.size() != g) throw PresentationError("xi has " + std::to_string(draft.xi.size()) + " values for " +
                                                    std::to_string(g) + " generators");
  if (draft.meridian && *draft.meridian >= g) throw PresentationError("meridian index out of range");

  Presentation p;
  p.names_ = std::move(draft.names);
  p.xi_ = std::move(draft.xi);
  p.meridian_ = draft.meridian;
  std::set<std::size_t> redundant(draft.redundant.begin(), draft.redundant.end());
  for (std::size_t i = 0; i < draft.relators.size(); ++i) {
    for (const Letter& l : draft.relators[i]) {
      if (l.gen >= g) throw PresentationError("relator " + std::to_string(i + 1) + " uses an unknown generator");
      if (l.sign != 1 && l.sign != -1) throw PresentationError("letter exponent must be +1 or -1");
    }
    FreeWord w(draft.relators[i]);
    if (const long s = w.xi_sum(p.xi_); s != 0) {
      throw PresentationError("relator " + std::to_string(i + 1) + " is not xi-balanced (sum = " + std::to_string(s) +
                              ")");
    }
    if (w.empty()) continue;
    if (redundant.count(i)) p.redundant_.push_back(p.relators_.size());
    p.relators_.push_back(std::move(w));
  }
  for (std::size_t i : redundant) {
    if (i >= draft.relators.size()) throw PresentationError("redundant relator index out of range");
  }
  return p;
}

std::optional<GeneratorId> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<GeneratorId>(i);
  }
  return std::nullopt;
}

bool Presentation::xi_is_constant_one() const {
  return std::all_of(xi_.begin(), xi_.end(), [](int v) { return v == 1; });
}

bool Presentation::is_wirtinger_type() const {
  if (!xi_is_constant_one()) return false;
  for (const FreeWord& w : relators_) {
    const auto& l = w.letters();
    if (l.size() == 2 && l[0].sign == -1 && l[1].sign == 1) continue;
    if (l.size() != 4) return false;
    if (l[0].sign != -1 || l[2].sign != 1 || l[3] != l[1].inverse()) return false;
  }
  return true;
}

std::string Presentation::word_to_string(const FreeWord& w) const {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names_.at(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

PresentationDraft Presentation::to_draft() const {
  PresentationDraft d;
  d.names = names_;
  for (const auto& r : relators_) d.relators.push_back(r.letters());
  d.xi = xi_;
  d.meridian = meridian_;
  d.redundant = redundant_;
  return d;
}

// ---- parsing ----------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '=') ++j;
    if (j == i) j = i + 1;  // lone '='
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

class PresentationParser {
 public:
  Presentation run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      handle_line(line, line_no);
      start = end + 1;
    }
    if (!have_generators_) throw ParseError("missing 'generators:' line", 1, 1);
    if (!xi_explicit_) draft_.xi.assign(draft_.names.size(), 1);
    if (!redundant_explicit_) {
      const std::size_t g = draft_.names.size();
      const std::size_t r = draft_.relators.size();
      if (g > 0 && r >= g) {
        for (std::size_t i = g - 1; i < r; ++i) draft_.redundant.push_back(i);
      }
    }
    try {
      return Presentation::from_draft(std::move(draft_));
    } catch (const PresentationError& e) {
      // Imbalance is reported against the source line of the relator.
      const std::string msg = e.what();
      const auto pos = msg.find("relator ");
      if (pos == 0) {
        std::size_t idx = std::stoul(msg.substr(8)) - 1;
        if (idx < relator_lines_.size()) throw ParseError(msg, relator_lines_[idx], 1);
      }
      throw ParseError(msg, line_no, 1);
    }
  }

 private:
  void handle_line(std::string_view line, std::size_t line_no) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') return;
    const Token head = tokens.front();
    tokens.erase(tokens.begin());
    if (head.text == "generators:") {
      if (have_generators_) throw ParseError("duplicate 'generators:' line", line_no, head.column);
      have_generators_ = true;
      for (const auto& t : tokens) {
        if (!valid_name(t.text)) throw ParseError("invalid generator name '" + t.text + "'", line_no, t.column);
        if (index_.count(t.text)) throw ParseError("duplicate generator '" + t.text + "'", line_no, t.column);
        index_[t.text] = static_cast<GeneratorId>(draft_.names.size());
        draft_.names.push_back(t.text);
      }
      return;
    }
    if (!have_generators_) throw ParseError("expected 'generators:' first", line_no, head.column);
    if (head.text == "meridian:") {
      if (tokens.size() != 1) throw ParseError("'meridian:' takes one generator", line_no, head.column);
      draft_.meridian = lookup(tokens[0], line_no);
    } else if (head.text == "xi:") {
      xi_explicit_ = true;
      draft_.xi.assign(draft_.names.size(), 1);
      if (tokens.size() % 3 != 0) throw ParseError("expected name=value pairs", line_no, head.column);
      for (std::size_t i = 0; i < tokens.size(); i += 3) {
        if (tokens[i + 1].text != "=") throw ParseError("expected '='", line_no, tokens[i + 1].column);
        const GeneratorId g = lookup(tokens[i], line_no);
        draft_.xi[g] = parse_int(tokens[i + 2].text, line_no, tokens[i + 2].column);
      }
    } else if (head.text == "redundant:") {
      redundant_explicit_ = true;
      for (const auto& t : tokens) {
        const int v = parse_int(t.text, line_no, t.column);
        if (v < 1) throw ParseError("relator indices are 1-based", line_no, t.column);
        draft_.redundant.push_back(static_cast<std::size_t>(v - 1));
      }
    } else if (head.text == "relator:") {
      draft_.relators.push_back(parse_word(tokens, line_no));
      relator_lines_.push_back(line_no);
    } else if (head.text == "rel:") {
      auto eq = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.text == "="; });
      if (eq == tokens.end()) throw ParseError("expected '=' in relation", line_no, head.column);
      std::vector<Token> lhs(tokens.begin(), eq), rhs(eq + 1, tokens.end());
      if (lhs.empty() || rhs.empty()) throw ParseError("empty side of relation", line_no, eq->column);
      std::vector<Letter> word = FreeWord(parse_word(lhs, line_no)).inverse().letters();
      auto r = parse_word(rhs, line_no);
      word.insert(word.end(), r.begin(), r.end());
      draft_.relators.push_back(std::move(word));
      relator_lines_.push_back(line_no);
    } else {
      throw ParseError("unknown directive '" + head.text + "'", line_no, head.column);
    }
  }

  static bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '.'; });
  }

  static int parse_int(const std::string& s, std::size_t line_no, std::size_t col) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw ParseError("expected integer, got '" + s + "'", line_no, col);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("expected integer, got '" + s + "'", line_no, col);
    }
  }

  GeneratorId lookup(const Token& t, std::size_t line_no) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) throw ParseError("unknown generator '" + t.text + "'", line_no, t.column);
    return it->second;
  }

  std::vector<Letter> parse_word(const std::vector<Token>& tokens, std::size_t line_no) const {
    std::vector<Letter> out;
    for (const auto& t : tokens) {
      if (t.text == "=") throw ParseError("unexpected '='", line_no, t.column);
      const auto caret = t.text.find('^');
      const std::string name = t.text.substr(0, caret);
      const GeneratorId g = lookup({name, t.column}, line_no);
      int power = 1;
      if (caret != std::string::npos) {
        power = parse_int(t.text.substr(caret + 1), line_no, t.column + caret + 1);
        if (power == 0) throw ParseError("zero exponent", line_no, t.column + caret + 1);
      }
      const int sign = power > 0 ? 1 : -1;
      for (int k = 0; k < std::abs(power); ++k) out.push_back({g, sign});
    }
    return out;
  }

  PresentationDraft draft_;
  std::map<std::string, GeneratorId> index_;
  std::vector<std::size_t> relator_lines_;
  bool have_generators_ = false;
  bool xi_explicit_ = false;
  bool redundant_explicit_ = false;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser{}.run(text); }

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& n : p.names()) os << ' ' << n;
  os << '\n';
  if (p.meridian()) os << "meridian: " << p.name(*p.meridian()) << '\n';
  if (!p.xi_is_constant_one()) {
    os << "xi:";
    for (std::size_t i = 0; i < p.generator_count(); ++i) os << ' ' << p.names()[i] << '=' << p.xi()[i];
    os << '\n';
  }
  // Always explicit, so the parser default never has to guess.
  os << "redundant:";
  for (std::size_t i : p.redundant_relators()) os << ' ' << i + 1;
  os << '\n';
  for (const auto& r : p.relators()) os << "relator: " << p.word_to_string(r) << '\n';
  return os.str();
}

// ---- braids --------------------------------------------------------------------------

BraidWord parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("braid must look like 'k: l1 l2 ...'", 1, 1);
  BraidWord b;
  try {
    std::size_t used = 0;
    const std::string head(text.substr(0, colon));
    b.strands = std::stoi(head, &used);
    if (head.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad strand count", 1, 1);
  } catch (const std::logic_error&) {
    throw ParseError("bad strand count", 1, 1);
  }
  if (b.strands < 1) throw ParseError("strand count must be positive", 1, 1);
  const auto toks = tokenize(text.substr(colon + 1));
  for (const auto& t : toks) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw ParseError("bad braid letter '" + t.text + "'", 1, colon + 1 + t.column);
    }
    if (v == 0 || std::abs(v) > b.strands - 1) {
      throw ParseError("braid letter " + t.text + " out of range", 1, colon + 1 + t.column);
    }
    b.letters.push_back(v);
  }
  return b;
}

std::size_t component_count(const BraidWord& b) {
  const auto k = static_cast<std::size_t>(b.strands);
  std::vector<std::size_t> at(k);  // at[p] = strand currently at position p
  std::iota(at.begin(), at.end(), 0);
  for (int l : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  // strand at[p] ends at position p and re-enters at top position p
  std::vector<std::size_t> next(k);
  for (std::size_t p = 0; p < k; ++p) next[at[p]] = p;
  std::vector<bool> seen(k, false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = next[x]) seen[x] = true;
  }
  return cycles;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool is_cyclic_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (std::equal(a.begin(), a.end() - static_cast<std::ptrdiff_t>(s), b.begin() + static_cast<std::ptrdiff_t>(s)) &&
        std::equal(a.end() - static_cast<std::ptrdiff_t>(s), a.end(), b.begin()))
      return true;
  }
  return false;
}

}  // namespace

Presentation braid_to_wirtinger(const BraidWord& b) {
  const auto k = static_cast<std::size_t>(b.strands);
  struct Crossing {
    std::size_t over, in, out;
    int sign;
  };
  std::vector<std::size_t> label(k);
  std::iota(label.begin(), label.end(), 0);
  std::size_t next = k;
  std::vector<Crossing> crossings;
  for (int l : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    Crossing c{};
    c.out = next++;
    if (l > 0) {  // strand at i+1 passes over towards i
      c.over = label[i + 1];
      c.in = label[i];
      c.sign = 1;
      label[i] = c.over;
      label[i + 1] = c.out;
    } else {  // strand at i passes over towards i+1
      c.over = label[i];
      c.in = label[i + 1];
      c.sign = -1;
      label[i + 1] = c.over;
      label[i] = c.out;
    }
    crossings.push_back(c);
  }

  // Arcs reaching the bottom continue as the top arc of the same position.
  std::vector<std::size_t> id(next, 0);
  std::vector<bool> renamed(next, false);
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;
  for (std::size_t p = 0; p < k; ++p) {
    if (label[p] >= k) {
      id[label[p]] = p;
      renamed[label[p]] = true;
    } else if (label[p] != p) {
      mismatches.emplace_back(label[p], p);
    }
  }
  std::size_t g = 0;
  for (std::size_t a = 0; a < next; ++a) {
    if (a < k || !renamed[a]) id[a] = g++;
  }
  for (std::size_t a = k; a < next; ++a) {
    if (renamed[a]) id[a] = id[id[a]];
  }

  PresentationDraft draft;
  for (std::size_t a = 0; a < g; ++a) draft.names.push_back("s" + std::to_string(a + 1));
  draft.xi.assign(g, 1);
  draft.meridian = 0;

  std::vector<std::vector<Letter>> rels;
  std::vector<std::size_t> rel_component_arc;
  auto gen = [&](std::size_t arc) { return static_cast<GeneratorId>(id[arc]); };
  for (const auto& c : crossings) {
    // out = over^e in over^-e
    FreeWord w({{gen(c.out), -1}, {gen(c.over), c.sign}, {gen(c.in), 1}, {gen(c.over), -c.sign}});
    if (w.empty()) continue;
    rels.push_back(w.letters());
  }
  for (auto [q, p] : mismatches) {
    const std::vector<Letter> ident = FreeWord({{gen(q), -1}, {gen(p), 1}}).letters();
    if (ident.empty()) continue;
    const std::vector<Letter> inv = FreeWord(ident).inverse().letters();
    const bool implied = std::any_of(rels.begin(), rels.end(), [&](const auto& r) {
      return is_cyclic_rotation(r, ident) || is_cyclic_rotation(r, inv);
    });
    if (!implied) rels.push_back(ident);
  }

  // One relator per connected diagram is a consequence of the others.
  DisjointSets ds(g);
  for (const auto& r : rels)
    for (const auto& l : r) ds.unite(l.gen, r.front().gen);
  std::map<std::size_t, std::size_t> last_in_component;
  for (std::size_t i = 0; i < rels.size(); ++i) last_in_component[ds.find(rels[i].front().gen)] = i;
  for (const auto& [root, idx] : last_in_component) draft.redundant.push_back(idx);
  std::sort(draft.redundant.begin(), draft.redundant.end());

  draft.relators = std::move(rels);
  return Presentation::from_draft(std::move(draft));
}

Presentation connected_sum(const Presentation& p1, const Presentation& p2) {
  if (!p1.meridian() || !p2.meridian()) throw PresentationError("connected sum needs a meridian on both summands");
  PresentationDraft d;
  const auto g1 = static_cast<GeneratorId>(p1.generator_count());
  for (const auto& n : p1.names()) d.names.push_back(n + "_1");
  for (const auto& n : p2.names()) d.names.push_back(n + "_2");
  d.xi = p1.xi();
  d.xi.insert(d.xi.end(), p2.xi().begin(), p2.xi().end());
  for (const auto& r : p1.relators()) d.relators.push_back(r.letters());
  for (const auto& r : p2.relators()) {
    std::vector<Letter> shifted = r.letters();
    for (auto& l : shifted) l.gen += g1;
    d.relators.push_back(std::move(shifted));
  }
  d.redundant = p1.redundant_relators();
  for (std::size_t i : p2.redundant_relators()) d.redundant.push_back(i + p1.relator_count());
  d.relators.push_back({{*p1.meridian(), -1}, {*p2.meridian() + g1, 1}});
  d.meridian = *p1.meridian();
  return Presentation::from_draft(std::move(d));
}

// ---- diagnostics ------------------------------------------------------------------

ValidationReport validate(const PresentationDraft& draft) {
  ValidationReport rep;
  const std::size_t g = draft.names.size();
  if (g == 0) rep.warnings.push_back("empty group: no generators");
  std::set<std::string> seen;
  for (const auto& n : draft.names) {
    if (!seen.insert(n).second) rep.errors.push_back("duplicate generator '" + n + "'");
  }
  std::vector<int> xi = draft.xi.empty() ? std::vector<int>(g, 1) : draft.xi;
  if (xi.size() != g) {
    rep.errors.push_back("xi has the wrong number of values");
    xi.assign(g, 1);
  }
  if (draft.meridian && *draft.meridian >= g) rep.errors.push_back("meridian index out of range");
  rep.generator_usage.assign(g, 0);
  for (std::size_t i = 0; i < draft.relators.size(); ++i) {
    const auto& raw = draft.relators[i];
    RelatorDiagnostic d;
    d.index = i;
    d.length = raw.size();
    d.reduced = is_freely_reduced(raw);
    bool in_range = true;
    for (const auto& l : raw) {
      if (l.gen >= g) {
        in_range = false;
        continue;
      }
      ++rep.generator_usage[l.gen];
      d.xi_sum += static_cast<long>(l.sign) * xi[l.gen];
    }
    if (!in_range) rep.errors.push_back("relator " + std::to_string(i + 1) + " uses an unknown generator");
    if (!d.reduced) {
      rep.warnings.push_back("relator " + std::to_string(i + 1) + " is not freely reduced; normalized");
      if (FreeWord(raw).empty()) rep.warnings.push_back("relator " + std::to_string(i + 1) + " reduces to the empty word");
    }
    if (d.xi_sum != 0) {
      rep.errors.push_back("relator " + std::to_string(i + 1) + " is not xi-balanced (sum = " +
                           std::to_string(d.xi_sum) + ")");
    }
    rep.relators.push_back(d);
  }
  for (std::size_t j = 0; j < g; ++j) {
    if (rep.generator_usage[j] == 0 && !draft.relators.empty()) {
      rep.warnings.push_back("generator '" + draft.names[j] + "' does not occur in any relator");
    }
  }
  return rep;
}

ValidationReport validate(const Presentation& p) { return validate(p.to_draft()); }

}  // namespace nk
