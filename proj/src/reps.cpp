#include "nk/reps.hpp"

#include "nk/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nk {

// ---- Permutation -------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    const bool spaced = body.find_first_of(" ,\t") != std::string_view::npos;
    if (spaced) {
      std::string tok;
      std::istringstream in{std::string(body)};
      std::string chunk;
      while (in >> chunk) {
        std::replace(chunk.begin(), chunk.end(), ',', ' ');
        std::istringstream in2(chunk);
        while (in2 >> tok) cyc.push_back(std::stoi(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad cycle entry");
        cyc.push_back(ch - '0');
      }
    }
    for (int& x : cyc) {
      if (x < 1 || static_cast<std::size_t>(x) > degree) throw std::invalid_argument("cycle point out of range");
      x -= 1;
      if (used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) img[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    i = close + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::then(const Permutation& b) const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = b.images_[static_cast<std::size_t>(images_[i])];
  return p;
}

Permutation Permutation::conjugate_by(const Permutation& c) const { return c.inverse().then(*this).then(c); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  const bool spaced = images_.size() >= 10;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      if (spaced && !first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> parse_cycle_type(std::string_view text, std::size_t k) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '-'; }), s.end());
  std::vector<int> lens;
  if (s == "identity" || s == "id" || s == "1") {
    // no nontrivial cycles
  } else if (s.size() > 5 && s.substr(s.size() - 5) == "cycle") {
    lens.push_back(std::stoi(s.substr(0, s.size() - 5)));
  } else {
    std::replace(s.begin(), s.end(), '+', ',');
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad cycle type '" + std::string(text) + "'");
      lens.push_back(v);
    }
  }
  std::size_t total = 0;
  for (int l : lens) {
    if (l < 1) throw std::invalid_argument("bad cycle length");
    total += static_cast<std::size_t>(l);
  }
  if (total > k) throw std::invalid_argument("cycle type '" + std::string(text) + "' does not fit in degree " +
                                             std::to_string(k));
  lens.resize(lens.size() + (k - total), 1);
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

// ---- permutation representations -----------------------------------------------------

Permutation evaluate_word(const PermutationRep& r, const FreeWord& w) {
  Permutation acc = Permutation::identity(r.degree);
  for (const Letter& l : w.letters()) {
    const Permutation& g = r.images.at(l.gen);
    acc = acc.then(l.sign > 0 ? g : g.inverse());
  }
  return acc;
}

bool verify_rep(const Presentation& p, const PermutationRep& r) {
  if (r.images.size() != p.generator_count()) return false;
  for (const auto& img : r.images)
    if (img.degree() != r.degree) return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const FreeWord& w) { return evaluate_word(r, w).is_identity(); });
}

namespace {

bool lex_less(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

PermutationRep canonical_conjugate(const PermutationRep& r) {
  PermutationRep best = r;
  for (const Permutation& c : all_permutations(r.degree)) {
    std::vector<Permutation> conj;
    conj.reserve(r.images.size());
    for (const auto& g : r.images) conj.push_back(g.conjugate_by(c));
    if (lex_less(conj, best.images)) best.images = std::move(conj);
  }
  return best;
}

bool conjugate_reps(const PermutationRep& a, const PermutationRep& b) {
  return a.degree == b.degree && canonical_conjugate(a).images == canonical_conjugate(b).images;
}

namespace {

class RepSearch {
 public:
  RepSearch(const Presentation& p, const SearchOptions& opt) : p_(p), opt_(opt) {
    for (auto& perm : all_permutations(opt.degree)) {
      if (!opt.cycle_type || perm.cycle_type() == *opt.cycle_type) candidates_.push_back(std::move(perm));
    }
    const std::size_t g = p.generator_count();
    std::vector<std::size_t> uses(g, 0);
    for (const auto& r : p.relators()) {
      std::set<GeneratorId> in;
      for (const auto& l : r.letters()) in.insert(l.gen);
      for (GeneratorId x : in) ++uses[x];
    }
    order_.resize(g);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return uses[a] > uses[b]; });
  }

  std::vector<PermutationRep> run() {
    const std::size_t g = p_.generator_count();
    std::vector<std::vector<Permutation>> found;
    if (g == 0) {
      found.emplace_back();
    } else {
      // One representative per conjugacy class for the first generator in order.
      std::vector<Permutation> firsts;
      std::set<std::vector<int>> types;
      for (const auto& c : candidates_) {
        if (types.insert(c.cycle_type()).second) firsts.push_back(c);
      }
      std::vector<State> tasks;
      for (const auto& f : firsts) {
        State s(g);
        s[order_[0]] = f;
        tasks.push_back(std::move(s));
      }
      std::vector<std::vector<std::vector<Permutation>>> per_task(tasks.size());
      const auto ntasks = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t t = 0; t < ntasks; ++t) {
        dfs(tasks[static_cast<std::size_t>(t)], per_task[static_cast<std::size_t>(t)]);
      }
      for (auto& v : per_task)
        for (auto& x : v) found.push_back(std::move(x));
    }
    std::set<std::vector<Permutation>> canon;
    for (auto& images : found) {
      PermutationRep r{opt_.degree, std::move(images), false};
      canon.insert(canonical_conjugate(r).images);
    }
    std::vector<PermutationRep> out;
    for (const auto& images : canon) {
      if (out.size() >= opt_.limit) break;
      PermutationRep r{opt_.degree, images, false};
      r.verified = verify_rep(p_, r);
      if (!r.verified) throw std::logic_error("representation search produced an unverified result");
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  using State = std::vector<std::optional<Permutation>>;

  bool allowed(const Permutation& x) const { return !opt_.cycle_type || x.cycle_type() == *opt_.cycle_type; }

  Permutation eval(const State& s, const std::vector<Letter>& letters, std::size_t from, std::size_t to) const {
    Permutation acc = Permutation::identity(opt_.degree);
    for (std::size_t i = from; i < to; ++i) {
      const Permutation& g = *s[letters[i].gen];
      acc = acc.then(letters[i].sign > 0 ? g : g.inverse());
    }
    return acc;
  }

  // Fills generators forced by relators with a single unknown letter; false on contradiction.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : p_.relators()) {
        const auto& l = r.letters();
        std::size_t unknown = 0;
        std::size_t pos = 0;
        std::set<GeneratorId> distinct;
        for (std::size_t i = 0; i < l.size(); ++i) {
          if (!s[l[i].gen]) {
            ++unknown;
            pos = i;
            distinct.insert(l[i].gen);
          }
        }
        if (unknown == 0) {
          if (!eval(s, l, 0, l.size()).is_identity()) return false;
        } else if (unknown == 1) {
          // u x^e v = 1  =>  x^e = u^-1 v^-1
          const Permutation u = eval(s, l, 0, pos);
          const Permutation v = eval(s, l, pos + 1, l.size());
          Permutation x = u.inverse().then(v.inverse());
          if (l[pos].sign < 0) x = x.inverse();
          if (!allowed(x)) return false;
          s[l[pos].gen] = std::move(x);
          changed = true;
        }
      }
    }
    return true;
  }

  void dfs(State s, std::vector<std::vector<Permutation>>& out) const {
    if (!propagate(s)) return;
    auto next = std::find_if(order_.begin(), order_.end(), [&](std::size_t g) { return !s[g]; });
    if (next == order_.end()) {
      std::vector<Permutation> images;
      images.reserve(s.size());
      for (auto& x : s) images.push_back(*x);
      out.push_back(std::move(images));
      return;
    }
    for (const auto& c : candidates_) {
      State child = s;
      child[*next] = c;
      dfs(std::move(child), out);
    }
  }

  const Presentation& p_;
  SearchOptions opt_;
  std::vector<Permutation> candidates_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::vector<PermutationRep> search_permutation_reps(const Presentation& p, const SearchOptions& opt) {
  if (opt.degree < 1) throw std::invalid_argument("search degree must be at least 1");
  if (opt.limit < 1) throw std::invalid_argument("search limit must be at least 1");
  if (opt.cycle_type) {
    std::size_t total = 0;
    for (int l : *opt.cycle_type) total += static_cast<std::size_t>(l);
    if (total != opt.degree) throw std::invalid_argument("cycle type does not match degree");
  }
  return RepSearch(p, opt).run();
}

// ---- matrix representations -----------------------------------------------------------

std::string to_string(Convention c) { return c == Convention::kAsGiven ? "as-given" : "transposed"; }

Convention parse_convention(std::string_view s) {
  if (s == "as-given") return Convention::kAsGiven;
  if (s == "transposed") return Convention::kTransposed;
  throw std::invalid_argument("unknown convention '" + std::string(s) + "'");
}

namespace {

// Inverse of a unimodular integer matrix by Gauss-Jordan over Q.
IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    std::swap(a[p], a[c]);
    const mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i][n + j];
      if (v.get_den() != 1) throw std::invalid_argument("matrix is not invertible over the integers");
      inv(i, j) = v.get_num();
    }
  }
  return inv;
}

}  // namespace

MatrixRep::MatrixRep(std::size_t n, std::vector<IntMatrix> matrices, Convention conv)
    : n_(n), matrices_(std::move(matrices)), conv_(conv) {
  inverses_.reserve(matrices_.size());
  for (const auto& m : matrices_) {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("representation matrix has the wrong shape");
    const Integer d = bareiss_det(m);
    if (abs(d) != 1) throw std::invalid_argument("representation matrix has determinant " + d.get_str() + ", not +-1");
    inverses_.push_back(unimodular_inverse(m));
  }
}

MatrixRep MatrixRep::trivial(std::size_t generator_count, std::size_t n) {
  return MatrixRep(n, std::vector<IntMatrix>(generator_count, IntMatrix::identity(n)));
}

IntMatrix MatrixRep::evaluate(const FreeWord& w) const {
  IntMatrix acc = IntMatrix::identity(n_);
  for (const Letter& l : w.letters()) {
    const IntMatrix& m = l.sign > 0 ? matrices_.at(l.gen) : inverses_.at(l.gen);
    acc = conv_ == Convention::kAsGiven ? m * acc : acc * m;
  }
  return conv_ == Convention::kAsGiven ? acc : acc.transposed();
}

bool verify_rep(const Presentation& p, const MatrixRep& r) {
  if (r.generator_count() != p.generator_count()) return false;
  const IntMatrix id = IntMatrix::identity(r.dimension());
  return std::all_of(p.relators().begin(), p.relators().end(), [&](const FreeWord& w) { return r.evaluate(w) == id; });
}

MatrixRep perm_to_matrix(const PermutationRep& r, Convention conv) {
  if (!r.verified) throw std::invalid_argument("perm_to_matrix: representation is not verified");
  std::vector<IntMatrix> mats;
  for (const auto& s : r.images) {
    IntMatrix m(r.degree, r.degree);
    for (std::size_t i = 0; i < r.degree; ++i) m(static_cast<std::size_t>(s(static_cast<int>(i))), i) = 1;
    mats.push_back(conv == Convention::kAsGiven ? m : m.transposed());
  }
  return MatrixRep(r.degree, std::move(mats), conv);
}

MatrixRep product_rep(const MatrixRep& r1, const Presentation& p1, const MatrixRep& r2, const Presentation& p2,
                      const Presentation& psum) {
  if (r1.dimension() != r2.dimension()) throw std::invalid_argument("product_rep: dimension mismatch");
  if (r1.convention() != r2.convention()) throw std::invalid_argument("product_rep: convention mismatch");
  if (!p1.meridian() || !p2.meridian()) throw std::invalid_argument("product_rep: missing meridian");
  if (r1.evaluate(FreeWord::generator(*p1.meridian())) != r2.evaluate(FreeWord::generator(*p2.meridian())))
    throw std::invalid_argument("product_rep: meridian images differ");
  std::vector<IntMatrix> mats = r1.matrices();
  mats.insert(mats.end(), r2.matrices().begin(), r2.matrices().end());
  MatrixRep out(r1.dimension(), std::move(mats), r1.convention());
  if (!verify_rep(psum, out)) throw std::invalid_argument("product_rep: result does not satisfy the relators");
  return out;
}

PolyMatrix evaluate_word(const MatrixRep& r, const std::vector<int>& xi, const FreeWord& w) {
  const IntMatrix m = r.evaluate(w);
  const int k = static_cast<int>(w.xi_sum(xi));
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly::monomial(m(i, j), k);
  return out;
}

PolyMatrix evaluate(const MatrixRep& r, const std::vector<int>& xi, const GroupRingElem& a) {
  PolyMatrix out(r.dimension(), r.dimension());
  for (const auto& [w, c] : a.terms()) {
    const IntMatrix m = r.evaluate(w);
    const int k = static_cast<int>(w.xi_sum(xi));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) out(i, j) += LaurentPoly::monomial(m(i, j) * c, k);
      }
  }
  return out;
}

// ---- files ---------------------------------------------------------------------------------

RepresentationFile parse_representation(std::string_view text, const Presentation& p) {
  std::map<GeneratorId, std::string> perm_src;
  std::map<GeneratorId, std::vector<Integer>> mat_src;
  std::optional<std::size_t> degree;
  Convention conv = Convention::kAsGiven;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'name: value'", line_no, first + 1);
    std::string key = line.substr(first, colon - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(colon + 1);
    const auto vstart = value.find_first_not_of(" \t");
    value = vstart == std::string::npos ? "" : value.substr(vstart);
    value.erase(value.find_last_not_of(" \t") + 1);
    if (key == "degree" || key == "dimension") {
      try {
        degree = std::stoul(value);
      } catch (const std::logic_error&) {
        throw ParseError("bad degree", line_no, colon + 2);
      }
      continue;
    }
    if (key == "convention") {
      try {
        conv = parse_convention(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, colon + 2);
      }
      continue;
    }
    const auto g = p.find(key);
    if (!g) throw ParseError("unknown generator '" + key + "'", line_no, first + 1);
    if (perm_src.count(*g) || mat_src.count(*g)) throw ParseError("generator assigned twice", line_no, first + 1);
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') throw ParseError("unterminated matrix", line_no, colon + 2);
      std::string body = value.substr(1, value.size() - 2);
      std::replace(body.begin(), body.end(), ';', ' ');
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream ms(body);
      std::string tok;
      std::vector<Integer> entries;
      while (ms >> tok) {
        Integer v;
        if (v.set_str(tok, 10) != 0) throw ParseError("bad matrix entry '" + tok + "'", line_no, colon + 2);
        entries.push_back(v);
      }
      mat_src[*g] = std::move(entries);
    } else {
      perm_src[*g] = value;
    }
  }
  if (!perm_src.empty() && !mat_src.empty()) throw ParseError("mixed permutation and matrix entries", 1, 1);
  RepresentationFile out;
  const std::size_t g = p.generator_count();
  if (!perm_src.empty() || (mat_src.empty() && g == 0)) {
    if (perm_src.size() != g) throw ParseError("every generator needs an image", line_no, 1);
    std::size_t k = degree.value_or(0);
    if (!degree) {
      for (const auto& [id, src] : perm_src)
        for (char ch : src)
          if (std::isdigit(static_cast<unsigned char>(ch))) k = std::max<std::size_t>(k, static_cast<std::size_t>(ch - '0'));
    }
    PermutationRep r;
    r.degree = std::max<std::size_t>(k, 1);
    for (std::size_t i = 0; i < g; ++i) {
      try {
        r.images.push_back(Permutation::parse_cycles(perm_src[static_cast<GeneratorId>(i)], r.degree));
      } catch (const std::exception& e) {
        throw ParseError("generator " + p.name(static_cast<GeneratorId>(i)) + ": " + e.what(), line_no, 1);
      }
    }
    r.verified = verify_rep(p, r);
    out.perm = std::move(r);
    return out;
  }
  if (mat_src.size() != g) throw ParseError("every generator needs a matrix", line_no, 1);
  std::size_t n = degree.value_or(0);
  if (!degree) {
    const std::size_t sz = mat_src.begin()->second.size();
    while (n * n < sz) ++n;
  }
  std::vector<IntMatrix> mats;
  for (std::size_t i = 0; i < g; ++i) {
    const auto& e = mat_src[static_cast<GeneratorId>(i)];
    if (e.size() != n * n) throw ParseError("matrix for " + p.name(static_cast<GeneratorId>(i)) + " is not " +
                                                std::to_string(n) + "x" + std::to_string(n),
                                            line_no, 1);
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < e.size(); ++k) m(k / n, k % n) = e[k];
    mats.push_back(std::move(m));
  }
  out.matrix = MatrixRep(n, std::move(mats), conv);
  return out;
}

RepresentationFile load_representation(const std::string& path, const Presentation& p) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open representation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_representation(ss.str(), p);
}

std::string to_text(const PermutationRep& r, const Presentation& p) {
  std::ostringstream os;
  os << "degree: " << r.degree << '\n';
  for (std::size_t i = 0; i < r.images.size(); ++i) {
    os << p.name(static_cast<GeneratorId>(i)) << ": " << r.images[i].to_cycles() << '\n';
  }
  return os.str();
}

std::string to_text(const MatrixRep& r, const Presentation& p) {
  std::ostringstream os;
  os << "dimension: " << r.dimension() << '\n';
  os << "convention: " << to_string(r.convention()) << '\n';
  for (std::size_t i = 0; i < r.generator_count(); ++i) {
    os << p.name(static_cast<GeneratorId>(i)) << ": [";
    const auto& m = r.matrices()[i];
    for (std::size_t a = 0; a < m.rows(); ++a) {
      if (a) os << "; ";
      for (std::size_t b = 0; b < m.cols(); ++b) os << (b ? " " : "") << m(a, b);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace nk
