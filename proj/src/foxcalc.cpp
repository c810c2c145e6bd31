#include "nk/foxcalc.hpp"

#include <set>
#include <sstream>

namespace nk {

GroupRingElem::GroupRingElem(const FreeWord& w, Integer c) {
  if (c != 0) terms_.emplace(w, std::move(c));
}

void GroupRingElem::add(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
  return out;
}

GroupRingElem operator*(const FreeWord& w, const GroupRingElem& a) {
  GroupRingElem out;
  for (const auto& [v, c] : a.terms_) out.add(w * v, c);
  return out;
}

namespace {

template <class NameFn>
std::string format_elem(const std::map<FreeWord, Integer>& terms, NameFn name) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << abs(c) << '*';
    if (w.empty()) {
      os << 'e';
    } else {
      bool sep = false;
      for (const Letter& l : w.letters()) {
        if (sep) os << ' ';
        sep = true;
        os << name(l.gen);
        if (l.sign < 0) os << "^-1";
      }
    }
  }
  return os.str();
}

}  // namespace

std::string GroupRingElem::to_string(const Presentation& p) const {
  return format_elem(terms_, [&](GeneratorId g) { return p.name(g); });
}

std::string GroupRingElem::to_string() const {
  return format_elem(terms_, [](GeneratorId g) { return "x" + std::to_string(g); });
}

GroupRingElem fox_derivative(const FreeWord& w, GeneratorId x) {
  GroupRingElem out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].gen != x) continue;
    // d(u x v) = du + u + u x dv ;  d(u x^-1 v) = du - u x^-1 + u x^-1 dv
    if (l[i].sign > 0) {
      out.add(w.prefix(i), 1);
    } else {
      out.add(w.prefix(i + 1), -1);
    }
  }
  return out;
}

FoxJacobian jacobian(const Presentation& p) {
  FoxJacobian j;
  j.rows = p.relator_count();
  j.cols = p.generator_count();
  j.entries.reserve(j.rows * j.cols);
  for (const auto& r : p.relators())
    for (std::size_t g = 0; g < j.cols; ++g) j.entries.push_back(fox_derivative(r, static_cast<GeneratorId>(g)));
  return j;
}

bool fundamental_check(const FreeWord& w) {
  std::set<GeneratorId> gens;
  for (const Letter& l : w.letters()) gens.insert(l.gen);
  GroupRingElem lhs;
  for (GeneratorId g : gens) {
    GroupRingElem x_minus_one(FreeWord::generator(g));
    x_minus_one.add(FreeWord{}, -1);
    lhs += fox_derivative(w, g) * x_minus_one;
  }
  GroupRingElem rhs(w);
  rhs.add(FreeWord{}, -1);
  return lhs == rhs;
}

}  // namespace nk
