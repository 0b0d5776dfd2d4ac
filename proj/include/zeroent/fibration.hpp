#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace zeroent {

enum class KodairaFamily { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaFamily family = KodairaFamily::In;
  unsigned n = 1;  // subscript for I_n (n >= 1) and I_n* (n >= 0)

  static KodairaType I(unsigned n) {
    if (n == 0) throw std::invalid_argument("I_0 is a smooth fiber");
    return {KodairaFamily::In, n};
  }
  static KodairaType Istar(unsigned n) { return {KodairaFamily::InStar, n}; }
  static KodairaType of(KodairaFamily f) { return {f, 0}; }

  static KodairaType parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
    if (s == "II") return of(KodairaFamily::II);
    if (s == "III") return of(KodairaFamily::III);
    if (s == "IV") return of(KodairaFamily::IV);
    if (s == "IV*") return of(KodairaFamily::IVStar);
    if (s == "III*") return of(KodairaFamily::IIIStar);
    if (s == "II*") return of(KodairaFamily::IIStar);
    if (s.size() >= 2 && s[0] == 'I') {
      bool star = s.back() == '*';
      std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
        unsigned k = static_cast<unsigned>(std::stoul(digits));
        return star ? Istar(k) : I(k);
      }
    }
    throw std::invalid_argument("unknown Kodaira type '" + raw + "'");
  }

  std::string label() const {
    switch (family) {
      case KodairaFamily::In: return "I" + std::to_string(n);
      case KodairaFamily::InStar: return "I" + std::to_string(n) + "*";
      case KodairaFamily::II: return "II";
      case KodairaFamily::III: return "III";
      case KodairaFamily::IV: return "IV";
      case KodairaFamily::IVStar: return "IV*";
      case KodairaFamily::IIIStar: return "III*";
      case KodairaFamily::IIStar: return "II*";
    }
    return "?";
  }

  unsigned component_count() const {
    switch (family) {
      case KodairaFamily::In: return n;
      case KodairaFamily::InStar: return n + 5;
      case KodairaFamily::II: return 1;
      case KodairaFamily::III: return 2;
      case KodairaFamily::IV: return 3;
      case KodairaFamily::IVStar: return 7;
      case KodairaFamily::IIIStar: return 8;
      case KodairaFamily::IIStar: return 9;
    }
    return 0;
  }

  unsigned simple_component_count() const {
    switch (family) {
      case KodairaFamily::In: return n;
      case KodairaFamily::InStar: return 4;
      case KodairaFamily::II: return 1;
      case KodairaFamily::III: return 2;
      case KodairaFamily::IV: return 3;
      case KodairaFamily::IVStar: return 3;
      case KodairaFamily::IIIStar: return 2;
      case KodairaFamily::IIStar: return 1;
    }
    return 0;
  }

  unsigned euler_number() const {
    switch (family) {
      case KodairaFamily::In: return n;
      case KodairaFamily::InStar: return n + 6;
      case KodairaFamily::II: return 2;
      case KodairaFamily::III: return 3;
      case KodairaFamily::IV: return 4;
      case KodairaFamily::IVStar: return 8;
      case KodairaFamily::IIIStar: return 9;
      case KodairaFamily::IIStar: return 10;
    }
    return 0;
  }

  bool multiplicative() const { return family == KodairaFamily::In; }

  RootSystemType root_type() const {
    RootSystemType t;
    switch (family) {
      case KodairaFamily::In:
        if (n >= 2) t.components.push_back({'A', n - 1});
        break;
      case KodairaFamily::InStar: t.components.push_back({'D', n + 4}); break;
      case KodairaFamily::II: break;
      case KodairaFamily::III: t.components.push_back({'A', 1}); break;
      case KodairaFamily::IV: t.components.push_back({'A', 2}); break;
      case KodairaFamily::IVStar: t.components.push_back({'E', 6}); break;
      case KodairaFamily::IIIStar: t.components.push_back({'E', 7}); break;
      case KodairaFamily::IIStar: t.components.push_back({'E', 8}); break;
    }
    t.normalize();
    return t;
  }

  unsigned root_rank() const { return component_count() - 1; }

  friend bool operator==(const KodairaType& a, const KodairaType& b) { return a.family == b.family && a.n == b.n; }
  friend bool operator<(const KodairaType& a, const KodairaType& b) { return a.label() < b.label(); }
};

// Gram of the root lattice of a fiber (components other than the one meeting the zero section)
inline Lattice fiber_root_lattice(const KodairaType& t) {
  auto r = t.root_type();
  Lattice l(IntMatrix(0, 0));
  for (auto& [fam, k] : r.components) l = direct_sum(l, standard_lattice(std::string(1, fam) + std::to_string(k)));
  return l;
}

struct FiberEntry {
  KodairaType type;
  bool double_fiber = false;
};

struct FiberConfiguration {
  std::vector<FiberEntry> fibers;

  // "I8,III", "I0*,4xIII", "I4*(double)"
  static FiberConfiguration parse(const std::string& s) {
    FiberConfiguration c;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      std::string tok = s.substr(start, end - start);
      tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return std::isspace((unsigned char)ch); }),
                tok.end());
      start = end + 1;
      if (tok.empty()) {
        if (end == s.size()) break;
        throw std::invalid_argument("empty fiber entry in '" + s + "'");
      }
      bool dbl = false;
      const std::string suffix = "(double)";
      if (tok.size() > suffix.size() && tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) == 0) {
        dbl = true;
        tok.erase(tok.size() - suffix.size());
      }
      unsigned mult = 1;
      auto x = tok.find('x');
      if (x != std::string::npos) {
        mult = static_cast<unsigned>(std::stoul(tok.substr(0, x)));
        tok = tok.substr(x + 1);
      }
      for (unsigned k = 0; k < mult; ++k) c.fibers.push_back({KodairaType::parse(tok), dbl});
      if (end == s.size()) break;
    }
    std::size_t doubles = std::count_if(c.fibers.begin(), c.fibers.end(), [](auto& f) { return f.double_fiber; });
    if (doubles > 2) throw std::invalid_argument("more than two double fibers");
    return c;
  }

  unsigned root_rank() const {
    unsigned r = 0;
    for (auto& f : fibers) r += f.type.root_rank();
    return r;
  }
  unsigned euler_sum() const {
    unsigned e = 0;
    for (auto& f : fibers) e += f.type.euler_number();
    return e;
  }
  std::vector<std::string> sorted_reducible_labels() const {
    std::vector<std::string> v;
    for (auto& f : fibers)
      if (f.type.component_count() > 1) v.push_back(f.type.label());
    std::sort(v.begin(), v.end());
    return v;
  }
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      if (i) s += ",";
      s += fibers[i].type.label();
      if (fibers[i].double_fiber) s += "(double)";
    }
    return s;
  }
  Lattice root_lattice() const {
    Lattice l(IntMatrix(0, 0));
    for (auto& f : fibers) l = direct_sum(l, fiber_root_lattice(f.type));
    return l;
  }
};

struct MordellWeilGroup {
  unsigned rank = 0;
  std::vector<unsigned> torsion;  // invariant factors

  unsigned torsion_order() const {
    unsigned o = 1;
    for (auto t : torsion) o *= t;
    return o;
  }
  bool two_elementary() const {
    return std::all_of(torsion.begin(), torsion.end(), [](unsigned t) { return t == 2; });
  }
  std::string str() const {
    std::string s;
    for (auto t : torsion) {
      if (!s.empty()) s += " x ";
      s += "Z/" + std::to_string(t);
    }
    if (rank > 0) {
      if (!s.empty()) s += " x ";
      s += rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    }
    return s.empty() ? "0" : s;
  }
};

enum class ActionKind { Trivial, ReflectionCentral, Rotation, TransitiveSimple };

struct MWFiberAction {
  ActionKind kind = ActionKind::Trivial;
  unsigned k = 1;  // rotation order, or orbit size for transitive actions

  std::string str() const {
    switch (kind) {
      case ActionKind::Trivial: return "trivial";
      case ActionKind::ReflectionCentral: return "reflection along central vertex";
      case ActionKind::Rotation: return "rotation of order " + std::to_string(k);
      case ActionKind::TransitiveSimple: return "transitive on simple components";
    }
    return "?";
  }
  unsigned order() const {
    switch (kind) {
      case ActionKind::Trivial: return 1;
      case ActionKind::ReflectionCentral: return 2;
      case ActionKind::Rotation: return k;
      case ActionKind::TransitiveSimple: return k;
    }
    return 1;
  }
};

struct TableRow {
  std::vector<std::string> fibers;  // as printed
  MordellWeilGroup mw;
  std::vector<MWFiberAction> actions;  // one per reducible fiber, same order
  bool quasi_elliptic = false;

  FiberConfiguration configuration() const {
    FiberConfiguration c;
    for (auto& f : fibers) c.fibers.push_back({KodairaType::parse(f), false});
    return c;
  }
};

namespace detail {

inline MWFiberAction transitive(const std::string& label) {
  return {ActionKind::TransitiveSimple, KodairaType::parse(label).simple_component_count()};
}

inline TableRow row(std::vector<std::string> fibers, std::vector<unsigned> torsion, bool qe) {
  TableRow r;
  r.fibers = std::move(fibers);
  r.mw.torsion = std::move(torsion);
  r.quasi_elliptic = qe;
  for (auto& f : r.fibers) r.actions.push_back(transitive(f));
  return r;
}

}  // namespace detail

// extremal elliptic fibrations on rational surfaces
inline const std::vector<TableRow>& table1() {
  static const std::vector<TableRow> rows = [] {
    using detail::row;
    std::vector<TableRow> t;
    t.push_back(row({"II*"}, {}, false));
    t.back().actions = {{ActionKind::Trivial, 1}};
    t.push_back(row({"I4*"}, {2}, false));
    t.back().actions = {{ActionKind::ReflectionCentral, 2}};
    t.push_back(row({"I9"}, {3}, false));
    t.back().actions = {{ActionKind::Rotation, 3}};
    t.push_back(row({"III*", "III"}, {2}, false));
    t.push_back(row({"III*", "I2"}, {2}, false));
    t.push_back(row({"I8", "III"}, {4}, false));
    t.back().actions[0] = {ActionKind::Rotation, 4};
    t.push_back(row({"I8", "I2"}, {4}, false));
    t.back().actions[0] = {ActionKind::Rotation, 4};
    t.push_back(row({"IV*", "IV"}, {3}, false));
    t.push_back(row({"IV*", "I3"}, {3}, false));
    t.push_back(row({"I1*", "I4"}, {4}, false));
    t.push_back(row({"I0*", "I0*"}, {2, 2}, false));
    t.push_back(row({"I5", "I5"}, {5}, false));
    t.push_back(row({"I2*", "I2", "I2"}, {2, 2}, false));
    t.push_back(row({"I6", "IV", "I2"}, {6}, false));
    t.push_back(row({"I6", "I3", "III"}, {6}, false));
    t.push_back(row({"I6", "I3", "I2"}, {6}, false));
    t.push_back(row({"I4", "I4", "I2", "I2"}, {2, 4}, false));
    t.push_back(row({"I3", "I3", "I3", "I3"}, {3, 3}, false));
    return t;
  }();
  return rows;
}

// quasi-elliptic fibrations on rational surfaces in characteristic 2
inline const std::vector<TableRow>& table2() {
  static const std::vector<TableRow> rows = [] {
    using detail::row;
    std::vector<TableRow> t;
    t.push_back(row({"II*"}, {}, true));
    t.back().actions = {{ActionKind::Trivial, 1}};
    t.push_back(row({"I4*"}, {2}, true));
    t.back().actions = {{ActionKind::ReflectionCentral, 2}};
    t.push_back(row({"III*", "III"}, {2}, true));
    t.push_back(row({"I0*", "I0*"}, {2, 2}, true));
    t.push_back(row({"I2*", "III", "III"}, {2, 2}, true));
    t.push_back(row({"I0*", "III", "III", "III", "III"}, {2, 2, 2}, true));
    t.push_back(row({"III", "III", "III", "III", "III", "III", "III", "III"}, {2, 2, 2, 2}, true));
    return t;
  }();
  return rows;
}

inline int shioda_tate_rank(const FiberConfiguration& c) {
  unsigned r = c.root_rank();
  if (r > 8) throw std::domain_error("shioda_tate_rank: root rank " + std::to_string(r) + " exceeds 8");
  return 8 - static_cast<int>(r);
}

inline bool is_extremal(const FiberConfiguration& c, bool quasi_elliptic) {
  if (quasi_elliptic) return true;
  return shioda_tate_rank(c) == 0;
}

struct NotExtremalOrUnknown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MWLookup {
  const TableRow* row = nullptr;
  MordellWeilGroup mw;
  std::vector<std::pair<std::string, MWFiberAction>> actions;  // per reducible fiber of the query
};

inline MWLookup mw_lookup(const FiberConfiguration& c, bool quasi_elliptic) {
  auto key = c.sorted_reducible_labels();
  const auto& table = quasi_elliptic ? table2() : table1();
  for (auto& r : table) {
    auto k = r.fibers;
    std::sort(k.begin(), k.end());
    if (k != key) continue;
    MWLookup out;
    out.row = &r;
    out.mw = r.mw;
    for (std::size_t i = 0; i < r.fibers.size(); ++i) out.actions.emplace_back(r.fibers[i], r.actions[i]);
    return out;
  }
  throw NotExtremalOrUnknown("configuration {" + c.str() + "} is not in Table " + (quasi_elliptic ? "2" : "1"));
}

inline bool torsion_disc_consistency(const FiberConfiguration& c, const MordellWeilGroup& mw) {
  Int det = iabs(c.root_lattice().det());
  Int t = mw.torsion_order();
  return t * t == det;
}

inline bool torsion_disc_consistency(const FiberConfiguration& c, bool quasi_elliptic = false) {
  return torsion_disc_consistency(c, mw_lookup(c, quasi_elliptic).mw);
}

namespace detail {
inline bool in_list(const FiberConfiguration& c, const std::vector<std::vector<std::string>>& list) {
  auto key = c.sorted_reducible_labels();
  for (auto l : list) {
    std::sort(l.begin(), l.end());
    if (l == key) return true;
  }
  return false;
}
}  // namespace detail

inline const std::vector<std::vector<std::string>>& prop_alternative_list() {
  static const std::vector<std::vector<std::string>> l = {
      {"II*"}, {"I4*"}, {"III*", "I2"}, {"III*", "III"}, {"I0*", "I0*"}, {"I2*", "III", "III"}, {"I2*", "I2", "I2"}};
  return l;
}

// the list actually used for F0.F2 = 1 contradictions (I0*, I0* and II* removed)
inline const std::vector<std::vector<std::string>>& cor_alternative_list() {
  static const std::vector<std::vector<std::string>> l = {
      {"I4*"}, {"III*", "III"}, {"III*", "I2"}, {"I2*", "III", "III"}, {"I2*", "I2", "I2"}};
  return l;
}

inline const std::vector<std::vector<std::string>>& lemma_excludeXX_list() {
  static const std::vector<std::vector<std::string>> l = {{"I4*"}, {"III*", "III"}, {"III*", "I2"}};
  return l;
}

inline bool allowed_by_prop_alternative(const FiberConfiguration& c) {
  return detail::in_list(c, prop_alternative_list());
}
inline bool allowed_by_cor_alternative(const FiberConfiguration& c) { return detail::in_list(c, cor_alternative_list()); }
inline bool allowed_by_lemma_excludeXX(const FiberConfiguration& c) {
  return detail::in_list(c, lemma_excludeXX_list());
}

// local height correction of a section meeting simple component `comp` of a fiber
inline Rational height_contribution(const KodairaType& t, unsigned comp) {
  auto bad = [&]() {
    return std::invalid_argument("invalid component index " + std::to_string(comp) + " for " + t.label());
  };
  if (t.family == KodairaFamily::In) {
    if (comp >= t.n) throw bad();
    return Rational(Int(comp) * (t.n - comp), Int(t.n));
  }
  if (comp >= t.simple_component_count()) throw bad();
  if (comp == 0) return 0;
  switch (t.family) {
    case KodairaFamily::InStar:
      return comp == 1 ? Rational(1) : Rational(1) + Rational(Int(t.n), Int(4));
    case KodairaFamily::III: return Rational(1, 2);
    case KodairaFamily::IV: return Rational(2, 3);
    case KodairaFamily::IVStar: return Rational(4, 3);
    case KodairaFamily::IIIStar: return Rational(3, 2);
    default: throw bad();
  }
}

inline Rational height(long long chi, long long p_dot_o, const std::vector<std::pair<KodairaType, unsigned>>& hits) {
  Rational h = Rational(2 * chi + 2 * p_dot_o);
  for (auto& [t, c] : hits) h -= height_contribution(t, c);
  return h;
}

struct RowAudit {
  std::string fibers;
  std::string mw;
  int st_rank = 0;
  bool rank_zero = false;
  bool disc = false;
  bool two_elementary = true;  // only asserted for Table 2
  bool action_orders = false;
  bool euler = true;           // only asserted for Table 1
  bool pass() const { return rank_zero && disc && two_elementary && action_orders && euler; }
};

inline RowAudit audit_row(const TableRow& r) {
  RowAudit a;
  auto c = r.configuration();
  a.fibers = c.str();
  a.mw = r.mw.str();
  a.st_rank = shioda_tate_rank(c);
  a.rank_zero = a.st_rank == 0 && r.mw.rank == 0;
  a.disc = torsion_disc_consistency(c, r.mw);
  if (r.quasi_elliptic) a.two_elementary = r.mw.two_elementary();
  a.action_orders = std::all_of(r.actions.begin(), r.actions.end(),
                                [&](const MWFiberAction& x) { return r.mw.torsion_order() % x.order() == 0; });
  if (!r.quasi_elliptic) a.euler = c.euler_sum() <= 12;
  return a;
}

}  // namespace zeroent
