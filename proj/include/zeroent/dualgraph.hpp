#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "fibration.hpp"
#include "lattice.hpp"

namespace zeroent {

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DualGraph {
 public:
  DualGraph() = default;
  DualGraph(std::vector<std::string> labels, IntMatrix m) : labels_(std::move(labels)), m_(std::move(m)) { validate(); }

  using Edge = std::tuple<std::string, std::string, int>;
  static DualGraph from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges) {
    const std::size_t n = labels.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = -2;
    DualGraph tmp;
    tmp.labels_ = labels;
    for (auto& [a, b, w] : edges) {
      std::size_t i = tmp.index(a), j = tmp.index(b);
      if (i == j) throw GraphError("self-loop at " + a);
      if (w < 0) throw GraphError("negative intersection between " + a + " and " + b);
      m(i, j) = w;
      m(j, i) = w;
    }
    return DualGraph(std::move(labels), std::move(m));
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const IntMatrix& matrix() const { return m_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  std::size_t index(const std::string& l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw GraphError("unknown vertex '" + l + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (m_(i, j) != 0) out.emplace_back(labels_[i], labels_[j], static_cast<int>(m_(i, j)));
    return out;
  }

  IntMatrix induced(const std::vector<std::size_t>& s) const { return m_.submatrix(s, s); }

  bool connected(const std::vector<std::size_t>& s) const {
    if (s.empty()) return true;
    std::vector<char> in(size(), 0), seen(size(), 0);
    for (auto v : s) in[v] = 1;
    std::vector<std::size_t> st{s[0]};
    seen[s[0]] = 1;
    std::size_t cnt = 1;
    while (!st.empty()) {
      auto a = st.back();
      st.pop_back();
      for (auto b : s)
        if (!seen[b] && m_(a, b) != 0) {
          seen[b] = 1;
          ++cnt;
          st.push_back(b);
        }
    }
    return cnt == s.size();
  }

  std::vector<std::vector<std::size_t>> components(const std::vector<std::size_t>& s) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> done(size(), 0), in(size(), 0);
    for (auto v : s) in[v] = 1;
    for (auto v : s) {
      if (done[v]) continue;
      std::vector<std::size_t> comp{v}, st{v};
      done[v] = 1;
      while (!st.empty()) {
        auto a = st.back();
        st.pop_back();
        for (std::size_t b = 0; b < size(); ++b)
          if (in[b] && !done[b] && m_(a, b) != 0) {
            done[b] = 1;
            comp.push_back(b);
            st.push_back(b);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend bool operator==(const DualGraph& a, const DualGraph& b) { return a.labels_ == b.labels_ && a.m_ == b.m_; }

 private:
  void validate() const {
    const std::size_t n = labels_.size();
    if (m_.rows() != n || m_.cols() != n) throw GraphError("intersection matrix size does not match vertex count");
    for (std::size_t i = 0; i < n; ++i) {
      if (m_(i, i) != -2) throw GraphError("vertex " + labels_[i] + " does not have self-intersection -2");
      for (std::size_t j = 0; j < n; ++j) {
        if (m_(i, j) != m_(j, i)) throw GraphError("intersection matrix is not symmetric");
        if (i != j && m_(i, j) < 0) throw GraphError("negative off-diagonal intersection");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) throw GraphError("duplicate vertex label " + labels_[i]);
  }

  std::vector<std::string> labels_;
  IntMatrix m_;
};

inline Lattice gram(const DualGraph& g) { return Lattice(g.matrix()); }

// ------------------------------------------------------------ affine types

enum class AffineKind { A, D, E6, E7, E8, A1Double };

struct AffineType {
  AffineKind kind = AffineKind::A;
  unsigned n = 0;  // rank of the finite diagram

  std::string label() const {
    switch (kind) {
      case AffineKind::A: return "A" + std::to_string(n) + "~";
      case AffineKind::D: return "D" + std::to_string(n) + "~";
      case AffineKind::E6: return "E6~";
      case AffineKind::E7: return "E7~";
      case AffineKind::E8: return "E8~";
      case AffineKind::A1Double: return "A1~";
    }
    return "?";
  }
  friend bool operator==(const AffineType& a, const AffineType& b) { return a.kind == b.kind && a.n == b.n; }
};

// vertices of size k with primitive kernel vector `marks`
inline AffineType affine_type_from_marks(const IntVec& marks) {
  const std::size_t k = marks.size();
  Int mx = *std::max_element(marks.begin(), marks.end());
  if (mx == 1) return k == 2 ? AffineType{AffineKind::A1Double, 1} : AffineType{AffineKind::A, unsigned(k - 1)};
  if (mx == 2) return {AffineKind::D, unsigned(k - 1)};
  if (mx == 3) return {AffineKind::E6, 6};
  if (mx == 4) return {AffineKind::E7, 7};
  if (mx == 6) return {AffineKind::E8, 8};
  throw std::logic_error("affine_type_from_marks: not an affine Dynkin mark vector");
}

inline std::vector<KodairaType> kodaira_candidates(const AffineType& t) {
  switch (t.kind) {
    case AffineKind::A1Double: return {KodairaType::of(KodairaFamily::III), KodairaType::I(2)};
    case AffineKind::A:
      if (t.n == 2) return {KodairaType::I(3), KodairaType::of(KodairaFamily::IV)};
      return {KodairaType::I(t.n + 1)};
    case AffineKind::D: return {KodairaType::Istar(t.n - 4)};
    case AffineKind::E6: return {KodairaType::of(KodairaFamily::IVStar)};
    case AffineKind::E7: return {KodairaType::of(KodairaFamily::IIIStar)};
    case AffineKind::E8: return {KodairaType::of(KodairaFamily::IIStar)};
  }
  return {};
}

// dual graph of the components of a reducible Kodaira fiber
inline IntMatrix kodaira_dual_graph(const KodairaType& t) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t n = t.component_count();
  switch (t.family) {
    case KodairaFamily::In:
    case KodairaFamily::III:
    case KodairaFamily::IV:
      if (n >= 3)
        for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
      break;
    case KodairaFamily::InStar:
      if (t.n == 0) {
        e = {{0, 2}, {1, 2}, {2, 3}, {2, 4}};
      } else {
        e = {{0, 2}, {1, 2}};
        for (std::size_t i = 2; i < 2 + t.n; ++i) e.push_back({i, i + 1});
        e.push_back({2 + t.n, n - 2});
        e.push_back({2 + t.n, n - 1});
      }
      break;
    case KodairaFamily::IVStar: e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}; break;
    case KodairaFamily::IIIStar: e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}; break;
    case KodairaFamily::IIStar: e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}}; break;
    case KodairaFamily::II: break;
  }
  IntMatrix m = dynkin_gram(n, e);
  if (n == 2) m(0, 1) = m(1, 0) = 2;
  return m;
}

// is `small` (an intersection matrix) an induced subgraph of `big`?
inline bool embeds_induced(const IntMatrix& small, const IntMatrix& big) {
  const std::size_t k = small.rows(), n = big.rows();
  if (k > n) return false;
  std::vector<std::size_t> img(k);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = small(i, j) == big(x, img[j]);
      if (!ok) continue;
      used[x] = 1;
      img[i] = x;
      if (go(i + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return go(0);
}

// ------------------------------------------------------------ graph fibers

enum class Halfness { HalfFiber, SimpleFiberCandidate, Ambiguous };

inline std::string to_string(Halfness h) {
  switch (h) {
    case Halfness::HalfFiber: return "half_fiber";
    case Halfness::SimpleFiberCandidate: return "simple_fiber_candidate";
    case Halfness::Ambiguous: return "ambiguous";
  }
  return "?";
}

struct GraphFiber {
  std::vector<std::size_t> support;  // sorted vertex indices
  IntVec marks;                      // parallel to support
  IntVec iso_class;                  // graph coordinates
  AffineType affine_type;
  std::vector<KodairaType> kodaira_candidates;
  Halfness halfness = Halfness::Ambiguous;
  bool half_class_allowed = true;  // delta/2 may be a class of the saturation

  // admissible k with F = iso_class / k
  std::vector<unsigned> scales() const {
    if (halfness == Halfness::HalfFiber || !half_class_allowed) return {1};
    return {1, 2};
  }

  std::string kodaira_label() const {
    std::string s;
    for (auto& k : kodaira_candidates) s += (s.empty() ? "" : "/") + k.label();
    return s;
  }

  bool has_candidate(const std::string& label) const {
    for (auto& k : kodaira_candidates)
      if (k.label() == label) return true;
    return false;
  }
};

inline std::vector<std::string> support_labels(const DualGraph& g, const GraphFiber& f) {
  std::vector<std::string> out;
  for (auto v : f.support) out.push_back(g.label(v));
  return out;
}

enum class ComponentKind { Definite, Affine, Other };

struct ProfileComponent {
  std::vector<std::size_t> vertices;
  ComponentKind kind = ComponentKind::Other;
  RootSystemType root_type;  // finite part (for affine: that of the fiber)
  std::optional<GraphFiber> fiber;
};

struct FibrationProfile {
  IntVec base_class;
  std::vector<ProfileComponent> components;  // vertices orthogonal to the class
  std::vector<GraphFiber> visible_fibers;
  std::size_t orthogonal_root_rank = 0;
  RootSystemType orthogonal_root_type;
  bool extremal_compatible = false;
};

struct Violation {
  GraphFiber f2;
  unsigned f0_scale = 1, f2_scale = 1;
  Rational pairing;
  std::string rule;
};

struct ScanResult {
  std::vector<Violation> violations;
  std::vector<std::pair<GraphFiber, unsigned>> i2star_hits;  // (fiber, scale) with pairing 1
};

struct NonextremalResult {
  std::optional<GraphFiber> unique;
  std::vector<GraphFiber> classes;  // one representative per ray orbit
  bool is_unique() const { return unique.has_value(); }
};

namespace detail {

inline IntVec primitive_key(IntVec v) {
  Int g = 0;
  for (auto& x : v) g = igcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline bool is_affine_gram(const IntMatrix& m) {
  auto s = signature(m);
  return s.positive == 0 && s.zero == 1;
}

}  // namespace detail

// cached analysis of a graph; the free functions below wrap it
class GraphAnalysis {
 public:
  explicit GraphAnalysis(DualGraph g) : g_(std::move(g)), lat_(gram(g_)) {
    if (g_.size() > 63) throw GraphError("graphs with more than 63 vertices are not supported");
    split_ = radical_split(lat_);
    sig_ = signature(split_.quotient);
    load_saturations();
    search_fibers();
  }

  const DualGraph& graph() const { return g_; }
  const Lattice& lattice() const { return lat_; }
  const std::vector<GraphFiber>& fibers() const { return fibers_; }

  bool span_is_E10() const {
    return split_.quotient.rank() == 10 && sig_.positive == 1 && sig_.negative == 9 && has_unimodular_;
  }

  std::optional<GraphFiber> find_fiber(std::vector<std::string> labels) const {
    std::vector<std::size_t> s;
    for (auto& l : labels) s.push_back(g_.index(l));
    std::sort(s.begin(), s.end());
    for (auto& f : fibers_)
      if (f.support == s) return f;
    return std::nullopt;
  }

  IntVec pairing_vector(const IntVec& v) const { return g_.matrix() * v; }

  Int pairing(const IntVec& a, const IntVec& b) const { return lat_.dot(a, b); }

  FibrationProfile profile(const GraphFiber& f) const {
    if (lat_.dot(f.iso_class, f.iso_class) != 0) throw std::invalid_argument("fibration_profile: class is not isotropic");
    FibrationProfile p;
    p.base_class = f.iso_class;
    IntVec pv = pairing_vector(f.iso_class);
    std::vector<std::size_t> orth;
    for (std::size_t v = 0; v < g_.size(); ++v)
      if (pv[v] == 0) orth.push_back(v);
    p.orthogonal_root_rank = orth.empty() ? 0 : rank(g_.induced(orth));
    for (auto& c : g_.components(orth)) {
      ProfileComponent pc;
      pc.vertices = c;
      IntMatrix m = g_.induced(c);
      auto s = signature(m);
      if (s.positive == 0 && s.zero == 0) {
        pc.kind = ComponentKind::Definite;
        pc.root_type = ade_type(Lattice(m));
      } else if (s.positive == 0 && s.zero == 1) {
        pc.kind = ComponentKind::Affine;
        for (auto& fb : fibers_)
          if (fb.support == c) pc.fiber = fb;
        if (pc.fiber) {
          pc.root_type = pc.fiber->kodaira_candidates.front().root_type();
          p.visible_fibers.push_back(*pc.fiber);
        }
      }
      p.orthogonal_root_type = p.orthogonal_root_type + pc.root_type;
      p.components.push_back(std::move(pc));
    }
    p.extremal_compatible = p.orthogonal_root_rank == 8;
    return p;
  }

  const std::vector<std::vector<std::size_t>>& automorphisms() const {
    if (!autos_) autos_ = find_automorphisms();
    return *autos_;
  }

  // canonical key of the ray of a class, up to graph automorphisms
  IntVec orbit_key(const IntVec& cls) const {
    IntVec k = detail::primitive_key(pairing_vector(cls));
    IntVec best = k;
    for (auto& p : automorphisms()) {
      IntVec q(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) q[p[i]] = k[i];
      if (q < best) best = q;
    }
    return best;
  }

  NonextremalResult unique_nonextremal() const {
    if (!span_is_E10()) throw std::domain_error("unique_nonextremal: graph does not span E10");
    std::map<IntVec, GraphFiber> orbits;
    for (auto& f : fibers_) {
      if (profile(f).extremal_compatible) continue;
      IntVec key = orbit_key(f.iso_class);
      auto it = orbits.find(key);
      if (it == orbits.end() || f.support < it->second.support) orbits[key] = f;
    }
    NonextremalResult r;
    for (auto& [k, f] : orbits) r.classes.push_back(f);
    std::sort(r.classes.begin(), r.classes.end(),
              [](const GraphFiber& a, const GraphFiber& b) { return a.support < b.support; });
    if (r.classes.size() == 1) r.unique = r.classes.front();
    return r;
  }

  // f0_scale = 0 explores every admissible scale of f0
  ScanResult scan(const GraphFiber& f0, unsigned f0_scale = 0) const {
    std::vector<unsigned> k0s = f0_scale ? std::vector<unsigned>{f0_scale} : f0.scales();
    ScanResult res;
    for (unsigned k0 : k0s)
      for (auto& f2 : fibers_)
        for (unsigned k2 : f2.scales()) {
          Rational p(lat_.dot(f0.iso_class, f2.iso_class), Int(k0 * k2));
          if (p != 1) continue;
          std::vector<std::vector<std::size_t>> rest;
          IntVec pv = pairing_vector(f2.iso_class);
          std::vector<std::size_t> orth;
          for (std::size_t v = 0; v < g_.size(); ++v)
            if (pv[v] == 0) orth.push_back(v);
          for (auto& c : g_.components(orth))
            if (c != f2.support) rest.push_back(c);
          bool ok = false;
          for (auto& cfg : cor_alternative_list())
            if (completable(f2, rest, cfg)) ok = true;
          if (!ok) {
            Violation v;
            v.f2 = f2;
            v.f0_scale = k0;
            v.f2_scale = k2;
            v.pairing = p;
            v.rule = "profile of " + f2.kodaira_label() + " (F = class/" + std::to_string(k2) +
                     ") does not complete to an allowed configuration with F0.F2 = 1";
            res.violations.push_back(std::move(v));
          } else if (f2.has_candidate("I2*")) {
            res.i2star_hits.push_back({f2, k2});
          }
        }
    return res;
  }

  // can the orthogonal components be placed into the fibers of `cfg`, with f2 one of them?
  bool completable(const GraphFiber& f2, const std::vector<std::vector<std::size_t>>& comps,
                   const std::vector<std::string>& cfg) const {
    for (auto& cand : f2.kodaira_candidates) {
      auto it = std::find(cfg.begin(), cfg.end(), cand.label());
      if (it == cfg.end()) continue;
      std::vector<KodairaType> slots;
      for (auto jt = cfg.begin(); jt != cfg.end(); ++jt)
        if (jt != it) slots.push_back(KodairaType::parse(*jt));
      std::vector<std::size_t> assign(comps.size(), 0);
      std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == comps.size()) return assignment_fits(comps, assign, slots);
        for (std::size_t s = 0; s < slots.size(); ++s) {
          assign[i] = s;
          if (go(i + 1)) return true;
        }
        return false;
      };
      if (go(0)) return true;
    }
    return false;
  }

 private:
  bool assignment_fits(const std::vector<std::vector<std::size_t>>& comps, const std::vector<std::size_t>& assign,
                       const std::vector<KodairaType>& slots) const {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::vector<std::size_t> vs;
      bool has_affine = false;
      std::size_t count = 0;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (assign[i] == s) {
          ++count;
          vs.insert(vs.end(), comps[i].begin(), comps[i].end());
          if (detail::is_affine_gram(g_.induced(comps[i]))) has_affine = true;
        }
      if (vs.empty()) continue;
      IntMatrix diag = kodaira_dual_graph(slots[s]);
      if (has_affine) {
        if (count > 1 || vs.size() != diag.rows()) return false;
      } else if (vs.size() >= diag.rows()) {
        return false;
      }
      if (!embeds_induced(g_.induced(vs), diag)) return false;
    }
    return true;
  }

  void load_saturations() {
    std::vector<Overlattice> all;
    try {
      all = even_overlattices(split_.quotient);
    } catch (const std::exception&) {
      saturations_known_ = false;
      return;
    }
    bool e10_like = split_.quotient.rank() == 10 && sig_.positive == 1 && sig_.negative == 9;
    for (auto& o : all) {
      if (o.lattice.is_unimodular()) has_unimodular_ = true;
      if (!e10_like || o.lattice.is_unimodular()) saturations_.push_back(inverse(o.basis));
    }
    if (saturations_.empty())
      for (auto& o : all) saturations_.push_back(inverse(o.basis));
  }

  // is v/2 contained in the i-th candidate saturation?
  bool half_in(const IntVec& v, std::size_t i) const {
    RatVec y = split_.project(to_rational(v));
    const RatMatrix& binv = saturations_[i];
    for (std::size_t j = 0; j < binv.cols(); ++j) {
      Rational z = 0;
      for (std::size_t k = 0; k < y.size(); ++k) z += y[k] * binv(k, j);
      if (den(z / 2) != 1) return false;
    }
    return true;
  }

  GraphFiber make_fiber(const std::vector<std::size_t>& s, IntVec marks) const {
    GraphFiber f;
    f.support = s;
    f.marks = std::move(marks);
    f.iso_class.assign(g_.size(), Int(0));
    for (std::size_t i = 0; i < s.size(); ++i) f.iso_class[s[i]] = f.marks[i];
    f.affine_type = affine_type_from_marks(f.marks);
    f.kodaira_candidates = kodaira_candidates(f.affine_type);
    IntVec pv = pairing_vector(f.iso_class);
    bool odd = false;
    for (auto& x : pv)
      if (x % 2 != 0) odd = true;
    if (odd) {
      f.halfness = Halfness::HalfFiber;
      f.half_class_allowed = false;
      return f;
    }
    if (!saturations_known_) {
      f.halfness = Halfness::Ambiguous;
      f.half_class_allowed = true;
      return f;
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < saturations_.size(); ++i)
      if (half_in(f.iso_class, i)) ++hits;
    if (hits == saturations_.size()) {
      f.halfness = Halfness::SimpleFiberCandidate;
      f.half_class_allowed = true;
    } else {
      f.halfness = Halfness::Ambiguous;
      f.half_class_allowed = hits > 0;
    }
    return f;
  }

  // connected subsets grown through negative definite ones; affine = semidefinite of corank 1
  void search_fibers() {
    const std::size_t n = g_.size();
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    auto verts = [&](std::uint64_t mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
      return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
      frontier.push_back(std::uint64_t(1) << i);
      seen.insert(frontier.back());
    }
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (auto mask : frontier) {
        for (std::size_t v = 0; v < n; ++v) {
          if (mask >> v & 1) continue;
          bool adj = false;
          for (std::size_t u = 0; u < n && !adj; ++u)
            if ((mask >> u & 1) && g_(u, v) != 0) adj = true;
          if (!adj) continue;
          std::uint64_t m2 = mask | (std::uint64_t(1) << v);
          if (!seen.insert(m2).second) continue;
          auto s = verts(m2);
          IntMatrix sub = g_.induced(s);
          auto sg = signature(sub);
          if (sg.positive != 0) continue;
          if (sg.zero == 0) {
            next.push_back(m2);
          } else if (sg.zero == 1) {
            IntVec k = kernel_basis(sub).at(0);
            if (k[0] < 0)
              for (auto& x : k) x = -x;
            if (std::all_of(k.begin(), k.end(), [](const Int& x) { return x > 0; }))
              fibers_.push_back(make_fiber(s, std::move(k)));
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(fibers_.begin(), fibers_.end(), [](const GraphFiber& a, const GraphFiber& b) {
      if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
      return a.support < b.support;
    });
  }

  std::vector<std::vector<std::size_t>> find_automorphisms() const {
    const std::size_t n = g_.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> p(n);
    std::vector<char> used(n, 0);
    std::vector<Int> rowsum(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rowsum[i] += g_(i, j);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == n) {
        out.push_back(p);
        return;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (used[x] || rowsum[x] != rowsum[i]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = g_(i, j) == g_(x, p[j]);
        if (!ok) continue;
        used[x] = 1;
        p[i] = x;
        go(i + 1);
        used[x] = 0;
      }
    };
    go(0);
    return out;
  }

  DualGraph g_;
  Lattice lat_;
  RadicalSplit split_;
  Signature sig_;
  std::vector<RatMatrix> saturations_;  // inverses of overlattice bases, quotient coordinates
  bool saturations_known_ = true;
  bool has_unimodular_ = false;
  std::vector<GraphFiber> fibers_;
  mutable std::optional<std::vector<std::vector<std::size_t>>> autos_;
};

inline bool span_is_E10(const DualGraph& g) { return GraphAnalysis(g).span_is_E10(); }
inline std::vector<GraphFiber> enumerate_fibers(const DualGraph& g) { return GraphAnalysis(g).fibers(); }
inline FibrationProfile fibration_profile(const DualGraph& g, const GraphFiber& f) { return GraphAnalysis(g).profile(f); }
inline NonextremalResult unique_nonextremal(const DualGraph& g) { return GraphAnalysis(g).unique_nonextremal(); }
inline std::vector<Violation> contradiction_scan(const DualGraph& g, const GraphFiber& f0, unsigned f0_scale = 0) {
  return GraphAnalysis(g).scan(f0, f0_scale).violations;
}

// ------------------------------------------------------------------ catalog

enum class CatalogContext { Defining, MainProof, LemmaProof, ExtraSpecial };

inline std::string to_string(CatalogContext c) {
  switch (c) {
    case CatalogContext::Defining: return "defining";
    case CatalogContext::MainProof: return "main-proof";
    case CatalogContext::LemmaProof: return "lemma-proof";
    case CatalogContext::ExtraSpecial: return "extra-special";
  }
  return "?";
}

struct CatalogEntry {
  std::string name;
  DualGraph graph;
  CatalogContext context = CatalogContext::MainProof;
  std::vector<std::string> f0_support;  // empty: no distinguished fibration
  unsigned f0_scale = 1;                // F0 = class / f0_scale
  std::string refines_to;               // graph forced by a geometric argument
  std::string expected;                 // outcome stated in the paper, e.g. "contradiction:I6"
  std::map<std::string, int> conductrix;
  std::string caption;
};

namespace detail {
using E = DualGraph::Edge;
inline std::vector<E> chain(std::initializer_list<const char*> vs) {
  std::vector<E> out;
  const char* prev = nullptr;
  for (auto v : vs) {
    if (prev) out.emplace_back(prev, v, 1);
    prev = v;
  }
  return out;
}
inline std::vector<E> cat(std::initializer_list<std::vector<E>> parts) {
  std::vector<E> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}
inline std::vector<std::string> names(std::initializer_list<const char*> v) { return {v.begin(), v.end()}; }
inline const std::vector<std::string>& r18() {
  static const std::vector<std::string> v = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};
  return v;
}
inline std::vector<std::string> plus(std::vector<std::string> a, std::initializer_list<const char*> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
inline std::vector<std::string> plus(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
}  // namespace detail

inline const std::vector<CatalogEntry>& builtin_catalog() {
  using namespace detail;
  static const std::vector<CatalogEntry> cat_ = [] {
    std::vector<CatalogEntry> c;
    auto cyc = chain({"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R1"});
    auto d6core = chain({"R2", "R3", "R4", "R6", "R7", "R8", "R9"});
    auto e6core = chain({"R1", "R2", "R3", "R4", "R5", "R6"});
    auto l43core = cat({chain({"R1", "R8", "R7"}), chain({"R3", "R4", "R5"}), {E{"R9", "R8", 1}, E{"R9", "R4", 1}}});
    auto l43names = names({"R1", "R3", "R4", "R5", "R7", "R8", "R9"});
    auto G0_d6 = names({"R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"});
    auto G0_e6 = names({"R1", "R2", "R3", "R4", "R5", "R7", "R8"});
    auto G0_l43 = names({"R1", "R7", "R8", "R"});

    c.push_back({"A7~", DualGraph::from_edges(plus(r18(), {"E1", "E2"}), cat({cyc, {E{"R1", "E1", 1}, E{"R5", "E2", 1}}})),
                 CatalogContext::Defining, r18(), 1, "", "survivor", {}, "type A7~"});
    c.push_back({"E6~",
                 DualGraph::from_edges(names({"R0", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"}),
                                       cat({chain({"R0", "R1", "R2", "R3", "R4", "R5", "R6"}), chain({"R3", "R7", "R8", "R9"})})),
                 CatalogContext::Defining, G0_e6, 1, "", "survivor", {}, "type E6~"});
    c.push_back({"D6+A1~",
                 DualGraph::from_edges(plus(plus(r18(), {"R9"}), {"RX", "RXX"}),
                                       cat({d6core, {E{"R5", "R6", 1}, E{"R1", "R8", 1}, E{"RX", "R3", 1}, E{"R9", "RXX", 2}}})),
                 CatalogContext::Defining, G0_d6, 2, "", "survivor",
                 {{"R3", 1}, {"R4", 1}, {"R5", 1}, {"R6", 2}, {"R7", 1}, {"R8", 1}}, "type D6~+A1~"});
    c.push_back({"sec4-graph2",
                 DualGraph::from_edges(plus(r18(), {"E1", "E2"}),
                                       cat({cyc, {E{"R1", "E1", 1}, E{"R3", "E1", 1}, E{"R5", "E2", 1}, E{"R3", "E2", 1}}})),
                 CatalogContext::MainProof, r18(), 2, "", "contradiction:I4",
                 {}, "I8 simple: E1 meets R1,R3 and E2 meets R3,R5"});
    c.push_back({"sec4-graph3",
                 DualGraph::from_edges(plus(plus(r18(), {"R9"}), {"RX"}),
                                       cat({d6core, {E{"R5", "R6", 1}, E{"R1", "R8", 1}, E{"RX", "R3", 1}}})),
                 CatalogContext::MainProof, G0_d6, 2, "", "reduces:D6+A1~", {}, "III* simple with a further curve at R3"});
    c.push_back({"sec4-IIIs-double",
                 DualGraph::from_edges(plus(r18(), {"R9"}), cat({d6core, {E{"R5", "R6", 1}, E{"R1", "R8", 1}}})),
                 CatalogContext::MainProof, G0_d6, 2, "", "reduces:D6+A1~", {}, "III* simple, Gamma = D6+A1"});
    c.push_back({"sec4-IIIs-1", DualGraph::from_edges(plus(r18(), {"R9"}), cat({cyc, {E{"R1", "R9", 1}}})),
                 CatalogContext::MainProof, r18(), 1, "", "extends:A7~", {}, "Gamma = A7, G0 of type I8 half"});
    c.push_back({"sec4-IIIs-2",
                 DualGraph::from_edges(plus(r18(), {"R9"}), cat({cyc, {E{"R1", "R9", 1}, E{"R9", "R5", 1}}})),
                 CatalogContext::MainProof, r18(), 2, "", "contradiction:I6", {}, "Gamma = A7, G0 of type I8 simple"});
    c.push_back({"sec4-IIIs-3", DualGraph::from_edges(plus(r18(), {"R9"}), cat({e6core, chain({"R3", "R7", "R8", "R9"})})),
                 CatalogContext::MainProof, G0_e6, 1, "", "extends:E6~", {}, "Gamma = E6, G0 of type IV* half"});
    c.push_back({"sec4-IIIs-4",
                 DualGraph::from_edges(plus(r18(), {"R9"}), cat({e6core, chain({"R3", "R7", "R8", "R9"}),
                                                                   {E{"R1", "R9", 1}, E{"R1", "R6", 1}}})),
                 CatalogContext::MainProof, G0_e6, 2, "", "contradiction:I6", {}, "Gamma = E6, G0 of type IV* simple"});
    c.push_back({"lem43-d1",
                 DualGraph::from_edges(plus(l43names, {"RX", "RXX"}),
                                       cat({l43core, {E{"R1", "RX", 1}, E{"RX", "R3", 1}, E{"R7", "RXX", 1}, E{"RXX", "R5", 1}}})),
                 CatalogContext::LemmaProof, names({"R1", "R3", "R4", "R5", "R7", "R8", "RX", "RXX"}), 2, "",
                 "contradiction:I6", {}, "first diagram"});
    c.push_back({"lem43-d2",
                 DualGraph::from_edges(plus(l43names, {"R"}), cat({l43core, {E{"R1", "R", 1}, E{"R", "R7", 1}}})),
                 CatalogContext::LemmaProof, G0_l43, 1, "lem43-d2r", "refines:lem43-d2r", {}, "second diagram"});
    c.push_back({"lem43-d2r",
                 DualGraph::from_edges(plus(plus(names({"A", "B"}), l43names), {"R"}),
                                       cat({l43core, {E{"R1", "R", 1}, E{"R", "R7", 1}, E{"A", "R", 1}, E{"B", "R", 1}}})),
                 CatalogContext::LemmaProof, G0_l43, 1, "", "contradiction:I0*", {},
                 "second diagram with the curves A, B meeting R"});
    c.push_back({"lem43-d3",
                 DualGraph::from_edges(plus(l43names, {"R"}),
                                       cat({l43core, {E{"R1", "R", 1}, E{"R", "R7", 1}, E{"R", "R9", 1}}})),
                 CatalogContext::LemmaProof, G0_l43, 2, "", "contradiction:I4", {}, "third diagram"});
    c.push_back({"E8-extraspecial",
                 DualGraph::from_edges(names({"V0", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9"}),
                                       cat({chain({"V0", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"}), {E{"V9", "V2", 1}}})),
                 CatalogContext::ExtraSpecial, {}, 1, "", "none", {}, "T(2,3,7): every fibration extremal"});
    return c;
  }();
  return cat_;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (auto& e : builtin_catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog graph named '" + name + "'");
}

// -------------------------------------------------------------- classify

enum class Outcome { Survivor, Contradiction, ReducesTo, Refined, ExtendsTo, NoNonextremal, Open };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Survivor: return "survivor";
    case Outcome::Contradiction: return "contradiction";
    case Outcome::ReducesTo: return "reduces";
    case Outcome::Refined: return "refines";
    case Outcome::ExtendsTo: return "extends";
    case Outcome::NoNonextremal: return "none";
    case Outcome::Open: return "open";
  }
  return "?";
}

struct ClassifyRecord {
  std::string name;
  Outcome outcome = Outcome::Open;
  std::string detail;  // violating fiber types, or target graph
  bool span_E10 = false;
  std::vector<Violation> violations;
  std::optional<GraphFiber> nonextremal;
  std::vector<std::string> fiber_labels;  // violating F2 types, sorted unique
  std::string expected;

  std::string summary() const { return detail.empty() ? to_string(outcome) : to_string(outcome) + ":" + detail; }
  // expected "contradiction:T" passes when T is among the violating types
  bool matches_expected() const {
    if (expected == summary()) return true;
    if (outcome != Outcome::Contradiction) return false;
    for (auto& l : fiber_labels)
      if (expected == "contradiction:" + l) return true;
    return false;
  }
};

inline ClassifyRecord classify_entry(const CatalogEntry& e) {
  GraphAnalysis a(e.graph);
  ClassifyRecord r;
  r.name = e.name;
  r.expected = e.expected;
  r.span_E10 = a.span_is_E10();
  std::optional<GraphFiber> f0;
  if (!e.f0_support.empty()) {
    f0 = a.find_fiber(e.f0_support);
    if (!f0) throw std::logic_error(e.name + ": distinguished fiber is not an affine subgraph");
  }
  ScanResult scan;
  if (f0) scan = a.scan(*f0, e.f0_scale);
  r.violations = scan.violations;
  for (auto& v : scan.violations)
    for (auto& k : v.f2.kodaira_candidates) r.fiber_labels.push_back(k.label());
  std::sort(r.fiber_labels.begin(), r.fiber_labels.end());
  r.fiber_labels.erase(std::unique(r.fiber_labels.begin(), r.fiber_labels.end()), r.fiber_labels.end());
  if (r.span_E10) {
    auto ne = a.unique_nonextremal();
    if (ne.unique) r.nonextremal = ne.unique;
  }

  if (!r.violations.empty()) {
    r.outcome = Outcome::Contradiction;
    for (auto& l : r.fiber_labels) r.detail += (r.detail.empty() ? "" : ",") + l;
    return r;
  }
  // an I2* half-fiber meeting F0 once forces the D6+A1~ configuration
  if (e.context == CatalogContext::MainProof && !scan.i2star_hits.empty()) {
    r.outcome = Outcome::ReducesTo;
    r.detail = "D6+A1~";
    return r;
  }
  if (f0 && r.span_E10 && r.nonextremal && a.orbit_key(r.nonextremal->iso_class) == a.orbit_key(f0->iso_class)) {
    r.outcome = Outcome::Survivor;
    return r;
  }
  if (!f0 && r.span_E10 && !r.nonextremal && e.context == CatalogContext::ExtraSpecial) {
    r.outcome = Outcome::NoNonextremal;
    return r;
  }
  if (!e.refines_to.empty()) {
    r.outcome = Outcome::Refined;
    r.detail = e.refines_to;
    return r;
  }
  for (auto& s : builtin_catalog()) {
    if (s.context != CatalogContext::Defining) continue;
    if (embeds_induced(e.graph.matrix(), s.graph.matrix())) {
      r.outcome = Outcome::ExtendsTo;
      r.detail = s.name;
      return r;
    }
  }
  return r;
}

// ------------------------------------------------------------------- DOT

inline std::string to_dot(const DualGraph& g, const GraphFiber* selected = nullptr, const std::string& name = "G") {
  std::vector<char> in(g.size(), 0);
  if (selected)
    for (auto v : selected->support) in[v] = 1;
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  \"" << g.label(i) << "\"";
    if (in[i]) os << " [style=dashed]";
    os << ";\n";
  }
  for (auto& [a, b, w] : g.edges()) {
    os << "  \"" << a << "\" -- \"" << b << "\"";
    std::vector<std::string> attrs;
    if (w != 1) attrs.push_back("label=\"" + std::to_string(w) + "\"");
    if (w == 2) attrs.push_back("color=\"black:black\"");
    if (in[g.index(a)] && in[g.index(b)]) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace zeroent
