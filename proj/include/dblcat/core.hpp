#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblcat {

using Idx = std::int32_t;
inline constexpr Idx kNone = -1;

enum class Sort : std::uint8_t { Object, HCell, VCell, Square };

inline const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Object: return "object";
    case Sort::HCell: return "hcell";
    case Sort::VCell: return "vcell";
    case Sort::Square: return "square";
  }
  return "?";
}

struct CellId {
  Sort sort;
  Idx index;
};

// ---------------------------------------------------------------------------
// Errors. Law violations are reported through ValidationReport; everything
// that makes a question ill-posed (bad sizes, mismatched frames, missing
// components, unmet preconditions) throws.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data: wrong table dimensions, dangling indices, missing components.
struct StructuralError : Error {
  using Error::Error;
};

// Two cells that were asked to compose do not share a boundary.
struct FrameError : StructuralError {
  using StructuralError::StructuralError;
};

// An operation's stated precondition does not hold (missing braiding, a
// non-invertible cell where an inverse is required, wrong orientation...).
struct PreconditionError : Error {
  using Error::Error;
};

// A companion choice does not cover a component that must be lifted.
struct CoverageError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct IoError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Validation reports

struct Violation {
  std::string law;      // stable law name, e.g. "interchange"
  std::string witness;  // offending cell tuple, rendered
  std::string lhs, rhs; // the two unequal composites
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // e.g. strict-shortcut annotations
  int max_per_law = 10;

  std::map<std::string, int> law_counts;

  void add(const std::string& law, const std::string& witness,
           const std::string& lhs, const std::string& rhs) {
    pass = false;
    int& n = law_counts[law];
    ++n;
    if (n <= max_per_law) violations.push_back({law, witness, lhs, rhs});
  }

  void note(const std::string& s) { notes.push_back(s); }

  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& v : other.violations)
      add(prefix.empty() ? v.law : prefix + "/" + v.law, v.witness, v.lhs, v.rhs);
    for (const auto& n : other.notes)
      note(prefix.empty() ? n : prefix + "/" + n);
  }

  bool has_law(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law || v.law.find(law) != std::string::npos) return true;
    return false;
  }

  std::string summary() const {
    std::ostringstream os;
    os << (pass ? "pass" : "fail");
    if (!pass) {
      os << " (" << violations.size() << " violation"
         << (violations.size() == 1 ? "" : "s") << "; first: "
         << violations.front().law << " @ " << violations.front().witness << ")";
    }
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// SquareFrame
//
//        A --top--> B
//        |          |
//      left       right
//        v          v
//        C -bottom-> D
//
// top/bottom index HCells, left/right index VCells.

struct SquareFrame {
  Idx top = kNone, bottom = kNone, left = kNone, right = kNone;
  friend auto operator<=>(const SquareFrame&, const SquareFrame&) = default;
};

// ---------------------------------------------------------------------------
// A finite double category given by explicit tables. The vertical direction
// is strict; horizontal composition may carry a pseudo overlay (associator
// and unitor squares), which built-in examples leave empty.

class DoubleCategory {
 public:
  std::string name;  // optional, for reports

  Idx n_objects = 0;
  std::vector<Idx> h_src, h_tgt;      // per HCell
  std::vector<Idx> v_src, v_tgt;      // per VCell
  std::vector<SquareFrame> sq;        // per Square

  std::vector<Idx> id_h;              // per object
  std::vector<Idx> id_v;              // per object
  std::vector<Idx> id_sq_h;           // per HCell f: Id_f
  std::vector<Idx> id_sq_v;           // per VCell u: Id^u

  // Flat composition tables; kNone marks non-composable pairs.
  std::vector<Idx> hcomp_h_tab;       // nh*nh, [f][g] with tgt f = src g
  std::vector<Idx> vcomp_v_tab;       // nv*nv
  std::vector<Idx> hcomp_sq_tab;      // ns*ns
  std::vector<Idx> vcomp_sq_tab;      // ns*ns

  // Pseudo overlay. Empty containers mean the strict laws are required.
  // assoc[(f,g,h)] : (fg)h => f(gh), horizontally globular, vertically
  // invertible with the stored inverse.
  std::map<std::array<Idx, 3>, Idx> assoc, assoc_inv;
  std::vector<Idx> lunit, lunit_inv;  // per HCell f: 1_A f => f  (empty: strict)
  std::vector<Idx> runit, runit_inv;  // per HCell f: f 1_B => f

  Idx nh() const { return static_cast<Idx>(h_src.size()); }
  Idx nv() const { return static_cast<Idx>(v_src.size()); }
  Idx ns() const { return static_cast<Idx>(sq.size()); }

  bool has_pseudo_overlay() const {
    return !assoc.empty() || !lunit.empty() || !runit.empty();
  }

  // -- bounds ---------------------------------------------------------------
  bool valid_obj(Idx a) const { return a >= 0 && a < n_objects; }
  bool valid_h(Idx f) const { return f >= 0 && f < nh(); }
  bool valid_v(Idx u) const { return u >= 0 && u < nv(); }
  bool valid_sq(Idx a) const { return a >= 0 && a < ns(); }

  void require_obj(Idx a) const {
    if (!valid_obj(a)) throw StructuralError("object index out of range: " + std::to_string(a));
  }
  void require_h(Idx f) const {
    if (!valid_h(f)) throw StructuralError("hcell index out of range: " + std::to_string(f));
  }
  void require_v(Idx u) const {
    if (!valid_v(u)) throw StructuralError("vcell index out of range: " + std::to_string(u));
  }
  void require_sq(Idx a) const {
    if (!valid_sq(a)) throw StructuralError("square index out of range: " + std::to_string(a));
  }

  // -- raw table access -----------------------------------------------------
  Idx hcomp_h_raw(Idx f, Idx g) const { return hcomp_h_tab[static_cast<size_t>(f) * nh() + g]; }
  Idx vcomp_v_raw(Idx u, Idx w) const { return vcomp_v_tab[static_cast<size_t>(u) * nv() + w]; }
  Idx hcomp_sq_raw(Idx a, Idx b) const {
    if (hcomp_sq_tab.empty())
      throw StructuralError(name + ": square composition tables not materialized");
    return hcomp_sq_tab[static_cast<size_t>(a) * ns() + b];
  }
  Idx vcomp_sq_raw(Idx a, Idx b) const {
    if (vcomp_sq_tab.empty())
      throw StructuralError(name + ": square composition tables not materialized");
    return vcomp_sq_tab[static_cast<size_t>(a) * ns() + b];
  }

  void set_hcomp_h(Idx f, Idx g, Idx r) { hcomp_h_tab[static_cast<size_t>(f) * nh() + g] = r; }
  void set_vcomp_v(Idx u, Idx w, Idx r) { vcomp_v_tab[static_cast<size_t>(u) * nv() + w] = r; }
  void set_hcomp_sq(Idx a, Idx b, Idx r) { hcomp_sq_tab[static_cast<size_t>(a) * ns() + b] = r; }
  void set_vcomp_sq(Idx a, Idx b, Idx r) { vcomp_sq_tab[static_cast<size_t>(a) * ns() + b] = r; }

  // -- checked composition --------------------------------------------------
  // Diagrammatic order: hcomp_h(f, g) is "first f, then g".
  Idx hcomp_h(Idx f, Idx g) const {
    require_h(f); require_h(g);
    if (h_tgt[f] != h_src[g])
      throw FrameError("hcomp_h: tgt(" + std::to_string(f) + ") != src(" + std::to_string(g) + ")");
    Idx r = hcomp_h_raw(f, g);
    if (r == kNone) throw StructuralError("hcomp_h: table entry missing");
    return r;
  }

  Idx vcomp_v(Idx u, Idx w) const {
    require_v(u); require_v(w);
    if (v_tgt[u] != v_src[w])
      throw FrameError("vcomp_v: tgt(" + std::to_string(u) + ") != src(" + std::to_string(w) + ")");
    Idx r = vcomp_v_raw(u, w);
    if (r == kNone) throw StructuralError("vcomp_v: table entry missing");
    return r;
  }

  // [a|b]: right vcell of `a` must equal left vcell of `b`.
  Idx hcomp_sq(Idx a, Idx b) const {
    require_sq(a); require_sq(b);
    if (sq[a].right != sq[b].left)
      throw FrameError("hcomp_sq: right boundary of square " + std::to_string(a) +
                       " (vcell " + std::to_string(sq[a].right) + ") != left boundary of square " +
                       std::to_string(b) + " (vcell " + std::to_string(sq[b].left) + ")");
    Idx r = hcomp_sq_raw(a, b);
    if (r == kNone) throw StructuralError("hcomp_sq: table entry missing");
    return r;
  }

  // a/c: bottom hcell of `a` must equal top hcell of `c`.
  Idx vcomp_sq(Idx a, Idx c) const {
    require_sq(a); require_sq(c);
    if (sq[a].bottom != sq[c].top)
      throw FrameError("vcomp_sq: bottom boundary of square " + std::to_string(a) +
                       " (hcell " + std::to_string(sq[a].bottom) + ") != top boundary of square " +
                       std::to_string(c) + " (hcell " + std::to_string(sq[c].top) + ")");
    Idx r = vcomp_sq_raw(a, c);
    if (r == kNone) throw StructuralError("vcomp_sq: table entry missing");
    return r;
  }

  Idx hcomp_h_many(std::initializer_list<Idx> fs) const {
    Idx acc = kNone;
    for (Idx f : fs) acc = (acc == kNone) ? f : hcomp_h(acc, f);
    return acc;
  }
  Idx vcomp_v_many(std::initializer_list<Idx> us) const {
    Idx acc = kNone;
    for (Idx u : us) acc = (acc == kNone) ? u : vcomp_v(acc, u);
    return acc;
  }
  Idx hcomp_sq_many(std::initializer_list<Idx> as) const {
    Idx acc = kNone;
    for (Idx a : as) acc = (acc == kNone) ? a : hcomp_sq(acc, a);
    return acc;
  }
  Idx vcomp_sq_many(std::initializer_list<Idx> as) const {
    Idx acc = kNone;
    for (Idx a : as) acc = (acc == kNone) ? a : vcomp_sq(acc, a);
    return acc;
  }

  // -- globularity ----------------------------------------------------------
  bool is_identity_h(Idx f) const { return valid_h(f) && id_h[h_src[f]] == f && h_src[f] == h_tgt[f]; }
  bool is_identity_v(Idx u) const { return valid_v(u) && id_v[v_src[u]] == u && v_src[u] == v_tgt[u]; }

  bool is_horizontally_globular(Idx a) const {
    require_sq(a);
    return is_identity_v(sq[a].left) && is_identity_v(sq[a].right);
  }
  bool is_vertically_globular(Idx a) const {
    require_sq(a);
    return is_identity_h(sq[a].top) && is_identity_h(sq[a].bottom);
  }

  // -- corners --------------------------------------------------------------
  Idx sq_nw(Idx a) const { return h_src[sq[a].top]; }
  Idx sq_ne(Idx a) const { return h_tgt[sq[a].top]; }
  Idx sq_sw(Idx a) const { return h_src[sq[a].bottom]; }
  Idx sq_se(Idx a) const { return h_tgt[sq[a].bottom]; }

  // -- inverse searches (decidable at desk scale) ----------------------------
  // Two-sided inverse of an HCell in the horizontal 1-category.
  std::optional<Idx> h_inverse(Idx f) const {
    require_h(f);
    for (Idx g = 0; g < nh(); ++g) {
      if (h_src[g] != h_tgt[f] || h_tgt[g] != h_src[f]) continue;
      if (hcomp_h_raw(f, g) == id_h[h_src[f]] && hcomp_h_raw(g, f) == id_h[h_src[g]]) return g;
    }
    return std::nullopt;
  }

  std::optional<Idx> v_inverse(Idx u) const {
    require_v(u);
    for (Idx w = 0; w < nv(); ++w) {
      if (v_src[w] != v_tgt[u] || v_tgt[w] != v_src[u]) continue;
      if (vcomp_v_raw(u, w) == id_v[v_src[u]] && vcomp_v_raw(w, u) == id_v[v_src[w]]) return w;
    }
    return std::nullopt;
  }

  // Vertical inverse of a square: b with a/b = Id_{top(a)} and b/a = Id_{top(b)}.
  std::optional<Idx> sq_v_inverse(Idx a) const {
    require_sq(a);
    for (Idx b = 0; b < ns(); ++b) {
      if (sq[b].top != sq[a].bottom || sq[b].bottom != sq[a].top) continue;
      if (vcomp_sq_raw(a, b) == id_sq_h[sq[a].top] && vcomp_sq_raw(b, a) == id_sq_h[sq[b].top])
        return b;
    }
    return std::nullopt;
  }

  // Horizontal inverse of a square: b with [a|b] = Id^{left(a)} and [b|a] = Id^{left(b)}.
  std::optional<Idx> sq_h_inverse(Idx a) const {
    require_sq(a);
    for (Idx b = 0; b < ns(); ++b) {
      if (sq[b].left != sq[a].right || sq[b].right != sq[a].left) continue;
      if (hcomp_sq_raw(a, b) == id_sq_v[sq[a].left] && hcomp_sq_raw(b, a) == id_sq_v[sq[b].left])
        return b;
    }
    return std::nullopt;
  }

  bool is_identity_sq_v(Idx a) const {  // a == Id_f for some f
    require_sq(a);
    return id_sq_h[sq[a].top] == a;
  }
  bool is_identity_sq_h(Idx a) const {  // a == Id^u for some u
    require_sq(a);
    return id_sq_v[sq[a].left] == a;
  }

  // -- rendering -------------------------------------------------------------
  std::string show(Sort s, Idx i) const {
    std::ostringstream os;
    os << sort_name(s) << "#" << i;
    return os.str();
  }
  std::string show_frame(Idx a) const {
    const auto& f = sq[a];
    std::ostringstream os;
    os << "square#" << a << "(top=" << f.top << ",bot=" << f.bottom
       << ",left=" << f.left << ",right=" << f.right << ")";
    return os.str();
  }
};

// Builder-side helper: allocate fresh tables of the right size filled with kNone.
inline void allocate_tables(DoubleCategory& d) {
  d.hcomp_h_tab.assign(static_cast<size_t>(d.nh()) * d.nh(), kNone);
  d.vcomp_v_tab.assign(static_cast<size_t>(d.nv()) * d.nv(), kNone);
  d.hcomp_sq_tab.assign(static_cast<size_t>(d.ns()) * d.ns(), kNone);
  d.vcomp_sq_tab.assign(static_cast<size_t>(d.ns()) * d.ns(), kNone);
}

}  // namespace dblcat
