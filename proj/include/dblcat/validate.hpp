#pragma once

#include "dblcat/core.hpp"

namespace dblcat {

namespace detail {

// Structural pass: table dimensions and index ranges. Throws StructuralError,
// since law checking is meaningless on malformed data.
inline void check_structure(const DoubleCategory& d) {
  auto bad = [&](const std::string& what) { throw StructuralError(d.name + ": " + what); };

  if (d.n_objects < 0) bad("negative object count");
  if (d.h_src.size() != d.h_tgt.size()) bad("hcell src/tgt tables differ in size");
  if (d.v_src.size() != d.v_tgt.size()) bad("vcell src/tgt tables differ in size");
  if (d.id_h.size() != static_cast<size_t>(d.n_objects)) bad("id_h table wrongly sized");
  if (d.id_v.size() != static_cast<size_t>(d.n_objects)) bad("id_v table wrongly sized");
  if (d.id_sq_h.size() != static_cast<size_t>(d.nh())) bad("id_sq_h table wrongly sized");
  if (d.id_sq_v.size() != static_cast<size_t>(d.nv())) bad("id_sq_v table wrongly sized");
  if (d.hcomp_h_tab.size() != static_cast<size_t>(d.nh()) * d.nh()) bad("hcomp_h table wrongly sized");
  if (d.vcomp_v_tab.size() != static_cast<size_t>(d.nv()) * d.nv()) bad("vcomp_v table wrongly sized");
  if (d.hcomp_sq_tab.size() != static_cast<size_t>(d.ns()) * d.ns()) bad("hcomp_sq table wrongly sized");
  if (d.vcomp_sq_tab.size() != static_cast<size_t>(d.ns()) * d.ns()) bad("vcomp_sq table wrongly sized");

  for (Idx f = 0; f < d.nh(); ++f)
    if (!d.valid_obj(d.h_src[f]) || !d.valid_obj(d.h_tgt[f])) bad("hcell with dangling endpoint");
  for (Idx u = 0; u < d.nv(); ++u)
    if (!d.valid_obj(d.v_src[u]) || !d.valid_obj(d.v_tgt[u])) bad("vcell with dangling endpoint");
  for (Idx a = 0; a < d.ns(); ++a) {
    const auto& fr = d.sq[a];
    if (!d.valid_h(fr.top) || !d.valid_h(fr.bottom) || !d.valid_v(fr.left) || !d.valid_v(fr.right))
      bad("square with dangling boundary");
  }
  for (Idx a = 0; a < d.n_objects; ++a) {
    if (!d.valid_h(d.id_h[a])) bad("id_h entry out of range");
    if (!d.valid_v(d.id_v[a])) bad("id_v entry out of range");
  }
  for (Idx f = 0; f < d.nh(); ++f)
    if (!d.valid_sq(d.id_sq_h[f])) bad("id_sq_h entry out of range");
  for (Idx u = 0; u < d.nv(); ++u)
    if (!d.valid_sq(d.id_sq_v[u])) bad("id_sq_v entry out of range");
  for (Idx e : d.hcomp_h_tab)
    if (e != kNone && !d.valid_h(e)) bad("hcomp_h entry out of range");
  for (Idx e : d.vcomp_v_tab)
    if (e != kNone && !d.valid_v(e)) bad("vcomp_v entry out of range");
  for (Idx e : d.hcomp_sq_tab)
    if (e != kNone && !d.valid_sq(e)) bad("hcomp_sq entry out of range");
  for (Idx e : d.vcomp_sq_tab)
    if (e != kNone && !d.valid_sq(e)) bad("vcomp_sq entry out of range");

  if (!d.lunit.empty() && d.lunit.size() != static_cast<size_t>(d.nh())) bad("lunit wrongly sized");
  if (!d.runit.empty() && d.runit.size() != static_cast<size_t>(d.nh())) bad("runit wrongly sized");
  for (const auto& [k, v] : d.assoc) {
    if (!d.valid_h(k[0]) || !d.valid_h(k[1]) || !d.valid_h(k[2]) || !d.valid_sq(v))
      bad("assoc entry out of range");
  }
}

}  // namespace detail

// Exhaustive validation of every double-category law over all composable
// tuples. Violations are reported in deterministic (index) order.
inline ValidationReport validate_double_category(const DoubleCategory& d, int max_per_law = 10) {
  detail::check_structure(d);

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  const bool pseudo = d.has_pseudo_overlay();

  auto sh = [&](Idx i) { return std::to_string(i); };

  // --- identity frames ---
  for (Idx a = 0; a < d.n_objects; ++a) {
    Idx f = d.id_h[a];
    if (d.h_src[f] != a || d.h_tgt[f] != a)
      rep.add("identity-frame", "idH(" + sh(a) + ")", d.show(Sort::HCell, f), "endo on " + sh(a));
    Idx u = d.id_v[a];
    if (d.v_src[u] != a || d.v_tgt[u] != a)
      rep.add("identity-frame", "idV(" + sh(a) + ")", d.show(Sort::VCell, u), "endo on " + sh(a));
  }
  for (Idx f = 0; f < d.nh(); ++f) {
    Idx a = d.id_sq_h[f];
    SquareFrame want{f, f, d.id_v[d.h_src[f]], d.id_v[d.h_tgt[f]]};
    if (!(d.sq[a] == want))
      rep.add("identity-frame", "Id_" + sh(f), d.show_frame(a), "vertical identity frame on hcell " + sh(f));
  }
  for (Idx u = 0; u < d.nv(); ++u) {
    Idx a = d.id_sq_v[u];
    SquareFrame want{d.id_h[d.v_src[u]], d.id_h[d.v_tgt[u]], u, u};
    if (!(d.sq[a] == want))
      rep.add("identity-frame", "Id^" + sh(u), d.show_frame(a), "horizontal identity frame on vcell " + sh(u));
  }
  for (Idx a = 0; a < d.n_objects; ++a) {
    if (d.id_sq_h[d.id_h[a]] != d.id_sq_v[d.id_v[a]])
      rep.add("identity-coincidence", "object " + sh(a),
              sh(d.id_sq_h[d.id_h[a]]), sh(d.id_sq_v[d.id_v[a]]));
  }

  // --- square frames: corners must match ---
  for (Idx a = 0; a < d.ns(); ++a) {
    const auto& fr = d.sq[a];
    bool ok = d.h_src[fr.top] == d.v_src[fr.left] && d.h_tgt[fr.top] == d.v_src[fr.right] &&
              d.v_tgt[fr.left] == d.h_src[fr.bottom] && d.v_tgt[fr.right] == d.h_tgt[fr.bottom];
    if (!ok) rep.add("frame-corners", d.show_frame(a), "", "");
  }

  // --- horizontal 1-category of hcells ---
  for (Idx f = 0; f < d.nh(); ++f)
    for (Idx g = 0; g < d.nh(); ++g) {
      Idx r = d.hcomp_h_raw(f, g);
      bool composable = d.h_tgt[f] == d.h_src[g];
      if (composable && r == kNone)
        rep.add("h-composition-total", "(" + sh(f) + "," + sh(g) + ")", "undefined", "hcell");
      if (!composable && r != kNone)
        rep.add("h-composition-spurious", "(" + sh(f) + "," + sh(g) + ")", sh(r), "none");
      if (composable && r != kNone && (d.h_src[r] != d.h_src[f] || d.h_tgt[r] != d.h_tgt[g]))
        rep.add("h-composition-frame", "(" + sh(f) + "," + sh(g) + ")", d.show(Sort::HCell, r), "");
    }
  if (!pseudo) {
    for (Idx f = 0; f < d.nh(); ++f) {
      Idx l = d.hcomp_h_raw(d.id_h[d.h_src[f]], f);
      if (l != f) rep.add("h-left-unit", "hcell " + sh(f), sh(l), sh(f));
      Idx r = d.hcomp_h_raw(f, d.id_h[d.h_tgt[f]]);
      if (r != f) rep.add("h-right-unit", "hcell " + sh(f), sh(r), sh(f));
    }
    for (Idx f = 0; f < d.nh(); ++f)
      for (Idx g = 0; g < d.nh(); ++g) {
        if (d.h_tgt[f] != d.h_src[g]) continue;
        for (Idx h = 0; h < d.nh(); ++h) {
          if (d.h_tgt[g] != d.h_src[h]) continue;
          Idx l = d.hcomp_h_raw(d.hcomp_h_raw(f, g), h);
          Idx r = d.hcomp_h_raw(f, d.hcomp_h_raw(g, h));
          if (l != r)
            rep.add("h-associativity", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", sh(l), sh(r));
        }
      }
  }

  // --- vertical 1-category of vcells (always strict) ---
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w) {
      Idx r = d.vcomp_v_raw(u, w);
      bool composable = d.v_tgt[u] == d.v_src[w];
      if (composable && r == kNone)
        rep.add("v-composition-total", "(" + sh(u) + "," + sh(w) + ")", "undefined", "vcell");
      if (!composable && r != kNone)
        rep.add("v-composition-spurious", "(" + sh(u) + "," + sh(w) + ")", sh(r), "none");
      if (composable && r != kNone && (d.v_src[r] != d.v_src[u] || d.v_tgt[r] != d.v_tgt[w]))
        rep.add("v-composition-frame", "(" + sh(u) + "," + sh(w) + ")", d.show(Sort::VCell, r), "");
    }
  for (Idx u = 0; u < d.nv(); ++u) {
    Idx l = d.vcomp_v_raw(d.id_v[d.v_src[u]], u);
    if (l != u) rep.add("v-left-unit", "vcell " + sh(u), sh(l), sh(u));
    Idx r = d.vcomp_v_raw(u, d.id_v[d.v_tgt[u]]);
    if (r != u) rep.add("v-right-unit", "vcell " + sh(u), sh(r), sh(u));
  }
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w) {
      if (d.v_tgt[u] != d.v_src[w]) continue;
      for (Idx x = 0; x < d.nv(); ++x) {
        if (d.v_tgt[w] != d.v_src[x]) continue;
        Idx l = d.vcomp_v_raw(d.vcomp_v_raw(u, w), x);
        Idx r = d.vcomp_v_raw(u, d.vcomp_v_raw(w, x));
        if (l != r)
          rep.add("v-associativity", "(" + sh(u) + "," + sh(w) + "," + sh(x) + ")", sh(l), sh(r));
      }
    }

  // --- square compositions: totality and frame functoriality ---
  for (Idx a = 0; a < d.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      bool hc = d.sq[a].right == d.sq[b].left;
      Idx r = d.hcomp_sq_raw(a, b);
      if (hc && r == kNone)
        rep.add("sq-h-composition-total", "(" + sh(a) + "," + sh(b) + ")", "undefined", "");
      if (!hc && r != kNone)
        rep.add("sq-h-composition-spurious", "(" + sh(a) + "," + sh(b) + ")", sh(r), "none");
      if (hc && r != kNone) {
        SquareFrame want{d.hcomp_h_raw(d.sq[a].top, d.sq[b].top),
                         d.hcomp_h_raw(d.sq[a].bottom, d.sq[b].bottom),
                         d.sq[a].left, d.sq[b].right};
        if (!(d.sq[r] == want))
          rep.add("sq-h-composition-frame", "(" + sh(a) + "," + sh(b) + ")", d.show_frame(r), "");
      }

      bool vc = d.sq[a].bottom == d.sq[b].top;
      Idx s = d.vcomp_sq_raw(a, b);
      if (vc && s == kNone)
        rep.add("sq-v-composition-total", "(" + sh(a) + "," + sh(b) + ")", "undefined", "");
      if (!vc && s != kNone)
        rep.add("sq-v-composition-spurious", "(" + sh(a) + "," + sh(b) + ")", sh(s), "none");
      if (vc && s != kNone) {
        SquareFrame want{d.sq[a].top, d.sq[b].bottom,
                         d.vcomp_v_raw(d.sq[a].left, d.sq[b].left),
                         d.vcomp_v_raw(d.sq[a].right, d.sq[b].right)};
        if (!(d.sq[s] == want))
          rep.add("sq-v-composition-frame", "(" + sh(a) + "," + sh(b) + ")", d.show_frame(s), "");
      }
    }

  // --- unit laws for squares ---
  for (Idx a = 0; a < d.ns(); ++a) {
    Idx t = d.vcomp_sq_raw(d.id_sq_h[d.sq[a].top], a);
    if (t != a) rep.add("sq-v-unit", "square " + sh(a), sh(t), sh(a));
    Idx b = d.vcomp_sq_raw(a, d.id_sq_h[d.sq[a].bottom]);
    if (b != a) rep.add("sq-v-unit", "square " + sh(a), sh(b), sh(a));
    if (!pseudo) {
      Idx l = d.hcomp_sq_raw(d.id_sq_v[d.sq[a].left], a);
      if (l != a) rep.add("sq-h-unit", "square " + sh(a), sh(l), sh(a));
      Idx r = d.hcomp_sq_raw(a, d.id_sq_v[d.sq[a].right]);
      if (r != a) rep.add("sq-h-unit", "square " + sh(a), sh(r), sh(a));
    }
  }

  // --- identity functoriality ---
  for (Idx f = 0; f < d.nh(); ++f)
    for (Idx g = 0; g < d.nh(); ++g) {
      if (d.h_tgt[f] != d.h_src[g]) continue;
      Idx fg = d.hcomp_h_raw(f, g);
      if (fg == kNone) continue;
      Idx l = d.hcomp_sq_raw(d.id_sq_h[f], d.id_sq_h[g]);
      if (l != d.id_sq_h[fg])
        rep.add("id-h-functorial", "(" + sh(f) + "," + sh(g) + ")", sh(l), sh(d.id_sq_h[fg]));
    }
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w) {
      if (d.v_tgt[u] != d.v_src[w]) continue;
      Idx uw = d.vcomp_v_raw(u, w);
      if (uw == kNone) continue;
      Idx l = d.vcomp_sq_raw(d.id_sq_v[u], d.id_sq_v[w]);
      if (l != d.id_sq_v[uw])
        rep.add("id-v-functorial", "(" + sh(u) + "," + sh(w) + ")", sh(l), sh(d.id_sq_v[uw]));
    }

  // --- associativity of square compositions ---
  for (Idx a = 0; a < d.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      if (d.sq[a].bottom == d.sq[b].top) {
        for (Idx c = 0; c < d.ns(); ++c) {
          if (d.sq[b].bottom != d.sq[c].top) continue;
          Idx l = d.vcomp_sq_raw(d.vcomp_sq_raw(a, b), c);
          Idx r = d.vcomp_sq_raw(a, d.vcomp_sq_raw(b, c));
          if (l != r)
            rep.add("sq-v-associativity", "(" + sh(a) + "," + sh(b) + "," + sh(c) + ")", sh(l), sh(r));
        }
      }
      if (!pseudo && d.sq[a].right == d.sq[b].left) {
        for (Idx c = 0; c < d.ns(); ++c) {
          if (d.sq[b].right != d.sq[c].left) continue;
          Idx l = d.hcomp_sq_raw(d.hcomp_sq_raw(a, b), c);
          Idx r = d.hcomp_sq_raw(a, d.hcomp_sq_raw(b, c));
          if (l != r)
            rep.add("sq-h-associativity", "(" + sh(a) + "," + sh(b) + "," + sh(c) + ")", sh(l), sh(r));
        }
      }
    }

  // --- interchange ---
  for (Idx a = 0; a < d.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      if (d.sq[a].right != d.sq[b].left) continue;
      for (Idx c = 0; c < d.ns(); ++c) {
        if (d.sq[a].bottom != d.sq[c].top) continue;
        for (Idx e = 0; e < d.ns(); ++e) {
          if (d.sq[b].bottom != d.sq[e].top) continue;
          if (d.sq[c].right != d.sq[e].left) continue;
          Idx top = d.hcomp_sq_raw(a, b);
          Idx bot = d.hcomp_sq_raw(c, e);
          Idx lft = d.vcomp_sq_raw(a, c);
          Idx rgt = d.vcomp_sq_raw(b, e);
          if (top == kNone || bot == kNone || lft == kNone || rgt == kNone) continue;
          Idx l = d.vcomp_sq_raw(top, bot);
          Idx r = d.hcomp_sq_raw(lft, rgt);
          if (l != r)
            rep.add("interchange",
                    "(" + sh(a) + "," + sh(b) + "," + sh(c) + "," + sh(e) + ")", sh(l), sh(r));
        }
      }
    }

  // --- pseudo overlay ---
  if (pseudo) {
    auto assoc_at = [&](Idx f, Idx g, Idx h) -> Idx {
      auto it = d.assoc.find({f, g, h});
      if (it != d.assoc.end()) return it->second;
      // Missing entry means strict at this triple; the identity square stands in.
      Idx l = d.hcomp_h_raw(d.hcomp_h_raw(f, g), h);
      Idx r = d.hcomp_h_raw(f, d.hcomp_h_raw(g, h));
      if (l != r) {
        rep.add("assoc-missing", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", sh(l), sh(r));
        return kNone;
      }
      return d.id_sq_h[l];
    };
    auto lunit_at = [&](Idx f) -> Idx {
      if (!d.lunit.empty()) return d.lunit[f];
      Idx c = d.hcomp_h_raw(d.id_h[d.h_src[f]], f);
      if (c != f) { rep.add("lunit-missing", "hcell " + sh(f), sh(c), sh(f)); return kNone; }
      return d.id_sq_h[f];
    };
    auto runit_at = [&](Idx f) -> Idx {
      if (!d.runit.empty()) return d.runit[f];
      Idx c = d.hcomp_h_raw(f, d.id_h[d.h_tgt[f]]);
      if (c != f) { rep.add("runit-missing", "hcell " + sh(f), sh(c), sh(f)); return kNone; }
      return d.id_sq_h[f];
    };

    // frames + invertibility
    for (const auto& [k, v] : d.assoc) {
      auto [f, g, h] = k;
      if (d.h_tgt[f] != d.h_src[g] || d.h_tgt[g] != d.h_src[h]) {
        rep.add("assoc-frame", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", "non-composable triple", "");
        continue;
      }
      SquareFrame want{d.hcomp_h_raw(d.hcomp_h_raw(f, g), h),
                       d.hcomp_h_raw(f, d.hcomp_h_raw(g, h)),
                       d.id_v[d.h_src[f]], d.id_v[d.h_tgt[h]]};
      if (!(d.sq[v] == want)) {
        rep.add("assoc-frame", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", d.show_frame(v), "");
        continue;
      }
      auto inv = d.sq_v_inverse(v);
      if (!inv)
        rep.add("assoc-invertible", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", d.show_frame(v), "");
    }
    for (Idx f = 0; f < d.nh() && !d.lunit.empty(); ++f) {
      SquareFrame want{d.hcomp_h_raw(d.id_h[d.h_src[f]], f), f, d.id_v[d.h_src[f]], d.id_v[d.h_tgt[f]]};
      if (!(d.sq[d.lunit[f]] == want)) rep.add("lunit-frame", "hcell " + sh(f), d.show_frame(d.lunit[f]), "");
      else if (!d.sq_v_inverse(d.lunit[f])) rep.add("lunit-invertible", "hcell " + sh(f), "", "");
    }
    for (Idx f = 0; f < d.nh() && !d.runit.empty(); ++f) {
      SquareFrame want{d.hcomp_h_raw(f, d.id_h[d.h_tgt[f]]), f, d.id_v[d.h_src[f]], d.id_v[d.h_tgt[f]]};
      if (!(d.sq[d.runit[f]] == want)) rep.add("runit-frame", "hcell " + sh(f), d.show_frame(d.runit[f]), "");
      else if (!d.sq_v_inverse(d.runit[f])) rep.add("runit-invertible", "hcell " + sh(f), "", "");
    }

    // naturality of the associator against square triples
    for (Idx a = 0; a < d.ns(); ++a)
      for (Idx b = 0; b < d.ns(); ++b) {
        if (d.sq[a].right != d.sq[b].left) continue;
        for (Idx c = 0; c < d.ns(); ++c) {
          if (d.sq[b].right != d.sq[c].left) continue;
          Idx at = assoc_at(d.sq[a].top, d.sq[b].top, d.sq[c].top);
          Idx ab = assoc_at(d.sq[a].bottom, d.sq[b].bottom, d.sq[c].bottom);
          if (at == kNone || ab == kNone) continue;
          Idx lhs = d.vcomp_sq_raw(d.hcomp_sq_raw(d.hcomp_sq_raw(a, b), c), ab);
          Idx rhs = d.vcomp_sq_raw(at, d.hcomp_sq_raw(a, d.hcomp_sq_raw(b, c)));
          if (lhs != rhs)
            rep.add("assoc-natural", "(" + sh(a) + "," + sh(b) + "," + sh(c) + ")", sh(lhs), sh(rhs));
        }
      }
    // naturality of unitors
    for (Idx a = 0; a < d.ns(); ++a) {
      Idx lu_t = lunit_at(d.sq[a].top), lu_b = lunit_at(d.sq[a].bottom);
      if (lu_t != kNone && lu_b != kNone) {
        Idx lhs = d.vcomp_sq_raw(d.hcomp_sq_raw(d.id_sq_v[d.sq[a].left], a), lu_b);
        Idx rhs = d.vcomp_sq_raw(lu_t, a);
        if (lhs != rhs) rep.add("lunit-natural", "square " + sh(a), sh(lhs), sh(rhs));
      }
      Idx ru_t = runit_at(d.sq[a].top), ru_b = runit_at(d.sq[a].bottom);
      if (ru_t != kNone && ru_b != kNone) {
        Idx lhs = d.vcomp_sq_raw(d.hcomp_sq_raw(a, d.id_sq_v[d.sq[a].right]), ru_b);
        Idx rhs = d.vcomp_sq_raw(ru_t, a);
        if (lhs != rhs) rep.add("runit-natural", "square " + sh(a), sh(lhs), sh(rhs));
      }
    }

    // pentagon and triangle
    for (Idx f = 0; f < d.nh(); ++f)
      for (Idx g = 0; g < d.nh(); ++g) {
        if (d.h_tgt[f] != d.h_src[g]) continue;
        for (Idx h = 0; h < d.nh(); ++h) {
          if (d.h_tgt[g] != d.h_src[h]) continue;
          // triangle at (f, 1, h) using g as the middle unit when applicable
          for (Idx k = 0; k < d.nh(); ++k) {
            if (d.h_tgt[h] != d.h_src[k]) continue;
            Idx fg = d.hcomp_h_raw(f, g), gh = d.hcomp_h_raw(g, h), hk = d.hcomp_h_raw(h, k);
            Idx a1 = assoc_at(fg, h, k), a2 = assoc_at(f, g, hk);
            Idx a3 = assoc_at(f, g, h), a4 = assoc_at(f, gh, k), a5 = assoc_at(g, h, k);
            if (a1 == kNone || a2 == kNone || a3 == kNone || a4 == kNone || a5 == kNone) continue;
            Idx lhs = d.vcomp_sq_raw(a1, a2);
            Idx rhs = d.vcomp_sq_raw(
                d.vcomp_sq_raw(d.hcomp_sq_raw(a3, d.id_sq_h[k]), a4),
                d.hcomp_sq_raw(d.id_sq_h[f], a5));
            if (lhs != rhs)
              rep.add("pentagon", "(" + sh(f) + "," + sh(g) + "," + sh(h) + "," + sh(k) + ")",
                      sh(lhs), sh(rhs));
          }
        }
      }
    for (Idx f = 0; f < d.nh(); ++f)
      for (Idx g = 0; g < d.nh(); ++g) {
        if (d.h_tgt[f] != d.h_src[g]) continue;
        Idx u = d.id_h[d.h_tgt[f]];
        Idx a1 = assoc_at(f, u, g);
        Idx lu = lunit_at(g), ru = runit_at(f);
        if (a1 == kNone || lu == kNone || ru == kNone) continue;
        Idx lhs = d.vcomp_sq_raw(a1, d.hcomp_sq_raw(d.id_sq_h[f], lu));
        Idx rhs = d.hcomp_sq_raw(ru, d.id_sq_h[g]);
        if (lhs != rhs) rep.add("triangle", "(" + sh(f) + "," + sh(g) + ")", sh(lhs), sh(rhs));
      }
  }

  return rep;
}

}  // namespace dblcat
