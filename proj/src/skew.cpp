#include "warp/skew.hpp"

#include <functional>

namespace warp {

namespace {

std::string arrow_label(const FinCategory& c, std::size_t global) { return c.arrow_name(global); }

// Calls fn(SkewObj) for every 1-cell x -> y.
template <class F>
void each_obj(const SkewBicategory& s, std::size_t x, std::size_t y, F&& fn) {
  const auto& h = s.hom(x, y);
  for (std::size_t i = 0; i < h.object_count(); ++i) fn(SkewObj{x, y, i});
}

template <class F>
void each_mor(const SkewCalc& calc, std::size_t x, std::size_t y, F&& fn) {
  const auto& h = calc.base().hom(x, y);
  for (std::size_t a = 0; a < h.arrow_count(); ++a) fn(calc.arrow(x, y, a));
}

std::string tuple(const SkewCalc& calc, std::initializer_list<SkewObj> objs) {
  std::string out = "(";
  bool first = true;
  for (const auto& o : objs) {
    if (!first) out += ",";
    first = false;
    out += calc.name(o);
  }
  return out + ")";
}

std::string obj_names(const FinSet& objects, std::initializer_list<std::size_t> xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + objects[x];
  return out;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a == b || (a && b && *a == *b); }

// Checks that `arrow` lies in the category and runs from `src` to `dst`.
void check_typed(ValidationReport& r, const FinCategory& c, std::size_t arrow, std::size_t src, std::size_t dst,
                 const std::string& what) {
  if (arrow >= c.arrow_count()) {
    r.add_structural(what + ": arrow index " + std::to_string(arrow) + " out of range");
    return;
  }
  const auto& a = c.arrow(arrow);
  if (a.src != src || a.dst != dst)
    r.add_structural(what + ": " + c.arrow_name(arrow) + " runs " + c.objects()[a.src] + " -> " +
                     c.objects()[a.dst] + ", expected " + c.objects()[src] + " -> " + c.objects()[dst]);
}

}  // namespace

bool operator==(const SkewBicategory& a, const SkewBicategory& b) {
  if (!(a.objects == b.objects) || a.homs.size() != b.homs.size() || a.units != b.units || a.alpha != b.alpha ||
      a.lambda != b.lambda || a.rho != b.rho || a.comp.size() != b.comp.size())
    return false;
  for (std::size_t i = 0; i < a.homs.size(); ++i)
    if (!same_category(a.homs[i], b.homs[i])) return false;
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    if (a.comp[i].objects != b.comp[i].objects || a.comp[i].morphisms != b.comp[i].morphisms) return false;
  return true;
}

// ---- SkewCalc

std::string SkewCalc::name(const SkewObj& o) const { return s_.hom(o.x, o.y).objects()[o.index]; }

SkewMor SkewCalc::arrow(std::size_t x, std::size_t y, std::size_t global) const {
  const auto& h = s_.hom(x, y);
  if (global >= h.arrow_count()) throw StructureError("arrow index out of range in hom(" + s_.objects[x] + "," +
                                                      s_.objects[y] + ")");
  return SkewMor{x, y, global, arrow_label(h, global)};
}

SkewObj SkewCalc::src(const SkewMor& m) const { return SkewObj{m.x, m.y, s_.hom(m.x, m.y).arrow(m.arrow).src}; }
SkewObj SkewCalc::dst(const SkewMor& m) const { return SkewObj{m.x, m.y, s_.hom(m.x, m.y).arrow(m.arrow).dst}; }

SkewObj SkewCalc::comp(const SkewObj& g, const SkewObj& f) const {
  if (g.x != f.y) throw StructureError("cannot compose " + name(g) + " after " + name(f));
  const auto& tab = s_.composition(f.x, f.y, g.y);
  std::size_t i = g.index * s_.hom(f.x, f.y).object_count() + f.index;
  if (i >= tab.objects.size()) throw StructureError("composition table too short");
  return SkewObj{f.x, g.y, tab.objects[i]};
}

SkewObj SkewCalc::unit(std::size_t x) const { return SkewObj{x, x, s_.units.at(x)}; }

SkewMor SkewCalc::id(const SkewObj& o) const {
  return SkewMor{o.x, o.y, s_.hom(o.x, o.y).identity_global(o.index), "1_" + name(o)};
}

SkewMor SkewCalc::vcomp(const SkewMor& a, const SkewMor& b) const {
  if (a.x != b.x || a.y != b.y || !(src(a) == dst(b)))
    throw StructureError("cannot compose 2-cells " + a.term + " after " + b.term);
  return SkewMor{a.x, a.y, s_.hom(a.x, a.y).compose_global(a.arrow, b.arrow), a.term + " . " + b.term};
}

SkewMor SkewCalc::vcomp(std::initializer_list<SkewMor> chain) const {
  auto it = chain.begin();
  SkewMor out = *it;
  for (++it; it != chain.end(); ++it) out = vcomp(out, *it);
  return out;
}

SkewMor SkewCalc::hcomp(const SkewMor& b, const SkewMor& c) const {
  if (b.x != c.y) throw StructureError("cannot whisker " + b.term + " with " + c.term);
  const auto& tab = s_.composition(c.x, c.y, b.y);
  std::size_t i = b.arrow * s_.hom(c.x, c.y).arrow_count() + c.arrow;
  if (i >= tab.morphisms.size()) throw StructureError("composition table too short");
  return SkewMor{c.x, b.y, tab.morphisms[i], "(" + b.term + " * " + c.term + ")"};
}

SkewMor SkewCalc::alpha(const SkewObj& h, const SkewObj& g, const SkewObj& f) const {
  if (g.x != f.y || h.x != g.y) throw StructureError("alpha at non-composable cells");
  auto it = s_.alpha.find({f.x, f.y, g.y, h.y, h.index, g.index, f.index});
  if (it == s_.alpha.end()) throw StructureError("alpha missing at " + tuple(*this, {h, g, f}));
  return SkewMor{f.x, h.y, it->second, "a" + tuple(*this, {h, g, f})};
}

std::size_t SkewCalc::lookup(const std::map<std::array<std::size_t, 3>, std::size_t>& fam, const SkewObj& f,
                             const char* what) const {
  auto it = fam.find({f.x, f.y, f.index});
  if (it == fam.end()) throw StructureError(std::string(what) + " missing at " + name(f));
  return it->second;
}

SkewMor SkewCalc::lambda(const SkewObj& f) const {
  return SkewMor{f.x, f.y, lookup(s_.lambda, f, "lambda"), "l(" + name(f) + ")"};
}

SkewMor SkewCalc::rho(const SkewObj& f) const {
  return SkewMor{f.x, f.y, lookup(s_.rho, f, "rho"), "r(" + name(f) + ")"};
}

bool check_skew_equation(ValidationReport& report, const SkewCalc& calc, int axiom, const std::string& law,
                         const SkewMor& lhs, const SkewMor& rhs, const std::string& where) {
  if (lhs.x == rhs.x && lhs.y == rhs.y && lhs.arrow == rhs.arrow) return true;
  const auto& h = calc.base().hom(lhs.x, lhs.y);
  report.add_violation(axiom, law,
                       where + ": left side gives " + arrow_label(h, lhs.arrow) + ", right side gives " +
                           arrow_label(calc.base().hom(rhs.x, rhs.y), rhs.arrow));
  return false;
}

// ---- validation of the skew bicategory

namespace {

void skew_structure(const SkewBicategory& s, ValidationReport& r) {
  const std::size_t n = s.size();
  if (s.homs.size() != n * n) {
    r.add_structural("expected " + std::to_string(n * n) + " hom-categories, got " + std::to_string(s.homs.size()));
    return;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!s.homs[x * n + y]) {
        r.add_structural("hom(" + obj_names(s.objects, {x, y}) + ") missing");
        continue;
      }
      auto hr = validate_category(s.hom(x, y));
      if (!hr.valid()) {
        for (const auto& m : hr.structural()) r.add_structural("hom(" + obj_names(s.objects, {x, y}) + "): " + m);
        for (const auto& v : hr.violations())
          r.add_structural("hom(" + obj_names(s.objects, {x, y}) + "): " + v.law + ": " + v.witness);
      }
    }
  if (!r.structurally_sound()) return;
  if (s.units.size() != n) r.add_structural("expected one unit per object");
  for (std::size_t x = 0; x < s.units.size() && x < n; ++x)
    if (s.units[x] >= s.hom(x, x).object_count())
      r.add_structural("unit at " + s.objects[x] + " out of range");
  if (s.comp.size() != n * n * n) {
    r.add_structural("expected " + std::to_string(n * n * n) + " composition tables");
    return;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& t = s.composition(x, y, z);
        const auto &f = s.hom(x, y), &g = s.hom(y, z), &gf = s.hom(x, z);
        std::string at = "composition " + obj_names(s.objects, {x, y, z});
        if (t.objects.size() != g.object_count() * f.object_count() ||
            t.morphisms.size() != g.arrow_count() * f.arrow_count()) {
          r.add_structural(at + ": table has the wrong size");
          continue;
        }
        for (auto o : t.objects)
          if (o >= gf.object_count()) r.add_structural(at + ": object out of range");
        if (!r.structurally_sound()) continue;
        for (std::size_t b = 0; b < g.arrow_count(); ++b)
          for (std::size_t c = 0; c < f.arrow_count(); ++c) {
            const auto &ab = g.arrow(b), &ac = f.arrow(c);
            std::size_t sa = t.objects[ab.src * f.object_count() + ac.src];
            std::size_t da = t.objects[ab.dst * f.object_count() + ac.dst];
            check_typed(r, gf, t.morphisms[b * f.arrow_count() + c], sa, da,
                        at + " at " + g.arrow_name(b) + " * " + f.arrow_name(c));
          }
      }
  if (!r.structurally_sound()) return;
  SkewCalc calc(s);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, z, [&](const SkewObj& h) {
            each_obj(s, x, y, [&](const SkewObj& g) {
              each_obj(s, w, x, [&](const SkewObj& f) {
                auto it = s.alpha.find({w, x, y, z, h.index, g.index, f.index});
                std::string at = "alpha at " + tuple(calc, {h, g, f});
                if (it == s.alpha.end()) {
                  r.add_structural(at + " missing");
                  return;
                }
                check_typed(r, s.hom(w, z), it->second, calc.comp(calc.comp(h, g), f).index,
                            calc.comp(h, calc.comp(g, f)).index, at);
              });
            });
          });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      each_obj(s, x, y, [&](const SkewObj& f) {
        auto l = s.lambda.find({x, y, f.index});
        if (l == s.lambda.end())
          r.add_structural("lambda at " + calc.name(f) + " missing");
        else
          check_typed(r, s.hom(x, y), l->second, calc.comp(calc.unit(y), f).index, f.index,
                      "lambda at " + calc.name(f));
        auto p = s.rho.find({x, y, f.index});
        if (p == s.rho.end())
          r.add_structural("rho at " + calc.name(f) + " missing");
        else
          check_typed(r, s.hom(x, y), p->second, f.index, calc.comp(f, calc.unit(x)).index,
                      "rho at " + calc.name(f));
      });
  std::size_t expect = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) expect += s.hom(x, y).object_count();
  if (s.lambda.size() != expect || s.rho.size() != expect)
    r.add_structural("lambda or rho has components at unknown 1-cells");
}

void skew_laws(const SkewBicategory& s, ValidationReport& r) {
  const std::size_t n = s.size();
  SkewCalc c(s);
  // 6: composition is a functor.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        each_obj(s, y, z, [&](const SkewObj& g) {
          each_obj(s, x, y, [&](const SkewObj& f) {
            check_skew_equation(r, c, 6, "1 * 1 = 1", c.hcomp(c.id(g), c.id(f)), c.id(c.comp(g, f)),
                                tuple(c, {g, f}));
          });
        });
        each_mor(c, y, z, [&](const SkewMor& b) {
          each_mor(c, y, z, [&](const SkewMor& b2) {
            if (!(c.src(b2) == c.dst(b))) return;
            each_mor(c, x, y, [&](const SkewMor& d) {
              each_mor(c, x, y, [&](const SkewMor& d2) {
                if (!(c.src(d2) == c.dst(d))) return;
                check_skew_equation(r, c, 6, "(b'b) * (c'c) = (b' * c')(b * c)",
                                    c.hcomp(c.vcomp(b2, b), c.vcomp(d2, d)),
                                    c.vcomp(c.hcomp(b2, d2), c.hcomp(b, d)),
                                    b2.term + ", " + b.term + ", " + d2.term + ", " + d.term);
              });
            });
          });
        });
      }

  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          // 7: alpha natural in each argument.
          each_obj(s, y, z, [&](const SkewObj& h) {
            each_obj(s, x, y, [&](const SkewObj& g) {
              each_obj(s, w, x, [&](const SkewObj& f) {
                std::string at = tuple(c, {h, g, f});
                each_mor(c, y, z, [&](const SkewMor& b) {
                  if (!(c.src(b) == h)) return;
                  auto h2 = c.dst(b);
                  check_skew_equation(r, c, 7, "alpha natural in h",
                                      c.vcomp(c.alpha(h2, g, f), c.hcomp(c.hcomp(b, c.id(g)), c.id(f))),
                                      c.vcomp(c.hcomp(b, c.id(c.comp(g, f))), c.alpha(h, g, f)),
                                      at + " along " + b.term);
                });
                each_mor(c, x, y, [&](const SkewMor& b) {
                  if (!(c.src(b) == g)) return;
                  auto g2 = c.dst(b);
                  check_skew_equation(r, c, 7, "alpha natural in g",
                                      c.vcomp(c.alpha(h, g2, f), c.hcomp(c.hcomp(c.id(h), b), c.id(f))),
                                      c.vcomp(c.hcomp(c.id(h), c.hcomp(b, c.id(f))), c.alpha(h, g, f)),
                                      at + " along " + b.term);
                });
                each_mor(c, w, x, [&](const SkewMor& b) {
                  if (!(c.src(b) == f)) return;
                  auto f2 = c.dst(b);
                  check_skew_equation(r, c, 7, "alpha natural in f",
                                      c.vcomp(c.alpha(h, g, f2), c.hcomp(c.id(c.comp(h, g)), b)),
                                      c.vcomp(c.hcomp(c.id(h), c.hcomp(c.id(g), b)), c.alpha(h, g, f)),
                                      at + " along " + b.term);
                });
              });
            });
          });
        }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      each_mor(c, x, y, [&](const SkewMor& b) {
        auto f = c.src(b), f2 = c.dst(b);
        check_skew_equation(r, c, 8, "lambda natural", c.vcomp(c.lambda(f2), c.hcomp(c.id(c.unit(y)), b)),
                            c.vcomp(b, c.lambda(f)), "along " + b.term);
        check_skew_equation(r, c, 9, "rho natural", c.vcomp(c.rho(f2), b),
                            c.vcomp(c.hcomp(b, c.id(c.unit(x))), c.rho(f)), "along " + b.term);
      });

  // 1: pentagon.
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            each_obj(s, y, z, [&](const SkewObj& k) {
              each_obj(s, x, y, [&](const SkewObj& h) {
                each_obj(s, w, x, [&](const SkewObj& g) {
                  each_obj(s, v, w, [&](const SkewObj& f) {
                    auto hg = c.comp(h, g), gf = c.comp(g, f), kh = c.comp(k, h);
                    check_skew_equation(
                        r, c, 1, "pentagon",
                        c.vcomp({c.hcomp(c.id(k), c.alpha(h, g, f)), c.alpha(k, hg, f),
                                 c.hcomp(c.alpha(k, h, g), c.id(f))}),
                        c.vcomp(c.alpha(k, h, gf), c.alpha(kh, g, f)), tuple(c, {k, h, g, f}));
                  });
                });
              });
            });

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        each_obj(s, y, z, [&](const SkewObj& g) {
          each_obj(s, x, y, [&](const SkewObj& f) {
            std::string at = tuple(c, {g, f});
            auto one = c.unit(y);
            check_skew_equation(r, c, 2, "(1 * l) a (r * 1) = 1",
                                c.vcomp({c.hcomp(c.id(g), c.lambda(f)), c.alpha(g, one, f),
                                         c.hcomp(c.rho(g), c.id(f))}),
                                c.id(c.comp(g, f)), at);
            check_skew_equation(r, c, 3, "l a = l * 1", c.vcomp(c.lambda(c.comp(g, f)), c.alpha(c.unit(z), g, f)),
                                c.hcomp(c.lambda(g), c.id(f)), at);
            check_skew_equation(r, c, 4, "a r = 1 * r", c.vcomp(c.alpha(g, f, c.unit(x)), c.rho(c.comp(g, f))),
                                c.hcomp(c.id(g), c.rho(f)), at);
          });
        });

  for (std::size_t x = 0; x < n; ++x) {
    auto one = c.unit(x);
    check_skew_equation(r, c, 5, "l r = 1 at the unit", c.vcomp(c.lambda(one), c.rho(one)), c.id(one),
                        s.objects[x]);
  }
}

}  // namespace

ValidationReport validate_skew_bicategory(const SkewBicategory& s, const ValidationOptions& opts) {
  ValidationReport r(opts);
  skew_structure(s, r);
  if (!r.structurally_sound()) return r;
  try {
    skew_laws(s, r);
  } catch (const StructureError& e) {
    r.add_structural(e.what());
  }
  return r;
}

// ---- skew monoidal

SkewBicategory one_object_view(const SkewMonoidal& m, const Atom& object) {
  SkewBicategory s;
  s.objects = FinSet{object};
  s.homs = {m.category};
  s.comp = {SkewBicategory::Composition{m.tensor_objects, m.tensor_morphisms}};
  s.units = {m.unit};
  for (const auto& [k, v] : m.alpha) s.alpha[{0, 0, 0, 0, k[0], k[1], k[2]}] = v;
  for (std::size_t i = 0; i < m.lambda.size(); ++i) s.lambda[{0, 0, i}] = m.lambda[i];
  for (std::size_t i = 0; i < m.rho.size(); ++i) s.rho[{0, 0, i}] = m.rho[i];
  return s;
}

SkewMonoidal skew_monoidal_of(const SkewBicategory& s) {
  if (s.size() != 1 || s.homs.size() != 1 || s.comp.size() != 1 || s.units.size() != 1)
    throw StructureError("a skew monoidal category needs exactly one object");
  SkewMonoidal m;
  m.category = s.homs[0];
  m.tensor_objects = s.comp[0].objects;
  m.tensor_morphisms = s.comp[0].morphisms;
  m.unit = s.units[0];
  for (const auto& [k, v] : s.alpha) m.alpha[{k[4], k[5], k[6]}] = v;
  const std::size_t obs = m.category->object_count();
  m.lambda.assign(obs, 0);
  m.rho.assign(obs, 0);
  for (const auto& [k, v] : s.lambda)
    if (k[2] < obs) m.lambda[k[2]] = v;
  for (const auto& [k, v] : s.rho)
    if (k[2] < obs) m.rho[k[2]] = v;
  return m;
}

// ---- skew warpings

bool operator==(const SkewWarping& a, const SkewWarping& b) {
  return a.base == b.base && a.object_map == b.object_map && a.ext == b.ext && a.units == b.units && a.nu == b.nu &&
         a.nu0 == b.nu0 && a.kappa == b.kappa;
}

const FinFunctor& SkewWarpCalc::functor(std::size_t x, std::size_t y) const {
  return w_.ext.at(x * base().size() + y);
}

SkewObj SkewWarpCalc::ext(std::size_t y, const SkewObj& f) const {
  if (f.y != T(y)) throw StructureError("T applied to " + name(f) + " with the wrong target");
  return SkewObj{T(f.x), T(y), functor(f.x, y).object(f.index)};
}

SkewMor SkewWarpCalc::ext(std::size_t y, const SkewMor& m) const {
  if (m.y != T(y)) throw StructureError("T applied to " + m.term + " with the wrong target");
  return SkewMor{T(m.x), T(y), functor(m.x, y).arrow(m.arrow), "T(" + m.term + ")"};
}

SkewObj SkewWarpCalc::K(std::size_t x) const { return SkewObj{x, T(x), w_.units.at(x)}; }

SkewMor SkewWarpCalc::nu(std::size_t z, const SkewObj& g, const SkewObj& f) const {
  if (g.y != T(z) || f.y != T(g.x)) throw StructureError("nu at ill-typed cells");
  auto it = w_.nu.find({f.x, g.x, z, g.index, f.index});
  if (it == w_.nu.end()) throw StructureError("nu missing at " + tuple(*this, {g, f}));
  return SkewMor{T(f.x), T(z), it->second, "nu" + tuple(*this, {g, f})};
}

SkewMor SkewWarpCalc::nu0(std::size_t x) const {
  return SkewMor{T(x), T(x), w_.nu0.at(x), "nu0(" + base().objects[x] + ")"};
}

SkewMor SkewWarpCalc::kappa(std::size_t y, const SkewObj& f) const {
  if (f.y != T(y)) throw StructureError("kappa at ill-typed cell");
  auto it = w_.kappa.find({f.x, y, f.index});
  if (it == w_.kappa.end()) throw StructureError("kappa missing at " + name(f));
  return SkewMor{f.x, f.y, it->second, "k(" + name(f) + ")"};
}

namespace {

void warping_structure(const SkewWarping& w, ValidationReport& r) {
  const auto& s = w.base;
  const std::size_t n = s.size();
  if (!(w.object_map.dom() == s.objects) || !(w.object_map.cod() == s.objects)) {
    r.add_structural("T is not an endofunction of the objects");
    return;
  }
  if (w.ext.size() != n * n) {
    r.add_structural("expected " + std::to_string(n * n) + " extension functors");
    return;
  }
  if (w.units.size() != n || w.nu0.size() != n) {
    r.add_structural("expected one unit and one nu0 per object");
    return;
  }
  const auto T = [&](std::size_t x) { return w.object_map(x); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& F = w.ext[x * n + y];
      std::string at = "T on hom(" + obj_names(s.objects, {x, T(y)}) + ")";
      if (!F.dom_ptr() || !F.cod_ptr() || !same_category(F.dom_ptr(), s.hom_ptr(x, T(y))) ||
          !same_category(F.cod_ptr(), s.hom_ptr(T(x), T(y)))) {
        r.add_structural(at + ": wrong domain or codomain");
        continue;
      }
      if (F.object_map().size() != F.dom().object_count() || F.arrow_map().size() != F.dom().arrow_count()) {
        r.add_structural(at + ": maps have the wrong size");
        continue;
      }
      for (auto o : F.object_map())
        if (o >= F.cod().object_count()) r.add_structural(at + ": object out of range");
      for (std::size_t a = 0; a < F.arrow_map().size() && r.structurally_sound(); ++a) {
        const auto& ar = F.dom().arrow(a);
        check_typed(r, F.cod(), F.arrow(a), F.object(ar.src), F.object(ar.dst), at);
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    if (w.units[x] >= s.hom(x, T(x)).object_count()) r.add_structural("K at " + s.objects[x] + " out of range");
  if (!r.structurally_sound()) return;

  SkewWarpCalc c(w);
  for (std::size_t x = 0; x < n; ++x) {
    auto tk = c.ext(x, c.K(x));
    check_typed(r, s.hom(T(x), T(x)), w.nu0[x], tk.index, s.units[T(x)], "nu0 at " + s.objects[x]);
  }
  std::size_t nus = 0, kappas = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_obj(s, x, T(y), [&](const SkewObj& f) {
        ++kappas;
        auto it = w.kappa.find({x, y, f.index});
        std::string at = "kappa at " + c.name(f);
        if (it == w.kappa.end())
          r.add_structural(at + " missing");
        else
          check_typed(r, s.hom(x, T(y)), it->second, f.index, c.comp(c.ext(y, f), c.K(x)).index, at);
      });
      for (std::size_t z = 0; z < n; ++z)
        each_obj(s, y, T(z), [&](const SkewObj& g) {
          each_obj(s, x, T(y), [&](const SkewObj& f) {
            ++nus;
            auto it = w.nu.find({x, y, z, g.index, f.index});
            std::string at = "nu at " + tuple(c, {g, f});
            if (it == w.nu.end()) {
              r.add_structural(at + " missing");
              return;
            }
            auto tg = c.ext(z, g);
            check_typed(r, s.hom(T(x), T(z)), it->second, c.ext(z, c.comp(tg, f)).index,
                        c.comp(tg, c.ext(y, f)).index, at);
          });
        });
    }
  if (w.nu.size() != nus || w.kappa.size() != kappas) r.add_structural("nu or kappa has components at unknown cells");
}

void warping_laws(const SkewWarping& w, ValidationReport& r) {
  const auto& s = w.base;
  const std::size_t n = s.size();
  SkewWarpCalc c(w);
  const auto T = [&](std::size_t x) { return c.T(x); };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ValidationReport fr = validate_functor(w.ext[x * n + y]);
      for (const auto& v : fr.violations())
        r.add_violation(6, "T is a functor on hom(" + obj_names(s.objects, {x, T(y)}) + ")", v.witness);
      for (const auto& m : fr.structural()) r.add_structural(m);
    }

  // 7, 8: naturality.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_mor(c, x, T(y), [&](const SkewMor& b) {
        auto f = c.src(b), f2 = c.dst(b);
        check_skew_equation(r, c, 8, "kappa natural", c.vcomp(c.kappa(y, f2), b),
                            c.vcomp(c.hcomp(c.ext(y, b), c.id(c.K(x))), c.kappa(y, f)), "along " + b.term);
      });
      for (std::size_t z = 0; z < n; ++z) {
        each_mor(c, y, T(z), [&](const SkewMor& b) {
          auto g = c.src(b), g2 = c.dst(b);
          auto tb = c.ext(z, b);
          each_obj(s, x, T(y), [&](const SkewObj& f) {
            check_skew_equation(r, c, 7, "nu natural in g",
                                c.vcomp(c.nu(z, g2, f), c.ext(z, c.hcomp(tb, c.id(f)))),
                                c.vcomp(c.hcomp(tb, c.id(c.ext(y, f))), c.nu(z, g, f)),
                                c.name(f) + " along " + b.term);
          });
        });
        each_obj(s, y, T(z), [&](const SkewObj& g) {
          auto tg = c.ext(z, g);
          each_mor(c, x, T(y), [&](const SkewMor& b) {
            auto f = c.src(b), f2 = c.dst(b);
            check_skew_equation(r, c, 7, "nu natural in f",
                                c.vcomp(c.nu(z, g, f2), c.ext(z, c.hcomp(c.id(tg), b))),
                                c.vcomp(c.hcomp(c.id(tg), c.ext(y, b)), c.nu(z, g, f)),
                                c.name(g) + " along " + b.term);
          });
        });
      }
    }

  // 1: associativity, f in hom(v,Tx), g in hom(x,Ty), h in hom(y,Tz).
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, T(z), [&](const SkewObj& h) {
            each_obj(s, x, T(y), [&](const SkewObj& g) {
              each_obj(s, v, T(x), [&](const SkewObj& f) {
                auto th = c.ext(z, h), tg = c.ext(y, g), tf = c.ext(x, f);
                auto lhs = c.vcomp({c.alpha(th, tg, tf), c.hcomp(c.nu(z, h, g), c.id(tf)),
                                    c.nu(z, c.comp(th, g), f)});
                auto rhs = c.vcomp({c.hcomp(c.id(th), c.nu(y, g, f)), c.nu(z, h, c.comp(tg, f)),
                                    c.ext(z, c.alpha(th, tg, f)), c.ext(z, c.hcomp(c.nu(z, h, g), c.id(f)))});
                check_skew_equation(r, c, 1, "nu associativity", lhs, rhs, tuple(c, {h, g, f}));
              });
            });
          });

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_obj(s, x, T(y), [&](const SkewObj& f) {
        std::string at = c.name(f);
        auto tf = c.ext(y, f);
        auto kx = c.K(x), ky = c.K(y);
        // 2: right unit.
        check_skew_equation(r, c, 2, "nu right unit",
                            c.vcomp({c.hcomp(c.id(tf), c.nu0(x)), c.nu(y, f, kx), c.ext(y, c.kappa(y, f))}),
                            c.rho(tf), at);
        // 3: left unit.
        check_skew_equation(
            r, c, 3, "nu left unit",
            c.vcomp(c.ext(y, c.lambda(f)), c.ext(y, c.hcomp(c.nu0(y), c.id(f)))),
            c.vcomp({c.lambda(tf), c.hcomp(c.nu0(y), c.id(tf)), c.nu(y, ky, f)}), at);
        // 4: kappa against nu.
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, T(z), [&](const SkewObj& g) {
            auto tg = c.ext(z, g);
            check_skew_equation(r, c, 4, "kappa against nu",
                                c.vcomp({c.alpha(tg, tf, kx), c.hcomp(c.nu(z, g, f), c.id(kx)),
                                         c.kappa(z, c.comp(tg, f))}),
                                c.hcomp(c.id(tg), c.kappa(y, f)), tuple(c, {g, f}));
          });
      });
    }
  for (std::size_t x = 0; x < n; ++x) {
    auto kx = c.K(x);
    check_skew_equation(r, c, 5, "kappa at the unit",
                        c.vcomp({c.lambda(kx), c.hcomp(c.nu0(x), c.id(kx)), c.kappa(x, kx)}), c.id(kx),
                        s.objects[x]);
  }
}

ValidationReport validate_warping_data(const SkewWarping& w, const ValidationOptions& opts) {
  ValidationReport r(opts);
  warping_structure(w, r);
  if (!r.structurally_sound()) return r;
  try {
    warping_laws(w, r);
  } catch (const StructureError& e) {
    r.add_structural(e.what());
  }
  return r;
}

}  // namespace

ValidationReport validate_skew_warping(const SkewWarping& w, const ValidationOptions& opts) {
  ValidationReport base = validate_skew_bicategory(w.base, opts);
  if (!base.valid()) {
    ValidationReport r(opts);
    for (const auto& m : base.structural()) r.add_structural("base: " + m);
    for (const auto& v : base.violations()) r.add_structural("base: " + v.law + ": " + v.witness);
    return r;
  }
  return validate_warping_data(w, opts);
}

SkewBicategory skew_kleisli(const SkewWarping& w) {
  auto report = validate_skew_warping(w);
  if (!report.valid()) throw LawViolation("skew Kleisli construction needs a valid skew warping", report);
  const auto& s = w.base;
  const std::size_t n = s.size();
  SkewWarpCalc c(w);
  const auto T = [&](std::size_t x) { return c.T(x); };
  SkewBicategory k;
  k.objects = s.objects;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) k.homs.push_back(s.hom_ptr(x, T(y)));
  k.comp.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto& tab = k.comp[(x * n + y) * n + z];
        each_obj(s, y, T(z), [&](const SkewObj& g) {
          auto tg = c.ext(z, g);
          each_obj(s, x, T(y), [&](const SkewObj& f) { tab.objects.push_back(c.comp(tg, f).index); });
        });
        each_mor(c, y, T(z), [&](const SkewMor& b) {
          auto tb = c.ext(z, b);
          each_mor(c, x, T(y), [&](const SkewMor& d) { tab.morphisms.push_back(c.hcomp(tb, d).arrow); });
        });
      }
  for (std::size_t x = 0; x < n; ++x) k.units.push_back(w.units[x]);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, T(z), [&](const SkewObj& h) {
            each_obj(s, x, T(y), [&](const SkewObj& g) {
              each_obj(s, v, T(x), [&](const SkewObj& f) {
                auto a = c.vcomp(c.alpha(c.ext(z, h), c.ext(y, g), f), c.hcomp(c.nu(z, h, g), c.id(f)));
                k.alpha[{v, x, y, z, h.index, g.index, f.index}] = a.arrow;
              });
            });
          });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      each_obj(s, x, T(y), [&](const SkewObj& f) {
        k.lambda[{x, y, f.index}] = c.vcomp(c.lambda(f), c.hcomp(c.nu0(y), c.id(f))).arrow;
        k.rho[{x, y, f.index}] = c.kappa(y, f).arrow;
      });
  return k;
}

SkewWarping identity_skew_warping(const SkewBicategory& s) {
  const std::size_t n = s.size();
  SkewCalc c(s);
  SkewWarping w;
  w.base = s;
  w.object_map = FinFunction::identity(s.objects);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) w.ext.push_back(FinFunctor::identity(s.hom_ptr(x, y)));
  w.units = s.units;
  for (std::size_t x = 0; x < n; ++x) w.nu0.push_back(c.id(c.unit(x)).arrow);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_obj(s, x, y, [&](const SkewObj& f) { w.kappa[{x, y, f.index}] = c.rho(f).arrow; });
      for (std::size_t z = 0; z < n; ++z)
        each_obj(s, y, z, [&](const SkewObj& g) {
          each_obj(s, x, y, [&](const SkewObj& f) { w.nu[{x, y, z, g.index, f.index}] = c.id(c.comp(g, f)).arrow; });
        });
    }
  return w;
}

SkewWarpingFamilies skew_warping_families(const SkewWarping& shape, const EnumerationLimits& limits) {
  SkewWarpingFamilies out;
  auto base = validate_skew_bicategory(shape.base);
  if (!base.valid()) throw LawViolation("skew warping search needs a valid base", base);
  const auto& s = shape.base;
  const std::size_t n = s.size();
  // Only T, ext and K of the shape are read while building candidate lists.
  if (!(shape.object_map.dom() == s.objects) || !(shape.object_map.cod() == s.objects) ||
      shape.ext.size() != n * n || shape.units.size() != n)
    throw StructureError("skew warping shape does not fit the base");
  const auto T = [&](std::size_t x) { return shape.object_map(x); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!same_category(shape.ext[x * n + y].dom_ptr(), s.hom_ptr(x, T(y))) ||
          !same_category(shape.ext[x * n + y].cod_ptr(), s.hom_ptr(T(x), T(y))))
        throw StructureError("skew warping shape: extension functor has the wrong type");

  auto between = [&](std::size_t x, std::size_t y, std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    const auto& h = s.hom(x, y);
    for (std::size_t i = 0; i < h.hom(from, to).size(); ++i) out.push_back(h.global(from, to, i));
    return out;
  };

  std::vector<std::vector<std::size_t>> lists;
  SkewWarpCalc c(shape);
  for (std::size_t x = 0; x < n; ++x)
    lists.push_back(between(T(x), T(x), c.ext(x, c.K(x)).index, s.units[T(x)]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_obj(s, x, T(y), [&](const SkewObj& f) {
        lists.push_back(between(x, T(y), f.index, c.comp(c.ext(y, f), c.K(x)).index));
      });
      for (std::size_t z = 0; z < n; ++z)
        each_obj(s, y, T(z), [&](const SkewObj& g) {
          each_obj(s, x, T(y), [&](const SkewObj& f) {
            auto tg = c.ext(z, g);
            lists.push_back(between(T(x), T(z), c.ext(z, c.comp(tg, f)).index, c.comp(tg, c.ext(y, f)).index));
          });
        });
    }
  out.rigid = true;
  std::size_t total = 1;
  for (const auto& l : lists) {
    if (l.size() > 1) out.rigid = false;
    if (l.empty()) {
      total = 0;
      break;
    }
    total = total > npos / l.size() ? npos : total * l.size();
  }
  out.candidates = total;
  if (total > limits.max_candidates)
    throw LimitExceeded("skew warping search: " + (total == npos ? std::string("too many") : std::to_string(total)) +
                        " candidates exceed the candidate limit of " + std::to_string(limits.max_candidates));
  if (total == 0) return out;

  std::vector<std::size_t> digit(lists.size(), 0);
  for (;;) {
    SkewWarping cand = shape;
    cand.nu.clear();
    cand.kappa.clear();
    cand.nu0.assign(n, 0);
    std::size_t i = 0;
    for (std::size_t x = 0; x < n; ++x, ++i) cand.nu0[x] = lists[i][digit[i]];
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        // Same order as the lists above.
        each_obj(s, x, T(y), [&](const SkewObj& f) {
          cand.kappa[{x, y, f.index}] = lists[i][digit[i]];
          ++i;
        });
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, T(z), [&](const SkewObj& g) {
            each_obj(s, x, T(y), [&](const SkewObj& f) {
              cand.nu[{x, y, z, g.index, f.index}] = lists[i][digit[i]];
              ++i;
            });
          });
      }
    if (validate_warping_data(cand, {1}).valid()) out.valid.push_back(std::move(cand));
    std::size_t d = 0;
    while (d < lists.size()) {
      if (++digit[d] < lists[d].size()) break;
      digit[d] = 0;
      ++d;
    }
    if (d == lists.size()) break;
  }
  return out;
}

// ---- skew algebras

bool operator==(const SkewAlgebra& a, const SkewAlgebra& b) {
  return a.warping == b.warping && a.object == b.object && a.e == b.e && a.cell_nu == b.cell_nu &&
         a.cell_kappa == b.cell_kappa;
}

namespace {

class AlgebraCalc : public SkewWarpCalc {
 public:
  explicit AlgebraCalc(const SkewAlgebra& a) : SkewWarpCalc(a.warping), a_(a) {}

  SkewObj E(const SkewObj& g) const {
    if (g.y != a_.object) throw StructureError("E applied outside hom(-, a)");
    return SkewObj{T(g.x), a_.object, a_.e.at(g.x).object(g.index)};
  }
  SkewMor E(const SkewMor& m) const {
    if (m.y != a_.object) throw StructureError("E applied outside hom(-, a)");
    return SkewMor{T(m.x), a_.object, a_.e.at(m.x).arrow(m.arrow), "E(" + m.term + ")"};
  }
  // g in hom(y,a), f in hom(x,Ty).
  SkewMor cnu(const SkewObj& g, const SkewObj& f) const {
    if (g.y != a_.object || f.y != T(g.x)) throw StructureError("cell nu at ill-typed cells");
    auto it = a_.cell_nu.find({f.x, g.x, g.index, f.index});
    if (it == a_.cell_nu.end()) throw StructureError("cell nu missing at " + tuple(*this, {g, f}));
    return SkewMor{T(f.x), a_.object, it->second, "enu" + tuple(*this, {g, f})};
  }
  SkewMor ckappa(const SkewObj& g) const {
    auto it = a_.cell_kappa.find({g.x, g.index});
    if (g.y != a_.object || it == a_.cell_kappa.end()) throw StructureError("cell kappa missing at " + name(g));
    return SkewMor{g.x, a_.object, it->second, "ek(" + name(g) + ")"};
  }

 private:
  const SkewAlgebra& a_;
};

void algebra_structure(const SkewAlgebra& a, ValidationReport& r) {
  const auto& w = a.warping;
  const auto& s = w.base;
  const std::size_t n = s.size();
  if (a.object >= n) {
    r.add_structural("algebra object out of range");
    return;
  }
  if (a.e.size() != n) {
    r.add_structural("expected one E functor per object");
    return;
  }
  const auto T = [&](std::size_t x) { return w.object_map(x); };
  for (std::size_t z = 0; z < n; ++z) {
    const auto& F = a.e[z];
    std::string at = "E on hom(" + obj_names(s.objects, {z, a.object}) + ")";
    if (!same_category(F.dom_ptr(), s.hom_ptr(z, a.object)) || !same_category(F.cod_ptr(), s.hom_ptr(T(z), a.object))) {
      r.add_structural(at + ": wrong domain or codomain");
      continue;
    }
    if (F.object_map().size() != F.dom().object_count() || F.arrow_map().size() != F.dom().arrow_count()) {
      r.add_structural(at + ": maps have the wrong size");
      continue;
    }
    for (auto o : F.object_map())
      if (o >= F.cod().object_count()) r.add_structural(at + ": object out of range");
    for (std::size_t m = 0; m < F.arrow_map().size() && r.structurally_sound(); ++m) {
      const auto& ar = F.dom().arrow(m);
      check_typed(r, F.cod(), F.arrow(m), F.object(ar.src), F.object(ar.dst), at);
    }
  }
  if (!r.structurally_sound()) return;
  AlgebraCalc c(a);
  std::size_t nus = 0, kappas = 0;
  for (std::size_t x = 0; x < n; ++x) {
    each_obj(s, x, a.object, [&](const SkewObj& g) {
      ++kappas;
      auto it = a.cell_kappa.find({x, g.index});
      std::string at = "cell kappa at " + c.name(g);
      if (it == a.cell_kappa.end())
        r.add_structural(at + " missing");
      else
        check_typed(r, s.hom(x, a.object), it->second, g.index, c.comp(c.E(g), c.K(x)).index, at);
    });
    for (std::size_t y = 0; y < n; ++y)
      each_obj(s, y, a.object, [&](const SkewObj& g) {
        each_obj(s, x, T(y), [&](const SkewObj& f) {
          ++nus;
          auto it = a.cell_nu.find({x, y, g.index, f.index});
          std::string at = "cell nu at " + tuple(c, {g, f});
          if (it == a.cell_nu.end()) {
            r.add_structural(at + " missing");
            return;
          }
          auto eg = c.E(g);
          check_typed(r, s.hom(T(x), a.object), it->second, c.E(c.comp(eg, f)).index,
                      c.comp(eg, c.ext(y, f)).index, at);
        });
      });
  }
  if (a.cell_nu.size() != nus || a.cell_kappa.size() != kappas)
    r.add_structural("cell nu or cell kappa has components at unknown cells");
}

void algebra_laws(const SkewAlgebra& a, ValidationReport& r) {
  const auto& s = a.warping.base;
  const std::size_t n = s.size();
  const std::size_t ao = a.object;
  AlgebraCalc c(a);
  const auto T = [&](std::size_t x) { return c.T(x); };

  for (std::size_t z = 0; z < n; ++z) {
    ValidationReport fr = validate_functor(a.e[z]);
    for (const auto& v : fr.violations())
      r.add_violation(3, "E is a functor on hom(" + obj_names(s.objects, {z, ao}) + ")", v.witness);
    for (const auto& m : fr.structural()) r.add_structural(m);
  }

  for (std::size_t x = 0; x < n; ++x) {
    each_mor(c, x, ao, [&](const SkewMor& b) {
      auto g = c.src(b), g2 = c.dst(b);
      check_skew_equation(r, c, 5, "cell kappa natural", c.vcomp(c.ckappa(g2), b),
                          c.vcomp(c.hcomp(c.E(b), c.id(c.K(x))), c.ckappa(g)), "along " + b.term);
    });
    for (std::size_t y = 0; y < n; ++y) {
      each_mor(c, y, ao, [&](const SkewMor& b) {
        auto g = c.src(b), g2 = c.dst(b);
        auto eb = c.E(b);
        each_obj(s, x, T(y), [&](const SkewObj& f) {
          check_skew_equation(r, c, 4, "cell nu natural in g", c.vcomp(c.cnu(g2, f), c.E(c.hcomp(eb, c.id(f)))),
                              c.vcomp(c.hcomp(eb, c.id(c.ext(y, f))), c.cnu(g, f)),
                              c.name(f) + " along " + b.term);
        });
      });
      each_obj(s, y, ao, [&](const SkewObj& g) {
        auto eg = c.E(g);
        each_mor(c, x, T(y), [&](const SkewMor& b) {
          auto f = c.src(b), f2 = c.dst(b);
          check_skew_equation(r, c, 4, "cell nu natural in f", c.vcomp(c.cnu(g, f2), c.E(c.hcomp(c.id(eg), b))),
                              c.vcomp(c.hcomp(c.id(eg), c.ext(y, b)), c.cnu(g, f)),
                              c.name(g) + " along " + b.term);
        });
      });
    }
  }

  // 1: f in hom(w,Tx), g in hom(x,Ty), h in hom(y,a).
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        each_obj(s, y, ao, [&](const SkewObj& h) {
          each_obj(s, x, T(y), [&](const SkewObj& g) {
            each_obj(s, w, T(x), [&](const SkewObj& f) {
              auto eh = c.E(h), tg = c.ext(y, g), tf = c.ext(x, f);
              auto lhs = c.vcomp({c.alpha(eh, tg, tf), c.hcomp(c.cnu(h, g), c.id(tf)), c.cnu(c.comp(eh, g), f)});
              auto rhs = c.vcomp({c.hcomp(c.id(eh), c.nu(y, g, f)), c.cnu(h, c.comp(tg, f)),
                                  c.E(c.alpha(eh, tg, f)), c.E(c.hcomp(c.cnu(h, g), c.id(f)))});
              check_skew_equation(r, c, 1, "E associativity", lhs, rhs, tuple(c, {h, g, f}));
            });
          });
        });

  // 2: g in hom(y,a), f in hom(x,Ty).
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      each_obj(s, y, ao, [&](const SkewObj& g) {
        each_obj(s, x, T(y), [&](const SkewObj& f) {
          auto eg = c.E(g), tf = c.ext(y, f), kx = c.K(x);
          check_skew_equation(r, c, 2, "E unit",
                              c.vcomp({c.alpha(eg, tf, kx), c.hcomp(c.cnu(g, f), c.id(kx)),
                                       c.ckappa(c.comp(eg, f))}),
                              c.hcomp(c.id(eg), c.kappa(y, f)), tuple(c, {g, f}));
        });
      });
}

}  // namespace

ValidationReport validate_skew_algebra(const SkewAlgebra& a, const ValidationOptions& opts) {
  ValidationReport w = validate_skew_warping(a.warping, opts);
  if (!w.valid()) {
    ValidationReport r(opts);
    for (const auto& m : w.structural()) r.add_structural("warping: " + m);
    for (const auto& v : w.violations()) r.add_structural("warping: " + v.law + ": " + v.witness);
    return r;
  }
  ValidationReport r(opts);
  algebra_structure(a, r);
  if (!r.structurally_sound()) return r;
  try {
    algebra_laws(a, r);
  } catch (const StructureError& e) {
    r.add_structural(e.what());
  }
  return r;
}

SkewAlgebra self_skew_algebra(const SkewWarping& w, std::size_t b) {
  const auto& s = w.base;
  const std::size_t n = s.size();
  SkewAlgebra a;
  a.warping = w;
  a.object = w.object_map(b);
  for (std::size_t z = 0; z < n; ++z) a.e.push_back(w.ext.at(z * n + b));
  for (const auto& [k, v] : w.nu)
    if (k[2] == b) a.cell_nu[{k[0], k[1], k[3], k[4]}] = v;
  for (const auto& [k, v] : w.kappa)
    if (k[1] == b) a.cell_kappa[{k[0], k[2]}] = v;
  return a;
}

// ---- discrete embeddings

SkewBicategory discrete_skew_bicategory(const FinCategory& c) {
  const std::size_t n = c.object_count();
  SkewBicategory s;
  s.objects = c.objects();
  // In a discrete category arrow i is the identity on object i.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) s.homs.push_back(std::make_shared<FinCategory>(discrete_category(c.hom(x, y))));
  s.comp.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto& t = s.comp[(x * n + y) * n + z];
        for (std::size_t g = 0; g < c.hom(y, z).size(); ++g)
          for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) t.objects.push_back(c.compose(x, y, z, g, f));
        t.morphisms = t.objects;
      }
  for (std::size_t x = 0; x < n; ++x) s.units.push_back(c.identity(x));
  SkewCalc calc(s);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          each_obj(s, y, z, [&](const SkewObj& h) {
            each_obj(s, x, y, [&](const SkewObj& g) {
              each_obj(s, w, x, [&](const SkewObj& f) {
                s.alpha[{w, x, y, z, h.index, g.index, f.index}] = calc.comp(calc.comp(h, g), f).index;
              });
            });
          });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      each_obj(s, x, y, [&](const SkewObj& f) {
        s.lambda[{x, y, f.index}] = calc.comp(calc.unit(y), f).index;
        s.rho[{x, y, f.index}] = f.index;
      });
  return s;
}

SkewWarping discrete_skew_warping(const MwMonad& m) {
  const auto& cat = *m.base;
  const std::size_t n = cat.object_count();
  SkewWarping w;
  w.base = discrete_skew_bicategory(cat);
  w.object_map = m.object_map;
  const auto T = [&](std::size_t x) { return m.object_map(x); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& img = m.ext.at(x * n + y);
      w.ext.emplace_back(w.base.hom_ptr(x, T(y)), w.base.hom_ptr(T(x), T(y)), img, img);
    }
  w.units = m.units;
  SkewWarpCalc c(w);
  for (std::size_t x = 0; x < n; ++x) w.nu0.push_back(c.ext(x, c.K(x)).index);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      each_obj(w.base, x, T(y), [&](const SkewObj& f) { w.kappa[{x, y, f.index}] = f.index; });
      for (std::size_t z = 0; z < n; ++z)
        each_obj(w.base, y, T(z), [&](const SkewObj& g) {
          each_obj(w.base, x, T(y), [&](const SkewObj& f) {
            w.nu[{x, y, z, g.index, f.index}] = c.ext(z, c.comp(c.ext(z, g), f)).index;
          });
        });
    }
  return w;
}

}  // namespace warp
