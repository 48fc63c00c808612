#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "warp/enumerate.hpp"
#include "warp/fincore.hpp"

namespace warp {

// A 1-cell of a skew bicategory: object `index` of the hom-category (x, y).
struct SkewObj {
  std::size_t x, y, index;
  friend bool operator==(const SkewObj&, const SkewObj&) = default;
};

// A 2-cell: arrow `arrow` (global numbering) of the hom-category (x, y),
// with a printable term for witnesses.
struct SkewMor {
  std::size_t x, y, arrow;
  std::string term;
};

// A finite skew bicategory: hom-categories, composition functors, units, and
// the (not necessarily invertible) alpha, lambda, rho.
struct SkewBicategory {
  FinSet objects;
  std::vector<CategoryPtr> homs;  // [x*n + y]

  // Composition hom(y,z) x hom(x,y) -> hom(x,z), tabulated.
  struct Composition {
    std::vector<std::size_t> objects;    // [g * |ob hom(x,y)| + f]
    std::vector<std::size_t> morphisms;  // [b * |arr hom(x,y)| + c], global arrows
  };
  std::vector<Composition> comp;  // [(x*n + y)*n + z]
  std::vector<std::size_t> units; // object of hom(x,x)

  // alpha[{w,x,y,z,h,g,f}]: (h g) f -> h (g f) in hom(w,z).
  std::map<std::array<std::size_t, 7>, std::size_t> alpha;
  // lambda[{x,y,f}]: 1_y f -> f;  rho[{x,y,f}]: f -> f 1_x.
  std::map<std::array<std::size_t, 3>, std::size_t> lambda;
  std::map<std::array<std::size_t, 3>, std::size_t> rho;

  std::size_t size() const noexcept { return objects.size(); }
  const FinCategory& hom(std::size_t x, std::size_t y) const { return *homs.at(x * size() + y); }
  const CategoryPtr& hom_ptr(std::size_t x, std::size_t y) const { return homs.at(x * size() + y); }
  const Composition& composition(std::size_t x, std::size_t y, std::size_t z) const {
    return comp.at((x * size() + y) * size() + z);
  }

  friend bool operator==(const SkewBicategory& a, const SkewBicategory& b);
};

// Evaluates morphism terms of a skew bicategory with type checking. Every
// operation throws StructureError on an ill-typed term.
class SkewCalc {
 public:
  explicit SkewCalc(const SkewBicategory& s) : s_(s) {}

  std::string name(const SkewObj& o) const;
  SkewObj src(const SkewMor& m) const;
  SkewObj dst(const SkewMor& m) const;

  SkewObj comp(const SkewObj& g, const SkewObj& f) const;  // g o f
  SkewObj unit(std::size_t x) const;
  SkewMor id(const SkewObj& o) const;
  SkewMor vcomp(const SkewMor& a, const SkewMor& b) const;  // a after b
  SkewMor vcomp(std::initializer_list<SkewMor> chain) const;  // first applied last
  SkewMor hcomp(const SkewMor& b, const SkewMor& c) const;  // b * c
  SkewMor alpha(const SkewObj& h, const SkewObj& g, const SkewObj& f) const;
  SkewMor lambda(const SkewObj& f) const;
  SkewMor rho(const SkewObj& f) const;
  SkewMor arrow(std::size_t x, std::size_t y, std::size_t global) const;

  const SkewBicategory& base() const noexcept { return s_; }

 private:
  std::size_t lookup(const std::map<std::array<std::size_t, 3>, std::size_t>& fam, const SkewObj& f,
                     const char* what) const;
  const SkewBicategory& s_;
};

// Records a violation when the two terms differ.
bool check_skew_equation(ValidationReport& report, const SkewCalc& calc, int axiom, const std::string& law,
                         const SkewMor& lhs, const SkewMor& rhs, const std::string& where);

// Axioms 1..5: pentagon, (1*l)a(r*1) = 1, l a = l*1, a r = 1*r, l_1 r_1 = 1.
// Also 6 composition is a functor, 7..9 naturality of alpha, lambda, rho.
ValidationReport validate_skew_bicategory(const SkewBicategory& s, const ValidationOptions& opts = {});

// A skew monoidal category, i.e. the one-object case.
struct SkewMonoidal {
  CategoryPtr category;
  std::vector<std::size_t> tensor_objects;    // [a * |ob| + b]
  std::vector<std::size_t> tensor_morphisms;  // [u * |arr| + v]
  std::size_t unit;
  std::map<std::array<std::size_t, 3>, std::size_t> alpha;  // {a,b,c}
  std::vector<std::size_t> lambda;
  std::vector<std::size_t> rho;

  friend bool operator==(const SkewMonoidal& a, const SkewMonoidal& b) {
    return *a.category == *b.category && a.tensor_objects == b.tensor_objects &&
           a.tensor_morphisms == b.tensor_morphisms && a.unit == b.unit && a.alpha == b.alpha &&
           a.lambda == b.lambda && a.rho == b.rho;
  }
};

SkewBicategory one_object_view(const SkewMonoidal& m, const Atom& object = "o");
// Throws StructureError unless the bicategory has exactly one object.
SkewMonoidal skew_monoidal_of(const SkewBicategory& s);

struct SkewWarping {
  SkewBicategory base;
  FinFunction object_map;          // T
  std::vector<FinFunctor> ext;     // [x*n + y]: hom(x,Ty) -> hom(Tx,Ty)
  std::vector<std::size_t> units;  // K_x, object of hom(x,Tx)
  // nu[{x,y,z,g,f}]: T(Tg o f) -> Tg o Tf, g in hom(y,Tz), f in hom(x,Ty).
  std::map<std::array<std::size_t, 5>, std::size_t> nu;
  std::vector<std::size_t> nu0;  // TK_x -> 1_{Tx}, arrow of hom(Tx,Tx)
  // kappa[{x,y,f}]: f -> Tf o K_x, f in hom(x,Ty).
  std::map<std::array<std::size_t, 3>, std::size_t> kappa;

  friend bool operator==(const SkewWarping& a, const SkewWarping& b);
};

// Term evaluation extended by the warping data.
class SkewWarpCalc : public SkewCalc {
 public:
  explicit SkewWarpCalc(const SkewWarping& w) : SkewCalc(w.base), w_(w) {}

  std::size_t T(std::size_t x) const { return w_.object_map(x); }
  // For f in hom(x,Ty), the image Tf in hom(Tx,Ty); y is explicit because T
  // need not be injective.
  SkewObj ext(std::size_t y, const SkewObj& f) const;
  SkewMor ext(std::size_t y, const SkewMor& m) const;
  SkewObj K(std::size_t x) const;
  // g in hom(y,Tz), f in hom(x,Ty).
  SkewMor nu(std::size_t z, const SkewObj& g, const SkewObj& f) const;
  SkewMor nu0(std::size_t x) const;
  // f in hom(x,Ty).
  SkewMor kappa(std::size_t y, const SkewObj& f) const;
  const SkewWarping& warping() const noexcept { return w_; }

 private:
  const FinFunctor& functor(std::size_t x, std::size_t y) const;
  const SkewWarping& w_;
};

// Axioms 1..5 (see README), 6 ext functors, 7 naturality of nu, 8 of kappa.
// The base is validated first.
ValidationReport validate_skew_warping(const SkewWarping& w, const ValidationOptions& opts = {});

// Kleisli construction: hom(x,y) = hom(x,Ty), g * f = Tg o f, units K_x,
// alpha = alpha o (nu * 1), lambda = lambda o (nu0 * 1), rho = kappa.
SkewBicategory skew_kleisli(const SkewWarping& w);

// T = id, ext = id, K = 1, nu and nu0 identities, kappa = rho.
SkewWarping identity_skew_warping(const SkewBicategory& s);

// Each component ranges over the arrows with the required endpoints.
struct SkewWarpingFamilies {
  std::vector<SkewWarping> valid;
  std::size_t candidates = 0;
  bool rigid = false;  // every component has at most one candidate
};
// Keeps T, ext and K of `shape` and searches nu, nu0, kappa.
SkewWarpingFamilies skew_warping_families(const SkewWarping& shape, const EnumerationLimits& limits = {});

struct SkewAlgebra {
  SkewWarping warping;
  std::size_t object;            // a
  std::vector<FinFunctor> e;     // [z]: hom(z,a) -> hom(Tz,a)
  // cell_nu[{x,y,g,f}]: E(Eg o f) -> Eg o Tf, g in hom(y,a), f in hom(x,Ty).
  std::map<std::array<std::size_t, 4>, std::size_t> cell_nu;
  // cell_kappa[{x,g}]: g -> Eg o K_x, g in hom(x,a).
  std::map<std::array<std::size_t, 2>, std::size_t> cell_kappa;

  friend bool operator==(const SkewAlgebra& a, const SkewAlgebra& b);
};

// Axioms 1 (E-pentagon), 2 (E-unit), 3 E functors, 4 naturality of cell_nu,
// 5 of cell_kappa.
ValidationReport validate_skew_algebra(const SkewAlgebra& a, const ValidationOptions& opts = {});
// The algebra at a = T b with E = ext(-, b) and cells from nu and kappa.
SkewAlgebra self_skew_algebra(const SkewWarping& w, std::size_t b);

// A category as a skew bicategory with discrete hom-categories and identity
// structure cells; an mw-monad as a skew warping on it.
SkewBicategory discrete_skew_bicategory(const FinCategory& c);
SkewWarping discrete_skew_warping(const MwMonad& m);

}  // namespace warp
