#pragma once

#include <vector>

#include "warp/monadwarp.hpp"

namespace warp {

// A monad structure on the composite AB over a base monad (X, B).
struct MonadOnAB {
  SpanMonad base;
  SpanPtr endo;     // A
  SpanMonad monad;  // carrier AB

  friend bool operator==(const MonadOnAB& a, const MonadOnAB& b) {
    return a.base == b.base && same_span(a.endo, b.endo) && a.monad == b.monad;
  }
};

// i = (Ap)(eB) with e the unit of AB, i.e. B => ABB => AB.
Cell2 base_embedding(const MonadOnAB& m);

enum class SideCondition {
  none,
  monoid_map,  // i preserves multiplication and unit
  full,        // monoid map and P(ABi) = Ap
};

// Axioms: 1 i preserves multiplication, 2 i preserves unit, 3 right
// B-linearity P(ABi) = Ap (only with SideCondition::full).
ValidationReport check_side_condition(const MonadOnAB& m, SideCondition level = SideCondition::full,
                                      const ValidationOptions& opts = {});

// P = (Ap)(tB), E = k. Throws LawViolation on an invalid warping.
MonadOnAB warping_to_monad(const Warping& w);
// t = P(ABAe), k = E. Throws LawViolation when the side condition fails.
Warping monad_to_warping(const MonadOnAB& m);

// d = t(ApA)(kBA), q = t(AeA), j = k.
Wreath warping_to_wreath(const Warping& w);
// t = (Ap)(qB)(Ad), k = j.
Warping wreath_to_warping(const Wreath& w);
// Multiplication (Ap)(qB)(AAp)(AdB), unit j.
MonadOnAB wreath_to_monad(const Wreath& w);

// hom(x,y) = B(x,Ty), g * f = Tg o f, identities K_x.
FinCategory kleisli_category(const MwMonad& m);
// The same category reached through warping -> wreath -> monad on AB, with
// the carrier element [x f Ty * y] renamed to f.
FinCategory kleisli_via_wreath(const MwMonad& m);

// The monad (T^, mu, eta) on the base category carried by an F*-shaped wreath:
// T^ f from d, mu_y from q, eta_x = K_x from j.
struct ClassicalMonad {
  CategoryPtr base;
  FinFunction object_map;
  std::vector<std::size_t> fmap;  // global arrow -> global arrow
  std::vector<std::size_t> mu;    // index in hom(TTy, Ty)
  std::vector<std::size_t> eta;   // index in hom(x, Tx)
};
ClassicalMonad classical_monad(const Wreath& w);
// Axioms: 1 functor, 2 eta natural, 3 mu natural, 4 mu o T^mu = mu o mu T,
// 5 mu o eta T = 1, 6 mu o T^eta = 1.
ValidationReport validate_classical_monad(const ClassicalMonad& m, const ValidationOptions& opts = {});

// An algebra: module M: X -> Y with action m: MBA => MB.
struct WarpAlgebra {
  Warping warping;
  SpanPtr module;  // M
  Cell2 action;    // m

  friend bool operator==(const WarpAlgebra& a, const WarpAlgebra& b) {
    return a.warping == b.warping && same_span(a.module, b.module) && a.action == b.action;
  }
};

// Axioms: 1 m(MpA)(mBA) = (Mp)(mB)(MBt); 2 (Mp)(mB)(MBk) = 1[MB].
ValidationReport validate_algebra(const WarpAlgebra& a, const ValidationOptions& opts = {});
// M = A, m = t.
WarpAlgebra self_action(const Warping& w);

// E_z: B(z,a) -> B(Tz,a) for every z.
struct EFamily {
  MwMonad base;
  std::size_t object;  // a
  // maps[z][i]: index in hom(Tz,a) of E applied to hom(z,a)[i].
  std::vector<std::vector<std::size_t>> maps;

  friend bool operator==(const EFamily&, const EFamily&) = default;
};

// Axioms: 1 E(Eg o f) = Eg o Tf; 2 Eg o K_x = g.
ValidationReport validate_e_family(const EFamily& e, const ValidationOptions& opts = {});

inline const Atom kPointAtom = "pt";
// Shape: F*-shaped warping, Y = {pt}, M = a* for the constant map pt -> a.
EFamily algebra_as_e_family(const WarpAlgebra& a);
WarpAlgebra e_family_to_algebra(const EFamily& e);

struct EmAlgebra {
  ClassicalMonad monad;
  std::size_t object;  // a
  std::size_t action;  // index in hom(Ta, a)
};
// Axioms: 1 alpha o eta_a = 1_a; 2 alpha o mu_a = alpha o T^alpha.
ValidationReport validate_em_algebra(const EmAlgebra& a, const ValidationOptions& opts = {});
// alpha = E_a(1_a), using the classical monad of warping_to_wreath.
EmAlgebra algebra_to_em_algebra(const EFamily& e);
// E_z(g) = alpha o T^g.
EFamily em_algebra_to_e_family(const EmAlgebra& a, const MwMonad& base);

}  // namespace warp
