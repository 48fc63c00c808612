#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "warp/fincore.hpp"
#include "warp/pasting.hpp"
#include "warp/span.hpp"

namespace warp {

// A monad (X, B) in Span: carrier B: X -> X, p: BB => B, e: 1 => B.
// Values only exist when the monad laws hold.
class SpanMonad {
 public:
  // Throws LawViolation (or StructureError on frame mismatch).
  static SpanMonad make(SpanPtr carrier, Cell2 mult, Cell2 unit);
  // Law check without constructing; axioms 1 associativity, 2 left unit,
  // 3 right unit.
  static ValidationReport check(const SpanPtr& carrier, const Cell2& mult, const Cell2& unit,
                                const ValidationOptions& opts = {});

  const FinSet& objects() const { return carrier_->src(); }
  const SpanPtr& carrier() const noexcept { return carrier_; }
  const Cell2& mult() const noexcept { return mult_; }
  const Cell2& unit() const noexcept { return unit_; }

  friend bool operator==(const SpanMonad& a, const SpanMonad& b) {
    return same_span(a.carrier_, b.carrier_) && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  SpanMonad(SpanPtr carrier, Cell2 mult, Cell2 unit)
      : carrier_(std::move(carrier)), mult_(std::move(mult)), unit_(std::move(unit)) {}
  SpanPtr carrier_;
  Cell2 mult_;
  Cell2 unit_;
};

// Environment with generators A, B and cells p, e of the base.
PastingEnv base_env(const SpanMonad& base, const SpanPtr& endo);

struct Warping {
  SpanMonad base;
  SpanPtr endo;  // A
  Cell2 t;       // ABA => AB
  Cell2 k;       // 1 => AB

  friend bool operator==(const Warping& a, const Warping& b) {
    return a.base == b.base && same_span(a.endo, b.endo) && a.t == b.t && a.k == b.k;
  }
};

struct Wreath {
  SpanMonad base;
  SpanPtr endo;  // A
  Cell2 d;       // BA => AB
  Cell2 q;       // AA => AB
  Cell2 j;       // 1 => AB

  friend bool operator==(const Wreath& a, const Wreath& b) {
    return a.base == b.base && same_span(a.endo, b.endo) && a.d == b.d && a.q == b.q && a.j == b.j;
  }
};

// Extension-form monad on a finite category.
struct MwMonad {
  CategoryPtr base;
  FinFunction object_map;  // T
  // ext[x*n + y][i]: index in hom(Tx,Ty) of T applied to hom(x,Ty)[i].
  std::vector<std::vector<std::size_t>> ext;
  // units[x]: index of K_x in hom(x,Tx).
  std::vector<std::size_t> units;

  std::size_t apply(std::size_t x, std::size_t y, std::size_t f) const {
    return ext.at(x * base->object_count() + y).at(f);
  }

  friend bool operator==(const MwMonad& a, const MwMonad& b) {
    return *a.base == *b.base && a.object_map == b.object_map && a.ext == b.ext && a.units == b.units;
  }
};

SpanMonad category_to_monad(const FinCategory& c);
// Hom atoms are the carrier elements: the entry atom for one-step paths,
// otherwise the inner atoms joined with '.'.
FinCategory monad_to_category(const SpanMonad& m);
Atom carrier_atom(const Path& p);
FinCategory monad_to_category(const SpanMonad& m, const std::function<Atom(const Path&)>& name);

PastingEnv warping_env(const Warping& w);
PastingEnv wreath_env(const Wreath& w);

// Axioms: 1 t(ApA)(tBA) = (Ap)(tB)(ABt); 2 t(kA) = Ae; 3 (Ap)(tB)(ABk) = 1.
ValidationReport validate_warping(const Warping& w, const ValidationOptions& opts = {});
// Axioms 1..7, see the table in monadwarp.cpp.
ValidationReport validate_wreath(const Wreath& w, const ValidationOptions& opts = {});
// Axioms: 1 T(Tg o f) = Tg o Tf; 2 T K_x = 1; 3 f = Tf o K_x.
ValidationReport validate_mw_monad(const MwMonad& m, const ValidationOptions& opts = {});

struct AxiomEquation {
  int axiom;
  const char* law;
  const char* lhs;
  const char* rhs;
};
const std::vector<AxiomEquation>& warping_axioms();
const std::vector<AxiomEquation>& wreath_axioms();

// The function T when the span is literally F* for some F; nullopt otherwise.
std::optional<FinFunction> star_shape(const Span& a);
// Also accepts the identity span, the strict form of id*.
std::optional<FinFunction> endo_shape(const Span& a);
// The element of A(Tz, z): [Tz * z], or [z] for the identity span.
Path endo_element(const Span& a, const Atom& tz, const Atom& z);

// Throws StructureError when the endo is not of F* shape.
MwMonad mw_view(const Warping& w);
Warping mw_to_warping(const MwMonad& m);

Warping identity_warping(const SpanMonad& base);
Wreath identity_wreath(const SpanMonad& base);
MwMonad identity_mw_monad(const CategoryPtr& c);

}  // namespace warp
