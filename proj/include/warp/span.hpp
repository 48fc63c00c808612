#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "warp/fincore.hpp"

namespace warp {

// One element of a (possibly composite) span, flattened:
//   x0 e1 x1 e2 x2 ... en xn
// pivots x_i alternate with entry atoms e_i. The first step is the factor
// applied first (the rightmost letter of a word), so the left factor comes
// last. Identity spans contribute no steps, which makes composition strictly
// associative and unital on these values.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Atom> atoms);

  static Path trivial(const Atom& object) { return Path(std::vector<Atom>{object}); }
  static Path step(const Atom& src, const Atom& entry, const Atom& dst) {
    return Path(std::vector<Atom>{src, entry, dst});
  }

  const Atom& source() const { return atoms_.front(); }
  const Atom& target() const { return atoms_.back(); }
  std::size_t arity() const noexcept { return atoms_.size() / 2; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const Atom& entry(std::size_t step) const { return atoms_.at(2 * step + 1); }
  const Atom& pivot(std::size_t i) const { return atoms_.at(2 * i); }

  // Steps [first, first + count) as a path of their own.
  Path slice(std::size_t first, std::size_t count) const;
  // This path followed by `next`; the shared pivot appears once.
  Path then(const Path& next) const;

  std::string str() const;

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;

 private:
  std::vector<Atom> atoms_;
};

class Span;
using SpanPtr = std::shared_ptr<const Span>;

// A 1-cell X -> Y of Span: for every (x, y) a finite set of paths from x to y,
// all of the same arity. Entries are kept sorted.
class Span {
 public:
  Span(FinSet src, FinSet dst, std::size_t arity, std::vector<std::vector<Path>> entries);

  const FinSet& src() const noexcept { return src_; }
  const FinSet& dst() const noexcept { return dst_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Path>& entry(std::size_t x, std::size_t y) const { return entries_.at(x * dst_.size() + y); }
  const std::vector<Path>& entry(const Atom& x, const Atom& y) const {
    return entry(src_.index_of(x), dst_.index_of(y));
  }
  const std::vector<std::vector<Path>>& entries() const noexcept { return entries_; }

  std::optional<std::size_t> find(const Path& p) const;
  // Position of p inside its entry; throws StructureError if absent.
  std::size_t position(const Path& p) const;
  std::size_t element_count() const noexcept { return index_.size(); }

  friend bool operator==(const Span& a, const Span& b) {
    return a.arity_ == b.arity_ && a.src_ == b.src_ && a.dst_ == b.dst_ && a.entries_ == b.entries_;
  }

 private:
  FinSet src_;
  FinSet dst_;
  std::size_t arity_;
  std::vector<std::vector<Path>> entries_;
  std::map<Path, std::size_t> index_;
};

// Whether two span handles denote equal values (pointer shortcut first).
bool same_span(const SpanPtr& a, const SpanPtr& b);

// Span whose entry (x,y) holds one step [x, atom, y] per listed atom.
SpanPtr generator_span(const FinSet& src, const FinSet& dst,
                       const std::map<std::pair<Atom, Atom>, std::vector<Atom>>& atoms);
SpanPtr identity_span(const FinSet& x);
// m after n: (mn)(x,y) = sum over z of m(z,y) x n(x,z).
SpanPtr compose_spans(const Span& m, const Span& n);
// For F: D -> C, the span C -> D with entry (c, d) = {"*"} iff F d = c.
SpanPtr restrict_star(const FinFunction& f);
inline const Atom kStarAtom = "*";

// A 2-cell between spans with the same frame: per entry a function on paths.
class Cell2 {
 public:
  Cell2() = default;
  // components[x * |Y| + y][i] is the cod position of the i-th dom path.
  Cell2(SpanPtr dom, SpanPtr cod, std::vector<std::vector<std::size_t>> components);

  static Cell2 identity(SpanPtr s);
  // Builds a cell from a path map; the image must lie in the same entry.
  static Cell2 from_function(SpanPtr dom, SpanPtr cod, const std::function<Path(const Path&)>& f);

  const Span& dom() const { return *dom_; }
  const Span& cod() const { return *cod_; }
  const SpanPtr& dom_ptr() const noexcept { return dom_; }
  const SpanPtr& cod_ptr() const noexcept { return cod_; }
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

  const Path& operator()(const Path& p) const;

  friend bool operator==(const Cell2& a, const Cell2& b) {
    return same_span(a.dom_, b.dom_) && same_span(a.cod_, b.cod_) && a.components_ == b.components_;
  }

 private:
  SpanPtr dom_;
  SpanPtr cod_;
  std::vector<std::vector<std::size_t>> components_;
};

// a after b; requires b.cod == a.dom.
Cell2 vcompose(const Cell2& a, const Cell2& b);
// left . c . right, acting as the identity on the whiskering factors. Either
// side may be null for an empty word.
Cell2 whisker(const SpanPtr& left, const Cell2& c, const SpanPtr& right);

struct CellComparison {
  bool equal = true;
  std::string witness;
  explicit operator bool() const noexcept { return equal; }
};

CellComparison cells_equal(const Cell2& a, const Cell2& b);

// Enumerates every cell dom => cod in odometer order.
class CellEnumerator {
 public:
  CellEnumerator(SpanPtr dom, SpanPtr cod);

  std::optional<Cell2> next();
  // Number of candidates, saturating at npos.
  std::size_t total() const noexcept { return total_; }

 private:
  SpanPtr dom_;
  SpanPtr cod_;
  std::vector<std::vector<std::size_t>> components_;
  bool done_ = false;
  std::size_t total_ = 1;
};

}  // namespace warp
