#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "warp/report.hpp"

namespace warp {

using Atom = std::string;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// A finite set of atoms. Elements are kept sorted, so two sets with the same
// atoms are the same value and iterate identically.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Atom> atoms);
  explicit FinSet(std::vector<Atom> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }

  std::optional<std::size_t> find(const Atom& a) const;
  bool contains(const Atom& a) const { return find(a).has_value(); }
  // Throws StructureError when `a` is not an element.
  std::size_t index_of(const Atom& a) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Atom> atoms_;
};

class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> images);

  static FinFunction from_atoms(FinSet dom, FinSet cod, const std::map<Atom, Atom>& assignment);
  static FinFunction identity(const FinSet& s);

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const Atom& operator()(const Atom& a) const { return cod_[images_.at(dom_.index_of(a))]; }

  // Composite `next` after `*this`.
  FinFunction then(const FinFunction& next) const;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> images_;
};

// Yields every total function a -> b exactly once, in odometer order with the
// first domain element varying fastest.
class FunctionEnumerator {
 public:
  FunctionEnumerator(FinSet a, FinSet b);

  std::optional<FinFunction> next();
  // |b|^|a|, saturating at npos.
  std::size_t total() const noexcept { return total_; }

 private:
  FinSet a_;
  FinSet b_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
  std::size_t total_ = 0;
};

std::vector<FinFunction> enumerate_functions(const FinSet& a, const FinSet& b);

// A finite category. Tables are stored raw so that malformed input can be
// represented and diagnosed by validate_category; every other operation
// assumes the category is valid.
class FinCategory {
 public:
  struct Arrow {
    std::size_t src;
    std::size_t dst;
    std::size_t index;
  };

  class Builder {
   public:
    explicit Builder(FinSet objects);
    Builder& hom(const Atom& x, const Atom& y, FinSet arrows);
    Builder& identity(const Atom& x, const Atom& arrow);
    // Records g o f = gf for f: x -> y and g: y -> z.
    Builder& compose(const Atom& x, const Atom& y, const Atom& z, const Atom& g, const Atom& f,
                     const Atom& gf);
    FinCategory build() const;

   private:
    FinSet objects_;
    std::vector<FinSet> homs_;
    std::map<std::size_t, std::size_t> identities_;
    struct Entry {
      std::size_t x, y, z;
      Atom g, f, gf;
    };
    std::vector<Entry> entries_;
    std::vector<std::string> defects_;
  };

  FinCategory() = default;
  // comp[(x*n + y)*n + z] is a |hom(y,z)| x |hom(x,y)| table, row-major in g.
  FinCategory(FinSet objects, std::vector<FinSet> homs, std::vector<std::vector<std::size_t>> comp,
              std::vector<std::size_t> identities, std::vector<std::string> defects = {});

  const FinSet& objects() const noexcept { return objects_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  const FinSet& hom(std::size_t x, std::size_t y) const { return homs_.at(x * objects_.size() + y); }
  const FinSet& hom(const Atom& x, const Atom& y) const {
    return hom(objects_.index_of(x), objects_.index_of(y));
  }
  // g o f for f in hom(x,y), g in hom(y,z); npos where the table has a hole.
  std::size_t compose(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f) const;
  std::size_t identity(std::size_t x) const { return identities_.at(x); }

  // Global numbering of all arrows, hom by hom in (src, dst) order.
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t global) const { return arrows_.at(global); }
  std::size_t global(std::size_t x, std::size_t y, std::size_t i) const {
    return offsets_.at(x * objects_.size() + y) + i;
  }
  std::size_t compose_global(std::size_t g, std::size_t f) const;  // requires composable
  std::size_t identity_global(std::size_t x) const { return global(x, x, identity(x)); }
  const Atom& arrow_name(std::size_t global) const;

  const std::vector<FinSet>& homs() const noexcept { return homs_; }
  const std::vector<std::vector<std::size_t>>& composition_tables() const noexcept { return comp_; }
  const std::vector<std::size_t>& identities() const noexcept { return identities_; }
  const std::vector<std::string>& defects() const noexcept { return defects_; }

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.objects_ == b.objects_ && a.homs_ == b.homs_ && a.comp_ == b.comp_ &&
           a.identities_ == b.identities_;
  }

 private:
  FinSet objects_;
  std::vector<FinSet> homs_;
  std::vector<std::vector<std::size_t>> comp_;
  std::vector<std::size_t> identities_;
  std::vector<std::string> defects_;
  std::vector<std::size_t> offsets_;
  std::vector<Arrow> arrows_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

ValidationReport validate_category(const FinCategory& c, const ValidationOptions& opts = {});

// The discrete category on a set: one identity per object, named "1_<x>".
FinCategory discrete_category(const FinSet& objects);

class FinFunctor {
 public:
  FinFunctor() = default;
  // mor_map is indexed by global arrow number of dom and holds global arrow
  // numbers of cod.
  FinFunctor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> obj_map,
             std::vector<std::size_t> mor_map);

  static FinFunctor identity(CategoryPtr c);

  const FinCategory& dom() const { return *dom_; }
  const FinCategory& cod() const { return *cod_; }
  const CategoryPtr& dom_ptr() const noexcept { return dom_; }
  const CategoryPtr& cod_ptr() const noexcept { return cod_; }
  std::size_t object(std::size_t x) const { return obj_map_.at(x); }
  std::size_t arrow(std::size_t global) const { return mor_map_.at(global); }
  const std::vector<std::size_t>& object_map() const noexcept { return obj_map_; }
  const std::vector<std::size_t>& arrow_map() const noexcept { return mor_map_; }

  friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_ && a.obj_map_ == b.obj_map_ &&
           a.mor_map_ == b.mor_map_;
  }

 private:
  CategoryPtr dom_;
  CategoryPtr cod_;
  std::vector<std::size_t> obj_map_;
  std::vector<std::size_t> mor_map_;
};

ValidationReport validate_functor(const FinFunctor& f, const ValidationOptions& opts = {});

// Every functor dom -> cod, by search over object maps and arrow images.
std::vector<FinFunctor> enumerate_functors(const CategoryPtr& dom, const CategoryPtr& cod);

class FinNatTrans {
 public:
  // components[x] is a global arrow of cod from F x to G x.
  FinNatTrans(FinFunctor from, FinFunctor to, std::vector<std::size_t> components);

  const FinFunctor& from() const noexcept { return from_; }
  const FinFunctor& to() const noexcept { return to_; }
  std::size_t component(std::size_t x) const { return components_.at(x); }
  const std::vector<std::size_t>& components() const noexcept { return components_; }

 private:
  FinFunctor from_;
  FinFunctor to_;
  std::vector<std::size_t> components_;
};

ValidationReport validate_nat_trans(const FinNatTrans& n, const ValidationOptions& opts = {});

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every category structure (identities and composition) on a fixed family of
// hom-sets, homs[x*n + y]. Throws LimitExceeded when the raw candidate count
// is above `limit`.
std::vector<FinCategory> enumerate_categories(const FinSet& objects, const std::vector<FinSet>& homs,
                                              std::size_t limit);

}  // namespace warp
