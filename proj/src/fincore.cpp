#include "warp/fincore.hpp"

#include <algorithm>
#include <sstream>

namespace warp {

FinSet::FinSet(std::initializer_list<Atom> atoms) : FinSet(std::vector<Atom>(atoms)) {}

FinSet::FinSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  auto dup = std::adjacent_find(atoms_.begin(), atoms_.end());
  if (dup != atoms_.end()) throw StructureError("duplicate atom '" + *dup + "' in finite set");
}

std::optional<std::size_t> FinSet::find(const Atom& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t FinSet::index_of(const Atom& a) const {
  auto i = find(a);
  if (!i) throw StructureError("atom '" + a + "' is not an element");
  return *i;
}

FinFunction::FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_.size()) throw StructureError("function is not total on its domain");
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] >= cod_.size())
      throw StructureError("image of '" + dom_[i] + "' lies outside the codomain");
}

FinFunction FinFunction::from_atoms(FinSet dom, FinSet cod, const std::map<Atom, Atom>& assignment) {
  std::vector<std::size_t> images;
  images.reserve(dom.size());
  for (const auto& a : dom) {
    auto it = assignment.find(a);
    if (it == assignment.end()) throw StructureError("no image given for '" + a + "'");
    images.push_back(cod.index_of(it->second));
  }
  if (assignment.size() != dom.size()) throw StructureError("assignment mentions atoms outside the domain");
  return FinFunction(std::move(dom), std::move(cod), std::move(images));
}

FinFunction FinFunction::identity(const FinSet& s) {
  std::vector<std::size_t> images(s.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return FinFunction(s, s, std::move(images));
}

FinFunction FinFunction::then(const FinFunction& next) const {
  if (!(cod_ == next.dom_)) throw StructureError("functions are not composable");
  std::vector<std::size_t> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = next.images_[images_[i]];
  return FinFunction(dom_, next.cod_, std::move(images));
}

FunctionEnumerator::FunctionEnumerator(FinSet a, FinSet b)
    : a_(std::move(a)), b_(std::move(b)), digits_(a_.size(), 0) {
  done_ = !a_.empty() && b_.empty();
  total_ = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (b_.size() != 0 && total_ > npos / b_.size()) {
      total_ = npos;
      break;
    }
    total_ *= b_.size();
  }
}

std::optional<FinFunction> FunctionEnumerator::next() {
  if (done_) return std::nullopt;
  FinFunction out(a_, b_, digits_);
  std::size_t i = 0;
  while (i < digits_.size()) {
    if (++digits_[i] < b_.size()) break;
    digits_[i] = 0;
    ++i;
  }
  if (i == digits_.size()) done_ = true;
  return out;
}

std::vector<FinFunction> enumerate_functions(const FinSet& a, const FinSet& b) {
  std::vector<FinFunction> out;
  FunctionEnumerator en(a, b);
  while (auto f = en.next()) out.push_back(std::move(*f));
  return out;
}

// ---------------------------------------------------------------------------
// FinCategory

FinCategory::Builder::Builder(FinSet objects)
    : objects_(std::move(objects)), homs_(objects_.size() * objects_.size()) {}

FinCategory::Builder& FinCategory::Builder::hom(const Atom& x, const Atom& y, FinSet arrows) {
  homs_.at(objects_.index_of(x) * objects_.size() + objects_.index_of(y)) = std::move(arrows);
  return *this;
}

FinCategory::Builder& FinCategory::Builder::identity(const Atom& x, const Atom& arrow) {
  std::size_t xi = objects_.index_of(x);
  const auto& h = homs_[xi * objects_.size() + xi];
  if (auto i = h.find(arrow)) {
    identities_[xi] = *i;
  } else {
    defects_.push_back("identity '" + arrow + "' of " + x + " is not in hom(" + x + "," + x + ")");
  }
  return *this;
}

FinCategory::Builder& FinCategory::Builder::compose(const Atom& x, const Atom& y, const Atom& z,
                                                    const Atom& g, const Atom& f, const Atom& gf) {
  entries_.push_back({objects_.index_of(x), objects_.index_of(y), objects_.index_of(z), g, f, gf});
  return *this;
}

FinCategory FinCategory::Builder::build() const {
  const std::size_t n = objects_.size();
  std::vector<std::vector<std::size_t>> comp(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        comp[(x * n + y) * n + z].assign(homs_[y * n + z].size() * homs_[x * n + y].size(), npos);
  std::vector<std::string> defects = defects_;
  for (const auto& e : entries_) {
    const auto& hxy = homs_[e.x * n + e.y];
    const auto& hyz = homs_[e.y * n + e.z];
    const auto& hxz = homs_[e.x * n + e.z];
    auto where = "(" + objects_[e.x] + "," + objects_[e.y] + "," + objects_[e.z] + ")";
    auto fi = hxy.find(e.f);
    auto gi = hyz.find(e.g);
    if (!fi || !gi) {
      defects.push_back("composite " + e.g + " o " + e.f + " at " + where + " names an unknown arrow");
      continue;
    }
    auto ri = hxz.find(e.gf);
    if (!ri) {
      defects.push_back("composite " + e.g + " o " + e.f + " = " + e.gf + " at " + where +
                        " lies outside hom(" + objects_[e.x] + "," + objects_[e.z] + ")");
      continue;
    }
    comp[(e.x * n + e.y) * n + e.z][*gi * hxy.size() + *fi] = *ri;
  }
  std::vector<std::size_t> ident(n, npos);
  for (const auto& [x, i] : identities_) ident[x] = i;
  return FinCategory(objects_, homs_, std::move(comp), std::move(ident), std::move(defects));
}

FinCategory::FinCategory(FinSet objects, std::vector<FinSet> homs,
                         std::vector<std::vector<std::size_t>> comp, std::vector<std::size_t> identities,
                         std::vector<std::string> defects)
    : objects_(std::move(objects)),
      homs_(std::move(homs)),
      comp_(std::move(comp)),
      identities_(std::move(identities)),
      defects_(std::move(defects)) {
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n) throw StructureError("hom table must have an entry for every pair of objects");
  if (comp_.size() != n * n * n) throw StructureError("composition table must cover every triple");
  if (identities_.size() != n) throw StructureError("identity table must cover every object");
  offsets_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      offsets_[x * n + y] = arrows_.size();
      for (std::size_t i = 0; i < homs_[x * n + y].size(); ++i) arrows_.push_back({x, y, i});
    }
}

std::size_t FinCategory::compose(std::size_t x, std::size_t y, std::size_t z, std::size_t g,
                                 std::size_t f) const {
  const std::size_t n = objects_.size();
  const auto& table = comp_.at((x * n + y) * n + z);
  std::size_t slot = g * hom(x, y).size() + f;
  return slot < table.size() ? table[slot] : npos;
}

std::size_t FinCategory::compose_global(std::size_t g, std::size_t f) const {
  const auto& ga = arrows_.at(g);
  const auto& fa = arrows_.at(f);
  if (fa.dst != ga.src) throw StructureError("arrows are not composable");
  std::size_t r = compose(fa.src, fa.dst, ga.dst, ga.index, fa.index);
  if (r == npos) throw StructureError("composition table has a hole");
  return global(fa.src, ga.dst, r);
}

const Atom& FinCategory::arrow_name(std::size_t global) const {
  const auto& a = arrows_.at(global);
  return hom(a.src, a.dst)[a.index];
}

namespace {

std::string arrow_label(const FinCategory& c, std::size_t x, std::size_t y, std::size_t i) {
  return c.hom(x, y)[i] + ":" + c.objects()[x] + "->" + c.objects()[y];
}

}  // namespace

ValidationReport validate_category(const FinCategory& c, const ValidationOptions& opts) {
  ValidationReport report(opts);
  for (const auto& d : c.defects()) report.add_structural(d);
  const std::size_t n = c.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t id = c.identity(x);
    if (id == npos || id >= c.hom(x, x).size())
      report.add_structural("object " + c.objects()[x] + " has no identity in hom(" + c.objects()[x] +
                            "," + c.objects()[x] + ")");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < c.hom(y, z).size(); ++g)
          for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
            std::size_t r = c.compose(x, y, z, g, f);
            if (r == npos)
              report.add_structural("composite " + arrow_label(c, y, z, g) + " o " + arrow_label(c, x, y, f) +
                                    " is missing");
            else if (r >= c.hom(x, z).size())
              report.add_structural("composite " + arrow_label(c, y, z, g) + " o " + arrow_label(c, x, y, f) +
                                    " lies outside its hom-set");
          }
  if (!report.structurally_sound()) return report;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
        if (c.compose(x, y, y, c.identity(y), f) != f)
          report.add_violation(1, "left unit", "1_" + c.objects()[y] + " o " + arrow_label(c, x, y, f));
        if (c.compose(x, x, y, f, c.identity(x)) != f)
          report.add_violation(2, "right unit", arrow_label(c, x, y, f) + " o 1_" + c.objects()[x]);
      }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t h = 0; h < c.hom(y, z).size(); ++h)
            for (std::size_t g = 0; g < c.hom(x, y).size(); ++g)
              for (std::size_t f = 0; f < c.hom(w, x).size(); ++f) {
                std::size_t left = c.compose(w, x, z, c.compose(x, y, z, h, g), f);
                std::size_t right = c.compose(w, y, z, h, c.compose(w, x, y, g, f));
                if (left != right)
                  report.add_violation(3, "associativity",
                                       "(" + arrow_label(c, y, z, h) + ", " + arrow_label(c, x, y, g) + ", " +
                                           arrow_label(c, w, x, f) + ")");
              }
  return report;
}

FinCategory discrete_category(const FinSet& objects) {
  FinCategory::Builder b(objects);
  for (const auto& x : objects) {
    Atom id = "1_" + x;
    b.hom(x, x, FinSet{id}).identity(x, id).compose(x, x, x, id, id, id);
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

FinFunctor::FinFunctor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> obj_map,
                       std::vector<std::size_t> mor_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), obj_map_(std::move(obj_map)), mor_map_(std::move(mor_map)) {
  if (!dom_ || !cod_) throw StructureError("functor needs both categories");
  if (obj_map_.size() != dom_->object_count()) throw StructureError("functor object map is not total");
  if (mor_map_.size() != dom_->arrow_count()) throw StructureError("functor arrow map is not total");
}

FinFunctor FinFunctor::identity(CategoryPtr c) {
  std::vector<std::size_t> obj(c->object_count()), mor(c->arrow_count());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i;
  for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = i;
  return FinFunctor(c, c, std::move(obj), std::move(mor));
}

ValidationReport validate_functor(const FinFunctor& f, const ValidationOptions& opts) {
  ValidationReport report(opts);
  const auto& dom = f.dom();
  const auto& cod = f.cod();
  for (std::size_t x = 0; x < dom.object_count(); ++x)
    if (f.object(x) >= cod.object_count())
      report.add_structural("object " + dom.objects()[x] + " is sent outside the codomain");
  if (!report.structurally_sound()) return report;
  for (std::size_t a = 0; a < dom.arrow_count(); ++a) {
    const auto& arr = dom.arrow(a);
    std::size_t img = f.arrow(a);
    if (img >= cod.arrow_count()) {
      report.add_structural("arrow " + dom.arrow_name(a) + " is sent outside the codomain");
      continue;
    }
    const auto& ia = cod.arrow(img);
    if (ia.src != f.object(arr.src) || ia.dst != f.object(arr.dst))
      report.add_structural("arrow " + dom.arrow_name(a) + " is sent to " + cod.arrow_name(img) +
                            " with the wrong endpoints");
  }
  if (!report.structurally_sound()) return report;
  for (std::size_t x = 0; x < dom.object_count(); ++x)
    if (f.arrow(dom.identity_global(x)) != cod.identity_global(f.object(x)))
      report.add_violation(1, "preserves identities", "object " + dom.objects()[x]);
  for (std::size_t g = 0; g < dom.arrow_count(); ++g)
    for (std::size_t h = 0; h < dom.arrow_count(); ++h) {
      if (dom.arrow(h).dst != dom.arrow(g).src) continue;
      std::size_t lhs = f.arrow(dom.compose_global(g, h));
      std::size_t rhs = cod.compose_global(f.arrow(g), f.arrow(h));
      if (lhs != rhs)
        report.add_violation(2, "preserves composition",
                             "(" + dom.arrow_name(g) + ", " + dom.arrow_name(h) + ")");
    }
  return report;
}

std::vector<FinFunctor> enumerate_functors(const CategoryPtr& dom, const CategoryPtr& cod) {
  std::vector<FinFunctor> out;
  const std::size_t n = dom->object_count();
  const std::size_t m = cod->object_count();
  if (n > 0 && m == 0) return out;
  std::vector<std::size_t> obj(n, 0);
  for (;;) {
    // Arrow images range over the hom-set fixed by the object map; identities
    // are forced.
    std::vector<std::size_t> mor(dom->arrow_count(), 0);
    std::vector<std::size_t> free;
    bool possible = true;
    for (std::size_t a = 0; a < dom->arrow_count(); ++a) {
      const auto& arr = dom->arrow(a);
      const auto& target = cod->hom(obj[arr.src], obj[arr.dst]);
      if (target.empty()) {
        possible = false;
        break;
      }
      if (arr.src == arr.dst && arr.index == dom->identity(arr.src))
        mor[a] = cod->identity_global(obj[arr.src]);
      else {
        mor[a] = cod->global(obj[arr.src], obj[arr.dst], 0);
        free.push_back(a);
      }
    }
    if (possible) {
      std::vector<std::size_t> digit(free.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) {
          const auto& arr = dom->arrow(free[i]);
          mor[free[i]] = cod->global(obj[arr.src], obj[arr.dst], digit[i]);
        }
        FinFunctor candidate(dom, cod, obj, mor);
        if (validate_functor(candidate, {1}).valid()) out.push_back(std::move(candidate));
        std::size_t i = 0;
        while (i < free.size()) {
          const auto& arr = dom->arrow(free[i]);
          if (++digit[i] < cod->hom(obj[arr.src], obj[arr.dst]).size()) break;
          digit[i] = 0;
          ++i;
        }
        if (i == free.size()) break;
      }
    }
    std::size_t i = 0;
    while (i < n) {
      if (++obj[i] < m) break;
      obj[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

FinNatTrans::FinNatTrans(FinFunctor from, FinFunctor to, std::vector<std::size_t> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  if (!(*from_.dom_ptr() == *to_.dom_ptr()) || !(*from_.cod_ptr() == *to_.cod_ptr()))
    throw StructureError("natural transformation between non-parallel functors");
  if (components_.size() != from_.dom().object_count())
    throw StructureError("natural transformation needs one component per object");
}

ValidationReport validate_nat_trans(const FinNatTrans& n, const ValidationOptions& opts) {
  ValidationReport report(opts);
  const auto& dom = n.from().dom();
  const auto& cod = n.from().cod();
  for (std::size_t x = 0; x < dom.object_count(); ++x) {
    std::size_t c = n.component(x);
    if (c >= cod.arrow_count() || cod.arrow(c).src != n.from().object(x) ||
        cod.arrow(c).dst != n.to().object(x))
      report.add_structural("component at " + dom.objects()[x] + " is not an arrow F x -> G x");
  }
  if (!report.structurally_sound()) return report;
  for (std::size_t a = 0; a < dom.arrow_count(); ++a) {
    const auto& arr = dom.arrow(a);
    std::size_t lhs = cod.compose_global(n.to().arrow(a), n.component(arr.src));
    std::size_t rhs = cod.compose_global(n.component(arr.dst), n.from().arrow(a));
    if (lhs != rhs)
      report.add_violation(1, "naturality",
                           "square at " + dom.arrow_name(a) + ": " + dom.objects()[arr.src] + " -> " +
                               dom.objects()[arr.dst]);
  }
  return report;
}

}  // namespace warp

namespace warp {

std::vector<FinCategory> enumerate_categories(const FinSet& objects, const std::vector<FinSet>& homs,
                                              std::size_t limit) {
  const std::size_t n = objects.size();
  if (homs.size() != n * n) throw StructureError("hom family must cover every pair of objects");
  std::vector<FinCategory> out;
  for (std::size_t x = 0; x < n; ++x)
    if (homs[x * n + x].empty()) return out;

  // Identities first; unit laws then fix every slot with an identity factor.
  std::vector<std::size_t> ident(n, 0);
  std::size_t total_ident = 1;
  for (std::size_t x = 0; x < n; ++x) total_ident *= homs[x * n + x].size();

  struct Slot {
    std::size_t table, pos, range;
  };
  for (std::size_t id_count = 0; id_count < total_ident; ++id_count) {
    std::vector<std::vector<std::size_t>> comp(n * n * n);
    std::vector<Slot> free;
    bool possible = true;
    std::size_t candidates = 1;
    for (std::size_t x = 0; x < n && possible; ++x)
      for (std::size_t y = 0; y < n && possible; ++y)
        for (std::size_t z = 0; z < n && possible; ++z) {
          const auto& hxy = homs[x * n + y];
          const auto& hyz = homs[y * n + z];
          const auto& hxz = homs[x * n + z];
          std::size_t t = (x * n + y) * n + z;
          comp[t].assign(hyz.size() * hxy.size(), npos);
          for (std::size_t g = 0; g < hyz.size(); ++g)
            for (std::size_t f = 0; f < hxy.size(); ++f) {
              std::size_t pos = g * hxy.size() + f;
              if (y == z && g == ident[y])
                comp[t][pos] = f;
              else if (x == y && f == ident[x])
                comp[t][pos] = g;
              else if (hxz.empty())
                possible = false;
              else {
                free.push_back({t, pos, hxz.size()});
                if (candidates > limit / hxz.size() + 1) candidates = npos;
                else candidates *= hxz.size();
              }
            }
        }
    if (possible) {
      if (candidates == npos || candidates > limit)
        throw LimitExceeded("category enumeration exceeds the candidate limit of " + std::to_string(limit));
      std::vector<std::size_t> digit(free.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) comp[free[i].table][free[i].pos] = digit[i];
        FinCategory c(objects, homs, comp, ident);
        if (validate_category(c, {1}).valid()) out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < free.size()) {
          if (++digit[i] < free[i].range) break;
          digit[i] = 0;
          ++i;
        }
        if (i == free.size()) break;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (++ident[x] < homs[x * n + x].size()) break;
      ident[x] = 0;
    }
  }
  return out;
}

}  // namespace warp
