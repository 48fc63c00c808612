#include "warp/span.hpp"

#include <algorithm>

namespace warp {

Path::Path(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty() || atoms_.size() % 2 == 0)
    throw StructureError("a path alternates pivots and entries and starts and ends at a pivot");
}

Path Path::slice(std::size_t first, std::size_t count) const {
  if (first + count > arity()) throw StructureError("path slice out of range");
  return Path(std::vector<Atom>(atoms_.begin() + static_cast<std::ptrdiff_t>(2 * first),
                                atoms_.begin() + static_cast<std::ptrdiff_t>(2 * (first + count) + 1)));
}

Path Path::then(const Path& next) const {
  if (target() != next.source())
    throw StructureError("paths " + str() + " and " + next.str() + " do not meet");
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), next.atoms_.begin() + 1, next.atoms_.end());
  return Path(std::move(atoms));
}

std::string Path::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ' ';
    out += atoms_[i];
  }
  return out + "]";
}

Span::Span(FinSet src, FinSet dst, std::size_t arity, std::vector<std::vector<Path>> entries)
    : src_(std::move(src)), dst_(std::move(dst)), arity_(arity), entries_(std::move(entries)) {
  if (entries_.size() != src_.size() * dst_.size()) throw StructureError("span entries must cover src x dst");
  for (std::size_t x = 0; x < src_.size(); ++x)
    for (std::size_t y = 0; y < dst_.size(); ++y) {
      auto& e = entries_[x * dst_.size() + y];
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw StructureError("duplicate element in span entry (" + src_[x] + "," + dst_[y] + ")");
      for (std::size_t i = 0; i < e.size(); ++i) {
        const auto& p = e[i];
        if (p.arity() != arity_ || p.source() != src_[x] || p.target() != dst_[y])
          throw StructureError("element " + p.str() + " does not belong to entry (" + src_[x] + "," + dst_[y] + ")");
        index_.emplace(p, i);
      }
    }
}

std::optional<std::size_t> Span::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Span::position(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw StructureError("path " + p.str() + " is not an element of the span");
  return it->second;
}

bool same_span(const SpanPtr& a, const SpanPtr& b) { return a == b || (a && b && *a == *b); }

SpanPtr generator_span(const FinSet& src, const FinSet& dst,
                       const std::map<std::pair<Atom, Atom>, std::vector<Atom>>& atoms) {
  std::vector<std::vector<Path>> entries(src.size() * dst.size());
  for (const auto& [key, list] : atoms) {
    auto& e = entries.at(src.index_of(key.first) * dst.size() + dst.index_of(key.second));
    for (const auto& a : list) e.push_back(Path::step(key.first, a, key.second));
  }
  return std::make_shared<const Span>(src, dst, 1, std::move(entries));
}

SpanPtr identity_span(const FinSet& x) {
  std::vector<std::vector<Path>> entries(x.size() * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) entries[i * x.size() + i].push_back(Path::trivial(x[i]));
  return std::make_shared<const Span>(x, x, 0, std::move(entries));
}

SpanPtr compose_spans(const Span& m, const Span& n) {
  if (!(n.dst() == m.src())) throw StructureError("spans are not composable: inner target differs from outer source");
  const auto& xs = n.src();
  const auto& zs = n.dst();
  const auto& ys = m.dst();
  std::vector<std::vector<Path>> entries(xs.size() * ys.size());
  for (std::size_t x = 0; x < xs.size(); ++x)
    for (std::size_t y = 0; y < ys.size(); ++y) {
      auto& e = entries[x * ys.size() + y];
      for (std::size_t z = 0; z < zs.size(); ++z)
        for (const auto& pn : n.entry(x, z))
          for (const auto& pm : m.entry(z, y)) e.push_back(pn.then(pm));
    }
  return std::make_shared<const Span>(xs, ys, m.arity() + n.arity(), std::move(entries));
}

SpanPtr restrict_star(const FinFunction& f) {
  const auto& d = f.dom();
  const auto& c = f.cod();
  std::vector<std::vector<Path>> entries(c.size() * d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    entries[f(i) * d.size() + i].push_back(Path::step(c[f(i)], kStarAtom, d[i]));
  return std::make_shared<const Span>(c, d, 1, std::move(entries));
}

// ---------------------------------------------------------------------------
// Cell2

Cell2::Cell2(SpanPtr dom, SpanPtr cod, std::vector<std::vector<std::size_t>> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), components_(std::move(components)) {
  if (!dom_ || !cod_) throw StructureError("cell needs both spans");
  if (!(dom_->src() == cod_->src()) || !(dom_->dst() == cod_->dst()))
    throw StructureError("cell boundaries have different frames");
  if (components_.size() != dom_->entries().size()) throw StructureError("cell components must cover every entry");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].size() != dom_->entries()[k].size()) throw StructureError("cell component is not total");
    for (auto v : components_[k])
      if (v >= cod_->entries()[k].size()) throw StructureError("cell component leaves its entry");
  }
}

Cell2 Cell2::identity(SpanPtr s) {
  std::vector<std::vector<std::size_t>> comps;
  comps.reserve(s->entries().size());
  for (const auto& e : s->entries()) {
    std::vector<std::size_t> c(e.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    comps.push_back(std::move(c));
  }
  return Cell2(s, s, std::move(comps));
}

Cell2 Cell2::from_function(SpanPtr dom, SpanPtr cod, const std::function<Path(const Path&)>& f) {
  if (!(dom->src() == cod->src()) || !(dom->dst() == cod->dst()))
    throw StructureError("cell boundaries have different frames");
  std::vector<std::vector<std::size_t>> comps(dom->entries().size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& e = dom->entries()[k];
    for (const auto& p : e) {
      Path img = f(p);
      auto pos = cod->find(img);
      if (!pos || img.source() != p.source() || img.target() != p.target())
        throw StructureError("image " + img.str() + " of " + p.str() + " is not in the target entry");
      comps[k].push_back(*pos);
    }
  }
  return Cell2(std::move(dom), std::move(cod), std::move(comps));
}

const Path& Cell2::operator()(const Path& p) const {
  std::size_t x = dom_->src().index_of(p.source());
  std::size_t y = dom_->dst().index_of(p.target());
  std::size_t k = x * dom_->dst().size() + y;
  return cod_->entries()[k][components_[k][dom_->position(p)]];
}

Cell2 vcompose(const Cell2& a, const Cell2& b) {
  if (!same_span(b.cod_ptr(), a.dom_ptr()))
    throw StructureError("vertical composite: codomain of the first cell differs from domain of the second");
  std::vector<std::vector<std::size_t>> comps(b.components().size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    comps[k].reserve(b.components()[k].size());
    for (auto v : b.components()[k]) comps[k].push_back(a.components()[k][v]);
  }
  return Cell2(b.dom_ptr(), a.cod_ptr(), std::move(comps));
}

Cell2 whisker(const SpanPtr& left, const Cell2& c, const SpanPtr& right) {
  if (!left && !right) return c;
  auto wrap = [&](const SpanPtr& mid) {
    SpanPtr s = mid;
    if (right) s = compose_spans(*s, *right);
    if (left) s = compose_spans(*left, *s);
    return s;
  };
  SpanPtr dom = wrap(c.dom_ptr());
  SpanPtr cod = wrap(c.cod_ptr());
  const std::size_t r = right ? right->arity() : 0;
  const std::size_t mid = c.dom().arity();
  return Cell2::from_function(dom, cod, [&](const Path& p) {
    Path lower = p.slice(0, r);
    Path centre = p.slice(r, mid);
    Path upper = p.slice(r + mid, p.arity() - r - mid);
    return lower.then(c(centre)).then(upper);
  });
}

CellComparison cells_equal(const Cell2& a, const Cell2& b) {
  if (!same_span(a.dom_ptr(), b.dom_ptr())) return {false, "domains differ"};
  if (!same_span(a.cod_ptr(), b.cod_ptr())) return {false, "codomains differ"};
  for (std::size_t k = 0; k < a.components().size(); ++k)
    for (std::size_t i = 0; i < a.components()[k].size(); ++i)
      if (a.components()[k][i] != b.components()[k][i]) {
        const auto& p = a.dom().entries()[k][i];
        return {false, p.str() + " |-> " + a(p).str() + " vs " + b(p).str()};
      }
  return {};
}

CellEnumerator::CellEnumerator(SpanPtr dom, SpanPtr cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (!(dom_->src() == cod_->src()) || !(dom_->dst() == cod_->dst()))
    throw StructureError("cell boundaries have different frames");
  components_.resize(dom_->entries().size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    std::size_t from = dom_->entries()[k].size();
    std::size_t to = cod_->entries()[k].size();
    components_[k].assign(from, 0);
    if (from > 0 && to == 0) done_ = true;
    for (std::size_t i = 0; i < from; ++i) {
      if (total_ != npos && to != 0 && total_ > npos / to)
        total_ = npos;
      else if (total_ != npos)
        total_ *= to;
    }
  }
  if (done_) total_ = 0;
}

std::optional<Cell2> CellEnumerator::next() {
  if (done_) return std::nullopt;
  Cell2 out(dom_, cod_, components_);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const std::size_t to = cod_->entries()[k].size();
    for (auto& digit : components_[k]) {
      if (++digit < to) return out;
      digit = 0;
    }
  }
  done_ = true;
  return out;
}

}  // namespace warp
