#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "warp/correspond.hpp"
#include "warp/enumerate.hpp"
#include "warp/fincore.hpp"
#include "warp/io.hpp"
#include "warp/skew.hpp"

namespace testing {

using namespace warp;

// Z/2 on one object o: arrows 1 and s with s s = 1.
inline CategoryPtr z2() {
  FinCategory::Builder b(FinSet{"o"});
  b.hom("o", "o", FinSet{"1", "s"}).identity("o", "1");
  b.compose("o", "o", "o", "1", "1", "1").compose("o", "o", "o", "1", "s", "s");
  b.compose("o", "o", "o", "s", "1", "s").compose("o", "o", "o", "s", "s", "1");
  return std::make_shared<const FinCategory>(b.build());
}

// The idempotent monoid {1, e}: e e = e.
inline CategoryPtr idem() {
  FinCategory::Builder b(FinSet{"o"});
  b.hom("o", "o", FinSet{"1", "e"}).identity("o", "1");
  b.compose("o", "o", "o", "1", "1", "1").compose("o", "o", "o", "1", "e", "e");
  b.compose("o", "o", "o", "e", "1", "e").compose("o", "o", "o", "e", "e", "e");
  return std::make_shared<const FinCategory>(b.build());
}

// The arrow category 0 -> 1.
inline CategoryPtr p1() {
  FinCategory::Builder b(FinSet{"0", "1"});
  b.hom("0", "0", FinSet{"id0"}).hom("0", "1", FinSet{"u"}).hom("1", "0", FinSet{}).hom("1", "1", FinSet{"id1"});
  b.identity("0", "id0").identity("1", "id1");
  b.compose("0", "0", "0", "id0", "id0", "id0").compose("0", "0", "1", "u", "id0", "u");
  b.compose("0", "1", "1", "id1", "u", "u").compose("1", "1", "1", "id1", "id1", "id1");
  return std::make_shared<const FinCategory>(b.build());
}

// P1 with T constant at 1: the only structure has K_0 = u, K_1 = id1.
inline MwMonad p1_const() {
  MwMonad m;
  m.base = p1();
  m.object_map = FinFunction(m.base->objects(), m.base->objects(), {1, 1});
  m.ext.assign(4, {});
  // hom(x, T y) = hom(x, 1), sent into hom(1, 1) = {id1}
  m.ext[0 * 2 + 0] = {0};
  m.ext[0 * 2 + 1] = {0};
  m.ext[1 * 2 + 0] = {0};
  m.ext[1 * 2 + 1] = {0};
  m.units = {0, 0};
  return m;
}

inline std::string fixture_dir() { return WARP_FIXTURE_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json load_fixture(const std::string& name) { return parse_document(read_file(fixture_dir() + "/" + name)); }

inline std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force count of mw-monads with object map T over c, straight from the
// three equations on raw tables.
inline std::size_t count_mw_by_hand(const FinCategory& c, const std::vector<std::size_t>& T) {
  const std::size_t n = c.object_count();
  // slots: one ext image for each (x, y, f in hom(x,Ty)), one unit per x
  std::vector<std::size_t> sizes;
  std::vector<std::array<std::size_t, 3>> ext_slot;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < c.hom(x, T[y]).size(); ++f) {
        ext_slot.push_back({x, y, f});
        sizes.push_back(c.hom(T[x], T[y]).size());
      }
  for (std::size_t x = 0; x < n; ++x) sizes.push_back(c.hom(x, T[x]).size());
  for (auto s : sizes)
    if (s == 0) return 0;
  std::vector<std::size_t> d(sizes.size(), 0);
  std::size_t count = 0;
  auto ext = [&](std::size_t x, std::size_t y, std::size_t f) {
    for (std::size_t i = 0; i < ext_slot.size(); ++i)
      if (ext_slot[i] == std::array<std::size_t, 3>{x, y, f}) return d[i];
    return npos;
  };
  auto unit = [&](std::size_t x) { return d[ext_slot.size() + x]; };
  for (;;) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      // T K_x = 1
      if (ext(x, x, unit(x)) != c.identity(T[x])) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t f = 0; f < c.hom(x, T[y]).size() && ok; ++f) {
          // f = Tf o K_x
          if (c.compose(x, T[x], T[y], ext(x, y, f), unit(x)) != f) ok = false;
          for (std::size_t z = 0; z < n && ok; ++z)
            for (std::size_t g = 0; g < c.hom(y, T[z]).size() && ok; ++g) {
              auto tg = ext(y, z, g);
              auto lhs = ext(x, z, c.compose(x, T[y], T[z], tg, f));
              auto rhs = c.compose(T[x], T[y], T[z], tg, ext(x, y, f));
              if (lhs != rhs) ok = false;
            }
        }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < d.size() && ++d[i] == sizes[i]) d[i++] = 0;
    if (i == d.size()) break;
  }
  return count;
}

// Skew monoidal categories, seen as skew bicategories on the one object "o".

// S1: bot < top, tensor is meet, unit top, every structure cell an identity.
inline SkewBicategory s1() {
  FinCategory::Builder b(FinSet{"bot", "top"});
  b.hom("bot", "bot", FinSet{"1_bot"}).hom("top", "top", FinSet{"1_top"});
  b.hom("bot", "top", FinSet{"le"}).hom("top", "bot", FinSet{});
  b.identity("bot", "1_bot").identity("top", "1_top");
  b.compose("bot", "bot", "bot", "1_bot", "1_bot", "1_bot").compose("top", "top", "top", "1_top", "1_top", "1_top");
  b.compose("bot", "bot", "top", "le", "1_bot", "le").compose("bot", "top", "top", "1_top", "le", "le");
  auto c = std::make_shared<const FinCategory>(b.build());
  auto meet = [](std::size_t x, std::size_t y) { return std::min(x, y); };
  SkewMonoidal m;
  m.category = c;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) m.tensor_objects.push_back(meet(x, y));
  for (std::size_t u = 0; u < c->arrow_count(); ++u)
    for (std::size_t v = 0; v < c->arrow_count(); ++v) {
      auto au = c->arrow(u), av = c->arrow(v);
      m.tensor_morphisms.push_back(c->global(meet(au.src, av.src), meet(au.dst, av.dst), 0));
    }
  m.unit = 1;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) m.alpha[{x, y, z}] = c->identity_global(meet(x, meet(y, z)));
  m.lambda = {c->identity_global(0), c->identity_global(1)};
  m.rho = m.lambda;
  return one_object_view(m);
}

// S2: objects I and P, u: P -> I, idempotent s on P; x (x) y = y, unit I,
// alpha and lambda identities, rho_P = u. Not invertible, so genuinely skew.
inline SkewMonoidal s2_monoidal() {
  FinCategory::Builder b(FinSet{"I", "P"});
  b.hom("I", "I", FinSet{"1_I"}).hom("P", "P", FinSet{"1_P", "s"}).hom("P", "I", FinSet{"u"}).hom("I", "P", FinSet{});
  b.identity("I", "1_I").identity("P", "1_P");
  b.compose("I", "I", "I", "1_I", "1_I", "1_I");
  b.compose("P", "P", "P", "1_P", "1_P", "1_P").compose("P", "P", "P", "1_P", "s", "s");
  b.compose("P", "P", "P", "s", "1_P", "s").compose("P", "P", "P", "s", "s", "s");
  b.compose("P", "P", "I", "u", "1_P", "u").compose("P", "P", "I", "u", "s", "u").compose("P", "I", "I", "1_I", "u", "u");
  auto c = std::make_shared<const FinCategory>(b.build());
  SkewMonoidal m;
  m.category = c;
  m.tensor_objects = {0, 1, 0, 1};
  for (std::size_t u = 0; u < c->arrow_count(); ++u)
    for (std::size_t v = 0; v < c->arrow_count(); ++v) m.tensor_morphisms.push_back(v);
  m.unit = 0;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) m.alpha[{x, y, z}] = c->identity_global(z);
  m.lambda = {c->identity_global(0), c->identity_global(1)};
  m.rho = {c->identity_global(0), c->global(1, 0, 0)};
  return m;
}

inline SkewBicategory s2() { return one_object_view(s2_monoidal()); }

}  // namespace testing
