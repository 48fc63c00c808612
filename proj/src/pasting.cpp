#include "warp/pasting.hpp"

#include <cctype>

namespace warp {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) out += g;
  return out;
}

ExprPtr basic(std::string name) { return std::make_shared<const PastingExpr>(PastingExpr::Basic{std::move(name)}); }
ExprPtr ident(Word word) { return std::make_shared<const PastingExpr>(PastingExpr::Identity{std::move(word)}); }
ExprPtr whiskered(Word left, ExprPtr inner, Word right) {
  return std::make_shared<const PastingExpr>(PastingExpr::Whisker{std::move(left), std::move(inner), std::move(right)});
}
ExprPtr vertical(std::vector<ExprPtr> factors) {
  return std::make_shared<const PastingExpr>(PastingExpr::Vertical{std::move(factors)});
}

PastingEnv::PastingEnv(const PastingEnv& other) : generators_(other.generators_), cells_(other.cells_) {}

PastingEnv& PastingEnv::operator=(const PastingEnv& other) {
  if (this != &other) {
    generators_ = other.generators_;
    cells_ = other.cells_;
    std::lock_guard lock(cache_mutex_);
    cache_.clear();
  }
  return *this;
}

void PastingEnv::bind_generator(const std::string& name, SpanPtr span) {
  if (cells_.count(name)) throw PastingError("name '" + name + "' is already a cell");
  generators_[name] = std::move(span);
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

void PastingEnv::bind_cell(const std::string& name, Word dom, Word cod, Cell2 cell) {
  if (generators_.count(name)) throw PastingError("name '" + name + "' is already a generator");
  auto check = [&](const Word& w, const Span& s, const char* side) {
    if (w.empty()) {
      if (!(s == *identity_span(s.src())))
        throw PastingError("cell '" + name + "': " + side + " is typed 1 but is not an identity span");
    } else if (!(*word_span(w) == s)) {
      throw PastingError("cell '" + name + "': " + side + " does not match " + word_str(w));
    }
  };
  check(dom, cell.dom(), "domain");
  check(cod, cell.cod(), "codomain");
  cells_.insert_or_assign(name, CellEntry{{std::move(dom), std::move(cod)}, std::move(cell)});
}

const SpanPtr& PastingEnv::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw PastingError("unknown generator '" + name + "'");
  return it->second;
}

const Cell2& PastingEnv::cell(const std::string& name) const {
  auto it = cells_.find(name);
  if (it == cells_.end()) throw PastingError("unknown cell '" + name + "'");
  return it->second.cell;
}

const std::pair<Word, Word>& PastingEnv::cell_type(const std::string& name) const {
  auto it = cells_.find(name);
  if (it == cells_.end()) throw PastingError("unknown cell '" + name + "'");
  return it->second.type;
}

SpanPtr PastingEnv::word_span(const Word& w) const {
  if (w.empty()) throw PastingError("the empty word has no fixed frame");
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  SpanPtr s = generator(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) s = compose_spans(*generator(w[i]), *s);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, s);
  return s;
}

namespace {

Word concat(const Word& a, const Word& b, const Word& c) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

std::pair<Word, Word> boundary(const PastingExpr& e, const PastingEnv& env) {
  return std::visit(
      [&](const auto& n) -> std::pair<Word, Word> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PastingExpr::Basic>) {
          return env.cell_type(n.name);
        } else if constexpr (std::is_same_v<T, PastingExpr::Identity>) {
          return {n.word, n.word};
        } else if constexpr (std::is_same_v<T, PastingExpr::Whisker>) {
          auto [d, c] = boundary(*n.inner, env);
          return {concat(n.left, d, n.right), concat(n.left, c, n.right)};
        } else {
          if (n.factors.empty()) throw PastingError("empty vertical composite");
          auto [dom, cod] = boundary(*n.factors.back(), env);
          for (std::size_t i = n.factors.size() - 1; i-- > 0;) {
            auto [d, c] = boundary(*n.factors[i], env);
            if (d != cod)
              throw PastingError("boundary mismatch: factor " + std::to_string(i + 2) + " ends at " + word_str(cod) +
                                 " but factor " + std::to_string(i + 1) + " starts at " + word_str(d));
            cod = c;
          }
          return {dom, cod};
        }
      },
      e.node());
}

namespace {

Cell2 eval(const PastingExpr& e, const PastingEnv& env) {
  return std::visit(
      [&](const auto& n) -> Cell2 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PastingExpr::Basic>) {
          return env.cell(n.name);
        } else if constexpr (std::is_same_v<T, PastingExpr::Identity>) {
          return Cell2::identity(env.word_span(n.word));
        } else if constexpr (std::is_same_v<T, PastingExpr::Whisker>) {
          Cell2 inner = eval(*n.inner, env);
          SpanPtr left = n.left.empty() ? nullptr : env.word_span(n.left);
          SpanPtr right = n.right.empty() ? nullptr : env.word_span(n.right);
          return whisker(left, inner, right);
        } else {
          Cell2 acc = eval(*n.factors.back(), env);
          for (std::size_t i = n.factors.size() - 1; i-- > 0;) acc = vcompose(eval(*n.factors[i], env), acc);
          return acc;
        }
      },
      e.node());
}

}  // namespace

Cell2 eval_pasting(const PastingExpr& e, const PastingEnv& env) {
  boundary(e, env);
  return eval(e, env);
}

ExprPtr parse_pasting(std::string_view text, const PastingEnv& env) {
  std::vector<ExprPtr> factors;
  std::size_t i = 0;
  auto parse_factor = [&](std::string_view body) -> ExprPtr {
    if (body.size() >= 3 && body[0] == '1' && body[1] == '[' && body.back() == ']') {
      Word w;
      for (char ch : body.substr(2, body.size() - 3)) w.emplace_back(1, ch);
      return ident(std::move(w));
    }
    Word left, right;
    std::string cell;
    for (char ch : body) {
      std::string name(1, ch);
      if (env.has_cell(name)) {
        if (!cell.empty()) throw PastingError("factor '" + std::string(body) + "' names two cells");
        cell = name;
      } else if (env.has_generator(name)) {
        (cell.empty() ? left : right).push_back(name);
      } else {
        throw PastingError("unknown name '" + name + "' in '" + std::string(text) + "'");
      }
    }
    if (cell.empty()) throw PastingError("factor '" + std::string(body) + "' names no cell");
    if (left.empty() && right.empty()) return basic(cell);
    return whiskered(std::move(left), basic(cell), std::move(right));
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '(') {
      auto close = text.find(')', i);
      if (close == std::string_view::npos) throw PastingError("unbalanced parenthesis in '" + std::string(text) + "'");
      factors.push_back(parse_factor(text.substr(i + 1, close - i - 1)));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != '(' && !std::isspace(static_cast<unsigned char>(text[j]))) {
        if (text[j] == '[') j = text.find(']', j);
        if (j == std::string_view::npos) throw PastingError("unbalanced bracket in '" + std::string(text) + "'");
        ++j;
      }
      factors.push_back(parse_factor(text.substr(i, j - i)));
      i = j;
    }
  }
  if (factors.empty()) throw PastingError("empty pasting expression");
  if (factors.size() == 1) return factors.front();
  return vertical(std::move(factors));
}

Cell2 eval_pasting(std::string_view text, const PastingEnv& env) { return eval_pasting(*parse_pasting(text, env), env); }

bool check_equation(ValidationReport& report, int axiom, const std::string& law, std::string_view lhs,
                    std::string_view rhs, const PastingEnv& env) {
  Cell2 a = eval_pasting(lhs, env);
  Cell2 b = eval_pasting(rhs, env);
  auto cmp = cells_equal(a, b);
  if (!cmp) report.add_violation(axiom, law, cmp.witness);
  return cmp.equal;
}

}  // namespace warp
