#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "warp/span.hpp"

namespace warp {

// A 1-cell word, written as in diagrams: {"A","B"} is AB, B applied first.
using Word = std::vector<std::string>;

std::string word_str(const Word& w);

class PastingError : public StructureError {
 public:
  using StructureError::StructureError;
};

// A formal vertical composite of whiskered basic 2-cells.
class PastingExpr {
 public:
  struct Basic {
    std::string name;
  };
  struct Identity {
    Word word;
  };
  struct Whisker {
    Word left;
    std::shared_ptr<const PastingExpr> inner;
    Word right;
  };
  // factors[0] is applied last, as in (Ap)(tB).
  struct Vertical {
    std::vector<std::shared_ptr<const PastingExpr>> factors;
  };
  using Node = std::variant<Basic, Identity, Whisker, Vertical>;

  explicit PastingExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const noexcept { return node_; }

 private:
  Node node_;
};

using ExprPtr = std::shared_ptr<const PastingExpr>;

ExprPtr basic(std::string name);
ExprPtr ident(Word word);
ExprPtr whiskered(Word left, ExprPtr inner, Word right);
ExprPtr vertical(std::vector<ExprPtr> factors);

// Names generator spans and typed basic cells.
class PastingEnv {
 public:
  PastingEnv() = default;
  PastingEnv(const PastingEnv& other);
  PastingEnv& operator=(const PastingEnv& other);

  void bind_generator(const std::string& name, SpanPtr span);
  // Checks the cell's boundaries against the words (an empty word must be an
  // identity span).
  void bind_cell(const std::string& name, Word dom, Word cod, Cell2 cell);

  bool has_generator(const std::string& name) const { return generators_.count(name) != 0; }
  bool has_cell(const std::string& name) const { return cells_.count(name) != 0; }
  const SpanPtr& generator(const std::string& name) const;
  const Cell2& cell(const std::string& name) const;
  const std::pair<Word, Word>& cell_type(const std::string& name) const;

  // Composite of a non-empty word.
  SpanPtr word_span(const Word& w) const;

 private:
  struct CellEntry {
    std::pair<Word, Word> type;
    Cell2 cell;
  };
  std::map<std::string, SpanPtr> generators_;
  std::map<std::string, CellEntry> cells_;
  mutable std::map<Word, SpanPtr> cache_;
  mutable std::mutex cache_mutex_;
};

// Parses the diagram notation used throughout: a sequence of factors, each
// either bare or parenthesised, read right to left; inside a factor every
// character is a single-letter name, exactly one of which is a cell. "1[AB]"
// is the identity on AB. Example: "t(ApA)(tBA)".
ExprPtr parse_pasting(std::string_view text, const PastingEnv& env);

// Formal (dom, cod) words; throws PastingError naming the first mismatch.
std::pair<Word, Word> boundary(const PastingExpr& e, const PastingEnv& env);

Cell2 eval_pasting(const PastingExpr& e, const PastingEnv& env);
Cell2 eval_pasting(std::string_view text, const PastingEnv& env);

// Evaluates both sides and records a violation with witness when they differ.
bool check_equation(ValidationReport& report, int axiom, const std::string& law, std::string_view lhs,
                    std::string_view rhs, const PastingEnv& env);

}  // namespace warp
