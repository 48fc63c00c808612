#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "warp/correspond.hpp"
#include "warp/skew.hpp"

namespace warp {

using Json = nlohmann::json;

// A file that does not fit the schema. `locus` is a JSON pointer, or
// "line L, column C" for text that is not JSON at all.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string locus, const std::string& message)
      : std::runtime_error(locus + ": " + message), locus_(std::move(locus)) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

enum class Kind { category, monad, warping, mw_monad, wreath, algebra, skew_bicategory, skew_warping, skew_algebra };

const char* kind_name(Kind k);
Kind kind_of(const Json& doc);  // reads the "kind" tag

Json parse_document(std::string_view text);
// Canonical text: sorted keys, two-space indent, short lists on one line,
// trailing newline.
std::string emit(const Json& doc);

// Writers return whole documents (with "kind"). Readers accept a document or
// the same object nested under another one; `at` is the JSON pointer used in
// error messages.
Json to_json(const FinCategory& c);
Json monad_to_json(const SpanMonad& m);
Json to_json(const MwMonad& m);
Json to_json(const Warping& w);
Json to_json(const Wreath& w);
Json to_json(const WarpAlgebra& a);
Json to_json(const SkewBicategory& s);
Json to_json(const SkewWarping& w);
Json to_json(const SkewAlgebra& a);

// Tables are read as given and judged by the validators; names must resolve.
FinCategory category_from_json(const Json& j, const std::string& at = "");
MwMonad mw_monad_from_json(const Json& j, const std::string& at = "");
SkewBicategory skew_bicategory_from_json(const Json& j, const std::string& at = "");
// These need a lawful base (category or skew bicategory) and throw
// LawViolation otherwise.
SpanMonad monad_from_json(const Json& j, const std::string& at = "");
Warping warping_from_json(const Json& j, const std::string& at = "");
Wreath wreath_from_json(const Json& j, const std::string& at = "");
WarpAlgebra algebra_from_json(const Json& j, const std::string& at = "");
SkewWarping skew_warping_from_json(const Json& j, const std::string& at = "");
SkewAlgebra skew_algebra_from_json(const Json& j, const std::string& at = "");

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace warp
