#pragma once

#include <functional>
#include <memory>

#include "hk/category.hpp"

namespace hk::cli {

/// A parsed category-description document.
///
/// Top-level "key = value" lines precede the sections: name, field (Q, F2, F3, ...), and for
/// generated categories "generate = OB | MO | EN | Seq" with delta, t, deltas, max_len, max_dots
/// and index_bound. Sections: [objects], [hom S T], [identity X], [compose] ("g f = expr"),
/// [monoidal] ("unit = X", "A B = C", "a * b = expr"), [dual] ("X = Y ; ev = expr ; co = expr"),
/// [braiding] ("A B = expr") and [functor NAME] ("X = dim", "b = [r0; r1; ...]",
/// "monoidal = true"; "vector = n" on generated categories). Expressions are sums of
/// "c*name" terms with integer or fraction coefficients; "#" starts a comment.
struct CatFile {
  std::unique_ptr<Category> category;
  std::vector<std::unique_ptr<Functor>> functors;  // in file order
  ValidationReport validation;
  bool generated = false;

  const Functor* find_functor(std::string_view name) const;
};

/// Throws ParseError listing every problem found, each with its line number. A field given by the
/// caller overrides the document's field line.
CatFile parse_category_text(const std::string& text, const std::optional<FieldSpec>& field = std::nullopt);
CatFile parse_category_file(const std::string& path, const std::optional<FieldSpec>& field = std::nullopt);

/// Sum of "c*name" terms, the basis names resolved by lookup. "0" is the empty sum.
SparseVec parse_linear_expr(const FieldSpec& f, std::string_view text,
                            const std::function<std::uint32_t(std::string_view)>& lookup);
/// "[a b; c d]" with rows separated by ";" and entries by spaces or commas.
Matrix parse_matrix_literal(const FieldSpec& f, std::string_view text, std::size_t rows, std::size_t cols);

}  // namespace hk::cli
