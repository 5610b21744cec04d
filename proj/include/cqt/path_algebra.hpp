#pragma once

// Quotients KQ/I presented by a completed path-rewriting system.
//
// Paths are written in travel order as vertex chains, so "1 -> 2 -> 3" is the
// arrow 1 -> 2 followed by 2 -> 3. Every dimension reported here is the
// dimension of span{paths u ~> v} modulo I. Under the convention that the
// algebra acts on the left and P_u = (KQ/I) e_u, that span is Hom(P_v, P_u);
// with right modules it is Hom(P_u, P_v). The counts themselves do not
// depend on the choice.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cqt/quiver.hpp"
#include "cqt/relations.hpp"

namespace cqt {

struct RewriteOptions {
  /// Total vertex order used by the degree-lexicographic path order.
  /// Defaults to the quiver's own vertex order.
  std::optional<std::vector<std::string>> vertex_order;
  /// Longest admissible rule or normal path, in arrows. 0 means rank().
  std::size_t length_ceiling = 0;
  /// Hard cap on rules added during completion.
  std::size_t max_rule_additions = 100'000;
};

/// lhs -> coefficient * rhs, or lhs -> 0 when rhs is empty.
struct RewriteRule {
  Path lhs;
  std::optional<Path> rhs;
  mpq_class coefficient{1};
};

/// Zero, or coefficient * path with a nonzero coefficient and a normal path.
struct NormalForm {
  std::optional<std::pair<mpq_class, Path>> term;

  bool is_zero() const noexcept { return !term.has_value(); }
};

using LinearCombination = std::vector<std::pair<mpq_class, Path>>;

/// A confluent, interreduced rewriting system for KQ/I together with the
/// basis of normal (irreducible) paths. Immutable after build().
class RewriteSystem {
 public:
  /// Orients every generator under deg-lex and runs Knuth-Bendix completion
  /// on path overlaps. Throws CompletionBudgetExceeded if completion needs a
  /// rule longer than the ceiling, or the quotient has a normal path longer
  /// than it.
  static RewriteSystem build(const Quiver& q, const RelationSet& relations,
                             const RewriteOptions& options = {});

  const Quiver& quiver() const noexcept { return quiver_; }
  std::vector<RewriteRule> rules() const;
  std::size_t rule_count() const noexcept { return rules_.size(); }

  /// Throws InvalidParameters if `p` is not a path of the quiver.
  NormalForm normal_form(const Path& p) const;
  LinearCombination normal_form(const LinearCombination& combination) const;

  /// Normal paths in (source, target, deg-lex) order, trivial paths included.
  std::vector<Path> basis() const;

  std::size_t hom_dimension(const std::string& u, const std::string& v) const;
  std::size_t algebra_dimension() const noexcept { return basis_.size(); }
  /// Normal paths starting at each vertex, in quiver vertex order.
  std::vector<std::pair<std::string, std::size_t>> projective_lengths() const;

  /// Exhaustively checks that every critical pair (inclusion and proper
  /// overlap of two left-hand sides) has a common normal form.
  bool is_confluent() const;

 private:
  using Word = std::vector<std::size_t>;
  struct Term {
    mpq_class coefficient;
    Word word;  // empty means zero
  };
  struct Rule {
    Word lhs;
    Word rhs;  // empty: lhs -> 0
    mpq_class coefficient;
  };

  RewriteSystem(Quiver q, std::vector<std::size_t> position)
      : quiver_(std::move(q)), position_(std::move(position)) {}

  bool less(const Word& a, const Word& b) const;
  Term reduce(Term t) const;
  bool apply_once(Term& t) const;
  Word to_word(const Path& p) const;
  Path to_path(const Word& w) const;
  std::vector<std::pair<Term, Term>> critical_pairs(const Rule& a, const Rule& b) const;
  void complete(std::vector<std::pair<Term, Term>> equations, const RewriteOptions& options);
  void compute_basis(std::size_t ceiling);

  Quiver quiver_;
  std::vector<std::size_t> position_;  // rank of each vertex in the term order
  std::vector<Rule> rules_;
  std::vector<Word> basis_;
};

RewriteSystem build_rewrite_system(const Quiver& q, const RelationSet& relations,
                                   const RewriteOptions& options = {});

/// Number of indecomposable modules of a Nakayama algebra: the sum of the
/// lengths of its indecomposable projectives. Throws NotNakayama unless the
/// quiver is an oriented cycle or a linearly oriented line.
std::size_t nakayama_indecomposable_count(const RewriteSystem& rs);

}  // namespace cqt
