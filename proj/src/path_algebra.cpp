#include "cqt/path_algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cqt/error.hpp"

namespace cqt {

namespace {

template <class Word>
bool occurs_at(const Word& word, const Word& pattern, std::size_t pos) {
  return pos + pattern.size() <= word.size() &&
         std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

template <class Word>
std::optional<std::size_t> find_occurrence(const Word& word, const Word& pattern) {
  if (pattern.size() > word.size()) return std::nullopt;
  for (std::size_t pos = 0; pos + pattern.size() <= word.size(); ++pos)
    if (occurs_at(word, pattern, pos)) return pos;
  return std::nullopt;
}

}  // namespace

RewriteSystem RewriteSystem::build(const Quiver& q, const RelationSet& relations,
                                   const RewriteOptions& options) {
  if (!q.multiplicity_free())
    throw MultipleArrows("path algebra presentations need a quiver without multiple arrows");

  std::vector<std::size_t> position(q.rank());
  if (options.vertex_order) {
    const auto& order = *options.vertex_order;
    if (order.size() != q.rank()) throw InvalidParameters("vertex order must list every vertex once");
    std::vector<bool> used(q.rank(), false);
    for (std::size_t r = 0; r < order.size(); ++r) {
      const std::size_t v = q.index_of(order[r]);
      if (used[v]) throw InvalidParameters("vertex order lists '" + order[r] + "' twice");
      used[v] = true;
      position[v] = r;
    }
  } else {
    for (std::size_t v = 0; v < q.rank(); ++v) position[v] = v;
  }

  RewriteSystem rs(q, std::move(position));
  std::vector<std::pair<Term, Term>> equations;
  for (const auto& r : relations.relations) {
    Term first{1, rs.to_word(r.first)};
    if (first.word.size() < 2) throw InvalidParameters("relation on a trivial path");
    Term second{0, {}};
    if (r.kind == Relation::Kind::Commutativity) {
      if (!r.second) throw InvalidParameters("commutativity relation without a second path");
      second = Term{1, rs.to_word(*r.second)};
      if (first.word.front() != second.word.front() || first.word.back() != second.word.back())
        throw InvalidParameters("commutativity relation between non-parallel paths");
    }
    equations.emplace_back(std::move(first), std::move(second));
  }
  const std::size_t ceiling = options.length_ceiling ? options.length_ceiling : q.rank();
  rs.complete(std::move(equations), options);
  rs.compute_basis(ceiling);
  return rs;
}

RewriteSystem build_rewrite_system(const Quiver& q, const RelationSet& relations,
                                   const RewriteOptions& options) {
  return RewriteSystem::build(q, relations, options);
}

bool RewriteSystem::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return position_[a[k]] < position_[b[k]];
  return false;
}

bool RewriteSystem::apply_once(Term& t) const {
  if (t.word.empty()) return false;
  for (const auto& rule : rules_) {
    const auto pos = find_occurrence(t.word, rule.lhs);
    if (!pos) continue;
    if (rule.rhs.empty()) {
      t = Term{0, {}};
      return true;
    }
    Word next(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(*pos));
    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
    next.insert(next.end(), t.word.begin() + static_cast<std::ptrdiff_t>(*pos + rule.lhs.size()),
                t.word.end());
    t.word = std::move(next);
    t.coefficient *= rule.coefficient;
    return true;
  }
  return false;
}

RewriteSystem::Term RewriteSystem::reduce(Term t) const {
  if (t.coefficient == 0) t.word.clear();
  while (apply_once(t)) {
  }
  if (t.word.empty()) t.coefficient = 0;
  return t;
}

RewriteSystem::Word RewriteSystem::to_word(const Path& p) const {
  if (p.vertices.empty()) throw InvalidParameters("empty path");
  Word w;
  w.reserve(p.vertices.size());
  for (const auto& label : p.vertices) w.push_back(quiver_.index_of(label));
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (!quiver_.has_arrow(w[k], w[k + 1]))
      throw InvalidParameters("'" + p.to_string() + "' is not a path: no arrow " +
                              p.vertices[k] + " -> " + p.vertices[k + 1]);
  return w;
}

Path RewriteSystem::to_path(const Word& w) const {
  Path p;
  for (std::size_t v : w) p.vertices.push_back(quiver_.label(v));
  return p;
}

std::vector<std::pair<RewriteSystem::Term, RewriteSystem::Term>> RewriteSystem::critical_pairs(
    const Rule& a, const Rule& b) const {
  std::vector<std::pair<Term, Term>> out;
  auto splice = [](const Rule& rule, const Word& word, std::size_t pos) {
    if (rule.rhs.empty()) return Term{0, {}};
    Word next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
    next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()),
                word.end());
    return Term{rule.coefficient, std::move(next)};
  };

  // b.lhs inside a.lhs
  for (std::size_t pos = 0; pos + b.lhs.size() <= a.lhs.size(); ++pos) {
    if (&a == &b && pos == 0) continue;
    if (occurs_at(a.lhs, b.lhs, pos)) out.emplace_back(splice(a, a.lhs, 0), splice(b, a.lhs, pos));
  }
  // a suffix of a.lhs equals a prefix of b.lhs, sharing at least one arrow
  const std::size_t limit = std::min(a.lhs.size(), b.lhs.size());
  for (std::size_t shared = 2; shared < limit; ++shared) {
    if (!std::equal(a.lhs.end() - static_cast<std::ptrdiff_t>(shared), a.lhs.end(), b.lhs.begin()))
      continue;
    Word word = a.lhs;
    word.insert(word.end(), b.lhs.begin() + static_cast<std::ptrdiff_t>(shared), b.lhs.end());
    out.emplace_back(splice(a, word, 0), splice(b, word, a.lhs.size() - shared));
  }
  return out;
}

void RewriteSystem::complete(std::vector<std::pair<Term, Term>> equations,
                             const RewriteOptions& options) {
  const std::size_t ceiling = options.length_ceiling ? options.length_ceiling : quiver_.rank();
  std::deque<std::pair<Term, Term>> queue(equations.begin(), equations.end());
  std::vector<std::pair<Term, Term>> deferred;
  std::size_t additions = 0;

  // Orients c1*w1 = c2*w2 into a rule, or nullopt when it is already implied.
  auto orient = [this](const Term& x, const Term& y) -> std::optional<Rule> {
    Term a = reduce(x), b = reduce(y);
    if (a.word.empty() && b.word.empty()) return std::nullopt;
    if (a.word.empty()) return Rule{b.word, {}, 0};
    if (b.word.empty()) return Rule{a.word, {}, 0};
    if (a.word == b.word) {
      if (a.coefficient == b.coefficient) return std::nullopt;
      return Rule{a.word, {}, 0};
    }
    if (less(a.word, b.word)) std::swap(a, b);
    mpq_class c = b.coefficient / a.coefficient;
    c.canonicalize();
    return Rule{a.word, b.word, c};
  };

  for (;;) {
    while (!queue.empty()) {
      auto [x, y] = std::move(queue.front());
      queue.pop_front();
      auto rule = orient(x, y);
      if (!rule) continue;
      if (rule->lhs.size() - 1 > ceiling) {
        deferred.emplace_back(std::move(x), std::move(y));
        continue;
      }
      if (++additions > options.max_rule_additions)
        throw CompletionBudgetExceeded("completion added more than " +
                                       std::to_string(options.max_rule_additions) + " rules");

      std::vector<Rule> kept;
      for (auto& r : rules_) {
        if (find_occurrence(r.lhs, rule->lhs))
          queue.emplace_back(Term{1, r.lhs}, Term{r.coefficient, r.rhs});
        else
          kept.push_back(std::move(r));
      }
      rules_ = std::move(kept);
      rules_.push_back(std::move(*rule));
      for (auto& r : rules_) {
        if (r.rhs.empty()) continue;
        Term t = reduce(Term{r.coefficient, r.rhs});
        r.rhs = std::move(t.word);
        r.coefficient = r.rhs.empty() ? mpq_class(0) : t.coefficient;
      }
      const Rule& added = rules_.back();
      for (const auto& r : rules_) {
        for (auto& pair : critical_pairs(added, r)) queue.push_back(std::move(pair));
        if (&r != &added)
          for (auto& pair : critical_pairs(r, added)) queue.push_back(std::move(pair));
      }
    }

    // Long candidates are only admitted if shorter rules cannot absorb them.
    auto pending = std::move(deferred);
    deferred.clear();
    for (auto& [x, y] : pending) {
      auto rule = orient(x, y);
      if (!rule) continue;
      if (rule->lhs.size() - 1 > ceiling)
        throw CompletionBudgetExceeded("completion needs a rule of length " +
                                       std::to_string(rule->lhs.size() - 1) +
                                       ", above the ceiling " + std::to_string(ceiling));
      queue.emplace_back(std::move(x), std::move(y));
    }
    if (queue.empty()) break;
  }

  std::sort(rules_.begin(), rules_.end(),
            [this](const Rule& a, const Rule& b) { return less(a.lhs, b.lhs); });
}

void RewriteSystem::compute_basis(std::size_t ceiling) {
  basis_.clear();
  auto irreducible_suffix = [this](const Word& w) {
    for (const auto& r : rules_)
      if (r.lhs.size() <= w.size() && occurs_at(w, r.lhs, w.size() - r.lhs.size())) return false;
    return true;
  };
  std::vector<Word> stack;
  for (std::size_t v = 0; v < quiver_.rank(); ++v) stack.push_back({v});
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (w.size() - 1 > ceiling)
      throw CompletionBudgetExceeded("normal path '" + to_path(w).to_string() +
                                     "' exceeds the length ceiling " + std::to_string(ceiling) +
                                     "; the quotient is not finite-dimensional within it");
    for (std::size_t next : quiver_.successors(w.back())) {
      Word extended = w;
      extended.push_back(next);
      if (irreducible_suffix(extended)) stack.push_back(std::move(extended));
    }
    basis_.push_back(std::move(w));
  }
  std::sort(basis_.begin(), basis_.end(), [this](const Word& a, const Word& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.back() != b.back()) return a.back() < b.back();
    return less(a, b);
  });
}

std::vector<RewriteRule> RewriteSystem::rules() const {
  std::vector<RewriteRule> out;
  for (const auto& r : rules_) {
    RewriteRule rule{to_path(r.lhs), std::nullopt, r.coefficient};
    if (!r.rhs.empty()) rule.rhs = to_path(r.rhs);
    out.push_back(std::move(rule));
  }
  return out;
}

NormalForm RewriteSystem::normal_form(const Path& p) const {
  const Term t = reduce(Term{1, to_word(p)});
  if (t.word.empty()) return {};
  return NormalForm{std::make_pair(t.coefficient, to_path(t.word))};
}

LinearCombination RewriteSystem::normal_form(const LinearCombination& combination) const {
  std::vector<std::pair<Word, mpq_class>> sums;
  for (const auto& [coefficient, path] : combination) {
    const Term t = reduce(Term{coefficient, to_word(path)});
    if (t.word.empty()) continue;
    auto it = std::find_if(sums.begin(), sums.end(), [&](const auto& s) { return s.first == t.word; });
    if (it == sums.end())
      sums.emplace_back(t.word, t.coefficient);
    else
      it->second += t.coefficient;
  }
  std::sort(sums.begin(), sums.end(), [this](const auto& a, const auto& b) { return less(a.first, b.first); });
  LinearCombination out;
  for (auto& [word, coefficient] : sums)
    if (coefficient != 0) out.emplace_back(coefficient, to_path(word));
  return out;
}

std::vector<Path> RewriteSystem::basis() const {
  std::vector<Path> out;
  for (const auto& w : basis_) out.push_back(to_path(w));
  return out;
}

std::size_t RewriteSystem::hom_dimension(const std::string& u, const std::string& v) const {
  const std::size_t from = quiver_.index_of(u);
  const std::size_t to = quiver_.index_of(v);
  return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [&](const Word& w) {
    return w.front() == from && w.back() == to;
  }));
}

std::vector<std::pair<std::string, std::size_t>> RewriteSystem::projective_lengths() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (std::size_t v = 0; v < quiver_.rank(); ++v) {
    const auto count = std::count_if(basis_.begin(), basis_.end(),
                                     [v](const Word& w) { return w.front() == v; });
    out.emplace_back(quiver_.label(v), static_cast<std::size_t>(count));
  }
  return out;
}

bool RewriteSystem::is_confluent() const {
  for (const auto& a : rules_)
    for (const auto& b : rules_)
      for (const auto& [x, y] : critical_pairs(a, b)) {
        const Term left = reduce(x), right = reduce(y);
        if (left.word != right.word) return false;
        if (!left.word.empty() && left.coefficient != right.coefficient) return false;
      }
  return true;
}

std::size_t nakayama_indecomposable_count(const RewriteSystem& rs) {
  if (!is_oriented_cycle(rs.quiver()) && !is_linear_path(rs.quiver())) throw NotNakayama();
  std::size_t total = 0;
  for (const auto& [vertex, length] : rs.projective_lengths()) total += length;
  return total;
}

}  // namespace cqt
