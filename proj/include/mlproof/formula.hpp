#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mlproof/errors.hpp"

namespace mlproof {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order term: a variable or an application f(t1,...,tn).
// A zero-argument application is a constant and prints as "f()", which keeps
// it syntactically distinct from the variable "f".
class Term {
 public:
  enum class Kind { Variable, Application };

  static TermPtr variable(std::string name);
  static TermPtr application(std::string function, std::vector<TermPtr> arguments);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<TermPtr>& args() const { return args_; }

 private:
  Term(Kind kind, std::string name, std::vector<TermPtr> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}
  Kind kind_;
  std::string name_;
  std::vector<TermPtr> args_;
};

bool equal(const TermPtr& a, const TermPtr& b);
// Total structural order; 0 iff equal.
int compare(const TermPtr& a, const TermPtr& b);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Connective { Atom, Neg, And, Or, Imp, ForAll, Exists };

// Immutable first-order formula with primitive negation (no falsum constant).
class Formula {
 public:
  static FormulaPtr atom(std::string predicate, std::vector<TermPtr> arguments = {});
  static FormulaPtr neg(FormulaPtr body);
  static FormulaPtr conj(FormulaPtr left, FormulaPtr right);
  static FormulaPtr disj(FormulaPtr left, FormulaPtr right);
  static FormulaPtr imp(FormulaPtr left, FormulaPtr right);
  static FormulaPtr forall(std::string variable, FormulaPtr body);
  static FormulaPtr exists(std::string variable, FormulaPtr body);

  Connective tag() const { return tag_; }
  // Predicate name for atoms, bound variable for quantifiers.
  const std::string& name() const { return name_; }
  const std::vector<TermPtr>& terms() const { return terms_; }
  // left() is the body of Neg and quantifiers; right() is null for those.
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

 private:
  Formula(Connective tag, std::string name, std::vector<TermPtr> terms, FormulaPtr left,
          FormulaPtr right)
      : tag_(tag),
        name_(std::move(name)),
        terms_(std::move(terms)),
        left_(std::move(left)),
        right_(std::move(right)) {}
  Connective tag_;
  std::string name_;
  std::vector<TermPtr> terms_;
  FormulaPtr left_;
  FormulaPtr right_;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
int compare(const FormulaPtr& a, const FormulaPtr& b);

bool equal(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b);

// Connective-depth measure: 1 for atoms, max of children + 1 otherwise.
int degree(const FormulaPtr& f);

std::set<std::string> variables(const TermPtr& t);
std::set<std::string> free_variables(const FormulaPtr& f);
// Every identifier appearing anywhere (variables, functions, predicates, binders).
void collect_identifiers(const TermPtr& t, std::set<std::string>& out);
void collect_identifiers(const FormulaPtr& f, std::set<std::string>& out);

// A name not contained in `avoid`, formed from `base` by appending a counter.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement);
// Capture-avoiding substitution of `replacement` for free occurrences of `var`.
// Bound variables are renamed with a counter suffix only when capture would occur.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& replacement);

// True iff some occurrence of the atom `b` in `f` lies under no Neg node.
// Implication antecedents do not count as negative context.
// Throws PreconditionViolation if `b` is not an atom.
bool has_positive_occurrence(const FormulaPtr& f, const FormulaPtr& b);
// Child-index path (0 = left/body, 1 = right) to the first such occurrence, preorder.
std::optional<std::vector<int>> positive_occurrence_path(const FormulaPtr& f, const FormulaPtr& b);

// The three principle schemas. EFQ(A,B) = ~A -> (A -> B); TND(A) = A | ~A; DNE(A) = ~~A -> A.
enum class SchemeKind { Efq, Tnd, Dne };

std::string_view scheme_name(SchemeKind kind);
std::optional<SchemeKind> scheme_from_name(std::string_view name);

struct SchemeInstance {
  SchemeKind kind;
  FormulaPtr first;
  FormulaPtr second;  // only EFQ uses it

  FormulaPtr render() const;
};

SchemeInstance efq_instance(FormulaPtr a, FormulaPtr b);
SchemeInstance tnd_instance(FormulaPtr a);
SchemeInstance dne_instance(FormulaPtr a);

bool equal(const SchemeInstance& a, const SchemeInstance& b);
// If `f` has the shape of an instance of `kind`, return that instance.
std::optional<SchemeInstance> match_scheme(SchemeKind kind, const FormulaPtr& f);

std::string to_string(const TermPtr& t);
// Minimal parenthesization under precedence ~ > & > | > ->, -> right-associative,
// quantifiers extending maximally right.
std::string to_string(const FormulaPtr& f);
std::string to_string(const SchemeInstance& s);

// Grammar: atoms `p` or `p(t1,...,tn)`; `~F`; `F & G`; `F | G`; `F -> G`;
// `forall x. F`; `exists x. F`; parentheses. Throws ParseError.
FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);
// Comma-separated formulas; empty input yields the empty list.
std::vector<FormulaPtr> parse_formula_list(std::string_view text);

}  // namespace mlproof
