#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "defcol/discharging.hpp"
#include "defcol/embedded.hpp"
#include "defcol/rational.hpp"

namespace defcol {

struct DegreeConstraint {
  enum class Op { Eq, Ge, Le };

  Op op = Op::Eq;
  int k = 0;

  bool matches(int degree) const;
  // Closed interval view, with hi < 0 meaning unbounded.
  int lo() const;
  int hi() const;
};

// count(adjacent|incident vertex <deg>) <cmp> <value>; face counts are taken
// with walk multiplicity.
struct CountPredicate {
  enum class Relation { Adjacent, Incident };
  enum class Cmp { Eq, Ge, Le, Lt, Gt };

  Relation relation = Relation::Adjacent;
  DegreeConstraint subject;
  Cmp cmp = Cmp::Eq;
  int value = 0;

  bool matches(int count) const;
};

struct SenderPattern {
  enum class Kind { Vertex, Face };

  Kind kind = Kind::Vertex;
  DegreeConstraint deg;
  std::vector<CountPredicate> predicates;
};

struct ReceiverPattern {
  CountPredicate::Relation relation = CountPredicate::Relation::Adjacent;
  SenderPattern::Kind kind = SenderPattern::Kind::Vertex;
  DegreeConstraint deg;
};

struct Rule {
  int phase = 1;
  std::string name;
  SenderPattern sender;
  bool is_average = false;   // "averages" instead of "gives <amount> to"
  Rational amount;           // unused for average rules
  ReceiverPattern receiver;
};

struct RuleSet {
  std::vector<Rule> rules;  // phases nondecreasing in file order
};

// Line-oriented grammar:
//   phase <int> rule <name>: <sender> [with <pred> {and <pred>}]
//         (gives <rational> to | averages) <receiver>
//   sender   := (vertex|face) deg(=|>=|<=)<int>
//   pred     := count((adjacent|incident) vertex deg(=|>=|<=)<int>) (==|>=|<=|<|>) <int>
//             | not adjacent vertex deg>=<int>
//   receiver := (adjacent|incident) (vertex|face) deg(=|>=|<=)<int>
// '#' starts a comment. Throws ParseError; never returns a partial RuleSet.
RuleSet parse_rules(std::string_view text);

// Warnings for same-phase gives-rules whose sender/receiver ranges overlap
// without a mutually exclusive predicate pair.
std::vector<std::string> lint_rules(const RuleSet& rs);

// Executes a rule set with the built-in engine semantics: phases ascending,
// constant-amount transfers per adjacency/incidence, averaging groups with
// conflict skipping, exact rationals throughout.
DischargeResult evaluate(const EmbeddedGraph& eg, const RuleSet& rs);

}  // namespace defcol
