#include "defcol/rules.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "defcol/errors.hpp"

namespace defcol {

bool DegreeConstraint::matches(int degree) const {
  switch (op) {
    case Op::Eq: return degree == k;
    case Op::Ge: return degree >= k;
    case Op::Le: return degree <= k;
  }
  return false;
}

int DegreeConstraint::lo() const { return op == Op::Le ? 0 : k; }
int DegreeConstraint::hi() const { return op == Op::Ge ? -1 : k; }

bool CountPredicate::matches(int count) const {
  switch (cmp) {
    case Cmp::Eq: return count == value;
    case Cmp::Ge: return count >= value;
    case Cmp::Le: return count <= value;
    case Cmp::Lt: return count < value;
    case Cmp::Gt: return count > value;
  }
  return false;
}

// ---- parser ---------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Word, Int, Symbol, End };

  Kind kind = Kind::End;
  std::string text;
  long long value = 0;  // for Int
  int column = 0;       // 1-based
};

class LineLexer {
 public:
  LineLexer(std::string_view line, int lineno) : line_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return current_; }
  int lineno() const { return lineno_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    int col = current_.kind == Token::Kind::End ? static_cast<int>(line_.size()) + 1
                                                : current_.column;
    throw ParseError(lineno_, col, message);
  }

 private:
  void advance() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    current_ = Token{};
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      current_.kind = Token::Kind::End;
      return;
    }
    char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                     line_[pos_] == '_' || line_[pos_] == '.')) {
        ++pos_;
      }
      current_.kind = Token::Kind::Word;
      current_.text = std::string(line_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      current_.kind = Token::Kind::Int;
      current_.text = std::string(line_.substr(start, pos_ - start));
      try {
        current_.value = std::stoll(current_.text);
      } catch (const std::out_of_range&) {
        throw ParseError(lineno_, current_.column, "integer literal out of range");
      }
      return;
    }
    // multi-char comparators first
    for (std::string_view sym : {">=", "<=", "=="}) {
      if (line_.compare(pos_, sym.size(), sym) == 0) {
        current_.kind = Token::Kind::Symbol;
        current_.text = std::string(sym);
        pos_ += sym.size();
        return;
      }
    }
    current_.kind = Token::Kind::Symbol;
    current_.text = std::string(1, c);
    ++pos_;
  }

  std::string_view line_;
  int lineno_;
  std::size_t pos_ = 0;
  Token current_;
};

class RuleParser {
 public:
  explicit RuleParser(LineLexer& lex) : lex_(lex) {}

  Rule parse_rule() {
    Rule rule;
    expect_word("phase");
    rule.phase = static_cast<int>(expect_int("phase number"));
    expect_word("rule");
    Token name = lex_.take();
    if (name.kind != Token::Kind::Word) lex_.fail("expected a rule name");
    rule.name = name.text;
    expect_symbol(":");

    rule.sender.kind = parse_element_kind();
    rule.sender.deg = parse_degree_constraint();
    if (peek_word("with")) {
      lex_.take();
      rule.sender.predicates.push_back(parse_predicate(rule.sender.kind));
      while (peek_word("and")) {
        lex_.take();
        rule.sender.predicates.push_back(parse_predicate(rule.sender.kind));
      }
    }

    if (peek_word("gives")) {
      lex_.take();
      rule.is_average = false;
      rule.amount = parse_rational();
      expect_word("to");
    } else if (peek_word("averages")) {
      Token avg = lex_.take();
      rule.is_average = true;
      if (rule.sender.kind != SenderPattern::Kind::Face) {
        throw ParseError(lex_.lineno(), avg.column, "averages needs a face sender");
      }
    } else {
      lex_.fail("expected 'gives' or 'averages'");
    }

    rule.receiver = parse_receiver(rule.sender.kind);
    if (rule.is_average && rule.receiver.kind != SenderPattern::Kind::Vertex) {
      lex_.fail("averages needs vertex receivers");
    }
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after rule");
    return rule;
  }

 private:
  bool peek_word(std::string_view w) const {
    return lex_.peek().kind == Token::Kind::Word && lex_.peek().text == w;
  }

  void expect_word(std::string_view w) {
    if (!peek_word(w)) lex_.fail("expected '" + std::string(w) + "'");
    lex_.take();
  }

  void expect_symbol(std::string_view s) {
    if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != s) {
      lex_.fail("expected '" + std::string(s) + "'");
    }
    lex_.take();
  }

  long long expect_int(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::Int) lex_.fail("expected " + what);
    return lex_.take().value;
  }

  SenderPattern::Kind parse_element_kind() {
    if (peek_word("vertex")) {
      lex_.take();
      return SenderPattern::Kind::Vertex;
    }
    if (peek_word("face")) {
      lex_.take();
      return SenderPattern::Kind::Face;
    }
    lex_.fail("expected 'vertex' or 'face'");
  }

  DegreeConstraint parse_degree_constraint() {
    expect_word("deg");
    DegreeConstraint dc;
    if (lex_.peek().kind != Token::Kind::Symbol) lex_.fail("expected '=', '>=' or '<='");
    std::string op = lex_.take().text;
    if (op == "=") {
      dc.op = DegreeConstraint::Op::Eq;
    } else if (op == ">=") {
      dc.op = DegreeConstraint::Op::Ge;
    } else if (op == "<=") {
      dc.op = DegreeConstraint::Op::Le;
    } else {
      lex_.fail("expected '=', '>=' or '<=' after 'deg'");
    }
    dc.k = static_cast<int>(expect_int("a degree bound"));
    return dc;
  }

  CountPredicate::Relation parse_relation(SenderPattern::Kind sender_kind) {
    if (peek_word("adjacent")) {
      Token t = lex_.take();
      if (sender_kind != SenderPattern::Kind::Vertex) {
        throw ParseError(lex_.lineno(), t.column, "'adjacent' needs a vertex sender");
      }
      return CountPredicate::Relation::Adjacent;
    }
    if (peek_word("incident")) {
      lex_.take();
      return CountPredicate::Relation::Incident;
    }
    lex_.fail("expected 'adjacent' or 'incident'");
  }

  CountPredicate parse_predicate(SenderPattern::Kind sender_kind) {
    CountPredicate pred;
    if (peek_word("not")) {
      // sugar: not adjacent vertex deg>=k  ==  count(adjacent vertex deg>=k) == 0
      lex_.take();
      pred.relation = parse_relation(sender_kind);
      expect_word("vertex");
      pred.subject = parse_degree_constraint();
      pred.cmp = CountPredicate::Cmp::Eq;
      pred.value = 0;
      return pred;
    }
    expect_word("count");
    expect_symbol("(");
    pred.relation = parse_relation(sender_kind);
    expect_word("vertex");
    pred.subject = parse_degree_constraint();
    expect_symbol(")");
    if (lex_.peek().kind != Token::Kind::Symbol) lex_.fail("expected a comparator");
    std::string cmp = lex_.take().text;
    if (cmp == "==") {
      pred.cmp = CountPredicate::Cmp::Eq;
    } else if (cmp == ">=") {
      pred.cmp = CountPredicate::Cmp::Ge;
    } else if (cmp == "<=") {
      pred.cmp = CountPredicate::Cmp::Le;
    } else if (cmp == "<") {
      pred.cmp = CountPredicate::Cmp::Lt;
    } else if (cmp == ">") {
      pred.cmp = CountPredicate::Cmp::Gt;
    } else {
      lex_.fail("expected '==', '>=', '<=', '<' or '>'");
    }
    pred.value = static_cast<int>(expect_int("a count"));
    return pred;
  }

  Rational parse_rational() {
    Token num = lex_.take();
    if (num.kind != Token::Kind::Int) {
      throw ParseError(lex_.lineno(), num.column, "expected a rational amount");
    }
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "/") {
      lex_.take();
      Token den = lex_.take();
      if (den.kind != Token::Kind::Int) {
        throw ParseError(lex_.lineno(), den.column, "expected a denominator");
      }
      if (den.value == 0) {
        throw ParseError(lex_.lineno(), den.column, "zero denominator");
      }
      return Rational(num.value, den.value);
    }
    return Rational(num.value);
  }

  ReceiverPattern parse_receiver(SenderPattern::Kind sender_kind) {
    ReceiverPattern r;
    Token rel = lex_.peek();
    r.relation = parse_relation(sender_kind);
    if (peek_word("vertex")) {
      lex_.take();
      r.kind = SenderPattern::Kind::Vertex;
    } else if (peek_word("face")) {
      lex_.take();
      r.kind = SenderPattern::Kind::Face;
    } else {
      lex_.fail("expected 'vertex' or 'face'");
    }
    if (r.relation == CountPredicate::Relation::Adjacent &&
        r.kind != SenderPattern::Kind::Vertex) {
      throw ParseError(lex_.lineno(), rel.column, "'adjacent' receivers must be vertices");
    }
    if (sender_kind == SenderPattern::Kind::Face && r.kind == SenderPattern::Kind::Face) {
      throw ParseError(lex_.lineno(), rel.column, "face-to-face transfers are not supported");
    }
    r.deg = parse_degree_constraint();
    return r;
  }

  LineLexer& lex_;
};

}  // namespace

RuleSet parse_rules(std::string_view text) {
  RuleSet rs;
  int lineno = 0;
  std::size_t pos = 0;
  int last_phase = std::numeric_limits<int>::min();
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++lineno;
    LineLexer lex(line, lineno);
    if (lex.peek().kind != Token::Kind::End) {
      RuleParser parser(lex);
      Token first = lex.peek();
      Rule rule = parser.parse_rule();
      if (rule.phase < last_phase) {
        throw ParseError(lineno, first.column, "phases must be nondecreasing in file order");
      }
      last_phase = rule.phase;
      rs.rules.push_back(std::move(rule));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return rs;
}

// ---- lint -----------------------------------------------------------------

namespace {

bool intervals_overlap(int lo1, int hi1, int lo2, int hi2) {
  if (hi1 >= 0 && lo2 > hi1) return false;
  if (hi2 >= 0 && lo1 > hi2) return false;
  return true;
}

// Count values allowed by a predicate, as a closed interval over >= 0.
std::pair<int, int> cmp_interval(const CountPredicate& p) {
  switch (p.cmp) {
    case CountPredicate::Cmp::Eq: return {p.value, p.value};
    case CountPredicate::Cmp::Ge: return {p.value, -1};
    case CountPredicate::Cmp::Le: return {0, p.value};
    case CountPredicate::Cmp::Lt: return {0, p.value - 1};
    case CountPredicate::Cmp::Gt: return {p.value + 1, -1};
  }
  return {0, -1};
}

bool same_subject(const CountPredicate& a, const CountPredicate& b) {
  return a.relation == b.relation && a.subject.op == b.subject.op && a.subject.k == b.subject.k;
}

bool mutually_exclusive(const SenderPattern& a, const SenderPattern& b) {
  for (const auto& pa : a.predicates) {
    for (const auto& pb : b.predicates) {
      if (!same_subject(pa, pb)) continue;
      auto [lo1, hi1] = cmp_interval(pa);
      auto [lo2, hi2] = cmp_interval(pb);
      if (!intervals_overlap(lo1, hi1, lo2, hi2)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> lint_rules(const RuleSet& rs) {
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.rules.size(); ++j) {
      const Rule& a = rs.rules[i];
      const Rule& b = rs.rules[j];
      if (a.phase != b.phase || a.is_average || b.is_average) continue;
      if (a.sender.kind != b.sender.kind) continue;
      if (!intervals_overlap(a.sender.deg.lo(), a.sender.deg.hi(), b.sender.deg.lo(),
                             b.sender.deg.hi())) {
        continue;
      }
      if (a.receiver.relation != b.receiver.relation || a.receiver.kind != b.receiver.kind) {
        continue;
      }
      if (!intervals_overlap(a.receiver.deg.lo(), a.receiver.deg.hi(), b.receiver.deg.lo(),
                             b.receiver.deg.hi())) {
        continue;
      }
      if (mutually_exclusive(a.sender, b.sender)) continue;
      warnings.push_back("rules " + a.name + " and " + b.name +
                         " may both fire on one sender/receiver pair");
    }
  }
  return warnings;
}

// ---- evaluation -----------------------------------------------------------

namespace {

int predicate_count(const EmbeddedGraph& eg, const CountPredicate& pred,
                    SenderPattern::Kind kind, int id) {
  const Graph& g = eg.graph;
  int count = 0;
  if (kind == SenderPattern::Kind::Vertex) {
    if (pred.relation == CountPredicate::Relation::Adjacent) {
      for (VertexId u : g.adj[id]) {
        if (pred.subject.matches(g.degree(u))) ++count;
      }
    } else {
      // incident vertices of a vertex are not a thing; treat as incident
      // faces' walk? Parser forbids this form for vertex senders.
      count = 0;
    }
  } else {
    for (VertexId v : eg.faces[id].boundary_walk) {
      if (pred.subject.matches(g.degree(v))) ++count;
    }
  }
  return count;
}

bool sender_matches(const EmbeddedGraph& eg, const SenderPattern& p, int id) {
  const Graph& g = eg.graph;
  int degree = p.kind == SenderPattern::Kind::Vertex ? g.degree(id) : eg.faces[id].degree();
  if (!p.deg.matches(degree)) return false;
  for (const CountPredicate& pred : p.predicates) {
    if (!pred.matches(predicate_count(eg, pred, p.kind, id))) return false;
  }
  return true;
}

}  // namespace

DischargeResult evaluate(const EmbeddedGraph& eg, const RuleSet& rs) {
  const Graph& g = eg.graph;
  DischargeResult result;
  result.initial = initial_charges(eg);
  result.mu_star = result.initial;

  auto transfer = [&](const std::string& rule, ElementRef from, ElementRef to,
                      const Rational& amount) {
    result.log.push_back({rule, from, to, amount});
    result.mu_star.at(from) -= amount;
    result.mu_star.at(to) += amount;
  };

  for (const Rule& rule : rs.rules) {  // parse enforces nondecreasing phases
    if (!rule.is_average) {
      if (rule.sender.kind == SenderPattern::Kind::Vertex) {
        for (VertexId v = 0; v < g.n; ++v) {
          if (!sender_matches(eg, rule.sender, v)) continue;
          if (rule.receiver.kind == SenderPattern::Kind::Vertex) {
            for (VertexId u : g.adj[v]) {
              if (rule.receiver.deg.matches(g.degree(u))) {
                transfer(rule.name, vertex_ref(v), vertex_ref(u), rule.amount);
              }
            }
          } else {
            for (FaceId fid : eg.faces_at(v)) {
              if (rule.receiver.deg.matches(eg.faces[fid].degree())) {
                transfer(rule.name, vertex_ref(v), face_ref(fid), rule.amount);
              }
            }
          }
        }
      } else {
        for (const Face& f : eg.faces) {
          if (!sender_matches(eg, rule.sender, f.id)) continue;
          for (VertexId v : f.boundary_walk) {
            if (rule.receiver.deg.matches(g.degree(v))) {
              transfer(rule.name, face_ref(f.id), vertex_ref(v), rule.amount);
            }
          }
        }
      }
      continue;
    }

    // Averaging: per matching face, the distinct receiver vertices form a
    // group; a vertex in several groups voids all of them.
    struct Group {
      FaceId face;
      std::vector<VertexId> members;
    };
    std::vector<Group> groups;
    std::vector<int> uses(g.n, 0);
    for (const Face& f : eg.faces) {
      if (!sender_matches(eg, rule.sender, f.id)) continue;
      std::vector<VertexId> members;
      for (VertexId v : f.boundary_walk) {
        if (rule.receiver.deg.matches(g.degree(v))) members.push_back(v);
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() < 2) continue;
      for (VertexId v : members) ++uses[v];
      groups.push_back({f.id, std::move(members)});
    }
    for (const Group& grp : groups) {
      bool conflicted = std::any_of(grp.members.begin(), grp.members.end(),
                                    [&](VertexId v) { return uses[v] > 1; });
      if (conflicted) {
        result.diagnostics.push_back(
            {rule.name, "face " + std::to_string(grp.face) +
                            ": a member sits in another averaging group; skipped"});
        continue;
      }
      Rational sum;
      for (VertexId v : grp.members) sum += result.mu_star.vertex_charge[v];
      Rational mean = sum / Rational(static_cast<long long>(grp.members.size()));
      // Settle above-mean members against below-mean members.
      std::vector<std::pair<VertexId, Rational>> owes;
      std::vector<std::pair<VertexId, Rational>> needs;
      for (VertexId v : grp.members) {
        Rational delta = result.mu_star.vertex_charge[v] - mean;
        if (delta > Rational(0)) owes.emplace_back(v, delta);
        if (delta < Rational(0)) needs.emplace_back(v, -delta);
      }
      std::size_t oi = 0;
      std::size_t ni = 0;
      while (oi < owes.size() && ni < needs.size()) {
        Rational amount = std::min(owes[oi].second, needs[ni].second);
        transfer(rule.name, vertex_ref(owes[oi].first), vertex_ref(needs[ni].first), amount);
        owes[oi].second -= amount;
        needs[ni].second -= amount;
        if (owes[oi].second.is_zero()) ++oi;
        if (needs[ni].second.is_zero()) ++ni;
      }
    }
  }

  return result;
}

}  // namespace defcol
