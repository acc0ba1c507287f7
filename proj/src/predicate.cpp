#include "irrlab/predicate.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace irrlab::enumerate {

namespace {

using Eval = std::function<bool(const finspace::FiniteSpace&,
                                const finspace::PropertyProfile&)>;

const std::map<std::string, Eval>& flag_table() {
  using finspace::FiniteSpace;
  using finspace::PropertyProfile;
  static const std::map<std::string, Eval> table = {
      {"p1", [](const FiniteSpace&, const PropertyProfile& p) { return p.p1; }},
      {"p2", [](const FiniteSpace&, const PropertyProfile& p) { return p.p2; }},
      {"p3", [](const FiniteSpace&, const PropertyProfile& p) { return p.p3; }},
      {"p4", [](const FiniteSpace&, const PropertyProfile& p) { return p.p4; }},
      {"p5", [](const FiniteSpace&, const PropertyProfile& p) { return p.p5; }},
      {"p6", [](const FiniteSpace&, const PropertyProfile& p) { return p.p6; }},
      {"irreducible",
       [](const FiniteSpace&, const PropertyProfile& p) { return p.irreducible; }},
      {"connected",
       [](const FiniteSpace&, const PropertyProfile& p) { return p.connected; }},
      {"nonempty",
       [](const FiniteSpace&, const PropertyProfile& p) { return p.nonempty; }},
      {"discrete",
       [](const FiniteSpace&, const PropertyProfile& p) { return p.discrete; }},
      {"totallyDisconnected",
       [](const FiniteSpace&, const PropertyProfile& p) {
         return p.totally_disconnected;
       }},
      {"pointwise",
       [](const FiniteSpace&, const PropertyProfile& p) {
         return p.all_pointwise();
       }},
      {"locallyIrreducible",
       [](const FiniteSpace&, const PropertyProfile& p) { return p.p1; }},
      {"irrLocallyFinite",
       [](const FiniteSpace& X, const PropertyProfile&) {
         return finspace::irr_locally_finite(X);
       }},
      {"t0",
       [](const FiniteSpace& X, const PropertyProfile&) {
         return finspace::is_t0(X);
       }},
      {"true",
       [](const FiniteSpace&, const PropertyProfile&) { return true; }},
      {"false",
       [](const FiniteSpace&, const PropertyProfile&) { return false; }},
  };
  return table;
}

struct Token {
  enum Kind { Flag, Not, And, Or, LParen, RParen, End } kind;
  std::string name;
};

std::vector<Token> tokenize(const std::string& expr) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < expr.size()) {
    const char c = expr[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '!' || c == '~') {
      tokens.push_back({Token::Not, {}});
      ++i;
    } else if (c == '&') {
      tokens.push_back({Token::And, {}});
      i += (i + 1 < expr.size() && expr[i + 1] == '&') ? 2 : 1;
    } else if (c == '|') {
      tokens.push_back({Token::Or, {}});
      i += (i + 1 < expr.size() && expr[i + 1] == '|') ? 2 : 1;
    } else if (c == '(') {
      tokens.push_back({Token::LParen, {}});
      ++i;
    } else if (c == ')') {
      tokens.push_back({Token::RParen, {}});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < expr.size() &&
             (std::isalnum(static_cast<unsigned char>(expr[i])) ||
              expr[i] == '_'))
        word += expr[i++];
      if (word == "and")
        tokens.push_back({Token::And, {}});
      else if (word == "or")
        tokens.push_back({Token::Or, {}});
      else if (word == "not")
        tokens.push_back({Token::Not, {}});
      else
        tokens.push_back({Token::Flag, word});
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in predicate");
    }
  }
  tokens.push_back({Token::End, {}});
  return tokens;
}

}  // namespace

struct Predicate::Node {
  enum Kind { Flag, Not, And, Or } kind;
  Eval eval;  // Flag only
  std::string name;
  std::shared_ptr<const Node> left, right;
};

namespace {

using NodePtr = std::shared_ptr<const Predicate::Node>;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  NodePtr parse() {
    auto node = expr();
    if (peek().kind != Token::End)
      throw std::invalid_argument("trailing input in predicate");
    return node;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  NodePtr expr() {
    auto node = term();
    while (peek().kind == Token::Or) {
      take();
      auto rhs = term();
      node = std::make_shared<Predicate::Node>(
          Predicate::Node{Predicate::Node::Or, {}, {}, node, rhs});
    }
    return node;
  }

  NodePtr term() {
    auto node = factor();
    while (peek().kind == Token::And) {
      take();
      auto rhs = factor();
      node = std::make_shared<Predicate::Node>(
          Predicate::Node{Predicate::Node::And, {}, {}, node, rhs});
    }
    return node;
  }

  NodePtr factor() {
    const Token tok = take();
    switch (tok.kind) {
      case Token::Not: {
        auto child = factor();
        return std::make_shared<Predicate::Node>(
            Predicate::Node{Predicate::Node::Not, {}, {}, child, nullptr});
      }
      case Token::LParen: {
        auto node = expr();
        if (take().kind != Token::RParen)
          throw std::invalid_argument("missing ')' in predicate");
        return node;
      }
      case Token::Flag: {
        const auto it = flag_table().find(tok.name);
        if (it == flag_table().end())
          throw std::invalid_argument("unknown flag '" + tok.name + "'");
        return std::make_shared<Predicate::Node>(Predicate::Node{
            Predicate::Node::Flag, it->second, tok.name, nullptr, nullptr});
      }
      default:
        throw std::invalid_argument("malformed predicate");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool eval_node(const Predicate::Node& node, const finspace::FiniteSpace& X,
               const finspace::PropertyProfile& p) {
  switch (node.kind) {
    case Predicate::Node::Flag: return node.eval(X, p);
    case Predicate::Node::Not: return !eval_node(*node.left, X, p);
    case Predicate::Node::And:
      return eval_node(*node.left, X, p) && eval_node(*node.right, X, p);
    case Predicate::Node::Or:
      return eval_node(*node.left, X, p) || eval_node(*node.right, X, p);
  }
  return false;
}

}  // namespace

Predicate Predicate::parse(const std::string& expr) {
  Predicate pred;
  pred.root_ = Parser(tokenize(expr)).parse();
  pred.text_ = expr;
  return pred;
}

bool Predicate::eval(const finspace::FiniteSpace& space,
                     const finspace::PropertyProfile& profile) const {
  return eval_node(*root_, space, profile);
}

std::vector<std::string> Predicate::known_flags() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : flag_table()) out.push_back(name);
  return out;
}

}  // namespace irrlab::enumerate
