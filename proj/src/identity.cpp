#include "homcolor/identity.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "homcolor/error.hpp"

namespace homcolor {

char var_name(Var v) { return static_cast<char>('x' + static_cast<int>(v)); }

std::set<std::string> IdentitySchema::product_names() const {
  std::set<std::string> out;
  for (const auto& t : terms) {
    out.insert(t.pattern.outer);
    if (!t.pattern.inner.empty()) out.insert(t.pattern.inner);
  }
  return out;
}

namespace {

// Parsed argument of a product application, before it is folded into a Pattern.
struct Node {
  enum class Kind { var, twisted_var, app } kind = Kind::var;
  Var var = Var::x;  // var, twisted_var
  std::string product;
  Var left = Var::x;
  Var right = Var::x;
  std::size_t position = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdentitySchema parse(std::string name) {
    IdentitySchema schema;
    schema.name = std::move(name);
    skip_ws();
    if (at_end()) fail("empty identity");

    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (!next_is_rational_after_sign()) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
    }
    schema.terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      schema.terms.push_back(term(c == '-' ? -1 : 1));
    }
    finish(schema);
    return schema;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "', found end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  bool next_is_rational_after_sign() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail(at_end() ? "expected a name, found end of input" : std::string("expected a name, found '") + peek() + "'");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Var variable() {
    skip_ws();
    std::size_t at = pos_;
    std::string id = identifier();
    if (id == "x") return Var::x;
    if (id == "y") return Var::y;
    if (id == "z") return Var::z;
    fail_at("unknown variable '" + id + "'", at);
  }

  Rational rational() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    skip_ws();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    std::string literal;
    for (char c : text_.substr(start, pos_ - start))
      if (!std::isspace(static_cast<unsigned char>(c))) literal.push_back(c);
    try {
      return parse_rational(literal);
    } catch (const StructuralError&) {
      fail_at("invalid coefficient '" + literal + "'", start);
    }
  }

  static bool reserved(const std::string& id) { return id == "a" || id == "eps" || id == "x" || id == "y" || id == "z"; }

  Term term(Rational sign) {
    Term t;
    t.coeff = sign;
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '+' || peek() == '-') {
      t.coeff *= rational();
      expect('*');
    }
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      std::string id = identifier();
      if (id == "eps") {
        t.eps.push_back(eps_factor());
        expect('*');
        continue;
      }
      pos_ = at;
      t.pattern = application();
      return t;
    }
  }

  EpsFactor eps_factor() {
    expect('(');
    EpsFactor f;
    f.left = var_sum();
    expect(',');
    f.right = var_sum();
    expect(')');
    return f;
  }

  std::vector<Var> var_sum() {
    std::vector<Var> vars{variable()};
    while (true) {
      skip_ws();
      if (peek() != '+') return vars;
      ++pos_;
      vars.push_back(variable());
    }
  }

  Node node() {
    skip_ws();
    Node n;
    n.position = pos_;
    std::string id = identifier();
    if (id == "x" || id == "y" || id == "z") {
      n.kind = Node::Kind::var;
      n.var = id == "x" ? Var::x : id == "y" ? Var::y : Var::z;
      return n;
    }
    if (id == "eps") fail_at("eps(...) may only appear as a coefficient factor", n.position);
    if (id.empty()) fail("expected a variable or a product");
    skip_ws();
    if (peek() != '(') fail_at("unknown variable '" + id + "'", n.position);
    expect('(');
    skip_ws();
    if (id == "a") {
      std::size_t inner_at = pos_;
      std::string arg = identifier();
      if (arg == "a") fail_at("alpha nested under alpha", inner_at);
      skip_ws();
      if (arg != "x" && arg != "y" && arg != "z") {
        if (peek() == '(') fail_at("alpha may only be applied to a variable", inner_at);
        fail_at("unknown variable '" + arg + "'", inner_at);
      }
      if (peek() == ',') fail("'a' is the twisting map and takes one argument, not a binary product");
      n.kind = Node::Kind::twisted_var;
      n.var = arg == "x" ? Var::x : arg == "y" ? Var::y : Var::z;
      expect(')');
      return n;
    }
    n.kind = Node::Kind::app;
    n.product = id;
    n.left = inner_leaf();
    expect(',');
    n.right = inner_leaf();
    expect(')');
    return n;
  }

  Var inner_leaf() {
    skip_ws();
    std::size_t at = pos_;
    std::string id = identifier();
    skip_ws();
    if (peek() == '(') {
      if (id == "a") fail_at("alpha inside an inner product is not an admissible term shape", at);
      fail_at("pattern deeper than two product applications", at);
    }
    pos_ = at;
    return variable();
  }

  Pattern application() {
    skip_ws();
    std::size_t at = pos_;
    std::string id = identifier();
    if (reserved(id)) {
      if (id == "a") fail_at("a term must be a product application, not alpha", at);
      fail_at("a term must be a product application, found variable '" + id + "'", at);
    }
    expect('(');
    Node lhs = node();
    expect(',');
    Node rhs = node();
    expect(')');

    Pattern p;
    p.outer = id;
    using K = Node::Kind;
    if (lhs.kind == K::app && rhs.kind == K::app)
      fail_at("both arguments of '" + id + "' are products; at most one nested product is allowed", at);
    if (lhs.kind == K::app) {
      p.shape = Pattern::Shape::nested_left;
      p.inner = lhs.product;
      p.leaves = {lhs.left, lhs.right, rhs.var};
      p.twisted = rhs.kind == K::twisted_var;
    } else if (rhs.kind == K::app) {
      p.shape = Pattern::Shape::nested_right;
      p.inner = rhs.product;
      p.leaves = {lhs.var, rhs.left, rhs.right};
      p.twisted = lhs.kind == K::twisted_var;
    } else {
      if (lhs.kind == K::twisted_var || rhs.kind == K::twisted_var)
        fail_at("alpha may only appear next to a nested product", at);
      p.shape = Pattern::Shape::flat;
      p.leaves = {lhs.var, rhs.var};
    }
    if (reserved(p.inner) && !p.inner.empty()) fail_at("'" + p.inner + "' is not a product name", at);
    std::set<Var> distinct(p.leaves.begin(), p.leaves.end());
    if (distinct.size() != p.leaves.size()) fail_at("a variable appears twice in one term", at);
    return p;
  }

  void finish(IdentitySchema& schema) {
    schema.arity = static_cast<int>(schema.terms.front().pattern.leaves.size());
    for (const auto& t : schema.terms) {
      if (static_cast<int>(t.pattern.leaves.size()) != schema.arity)
        throw ParseError("all terms must use the same number of variables", 0);
      for (Var v : t.pattern.leaves)
        if (static_cast<int>(v) >= schema.arity)
          throw ParseError(std::string("unknown variable '") + var_name(v) + "' in a two-variable identity", 0);
      for (const auto& f : t.eps)
        for (const auto* side : {&f.left, &f.right})
          for (Var v : *side)
            if (static_cast<int>(v) >= schema.arity)
              throw ParseError(std::string("unknown variable '") + var_name(v) + "' in eps factor", 0);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_vars(const std::vector<Var>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += '+';
    s += var_name(vs[i]);
  }
  return s;
}

std::string render_pattern(const Pattern& p) {
  auto leaf = [&](Var v, bool twist) {
    return twist ? std::string("a(") + var_name(v) + ")" : std::string(1, var_name(v));
  };
  std::ostringstream os;
  switch (p.shape) {
    case Pattern::Shape::flat:
      os << p.outer << '(' << var_name(p.leaves[0]) << ',' << var_name(p.leaves[1]) << ')';
      break;
    case Pattern::Shape::nested_left:
      os << p.outer << '(' << p.inner << '(' << var_name(p.leaves[0]) << ',' << var_name(p.leaves[1]) << "),"
         << leaf(p.leaves[2], p.twisted) << ')';
      break;
    case Pattern::Shape::nested_right:
      os << p.outer << '(' << leaf(p.leaves[0], p.twisted) << ',' << p.inner << '(' << var_name(p.leaves[1])
         << ',' << var_name(p.leaves[2]) << "))";
      break;
  }
  return os.str();
}

struct ResolvedTerm {
  const Term* term;
  const Product* outer;
  const Product* inner;
};

std::vector<ResolvedTerm> resolve(const HomAlgebra& alg, const IdentitySchema& schema, const Binding& binding) {
  auto lookup = [&](const std::string& name) -> const Product* {
    auto it = binding.find(name);
    return &alg.product(it == binding.end() ? name : it->second);
  };
  std::vector<ResolvedTerm> out;
  out.reserve(schema.terms.size());
  for (const auto& t : schema.terms)
    out.push_back({&t, lookup(t.pattern.outer), t.pattern.inner.empty() ? nullptr : lookup(t.pattern.inner)});
  return out;
}

Vector eval_pattern(const HomAlgebra& alg, const ResolvedTerm& rt, const std::array<const Vector*, 3>& args) {
  const Pattern& p = rt.term->pattern;
  auto arg = [&](std::size_t k) -> const Vector& { return *args[static_cast<std::size_t>(p.leaves[k])]; };
  switch (p.shape) {
    case Pattern::Shape::flat:
      return (*rt.outer)(arg(0), arg(1));
    case Pattern::Shape::nested_left: {
      Vector inner = (*rt.inner)(arg(0), arg(1));
      if (inner.is_zero()) return inner;
      return p.twisted ? (*rt.outer)(inner, alg.alpha()(arg(2))) : (*rt.outer)(inner, arg(2));
    }
    case Pattern::Shape::nested_right: {
      Vector inner = (*rt.inner)(arg(1), arg(2));
      if (inner.is_zero()) return inner;
      return p.twisted ? (*rt.outer)(alg.alpha()(arg(0)), inner) : (*rt.outer)(arg(0), inner);
    }
  }
  return {};
}

int eps_sign(const HomAlgebra& alg, const std::vector<EpsFactor>& factors, const std::array<Degree, 3>& deg) {
  int sign = 1;
  for (const auto& f : factors) {
    Degree l = alg.group().zero(), r = alg.group().zero();
    for (Var v : f.left) l = alg.group().add(l, deg[static_cast<std::size_t>(v)]);
    for (Var v : f.right) r = alg.group().add(r, deg[static_cast<std::size_t>(v)]);
    sign *= alg.eps()(l, r);
  }
  return sign;
}

Vector residual(const HomAlgebra& alg, const std::vector<ResolvedTerm>& terms, const std::array<const Vector*, 3>& args,
                const std::array<Degree, 3>& deg) {
  Vector out;
  for (const auto& rt : terms) {
    Vector v = eval_pattern(alg, rt, args);
    if (v.is_zero()) continue;
    out.add_scaled(v, rt.term->coeff * eps_sign(alg, rt.term->eps, deg));
  }
  return out;
}

}  // namespace

IdentitySchema parse_identity(std::string_view text, std::string name) { return Parser(text).parse(std::move(name)); }

std::string render_identity(const IdentitySchema& schema) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : schema.terms) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (mag != 1) os << to_string(mag) << '*';
    for (const auto& f : t.eps) os << "eps(" << render_vars(f.left) << ',' << render_vars(f.right) << ")*";
    os << render_pattern(t.pattern);
  }
  return os.str();
}

IdentitySchema rebind(const IdentitySchema& schema, const Binding& binding) {
  IdentitySchema out = schema;
  auto rename = [&](std::string& name) {
    if (name.empty()) return;
    if (auto it = binding.find(name); it != binding.end()) name = it->second;
  };
  for (auto& t : out.terms) {
    rename(t.pattern.outer);
    rename(t.pattern.inner);
  }
  return out;
}

CheckReport evaluate_identity(const HomAlgebra& alg, const IdentitySchema& schema, const Binding& binding) {
  const auto terms = resolve(alg, schema, binding);
  const std::size_t n = alg.dimension();
  const auto arity = static_cast<std::size_t>(schema.arity);

  std::vector<Vector> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Vector::basis(i));

  CheckReport report;
  std::array<std::size_t, 3> idx{0, 0, 0};
  while (true) {
    std::array<const Vector*, 3> args{&basis[idx[0]], &basis[idx[1]], &basis[idx[2]]};
    std::array<Degree, 3> deg{alg.degree(idx[0]), alg.degree(idx[1]), alg.degree(idx[2])};
    ++report.tuples_checked;
    Vector r = residual(alg, terms, args, deg);
    if (!r.is_zero()) {
      report.passed = false;
      report.witness = Witness{schema.name, std::vector<std::size_t>(idx.begin(), idx.begin() + arity), std::move(r)};
      return report;
    }
    // Odometer over the first `arity` coordinates, last coordinate fastest.
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++idx[k] < n) break;
      idx[k] = 0;
      if (k == 0) return report;
    }
  }
}

Vector evaluate_at(const HomAlgebra& alg, const IdentitySchema& schema, std::span<const Vector> args,
                   const Binding& binding) {
  if (args.size() != static_cast<std::size_t>(schema.arity))
    throw StructuralError("identity '" + schema.name + "' takes " + std::to_string(schema.arity) + " arguments");
  std::array<const Vector*, 3> ptrs{};
  std::array<Degree, 3> deg{alg.group().zero(), alg.group().zero(), alg.group().zero()};
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].is_zero()) return {};
    auto d = alg.space().homogeneous_degree(args[k]);
    if (!d) throw StructuralError("argument " + std::to_string(k) + " is not homogeneous");
    deg[k] = *d;
    ptrs[k] = &args[k];
  }
  for (std::size_t k = args.size(); k < 3; ++k) ptrs[k] = &args[0];
  return residual(alg, resolve(alg, schema, binding), ptrs, deg);
}

}  // namespace homcolor
