// Copyright 2026 The coprimemax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coprimemax/atlas.hpp"

#include <cctype>
#include <optional>

#include "coprimemax/group_orders.hpp"

namespace coprimemax {
namespace {

constexpr std::string_view kTimesUtf8 = "\xC3\x97";
constexpr std::string_view kOmegaUtf8 = "\xCE\xA9";

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// The pieces of a group name such as ^2E_6(2), PSL_3(4), Fi_{24}', POmega_8^+(3).
struct NameParts {
  unsigned twist = 0;
  std::string family;
  std::optional<unsigned> sub;
  bool prime = false;
  int sign = 0;  // +1, -1, 0
  std::optional<std::uint64_t> q;

  std::string canonical() const {
    std::string s;
    if (twist)
      s += "^" + std::to_string(twist);
    s += family == "ON" ? "O'N" : family;
    if (sub) {
      std::string d = std::to_string(*sub);
      s += "_" + (d.size() > 1 ? "{" + d + "}" : d);
    }
    if (prime)
      s += "'";
    if (sign)
      s += sign > 0 ? "^+" : "^-";
    if (q)
      s += "(" + std::to_string(*q) + ")";
    return s;
  }
};

FactoredInt order_of(const NameParts& n) {
  auto need_sub = [&] {
    if (!n.sub)
      throw std::invalid_argument(n.family + " needs a subscript");
    return *n.sub;
  };
  auto need_q = [&] {
    if (!n.q)
      throw std::invalid_argument(n.family + " needs a field size");
    return *n.q;
  };
  auto no_q = [&] {
    if (n.q || n.sign || n.twist)
      throw std::invalid_argument("unexpected parameters on " + n.family);
  };
  if (n.twist) {
    unsigned s = need_sub();
    std::uint64_t q = need_q();
    std::string key = std::to_string(n.twist) + n.family + std::to_string(s);
    if (key == "2E6")
      return order_exceptional(ExceptionalKind::E6Twisted, q);
    if (key == "3D4")
      return order_exceptional(ExceptionalKind::D4Triality, q);
    if (key == "2B2")
      return order_exceptional(ExceptionalKind::B2Suzuki, q);
    if (key == "2G2")
      return order_exceptional(ExceptionalKind::G2Ree, q);
    if (key == "2F4")
      return order_exceptional(ExceptionalKind::F4Ree, q);
    throw std::invalid_argument("unknown twisted group ^" + key);
  }
  const std::string& f = n.family;
  if (f == "PSL" || f == "PSU" || f == "PSp" || f == "POmega" || f == "E" || f == "F" ||
      f == "G") {
    unsigned s = need_sub();
    std::uint64_t q = need_q();
    if (n.sign && f != "POmega")
      throw std::invalid_argument("unexpected sign on " + f);
    if (f == "PSL")
      return order_psl(s, q);
    if (f == "PSU")
      return order_psu(s, q);
    if (f == "PSp")
      return order_psp(s, q);
    if (f == "POmega") {
      auto kind = n.sign > 0   ? OrthogonalKind::Plus
                  : n.sign < 0 ? OrthogonalKind::Minus
                               : OrthogonalKind::Circ;
      return order_pomega(kind, s, q);
    }
    if (f == "E" && (s == 6 || s == 7 || s == 8))
      return order_exceptional(s == 6 ? ExceptionalKind::E6
                               : s == 7 ? ExceptionalKind::E7
                                        : ExceptionalKind::E8,
                               q);
    if (f == "F" && s == 4)
      return order_exceptional(ExceptionalKind::F4, q);
    if (f == "G" && s == 2)
      return order_exceptional(ExceptionalKind::G2, q);
    throw std::invalid_argument("unknown group " + n.canonical());
  }
  no_q();
  if (f == "A" || f == "S" || f == "D" || f == "C" || f == "Q") {
    if (n.prime)
      throw std::invalid_argument("unexpected ' on " + f);
    std::string flat = f + std::to_string(need_sub());
    if (f == "Q" && flat != "Q8")
      throw std::invalid_argument("only Q_8 is known");
    return small_group_order(flat);
  }
  std::string flat = f;
  if (n.sub)
    flat += std::to_string(*n.sub);
  if (n.prime)
    flat += "'";
  // The unprimed Fi24 is Fi24'.2, not the simple group; refuse rather than guess.
  if (flat == "Fi24")
    throw std::invalid_argument("write Fi_{24}' for the simple Fischer group");
  auto sp = sporadic_from_name(flat);
  if (!sp || sporadic_name(*sp) != (flat == "ON" ? "O'N" : flat))
    throw std::invalid_argument("unknown group name " + n.canonical());
  return order_sporadic(*sp);
}

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  StructureExpr parse_all() {
    StructureExpr e = product();
    ws();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  NameParts name_only() {
    ws();
    NameParts n;
    if (peek() == '^') {
      ++pos_;
      n.twist = twist_digit();
    }
    name_parts(n);
    ws();
    if (pos_ != s_.size())
      fail("trailing characters after name");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw StructureParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw StructureParseError(what, at);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  bool starts(std::string_view t) const { return s_.substr(pos_).starts_with(t); }
  void ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
      ++pos_;
  }
  void expect(char c) {
    ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool times() {
    ws();
    if (starts("\\times")) {
      pos_ += 6;
      return true;
    }
    if (starts(kTimesUtf8)) {
      pos_ += kTimesUtf8.size();
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    std::size_t start = pos_;
    if (!is_digit(peek()))
      fail("expected a number");
    std::uint64_t v = 0;
    while (is_digit(peek())) {
      if (v > (UINT64_MAX - 9) / 10)
        fail_at("number too large", start);
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  // digits or {digits}
  unsigned small_number() {
    std::size_t start = pos_;
    bool brace = peek() == '{';
    if (brace)
      ++pos_;
    std::uint64_t v = number();
    if (brace) {
      if (peek() != '}')
        fail("expected '}'");
      ++pos_;
    }
    if (v > 100000)
      fail_at("subscript too large", start);
    return static_cast<unsigned>(v);
  }

  StructureExpr product() {
    StructureExpr first = extension();
    if (!times())
      return first;
    StructureExpr p;
    p.kind = StructureExpr::Kind::Product;
    p.children.push_back(std::move(first));
    do {
      p.children.push_back(extension());
    } while (times());
    return p;
  }

  StructureExpr extension() {
    StructureExpr node = prefixed();
    for (;;) {
      ws();
      StructureExpr::Op op;
      if (starts("^.")) {
        op = StructureExpr::Op::RaisedDot;
        pos_ += 2;
      } else if (peek() == '.') {
        op = StructureExpr::Op::Dot;
        ++pos_;
      } else if (peek() == ':') {
        op = StructureExpr::Op::Colon;
        ++pos_;
      } else {
        return node;
      }
      StructureExpr ext;
      ext.kind = StructureExpr::Kind::Extension;
      ext.op = op;
      ext.children.push_back(std::move(node));
      ext.children.push_back(prefixed());
      node = std::move(ext);
    }
  }

  bool name_start() const {
    char c = peek();
    if (starts("\\times"))
      return false;
    return is_alpha(c) || c == '\\' || starts(kOmegaUtf8);
  }

  StructureExpr prefixed() {
    ws();
    if (!is_digit(peek()))
      return primary();
    std::size_t start = pos_;
    std::uint64_t k = number();
    if (starts("^.")) {
      pos_ += 2;
      return cover(k, true, prefixed(), start);
    }
    if (peek() == '^')
      return power_block(k, start);
    if (peek() == '_') {
      ++pos_;
      StructureExpr e = integer(k, start);
      e.label = std::to_string(small_number());
      return e;
    }
    if (name_start() || peek() == '(' || peek() == '{')
      return cover(k, false, primary(), start);
    return integer(k, start);
  }

  StructureExpr integer(std::uint64_t k, std::size_t start) {
    if (k == 0)
      fail_at("zero is not a group order", start);
    StructureExpr e;
    e.kind = StructureExpr::Kind::Integer;
    e.value = k;
    return e;
  }

  StructureExpr cover(std::uint64_t k, bool raised, StructureExpr child, std::size_t start) {
    if (k == 0)
      fail_at("zero is not a group order", start);
    StructureExpr e;
    e.kind = StructureExpr::Kind::CoverPrefix;
    e.value = k;
    e.raised = raised;
    e.children.push_back(std::move(child));
    return e;
  }

  StructureExpr power_block(std::uint64_t base, std::size_t start) {
    ++pos_;  // '^'
    StructureExpr e;
    e.kind = StructureExpr::Kind::PrimePowerBlock;
    e.value = base;
    if (!is_prime(base))
      fail_at("power block base " + std::to_string(base) + " is not prime", start);
    if (peek() == '{') {
      ++pos_;
      do {
        if (!is_digit(peek()))
          fail("malformed exponent block");
        e.exponents.push_back(static_cast<unsigned>(number()));
      } while (peek() == '+' && (++pos_, true));
      if (peek() != '}')
        fail("malformed exponent block");
      ++pos_;
    } else if (is_digit(peek())) {
      // a bare exponent is a single digit: 2^35 is not ATLAS style
      e.exponents.push_back(static_cast<unsigned>(peek() - '0'));
      ++pos_;
    } else {
      fail("malformed exponent block");
    }
    for (unsigned x : e.exponents)
      if (x == 0 || x > 100000)
        fail_at("malformed exponent block", start);
    return e;
  }

  unsigned twist_digit() {
    if (!is_digit(peek()))
      fail("expected twist digit");
    unsigned t = static_cast<unsigned>(peek() - '0');
    ++pos_;
    return t;
  }

  StructureExpr primary() {
    ws();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      StructureExpr e = product();
      expect(')');
      return e;
    }
    if (c == '{') {
      // {}^2E_6(2) and {^2}E_6(2) are LaTeX spellings of ^2E_6(2)
      if (starts("{}^") && is_digit(peek(3))) {
        pos_ += 3;
        return named(twist_digit(), start);
      }
      if (starts("{^") && is_digit(peek(2)) && peek(3) == '}') {
        pos_ += 2;
        unsigned t = twist_digit();
        ++pos_;
        return named(t, start);
      }
      ++pos_;
      StructureExpr e = product();
      expect('}');
      return e;
    }
    if (c == '[') {
      ++pos_;
      ws();
      std::size_t inner = pos_;
      StructureExpr child = prefixed();
      if (child.kind != StructureExpr::Kind::Integer &&
          child.kind != StructureExpr::Kind::PrimePowerBlock)
        fail_at("[...] must hold an integer or a prime power", inner);
      expect(']');
      StructureExpr e;
      e.kind = StructureExpr::Kind::BracketOrder;
      e.children.push_back(std::move(child));
      return e;
    }
    if (c == '^' && is_digit(peek(1))) {
      ++pos_;
      return named(twist_digit(), start);
    }
    if (name_start())
      return named(0, start);
    if (c == '\0')
      fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  StructureExpr named(unsigned twist, std::size_t start) {
    NameParts n;
    n.twist = twist;
    name_parts(n);
    try {
      order_of(n);
    } catch (const std::invalid_argument& ex) {
      fail_at(std::string("unknown group name: ") + ex.what(), start);
    }
    StructureExpr e;
    e.kind = StructureExpr::Kind::Named;
    e.name = n.canonical();
    return e;
  }

  void name_parts(NameParts& n) {
    std::size_t start = pos_;
    std::string id;
    for (;;) {
      if (is_alpha(peek())) {
        id += peek();
        ++pos_;
      } else if (starts("\\Omega")) {
        id += "Omega";
        pos_ += 6;
      } else if (starts(kOmegaUtf8)) {
        id += "Omega";
        pos_ += kOmegaUtf8.size();
      } else if (id == "O" && peek() == '\'' && peek(1) == 'N') {
        id += "N";
        pos_ += 2;
      } else {
        break;
      }
    }
    if (id.empty())
      fail_at("expected a group name", start);
    n.family = id;
    if (peek() == '_') {
      ++pos_;
      n.sub = small_number();
    }
    if (peek() == '\'') {
      n.prime = true;
      ++pos_;
    }
    if (peek() == '^' && (peek(1) == '+' || peek(1) == '-')) {
      n.sign = peek(1) == '+' ? 1 : -1;
      pos_ += 2;
    } else if (starts("^{+}") || starts("^{-}")) {
      n.sign = peek(2) == '+' ? 1 : -1;
      pos_ += 4;
    }
    if (peek() == '(' && is_digit(peek(1))) {
      std::size_t save = pos_;
      ++pos_;
      std::uint64_t q = number();
      if (peek() == ')') {
        ++pos_;
        n.q = q;
      } else {
        pos_ = save;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

enum class Ctx { Top, ProductChild, ExtLhs, ExtRhs, CoverChild, BracketChild };

std::string paren(const std::string& s) { return "(" + s + ")"; }

// True when the rendering of e ends in an unlabelled integer, which a
// following "^." would turn into a cover prefix.
bool ends_with_bare_integer(const StructureExpr& e) {
  using K = StructureExpr::Kind;
  switch (e.kind) {
    case K::Integer:
      return e.label.empty();
    case K::Extension: {
      const auto& rhs = e.children.at(1);
      return rhs.kind != K::Extension && rhs.kind != K::Product && ends_with_bare_integer(rhs);
    }
    case K::CoverPrefix: {
      const auto& c = e.children.at(0);
      return e.raised && c.kind != K::Extension && c.kind != K::Product &&
             ends_with_bare_integer(c);
    }
    default:
      return false;
  }
}

std::string render_in(const StructureExpr& e, Ctx ctx) {
  using K = StructureExpr::Kind;
  switch (e.kind) {
    case K::Named:
      return e.name;
    case K::Integer: {
      std::string s = std::to_string(e.value);
      if (!e.label.empty())
        s += "_" + (e.label.size() > 1 ? "{" + e.label + "}" : e.label);
      return s;
    }
    case K::PrimePowerBlock: {
      std::string s = std::to_string(e.value) + "^";
      if (e.exponents.size() == 1 && e.exponents[0] < 10)
        return s + std::to_string(e.exponents[0]);
      s += "{";
      for (std::size_t i = 0; i < e.exponents.size(); ++i)
        s += (i ? "+" : "") + std::to_string(e.exponents[i]);
      return s + "}";
    }
    case K::BracketOrder:
      return "[" + render_in(e.children.at(0), Ctx::BracketChild) + "]";
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i)
        s += (i ? " \xC3\x97 " : "") + render_in(e.children[i], Ctx::ProductChild);
      bool wrap = ctx == Ctx::ExtLhs || ctx == Ctx::ExtRhs || ctx == Ctx::CoverChild;
      return wrap ? paren(s) : s;
    }
    case K::Extension: {
      const auto& lhs = e.children.at(0);
      const auto& rhs = e.children.at(1);
      bool raised = e.op == StructureExpr::Op::RaisedDot;
      std::string l = render_in(lhs, Ctx::ExtLhs);
      if (raised && lhs.kind != K::Product && ends_with_bare_integer(lhs))
        l = paren(l);
      std::string r = render_in(rhs, Ctx::ExtRhs);
      if (raised && r.starts_with('^'))
        r = paren(r);
      const char* op = raised ? "^." : e.op == StructureExpr::Op::Colon ? ":" : ".";
      std::string s = l + op + r;
      return (ctx == Ctx::ExtRhs || ctx == Ctx::CoverChild) ? paren(s) : s;
    }
    case K::CoverPrefix: {
      const auto& child = e.children.at(0);
      std::string c = render_in(child, Ctx::CoverChild);
      bool needs_paren = c.starts_with('^') ||
                         (!e.raised && child.kind != K::Named && !c.starts_with('('));
      if (needs_paren)
        c = paren(c);
      return std::to_string(e.value) + (e.raised ? "^." : "") + c;
    }
  }
  return {};
}

}  // namespace

StructureExpr parse_structure(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const StructureExpr& e) { return render_in(e, Ctx::Top); }

FactoredInt named_group_order(std::string_view canonical_name) {
  NameParts n;
  try {
    n = Parser(canonical_name).name_only();
  } catch (const StructureParseError& ex) {
    throw std::invalid_argument(std::string("no order rule for '") + std::string(canonical_name) +
                                "': " + ex.what());
  }
  return order_of(n);
}

FactoredInt structure_order(const StructureExpr& e) {
  using K = StructureExpr::Kind;
  switch (e.kind) {
    case K::Named:
      return named_group_order(e.name);
    case K::Integer:
      return FactoredInt::of(e.value);
    case K::PrimePowerBlock: {
      unsigned total = 0;
      for (unsigned x : e.exponents)
        total += x;
      return FactoredInt::prime_power(static_cast<unsigned long>(e.value), total);
    }
    case K::CoverPrefix:
      return fi_mul(FactoredInt::of(e.value), structure_order(e.children.at(0)));
    case K::BracketOrder:
    case K::Product:
    case K::Extension: {
      FactoredInt r;
      for (const auto& c : e.children)
        r = fi_mul(r, structure_order(c));
      return r;
    }
  }
  throw std::logic_error("structure_order: bad node");
}

}  // namespace coprimemax
