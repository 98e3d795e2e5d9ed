#include "tanglecalc/parse.hpp"

#include "tanglecalc/errors.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  Parsed parseTop() {
    skipWs();
    Parsed out;
    std::size_t mark = pos_;
    std::string word = peekWord();
    if (word == "N" || word == "M" || word == "glue") {
      out = parseLink();
    } else {
      out = parseExpr();
    }
    skipWs();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    (void)mark;
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eof() const { return pos_ >= s_.size(); }

  char peek() const { return eof() ? '\0' : s_[pos_]; }

  bool tryConsume(char c) {
    skipWs();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!tryConsume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  /// Next identifier (letters only) without consuming it.
  std::string peekWord() {
    skipWs();
    std::size_t i = pos_;
    std::string word;
    while (i < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i]))) word += s_[i++];
    return word;
  }

  std::string readWord() {
    std::string word = peekWord();
    pos_ += word.size();
    return word;
  }

  BigInt readInt() {
    skipWs();
    std::size_t start = pos_;
    std::string digits;
    if (peek() == '-') {
      digits += '-';
      ++pos_;
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    if (digits.empty() || digits == "-") {
      pos_ = start;
      fail("expected an integer");
    }
    return BigInt(digits);
  }

  Fraction readFraction() {
    skipWs();
    bool negative = false;
    if (peek() == '-' && pos_ + 1 < s_.size() &&
        std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      negative = true;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      if (readWord() != "inf") fail("expected a fraction or 'inf'");
      return Fraction::infinity();
    }
    if (negative) fail("expected 'inf' after '-'");
    BigInt p = readInt();
    BigInt q = 1;
    if (tryConsume('/')) q = readInt();
    return Fraction::reduce(std::move(p), std::move(q));
  }

  int readNat(const char* what) {
    skipWs();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    BigInt n = readInt();
    if (n > 1000000) fail(std::string(what) + " is out of range");
    return static_cast<int>(n.convert_to<long long>());
  }

  // expr := prod; prod := sum ("*" sum)*; "+" binds tighter than "*".
  ExprPtr parseExpr() { return parseProd(); }

  ExprPtr parseProd() {
    ExprPtr left = parseSum();
    while (tryConsume('*')) {
      ExprPtr right = parseSum();
      left = product(std::move(left), std::move(right));
    }
    return left;
  }

  ExprPtr parseSum() {
    ExprPtr left = parseAtom();
    while (tryConsume('+')) {
      ExprPtr right = parseAtom();
      left = sum(std::move(left), std::move(right));
    }
    return left;
  }

  ExprPtr parseAtom() {
    skipWs();
    if (tryConsume('(')) {
      ExprPtr inner = parseExpr();
      expect(')', "to close the group");
      return inner;
    }
    std::string word = peekWord();
    if (word == "T") {
      pos_ += word.size();
      skipWs();
      if (tryConsume('[')) {
        Fraction f = readFraction();
        expect(']', "to close T[...]");
        return rational(std::move(f));
      }
      expect('(', "after T");
      ExprPtr acc = rational(readFraction());
      while (tryConsume(',')) acc = sum(std::move(acc), rational(readFraction()));
      expect(')', "to close T(...)");
      return acc;
    }
    if (word == "Q") {
      pos_ += word.size();
      return qTangle(readNat("a ring count after Q"));
    }
    if (word == "rot") {
      pos_ += word.size();
      expect('(', "after rot");
      ExprPtr inner = parseExpr();
      expect(')', "to close rot(...)");
      // Rotation is applied eagerly; parse results never hold a Rot node.
      return rotExpr(inner);
    }
    fail("expected a tangle atom: T[...], T(...), Qn, rot(...), or (...)");
  }

  LinkExpr parseLink() {
    std::string word = readWord();
    if (word == "N") {
      expect('(', "after N");
      ExprPtr t = parseExpr();
      expect(')', "to close N(...)");
      return NumeratorClosure{std::move(t)};
    }
    if (word == "M") {
      expect('(', "after M");
      std::vector<Fraction> entries;
      entries.push_back(readMontesinosEntry());
      while (tryConsume(',')) entries.push_back(readMontesinosEntry());
      expect(')', "to close M(...)");
      return MontesinosLink{std::move(entries)};
    }
    if (word == "glue") {
      expect('(', "after glue");
      ExprPtr first = parseExpr();
      expect(';', "between glued tangles");
      ExprPtr second = parseExpr();
      GluingMap gluing;
      if (tryConsume(';')) gluing = readGluing();
      expect(')', "to close glue(...)");
      return GlueLink{std::move(first), std::move(second), gluing};
    }
    fail("expected a link expression: N(...), M(...), or glue(...)");
  }

  Fraction readMontesinosEntry() {
    Fraction f = readFraction();
    if (f.isInfinite() || f.den() < 2) throw MontesinosDenominatorError(f.str());
    return f;
  }

  GluingMap readGluing() {
    GluingMap g;
    std::string word = lowercase(readWord());
    if (word == "identity") {
      g.axisMatch = AxisMatch::Identity;
    } else if (word == "quarter") {
      g.axisMatch = AxisMatch::Quarter;
    } else {
      fail("expected gluing 'identity' or 'quarter'");
    }
    if (tryConsume(',')) {
      if (lowercase(readWord()) != "mirror") fail("expected 'mirror'");
      g.mirrorSecond = true;
    }
    return g;
  }

  static std::string lowercase(std::string w) {
    for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return w;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

enum class Slot { Root, SumLeft, SumRight, ProductTop, ProductBottom };

bool needsParens(const ExprPtr& child, Slot slot) {
  if (asSum(child)) {
    // A sum under a product is always bracketed; under a sum only on the right.
    return slot == Slot::ProductTop || slot == Slot::ProductBottom || slot == Slot::SumRight;
  }
  if (asProduct(child)) return slot != Slot::Root && slot != Slot::ProductTop;
  return false;
}

void printInto(const ExprPtr& e, std::string& out);

void printChild(const ExprPtr& child, Slot slot, std::string& out) {
  if (needsParens(child, slot)) {
    out += '(';
    printInto(child, out);
    out += ')';
  } else {
    printInto(child, out);
  }
}

void printInto(const ExprPtr& e, std::string& out) {
  std::visit(Overload{
                 [&](const RationalLeaf& x) { out += "T[" + x.value.str() + "]"; },
                 [&](const QLeaf& x) {
                   if (x.axis == Axis::Horizontal) {
                     out += "rot(Q" + std::to_string(x.index) + ")";
                   } else {
                     out += "Q" + std::to_string(x.index);
                   }
                 },
                 [&](const SumNode& x) {
                   printChild(x.left, Slot::SumLeft, out);
                   out += " + ";
                   printChild(x.right, Slot::SumRight, out);
                 },
                 [&](const ProductNode& x) {
                   printChild(x.top, Slot::ProductTop, out);
                   out += " * ";
                   printChild(x.bottom, Slot::ProductBottom, out);
                 },
                 [&](const RotNode& x) {
                   out += "rot(";
                   printInto(x.inner, out);
                   out += ')';
                 },
             },
             e->node);
}

}  // namespace

Parsed parseInput(const std::string& text) { return Parser(text).parseTop(); }

ExprPtr parseTangle(const std::string& text) {
  Parsed p = parseInput(text);
  if (auto* e = std::get_if<ExprPtr>(&p)) return *e;
  throw SyntaxError(0, "expected a tangle expression, found a link expression");
}

LinkExpr parseLinkExpr(const std::string& text) {
  Parsed p = parseInput(text);
  if (auto* l = std::get_if<LinkExpr>(&p)) return *l;
  throw SyntaxError(0, "expected a link expression: N(...), M(...), or glue(...)");
}

std::string printExpr(const ExprPtr& e) {
  std::string out;
  printInto(e, out);
  return out;
}

std::string printLink(const LinkExpr& link) {
  return std::visit(
      Overload{
          [](const NumeratorClosure& n) { return "N(" + printExpr(n.tangle) + ")"; },
          [](const MontesinosLink& m) {
            std::string out = "M(";
            for (std::size_t i = 0; i < m.entries.size(); ++i) {
              if (i) out += ", ";
              out += m.entries[i].str();
            }
            return out + ")";
          },
          [](const GlueLink& g) {
            std::string out = "glue(" + printExpr(g.first) + "; " + printExpr(g.second) + "; ";
            out += g.gluing.axisMatch == AxisMatch::Identity ? "identity" : "quarter";
            if (g.gluing.mirrorSecond) out += ", mirror";
            return out + ")";
          },
      },
      link);
}

std::string printParsed(const Parsed& p) {
  if (const auto* e = std::get_if<ExprPtr>(&p)) return printExpr(*e);
  return printLink(std::get<LinkExpr>(p));
}

}  // namespace tanglecalc
