#ifndef PGREV_FORMULA_HPP
#define PGREV_FORMULA_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgrev {

/// Largest signature for which valuations are enumerated exhaustively.
inline constexpr std::size_t kMaxAtoms = 20;

class SignatureTooLarge : public std::length_error {
 public:
  explicit SignatureTooLarge(std::size_t atoms)
      : std::length_error("signature has " + std::to_string(atoms) +
                          " atoms; exhaustive enumeration is limited to " +
                          std::to_string(kMaxAtoms)) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(std::string atom, std::size_t position)
      : ParseError("unknown atom '" + atom + "'", position), atom_(std::move(atom)) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace detail

/// Ordered, duplicate-free set of atom names. Formulas refer to atoms by
/// their position in the signature.
class Signature {
 public:
  explicit Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("signature must not be empty");
    if (atoms_.size() > kMaxAtoms) throw SignatureTooLarge(atoms_.size());
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const auto& a = atoms_[i];
      if (!detail::is_identifier(a) || a == "T" || a == "F")
        throw std::invalid_argument("invalid atom name '" + a + "'");
      if (std::find(atoms_.begin(), atoms_.begin() + static_cast<std::ptrdiff_t>(i), a) !=
          atoms_.begin() + static_cast<std::ptrdiff_t>(i))
        throw std::invalid_argument("duplicate atom '" + a + "'");
    }
  }

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::string& name(std::size_t atom) const { return atoms_.at(atom); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(atoms_.begin(), atoms_.end(), name);
    if (it == atoms_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
  }

  /// 2^size(); callers that enumerate must stay within kMaxAtoms.
  std::size_t valuation_count() const noexcept { return std::size_t{1} << atoms_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Total assignment over a signature; bit i holds the value of atom i.
struct Valuation {
  std::uint32_t bits = 0;

  bool operator[](std::size_t atom) const noexcept { return (bits >> atom) & 1u; }
  void set(std::size_t atom, bool value) noexcept {
    if (value)
      bits |= (1u << atom);
    else
      bits &= ~(1u << atom);
  }

  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

/// Valuation number `index` in truth-table order: index 0 makes every atom
/// true, the last index makes every atom false, and the first atom varies
/// slowest.
inline Valuation valuation_at(const Signature& sig, std::size_t index) {
  const std::size_t n = sig.size();
  Valuation v;
  for (std::size_t i = 0; i < n; ++i) v.set(i, ((index >> (n - 1 - i)) & 1u) == 0);
  return v;
}

/// Inverse of valuation_at.
inline std::size_t valuation_index(const Signature& sig, Valuation v) {
  const std::size_t n = sig.size();
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!v[i]) index |= std::size_t{1} << (n - 1 - i);
  return index;
}

/// Immutable propositional formula. Nodes are shared, so copies are cheap.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

  Formula() : Formula(Kind::Top, 0, {}, {}) {}

  static Formula atom(std::size_t index) { return Formula(Kind::Atom, index, {}, {}); }
  static Formula top() { return Formula(); }
  static Formula bottom() { return Formula(Kind::Bottom, 0, {}, {}); }
  static Formula negation(Formula f) { return Formula(Kind::Not, 0, std::move(f), {}); }
  static Formula binary(Kind k, Formula a, Formula b) {
    if (k != Kind::And && k != Kind::Or && k != Kind::Implies && k != Kind::Iff)
      throw std::invalid_argument("not a binary connective");
    return Formula(k, 0, std::move(a), std::move(b));
  }

  Kind kind() const noexcept { return node_->kind; }
  std::size_t atom_index() const noexcept { return node_->atom; }
  bool is_binary() const noexcept { return kind() >= Kind::And; }

  /// Operand of a negation, or left operand of a binary connective.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Bitmask of the atoms occurring in the formula.
  std::uint64_t atoms() const noexcept {
    switch (kind()) {
      case Kind::Atom: return std::uint64_t{1} << atom_index();
      case Kind::Top:
      case Kind::Bottom: return 0;
      case Kind::Not: return lhs().atoms();
      default: return lhs().atoms() | rhs().atoms();
    }
  }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom: return a.atom_index() == b.atom_index();
      case Kind::Top:
      case Kind::Bottom: return true;
      case Kind::Not: return a.lhs() == b.lhs();
      default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
  }

  friend Formula operator~(Formula f) { return negation(std::move(f)); }
  friend Formula operator&(Formula a, Formula b) {
    return binary(Kind::And, std::move(a), std::move(b));
  }
  friend Formula operator|(Formula a, Formula b) {
    return binary(Kind::Or, std::move(a), std::move(b));
  }

 private:
  struct Node {
    Kind kind;
    std::size_t atom;
    std::unique_ptr<const Formula> lhs;
    std::unique_ptr<const Formula> rhs;
  };

  Formula(Kind k, std::size_t atom, std::optional<Formula> a, std::optional<Formula> b)
      : node_(std::make_shared<const Node>(Node{
            k, atom, a ? std::make_unique<const Formula>(std::move(*a)) : nullptr,
            b ? std::make_unique<const Formula>(std::move(*b)) : nullptr})) {}

  std::shared_ptr<const Node> node_;
};

inline Formula implies(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Implies, std::move(a), std::move(b));
}
inline Formula iff(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::Iff, std::move(a), std::move(b));
}

inline bool eval(const Formula& f, Valuation v) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return v[f.atom_index()];
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Not: return !eval(f.lhs(), v);
    case K::And: return eval(f.lhs(), v) && eval(f.rhs(), v);
    case K::Or: return eval(f.lhs(), v) || eval(f.rhs(), v);
    case K::Implies: return !eval(f.lhs(), v) || eval(f.rhs(), v);
    case K::Iff: return eval(f.lhs(), v) == eval(f.rhs(), v);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printing and parsing. Concrete syntax: ~ (or !), &, |, ->, <->, T, F.
// Precedence from tightest: negation, conjunction, disjunction, then -> and
// <-> sharing the loosest level. & and | associate left, -> and <-> right.

namespace detail {

inline int precedence(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::Implies:
    case K::Iff: return 1;
    case K::Or: return 2;
    case K::And: return 3;
    case K::Not: return 4;
    default: return 5;
  }
}

inline void print(const Formula& f, const Signature& sig, std::string& out) {
  using K = Formula::Kind;
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    print(c, sig, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case K::Atom: out += sig.name(f.atom_index()); return;
    case K::Top: out += 'T'; return;
    case K::Bottom: out += 'F'; return;
    case K::Not:
      out += '~';
      child(f.lhs(), precedence(f.lhs().kind()) < 4);
      return;
    default: break;
  }
  const int p = precedence(f.kind());
  const bool right_assoc = p == 1;
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  child(f.lhs(), lp < p || (lp == p && right_assoc));
  switch (f.kind()) {
    case K::And: out += " & "; break;
    case K::Or: out += " | "; break;
    case K::Implies: out += " -> "; break;
    default: out += " <-> "; break;
  }
  child(f.rhs(), rp < p || (rp == p && !right_assoc));
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return implies(std::move(lhs), implication());
    if (accept("<->")) return iff(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = std::move(f) | conjunction();
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = std::move(f) & unary();
    return f;
  }

  Formula unary() {
    if (accept("~") || accept("!")) return ~unary();
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) {
      pos_ = start;
      fail(start < text_.size() ? "unexpected '" + std::string(1, text_[start]) + "'"
                                : "unexpected end of input");
    }
    if (word == "T") return Formula::top();
    if (word == "F") return Formula::bottom();
    if (!is_identifier(word)) {
      pos_ = start;
      fail("malformed atom '" + std::string(word) + "'");
    }
    auto index = sig_.index_of(word);
    if (!index) throw UnknownAtomError(std::string(word), start);
    return Formula::atom(*index);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string to_string(const Formula& f, const Signature& sig) {
  std::string out;
  detail::print(f, sig, out);
  return out;
}

inline Formula parse(std::string_view text, const Signature& sig) {
  return detail::Parser(text, sig).parse();
}

// ---------------------------------------------------------------------------
// Semantic comparison by exhaustive enumeration of valuations.

/// Set of valuations (in truth-table order) satisfying a formula.
class Extension {
 public:
  Extension() = default;

  Extension(const Formula& f, const Signature& sig) : bits_(sig.valuation_count()) {
    if (sig.size() > kMaxAtoms) throw SignatureTooLarge(sig.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = eval(f, valuation_at(sig, i));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool contains(std::size_t index) const { return bits_.at(index); }
  bool empty() const noexcept { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }
  bool full() const noexcept { return std::all_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

  /// True iff this set is contained in `other`.
  bool subset_of(const Extension& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  friend Extension operator&(const Extension& a, const Extension& b) {
    Extension r = a;
    for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = a.bits_[i] && b.bits_[i];
    return r;
  }
  friend Extension operator~(const Extension& a) {
    Extension r = a;
    r.bits_.flip();
    return r;
  }
  friend bool operator==(const Extension&, const Extension&) = default;

 private:
  std::vector<bool> bits_;
};

inline bool entails(const Formula& f, const Formula& g, const Signature& sig) {
  if (sig.size() > kMaxAtoms) throw SignatureTooLarge(sig.size());
  for (std::size_t i = 0; i < sig.valuation_count(); ++i) {
    const Valuation v = valuation_at(sig, i);
    if (eval(f, v) && !eval(g, v)) return false;
  }
  return true;
}

inline bool equivalent(const Formula& f, const Formula& g, const Signature& sig) {
  return entails(f, g, sig) && entails(g, f, sig);
}

/// Conjunction of one literal per atom, in signature order.
inline Formula minterm(const Signature& sig, Valuation v) {
  std::optional<Formula> out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    Formula lit = v[i] ? Formula::atom(i) : ~Formula::atom(i);
    out = out ? (std::move(*out) & std::move(lit)) : std::move(lit);
  }
  return *out;
}

/// Disjunction of the minterms of `valuations`, ordered by truth-table index;
/// ⊥ when the set is empty.
inline Formula characteristic_formula(const Signature& sig, std::vector<Valuation> valuations) {
  std::sort(valuations.begin(), valuations.end(), [&](Valuation a, Valuation b) {
    return valuation_index(sig, a) < valuation_index(sig, b);
  });
  valuations.erase(std::unique(valuations.begin(), valuations.end()), valuations.end());
  std::optional<Formula> out;
  for (Valuation v : valuations) out = out ? (std::move(*out) | minterm(sig, v)) : minterm(sig, v);
  return out ? *out : Formula::bottom();
}

}  // namespace pgrev

#endif  // PGREV_FORMULA_HPP
