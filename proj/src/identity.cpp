#include "operad/identity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "operad/error.hpp"

namespace operad {

Identity::Identity(std::vector<Term> terms, std::vector<std::string> names) : names_(std::move(names)) {
  std::map<Monomial, std::int64_t> merged;
  for (auto& t : terms) {
    for (Label v : t.monomial.labels()) {
      if (v < 1 || static_cast<std::size_t>(v) > names_.size()) {
        throw Error("identity: label " + std::to_string(v) + " has no name");
      }
    }
    auto& c = merged[t.monomial];
    if (__builtin_add_overflow(c, t.coefficient, &c)) throw Error("identity: coefficient overflow");
  }
  std::map<Label, int> reference;
  bool first = true;
  for (auto& [m, c] : merged) {
    if (c == 0) continue;
    auto mult = m.multiplicities();
    if (first) {
      reference = mult;
      first = false;
    } else if (mult != reference) {
      throw Error("identity: terms have different variable multisets");
    }
    terms_.push_back({c, m});
  }
}

const std::string& Identity::name(Label v) const {
  if (v < 1 || static_cast<std::size_t>(v) > names_.size()) throw Error("identity: unknown label");
  return names_[static_cast<std::size_t>(v - 1)];
}

std::map<Label, int> Identity::multiplicities() const {
  return terms_.empty() ? std::map<Label, int>{} : terms_.front().monomial.multiplicities();
}

bool Identity::is_multilinear() const {
  for (auto [v, d] : multiplicities()) {
    if (d != 1) return false;
  }
  return true;
}

bool operator==(const Identity& a, const Identity& b) {
  auto named = [](const Identity& id) {
    std::multiset<std::pair<std::int64_t, std::string>> out;
    for (const auto& t : id.terms()) out.emplace(t.coefficient, format_monomial(t.monomial, id.names()));
    return out;
  };
  return named(a) == named(b);
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  if (m.is_variable()) {
    const Label v = m.labels()[0];
    if (v < 1 || static_cast<std::size_t>(v) > names.size()) return "x" + std::to_string(v);
    return names[static_cast<std::size_t>(v - 1)];
  }
  const Monomial r = m.right();
  std::string rs = format_monomial(r, names);
  if (!r.is_variable()) rs = "(" + rs + ")";
  return format_monomial(m.left(), names) + "*" + rs;
}

std::string to_string(const Identity& id) {
  if (id.empty()) return "0 = 0";
  std::string out;
  bool first = true;
  for (const auto& t : id.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::uint64_t magnitude =
        negative ? 0 - static_cast<std::uint64_t>(t.coefficient) : static_cast<std::uint64_t>(t.coefficient);
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += format_monomial(t.monomial, id.names());
  }
  return out + " = 0";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line) : text_(text), line_(line) {}

  Identity parse() {
    std::vector<Term> terms;
    parse_expr(terms, 1);
    expect('=');
    parse_expr(terms, -1);
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    Identity id(std::move(terms), names_);
    if (id.empty()) throw EmptyIdentityError(std::to_string(line_) + ": identity is empty (all terms cancel)");
    return id;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  // A lone "0" is the zero expression; a digit string followed by '*' is a coefficient.
  bool at_zero_expression() {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != '0') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p >= text_.size() || text_[p] == '=';
  }

  void parse_expr(std::vector<Term>& out, std::int64_t sign) {
    if (at_zero_expression()) {
      ++pos_;
      return;
    }
    std::int64_t s = sign;
    if (peek() == '-') {
      ++pos_;
      s = -sign;
    }
    parse_term(out, s);
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        parse_term(out, sign);
      } else if (c == '-') {
        ++pos_;
        parse_term(out, -sign);
      } else {
        break;
      }
    }
  }

  void parse_term(std::vector<Term>& out, std::int64_t sign) {
    std::int64_t coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, coefficient);
      if (ec != std::errc()) {
        pos_ = start;
        fail("coefficient out of range");
      }
      expect('*');
    }
    out.push_back({sign * coefficient, parse_monomial()});
  }

  Monomial parse_monomial() {
    Monomial acc = parse_primary();
    while (peek() == '*') {
      ++pos_;
      acc = Monomial::product(acc, parse_primary());
    }
    return acc;
  }

  Monomial parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Monomial inner = parse_monomial();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Monomial::variable(label_of(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == '\0') fail("expected a variable or '(' before end of input");
    fail("expected a variable or '('");
  }

  Label label_of(const std::string& name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<Label>(it - names_.begin()) + 1;
    names_.push_back(name);
    return static_cast<Label>(names_.size());
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text, 1).parse(); }

std::vector<Identity> parse_identities(std::string_view text) {
  std::vector<Identity> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(Parser(line, line_no).parse());
    start = end + 1;
  }
  return out;
}

std::vector<Identity> load_identity_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open identity file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_identities(buffer.str());
}

std::string MultilinearDiagnostic::message() const {
  if (multilinear) return "multilinear of degree " + std::to_string(degree);
  std::string out = "not multilinear:";
  for (const auto& [name, d] : offending) out += " " + name + " has multiplicity " + std::to_string(d) + ";";
  out.pop_back();
  return out;
}

MultilinearDiagnostic validate_multilinear(const Identity& id) {
  MultilinearDiagnostic diag;
  diag.degree = id.degree();
  for (auto [v, d] : id.multiplicities()) {
    if (d != 1) diag.offending.emplace_back(id.name(v), d);
  }
  diag.multilinear = diag.offending.empty();
  return diag;
}

Identity linearize(const Identity& id) {
  if (id.empty()) throw Error("linearize: empty identity");
  const auto mult = id.multiplicities();
  if (id.is_multilinear()) throw Error("linearize: identity is already multilinear");

  // Fresh labels are allocated in label order; a variable of multiplicity d
  // owns a consecutive block of d labels.
  std::map<Label, std::vector<Label>> fresh;
  std::vector<std::string> names;
  std::set<std::string> taken(id.names().begin(), id.names().end());
  for (auto [v, d] : mult) {
    auto& block = fresh[v];
    if (d == 1) {
      names.push_back(id.name(v));
      block.push_back(static_cast<Label>(names.size()));
      continue;
    }
    std::string base = id.name(v);
    auto collides = [&](const std::string& b) {
      for (int i = 1; i <= d; ++i) {
        if (taken.count(b + std::to_string(i))) return true;
      }
      return false;
    };
    while (collides(base)) base += "v";
    for (int i = 1; i <= d; ++i) {
      names.push_back(base + std::to_string(i));
      taken.insert(names.back());
      block.push_back(static_cast<Label>(names.size()));
    }
  }

  std::vector<Term> terms;
  for (const auto& t : id.terms()) {
    const auto labels = t.monomial.labels();
    // Each variable's occurrences receive its fresh labels in every possible order.
    std::vector<std::vector<Label>> words{std::vector<Label>(labels.size())};
    for (auto [v, d] : mult) {
      std::vector<std::size_t> positions;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == v) positions.push_back(i);
      }
      std::vector<Label> order = fresh[v];
      std::vector<std::vector<Label>> next;
      do {
        for (const auto& w : words) {
          auto filled = w;
          for (std::size_t k = 0; k < positions.size(); ++k) filled[positions[k]] = order[k];
          next.push_back(std::move(filled));
        }
      } while (std::next_permutation(order.begin(), order.end()));
      words = std::move(next);
    }
    for (auto& w : words) terms.push_back({t.coefficient, Monomial(t.monomial.shape(), std::move(w))});
  }
  Identity out(std::move(terms), std::move(names));
  if (out.empty()) throw EmptyIdentityError("linearize: the multilinear component is zero");
  return out;
}

namespace {

const std::map<std::string, std::vector<std::string>, std::less<>>& preset_table() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table = {
      {"right-alternative", {"(x*y)*z + (x*z)*y - x*(y*z) - x*(z*y) = 0"}},
      {"left-alternative", {"(x*y)*z + (y*x)*z - x*(y*z) - y*(x*z) = 0"}},
      {"alternative",
       {"(x*y)*z + (x*z)*y - x*(y*z) - x*(z*y) = 0", "(x*y)*z + (y*x)*z - x*(y*z) - y*(x*z) = 0"}},
      {"associative", {"(x*y)*z - x*(y*z) = 0"}},
      {"dual-right-alternative", {"(x*y)*z - x*(y*z) = 0", "x*y*z + x*z*y = 0"}},
      {"dual-left-alternative", {"(x*y)*z - x*(y*z) = 0", "x*y*z + y*x*z = 0"}},
      {"dual-alternative",
       {"(x*y)*z - x*(y*z) = 0", "x*y*z + y*x*z + z*x*y + x*z*y + y*z*x + z*y*x = 0"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "right-alternative",      "left-alternative",      "alternative",      "associative",
      "dual-right-alternative", "dual-left-alternative", "dual-alternative",
  };
  return names;
}

OperadPreset preset(std::string_view name) {
  const auto& table = preset_table();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error("unknown preset '" + std::string(name) + "'; available: " + known);
  }
  OperadPreset p{it->first, {}};
  for (const auto& text : it->second) p.identities.push_back(parse_identity(text));
  return p;
}

}  // namespace operad
