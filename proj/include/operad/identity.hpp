#ifndef OPERAD_IDENTITY_HPP
#define OPERAD_IDENTITY_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "operad/monomial.hpp"

namespace operad {

struct Term {
  std::int64_t coefficient = 0;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

// A polynomial identity "sum of terms = 0" in the free magma.
//
// Construction merges like terms, drops zero coefficients and sorts the terms
// by the canonical monomial order. Every term must carry the same variable
// multiset. Variable v is printed as names()[v - 1].
class Identity {
 public:
  Identity(std::vector<Term> terms, std::vector<std::string> names);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Label v) const;

  bool empty() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }
  std::map<Label, int> multiplicities() const;
  bool is_multilinear() const;

  // Equality up to the internal numbering of variables: two identities are
  // equal when they have the same terms once labels are replaced by names.
  friend bool operator==(const Identity& a, const Identity& b);

 private:
  std::vector<Term> terms_;
  std::vector<std::string> names_;
};

// Renders m with the given variable names, writing only the parentheses that
// the left-associative grammar needs.
std::string format_monomial(const Monomial& m, std::span<const std::string> names);
std::string to_string(const Identity& id);

// Parses one identity. Variables are numbered in order of first appearance.
Identity parse_identity(std::string_view text);
// Parses a file body: one identity per line, '#' comments, blank lines ignored.
std::vector<Identity> parse_identities(std::string_view text);
std::vector<Identity> load_identity_file(const std::filesystem::path& path);

struct MultilinearDiagnostic {
  bool multilinear = true;
  int degree = 0;
  // Variables whose multiplicity differs from one, with that multiplicity.
  std::vector<std::pair<std::string, int>> offending;

  std::string message() const;
};

MultilinearDiagnostic validate_multilinear(const Identity& id);

// Full polarization: each variable of multiplicity d > 1 is replaced by d fresh
// variables and only the terms containing every fresh variable once are kept.
Identity linearize(const Identity& id);

struct OperadPreset {
  std::string name;
  std::vector<Identity> identities;
};

OperadPreset preset(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace operad

#endif  // OPERAD_IDENTITY_HPP
