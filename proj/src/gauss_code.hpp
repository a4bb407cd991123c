#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vyb {

// Raised on malformed input text; `position` is a 0-based character offset.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Raised when a structurally parsed code violates the pairing rules.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PassageKind { ClassicalOver, ClassicalUnder, VirtualRight, VirtualLeft };

inline bool is_classical(PassageKind k) {
  return k == PassageKind::ClassicalOver || k == PassageKind::ClassicalUnder;
}

struct Passage {
  PassageKind kind;
  int crossing_id;
  int sign;  // +1 or -1; always +1 for virtual passages

  bool operator==(const Passage&) const = default;
};

// One cyclic passage list per component. Component order and starting passage
// are significant; equality is literal.
struct GaussCode {
  std::vector<std::vector<Passage>> components;

  bool operator==(const GaussCode&) const = default;
  size_t passage_count() const;
  int max_label() const;  // 0 when crossing-free
};

enum class CodeFormat { Tokens, GaussInt };

// Accepts the token grammar ("U1+ O2+ R3 ...", components split by '/') and
// the Gaussian-integer list encoding ("[-1-I,-2-2*I,3,...,0]"); the list form
// is recognized by a leading '['. Validates before returning.
GaussCode parse_code(const std::string& text);

std::string serialize_code(const GaussCode& code, CodeFormat format);

std::string code_to_json(const GaussCode& code);
GaussCode code_from_json(const std::string& json_text);

// Checks the pairing rules: each classical label once over/once under with
// equal signs, each virtual label once R/once L, disjoint label namespaces.
void validate_code(const GaussCode& code);

// Incidence model. Semiarc i of a component follows passage i; a crossing-free
// component contributes a single closed semiarc.
struct ClassicalCrossing {
  int sign = 0;
  size_t under_in = 0, over_in = 0, under_out = 0, over_out = 0;
};
struct VirtualCrossing {
  size_t right_in = 0, left_in = 0, right_out = 0, left_out = 0;
};

struct Diagram {
  GaussCode code;
  size_t semiarc_count = 0;
  std::vector<std::pair<size_t, size_t>> semiarcs;  // (component, index within it)
  std::vector<size_t> closed_semiarcs;              // from crossing-free components
  std::vector<std::pair<int, ClassicalCrossing>> classical;  // sorted by label
  std::vector<std::pair<int, VirtualCrossing>> virtual_;     // sorted by label
};

Diagram build_diagram(const GaussCode& code);

// Fixed example codes; throws ValidationError on an unknown name.
GaussCode catalog_lookup(const std::string& name);

struct CatalogEntry {
  std::string name;
  std::string tokens;
  std::string note;  // where the code comes from / what pins it down
};
const std::vector<CatalogEntry>& catalog_entries();

}  // namespace vyb
