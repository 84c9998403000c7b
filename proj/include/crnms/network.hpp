#ifndef CRNMS_NETWORK_HPP
#define CRNMS_NETWORK_HPP

/// \file network.hpp
/// The reaction-network model: species, reactions with integer stoichiometric
/// coefficients, reversible-pair bookkeeping, the text format (parser and
/// renderer), and the JSON serialization.
///
/// Text grammar, one reaction per line or ';'-separated, '#' comments:
///   reaction   := complex arrow complex
///   arrow      := "->" | "<-" | "<->"
///   complex    := "0" | term ("+" term)*
///   term       := [coefficient] identifier        (coefficient >= 1)
///   identifier := [A-Za-z][A-Za-z0-9_]*
/// "<-" is normalized to a forward reaction; "<->" expands to two reactions
/// (forward first) marked as mutually reversible.  Mutual reverses written
/// as two one-way reactions are detected and marked as well.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnms {

/// One directed reaction; coefficient vectors are indexed by species and
/// always sized to the owning network's species count.
struct Reaction {
    std::vector<long> reactant;
    std::vector<long> product;
    /// Index of the opposite direction when this belongs to a reversible
    /// pair; nullopt for irreversible reactions.
    std::optional<std::size_t> reversible_pair;

    bool operator==(const Reaction& o) const {
        return reactant == o.reactant && product == o.product;
    }
};

struct Network {
    std::vector<std::string> species;  ///< order of first appearance
    std::vector<Reaction> reactions;

    std::size_t n_species() const { return species.size(); }
    std::size_t n_reactions() const { return reactions.size(); }

    /// Net stoichiometric change of reaction r for species i.
    long change(std::size_t r, std::size_t i) const {
        return reactions[r].product[i] - reactions[r].reactant[i];
    }

    /// Largest total molecularity over all complexes appearing in the net.
    long max_molecularity() const;

    /// Number of reversible pairs (each counted once) and of irreversible
    /// reactions; reversible pairs contribute 2 to n_reactions().
    std::size_t n_reversible_pairs() const;
};

/// Parse or validation failure, with 1-based line/column of the offending
/// token where applicable (0 when no position makes sense).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error(format(line, col, msg)), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

  private:
    static std::string format(std::size_t line, std::size_t col, const std::string& msg);
    std::size_t line_, col_;
};

/// Parses the text format.  Throws ParseError on syntax errors, coefficients
/// < 1, trivial reactions (reactant == product), duplicate reactions, or an
/// input with no reactions.
Network parse_network(const std::string& text);

/// Canonical text rendering; reversible pairs print once as "<->".
std::string render_network(const Network& net);

/// JSON serialization (schema: {"species": [...], "reactions": [{"reactant":
/// {name: coeff}, "product": {...}, "reversible_pair": index|null}]}).
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& json_text);

/// Label-independent canonical key: the lexicographically smallest rendering
/// of the sorted coefficient rows over all permutations of the species.  Two
/// networks get the same key exactly when one can be turned into the other by
/// renaming species and reordering reactions.  Intended for small networks;
/// throws std::invalid_argument above 8 species.
std::string canonical_form(const Network& net);

}  // namespace crnms

#endif  // CRNMS_NETWORK_HPP
