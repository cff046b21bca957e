#pragma once

// One-dimensional, two-colour, range-3/2 cellular automata. A cell's next
// value is read from the 4-cell neighbourhood at offsets (-2, -1, 0, +1),
// interpreted left to right as a 4-bit number i; the new value is bit i of
// the 16-bit rule number.

#include <cstdint>
#include <string>
#include <vector>

#include "ctm/distribution.hpp"
#include "ctm/turing_machine.hpp"

namespace ctm {

inline constexpr std::uint32_t kCARuleCount = 1u << 16;
inline constexpr std::string_view kCARuleSpaceId = "r32c2";

class CARule {
public:
    explicit CARule(std::uint32_t number);

    std::uint32_t number() const { return number_; }
    Symbol apply(unsigned neighbourhood) const { return static_cast<Symbol>((number_ >> neighbourhood) & 1u); }
    Symbol apply(Symbol l2, Symbol l1, Symbol c, Symbol r1) const {
        return apply(static_cast<unsigned>(l2 << 3 | l1 << 2 | c << 1 | r1));
    }

    /// The rule whose evolution from the complemented row is the complement
    /// of this rule's evolution.
    CARule conjugate() const;

private:
    std::uint32_t number_;
};

enum class CASeed { BlackOnWhite, WhiteOnBlack };

struct CellSpan {
    std::size_t left = 0;  // inclusive, index into the row
    std::size_t right = 0; // inclusive
    std::size_t width() const { return right - left + 1; }
};

/// Rows 0..T of an evolution. Every row has the same length; the seed cell
/// sits at `origin`. Cells beyond the stored window equal `background[t]`.
struct CAEvolution {
    std::vector<std::vector<Symbol>> rows;
    std::vector<Symbol> background;
    std::vector<CellSpan> light_cone;
    std::size_t origin = 0;

    std::string row_string(std::size_t t) const;
};

/// Synchronous evolution for `steps` steps. `margin` extra cells are stored
/// on each side beyond the 2*steps needed to contain the light cone.
CAEvolution evolve(const CARule& rule, std::uint32_t steps, CASeed seed = CASeed::BlackOnWhite,
                   std::size_t margin = 2);

enum class TupleExtraction { NonOverlapping, Sliding };
enum class TupleRows { All, Final };

std::string_view extraction_id(TupleExtraction e);
std::string_view rows_id(TupleRows r);

/// Counts length-k tuples inside the light cone of rows t >= 1 (or only the
/// final row). Throws std::invalid_argument when no row is wide enough.
FrequencyDistribution extract_tuples(const CAEvolution& evo, std::size_t k,
                                     TupleExtraction extraction = TupleExtraction::NonOverlapping,
                                     TupleRows rows = TupleRows::All);

struct RuleSpaceOptions {
    TupleExtraction extraction = TupleExtraction::NonOverlapping;
    TupleRows rows = TupleRows::All;
    /// Evolve from both seed polarities. Together with rule conjugation this
    /// makes the rule-space distribution closed under complement.
    bool both_seeds = true;
    unsigned workers = 0;
};

/// Evolves every rule in [first, last) and sums their tuple counts.
/// `enumerated` is the number of rules, `halting` the number of rules that
/// contributed at least one tuple.
FrequencyDistribution rulespace_distribution(std::size_t k, std::uint32_t steps, std::uint32_t first,
                                             std::uint32_t last, const RuleSpaceOptions& options = {});

} // namespace ctm
