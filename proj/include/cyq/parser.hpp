#pragma once

#include "cyq/completions.hpp"
#include "cyq/dg.hpp"
#include "cyq/errors.hpp"
#include "cyq/homology.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyq {

// Diagnostic codes:
//   E001 syntax            E007 frozen arrow with a non-frozen endpoint
//   E002 no vertices       E008 potential is not a sum of closed degree-0 cycles
//   E003 duplicate id      E009 relation mixes endpoints
//   E004 unknown vertex    E010 bad differential (duplicate, degree, endpoints)
//   E005 unknown arrow     E011 repeated potential
//   E006 non-composable product
struct Diagnostic {
    std::string code;
    std::size_t line = 0;   // 1-based
    std::size_t column = 0; // 1-based
    std::string message;
    std::string to_string() const; // "3:7: E005: unknown arrow 'z'"
};

class ParseError : public ValidationError {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Parsed contents of a .quiver file.
struct QuiverFile {
    QuiverPtr quiver;
    std::optional<Potential> potential;
    std::vector<AlgebraElement> relations;
    // One entry per arrow (unassigned arrows hold 0); empty without differential lines.
    std::vector<AlgebraElement> differential;

    bool has_differential() const { return !differential.empty(); }

    // Throw ValidationError if the file lacks the needed sections.
    IceQuiverWithPotential ice() const;
    Presentation presentation() const;
    // Structural checks only; d^2 is not certified.
    DgPresentation dg() const;

    friend bool operator==(const QuiverFile& x, const QuiverFile& y);
};

// Line-oriented grammar, '#' starts a comment:
//   vertex <id> [frozen]
//   arrow <id> : <src> -> <tgt> [deg <int>] [frozen]
//   potential = <expr>
//   relation <expr>
//   differential <arrow> = <expr>
// expr := ['-'] term (('+' | '-') term)* | '0'
// term := factor ('*' factor)*, factor := rational | arrow | e[vertex]
// "x*y" is x after y. Throws ParseError with every diagnostic found.
QuiverFile parse_quiver_file(std::string_view text);

// Normalized form; parse(print(f)) == f.
std::string print_quiver_file(const QuiverFile& f);

// Wrap a dg presentation (e.g. a constructor output) as a file model.
QuiverFile to_quiver_file(const DgPresentation& p, const std::optional<Potential>& w = std::nullopt);
QuiverFile to_quiver_file(const Presentation& p);

// Parse one expression over an existing quiver.
AlgebraElement parse_element(const QuiverPtr& q, std::string_view text);

} // namespace cyq
