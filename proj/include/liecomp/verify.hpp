// Verification runners. Each runner recomputes every claimed quantity and
// records it next to the expected value; nothing is inferred from counts.
#ifndef LIECOMP_VERIFY_HPP
#define LIECOMP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecomp/field.hpp"
#include "liecomp/liealg.hpp"
#include "liecomp/matrix_io.hpp"

namespace liecomp {

struct Claim {
    std::string label;
    std::string paper_ref;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string method;
};

struct Report {
    std::string case_id;
    FieldSpec field;
    Index m = 0;
    std::vector<Claim> claims;
    std::vector<Index> ladder;  // dimensions along the main composition chain (text output only)

    bool pass() const;
};

/// Raised when a case does not satisfy the hypotheses of its runner.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FormKind { automatic, alternating, diagonal, custom };

struct CaseSpec {
    std::string id;  // thm1.1 thm1.2 thm1.3 thm1.4 sl-series sp-so-embedding sl4-so6 block-irreducibles heisenberg
    FieldSpec field;
    Index m = 0;  // n for sp-so-embedding, block-irreducibles and heisenberg
    FormKind form = FormKind::automatic;
    std::vector<std::string> diagonal;  // field tokens d_1..d_m
    std::optional<MatrixText> gram;
    std::string alpha = "1";  // heisenberg
    std::uint64_t budget = default_budget;
};

const std::vector<std::string>& case_ids();

/// Throws HypothesisError for invalid combinations, std::invalid_argument for unknown ids.
Report run_case(const CaseSpec& spec);

/// The default grid (fields Q, GF(2), GF(3), GF(5), GF(7), GF(9), GF(13), GF(25), m <= 10).
std::vector<CaseSpec> default_grid(std::uint64_t budget = default_budget);

/// Runs each case; errors become a failing report with a single claim.
std::vector<Report> run_all(const std::vector<CaseSpec>& grid);

/// {case, field:{char, degree}, m, claims:[...], pass} as JSON text.
std::string report_to_json(const Report& r, int indent = 2);
std::string reports_to_json(const std::vector<Report>& rs, int indent = 2);
/// Inverse of report_to_json. Throws std::invalid_argument on malformed input.
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace liecomp

#endif  // LIECOMP_VERIFY_HPP
