#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hbl/hecke_operator.hpp"
#include "hbl/quadratic_algebra.hpp"
#include "hbl/report.hpp"

namespace hbl {

/// A requested computation would exceed the ambient-dimension budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxAmbient = 4096;

struct OperatorSource {
    std::optional<std::string> builtin;
    std::optional<std::string> file;
    std::optional<Rational> specialize_p;
};

struct LoadedOperator {
    HeckeOperator op;
    /// "builtin:<name>" or "file:<path>".
    std::string source;
    /// (r, s) for builtin families, whose graded dimensions have closed forms.
    std::optional<std::pair<std::size_t, std::size_t>> grading;

    nlohmann::ordered_json describe() const;
};

/// Exactly one of builtin/file must be set (std::invalid_argument otherwise).
LoadedOperator load_operator(const OperatorSource& source);
/// Throws AxiomError with the witness if the Hecke or braid relation fails.
void require_axioms(const LoadedOperator& op);

/// Explicit flag, else HBL_MAX_AMBIENT, else the default. Throws std::invalid_argument on a malformed env value.
std::size_t resolve_max_ambient(std::optional<std::size_t> flag, const char* env_value);

struct RunOptions {
    std::size_t max_ambient = kDefaultMaxAmbient;
    ClosureLimits closure;
};

/// m^n, saturating at SIZE_MAX.
std::size_t ambient_dimension(std::size_t m, std::size_t n);

/// Coefficient of t^n in (1+t)^a / (1-t)^b.
long super_series_coefficient(std::size_t a, std::size_t b, std::size_t n);
/// Dimension of `algebra` (S, Lambda, E, Edual) in degree n for builtin families.
std::optional<long> closed_form_dimension(const LoadedOperator& op, const std::string& algebra, std::size_t n);
/// p_k at q = 1 for builtin families: r + (-1)^k s.
std::optional<Rational> closed_form_p(const LoadedOperator& op, std::size_t k);

VerificationReport cmd_axioms(const LoadedOperator& op, std::size_t N, const RunOptions& opt);
/// algebra is one of S, Lambda, E, Edual.
VerificationReport cmd_dims(const LoadedOperator& op, const std::string& algebra, std::size_t N, const RunOptions& opt);
VerificationReport cmd_poincare(const LoadedOperator& op, std::size_t N, const RunOptions& opt);
VerificationReport cmd_koszul(const LoadedOperator& op, const std::string& algebra, std::size_t n, const RunOptions& opt);
VerificationReport cmd_schur(const LoadedOperator& op, std::size_t n, const RunOptions& opt);
/// Everything above through degree N; degrees beyond the budget are skipped with a note.
VerificationReport cmd_report(const LoadedOperator& op, std::size_t N, const RunOptions& opt);

}  // namespace hbl
