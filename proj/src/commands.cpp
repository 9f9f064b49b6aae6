#include "hbl/commands.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>

#include "hbl/poincare.hpp"
#include "hbl/rmatrix_io.hpp"
#include "hbl/schur.hpp"

namespace hbl {

using nlohmann::ordered_json;

ordered_json LoadedOperator::describe() const {
    ordered_json j;
    j["name"] = op.name;
    j["source"] = source;
    j["d"] = op.d;
    j["q"] = op.q.to_string();
    j["parameter"] = op.specialized_p ? to_string(*op.specialized_p) : std::string("symbolic-p");
    return j;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> builtin_grading(const std::string& name, const HeckeOperator& op) {
    if (name.rfind("dj:", 0) == 0 || name.rfind("flip:", 0) == 0) return std::make_pair(op.d, std::size_t{0});
    if (name.rfind("superflip:", 0) == 0) {
        const auto bar = name.find('|');
        const std::size_t r = std::stoul(name.substr(10, bar - 10));
        return std::make_pair(r, op.d - r);
    }
    return std::nullopt;
}

}  // namespace

LoadedOperator load_operator(const OperatorSource& source) {
    if (source.builtin.has_value() == source.file.has_value())
        throw std::invalid_argument("exactly one of --builtin and --file is required");
    LoadedOperator lo;
    if (source.builtin) {
        lo.op = builtin_operator(*source.builtin);
        lo.source = "builtin:" + *source.builtin;
        lo.grading = builtin_grading(*source.builtin, lo.op);
    } else {
        lo.op = load_rmatrix_file(*source.file);
        lo.source = "file:" + *source.file;
    }
    if (source.specialize_p) {
        if (lo.op.specialized_p) throw std::invalid_argument("operator is already specialized; drop --specialize");
        lo.op = specialize(lo.op, *source.specialize_p);
    }
    return lo;
}

void require_axioms(const LoadedOperator& lo) {
    if (auto c = check_hecke(lo.op); !c.ok) throw AxiomError(lo.op.name + ": Hecke relation fails: " + c.detail);
    if (auto c = check_yang_baxter(lo.op); !c.ok) throw AxiomError(lo.op.name + ": braid relation fails: " + c.detail);
}

std::size_t resolve_max_ambient(std::optional<std::size_t> flag, const char* env_value) {
    if (flag) return *flag;
    if (env_value && *env_value) {
        const std::string s(env_value);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
            throw std::invalid_argument("HBL_MAX_AMBIENT must be a positive integer, got '" + s + "'");
        return v;
    }
    return kDefaultMaxAmbient;
}

std::size_t ambient_dimension(std::size_t m, std::size_t n) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (m != 0 && r > std::numeric_limits<std::size_t>::max() / m) return std::numeric_limits<std::size_t>::max();
        r *= m;
    }
    return r;
}

long super_series_coefficient(std::size_t a, std::size_t b, std::size_t n) {
    mpz_class total = 0;
    for (std::size_t i = 0; i <= std::min(a, n); ++i) {
        mpz_class ca, cb;
        mpz_bin_uiui(ca.get_mpz_t(), a, i);
        const std::size_t k = n - i;
        if (b == 0) {
            cb = (k == 0) ? 1 : 0;
        } else {
            mpz_bin_uiui(cb.get_mpz_t(), b + k - 1, k);
        }
        total += ca * cb;
    }
    return total.get_si();
}

std::optional<long> closed_form_dimension(const LoadedOperator& lo, const std::string& algebra, std::size_t n) {
    if (!lo.grading) return std::nullopt;
    const auto [r, s] = *lo.grading;
    if (algebra == "S") return super_series_coefficient(s, r, n);
    if (algebra == "Lambda") return super_series_coefficient(r, s, n);
    // Generators of E: r^2+s^2 even, 2rs odd.
    if (algebra == "E") return super_series_coefficient(2 * r * s, r * r + s * s, n);
    if (algebra == "Edual") return super_series_coefficient(r * r + s * s, 2 * r * s, n);
    return std::nullopt;
}

std::optional<Rational> closed_form_p(const LoadedOperator& lo, std::size_t k) {
    if (!lo.grading) return std::nullopt;
    const auto [r, s] = *lo.grading;
    const long sign = (k % 2) ? -1 : 1;
    return Rational(static_cast<long>(r) + sign * static_cast<long>(s));
}

namespace {

const std::vector<std::string> kAlgebras = {"S", "Lambda", "E", "Edual"};

void validate_algebra(const std::string& a, bool allow_dual) {
    if (a == "S" || a == "Lambda" || a == "E" || (allow_dual && a == "Edual")) return;
    throw std::invalid_argument("unknown algebra '" + a + "' (expected S, Lambda, E" + (allow_dual ? ", Edual)" : ")"));
}

std::size_t generator_dim(const LoadedOperator& lo, const std::string& algebra) {
    return (algebra == "S" || algebra == "Lambda") ? lo.op.d : lo.op.d * lo.op.d;
}

bool within(std::size_t m, std::size_t n, const RunOptions& opt) { return ambient_dimension(m, n) <= opt.max_ambient; }

void require_within(std::size_t m, std::size_t n, const RunOptions& opt, const std::string& what) {
    const std::size_t a = ambient_dimension(m, n);
    if (a > opt.max_ambient)
        throw BudgetExceeded(what + " needs ambient dimension " + std::to_string(m) + "^" + std::to_string(n) + " = " +
                             (a == std::numeric_limits<std::size_t>::max() ? std::string("overflow") : std::to_string(a)) +
                             ", above the budget " + std::to_string(opt.max_ambient) +
                             " (raise --max-dim or HBL_MAX_AMBIENT)");
}

/// Largest k <= N with m^k within budget.
std::size_t degree_cap(std::size_t m, std::size_t N, const RunOptions& opt) {
    std::size_t k = 0;
    while (k < N && within(m, k + 1, opt)) ++k;
    return k;
}

VerificationReport new_report(const std::string& command, const LoadedOperator& lo) {
    VerificationReport r;
    r.command = command;
    r.operator_info = lo.describe();
    return r;
}

/// Pass iff at least one route exists, all routes agree and match the expectation when given.
void settle_agreement(CheckRecord& c) {
    if (c.computed.empty()) {
        c.pass = false;
        c.detail = "no route available";
        return;
    }
    const ordered_json& first = c.computed.begin().value();
    bool ok = true;
    for (const auto& [k, v] : c.computed.items()) ok = ok && v == first;
    if (!ok) c.detail = "routes disagree";
    if (ok && !c.expected.is_null() && c.expected != first) {
        ok = false;
        c.detail = "computed value differs from expected";
    }
    c.pass = ok;
}

std::string identity_value(const IdentityCheck& c) {
    return c.ok ? std::string("0") : c.detail;
}

CheckRecord identity_check(const std::string& name, std::optional<std::size_t> degree,
                           const std::function<IdentityCheck()>& fn) {
    CheckRecord c;
    c.name = name;
    c.degree = degree;
    c.expected = "0";
    IdentityCheck ic;
    c.elapsed_ms = time_ms([&] { ic = fn(); });
    c.computed["direct"] = identity_value(ic);
    c.pass = ic.ok;
    if (!ic.ok) c.detail = ic.detail;
    return c;
}

ordered_json table_json(const DimensionTable& t) {
    ordered_json j;
    j["label"] = t.label;
    j["values"] = t.values;
    ordered_json prov = ordered_json::array();
    for (auto p : t.provenance) prov.push_back(to_string(p));
    j["provenance"] = std::move(prov);
    return j;
}

ordered_json scalar_value(const Rational& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return to_string(x);
}

/// (p_k)_t for k = 0..K from cycle traces; nullopt (with a note) when unavailable.
std::optional<std::vector<Rational>> trace_p(const LoadedOperator& lo, std::size_t K, VerificationReport& r) {
    if (lo.op.specialized_p) {
        r.add_note("trace-route", "operator is specialized at a fixed p; the q = 1 trace route needs a symbolic operator");
        return std::nullopt;
    }
    try {
        return t_specialize_p_from_operator(lo.op, K);
    } catch (const PoleError& e) {
        r.add_note("trace-route", std::string("cycle traces have a pole at p = 1: ") + e.what());
        return std::nullopt;
    }
}

long rank_of_hecke_element(const HeckeOperator& op, std::size_t n, bool symmetric) {
    Representation rep(op, n);
    const HeckeElement e = symmetric ? symmetrizer(n, op.q) : antisymmetrizer(n, op.q);
    return static_cast<long>(rank(rep.of_element(e)));
}

long phi_trace_at_one(const HeckeOperator& op, std::size_t n) {
    std::vector<long> v = to_naturals({rf_eval_at_one(phi_n_trace(op, n))});
    return v.front();
}

}  // namespace

VerificationReport cmd_axioms(const LoadedOperator& lo, std::size_t N, const RunOptions& opt) {
    VerificationReport r = new_report("axioms", lo);
    r.parameters["max_degree"] = N;
    const HeckeOperator& op = lo.op;
    require_within(op.d, 3, opt, "braid relation");
    r.checks.push_back(identity_check("hecke", 2, [&] { return check_hecke(op); }));
    r.checks.push_back(identity_check("yang_baxter", 3, [&] { return check_yang_baxter(op); }));
    auto inv = identity_check("invertible", 2, [&] { return check_invertible(op); });
    inv.expected = "invertible";
    inv.computed["direct"] = inv.pass ? "invertible" : inv.detail;
    r.checks.push_back(inv);
    auto qf = identity_check("q_factorials", N, [&] { return check_q_factorials(op, N); });
    qf.expected = "nonzero";
    qf.computed["direct"] = qf.pass ? "nonzero" : qf.detail;
    r.checks.push_back(qf);
    const bool base_ok = r.pass();
    if (!base_ok) {
        r.add_note("rbar_braid", "skipped: the operator fails a basic identity");
    } else if (!within(op.d * op.d, 3, opt)) {
        r.add_note("rbar_braid", "skipped: W^(x)3 exceeds the ambient budget");
    } else {
        r.checks.push_back(identity_check("rbar_braid", 3, [&] { return check_braid(rbar(op), op.d * op.d); }));
    }
    return r;
}

VerificationReport cmd_dims(const LoadedOperator& lo, const std::string& algebra, std::size_t N, const RunOptions& opt) {
    validate_algebra(algebra, true);
    VerificationReport r = new_report("dims", lo);
    r.parameters["algebra"] = algebra;
    r.parameters["max_degree"] = N;
    const HeckeOperator& op = lo.op;
    const std::size_t m = generator_dim(lo, algebra);
    require_within(m, N, opt, algebra + " in degree " + std::to_string(N));

    const bool dual = algebra == "Edual";
    QuadraticAlgebra A = build_algebra(op, dual ? "E" : algebra);

    std::optional<std::vector<long>> formula;
    if (algebra == "E" || dual) {
        if (N == 0) {
            formula = std::vector<long>{1};
        } else if (auto p = trace_p(lo, N - 1, r)) {
            try {
                formula = dual ? to_naturals(b_sequence(*p, N)) : to_naturals(poincare_E(*p, N).coeffs());
            } catch (const std::domain_error& e) {
                r.add_note("formula-route", e.what());
            }
        }
    }

    std::vector<long> direct;
    for (std::size_t n = 0; n <= N; ++n) {
        CheckRecord c;
        c.name = "dim." + algebra;
        c.degree = n;
        if (auto e = closed_form_dimension(lo, algebra, n)) c.expected = *e;
        c.elapsed_ms = time_ms([&] {
            const long d = static_cast<long>(dual ? dual_graded_dimension(A, n) : graded_dimension(A, n));
            direct.push_back(d);
            c.computed["direct-rank"] = d;
            if (n >= 1 && (algebra == "S" || algebra == "Lambda"))
                c.computed["hecke-image"] = rank_of_hecke_element(op, n, algebra == "S");
            if (algebra == "E")
                c.computed["centralizer"] = n == 0 ? 1L : static_cast<long>(centralizer_dimension(op, n));
            if (formula) c.computed["formula"] = (*formula)[n];
            if (dual && n >= 1 && op.symbolic()) c.computed["trace"] = phi_trace_at_one(op, n);
        });
        settle_agreement(c);
        r.checks.push_back(std::move(c));
    }
    auto merged = merge_tables(algebra, direct, formula.value_or(std::vector<long>{}));
    r.tables.push_back(table_json(merged.table));

    if (dual) {
        for (std::size_t n = 2; n <= N; ++n) {
            CheckRecord c;
            c.name = "phi_image";
            c.degree = n;
            c.expected = "equal";
            c.elapsed_ms = time_ms([&] {
                ScalarSubspace img = echelonize(phi_n(op, n));
                ScalarSubspace meet = lifted_relation_intersection(A, n);
                c.computed["direct"] = img == meet ? "equal" : "different";
                if (!(img == meet))
                    c.detail = "dim Im Phi = " + std::to_string(img.dim()) + ", dim intersection = " +
                               std::to_string(meet.dim());
            });
            c.pass = c.computed["direct"] == "equal";
            r.checks.push_back(std::move(c));
        }
    }
    return r;
}

VerificationReport cmd_poincare(const LoadedOperator& lo, std::size_t N, const RunOptions& opt) {
    if (N < 1) throw std::invalid_argument("poincare: max degree must be at least 1");
    VerificationReport r = new_report("poincare", lo);
    r.parameters["max_degree"] = N;
    const HeckeOperator& op = lo.op;
    const std::size_t d = op.d;
    require_within(d, N, opt, "S in degree " + std::to_string(N));

    // s_n by rank, then p_k = [t^k] P_S'/P_S.
    QuadraticAlgebra S = build_s(op);
    std::vector<long> s;
    for (std::size_t n = 0; n <= N; ++n) s.push_back(static_cast<long>(graded_dimension(S, n)));
    r.tables.push_back(table_json(DimensionTable::single("S", s, Provenance::direct_rank)));
    RationalSeries PS = RationalSeries::generate(N, [&](std::size_t k) { return Rational(s[k]); });
    const std::vector<Rational> p_from_s = p_sequence_from_s(PS, N - 1);
    const auto p_trace = trace_p(lo, N - 1, r);

    for (std::size_t k = 0; k < N; ++k) {
        CheckRecord c;
        c.name = "p";
        c.degree = k;
        if (auto e = closed_form_p(lo, k)) c.expected = scalar_value(*e);
        c.computed["log-derivative"] = scalar_value(p_from_s[k]);
        if (p_trace) c.computed["trace"] = scalar_value((*p_trace)[k]);
        settle_agreement(c);
        r.checks.push_back(std::move(c));
    }

    // e_n and b_n by formula, checked against direct ranks where the budget allows.
    const RationalSeries PE = poincare_E(p_from_s, N);
    const std::vector<Rational> b = b_sequence(p_from_s, N);
    QuadraticAlgebra E = build_e(op);
    std::vector<long> e_direct, b_direct, e_formula, b_formula;
    bool skipped = false;
    for (std::size_t n = 0; n <= N; ++n) {
        const bool fits = within(d * d, n, opt);
        skipped = skipped || !fits;
        for (const bool dual : {false, true}) {
            CheckRecord c;
            c.name = dual ? "dim.Edual" : "dim.E";
            c.degree = n;
            if (auto ex = closed_form_dimension(lo, dual ? "Edual" : "E", n)) c.expected = *ex;
            const Rational f = dual ? b[n] : PE[n];
            c.computed["formula"] = scalar_value(f);
            c.elapsed_ms = time_ms([&] {
                if (fits) {
                    const long v = static_cast<long>(dual ? dual_graded_dimension(E, n) : graded_dimension(E, n));
                    (dual ? b_direct : e_direct).push_back(v);
                    c.computed["direct-rank"] = v;
                    if (dual && n >= 1 && op.symbolic()) c.computed["trace"] = phi_trace_at_one(op, n);
                }
            });
            settle_agreement(c);
            if (f.get_den() != 1 || f < 0) {
                c.pass = false;
                c.detail = "formula value is not a natural number";
            } else {
                (dual ? b_formula : e_formula).push_back(f.get_num().get_si());
            }
            r.checks.push_back(std::move(c));
        }
    }
    if (skipped)
        r.add_note("direct-route", "direct ranks on W^(x)n skipped above the ambient budget " +
                                       std::to_string(opt.max_ambient));
    r.tables.push_back(table_json(merge_tables("E", e_direct, e_formula).table));
    r.tables.push_back(table_json(merge_tables("Edual", b_direct, b_formula).table));

    {
        CheckRecord c;
        c.name = "koszul_duality";
        c.degree = N;
        c.expected = "1";
        RationalSeries B = RationalSeries::generate(N, [&](std::size_t k) { return (k % 2) ? Rational(-b[k]) : b[k]; });
        RationalSeries prod = PE * B;
        std::string v = "1";
        for (std::size_t k = 1; k <= N; ++k)
            if (prod[k] != 0) v = "nonzero at t^" + std::to_string(k);
        if (prod[0] != 1) v = "constant term " + to_string(prod[0]);
        c.computed["formula"] = v;
        c.pass = v == "1";
        r.checks.push_back(std::move(c));
    }

    CharacterRecursionReport rec;
    const double rec_ms = time_ms([&] { rec = verify_character_recursion(op, N); });
    for (const auto& row : rec.rows) {
        CheckRecord c;
        c.name = "character_recursion";
        c.degree = row.n;
        c.expected = "lhs == rhs";
        ordered_json v;
        v["lhs"] = row.lhs.to_string();
        v["rhs"] = row.rhs.to_string();
        c.computed["trace"] = std::move(v);
        c.pass = row.pass;
        if (!row.pass) c.detail = "the two sides differ";
        c.elapsed_ms = rec_ms / static_cast<double>(rec.rows.size());
        r.checks.push_back(std::move(c));
    }
    auto rows_json = [](const std::vector<RecursionRow>& rows) {
        ordered_json a = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["degree"] = row.n;
            j["lhs"] = row.lhs.to_string();
            j["rhs"] = row.rhs.to_string();
            j["holds"] = row.pass;
            a.push_back(std::move(j));
        }
        return a;
    };
    const std::size_t unit_fail = rec.unit_p0_first_failure();
    r.add_note("character-recursion.p0", unit_fail ? "with p_0 = 1 the recursion fails first at degree " +
                                                         std::to_string(unit_fail) + "; p_0 = d = chi(T_{c_1}) is used"
                                                   : "with p_0 = 1 the recursion holds through degree " +
                                                         std::to_string(N),
               rows_json(rec.unit_p0_rows));
    const std::size_t scaled_fail = rec.scaled_first_failure();
    r.add_note("character-recursion.d-power",
               scaled_fail ? "with d^(-n) factors on the middle terms the recursion fails first at degree " +
                                 std::to_string(scaled_fail) + "; the d-free form is verified"
                           : "with d^(-n) factors on the middle terms the recursion holds through degree " +
                                 std::to_string(N),
               rows_json(rec.scaled_rows));
    return r;
}

VerificationReport cmd_koszul(const LoadedOperator& lo, const std::string& algebra, std::size_t n,
                              const RunOptions& opt) {
    validate_algebra(algebra, false);
    if (n < 3) throw std::invalid_argument("koszul: degree must be at least 3");
    VerificationReport r = new_report("koszul", lo);
    r.parameters["algebra"] = algebra;
    r.parameters["degree"] = n;
    r.parameters["cap"] = opt.closure.max_elements;
    const std::size_t m = generator_dim(lo, algebra);
    require_within(m, n, opt, algebra + " in degree " + std::to_string(n));
    if (lo.op.specialized_p)
        r.add_note("advisory", "operator specialized at p = " + to_string(*lo.op.specialized_p) +
                                   "; verdicts are advisory for the symbolic operator");
    QuadraticAlgebra A = build_algebra(lo.op, algebra);

    CheckRecord dc;
    dc.name = "distributivity." + algebra;
    dc.degree = n;
    dc.expected = "distributive";
    DistributivityVerdict v;
    dc.elapsed_ms = time_ms([&] { v = distributivity_check(A, n, opt.closure); });
    dc.computed["lattice"] = to_string(v.verdict);
    dc.pass = v.verdict == Distributivity::distributive;
    dc.detail = "closure of " + std::to_string(v.lattice_size) + " subspaces after " + std::to_string(v.rounds) +
                " rounds";
    if (v.witness) {
        const auto& w = *v.witness;
        dc.detail += "; witness triple with dimensions (" + std::to_string(v.dims[w[0]]) + ", " +
                     std::to_string(v.dims[w[1]]) + ", " + std::to_string(v.dims[w[2]]) + ")";
    }
    r.checks.push_back(std::move(dc));

    CheckRecord sc;
    sc.name = "koszul_series." + algebra;
    sc.degree = n;
    sc.expected = "alternating sums vanish";
    sc.elapsed_ms = time_ms([&] {
        std::vector<long> a, b;
        for (std::size_t k = 0; k <= n; ++k) {
            a.push_back(static_cast<long>(graded_dimension(A, k)));
            b.push_back(static_cast<long>(dual_graded_dimension(A, k)));
        }
        ordered_json j;
        j["dims"] = a;
        j["dual_dims"] = b;
        sc.computed["direct-rank"] = j;
        sc.pass = koszul_series_identity(a, b, n);
    });
    if (!sc.pass) sc.detail = "some alternating sum is nonzero";
    r.checks.push_back(std::move(sc));
    return r;
}

VerificationReport cmd_schur(const LoadedOperator& lo, std::size_t n, const RunOptions& opt) {
    if (n < 1 || n > 8) throw std::invalid_argument("schur: degree must be between 1 and 8");
    VerificationReport r = new_report("schur", lo);
    r.parameters["degree"] = n;
    const HeckeOperator& op = lo.op;
    require_within(op.d * op.d, n, opt, "End(V^(x)" + std::to_string(n) + ")");

    std::optional<MultiplicityTable> mt;
    if (op.specialized_p) {
        r.add_note("multiplicities", "need a symbolic operator; only the centralizer and rank routes run");
    } else {
        try {
            mt = multiplicities(op, n);
        } catch (const std::domain_error& e) {
            r.add_note("multiplicities", e.what());
        }
    }

    CheckRecord c;
    c.name = "schur_dimension";
    c.degree = n;
    if (auto e = closed_form_dimension(lo, "E", n)) c.expected = *e;
    c.elapsed_ms = time_ms([&] {
        if (mt) c.computed["multiplicities"] = mt->sum_squares();
        c.computed["centralizer"] = static_cast<long>(centralizer_dimension(op, n));
        c.computed["direct-rank"] = static_cast<long>(graded_dimension(build_e(op), n));
    });
    settle_agreement(c);
    if (!mt && !op.specialized_p) {
        c.pass = false;
        c.detail = "multiplicities unavailable";
    }
    r.checks.push_back(std::move(c));

    if (mt) {
        CheckRecord w;
        w.name = "schur_weighted_sum";
        w.degree = n;
        w.expected = static_cast<long>(ambient_dimension(op.d, n));
        w.computed["multiplicities"] = mt->weighted_sum();
        settle_agreement(w);
        r.checks.push_back(std::move(w));

        ordered_json t;
        t["label"] = "multiplicities";
        t["degree"] = n;
        t["partitions"] = mt->parts;
        t["m"] = mt->m;
        t["f"] = mt->f;
        r.tables.push_back(std::move(t));
    }

    CheckRecord b;
    b.name = "double_centralizer";
    b.degree = n;
    b.elapsed_ms = time_ms([&] {
        b.computed["bicommutant"] = static_cast<long>(bicommutant_dimension(op, n));
        b.computed["hecke-image"] = static_cast<long>(hecke_image_dimension(op, n));
    });
    settle_agreement(b);
    r.checks.push_back(std::move(b));
    return r;
}

VerificationReport cmd_report(const LoadedOperator& lo, std::size_t N, const RunOptions& opt) {
    VerificationReport r = new_report("report", lo);
    r.parameters["max_degree"] = N;
    r.parameters["max_ambient"] = opt.max_ambient;
    r.parameters["cap"] = opt.closure.max_elements;
    const std::size_t d = lo.op.d;

    r.append(cmd_axioms(lo, N, opt));
    if (!r.pass()) {
        r.add_note("report", "stopped after the axiom checks failed");
        return r;
    }
    for (const auto& alg : kAlgebras) {
        const std::size_t m = generator_dim(lo, alg);
        const std::size_t cap = degree_cap(m, N, opt);
        if (cap < N)
            r.add_note("dims." + alg, "degrees above " + std::to_string(cap) + " skipped: ambient budget " +
                                          std::to_string(opt.max_ambient));
        r.append(cmd_dims(lo, alg, cap, opt));
    }
    if (N >= 1) {
        const std::size_t cap = degree_cap(d, N, opt);
        if (cap >= 1) r.append(cmd_poincare(lo, cap, opt));
        if (cap < N) r.add_note("poincare", "degrees above " + std::to_string(cap) + " skipped: ambient budget");
    }
    if (N >= 3) {
        for (const std::string alg : {"S", "Lambda", "E"}) {
            if (within(generator_dim(lo, alg), N, opt))
                r.append(cmd_koszul(lo, alg, N, opt));
            else
                r.add_note("koszul." + alg, "degree " + std::to_string(N) + " skipped: ambient budget");
        }
    } else {
        r.add_note("koszul", "distributivity needs degree at least 3");
    }
    for (std::size_t n = 2; n <= std::min<std::size_t>(N, 8); ++n) {
        if (within(d * d, n, opt))
            r.append(cmd_schur(lo, n, opt));
        else
            r.add_note("schur", "degree " + std::to_string(n) + " skipped: ambient budget");
    }
    return r;
}

}  // namespace hbl
