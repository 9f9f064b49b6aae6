// hbl: exact verification of Hecke-operator algebras from the command line.
//
// Exit status: 0 when every check passes, 1 when some check fails,
// 2 on usage, input, axiom or budget errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hbl/commands.hpp"
#include "hbl/rmatrix_io.hpp"

namespace {

struct Common {
    std::string builtin;
    std::string file;
    std::string specialize;
    std::optional<std::size_t> max_dim;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    auto* b = cmd->add_option("--builtin", c.builtin, "Builtin operator: dj:<d>, flip:<d>, superflip:<r>|<s>");
    auto* f = cmd->add_option("--file", c.file, "R-matrix JSON file")->check(CLI::ExistingFile);
    b->excludes(f);
    cmd->add_option("--specialize", c.specialize, "Evaluate the operator at p=<rational> first");
    cmd->add_option("--max-dim", c.max_dim, "Ambient dimension budget (default 4096, or HBL_MAX_AMBIENT)");
    cmd->add_option("-o,--out", c.out, "Write the JSON report here instead of stdout");
}

hbl::OperatorSource source_of(const Common& c) {
    hbl::OperatorSource s;
    if (!c.builtin.empty()) s.builtin = c.builtin;
    if (!c.file.empty()) s.file = c.file;
    if (!c.specialize.empty()) {
        if (c.specialize.rfind("p=", 0) != 0) throw std::invalid_argument("--specialize expects p=<rational>");
        s.specialize_p = hbl::parse_rational(c.specialize.substr(2));
    }
    return s;
}

int emit(const hbl::VerificationReport& r, const std::string& out) {
    const std::string text = r.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << text;
        std::cout << r.command << ": " << (r.checks.size() - r.failed()) << "/" << r.checks.size()
                  << " checks passed, report written to " << out << "\n";
    }
    for (const auto& c : r.checks)
        if (!c.pass)
            std::cerr << "FAIL " << c.name << (c.degree ? " n=" + std::to_string(*c.degree) : std::string()) << ": "
                      << c.detail << "\n";
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of quadratic algebras built from Hecke operators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hbl::kToolVersion));

    Common common;
    std::string algebra = "S";
    std::size_t max_degree = 3;
    std::size_t degree = 3;
    std::size_t cap = hbl::ClosureLimits{}.max_elements;

    auto* axioms = app.add_subcommand("axioms", "Hecke, braid, invertibility and q-factorial checks");
    add_common(axioms, common);
    axioms->add_option("-N,--max-degree", max_degree, "Working degree for [n]_q! != 0");

    auto* dims = app.add_subcommand("dims", "Graded dimensions by every available route");
    add_common(dims, common);
    dims->add_option("-a,--algebra", algebra, "S, Lambda, E or Edual")
        ->check(CLI::IsMember({"S", "Lambda", "E", "Edual"}));
    dims->add_option("-N,--max-degree", max_degree, "Highest degree");

    auto* poincare = app.add_subcommand("poincare", "Series pipeline and the character recursion");
    add_common(poincare, common);
    poincare->add_option("-N,--max-degree", max_degree, "Highest degree");

    auto* koszul = app.add_subcommand("koszul", "Distributivity and Koszul series checks");
    add_common(koszul, common);
    koszul->add_option("-a,--algebra", algebra, "S, Lambda or E")->check(CLI::IsMember({"S", "Lambda", "E"}));
    koszul->add_option("-n,--degree", degree, "Degree (at least 3)");
    koszul->add_option("--cap", cap, "Maximum lattice size before giving up");

    auto* schur = app.add_subcommand("schur", "Multiplicities, centralizer and double centralizer");
    add_common(schur, common);
    schur->add_option("-n,--degree", degree, "Degree");

    auto* report = app.add_subcommand("report", "Every check through degree N in one document");
    add_common(report, common);
    report->add_option("-N,--max-degree", max_degree, "Highest degree");
    report->add_option("--cap", cap, "Maximum lattice size for distributivity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version arrive here with exit code 0.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        hbl::RunOptions opt;
        opt.max_ambient = hbl::resolve_max_ambient(common.max_dim, std::getenv("HBL_MAX_AMBIENT"));
        opt.closure.max_elements = cap;
        const hbl::LoadedOperator op = hbl::load_operator(source_of(common));

        if (axioms->parsed()) return emit(hbl::cmd_axioms(op, max_degree, opt), common.out);
        if (report->parsed()) return emit(hbl::cmd_report(op, max_degree, opt), common.out);
        hbl::require_axioms(op);
        if (dims->parsed()) return emit(hbl::cmd_dims(op, algebra, max_degree, opt), common.out);
        if (poincare->parsed()) return emit(hbl::cmd_poincare(op, max_degree, opt), common.out);
        if (koszul->parsed()) return emit(hbl::cmd_koszul(op, algebra, degree, opt), common.out);
        if (schur->parsed()) return emit(hbl::cmd_schur(op, degree, opt), common.out);
    } catch (const hbl::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const hbl::AxiomError& e) {
        std::cerr << "axiom failure: " << e.what() << "\n";
        return 2;
    } catch (const hbl::FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
