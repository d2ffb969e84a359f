#include "iods/cli.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "iods/parse.hpp"
#include "iods/report.hpp"
#include "iods/solver.hpp"

namespace iods {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<double> parse_override_list(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const double value = std::stod(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
            ++used;
        }
        if (used != item.size()) {
            throw std::invalid_argument("malformed number '" + item + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return out;
}

void write_output(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write file '" + out_path + "'");
    }
    file << content;
}

struct SolveOptions {
    std::string input;
    std::string format = "text";
    std::string out_path;
    std::optional<double> eps;
    std::optional<double> reduction;
    std::optional<std::uint64_t> max_evals;
    std::optional<std::string> init;
    std::optional<std::string> step;
};

ProblemSpec load_problem(const SolveOptions& options) {
    ProblemSpec problem = parse_problem(read_file(options.input));
    const std::size_t n = problem.system.variables.size();
    if (options.eps) {
        problem.config.epsilon = *options.eps;
    }
    if (options.reduction) {
        problem.config.reduction_factor = *options.reduction;
    }
    if (options.max_evals) {
        problem.config.max_evaluations = *options.max_evals;
    }
    if (options.init) {
        problem.config.initial_point = parse_override_list(*options.init);
    }
    if (options.step) {
        problem.config.step = parse_override_list(*options.step);
    }
    problem.config.validate(n);
    return problem;
}

int report_exit(const SolverReport& report) {
    const bool all_converged = report.solution.left.search.converged &&
                               report.solution.peak.search.converged &&
                               report.solution.right.search.converged;
    return all_converged ? kExitOk : kExitBudget;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics, std::ostream& err) {
    for (const Diagnostic& d : diagnostics) {
        err << (d.severity == Severity::Error ? "error" : "warning");
        if (d.equation != Diagnostic::npos) {
            err << " (equation " << d.equation + 1 << ")";
        }
        err << ": " << d.message << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy nonlinear system solver using inner-outer direct search"};
    app.require_subcommand(1);

    SolveOptions solve_options;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a fuzzy system and print a report");
    solve_cmd->add_option("file", solve_options.input, "Problem file")->required();
    solve_cmd->add_option("--format", solve_options.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    solve_cmd->add_option("--eps", solve_options.eps, "Termination epsilon override");
    solve_cmd->add_option("--reduction", solve_options.reduction, "Step reduction factor override");
    solve_cmd->add_option("--max-evals", solve_options.max_evals, "Evaluation budget override");
    solve_cmd->add_option("--init", solve_options.init, "Initial point override, comma separated");
    solve_cmd->add_option("--step", solve_options.step, "Step vector override, comma separated");
    solve_cmd->add_option("--out", solve_options.out_path, "Write the report to a file");

    std::string check_input;
    CLI::App* check_cmd = app.add_subcommand("check", "Parse and validate a problem file");
    check_cmd->add_option("file", check_input, "Problem file")->required();

    SolveOptions membership_options;
    int samples = 101;
    CLI::App* membership_cmd =
        app.add_subcommand("membership", "Solve and emit per-variable membership tables");
    membership_cmd->add_option("file", membership_options.input, "Problem file")->required();
    membership_cmd->add_option("--samples", samples, "Samples per variable (>= 2)");
    membership_cmd->add_option("--out", membership_options.out_path,
                               "Write the tables to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (solve_cmd->parsed()) {
            const ProblemSpec problem = load_problem(solve_options);
            const SolverReport report = solve(problem);
            const std::string rendered = solve_options.format == "structured"
                                             ? render_structured_report(report)
                                             : render_text_report(report);
            write_output(rendered, solve_options.out_path, out);
            return report_exit(report);
        }
        if (check_cmd->parsed()) {
            const ProblemSpec problem = parse_problem(read_file(check_input));
            print_diagnostics(validate(problem.system), err);
            out << "ok: " << problem.system.variables.size() << " variable(s), "
                << problem.system.equations.size() << " equation(s)\n";
            return kExitOk;
        }
        if (membership_cmd->parsed()) {
            if (samples < 2) {
                err << "error: --samples must be at least 2\n";
                return kExitInputError;
            }
            const ProblemSpec problem = load_problem(membership_options);
            const SolverReport report = solve(problem);
            write_output(render_membership_csv(report, samples), membership_options.out_path, out);
            return report_exit(report);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        print_diagnostics(e.diagnostics(), err);
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace iods
