#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"

#include "mdsl/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kConfig = 2;
constexpr int kNumerical = 3;

constexpr const char* kColumns = R"(Output columns:
  eigs     n, lambda_n, s_n, omega_residual, sequence_tag, s_pred, s_err
  charfn   lambda, omega, omega1, omega2, omega3
  sweep    epsilon, n, lambda_n, error
  asym     case, sequence, n, s_pred, lambda_pred
  green    x, y, G
  resolve  piece, x, u, du (last row: piece = scalar, u = R'(u))
  verify   check, value, tol, status
  oracle   n, lambda_m, lambda_2m, richardson
Missing values print as NA (csv) or null (jsonl). s_n of a negative
eigenvalue prints as <magnitude>i.
Exit codes: 0 ok, 2 configuration or validation error, 3 numerical failure.)";

}  // namespace

int main(int argc, char** argv) {
    using namespace mdsl::cli;

    CLI::App app{"Eigenvalues, Green's function and resolvent of a Sturm-Liouville problem "
                 "with two movable interior interfaces and a spectral boundary condition"};
    app.footer(kColumns);
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string format;
    std::string out_path;
    double lambda_max = 0.0;
    CommandArgs args;

    app.add_option("--config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--out", out_path, "Write the table here instead of stdout");
    auto* lmax = app.add_option("--lambda-max", lambda_max, "Override solver.lambda_max");

    auto* eigs = app.add_subcommand("eigs", "Eigenvalues below lambda_max");
    auto* charfn = app.add_subcommand("charfn", "Characteristic function on a lambda grid");
    charfn->add_option("--lambda-lo", args.lambda_lo, "First lambda")->capture_default_str();
    charfn->add_option("--lambda-hi", args.lambda_hi, "Last lambda")->capture_default_str();
    charfn->add_option("--points", args.points, "Grid size")->capture_default_str();
    auto* sweep = app.add_subcommand("sweep", "Eigenvalues as epsilon varies");
    sweep->add_option("--eps-list", args.eps_list, "Epsilon values")->required()->delimiter(',');
    auto* asym = app.add_subcommand("asym", "Leading asymptotic root sequences");
    auto* green = app.add_subcommand("green", "Green's function on cell midpoints");
    green->add_option("--lambda", args.lambda, "Spectral parameter")->required();
    green->add_option("--grid-n", args.grid_n, "Cells per axis")->capture_default_str();
    auto* resolve = app.add_subcommand("resolve", "Resolvent of a polynomial right-hand side");
    resolve->add_option("--lambda", args.lambda, "Spectral parameter")->required();
    resolve->add_option("--f", args.f_poly, "Coefficients c0,c1,... of f(x) = sum c_k x^k")
        ->delimiter(',');
    resolve->add_option("--f1", args.f1, "Scalar component")->capture_default_str();
    resolve->add_option("--grid-n", args.grid_n, "Output intervals per piece")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "Run the invariant checks");
    std::vector<std::string> skip;
    verify->add_option("--skip", skip, "Checks to skip (oracle)")
        ->check(CLI::IsMember({"oracle"}));
    verify->add_option("--seed", args.seed, "Random seed")->capture_default_str();
    auto* oracle = app.add_subcommand("oracle", "Finite-difference pencil eigenvalues");
    oracle->add_option("--count", args.count, "Number of eigenvalues")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }
    args.skip_oracle = !skip.empty();

    try {
        RunConfig config = load_config_file(config_path);
        if (*lmax) config.solver.lambda_max = lambda_max;
        if (format == "csv") config.output.format = Format::csv;
        if (format == "jsonl") config.output.format = Format::jsonl;
        if (!out_path.empty()) config.output.path = out_path;

        Table table;
        bool passed = true;
        if (*eigs) table = cmd_eigs(config);
        else if (*charfn) table = cmd_charfn(config, args);
        else if (*sweep) table = cmd_sweep(config, args);
        else if (*asym) table = cmd_asym(config);
        else if (*green) table = cmd_green(config, args);
        else if (*resolve) table = cmd_resolve(config, args);
        else if (*verify) table = cmd_verify(config, args, passed);
        else if (*oracle) table = cmd_oracle(config, args);

        if (config.output.path.empty()) {
            write_table(std::cout, table, config.output.format, config.output.precision);
        } else {
            std::ofstream os(config.output.path);
            if (!os) throw ConfigError("cannot write " + config.output.path);
            write_table(os, table, config.output.format, config.output.precision);
        }
        return passed ? kOk : kNumerical;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const mdsl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mdsl::is_validation_error(e.code()) ? kConfig : kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
}
