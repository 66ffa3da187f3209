// wcount: exact counts, asymptotic diagnostics, and integral checks for
// the su(3) dimension-counting problem.  CSV on stdout by default; pass
// --format json for a JSON mirror.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcount/asymptotics.hpp"
#include "wcount/forms.hpp"
#include "wcount/grid.hpp"
#include "wcount/lattice.hpp"
#include "wcount/quadrature.hpp"
#include "wcount/witten_zeta.hpp"

using json = nlohmann::json;
using namespace wcount;

namespace {

std::string fmt_cell(const json& v) {
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    void add_row(std::vector<json> row) { rows.push_back(std::move(row)); }

    void print(const std::string& format) const {
        if (format == "json") {
            json out = json::array();
            for (const auto& row : rows) {
                json obj = json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
                out.push_back(std::move(obj));
            }
            std::cout << out.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < columns.size(); ++i) {
            std::cout << (i ? "," : "") << columns[i];
        }
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::cout << (i ? "," : "") << fmt_cell(row[i]);
            }
            std::cout << "\n";
        }
    }
};

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec spec{};
    if (std::sscanf(text.c_str(), "%" SCNu64 ":%" SCNu64 ":%u", &spec.x_min,
                    &spec.x_max, &spec.points_per_decade) != 3) {
        throw CLI::ValidationError("--grid", "expected x_min:x_max:points_per_decade");
    }
    return spec;
}

std::vector<u64> load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnsupportedParameter("cannot open grid file " + path);
    std::vector<u64> grid;
    u64 x;
    while (in >> x) grid.push_back(x);
    if (grid.empty()) throw UnsupportedParameter("grid file " + path + " is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] <= grid[i - 1]) {
            throw UnsupportedParameter("grid file must be strictly increasing");
        }
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic counting of su(3) representation dimensions"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    u64 arg_n = 1, arg_x = 1, arg_cutoff = 10000, arg_T = 1000000;
    double arg_s = 2.0, arg_y = 0.01, arg_tol = 1e-10;
    std::string arg_method = "hyperbola", arg_grid, arg_grid_file, arg_form;

    auto* c_rho = app.add_subcommand("rho", "number of (j,k) pairs of dimension n");
    c_rho->add_option("n", arg_n, "dimension")->required()->check(CLI::PositiveNumber);

    auto* c_sum = app.add_subcommand("sum", "summatory count S(x)");
    c_sum->add_option("x", arg_x)->required()->check(CLI::PositiveNumber);
    c_sum->add_option("--method", arg_method, "brute or hyperbola")
        ->check(CLI::IsMember({"brute", "hyperbola"}));

    auto* c_res = app.add_subcommand("residuals", "residual diagnostics on a geometric grid");
    c_res->add_option("--grid", arg_grid, "x_min:x_max:points_per_decade");
    c_res->add_option("--grid-file", arg_grid_file, "file with one x per line");
    c_res->add_option("--method", arg_method)->check(CLI::IsMember({"brute", "hyperbola"}));

    auto* c_asym = app.add_subcommand("asym", "two-term main expansion at x");
    c_asym->add_option("x", arg_x)->required()->check(CLI::PositiveNumber);

    auto* c_id = app.add_subcommand("identity", "integral identity check");
    c_id->add_option("--tol", arg_tol, "acceptance tolerance");

    auto* c_fexp = app.add_subcommand("fexp", "F-expansion deviation at y");
    c_fexp->add_option("y", arg_y)->required();

    auto* c_zh = app.add_subcommand("zeta-half", "zeta(1/2) from the fractional-part integral");
    c_zh->add_option("T", arg_T)->required()->check(CLI::PositiveNumber);

    auto* c_wz = app.add_subcommand("wzeta", "Witten zeta partial sums at s");
    c_wz->add_option("s", arg_s)->required();
    c_wz->add_option("--cutoff", arg_cutoff)->check(CLI::PositiveNumber);

    auto* c_div = app.add_subcommand("divisor", "divisor summatory baseline at x");
    c_div->add_option("x", arg_x)->required()->check(CLI::PositiveNumber);

    auto* c_cf = app.add_subcommand("count-form", "lattice count under a homogeneous form");
    c_cf->add_option("form", arg_form, "'su3', 'so5', or d:D:a_0,...,a_d")->required();
    c_cf->add_option("x", arg_x)->required()->check(CLI::PositiveNumber);

    auto* c_ff = app.add_subcommand("fit-form", "growth-exponent fit for a form");
    c_ff->add_option("form", arg_form)->required();
    c_ff->add_option("--grid", arg_grid);
    c_ff->add_option("--grid-file", arg_grid_file);

    auto* c_rep = app.add_subcommand("rep-count", "generating-function coefficients r(0..n)");
    c_rep->add_option("n", arg_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Table table;
        if (*c_rho) {
            table.columns = {"n", "rho"};
            table.add_row({arg_n, rho(arg_n)});
        } else if (*c_sum) {
            u64 count = arg_method == "brute" ? summatory_brute(arg_x)
                                              : summatory_hyperbola(arg_x);
            table.columns = {"x", "count"};
            table.add_row({arg_x, count});
        } else if (*c_res) {
            std::vector<u64> grid;
            if (!arg_grid_file.empty()) grid = load_grid_file(arg_grid_file);
            else if (!arg_grid.empty()) grid = make_grid(parse_grid_spec(arg_grid));
            else throw UnsupportedParameter("residuals needs --grid or --grid-file");
            CountMethod method = arg_method == "brute" ? CountMethod::brute
                                                       : CountMethod::hyperbola;
            table.columns = {"x", "exact_count", "main_term_23", "main_term_12",
                             "residual", "scaled_residual", "precision"};
            for (const auto& r : residual_series(grid, method)) {
                table.add_row({r.x, r.exact_count, static_cast<double>(r.main_term_23),
                               static_cast<double>(r.main_term_12),
                               static_cast<double>(r.residual),
                               static_cast<double>(r.scaled_residual), r.precision});
            }
        } else if (*c_asym) {
            const auto& c = constants();
            long double xl = static_cast<long double>(arg_x);
            long double x13 = cbrtl(xl);
            table.columns = {"x", "main_term_23", "main_term_12", "main_terms"};
            table.add_row({arg_x, static_cast<double>(c.c1 * x13 * x13),
                           static_cast<double>(c.c2 * sqrtl(xl)),
                           static_cast<double>(main_terms(xl))});
        } else if (*c_id) {
            double lhs = eval_F(0.0);
            double rhs = identity_rhs();
            double diff = std::abs(lhs - rhs);
            table.columns = {"lhs", "rhs", "abs_diff", "tol"};
            table.add_row({lhs, rhs, diff, arg_tol});
            table.print(format);
            return diff < arg_tol ? 0 : 1;
        } else if (*c_fexp) {
            FExpansionCheck chk = f_expansion_check(arg_y);
            table.columns = {"y", "F_y", "deviation", "bound"};
            table.add_row({chk.y, chk.F_y, chk.deviation, std::pow(arg_y, 3.5)});
        } else if (*c_zh) {
            table.columns = {"T", "value"};
            table.add_row({arg_T, zeta_half_integral(arg_T)});
        } else if (*c_wz) {
            table.columns = {"evaluator", "s", "cutoff", "partial_sum", "tail_bound",
                             "points_included"};
            ZetaEvaluation d = zeta_su3_direct(arg_s, arg_cutoff);
            ZetaEvaluation v = zeta_su3_via_rho(arg_s, arg_cutoff);
            table.add_row({"direct", d.s, arg_cutoff, d.partial_sum, d.tail_bound,
                           d.points_included});
            table.add_row({"by-dimension", v.s, arg_cutoff, v.partial_sum, v.tail_bound,
                           v.points_included});
        } else if (*c_div) {
            table.columns = {"x", "count", "residual"};
            table.add_row({arg_x, divisor_summatory(arg_x),
                           static_cast<double>(divisor_residual(arg_x))});
        } else if (*c_cf) {
            HomogeneousForm form = parse_form(arg_form);
            table.columns = {"form", "x", "count"};
            table.add_row({form.name, arg_x, count_under(form, arg_x)});
        } else if (*c_ff) {
            HomogeneousForm form = parse_form(arg_form);
            std::vector<u64> grid;
            if (!arg_grid_file.empty()) grid = load_grid_file(arg_grid_file);
            else if (!arg_grid.empty()) grid = make_grid(parse_grid_spec(arg_grid));
            else throw UnsupportedParameter("fit-form needs --grid or --grid-file");
            ExponentFit fit = exponent_fit(form, grid);
            table.columns = {"form", "slope", "intercept", "r_squared", "points"};
            table.add_row({form.name, fit.slope, fit.intercept, fit.r_squared,
                           fit.grid.size()});
        } else if (*c_rep) {
            auto r = rep_count_r(arg_n);
            table.columns = {"n", "r"};
            for (u64 i = 0; i < r.size(); ++i) {
                table.add_row({i, r[i].get_str()});
            }
        }
        table.print(format);
        return 0;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
