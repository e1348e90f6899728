// Command-line front end: constants manifest, Abel-function evaluation and
// inversion, fractional iteration, tetration, and plot-data emission.
//
// Exit codes: 0 success, 2 domain/range error, 3 non-convergence.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fraciter/abel.hpp"
#include "fraciter/errors.hpp"
#include "fraciter/frac.hpp"
#include "fraciter/manifest.hpp"
#include "fraciter/plot.hpp"

namespace {

using namespace fraciter;

struct CommonOpts {
    int digits = 50;
    int guard = 0;      // 0 = policy default
    long max_iter = 0;  // 0 = policy default
    int jobs = 0;

    PrecisionContext context() const {
        PrecisionContext ctx = PrecisionContext::for_digits(digits);
        if (guard > 0) ctx = PrecisionContext(digits, guard, ctx.max_iterations);
        if (max_iter > 0) ctx = PrecisionContext(ctx.target_digits, ctx.guard_digits, max_iter);
        return ctx;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--digits", o.digits, "decimal digits after the point (10..60)")
        ->check(CLI::Range(10, 60));
    cmd->add_option("--guard", o.guard, "override the guard-digit policy")->check(CLI::Range(15, 500));
    cmd->add_option("--max-iter", o.max_iter, "override the iteration cap");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw DomainError("expected a rational like 4/3, got '" + s + "'");
    return Rational{std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
}

Real parse_value(const std::string& s, mpfr_prec_t bits) {
    if (s.find('/') != std::string::npos) {
        Rational q = parse_rational(s);
        return q.to_real(bits);
    }
    return Real::from_string(s, bits);
}

MapParams parse_base(const std::string& s) {
    MapParams p;
    if (s == "sqrt2") {
        p.base_sqrt2 = true;
    } else if (s.find('/') != std::string::npos) {
        p.base = parse_rational(s);
    } else {
        // Plain decimals become exact rationals over a power of ten.
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            p.base = Rational{std::stol(s), 1};
        } else {
            std::string digits_only = s.substr(0, dot) + s.substr(dot + 1);
            long den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            p.base = Rational{std::stol(digits_only), den};
        }
    }
    return p;
}

AbelBranch make_branch(const std::string& name, const std::string& lambda,
                       const std::string& base, const PrecisionContext& ctx) {
    BranchId id = branch_id_from_name(name);
    MapParams params;
    if (id == BranchId::LogisticFp0 || id == BranchId::LogisticFpMu) {
        if (lambda.empty()) throw DomainError(name + " needs --lambda");
        params.lambda = parse_rational(lambda);
    }
    if (id == BranchId::ExpBaseI1) {
        if (base.empty()) throw DomainError(name + " needs --base");
        params = parse_base(base);
    }
    return AbelBranch::build(id, params, ctx);
}

void write_series(const PlotSeries& s, const std::string& format, const std::string& out_prefix) {
    std::string text = format == "json" ? to_json(s) : to_csv(s);
    if (out_prefix.empty()) {
        std::cout << text;
        return;
    }
    std::string path = out_prefix + s.branch_id + (format == "json" ? ".json" : ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << text;
    std::cerr << "wrote " << path << " (" << s.samples.size() << " rows)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abel functions, fractional iterates and tetration at arbitrary precision"};
    app.require_subcommand(1);

    CommonOpts constants_o, eval_o, invert_o, halfiter_o, tetration_o, plot_o;
    std::string filter;
    std::string branch_name, lambda_s, base_s;
    std::string x_s, t_s = "1/2";
    std::string inv_t_s, tet_t_s;
    std::string plot_branches, plot_from, plot_to, plot_step = "1/10", plot_margin = "1/20";
    std::string plot_format = "csv", plot_out;
    bool figure2 = false;

    CLI::App* c_constants = app.add_subcommand("constants", "named-constants manifest");
    add_common(c_constants, constants_o);
    c_constants->add_option("--filter", filter, "substring match on names and aliases");

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate F on a branch");
    add_common(c_eval, eval_o);
    c_eval->add_option("--branch", branch_name)->required();
    c_eval->add_option("--lambda", lambda_s, "logistic parameter, e.g. 3/2");
    c_eval->add_option("--base", base_s, "exponential base, e.g. 4/3 or sqrt2");
    c_eval->add_option("--x", x_s)->required();

    CLI::App* c_invert = app.add_subcommand("invert", "solve F(x) = t on a branch");
    add_common(c_invert, invert_o);
    c_invert->add_option("--branch", branch_name)->required();
    c_invert->add_option("--lambda", lambda_s);
    c_invert->add_option("--base", base_s);
    c_invert->add_option("--t", inv_t_s)->required();

    CLI::App* c_halfiter = app.add_subcommand("halfiter", "fractional iterate f^[t](x), default t = 1/2");
    add_common(c_halfiter, halfiter_o);
    c_halfiter->add_option("--branch", branch_name)->required();
    c_halfiter->add_option("--lambda", lambda_s);
    c_halfiter->add_option("--base", base_s);
    c_halfiter->add_option("--x", x_s)->required();
    c_halfiter->add_option("--t", t_s, "iteration exponent (default 1/2)");

    CLI::App* c_tetration = app.add_subcommand("tetration", "T(c, t) for bases below e^(1/e)");
    add_common(c_tetration, tetration_o);
    c_tetration->add_option("--base", base_s)->required();
    c_tetration->add_option("--t", tet_t_s)->required();

    CLI::App* c_plot = app.add_subcommand("plot", "emit curve samples as CSV or JSON");
    add_common(c_plot, plot_o);
    c_plot->add_option("--branch", plot_branches, "comma-separated branch ids");
    c_plot->add_option("--lambda", lambda_s);
    c_plot->add_option("--base", base_s);
    c_plot->add_option("--from", plot_from)->required();
    c_plot->add_option("--to", plot_to)->required();
    c_plot->add_option("--step", plot_step);
    c_plot->add_option("--margin", plot_margin, "clip distance from finite endpoints");
    c_plot->add_option("--format", plot_format)->check(CLI::IsMember({"csv", "json"}));
    c_plot->add_option("--out", plot_out, "output path prefix (default: stdout)");
    c_plot->add_flag("--figure2", figure2,
                     "inverse curves of the four 2^{x/2} branches plus the scaled gap series");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_constants) {
            PrecisionContext ctx = constants_o.context();
            auto entries = build_constants(ctx, filter, constants_o.jobs);
            std::cout << render_constants(entries);
            return 0;
        }
        if (*c_eval) {
            PrecisionContext ctx = eval_o.context();
            AbelBranch br = make_branch(branch_name, lambda_s, base_s, ctx);
            Real x = parse_value(x_s, ctx.working_bits());
            std::cout << br.eval(x).to_fixed(ctx.target_digits) << "\n";
            return 0;
        }
        if (*c_invert) {
            PrecisionContext ctx = invert_o.context();
            AbelBranch br = make_branch(branch_name, lambda_s, base_s, ctx);
            Real t = parse_value(inv_t_s, ctx.working_bits());
            std::cout << br.invert(t).to_fixed(ctx.target_digits) << "\n";
            return 0;
        }
        if (*c_halfiter) {
            PrecisionContext ctx = halfiter_o.context();
            AbelBranch br = make_branch(branch_name, lambda_s, base_s, ctx);
            Real x = parse_value(x_s, ctx.working_bits());
            Real t = parse_value(t_s, ctx.working_bits());
            std::cout << frac_iterate_reported(br, x, t).to_fixed(ctx.target_digits) << "\n";
            return 0;
        }
        if (*c_tetration) {
            PrecisionContext ctx = tetration_o.context();
            MapParams base = parse_base(base_s);
            Real t = parse_value(tet_t_s, ctx.working_bits());
            std::cout << tetration(base, t, ctx).to_fixed(ctx.target_digits) << "\n";
            return 0;
        }
        if (*c_plot) {
            PrecisionContext ctx = plot_o.context();
            const mpfr_prec_t bits = ctx.working_bits();
            Real from = parse_value(plot_from, bits);
            Real to = parse_value(plot_to, bits);
            Real step = parse_value(plot_step, bits);
            Real margin = parse_value(plot_margin, bits);

            std::vector<PlotSeries> series;
            if (figure2) {
                for (const char* id : {"sqrt2exp.I1", "sqrt2exp.I2a", "sqrt2exp.I2b", "sqrt2exp.I3"}) {
                    AbelBranch br = make_branch(id, "", "", ctx);
                    series.push_back(inverse_series(br, from, to, step, ctx.target_digits, plot_o.jobs));
                }
                PrecisionContext wide = PrecisionContext::for_digits(ctx.target_digits + 30);
                AbelBranch a = make_branch("sqrt2exp.I2a", "", "", wide);
                AbelBranch b = make_branch("sqrt2exp.I2b", "", "", wide);
                series.push_back(difference_series(a, b, from.rounded_to(wide.working_bits()),
                                                   to.rounded_to(wide.working_bits()),
                                                   step.rounded_to(wide.working_bits()),
                                                   ctx.target_digits, plot_o.jobs));
            } else {
                if (plot_branches.empty()) throw DomainError("plot needs --branch or --figure2");
                std::size_t pos = 0;
                while (pos != std::string::npos) {
                    auto comma = plot_branches.find(',', pos);
                    std::string name = plot_branches.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos);
                    pos = comma == std::string::npos ? std::string::npos : comma + 1;
                    AbelBranch br = make_branch(name, lambda_s, base_s, ctx);
                    series.push_back(abel_series(br, from, to, step, margin, ctx.target_digits,
                                                 plot_o.jobs));
                }
            }
            bool any = false;
            for (const auto& s : series) any = any || !s.samples.empty();
            if (!any) throw RangeError("plot: range does not intersect any branch interval");
            if (plot_out.empty() && series.size() > 1)
                throw DomainError("plot: several series need --out");
            for (const auto& s : series) write_series(s, plot_format, plot_out);
            return 0;
        }
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
