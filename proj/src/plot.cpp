#include "fraciter/plot.hpp"

#include <json.hpp>

#include "fraciter/errors.hpp"
#include "fraciter/parallel.hpp"

namespace fraciter {

namespace {

std::vector<Real> grid(const Real& from, const Real& to, const Real& step) {
    if (!(step > 0L)) throw DomainError("plot: step must be positive");
    if (to < from) throw DomainError("plot: empty range");
    const mpfr_prec_t bits = step.bits();
    // Tolerate a last point that misses `to` by rounding in the inputs.
    Real count = (to - from) / step + pow10(-9, bits);
    long n = floor(count).to_long();
    std::vector<Real> xs;
    xs.reserve(n + 1);
    for (long i = 0; i <= n; ++i) xs.push_back(from + Real::from_long(i, bits) * step);
    return xs;
}

PlotSeries collect(const std::string& id, const std::vector<Real>& xs,
                   const std::function<bool(const Real&)>& keep,
                   const std::function<Real(const Real&)>& f, int digits, int jobs) {
    std::vector<Real> kept;
    for (const Real& x : xs)
        if (keep(x)) kept.push_back(x);
    std::vector<Real> ys(kept.size());
    parallel_for(kept.size(), jobs, [&](std::size_t i) { ys[i] = f(kept[i]); });
    PlotSeries s;
    s.branch_id = id;
    s.samples.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        s.samples.push_back({kept[i].to_fixed(digits), ys[i].to_fixed(digits)});
    return s;
}

}  // namespace

PlotSeries abel_series(const AbelBranch& branch, const Real& from, const Real& to,
                       const Real& step, const Real& margin, int digits, int jobs) {
    const Interval& iv = branch.eval_domain();
    auto keep = [&](const Real& x) {
        if (!iv.contains(x)) return false;
        if (!iv.lo.is_inf() && x - iv.lo < margin) return false;
        if (!iv.hi.is_inf() && iv.hi - x < margin) return false;
        return true;
    };
    return collect(branch.id_string(), grid(from, to, step), keep,
                   [&](const Real& x) { return branch.eval(x); }, digits, jobs);
}

PlotSeries inverse_series(const AbelBranch& branch, const Real& from, const Real& to,
                          const Real& step, int digits, int jobs) {
    auto keep = [&](const Real& t) {
        return !branch.range_floor() || t > *branch.range_floor();
    };
    return collect(branch.id_string() + ".inverse", grid(from, to, step), keep,
                   [&](const Real& t) { return branch.invert(t); }, digits, jobs);
}

PlotSeries difference_series(const AbelBranch& via_forward, const AbelBranch& via_inverse,
                             const Real& from, const Real& to, const Real& step,
                             int digits, int jobs) {
    const mpfr_prec_t bits = via_forward.context().working_bits();
    Real scale = pow10(24, bits);
    auto keep = [](const Real&) { return true; };
    return collect("w_scaled_1e24", grid(from, to, step), keep,
                   [&](const Real& t) {
                       return scale * branch_difference(via_forward, via_inverse,
                                                        t.rounded_to(bits));
                   },
                   digits, jobs);
}

std::string to_csv(const PlotSeries& series) {
    std::string out = "x,y\n";
    for (const auto& p : series.samples) {
        out += p.x;
        out += ',';
        out += p.y;
        out += '\n';
    }
    return out;
}

std::string to_json(const PlotSeries& series) {
    nlohmann::json j;
    j["branch"] = series.branch_id;
    j["samples"] = nlohmann::json::array();
    for (const auto& p : series.samples)
        j["samples"].push_back({{"x", p.x}, {"y", p.y}});
    return j.dump(2) + "\n";
}

}  // namespace fraciter
