#pragma once

#include <string>
#include <vector>

#include "fraciter/abel.hpp"

namespace fraciter {

struct PlotPoint {
    std::string x;
    std::string y;
};

// An ordered, strictly-increasing-in-x sample series of one curve.
struct PlotSeries {
    std::string branch_id;
    std::vector<PlotPoint> samples;
};

// y = F(x) over the grid from, from+step, ..., to; points closer than
// `margin` to a finite interval endpoint are dropped.
PlotSeries abel_series(const AbelBranch& branch, const Real& from, const Real& to,
                       const Real& step, const Real& margin, int digits, int jobs = 0);

// y = F^{-1}(t) over a t grid; grid points outside the branch range are
// dropped.
PlotSeries inverse_series(const AbelBranch& branch, const Real& from, const Real& to,
                          const Real& step, int digits, int jobs = 0);

// y = 10^24 (Fa^{-1}(t) - Fb^{-1}(t)) over a t grid.  The branches must
// already carry the 30 extra digits the difference needs.
PlotSeries difference_series(const AbelBranch& via_forward, const AbelBranch& via_inverse,
                             const Real& from, const Real& to, const Real& step,
                             int digits, int jobs = 0);

std::string to_csv(const PlotSeries& series);
std::string to_json(const PlotSeries& series);

}  // namespace fraciter
