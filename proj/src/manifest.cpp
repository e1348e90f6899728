#include "fraciter/manifest.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <thread>

#include "fraciter/abel.hpp"
#include "fraciter/errors.hpp"
#include "fraciter/frac.hpp"

namespace fraciter {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool matches(const std::string& filter, const std::string& name,
             const std::vector<std::string>& aliases) {
    if (filter.empty()) return true;
    std::string f = lower(filter);
    if (lower(name).find(f) != std::string::npos) return true;
    for (const auto& a : aliases)
        if (lower(a).find(f) != std::string::npos) return true;
    return false;
}

// Branches shared between entries, built once per run (the offsets are the
// expensive part of construction, and several rows reuse each branch).
struct BranchSet {
    std::map<std::string, std::shared_ptr<const AbelBranch>> by_key;

    const AbelBranch& get(const std::string& key) const { return *by_key.at(key); }

    void ensure(const std::string& key, const PrecisionContext& ctx) {
        if (by_key.count(key)) return;
        BranchId id;
        MapParams params;
        if (key == "I1") id = BranchId::Sqrt2ExpI1;
        else if (key == "I2a") id = BranchId::Sqrt2ExpI2a;
        else if (key == "I2b") id = BranchId::Sqrt2ExpI2b;
        else if (key == "I3") id = BranchId::Sqrt2ExpI3;
        else if (key == "radical") id = BranchId::Radical;
        else if (key == "gfp2") id = BranchId::GammaFp2;
        else if (key == "gfp1") id = BranchId::GammaFp1;
        else if (key.rfind("fp0:", 0) == 0 || key.rfind("fpmu:", 0) == 0) {
            id = key[2] == '0' ? BranchId::LogisticFp0 : BranchId::LogisticFpMu;
            std::string frac = key.substr(key.find(':') + 1);
            auto slash = frac.find('/');
            params.lambda = Rational{std::stol(frac.substr(0, slash)),
                                     std::stol(frac.substr(slash + 1))};
        } else {
            throw DomainError("unknown branch key " + key);
        }
        by_key.emplace(key, std::make_shared<const AbelBranch>(AbelBranch::build(id, params, ctx)));
    }
};

struct Def {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<std::string> needs;
    std::function<Real(const BranchSet&, const PrecisionContext&)> compute;
};

Real single_fixed_point(const AbelBranch& br, long lo_hundredths, long hi_hundredths) {
    const mpfr_prec_t bits = br.context().working_bits();
    auto roots = abel_fixed_points(br, Real::from_ratio(lo_hundredths, 100, bits),
                                   Real::from_ratio(hi_hundredths, 100, bits));
    if (roots.size() != 1)
        throw NonConvergenceError("fixed-point scan found " + std::to_string(roots.size()) +
                                  " roots instead of 1");
    return roots.front();
}

Real half(const PrecisionContext& ctx) { return Real::from_ratio(1, 2, ctx.working_bits()); }

std::vector<Def> definitions() {
    std::vector<Def> defs;

    defs.push_back({"koenig.sqrt2exp.x0_1", {}, {"I1"},
                    [](const BranchSet& b, const PrecisionContext& ctx) {
                        return b.get("I1").schroeder().value(Real::from_long(-1, ctx.working_bits()));
                    }});
    defs.push_back({"koenig.sqrt2exp.x0_3", {}, {"I1"},
                    [](const BranchSet& b, const PrecisionContext& ctx) {
                        return b.get("I1").schroeder().value(Real::from_long(1, ctx.working_bits()));
                    }});

    const std::pair<std::string, std::string> offsets[] = {
        {"I1", "alpha"}, {"I2a", "beta"}, {"I2b", "gamma"}, {"I3", "delta"}};
    for (const auto& [key, alias] : offsets) {
        defs.push_back({"sqrt2exp." + key + ".offset", {alias}, {key},
                        [key](const BranchSet& b, const PrecisionContext&) {
                            return b.get(key).offset();
                        }});
    }

    for (std::string key : {"I2a", "I2b"}) {
        for (long num : {5L, 7L}) {
            defs.push_back({"sqrt2exp." + key + ".F_at_" + std::to_string(num) + "_2", {}, {key},
                            [key, num](const BranchSet& b, const PrecisionContext& ctx) {
                                return b.get(key).eval(Real::from_ratio(num, 2, ctx.working_bits()));
                            }});
        }
    }

    struct HalfIterDef { std::string key; long x; };
    for (const auto& h : {HalfIterDef{"I1", 1}, HalfIterDef{"I2a", 3}, HalfIterDef{"I2b", 3},
                          HalfIterDef{"I3", 5}}) {
        defs.push_back({"sqrt2exp." + h.key + ".halfiter_at_" + std::to_string(h.x), {}, {h.key},
                        [h](const BranchSet& b, const PrecisionContext& ctx) {
                            return frac_iterate(b.get(h.key),
                                                Real::from_long(h.x, ctx.working_bits()), half(ctx));
                        }});
    }

    defs.push_back({"sqrt2exp.I1.fixed_point_1", {}, {"I1"},
                    [](const BranchSet& b, const PrecisionContext&) {
                        return single_fixed_point(b.get("I1"), -1000, 0);
                    }});
    defs.push_back({"sqrt2exp.I1.fixed_point_2", {}, {"I1"},
                    [](const BranchSet& b, const PrecisionContext&) {
                        return single_fixed_point(b.get("I1"), 0, 190);
                    }});

    struct Lam { std::string tag; long num, den; };
    for (const auto& l : {Lam{"1_2", 1, 2}, Lam{"1_3", 1, 3}, Lam{"2_3", 2, 3}}) {
        std::string key = "fp0:" + std::to_string(l.num) + "/" + std::to_string(l.den);
        defs.push_back({"logistic_fp0.lambda_" + l.tag + ".halfiter_at_1_2", {}, {key},
                        [key](const BranchSet& b, const PrecisionContext& ctx) {
                            return frac_iterate(b.get(key), half(ctx), half(ctx));
                        }});
    }

    for (const auto& l : {Lam{"3_2", 3, 2}, Lam{"4_3", 4, 3}, Lam{"5_3", 5, 3}}) {
        std::string key = "fpmu:" + std::to_string(l.num) + "/" + std::to_string(l.den);
        defs.push_back({"logistic_fpmu.lambda_" + l.tag + ".offset", {}, {key},
                        [key](const BranchSet& b, const PrecisionContext&) {
                            return b.get(key).offset();
                        }});
    }
    for (const auto& l : {Lam{"3_2", 3, 2}, Lam{"4_3", 4, 3}, Lam{"5_3", 5, 3}}) {
        std::string key = "fpmu:" + std::to_string(l.num) + "/" + std::to_string(l.den);
        defs.push_back({"logistic_fpmu.lambda_" + l.tag + ".halfiter_at_1_2", {}, {key},
                        [key](const BranchSet& b, const PrecisionContext& ctx) {
                            return frac_iterate_reported(b.get(key), half(ctx), half(ctx));
                        }});
    }

    defs.push_back({"radical.offset", {}, {"radical"},
                    [](const BranchSet& b, const PrecisionContext&) {
                        return b.get("radical").offset();
                    }});
    struct RadIter { std::string name; long num; };
    for (const auto& r : {RadIter{"radical.halfiter_at_0", 1}, RadIter{"radical.iter_3_2_at_0", 3},
                          RadIter{"radical.iter_5_2_at_0", 5}}) {
        defs.push_back({r.name, {}, {"radical"},
                        [r](const BranchSet& b, const PrecisionContext& ctx) {
                            return frac_iterate(b.get("radical"),
                                                Real::from_long(0, ctx.working_bits()),
                                                Real::from_ratio(r.num, 2, ctx.working_bits()));
                        }});
    }

    defs.push_back({"gamma_fp2.offset", {}, {"gfp2"},
                    [](const BranchSet& b, const PrecisionContext&) {
                        return b.get("gfp2").offset();
                    }});
    for (long x : {3L, 4L, 5L}) {
        defs.push_back({"gamma_fp2.halfiter_at_" + std::to_string(x), {}, {"gfp2"},
                        [x](const BranchSet& b, const PrecisionContext& ctx) {
                            return frac_iterate(b.get("gfp2"), Real::from_long(x, ctx.working_bits()),
                                                half(ctx));
                        }});
    }
    defs.push_back({"gamma_fp1.offset", {}, {"gfp1"},
                    [](const BranchSet& b, const PrecisionContext&) {
                        return b.get("gfp1").offset();
                    }});
    defs.push_back({"gamma_fp1.halfiter_at_neg1_2", {}, {"gfp1"},
                    [](const BranchSet& b, const PrecisionContext& ctx) {
                        return frac_iterate(b.get("gfp1"),
                                            Real::from_ratio(-1, 2, ctx.working_bits()), half(ctx));
                    }});
    return defs;
}

}  // namespace

std::vector<ConstantEntry> build_constants(const PrecisionContext& ctx,
                                           const std::string& filter, int jobs) {
    std::vector<Def> all = definitions();
    std::vector<const Def*> selected;
    for (const auto& d : all)
        if (matches(filter, d.name, d.aliases)) selected.push_back(&d);

    BranchSet branches;
    for (const Def* d : selected)
        for (const auto& key : d->needs) branches.ensure(key, ctx);

    std::vector<Real> values(selected.size());
    std::vector<std::exception_ptr> errors(selected.size());

    unsigned hw = std::thread::hardware_concurrency();
    if (jobs <= 0) jobs = hw ? static_cast<int>(hw) : 1;
    jobs = std::min<int>(jobs, static_cast<int>(selected.size()));

    auto compute_one = [&](std::size_t i) {
        try {
            values[i] = selected[i]->compute(branches, ctx);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) compute_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < selected.size();
                     i = next.fetch_add(1))
                    compute_one(i);
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const NonConvergenceError& e) {
            throw NonConvergenceError(selected[i]->name + ": " + e.what());
        } catch (const RangeError& e) {
            throw RangeError(selected[i]->name + ": " + e.what());
        } catch (const Error& e) {
            throw DomainError(selected[i]->name + ": " + e.what());
        }
    }

    std::vector<ConstantEntry> out;
    out.reserve(selected.size());
    for (std::size_t i = 0; i < selected.size(); ++i) {
        ConstantEntry e;
        e.name = selected[i]->name;
        e.aliases = selected[i]->aliases;
        e.value = values[i].to_fixed(ctx.target_digits);
        e.source = ConstantEntry::Source::Published;
        out.push_back(std::move(e));
    }
    return out;
}

std::string render_constants(const std::vector<ConstantEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.name;
        out += " = ";
        out += e.value;
        out += '\n';
    }
    return out;
}

}  // namespace fraciter
