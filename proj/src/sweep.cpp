#include "heis/sweep.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace heis {

using nlohmann::json;

std::size_t SweepSpec::point_count() const {
    std::size_t n = 1;
    for (const auto& axis : axes) {
        if (axis.empty()) return 0;
        if (n > kMaxPoints / axis.size() + 1) return kMaxPoints + 1;
        n *= axis.size();
    }
    return n;
}

namespace {

std::vector<double> parse_axis(const json& j) {
    if (j.is_number()) return {j.get<double>()};
    if (j.is_array()) return j.get<std::vector<double>>();
    if (j.is_object()) {
        const double lo = j.at("min").get<double>();
        const double hi = j.at("max").get<double>();
        const int count = j.at("count").get<int>();
        if (count < 0) throw std::invalid_argument("axis count must be >= 0");
        std::vector<double> values;
        values.reserve(count);
        for (int i = 0; i < count; ++i) {
            values.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        }
        return values;
    }
    throw std::invalid_argument("axis must be a number, a list, or {min, max, count}");
}

}  // namespace

SweepSpec sweep_spec_from_json(const json& j) {
    SweepSpec spec;
    const json& ranges = j.at("ranges");
    const char* names[6] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 6; ++i) {
        spec.axes[i] = ranges.contains(names[i]) ? parse_axis(ranges.at(names[i]))
                                                 : std::vector<double>{0.0};
    }
    if (j.contains("homomorphism")) {
        const json& h = j.at("homomorphism");
        SubgroupTag tag;
        if (!subgroup_tag_from_string(h.at("target").get<std::string>(), &tag))
            throw std::invalid_argument("unknown subgroup target");
        if (tag == SubgroupTag::H8 || tag == SubgroupTag::H9) {
            spec.target = SubgroupId::line(tag, h.at("a_hat").get<double>(),
                                           h.at("b_hat").get<double>());
        } else {
            spec.target = SubgroupId::plain(tag);
        }
        spec.coefficients = h.at("coefficients").get<std::vector<double>>();
        spec.has_homomorphism = true;
    } else {
        throw std::invalid_argument("sweep requires a homomorphism descriptor");
    }
    if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("tol")) spec.options.tol = o.at("tol").get<double>();
        if (o.contains("t_max")) spec.options.t_max = o.at("t_max").get<double>();
        if (o.contains("samples")) spec.options.samples = o.at("samples").get<int>();
        if (o.contains("steps")) spec.options.steps = o.at("steps").get<int>();
        if (o.contains("seed")) spec.options.seed = o.at("seed").get<std::uint64_t>();
    }
    spec.options.validate();
    return spec;
}

SweepResult run_sweep(const SweepSpec& spec) {
    const std::size_t count = spec.point_count();
    if (count > SweepSpec::kMaxPoints)
        throw std::invalid_argument("sweep grid exceeds the 10^6-point cap");

    SweepResult result;
    result.rows.reserve(count);
    if (count == 0) return result;

    const Homomorphism h =
        build_homomorphism(spec.target, {spec.coefficients.data(), spec.coefficients.size()});

    for (double a : spec.axes[0])
        for (double b : spec.axes[1])
            for (double c : spec.axes[2])
                for (double d : spec.axes[3])
                    for (double e : spec.axes[4])
                        for (double f : spec.axes[5]) {
                            SweepRow row;
                            row.derivation = {a, b, c, d, e, f};
                            const Verdict v =
                                decide_oracle(row.derivation, h, spec.options.tol);
                            row.oracle_status = v.status;
                            row.cases = decide_cases(row.derivation, h, spec.options.tol);
                            row.dim_unobservable = v.unobservable.dim();
                            row.dim_fix_cap_kernel = v.fix_cap_kernel.dim();
                            result.verdict_counts[to_string(v.status)]++;
                            if (row.cases.status.has_value() &&
                                *row.cases.status != v.status) {
                                result.findings.push_back(
                                    {row.derivation, to_string(spec.target.tag), v.status,
                                     *row.cases.status, row.cases.rationale});
                            }
                            result.rows.push_back(std::move(row));
                        }
    return result;
}

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const SweepResult& result) {
    os << "a,b,c,d,e,f,target,verdict_oracle,verdict_paper,covered,dim_I,dim_fix_cap_K\n";
    for (const SweepRow& row : result.rows) {
        const Derivation& d = row.derivation;
        os << num(d.a) << ',' << num(d.b) << ',' << num(d.c) << ',' << num(d.d) << ','
           << num(d.e) << ',' << num(d.f) << ',' << to_string(spec.target.tag) << ','
           << to_string(row.oracle_status) << ','
           << (row.cases.status.has_value() ? to_string(*row.cases.status) : "Uncovered")
           << ',' << (row.cases.covered ? "true" : "false") << ',' << row.dim_unobservable
           << ',' << row.dim_fix_cap_kernel << '\n';
    }
}

void print_sweep_summary(std::ostream& os, const SweepResult& result) {
    os << "points: " << result.rows.size() << "\n";
    for (const auto& [verdict, count] : result.verdict_counts) {
        os << "  " << verdict << ": " << count << "\n";
    }
    os << "discrepancies: " << result.findings.size() << "\n";
    for (const DiscrepancyFinding& f : result.findings) {
        const Derivation& d = f.derivation;
        os << "  a=" << num(d.a) << " b=" << num(d.b) << " c=" << num(d.c)
           << " d=" << num(d.d) << " e=" << num(d.e) << " f=" << num(d.f)
           << " target=" << f.target << " oracle=" << to_string(f.oracle_status)
           << " case-analysis=" << to_string(f.case_status) << " [" << f.rationale << "]\n";
    }
}

}  // namespace heis
