#include "heis/analysis.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace heis {

using nlohmann::json;

void Options::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("options.tol must be > 0");
    if (!(t_max > 0.0)) throw std::invalid_argument("options.t_max must be > 0");
    if (samples < 2) throw std::invalid_argument("options.samples must be >= 2");
    if (steps < 1) throw std::invalid_argument("options.steps must be >= 1");
}

Homomorphism ProblemSpec::build() const {
    if (!has_homomorphism)
        throw std::invalid_argument("spec has no homomorphism descriptor");
    return build_homomorphism(target, {coefficients.data(), coefficients.size()});
}

Report analyze(const ProblemSpec& spec) {
    spec.options.validate();
    if (!spec.derivation.is_finite())
        throw std::invalid_argument("derivation entries must be finite");
    const Homomorphism h = spec.build();

    Report r;
    r.spec = spec;
    r.fixed = fixed_points(spec.derivation, spec.options.tol);
    r.kernel = kernel(h);
    r.oracle = decide_oracle(spec.derivation, h, spec.options.tol);
    r.cases = decide_cases(spec.derivation, h, spec.options.tol);
    if (r.oracle.witness.has_value()) {
        r.witness_verified = !distinguish(spec.derivation, h, r.oracle.witness->p,
                                          r.oracle.witness->q, spec.options.t_max,
                                          spec.options.samples, spec.options.tol)
                                  .has_value();
    }
    if (r.cases.status.has_value() && *r.cases.status != r.oracle.status) {
        r.findings.push_back({spec.derivation, to_string(spec.target.tag),
                              r.oracle.status, *r.cases.status, r.cases.rationale});
    }
    return r;
}

namespace {

json derivation_to_json(const Derivation& d) {
    return json{{"a", d.a}, {"b", d.b}, {"c", d.c}, {"d", d.d}, {"e", d.e}, {"f", d.f}};
}

Derivation derivation_from_json(const json& j) {
    Derivation d;
    d.a = j.at("a").get<double>();
    d.b = j.at("b").get<double>();
    d.c = j.at("c").get<double>();
    d.d = j.at("d").get<double>();
    d.e = j.at("e").get<double>();
    d.f = j.at("f").get<double>();
    return d;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (Eigen::Index c = 0; c < s.basis().cols(); ++c) {
        basis.push_back({s.basis()(0, c), s.basis()(1, c), s.basis()(2, c)});
    }
    return json{{"dim", s.dim()}, {"basis", basis}, {"fragile", s.fragile()}};
}

Subspace subspace_from_json(const json& j) {
    const auto& basis = j.at("basis");
    Eigen::Matrix<double, 3, Eigen::Dynamic> b(3, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (int r = 0; r < 3; ++r) b(r, c) = basis[c][r].get<double>();
    }
    return Subspace::from_orthonormal(b, j.at("fragile").get<bool>());
}

json element_to_json(const GroupElement& g) { return json::array({g.x, g.y, g.z}); }

GroupElement element_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

Status status_from_string(const std::string& s) {
    for (Status st : {Status::Observable, Status::NotLocallyObservable,
                      Status::LocallyObservableOnly}) {
        if (to_string(st) == s) return st;
    }
    throw std::invalid_argument("unknown verdict status: " + s);
}

FixCase fix_case_from_string(const std::string& s) {
    for (FixCase c : {FixCase::InvertibleTraceNonzero, FixCase::InvertibleTraceZero,
                      FixCase::SingularTraceNonzero, FixCase::SingularTraceZero,
                      FixCase::SingularTraceNonzeroAligned, FixCase::SingularTraceZeroAligned,
                      FixCase::SingularDegenerate}) {
        if (to_string(c) == s) return c;
    }
    throw std::invalid_argument("unknown fixed-point case: " + s);
}

KernelCase kernel_case_from_string(const std::string& s) {
    for (KernelCase c : {KernelCase::FullGroup, KernelCase::PlaneYZero, KernelCase::PlaneZZero,
                         KernelCase::TiltedPlane, KernelCase::XAxis}) {
        if (to_string(c) == s) return c;
    }
    throw std::invalid_argument("unknown kernel case: " + s);
}

}  // namespace

ProblemSpec problem_spec_from_json(const json& j) {
    ProblemSpec spec;
    spec.derivation = derivation_from_json(j.at("derivation"));
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

json to_json(const ProblemSpec& spec) {
    json j;
    j["derivation"] = derivation_to_json(spec.derivation);
    if (spec.has_homomorphism) {
        json h;
        h["target"] = to_string(spec.target.tag);
        h["coefficients"] = spec.coefficients;
        if (spec.target.needs_direction()) {
            h["a_hat"] = spec.target.a_hat;
            h["b_hat"] = spec.target.b_hat;
        }
        j["homomorphism"] = h;
    }
    j["options"] = json{{"tol", spec.options.tol},
                        {"t_max", spec.options.t_max},
                        {"samples", spec.options.samples},
                        {"steps", spec.options.steps},
                        {"seed", spec.options.seed}};
    return j;
}

json to_json(const Report& report) {
    json j;
    j["spec"] = to_json(report.spec);
    j["fixed_points"] = json{{"case", to_string(report.fixed.case_label)},
                             {"subspace", subspace_to_json(report.fixed.subspace)}};
    j["kernel"] = json{{"case", to_string(report.kernel.label)},
                       {"b_invertible", report.kernel.b_invertible},
                       {"subspace", subspace_to_json(report.kernel.subspace)}};
    j["unobservable"] = subspace_to_json(report.oracle.unobservable);
    j["fix_cap_kernel"] = subspace_to_json(report.oracle.fix_cap_kernel);
    json oracle{{"status", to_string(report.oracle.status)},
                {"fragile", report.oracle.fragile}};
    json cases{{"covered", report.cases.covered}, {"rationale", report.cases.rationale}};
    if (report.cases.status.has_value()) {
        cases["status"] = to_string(*report.cases.status);
    } else {
        cases["status"] = nullptr;
    }
    j["verdicts"] = json{{"oracle", oracle}, {"case_analysis", cases}};
    if (report.oracle.witness.has_value()) {
        j["witness"] = json{{"p", element_to_json(report.oracle.witness->p)},
                            {"q", element_to_json(report.oracle.witness->q)},
                            {"verified", report.witness_verified}};
    } else {
        j["witness"] = nullptr;
    }
    json findings = json::array();
    for (const DiscrepancyFinding& f : report.findings) {
        findings.push_back(json{{"derivation", derivation_to_json(f.derivation)},
                                {"target", f.target},
                                {"oracle_status", to_string(f.oracle_status)},
                                {"case_status", to_string(f.case_status)},
                                {"rationale", f.rationale}});
    }
    j["findings"] = findings;
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.spec = problem_spec_from_json(j.at("spec"));
    r.fixed.case_label = fix_case_from_string(j.at("fixed_points").at("case").get<std::string>());
    r.fixed.subspace = subspace_from_json(j.at("fixed_points").at("subspace"));
    r.kernel.label = kernel_case_from_string(j.at("kernel").at("case").get<std::string>());
    r.kernel.b_invertible = j.at("kernel").at("b_invertible").get<bool>();
    r.kernel.subspace = subspace_from_json(j.at("kernel").at("subspace"));
    r.oracle.unobservable = subspace_from_json(j.at("unobservable"));
    r.oracle.fix_cap_kernel = subspace_from_json(j.at("fix_cap_kernel"));
    r.oracle.status =
        status_from_string(j.at("verdicts").at("oracle").at("status").get<std::string>());
    r.oracle.fragile = j.at("verdicts").at("oracle").at("fragile").get<bool>();
    const json& cases = j.at("verdicts").at("case_analysis");
    r.cases.covered = cases.at("covered").get<bool>();
    r.cases.rationale = cases.at("rationale").get<std::string>();
    if (!cases.at("status").is_null())
        r.cases.status = status_from_string(cases.at("status").get<std::string>());
    if (!j.at("witness").is_null()) {
        r.oracle.witness = WitnessPair{element_from_json(j.at("witness").at("p")),
                                       element_from_json(j.at("witness").at("q"))};
        r.witness_verified = j.at("witness").at("verified").get<bool>();
    }
    for (const json& f : j.at("findings")) {
        r.findings.push_back({derivation_from_json(f.at("derivation")),
                              f.at("target").get<std::string>(),
                              status_from_string(f.at("oracle_status").get<std::string>()),
                              status_from_string(f.at("case_status").get<std::string>()),
                              f.at("rationale").get<std::string>()});
    }
    return r;
}

bool Report::operator==(const Report& other) const {
    return to_json(*this) == to_json(other);
}

void print_report(std::ostream& os, const Report& report) {
    const auto flags = os.flags();
    os << std::setprecision(6);
    const Derivation& d = report.spec.derivation;
    os << "derivation: a=" << d.a << " b=" << d.b << " c=" << d.c << " d=" << d.d
       << " e=" << d.e << " f=" << d.f << "\n";
    if (report.spec.has_homomorphism) {
        os << "target: " << to_string(report.spec.target.tag);
        if (report.spec.target.needs_direction())
            os << " (a_hat=" << report.spec.target.a_hat
               << ", b_hat=" << report.spec.target.b_hat << ")";
        os << ", coefficients:";
        for (double c : report.spec.coefficients) os << " " << c;
        os << "\n";
    }
    os << "fixed points: " << to_string(report.fixed.case_label)
       << ", dim " << report.fixed.subspace.dim() << "\n";
    os << "kernel: " << to_string(report.kernel.label) << ", dim "
       << report.kernel.subspace.dim() << "\n";
    os << "unobservable subspace: dim " << report.oracle.unobservable.dim() << "\n";
    os << "fixed points within kernel: dim " << report.oracle.fix_cap_kernel.dim() << "\n";
    os << "oracle verdict: " << to_string(report.oracle.status)
       << (report.oracle.fragile ? " (fragile: rank decision near threshold)" : "") << "\n";
    os << "case-analysis verdict: ";
    if (report.cases.status.has_value()) {
        os << to_string(*report.cases.status) << " (covered)";
    } else {
        os << "not covered";
    }
    os << " -- " << report.cases.rationale << "\n";
    if (report.oracle.witness.has_value()) {
        const WitnessPair& w = *report.oracle.witness;
        os << "witness pair: p=(" << w.p.x << ", " << w.p.y << ", " << w.p.z << ") q=("
           << w.q.x << ", " << w.q.y << ", " << w.q.z << ")"
           << (report.witness_verified ? " (outputs identical on the sample grid)" : "")
           << "\n";
    }
    for (const DiscrepancyFinding& f : report.findings) {
        os << "finding: oracle=" << to_string(f.oracle_status)
           << " case-analysis=" << to_string(f.case_status) << " [" << f.rationale << "]\n";
    }
    os.flags(flags);
}

}  // namespace heis
