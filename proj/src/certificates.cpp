#include "spreadlab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spreadlab/error.hpp"
#include "spreadlab/scan.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

namespace {

BoundCertificate make(std::string name, double bound, double attained, std::size_t n) {
    BoundCertificate c;
    c.name = std::move(name);
    c.bound = bound;
    c.attained = attained;
    c.slack = bound - attained;
    c.tolerance = certificate_tolerance(n);
    c.passed = c.slack >= -c.tolerance;
    return c;
}

BoundCertificate make_chain(std::string name, std::span<const double> links, std::size_t n) {
    BoundCertificate c;
    c.name = std::move(name);
    c.attained = links.front();
    c.bound = links.back();
    c.slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < links.size(); ++k) c.slack = std::min(c.slack, links[k + 1] - links[k]);
    c.tolerance = certificate_tolerance(n);
    c.passed = c.slack >= -c.tolerance;
    return c;
}

std::vector<std::size_t> nonreal_indices(const DenseMatrix& a, const Spectrum& spec) {
    const double tol_im = nonreal_tolerance(a);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < spec.size(); ++k)
        if (std::abs(spec[k].imag()) > tol_im) out.push_back(k);
    return out;
}

std::size_t conjugate_partner(const Spectrum& spec, std::size_t k) {
    std::size_t best = k;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < spec.size(); ++j) {
        if (j == k) continue;
        const double d = std::abs(spec[j] - std::conj(spec[k]));
        if (d < dist) {
            dist = d;
            best = j;
        }
    }
    return best;
}

void add_mu(BoundCertificate& c, const Complex& mu, std::size_t index) {
    c.context.emplace_back("index", static_cast<double>(index));
    c.context.emplace_back("mu_re", mu.real());
    c.context.emplace_back("mu_im", mu.imag());
}

} // namespace

double certificate_tolerance(std::size_t n) noexcept { return 1e-8 * std::max(1.0, static_cast<double>(n)); }

std::optional<double> BoundCertificate::context_value(std::string_view key) const {
    for (const auto& [k, v] : context)
        if (k == key) return v;
    return std::nullopt;
}

GammaBreakdown gamma(const DenseMatrix& a) {
    require_unit_box(a);
    return gamma(a, eigenvalues(a));
}

GammaBreakdown gamma(const DenseMatrix& a, const Spectrum& spec) {
    require_unit_box(a);
    const std::size_t n = a.order();
    GammaBreakdown g;
    g.lambda_max = perron(a, spec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double aij = a(i, j);
            const double aji = a(j, i);
            const double hat = std::min(aij, aji);
            g.a_hat_total += hat;
            g.addend_entry += 1.0 + hat - aij * aij - aji * aji;
        }
    g.addend_perron = static_cast<double>(n) * g.lambda_max - g.a_hat_total;
    g.gamma = g.addend_perron + g.addend_entry;
    return g;
}

BoundCertificate frobenius_identity(const DenseMatrix& a) {
    const auto g = gamma(a);
    const double n = static_cast<double>(a.order());
    const double rhs = (n * n + n * g.lambda_max - g.gamma) / 2.0;
    const double lhs = a.frobenius_sq();
    const double diff = std::abs(lhs - rhs);
    // An identity: bound 0 on the absolute difference.
    auto c = make("frobenius_identity", 0.0, diff, a.order());
    c.context = {{"frobenius_sq", lhs}, {"rhs", rhs}, {"lambda_max", g.lambda_max}, {"gamma", g.gamma}};
    return c;
}

std::vector<BoundCertificate> lemma3_certificates(const DenseMatrix& a) {
    require_unit_box(a);
    const Spectrum spec = eigenvalues(a);
    const auto g = gamma(a, spec);
    const double n = static_cast<double>(a.order());
    const double lam = g.lambda_max;
    const double modulus_bound = std::min((n * n + n * lam - 2.0 * lam * lam - g.gamma) / 4.0, lam * lam);
    const double realpart_bound = std::min((n * n + 3.0 * n * lam - 4.0 * lam * lam - g.gamma) / 8.0, lam * lam);

    std::vector<BoundCertificate> out;
    for (std::size_t k : nonreal_indices(a, spec)) {
        const Complex mu = spec[k];
        auto c1 = make("nonreal_modulus_sq", modulus_bound, std::norm(mu), a.order());
        add_mu(c1, mu, k);
        c1.context.emplace_back("lambda_max", lam);
        c1.context.emplace_back("gamma", g.gamma);
        out.push_back(std::move(c1));

        auto c2 = make("nonreal_realpart_sq", realpart_bound, mu.real() * mu.real(), a.order());
        add_mu(c2, mu, k);
        c2.context.emplace_back("lambda_max", lam);
        c2.context.emplace_back("gamma", g.gamma);
        out.push_back(std::move(c2));
    }
    return out;
}

std::vector<BoundCertificate> remaining_moduli_certificates(const DenseMatrix& a) {
    require_unit_box(a);
    const Spectrum spec = eigenvalues(a);
    const auto g = gamma(a, spec);
    const double n = static_cast<double>(a.order());
    const double lam = g.lambda_max;
    const std::size_t root = perron_index(spec);

    std::vector<BoundCertificate> out;
    for (std::size_t k : nonreal_indices(a, spec)) {
        const std::size_t partner = conjugate_partner(spec, k);
        double rest = 0.0;
        for (std::size_t j = 0; j < spec.size(); ++j)
            if (j != root && j != k && j != partner) rest += std::norm(spec[j]);
        const double bound = (n * n + n * lam - 2.0 * lam * lam - g.gamma) / 2.0 - 2.0 * std::norm(spec[k]);
        auto c = make("remaining_moduli", bound, rest, a.order());
        add_mu(c, spec[k], k);
        c.context.emplace_back("lambda_max", lam);
        c.context.emplace_back("gamma", g.gamma);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BoundCertificate> corollary4_certificates(const DenseMatrix& a) {
    require_unit_box(a);
    const Spectrum spec = eigenvalues(a);
    const double n = static_cast<double>(a.order());
    const double realpart_constant = (3.0 + std::sqrt(57.0)) / 24.0;

    std::vector<BoundCertificate> out;
    for (std::size_t k : nonreal_indices(a, spec)) {
        const Complex mu = spec[k];
        auto c1 = make("nonreal_modulus", n / 2.0, std::abs(mu), a.order());
        add_mu(c1, mu, k);
        out.push_back(std::move(c1));
        auto c2 = make("nonreal_realpart_abs", realpart_constant * n, std::abs(mu.real()), a.order());
        add_mu(c2, mu, k);
        out.push_back(std::move(c2));
    }
    return out;
}

BoundCertificate bendixson_certificate(const DenseMatrix& a) {
    const auto sym = symmetric_eigenvalues(a.symmetric_part());
    const double hi = sym.front();
    const double lo = sym.back();
    const Spectrum spec = eigenvalues(a);
    double re_min = std::numeric_limits<double>::infinity();
    double re_max = -std::numeric_limits<double>::infinity();
    for (const auto& v : spec) {
        re_min = std::min(re_min, v.real());
        re_max = std::max(re_max, v.real());
    }
    const double worst = std::max(lo - re_min, re_max - hi);
    auto c = make("bendixson", 0.0, worst, a.order());
    c.context = {{"sym_min", lo}, {"sym_max", hi}, {"re_min", re_min}, {"re_max", re_max}};
    return c;
}

BoundCertificate realpart_floor_certificate(const DenseMatrix& a) {
    require_unit_box(a);
    const Spectrum spec = eigenvalues(a);
    double re_min = std::numeric_limits<double>::infinity();
    for (const auto& v : spec) re_min = std::min(re_min, v.real());
    const double n = static_cast<double>(a.order());
    // Re λ ≥ −n/2  ⇔  −Re λ ≤ n/2.
    auto c = make("realpart_floor", n / 2.0, -re_min, a.order());
    c.context = {{"re_min", re_min}};
    return c;
}

BoundCertificate trace_square_certificate(const DenseMatrix& a) {
    require_unit_box(a);
    const auto g = gamma(a);
    const std::size_t n = a.order();
    double trace_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) trace_sq += a(i, j) * a(j, i);
    const double n_lambda = static_cast<double>(n) * g.lambda_max;
    const double links[] = {trace_sq, g.a_hat_total, n_lambda};
    auto c = make_chain("trace_square", links, n);
    c.context = {{"trace_a2", trace_sq},
                 {"a_hat_total", g.a_hat_total},
                 {"n_lambda_max", n_lambda},
                 {"slack_trace_to_hat", g.a_hat_total - trace_sq},
                 {"slack_hat_to_perron", n_lambda - g.a_hat_total}};
    return c;
}

BoundCertificate perturbation_bound(const DenseMatrix& base, const DenseMatrix& delta) {
    if (base.order() != delta.order()) {
        throw Error(ErrorCode::DimensionMismatch, "base and perturbation must have the same order");
    }
    const std::size_t n = base.order();
    const Spectrum base_spec = eigenvalues(base);
    const double nilpotent = schur_summary(base, base_spec).nilpotent_frobenius;
    double geometric = 0.0;
    double power = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        geometric += power;
        power *= nilpotent;
    }
    const double e_norm = delta.frobenius();
    const double bound = e_norm * geometric;

    double displacement = 0.0;
    for (const auto& mu : eigenvalues(base.plus(delta))) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& lam : base_spec) nearest = std::min(nearest, std::abs(lam - mu));
        displacement = std::max(displacement, nearest);
    }
    auto c = make("perturbation", bound, displacement, n);
    // With θ the bound above, the general (possibly defective) form is max(θ, θ^{1/n}).
    c.context = {{"nilpotent_frobenius", nilpotent},
                 {"e_frobenius", e_norm},
                 {"geometric_sum", geometric},
                 {"root_form_bound", std::max(bound, std::pow(bound, 1.0 / static_cast<double>(n)))}};
    return c;
}

BoundCertificate rounding_defect_certificate(const DenseMatrix& a) {
    require_unit_box(a);
    const auto g = gamma(a);
    const DenseMatrix hat = a.min_with_transpose();
    const DenseMatrix hat_round = hat.rounded();
    const DenseMatrix a_round = a.rounded();
    double hat_defect = 0.0;
    double a_defect = 0.0;
    double variance = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        hat_defect += std::abs(hat.entries()[k] - hat_round.entries()[k]);
        a_defect += std::abs(a.entries()[k] - a_round.entries()[k]);
        const double v = a.entries()[k];
        variance += v * (1.0 - v);
    }
    const double links[] = {hat_defect, 2.0 * a_defect, 4.0 * variance, 2.0 * g.gamma};
    auto c = make_chain("rounding_defect", links, a.order());
    c.context = {{"hat_defect", hat_defect},
                 {"twice_defect", 2.0 * a_defect},
                 {"four_variance", 4.0 * variance},
                 {"twice_gamma", 2.0 * g.gamma},
                 {"slack_hat", 2.0 * a_defect - hat_defect},
                 {"slack_defect", 4.0 * variance - 2.0 * a_defect},
                 {"slack_variance", 2.0 * g.gamma - 4.0 * variance}};
    return c;
}

BoundCertificate main_bound_certificate(const DenseMatrix& a) {
    require_nonnegative(a);
    const std::size_t n = a.order();
    const Spectrum spec = eigenvalues(a);
    const SpreadResult s = spread(a, spec);
    const double max_abs = a.max_abs();
    const double bound = 2.0 * static_cast<double>(n) / std::sqrt(3.0) * max_abs;
    auto c = make("main_bound", bound, s.value, n);
    c.context = {{"spread", s.value},
                 {"max_abs", max_abs},
                 {"pair_kind", static_cast<double>(s.pair_kind)},
                 {"lambda_max", s.perron}};
    c.detail = "pair_kind=" + std::string(to_string(s.pair_kind));
    if (s.pair_kind == PairKind::RealNonreal && max_abs <= 1.0) {
        const double nd = static_cast<double>(n);
        const auto g = gamma(a, spec);
        const double x = g.lambda_max / nd;
        const double eta = g.gamma / (nd * nd);
        if (x >= 0.0 && x <= 1.0 && f_radicand(x, eta) >= kRadicandFloor) {
            c.context.emplace_back("f_estimate_sq", nd * nd * f_eval(x, eta));
            c.context.emplace_back("pair_distance_sq", s.value * s.value);
        }
    }
    return c;
}

const std::vector<std::string>& certificate_names() {
    static const std::vector<std::string> names = {"frobenius", "gamma",   "lemma3",       "remaining", "corollary4",
                                                   "bendixson", "realpart", "trace_square", "rounding",  "main_bound"};
    return names;
}

std::vector<BoundCertificate> certify(const DenseMatrix& a, std::string_view name) {
    if (name == "frobenius") return {frobenius_identity(a)};
    if (name == "gamma") {
        const auto g = gamma(a);
        const double smallest = std::min(g.addend_perron, g.addend_entry);
        auto c = make("gamma_nonnegative", smallest, 0.0, a.order());
        c.context = {{"gamma", g.gamma},
                     {"addend_perron", g.addend_perron},
                     {"addend_entry", g.addend_entry},
                     {"a_hat_total", g.a_hat_total},
                     {"lambda_max", g.lambda_max}};
        return {c};
    }
    if (name == "lemma3") return lemma3_certificates(a);
    if (name == "remaining") return remaining_moduli_certificates(a);
    if (name == "corollary4") return corollary4_certificates(a);
    if (name == "bendixson") return {bendixson_certificate(a)};
    if (name == "realpart") return {realpart_floor_certificate(a)};
    if (name == "trace_square") return {trace_square_certificate(a)};
    if (name == "rounding") return {rounding_defect_certificate(a)};
    if (name == "main_bound") return {main_bound_certificate(a)};
    throw Error(ErrorCode::InvalidArgument, "unknown certificate '" + std::string(name) + "'");
}

} // namespace spreadlab
