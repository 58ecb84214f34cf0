#include "scarf/numeric_oracle.hpp"
#include <cstdio>

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

SampledPotential::SampledPotential(double x_min, double x_max, std::vector<Complex> values)
    : x_min_(x_min), x_max_(x_max), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("SampledPotential: no slabs");
    if (!(x_max_ > x_min_)) throw DomainError("SampledPotential: x_max must exceed x_min");
    const double edge = std::max(std::abs(values_.front()), std::abs(values_.back()));
    if (edge >= tail_tol) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "SampledPotential: |V| = %.3e at the box edges, above tail_tol %.1e; "
                      "widen the box",
                      edge, tail_tol);
        throw TailTooLargeError(msg);
    }
}

SampledPotential SampledPotential::conjugated() const {
    std::vector<Complex> conj_values(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) conj_values[i] = std::conj(values_[i]);
    return SampledPotential(x_min_, x_max_, std::move(conj_values));
}

SampledPotential SampledPotential::from_csv(std::istream& in) {
    std::vector<double> xs;
    std::vector<Complex> vs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string x_s, re_s, im_s;
        if (!std::getline(fields, x_s, ',') || !std::getline(fields, re_s, ',') ||
            !std::getline(fields, im_s))
            throw DomainError("SampledPotential: expected 3 CSV columns, got: " + line);
        try {
            xs.push_back(std::stod(x_s));
            vs.emplace_back(std::stod(re_s), std::stod(im_s));
        } catch (const std::exception&) {
            if (xs.empty() && vs.empty()) continue;  // header line
            throw DomainError("SampledPotential: malformed CSV row: " + line);
        }
    }
    if (xs.size() < 2) throw DomainError("SampledPotential: need at least 2 rows");
    const double d = xs[1] - xs[0];
    if (!(d > 0.0)) throw DomainError("SampledPotential: x_mid must increase");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (std::abs(xs[i] - xs[i - 1] - d) > 1e-9 * std::max(1.0, std::abs(d)))
            throw DomainError("SampledPotential: x_mid grid is not uniform");
    return SampledPotential(xs.front() - d / 2.0, xs.back() + d / 2.0, std::move(vs));
}

void SampledPotential::to_csv(std::ostream& out) const {
    out << "x_mid,V_re,V_im\n";
    char buf[128];
    for (int i = 0; i < slab_count(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", midpoint(i), values_[i].real(),
                      values_[i].imag());
        out << buf;
    }
}

SampledPotential sample_scarf(const ScarfParameters& p, double x_min, double x_max,
                              int slab_count) {
    if (slab_count < 1) throw DomainError("sample_scarf: slab_count must be positive");
    const PotentialCoefficients c = coefficients(p);
    return sample_potential([&](double x) { return evaluate_potential(c, x); }, x_min, x_max,
                            slab_count);
}

namespace {

struct Mat2 {
    Complex a, b, c, d;  // [[a, b], [c, d]]
};

struct Composed {
    Mat2 m;
    double log_scale;  // true matrix = m * exp(log_scale)
};

// Slab propagator of (psi, psi'): [[cos qd, sin(qd)/q], [-q^2 sin(qd)/q, cos qd]].
Mat2 slab_matrix(Complex w, double d) {
    const Complex qd = std::sqrt(w) * d;
    Complex cos_qd, sinc;
    if (std::abs(qd) < 1e-4) {
        const Complex u = qd * qd;
        cos_qd = 1.0 - u / 2.0 + u * u / 24.0;
        sinc = d * (1.0 - u / 6.0 + u * u / 120.0);
    } else {
        cos_qd = std::cos(qd);
        sinc = std::sin(qd) / std::sqrt(w);
    }
    return {cos_qd, sinc, -w * sinc, cos_qd};
}

Composed compose(const SampledPotential& v, double k) {
    const double d = v.slab_width();
    Mat2 m{1.0, 0.0, 0.0, 1.0};
    double log_scale = 0.0;
    for (const Complex& V : v.values()) {
        const Mat2 s = slab_matrix(k * k - V, d);
        m = {s.a * m.a + s.b * m.c, s.a * m.b + s.b * m.d,
             s.c * m.a + s.d * m.c, s.c * m.b + s.d * m.d};
        const double mag = std::max(std::max(std::abs(m.a), std::abs(m.b)),
                                    std::max(std::abs(m.c), std::abs(m.d)));
        if (mag > 1e100) {
            m = {m.a / mag, m.b / mag, m.c / mag, m.d / mag};
            log_scale += std::log(mag);
        }
    }
    return {m, log_scale};
}

}  // namespace

OracleResult solve(const SampledPotential& v, double k) {
    if (!(k >= k_min)) throw KTooSmallError("oracle solve: k must be positive, got " +
                                            std::to_string(k));
    const auto [m, log_scale] = compose(v, k);

    // cond(M) ~ ||M||_F^2 / |det M| for a 2x2 with det ~ 1 (scale-invariant).
    const double norm2 = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    const Complex det = m.a * m.d - m.b * m.c;
    const double log_cond = std::log(norm2) - std::log(std::abs(det));
    if (log_cond > std::log(oracle_cond_limit))
        throw IllConditionedError(
            "oracle solve: transfer-matrix condition estimate exp(" + std::to_string(log_cond) +
            ") exceeds 1e12 (deep tunneling regime)");

    const Complex ik(0.0, k);
    const Complex u = m.a + ik * m.b;
    const Complex vv = m.a - ik * m.b;
    const Complex pp = m.c + ik * m.d;
    const Complex qq = m.c - ik * m.d;
    const Complex D = ik * vv - qq;

    const double len = v.x_max() - v.x_min();
    const Complex phase_len = std::exp(-ik * len);

    OracleResult out;
    out.k = k;
    out.r_left = std::exp(2.0 * ik * v.x_min()) * (pp - ik * u) / D;
    out.t_left = phase_len * (vv * pp - u * qq) / D * std::exp(log_scale);
    const Complex t_right_scaled = 2.0 * ik * phase_len / D;
    out.t_right = t_right_scaled * std::exp(-log_scale);
    out.r_right = t_right_scaled * vv * std::exp(-ik * (v.x_min() + v.x_max())) -
                  std::exp(-2.0 * ik * v.x_max());
    out.slab_count = v.slab_count();
    out.x_min = v.x_min();
    out.x_max = v.x_max();
    return out;
}

OracleResult solve_reversed(const SampledPotential& v, double k) {
    const OracleResult conj_result = solve(v.conjugated(), k);
    OracleResult out;
    out.k = -k;
    out.t_left = std::conj(conj_result.t_left);
    out.r_left = std::conj(conj_result.r_left);
    out.t_right = std::conj(conj_result.t_right);
    out.r_right = std::conj(conj_result.r_right);
    out.slab_count = conj_result.slab_count;
    out.x_min = conj_result.x_min;
    out.x_max = conj_result.x_max;
    return out;
}

TimeReversedObservables time_reversed_observables(const SampledPotential& v, double k) {
    const OracleResult rev = solve_reversed(v, k);
    return {std::norm(rev.t_left), std::norm(rev.r_left), std::norm(rev.r_right)};
}

}  // namespace scarf
