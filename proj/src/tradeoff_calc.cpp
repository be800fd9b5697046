#include "alphapack/tradeoff_calc.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "alphapack/util.hpp"

namespace alphapack {

namespace {

double pow_term(double expo, double base) {
    // 0-exponent terms contribute nothing even at a vanishing base
    return expo == 0.0 ? 0.0 : expo * std::log(base);
}

double beta_star_of(double alpha, double epsilon) {
    if (alpha < 0.75 || alpha > 1.0)
        throw std::domain_error("alpha must be in [0.75, 1]");
    if (epsilon < 0.0) throw std::domain_error("epsilon must be >= 0");
    double b = (4.0 * alpha - 3.0 + 4.0 * epsilon) / (1.0 + 4.0 * epsilon);
    return std::min(std::max(b, 0.0), 1.0);
}

// max of f over [0, hi]: coarse grid, then golden-section refinement of the
// best bracket, plus explicit endpoint evaluation.
template <typename F>
std::pair<double, double> maximize_on(F&& f, double hi, double tol) {
    if (hi <= 0.0) return {0.0, f(0.0)};
    const int grid = 128;
    double best_x = 0.0, best_v = f(0.0);
    for (int i = 1; i <= grid; i++) {
        double x = hi * i / grid;
        double v = f(x);
        if (v > best_v) { best_v = v; best_x = x; }
    }
    double lo = std::max(0.0, best_x - hi / grid);
    double up = std::min(hi, best_x + hi / grid);
    const double gr = 0.6180339887498949;
    double a = lo, b = up;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        }
    }
    double xm = (a + b) / 2, vm = f(xm);
    if (vm > best_v) { best_v = vm; best_x = xm; }
    return {best_x, best_v};
}

struct InnerMax {
    double log_base;
    double beta_hat;
};

template <typename Maximand>
InnerMax inner_max(Maximand&& logf, double beta_star) {
    auto [bx, bv] = maximize_on(logf, beta_star, 1e-9);
    return {bv, bx};
}

double log_pack2_maximand(double beta, double c) {
    double cb = c * (3.0 - beta);
    return pow_term(6.0 - 4.0 * beta, cb) - pow_term(2.0 * beta, 2.0 * beta) -
           pow_term(6.0 - 6.0 * beta, cb - 2.0 * beta);
}

double log_match2_maximand(double beta, double c) {
    return pow_term(4.0 - 2.0 * beta, c) - pow_term(2.0 * beta, beta) -
           pow_term(4.0 - 4.0 * beta, c - beta);
}

template <typename LogMax>
OptimizeResult optimize_over_c(LogMax&& logf, double beta_star) {
    OptimizeResult out;
    if (beta_star <= 0.0) return out;  // maximand is 1 at beta = 0 for every c
    double best_c = 1.0, best_log = 1e300, best_beta = 0.0;
    for (int i = 0; i <= 3000; i++) {
        double c = 1.0 + i * 1e-3;
        InnerMax im = inner_max([&](double b) { return logf(b, c); }, beta_star);
        if (im.log_base < best_log) {
            best_log = im.log_base;
            best_c = c;
            best_beta = im.beta_hat;
        }
    }
    // local refinement around the winning grid point
    double lo = std::max(1.0, best_c - 1e-3), hi = std::min(4.0, best_c + 1e-3);
    auto outer = [&](double x) {
        return -inner_max([&](double b) { return logf(b, lo + x); }, beta_star).log_base;
    };
    auto [cx, negv] = maximize_on(outer, hi - lo, 1e-7);
    double c_ref = lo + cx;
    if (-negv < best_log) {
        best_log = -negv;
        best_c = c_ref;
        best_beta = inner_max([&](double b) { return logf(b, c_ref); }, beta_star).beta_hat;
    }
    out.base = std::exp(best_log);
    out.c_hat = best_c;
    out.beta_hat = best_beta;
    return out;
}

}  // namespace

double base_pack1(double alpha) {
    if (alpha <= 0.0 || alpha > 1.0) throw std::domain_error("alpha must be in (0, 1]");
    double lg = std::log(27.0) + xlogx(1.0 - alpha) - xlogx(3.0 - alpha);
    return std::exp(lg);
}

double base_pack1_finite(double alpha, long long k) {
    if (alpha <= 0.0 || alpha > 1.0) throw std::domain_error("alpha must be in (0, 1]");
    long long m = (long long)std::floor(alpha * (double)k + 1e-9);
    double lg = (log_binomial_real(3.0 * k, (double)m) -
                 log_binomial_real((double)k, (double)m)) /
                (double)k;
    return std::exp(lg);
}

double pack2_maximand(double beta, double c) {
    return std::exp(log_pack2_maximand(beta, c));
}

double base_pack2(double alpha, double epsilon, double c) {
    if (c < 1.0) throw std::domain_error("c must be >= 1");
    double bs = beta_star_of(alpha, epsilon);
    return std::exp(inner_max([&](double b) { return log_pack2_maximand(b, c); }, bs)
                        .log_base);
}

double match2_maximand(double beta, double c) {
    return std::exp(log_match2_maximand(beta, c));
}

double base_match2(double alpha, double epsilon, double c) {
    if (c < 1.0) throw std::domain_error("c must be >= 1");
    double bs = beta_star_of(alpha, epsilon);
    return std::exp(inner_max([&](double b) { return log_match2_maximand(b, c); }, bs)
                        .log_base);
}

OptimizeResult optimize_pack2(double alpha, double epsilon) {
    return optimize_over_c([](double b, double c) { return log_pack2_maximand(b, c); },
                           beta_star_of(alpha, epsilon));
}

OptimizeResult optimize_match2(double alpha, double epsilon) {
    return optimize_over_c([](double b, double c) { return log_match2_maximand(b, c); },
                           beta_star_of(alpha, epsilon));
}

double base_exact_scaled(double alpha, ExactScheme scheme) {
    switch (scheme) {
        case ExactScheme::SP3Det: return std::pow(8.097, 1.5 * alpha - 0.5);
        case ExactScheme::SP3Rand: return std::pow(3.3432, 1.5 * alpha - 0.5);
        case ExactScheme::DM3Det: return std::pow(2.5961, 3.0 * alpha - 1.0);
        case ExactScheme::DM3Rand: return std::pow(2.0, 1.5 * alpha - 0.5);
    }
    throw std::logic_error("bad scheme");
}

const char* problem_tag_name(ProblemTag tag) {
    switch (tag) {
        case ProblemTag::P2: return "p2";
        case ProblemTag::SP3Det: return "3sp-det";
        case ProblemTag::SP3Rand: return "3sp-rand";
        case ProblemTag::DM3Det: return "3dm-det";
        case ProblemTag::DM3Rand: return "3dm-rand";
    }
    return "?";
}

std::vector<TradeoffRow> emit_table(ProblemTag tag, const std::vector<double>& alphas,
                                    double epsilon) {
    std::vector<TradeoffRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        TradeoffRow row;
        row.alpha = a;
        switch (tag) {
            case ProblemTag::P2:
                row.proc1 = base_pack1(a);
                row.exact_ref = std::pow(6.75, a);
                break;
            case ProblemTag::SP3Det:
                row.proc1 = base_exact_scaled(a, ExactScheme::SP3Det);
                row.exact_ref = std::pow(8.097, a);
                break;
            case ProblemTag::SP3Rand:
                row.proc1 = base_exact_scaled(a, ExactScheme::SP3Rand);
                row.exact_ref = std::pow(3.3432, a);
                break;
            case ProblemTag::DM3Det:
                row.proc1 = base_exact_scaled(a, ExactScheme::DM3Det);
                row.exact_ref = std::pow(2.5961, 2.0 * a);
                break;
            case ProblemTag::DM3Rand:
                row.proc1 = base_exact_scaled(a, ExactScheme::DM3Rand);
                row.exact_ref = std::pow(2.0, a);
                break;
        }
        OptimizeResult opt = (tag == ProblemTag::DM3Det || tag == ProblemTag::DM3Rand)
                                 ? optimize_match2(a, epsilon)
                                 : optimize_pack2(a, epsilon);
        row.proc2 = opt.base;
        row.c_hat = opt.c_hat;
        row.beta_hat = opt.beta_hat;
        row.dispatcher = std::min(row.proc1, row.proc2);
        row.proc2_flagged = row.proc2 > row.proc1;
        rows.push_back(row);
    }
    return rows;
}

std::string format_table_text(ProblemTag tag, const std::vector<TradeoffRow>& rows) {
    static const char* kCols[][3] = {
        {"Pack", "Pack1", "Pack2"},          // P2
        {"SetPack", "SetPack1", "Pack2"},    // SP3Det
        {"SPRand", "SPRand1", "Pack2"},      // SP3Rand
        {"Match", "Match1", "Match2"},       // DM3Det
        {"MatchRand", "MatchRand1", "Match2"},  // DM3Rand
    };
    const char** names = kCols[(int)tag];
    std::ostringstream os;
    os << std::left << std::setw(7) << "alpha" << std::setw(12) << names[0]
       << std::setw(12) << names[1] << std::setw(14) << names[2] << std::setw(7) << "c"
       << "exact-ref\n";
    for (const auto& r : rows) {
        std::ostringstream p2col;
        p2col << std::fixed << std::setprecision(4) << r.proc2
              << (r.proc2_flagged ? "*" : "");
        os << std::fixed << std::setprecision(2) << std::left << std::setw(7) << r.alpha
           << std::setprecision(4) << std::setw(12) << r.dispatcher << std::setw(12)
           << r.proc1 << std::setw(14) << p2col.str() << std::setprecision(2)
           << std::setw(7) << r.c_hat << std::setprecision(4) << r.exact_ref << "\n";
    }
    if (!rows.empty()) os << "(* marks a column above its dispatcher partner)\n";
    return os.str();
}

std::string format_table_csv(const std::vector<TradeoffRow>& rows) {
    std::ostringstream os;
    os << "alpha,dispatcher,proc1,proc2,c_hat,exact_reference\n";
    for (const auto& r : rows) {
        os << std::fixed << std::setprecision(2) << r.alpha << ","
           << std::setprecision(6) << r.dispatcher << "," << r.proc1 << "," << r.proc2
           << "," << std::setprecision(3) << r.c_hat << "," << std::setprecision(6)
           << r.exact_ref << "\n";
    }
    return os.str();
}

}  // namespace alphapack
