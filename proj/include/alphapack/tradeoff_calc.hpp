#pragma once
#include <string>
#include <vector>

namespace alphapack {

// Exponent-base calculator for the tradeoff procedures. All powers are
// evaluated in log space with the 0^0 = 1 convention.

// lim_k (C(3k, ak) / C(k, ak))^(1/k) = 27 (1-a)^(1-a) / (3-a)^(3-a)
double base_pack1(double alpha);
// finite-k estimate (C(3k, floor(ak)) / C(k, floor(ak)))^(1/k) via lgamma
double base_pack1_finite(double alpha, long long k);

// inner maximand of the Pack2 bound at given beta:
//   (c(3-b))^(6-4b) / ((2b)^(2b) (c(3-b)-2b)^(6-6b))
double pack2_maximand(double beta, double c);
// max over beta in [0, beta_star]; beta_star = (4a-3+4e)/(1+4e)
double base_pack2(double alpha, double epsilon, double c);

// Match2 maximand: c^(4-2b) / (b^(2b) (c-b)^(4-4b))
double match2_maximand(double beta, double c);
double base_match2(double alpha, double epsilon, double c);

struct OptimizeResult {
    double base = 1.0;
    double c_hat = 1.0;
    double beta_hat = 0.0;
};
// outer min over c in [1, 4] (1e-3 grid + local refinement)
OptimizeResult optimize_pack2(double alpha, double epsilon);
OptimizeResult optimize_match2(double alpha, double epsilon);

enum class ExactScheme { SP3Det, SP3Rand, DM3Det, DM3Rand };
// 8.097^(1.5a-0.5), 3.3432^(1.5a-0.5), 2.5961^(3a-1), 2^(1.5a-0.5)
double base_exact_scaled(double alpha, ExactScheme scheme);

enum class ProblemTag { P2, SP3Det, SP3Rand, DM3Det, DM3Rand };
const char* problem_tag_name(ProblemTag tag);

struct TradeoffRow {
    double alpha = 0;
    double dispatcher = 0;  // min of the two procedure columns
    double proc1 = 0;       // Pack1 / SetPack1 / SPRand1 / Match1 / MatchRand1
    double proc2 = 0;       // Pack2 / Match2, at its optimizing c
    double c_hat = 1;
    double beta_hat = 0;
    double exact_ref = 0;   // the exact-algorithm reference column
    bool proc2_flagged = false;  // proc2 exceeds proc1 (the dash convention)
};

std::vector<TradeoffRow> emit_table(ProblemTag tag, const std::vector<double>& alphas,
                                    double epsilon);

std::string format_table_text(ProblemTag tag, const std::vector<TradeoffRow>& rows);
std::string format_table_csv(const std::vector<TradeoffRow>& rows);

}  // namespace alphapack
