#pragma once
// Survival probabilities under a constant-plus-exponential hazard law, their
// numerical inversion, and equivalence-principle premiums for endowment
// contracts (benefit at death within the term or at maturity).

#include <cstdint>

namespace lapselab {

struct MakehamParams {
  double baseline_hazard = 0.00022;  // A, per year
  double age_factor = 2.7e-7;        // B
  double age_base = 1.124;           // c, > 1
};

struct EconomicAssumptions {
  double interest_rate = 0.02;
  double acquisition_loading = 0.025;   // once, on face amount
  double admin_loading = 0.03;          // proportional to each premium
  double amortization_loading = 0.001;  // on face amount, per contract year
  int retirement_age = 67;              // premiums payable before this age
};

enum class PremiumFrequency : std::uint8_t { upfront = 0, annual = 1, monthly = 2 };

// P(survive t more years | alive at age a) = exp(-A t - (B/ln c) c^a (c^t - 1)).
// Throws std::invalid_argument for negative a or t.
double survival_prob(double age, double t, const MakehamParams& mort);

// Smallest t >= 0 with survival_prob(age, t) = u, by bisection on [0, 200].
// u must lie in (0, 1]; the result matches u to 1e-10 in probability.
double invert_survival(double age, double u, const MakehamParams& mort);

struct ContractTerms {
  double age_at_issue = 0.0;
  double face_amount = 0.0;
  double duration = 0.0;  // contract term in years, >= 1
};

// Level premium per year, payable annually in advance while the insured is
// under the retirement age: payments fall at integer times k < m where
// m = min(duration, retirement_age - age_at_issue).  Benefits: face at the
// end of the (possibly fractional) year of death, or face at maturity.
// Expense loadings: acquisition once on face, amortization per contract year
// on face, administration proportional to each premium collected.
//
// min_payment_years = 0 rejects contracts with no payment period before the
// retirement age; a positive floor instead guarantees that many payment
// years (portfolio sampling uses 1.0 so late-age issues become effectively
// single-premium contracts instead of failing).
double level_annual_premium(const ContractTerms& terms,
                            const EconomicAssumptions& econ,
                            const MakehamParams& mort,
                            double min_payment_years = 0.0);

// The per-year premium figure carried as a contract feature: the level
// premium itself for annual/monthly payers; for up-front contracts the
// single payment spread linearly over the payment years.
double annualized_premium(const ContractTerms& terms, PremiumFrequency freq,
                          const EconomicAssumptions& econ,
                          const MakehamParams& mort,
                          double min_payment_years = 0.0);

}  // namespace lapselab
