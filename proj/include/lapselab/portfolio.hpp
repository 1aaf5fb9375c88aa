#pragma once
// Synthetic endowment portfolio: initial book generation and yearly roll-
// forward with new business.

#include <cstdint>
#include <string>
#include <vector>

#include "lapselab/actuarial.hpp"
#include "lapselab/rng.hpp"

namespace lapselab {

struct Contract {
  std::int64_t policy_id = 0;
  int calendar_year = 0;
  double age = 0.0;  // current age, real-valued
  double face_amount = 0.0;
  double duration = 0.0;
  double elapsed_duration = 0.0;
  double remaining_duration = 0.0;
  PremiumFrequency premium_frequency = PremiumFrequency::annual;
  double annual_premium = 0.0;
};

struct Portfolio {
  std::vector<Contract> contracts;
  int calendar_year = 0;
  std::int64_t next_policy_id = 0;  // id to assign to the next new contract
};

// Distribution parameters of the synthetic book (age/face/duration gamma laws
// and payment-frequency shares).
struct PortfolioAssumptions {
  double age_shape = 5.5, age_scale = 6.8;
  double face_offset = 5000.0, face_shape = 4.0, face_scale = 2000.0;
  double duration_offset = 5.0, duration_shape = 5.0, duration_scale = 1.5;
  double share_upfront = 0.15, share_annual = 0.25;  // remainder: monthly
};

// Draws one contract from its policy-specific stream. New business starts at
// elapsed_duration = 0; seasoned contracts draw elapsed uniformly over the
// term, capped by the attained age so issue ages stay nonnegative.
Contract sample_contract(RngStream& policy_stream, std::int64_t policy_id,
                         int calendar_year, bool is_new_business,
                         const PortfolioAssumptions& assumptions,
                         const EconomicAssumptions& econ, const MakehamParams& mort);

// n0 contracts at calendar year 0; policy ids 0..n0-1, one substream each.
Portfolio generate_initial_portfolio(std::int64_t n0, const RngStream& stage_stream,
                                     const PortfolioAssumptions& assumptions,
                                     const EconomicAssumptions& econ,
                                     const MakehamParams& mort);

// Ages every contract by one year and appends round-half-up
// (rate x active count) new contracts drawn from fresh policy substreams.
void advance_year(Portfolio& portfolio, const RngStream& stage_stream,
                  double new_business_rate, const PortfolioAssumptions& assumptions,
                  const EconomicAssumptions& econ, const MakehamParams& mort);

// Snapshot export, one row per contract, header included.
void write_portfolio_csv(const Portfolio& portfolio, const std::string& path);

const char* to_string(PremiumFrequency freq);

}  // namespace lapselab
