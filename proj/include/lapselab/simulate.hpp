#pragma once
// Yearly competing-risk event simulation over an evolving portfolio:
// surrender (the label), death, and maturity terminate a policy's series;
// survivors age and new business is appended each year.

#include "lapselab/dataset.hpp"
#include "lapselab/profile.hpp"

namespace lapselab {

// One observation row per active policy-year, features frozen at the start
// of the year.  Per policy: the exact death time is drawn once at entry by
// inverting the survival law; each year surrender fires when the latent
// probability is >= an i.i.d. uniform; when surrender and a competing event
// share a year, surrender precedes with probability equal to the fractional
// time until that event (drawn from a dedicated tie stream).  Output rows are
// sorted by (policy_id, calendar_year) and independent of worker count.
Dataset simulate_events(const Portfolio& initial_portfolio,
                        const SurrenderProfile& profile, int horizon_years,
                        double new_business_rate, const MakehamParams& mort,
                        const PortfolioAssumptions& assumptions,
                        const EconomicAssumptions& econ,
                        const RngStream& event_stream,
                        const RngStream& portfolio_stream);

}  // namespace lapselab
