#pragma once

#include <string>

#include "circuit.hpp"
#include "experiments.hpp"
#include "resource.hpp"

namespace qftlab::reports {

// "%.<digits>g" rendering; digits clamped to [3, 17].
std::string format_double(double value, int digits);

// Rounds through the textual form so emitted JSON numbers carry the
// requested precision.
double snap(double value, int digits);

std::string state_json(const sim::StateVector& state, int digits);

std::string leakage_report(const qecc::LeakageResult& result, sim::cplx alpha,
                           sim::cplx beta, int digits);

std::string shor_cnot_report(const qecc::ShorCnotResult& result, int digits);

std::string transversal_report(const qecc::TransversalReport& report, int digits);

struct TGadgetCase {
    std::string label;
    sim::cplx alpha;
    sim::cplx beta;
    qecc::TGadgetResult result;
};

std::string t_gadget_report(const std::vector<TGadgetCase>& cases, int digits);

std::string estimate_adder_json(int n, resource::Decomposition decomposition,
                                resource::CensusSource source, double kappa_g,
                                int levels, int digits);

std::string table1_csv(int digits);

std::string fig4_csv(int n, const std::vector<double>& kappas,
                     const std::vector<int>& k2s,
                     const std::vector<std::pair<double, double>>& line_pairs,
                     int digits);

}  // namespace qftlab::reports
