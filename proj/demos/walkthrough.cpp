// Walkthrough: from a surface with three 1/3(1,2) points to the numbers of
// a fake projective plane, plus the fiber analysis of the mixed case.

#include <iostream>

#include "qhpp/qhpp.hpp"

int main() {
    using namespace qhpp;

    const CyclicQuotientSingularity cusp{3, 2};
    const CyclicQuotientSingularity seven{7, 5};

    std::cout << "resolutions:\n";
    for (const auto& s : {cusp, seven}) {
        auto chain = hj_resolve(s);
        auto d = discrepancy(chain);
        std::cout << "  " << s.to_string() << " -> " << chain.to_string()
                  << ", D^2 = " << to_string(d.self_square) << "\n";
    }

    SurfaceLedger z("Z", Rational(3), 9, 0, 0, {cusp, cusp, cusp});
    auto x = cover_invariants({z, 3, {0, 1, 2}, {}, 0, 0, "X"});
    std::cout << "\ntriple cover of " << z.label << ": K^2 = " << to_string(x.resolution_k2)
              << ", e = " << x.resolution_e << ", singular points: " << x.singularities.size()
              << "\n";

    std::cout << "\nfiber configurations holding four disjoint A2 chains:\n";
    std::vector<ExceptionalChain> chains(4, a_chain(2));
    for (const auto& config : enumerate_configurations(12, 8, chains, Multisection{6, -3}))
        std::cout << "  " << config.to_string() << "\n";

    auto report = run_scenario_text(builtin_scenario_text("thm-main2-fibers"));
    std::cout << "\nscenario thm-main2-fibers: " << (report.passed ? "PASS" : "FAIL") << "\n";
    return report.passed ? 0 : 1;
}
