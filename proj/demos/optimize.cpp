// Runs both optimization-based schemes for K = 10 prototypes in n = 8
// dimensions and prints the trace every 100 epochs.

#include <cstdio>

#include "spherecode/spherecode.hpp"

int main() {
    using namespace spherecode;
    const int K = 10, n = 8;

    for (const LossKind loss : {LossKind::LSE, LossKind::AVG}) {
        OptimizerConfig cfg;
        cfg.loss = loss;
        cfg.seed = 7;
        auto [codebook, trace] = optimize_prototypes(K, n, cfg);
        std::printf("%s: K=%d n=%d\n", loss == LossKind::LSE ? "log-sum-exp" : "average-max", K, n);
        for (std::size_t e = 0; e < trace.points.size(); e += 100) {
            const auto& p = trace.points[e];
            std::printf("  epoch %4zu  loss %+.6f  max cosine %+.6f  t %.1f\n", e, p.loss_value, p.max_cosine,
                        p.temperature);
        }
        std::printf("  best max cosine: %+.6f (converse bound %+.6f)\n\n",
                    separation_stats(codebook).max_cosine, rankin_converse(K));
    }
    return 0;
}
