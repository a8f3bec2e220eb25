// Builds a few codebooks for K = 16 classes and prints their separation
// next to the certified bounds.

#include <cstdio>

#include "spherecode/spherecode.hpp"

int main() {
    using namespace spherecode;
    const std::uint64_t K = 16;

    const auto report = [](const char* name, const Codebook& cb, double certificate) {
        const SeparationStats stats = separation_stats(cb);
        std::printf("%-14s n=%-4d max cosine %+.6f (certified <= %+.6f), mean %+.6f\n", name, cb.dim,
                    stats.max_cosine, certificate, stats.mean_cosine);
    };

    report("one-hot", onehot_codebook(K), 0.0);
    report("simplex", simplex_codebook(K), rankin_converse(K));

    const LinearCode rm = reed_muller_code(1, 4);  // [16, 5, 8]
    report("RM(1,4)", codebook_from_code(rm, K), binary_code_cosine_bound(rm));

    const LinearCode bch = bch_best_for_classes(4, K);  // length 15
    report("BCH n=15", codebook_from_code(bch, K), binary_code_cosine_bound(bch));

    const LinearCode rs = reed_solomon_code(4, 2);  // 16 codewords, n = 12
    report("RS(4,2)+simplex", qary_codebook(rs, K),
           composite_code_cosine_bound(rs.formula_d_min().value(), rs.length(), simplex_component_min_distance_sq(4)));

    std::printf("\nbounds for K=16:\n");
    for (int n : {8, 15, 16, 31, 64}) {
        const BoundsReport b = bounds_report(K, n);
        std::printf("  n=%-3d d_GV=%-3d achievable %+.6f converse %+.6f\n", n, b.gv_dmin,
                    b.achievable_max_cosine, b.converse_min_of_max_cosine);
    }
    return 0;
}
