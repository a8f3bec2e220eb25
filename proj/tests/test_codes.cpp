// Code constructions and exact distance metadata, cross-checked against
// brute-force pairwise scans over enumerated codewords.

#include <catch2/catch_amalgamated.hpp>

#include "spherecode/bounds.hpp"
#include "spherecode/codes.hpp"

using namespace spherecode;

namespace {

int hamming(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// independent oracle: minimum pairwise distance by the O(q^2k) pair scan
int brute_force_dmin(const LinearCode& code) {
    const auto words = code.enumerate_codewords();
    int best = code.length() + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming(words[i], words[j]));
    return best;
}

bool is_codeword(const LinearCode& code, const std::vector<std::uint16_t>& word) {
    const auto words = code.enumerate_codewords();
    return std::find(words.begin(), words.end(), word) != words.end();
}

}  // namespace

TEST_CASE("repetition codes") {
    const LinearCode rep3 = repetition_code(3);
    CHECK(rep3.length() == 3);
    CHECK(rep3.dimension() == 1);
    const auto words = rep3.enumerate_codewords();
    REQUIRE(words.size() == 2);
    CHECK(words[0] == std::vector<std::uint16_t>{0, 0, 0});
    CHECK(words[1] == std::vector<std::uint16_t>{1, 1, 1});
    CHECK(rep3.minimum_distance() == 3);
    CHECK(repetition_code(1).minimum_distance() == 1);
    CHECK(repetition_code(8).minimum_distance() == 8);
    const auto spectrum = repetition_code(5).distance_spectrum();
    CHECK(spectrum.weight_counts == std::map<int, std::uint64_t>{{0, 1}, {5, 1}});
}

TEST_CASE("reed-muller parameters") {
    const LinearCode rm13 = reed_muller_code(1, 3);
    CHECK(rm13.length() == 8);
    CHECK(rm13.dimension() == 4);
    CHECK(rm13.minimum_distance() == 4);
    const auto spec13 = rm13.distance_spectrum();
    CHECK(spec13.weight_counts == std::map<int, std::uint64_t>{{0, 1}, {4, 14}, {8, 1}});

    const LinearCode rm16 = reed_muller_code(1, 6);
    CHECK(rm16.length() == 64);
    CHECK(rm16.dimension() == 7);
    CHECK((std::uint64_t{1} << rm16.dimension()) >= 100);

    const LinearCode full = reed_muller_code(3, 3);
    CHECK(full.dimension() == 8);
    CHECK(full.minimum_distance() == 1);

    const auto rm12 = reed_muller_code(1, 2).enumerate_codewords();
    CHECK(rm12.size() == 8);
    CHECK(rm12[0].size() == 4);
}

TEST_CASE("reed-muller distance formula on the enumerable range") {
    for (int m = 1; m <= 8; ++m) {
        for (int r = 0; r <= m; ++r) {
            const LinearCode code = reed_muller_code(r, m);
            if (code.log2_num_codewords() > 14) continue;  // keep the scan quick
            REQUIRE(code.minimum_distance() == (1 << (m - r)));
            REQUIRE(code.formula_d_min() == 1 << (m - r));
        }
    }
}

TEST_CASE("bch codes") {
    SECTION("m=3 delta=3 is the [7,4,3] Hamming code") {
        const LinearCode code = bch_code(3, 3);
        CHECK(code.length() == 7);
        CHECK(code.dimension() == 4);
        CHECK(code.minimum_distance() == 3);
        CHECK(code.distance_spectrum().weight_counts ==
              std::map<int, std::uint64_t>{{0, 1}, {3, 7}, {4, 7}, {7, 1}});
    }
    SECTION("m=4 delta=7 is [15,5,7]") {
        const LinearCode code = bch_code(4, 7);
        CHECK(code.dimension() == 5);
        CHECK(code.minimum_distance() == 7);
    }
    SECTION("m=3 delta=7 degenerates to repetition") {
        const LinearCode code = bch_code(3, 7);
        CHECK(code.dimension() == 1);
        CHECK(code.minimum_distance() == 7);
    }
    SECTION("enumerated distance never falls below the design distance") {
        for (int m = 3; m <= 6; ++m) {
            const int n = (1 << m) - 1;
            for (int delta = 2; delta <= n; ++delta) {
                const LinearCode code = bch_code(m, delta);
                if (code.log2_num_codewords() > 14) continue;
                REQUIRE(code.minimum_distance() >= delta);
            }
        }
    }
}

TEST_CASE("bch_best_for_classes") {
    SECTION("K=2 picks the repetition code") {
        const LinearCode code = bch_best_for_classes(3, 2);
        CHECK(code.dimension() == 1);
        CHECK(code.minimum_distance() == 7);
        CHECK(code.params().bch_design_distance == 7);
    }
    SECTION("K=17 needs k >= 5, picks [15,5,7]") {
        const LinearCode code = bch_best_for_classes(4, 17);
        CHECK(code.dimension() == 5);
        CHECK(code.minimum_distance() == 7);
    }
    SECTION("K=100 at length 63") {
        const LinearCode code = bch_best_for_classes(6, 100);
        CHECK(code.dimension() >= 7);
        const int d = code.minimum_distance();
        CHECK(d >= code.params().bch_design_distance);
        // worst-case cosine of the mapped codebook sits slightly above zero
        const double bound = 1.0 - 2.0 * static_cast<double>(d) / 63.0;
        CHECK(bound > 0.0);
        CHECK(bound < 0.1);
    }
}

TEST_CASE("reed-solomon codes are MDS") {
    SECTION("q=4 k=2") {
        const LinearCode code = reed_solomon_code(4, 2);
        CHECK(code.length() == 4);
        CHECK(code.minimum_distance() == 3);
        CHECK(code.formula_d_min() == 3);
    }
    SECTION("k=1 repeats over GF(q)") {
        CHECK(reed_solomon_code(8, 1).minimum_distance() == 8);
    }
    SECTION("full space") {
        CHECK(reed_solomon_code(4, 4).minimum_distance() == 1);
    }
    SECTION("singleton equality for q <= 16") {
        for (int q : {2, 4, 8, 16}) {
            for (int k = 1; k <= q; ++k) {
                const LinearCode code = reed_solomon_code(q, k);
                if (code.log2_num_codewords() > 14) continue;
                REQUIRE(code.minimum_distance() == q - k + 1);
                REQUIRE(code.minimum_distance() == singleton_dmin_upper(q, k));
            }
        }
    }
    SECTION("invalid parameters") {
        CHECK_THROWS_AS(reed_solomon_code(4, 5), std::invalid_argument);
        CHECK_THROWS_AS(reed_solomon_code(6, 2), std::invalid_argument);
    }
}

TEST_CASE("puncturing") {
    const LinearCode rm13 = reed_muller_code(1, 3);
    SECTION("one position off RM(1,3)") {
        const LinearCode p = puncture_trailing(rm13, 1);
        CHECK(p.length() == 7);
        CHECK(p.dimension() == 4);
        CHECK(p.minimum_distance() == 3);
    }
    SECTION("repetition(3) to repetition(2)") {
        const LinearCode p = puncture_trailing(repetition_code(3), 1);
        CHECK(p.length() == 2);
        CHECK(p.minimum_distance() == 2);
    }
    SECTION("empty position list is the identity") {
        const LinearCode p = puncture(rm13, {});
        CHECK(p.length() == rm13.length());
        CHECK(p.family() == CodeFamily::ReedMuller);
    }
    SECTION("rank collapse is refused") {
        // dropping the only coordinate that separates the two generator rows
        CHECK_THROWS_AS(puncture(LinearCode::from_binary_generator({{1, 0}, {0, 1}}), {0}), infeasible_error);
        const LinearCode code = LinearCode::from_binary_generator({{1, 0, 0}, {0, 1, 1}});
        CHECK_THROWS_AS(puncture(code, {1, 2}), infeasible_error);
        // shortening the repetition code, by contrast, stays full rank
        CHECK(puncture(repetition_code(2), {0}).length() == 1);
    }
    SECTION("distance drops by at most the number of punctures") {
        for (int t = 1; t <= 3; ++t) {
            const LinearCode p = puncture_trailing(rm13, t);
            REQUIRE(p.minimum_distance() >= rm13.minimum_distance() - t);
        }
    }
}

TEST_CASE("parity extension") {
    SECTION("[7,4,3] Hamming becomes [8,4,4]") {
        const LinearCode ext = extend_with_parity(bch_code(3, 3));
        CHECK(ext.length() == 8);
        CHECK(ext.dimension() == 4);
        CHECK(ext.minimum_distance() == 4);
    }
    SECTION("repetition(2) keeps distance 2") {
        const LinearCode ext = extend_with_parity(repetition_code(2));
        const auto words = ext.enumerate_codewords();
        CHECK(words[1] == std::vector<std::uint16_t>{1, 1, 0});
        CHECK(ext.minimum_distance() == 2);
    }
    SECTION("even-weight codes are unchanged in distance") {
        const LinearCode even = LinearCode::from_binary_generator({{0, 1, 1}, {1, 0, 1}});
        const LinearCode ext = extend_with_parity(even);
        CHECK(ext.minimum_distance() == even.minimum_distance());
        for (const auto& w : ext.enumerate_codewords()) CHECK(w.back() == 0);
    }
}

TEST_CASE("enumeration order and caps") {
    const LinearCode even = LinearCode::from_binary_generator({{0, 1, 1}, {1, 0, 1}});
    const auto words = even.enumerate_codewords();
    REQUIRE(words.size() == 4);
    CHECK(words[0] == std::vector<std::uint16_t>{0, 0, 0});
    CHECK(words[1] == std::vector<std::uint16_t>{1, 0, 1});
    CHECK(words[2] == std::vector<std::uint16_t>{0, 1, 1});
    CHECK(words[3] == std::vector<std::uint16_t>{1, 1, 0});

    CHECK_THROWS_AS(reed_muller_code(1, 6).enumerate_codewords(16), infeasible_error);
    CHECK_THROWS_AS(LinearCode::from_binary_generator({}), std::invalid_argument);
}

TEST_CASE("linearity: sums of codewords are codewords") {
    const std::vector<LinearCode> codes{repetition_code(5), reed_muller_code(1, 3), bch_code(3, 3),
                                        reed_solomon_code(4, 2)};
    for (const auto& code : codes) {
        const auto words = code.enumerate_codewords();
        const FieldTable* field = code.field();
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i; j < words.size(); ++j) {
                std::vector<std::uint16_t> sum(words[i].size());
                for (std::size_t c = 0; c < sum.size(); ++c)
                    sum[c] = field ? static_cast<std::uint16_t>(field->add(words[i][c], words[j][c]))
                                   : static_cast<std::uint16_t>(words[i][c] ^ words[j][c]);
                REQUIRE(is_codeword(code, sum));
            }
        }
    }
}

TEST_CASE("spectrum d_min equals the brute-force pair scan") {
    const std::vector<LinearCode> codes{repetition_code(6),      reed_muller_code(1, 4), reed_muller_code(2, 4),
                                        bch_code(4, 5),          reed_solomon_code(4, 2), reed_solomon_code(8, 3),
                                        puncture_trailing(reed_muller_code(1, 4), 2)};
    for (const auto& code : codes) {
        REQUIRE(code.distance_spectrum().d_min == brute_force_dmin(code));
    }
}

TEST_CASE("spectra sum to q^k and never beat the singleton bound") {
    const std::vector<LinearCode> codes{repetition_code(9), reed_muller_code(1, 5), bch_code(5, 7),
                                        reed_solomon_code(8, 4)};
    for (const auto& code : codes) {
        const auto spec = code.distance_spectrum();
        REQUIRE(spec.weight_counts.at(0) == 1);
        REQUIRE(spec.total() == code.num_codewords());
        REQUIRE(spec.d_min <= singleton_dmin_upper(code.length(), code.dimension()));
    }
}

TEST_CASE("generator rank validation") {
    CHECK_THROWS_AS(LinearCode::from_binary_generator({{1, 1, 0}, {1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode::from_binary_generator({{1, 1}, {0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("puncturing q-ary codes") {
    const LinearCode rs = reed_solomon_code(4, 2);
    const LinearCode p = puncture_trailing(rs, 1);
    CHECK(p.length() == 3);
    CHECK(p.dimension() == 2);
    CHECK(p.minimum_distance() == 2);  // MDS property survives shortening by one
    CHECK(p.field_order() == 4);
    CHECK_THROWS_AS(puncture(rs, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(puncture(rs, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(extend_with_parity(rs), std::invalid_argument);
}

TEST_CASE("oversized generator matrices are refused") {
    // RM(7,14) would need a ~10^4 x 16384 generator
    CHECK_THROWS_WITH(reed_muller_code(7, 14), Catch::Matchers::ContainsSubstring("too large"));
}

TEST_CASE("bch at byte-oriented length") {
    const LinearCode code = bch_best_for_classes(8, 300);  // n = 255, k >= 9
    CHECK(code.length() == 255);
    CHECK(code.dimension() >= 9);
    const int d = code.minimum_distance();
    CHECK(d >= code.params().bch_design_distance);
    CHECK(d > 255 / 2 - 30);  // near n/2 separation in the low-rate regime
}
