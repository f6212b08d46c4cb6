// Copyright 2026 The microkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "microkerr/pol_state.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "microkerr/dense_state.h"
#include "microkerr/errors.h"

using namespace microkerr;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

std::vector<SourcePair> two_pairs(std::complex<double> x, std::complex<double> y) {
    return {{x, y, {"u1", "u2"}}, {x, y, {"d1", "d2"}}};
}

PolState random_state(std::mt19937_64 &gen, size_t k) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<std::string> modes;
    for (size_t i = 0; i < k; ++i) modes.push_back("m" + std::to_string(i));
    PolState::Amplitudes amps;
    for (size_t idx = 0; idx < (size_t{1} << k); ++idx) {
        std::string label;
        for (size_t b = 0; b < k; ++b) label += (idx >> (k - 1 - b)) & 1 ? 'V' : 'H';
        amps[label] = {n(gen), n(gen)};
    }
    return PolState(modes, amps);
}

void expect_matches_dense(const PolState &sparse, const DenseState &dense, double tol) {
    ASSERT_EQ(sparse.modes(), dense.modes());
    const DenseState as_dense = DenseState::from_sparse(sparse);
    for (size_t i = 0; i < dense.amplitudes().size(); ++i) {
        EXPECT_NEAR(std::abs(as_dense.amplitudes()[i] - dense.amplitudes()[i]), 0.0, tol) << i;
    }
}

}  // namespace

TEST(product_state, single_pair) {
    const std::vector<SourcePair> one{{1.0, 0.0, {"a", "b"}}};
    const auto s = product_state(one);
    EXPECT_EQ(s.amplitudes().size(), 1u);
    EXPECT_EQ(s.amplitude("HH"), std::complex<double>(1.0));
}

TEST(product_state, two_copies_give_four_terms) {
    const std::complex<double> x{0.6, 0.0};
    const std::complex<double> y{0.0, 0.8};
    const auto s = product_state(two_pairs(x, y));
    EXPECT_EQ(s.modes(), (std::vector<std::string>{"u1", "u2", "d1", "d2"}));
    EXPECT_EQ(s.amplitudes().size(), 4u);
    EXPECT_NEAR(std::abs(s.amplitude("HHHH") - x * x), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude("HHVV") - x * y), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude("VVHH") - x * y), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude("VVVV") - y * y), 0.0, 1e-15);
}

TEST(product_state, balanced_pairs) {
    const auto s = product_state(two_pairs(kH, kH));
    for (const char *label : {"HHHH", "HHVV", "VVHH", "VVVV"}) {
        EXPECT_NEAR(s.amplitude(label).real(), 0.5, 1e-15);
    }
}

TEST(product_state, rejects_unnormalized_source) {
    EXPECT_THROW(product_state(two_pairs(0.6, 0.6)), UnnormalizedInput);
}

TEST(pol_state, constructor_validation) {
    EXPECT_THROW(PolState({"a", "a"}, {{"HH", 1.0}}), RegisterMismatch);
    EXPECT_THROW(PolState({"a", "b"}, {{"H", 1.0}}), RegisterMismatch);
    EXPECT_THROW(PolState({"a"}, {{"X", 1.0}}), RegisterMismatch);
    EXPECT_THROW(PolState({"a"}, {{"H", 0.0}}), UnnormalizedInput);
    const PolState s({"a"}, {{"H", 3.0}, {"V", 4.0}, {"H", 0.0}});
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
    // Dust is pruned.
    const PolState t({"a"}, {{"H", 1.0}, {"V", 1e-16}});
    EXPECT_EQ(t.amplitudes().size(), 1u);
}

TEST(rotate45, maps_basis_states) {
    const auto h = rotate45(PolState::basis({"d"}, "H"), "d");
    EXPECT_NEAR(h.amplitude("H").real(), kH, 1e-15);
    EXPECT_NEAR(h.amplitude("V").real(), kH, 1e-15);
    const auto v = rotate45(PolState::basis({"d"}, "V"), "d");
    EXPECT_NEAR(v.amplitude("H").real(), kH, 1e-15);
    EXPECT_NEAR(v.amplitude("V").real(), -kH, 1e-15);
}

TEST(rotate45, twice_is_identity) {
    const auto v2 = rotate45(rotate45(PolState::basis({"d"}, "V"), "d"), "d");
    EXPECT_EQ(v2.amplitudes().size(), 1u);
    EXPECT_NEAR(v2.amplitude("V").real(), 1.0, 1e-15);
    const auto h2 = rotate45(rotate45(PolState::basis({"d"}, "H"), "d"), "d");
    EXPECT_NEAR(h2.amplitude("H").real(), 1.0, 1e-15);
}

TEST(rotate45, transpose_undoes_rotation) {
    // The rotator matrix is symmetric, so its transpose is itself.
    std::mt19937_64 gen(1);
    for (int t = 0; t < 50; ++t) {
        const auto s = random_state(gen, 3);
        const auto back = rotate45(rotate45(s, "m1"), "m1");
        EXPECT_NEAR(fidelity(s, back), 1.0, 1e-12);
        for (const auto &[label, amp] : s.amplitudes()) {
            EXPECT_NEAR(std::abs(back.amplitude(label) - amp), 0.0, 1e-12);
        }
    }
}

TEST(rotate45, unknown_mode) { EXPECT_THROW(rotate45(PolState::basis({"a"}, "H"), "b"), UnknownMode); }

TEST(phase_flip, maps_psi_minus_to_psi_plus) {
    const std::vector<std::string> modes{"u1", "u2"};
    const PolState minus(modes, {{"VV", kH}, {"HH", -kH}});
    const PolState plus(modes, {{"HH", kH}, {"VV", kH}});
    EXPECT_NEAR(fidelity(minus, plus), 0.0, 1e-15);
    EXPECT_NEAR(fidelity(phase_flip(minus, "u1", Pol::H), plus), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(phase_flip(minus, "u2", Pol::H), plus), 1.0, 1e-15);
}

TEST(phase_flip, involution_and_noop) {
    std::mt19937_64 gen(2);
    const auto s = random_state(gen, 2);
    const auto twice = phase_flip(phase_flip(s, "m0", Pol::V), "m0", Pol::V);
    for (const auto &[label, amp] : s.amplitudes()) EXPECT_NEAR(std::abs(twice.amplitude(label) - amp), 0.0, 1e-15);
    const auto hh = PolState::basis({"a", "b"}, "HH");
    EXPECT_EQ(phase_flip(hh, "a", Pol::V).amplitude("HH"), std::complex<double>(1.0));
    EXPECT_THROW(phase_flip(hh, "c", Pol::V), UnknownMode);
}

TEST(detect, deterministic_outcomes) {
    RandomStream rng(1);
    for (int i = 0; i < 100; ++i) {
        const auto d = detect(PolState::basis({"a"}, "H"), "a", rng);
        EXPECT_EQ(d.event.outcome, Pol::H);
        EXPECT_EQ(d.event.detector, "D1");
    }
    const auto d = detect(PolState::basis({"a", "b"}, "HV"), "b", rng, 1);
    EXPECT_EQ(d.event.outcome, Pol::V);
    EXPECT_EQ(d.event.detector, "D4");
    EXPECT_EQ(d.state.modes(), std::vector<std::string>{"a"});
}

TEST(detect, born_frequencies_on_random_states) {
    std::mt19937_64 gen(3);
    for (int t = 0; t < 5; ++t) {
        const auto s = random_state(gen, 2);
        const double p = probability_h(s, "m0");
        RandomStream rng(100 + t);
        const int samples = 100000;
        int hits = 0;
        for (int i = 0; i < samples; ++i) hits += detect(s, "m0", rng).event.outcome == Pol::H;
        const double sigma = std::sqrt(p * (1.0 - p) / samples);
        EXPECT_NEAR(static_cast<double>(hits) / samples, p, 4.0 * sigma + 1e-12);
    }
}

TEST(detect, balanced_superposition) {
    const auto plus = rotate45(PolState::basis({"a"}, "H"), "a");
    EXPECT_NEAR(probability_h(plus, "a"), 0.5, 1e-15);
}

TEST(detect, project_out_rejects_empty_branch) {
    EXPECT_THROW(project_out(PolState::basis({"a"}, "H"), "a", Pol::V), ZeroNormBranch);
    const auto last = project_out(PolState::basis({"a"}, "H"), "a", Pol::H);
    EXPECT_TRUE(last.remainder.modes().empty());
    EXPECT_NEAR(last.probability, 1.0, 1e-15);
}

TEST(fidelity, basic_values) {
    const auto hh = PolState::basis({"a", "b"}, "HH");
    const auto vv = PolState::basis({"a", "b"}, "VV");
    EXPECT_NEAR(fidelity(hh, hh), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(hh, vv), 0.0, 1e-15);
    EXPECT_THROW(fidelity(hh, PolState::basis({"b", "a"}, "HH")), RegisterMismatch);

    const PolState psi_plus({"a", "b"}, {{"HH", kH}, {"VV", kH}});
    const std::complex<double> x{0.6, 0.0};
    const std::complex<double> y{0.0, 0.8};
    const PolState partial({"a", "b"}, {{"HH", x}, {"VV", y}});
    EXPECT_NEAR(fidelity(partial, psi_plus), std::norm(x + y) / 2.0, 1e-15);
    EXPECT_NEAR(fidelity(psi_plus, partial), fidelity(partial, psi_plus), 1e-15);
    // Global phase is invisible.
    const PolState rotated({"a", "b"}, {{"HH", x * std::polar(1.0, 1.3)}, {"VV", y * std::polar(1.0, 1.3)}});
    EXPECT_NEAR(fidelity(partial, rotated), 1.0, 1e-15);
}

TEST(pol_state, dump_format) {
    const PolState s({"a", "b"}, {{"VV", -kH}, {"HH", kH}});
    const std::string dump = s.dump();
    EXPECT_EQ(dump.substr(0, 3), "HH ");
    EXPECT_NE(dump.find("\nVV -0.7071067811865"), std::string::npos);
}

TEST(pol_state, random_programs_preserve_norm_and_match_dense) {
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<int> op_pick(0, 2);
    for (int program = 0; program < 1000; ++program) {
        const size_t k = 1 + gen() % 6;
        PolState s = random_state(gen, k);
        DenseState d = DenseState::from_sparse(s);
        const int steps = 1 + static_cast<int>(gen() % 12);
        for (int step = 0; step < steps; ++step) {
            const std::string mode = "m" + std::to_string(gen() % k);
            switch (op_pick(gen)) {
                case 0:
                    s = rotate45(s, mode);
                    d.rotate45(mode);
                    break;
                case 1:
                    s = phase_flip(s, mode, Pol::H);
                    d.phase_flip(mode, Pol::H);
                    break;
                default:
                    s = phase_flip(s, mode, Pol::V);
                    d.phase_flip(mode, Pol::V);
                    break;
            }
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
        }
        expect_matches_dense(s, d, 1e-12);
    }
}

TEST(dense_state, projection_and_restriction) {
    const auto sources = two_pairs(kH, kH);
    DenseState d = DenseState::from_sources(sources);
    EXPECT_NEAR(d.norm_squared(), 1.0, 1e-15);
    expect_matches_dense(product_state(sources), d, 1e-15);

    d.project_h_count("u2", "d2", 1);
    d.normalize();
    EXPECT_NEAR(std::abs(d.amplitude("HHVV")), kH, 1e-15);
    EXPECT_NEAR(std::abs(d.amplitude("VVHH")), kH, 1e-15);

    d.project("d1", Pol::V);
    const std::vector<std::string> measured{"d1"};
    const std::vector<Pol> outcomes{Pol::V};
    const DenseState r = d.restrict_to(measured, outcomes);
    EXPECT_EQ(r.modes(), (std::vector<std::string>{"u1", "u2", "d2"}));
    EXPECT_NEAR(std::abs(r.amplitude("HHV")), kH, 1e-15);
    EXPECT_THROW(DenseState({"a"}, {1.0}), RegisterMismatch);
}
