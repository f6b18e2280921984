#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/labeled_partitions.hpp"

using namespace stablerep;

namespace {

oracle::Labeled to_oracle(const QLabeledPartition& x) {
    oracle::Labeled y;
    for (std::size_t k = 0; k < x.base.size(); ++k) y.insert({oracle::Block(x.base[k].begin(), x.base[k].end()), x.labels[k]});
    return y;
}

oracle::Labeled to_oracle(const GeneralLabeledPartition& x) {
    oracle::Labeled y;
    for (std::size_t k = 0; k < x.base.size(); ++k) y.insert({oracle::Block(x.base[k].begin(), x.base[k].end()), x.labels[k]});
    return y;
}

Permutation random_permutation(std::mt19937& rng, int n) {
    Permutation p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("set partitions") {
    for (int p = 0; p <= 7; ++p) {
        const auto all = enumerate_set_partitions(p);
        CHECK(BigInt(static_cast<unsigned long>(all.size())) == oracle::bell(p));
        for (const auto& s : all) {
            CHECK(canonical_set_partition(s) == s);
            CHECK(ground_set_size(s) == p);
        }
    }
    CHECK(canonical_set_partition({{3, 1}, {0, 2}}) == SetPartition{{0, 2}, {1, 3}});
}

TEST_CASE("general labeled partitions") {
    CHECK(enumerate_general(2, LabelAlphabet::standard(1)).size() == 5);
    CHECK(enumerate_general(1, LabelAlphabet::standard(0)).size() == 1);
    CHECK(enumerate_general(3, LabelAlphabet::standard(0)).size() == 5);
    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; q <= 5; ++q) {
            const auto ours = enumerate_general(p, LabelAlphabet::standard(q));
            std::set<oracle::Labeled> seen;
            for (const auto& x : ours) seen.insert(to_oracle(x));
            CHECK(seen.size() == ours.size());
            CHECK(seen == oracle::labeled_general(p, q));
        }
    }
    const LabelAlphabet custom({{"a", "b"}, {"c", "d", "e"}});
    CHECK(enumerate_general(2, custom).size() == 7);
    CHECK_THROWS_AS(enumerate_general(9, LabelAlphabet::standard(0)), Error);
}

TEST_CASE("P_{p,q}") {
    CHECK(enumerate_pq(2, 1).size() == 3);
    CHECK(enumerate_pq(3, 1).size() == 10);
    for (int p = 0; p <= 5; ++p) {
        CHECK(BigInt(static_cast<unsigned long>(enumerate_pq(p, p).size())) == factorial(p));
        for (int q = 0; q <= p; ++q) {
            std::set<oracle::Labeled> seen;
            for (const auto& x : enumerate_pq(p, q)) seen.insert(to_oracle(x));
            CHECK(seen == oracle::labeled_pq(p, q));
        }
    }
    try {
        enumerate_pq(1, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    try {
        enumerate_pq(9, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeBudgetExceeded);
    }
}

TEST_CASE("permutation bicharacters") {
    const auto pq21 = permutation_bicharacter(2, 1, BicharacterSource::LabeledPQ);
    CHECK(pq21.at_identity() == 3);
    CHECK(pq21({2}, {1}) == 1);
    const auto pq20 = permutation_bicharacter(2, 0, BicharacterSource::LabeledPQ);
    CHECK(pq20({2}, {}) == 2);
    CHECK(permutation_bicharacter(2, 1, BicharacterSource::General).at_identity() == 5);

    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= p; ++q) {
            const auto ours = permutation_bicharacter(p, q, BicharacterSource::LabeledPQ);
            const auto general = permutation_bicharacter(p, q, BicharacterSource::General);
            const auto brute = oracle::labeled_pq(p, q);
            const auto brute_general = oracle::labeled_general(p, q);
            for (const auto& s : conjugacy_classes(p)) {
                for (const auto& t : conjugacy_classes(q)) {
                    const auto sigma = oracle::permutation_of_type(s.parts());
                    const auto tau = oracle::permutation_of_type(t.parts());
                    CHECK(ours(s, t) == oracle::fixed_points(brute, sigma, tau));
                    CHECK(general(s, t) == oracle::fixed_points(brute_general, sigma, tau));
                }
            }
        }
    }
}

TEST_CASE("fixed points do not depend on the class representative") {
    std::mt19937 rng(7);
    for (int p = 1; p <= 4; ++p) {
        for (int q = 0; q <= p; ++q) {
            const auto elements = enumerate_pq(p, q);
            const auto general = enumerate_general(p, LabelAlphabet::standard(q));
            const auto pq_char = permutation_bicharacter(p, q, BicharacterSource::LabeledPQ);
            const auto general_char = permutation_bicharacter(p, q, BicharacterSource::General);
            for (int trial = 0; trial < 20; ++trial) {
                const Permutation sigma = random_permutation(rng, p);
                const Permutation tau = random_permutation(rng, q);
                CHECK(pq_char(cycle_type(sigma), cycle_type(tau)) == fixed_point_count(elements, sigma, tau));
                CHECK(general_char(cycle_type(sigma), cycle_type(tau)) == fixed_point_count(general, sigma, tau));
            }
        }
    }
}

TEST_CASE("the action is a group action") {
    std::mt19937 rng(11);
    const auto elements = enumerate_pq(4, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s1 = random_permutation(rng, 4), s2 = random_permutation(rng, 4);
        const auto t1 = random_permutation(rng, 2), t2 = random_permutation(rng, 2);
        for (const auto& x : elements) CHECK(act(compose(s1, s2), compose(t1, t2), x) == act(s1, t1, act(s2, t2, x)));
    }
}

TEST_CASE("splitting map") {
    const auto merged = parse_q_labeled("{1,2}:labels=1");
    const auto split = splitting_map(merged);
    CHECK(format_labeled(split, LabelAlphabet::standard(1)) == "{1|2}:labels=1,1");

    for (const auto& x : enumerate_pq(3, 0)) {
        const auto image = splitting_map(x);
        CHECK(image.base == x.base);
        CHECK(image.labels == x.labels);
    }

    std::set<GeneralLabeledPartition> images;
    for (const auto& x : enumerate_pq(2, 1)) images.insert(splitting_map(x));
    CHECK(images.size() == 3);

    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; q <= 5; ++q) {
            std::set<GeneralLabeledPartition> image;
            std::size_t domain = 0;
            for (unsigned mask = 0; mask < (1u << q); ++mask) {
                std::vector<int> labels;
                for (int k = 0; k < q; ++k)
                    if (mask & (1u << k)) labels.push_back(k + 1);
                if (static_cast<int>(labels.size()) > p) continue;
                for (const auto& x : enumerate_p_labels(p, labels)) {
                    image.insert(splitting_map(x));
                    ++domain;
                }
            }
            CHECK(image.size() == domain);
            const auto general = enumerate_general(p, LabelAlphabet::standard(q));
            CHECK(image == std::set<GeneralLabeledPartition>(general.begin(), general.end()));
        }
    }
}

TEST_CASE("induced splitting character equals the general permutation character") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            CHECK(induced_splitting_bicharacter(p, q) == permutation_bicharacter(p, q, BicharacterSource::General));
}

TEST_CASE("text and JSON forms") {
    const LabelAlphabet alphabet = LabelAlphabet::standard(2);
    for (int p = 0; p <= 3; ++p) {
        for (const auto& x : enumerate_general(p, alphabet)) {
            CHECK(parse_general_labeled(format_labeled(x, alphabet), alphabet) == x);
            CHECK(general_labeled_from_json(labeled_to_json(x, alphabet), alphabet) == x);
        }
        for (int q = 0; q <= p; ++q) {
            for (const auto& x : enumerate_pq(p, q)) {
                CHECK(parse_q_labeled(format_labeled(x)) == x);
                CHECK(q_labeled_from_json(labeled_to_json(x)) == x);
            }
        }
    }
    CHECK(format_labeled(parse_q_labeled("{3|1,2}:labels=*,2")) == "{1,2|3}:labels=2,*");
    CHECK(labeled_to_json(parse_q_labeled("{1,2|3}:labels=2,*")).dump() ==
          R"([{"part":[1,2],"label":"2"},{"part":[3],"label":"*"}])");
    CHECK_THROWS_AS(parse_q_labeled("{1,2|2}"), Error);
    CHECK_THROWS_AS(parse_q_labeled("{1|2}:labels=1,1"), Error);
    CHECK_THROWS_AS(parse_q_labeled("1,2"), Error);
    CHECK_THROWS_AS(parse_general_labeled("{1,2}:labels=1", alphabet), Error);
}
