#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "markov/squared_tree.hpp"
#include "support/fixtures.hpp"

using namespace markov;
using fixtures::lp;

TEST_CASE("equation check") {
    CHECK(check_equation(1, 1, 1));
    CHECK(check_equation(1, 1, fixtures::M2()));
    CHECK(check_equation(1, fixtures::M2(), fixtures::M5()));
    CHECK(!check_equation(1, 1, 2));
    CHECK(!check_equation(1, 2, 5));
}

TEST_CASE("mutation from the initial solution") {
    SquaredTriple ones{1, 1, 1, ""};
    for (int i = 0; i < 3; ++i) {
        SquaredTriple t = mutate(ones, i, true);
        CHECK(t[i] == fixtures::M2());
        CHECK(t[(i + 1) % 3] == LaurentPoly(1));
        CHECK(check_equation(t));
    }
}

TEST_CASE("mutating the middle of the branching root gives M_13") {
    SquaredTriple root{1, fixtures::M2(), fixtures::M5(), ""};
    SquaredTriple t = mutate(root, 1, true);
    CHECK(t[1] == fixtures::M13());
    CHECK(check_equation(t));
    // mutating the minimum gives the other child maximum
    SquaredTriple r = mutate(root, 0, true);
    CHECK(r[0] == fixtures::M29());
}

TEST_CASE("mutation is an involution") {
    SquaredTriple root{1, fixtures::M2(), fixtures::M5(), ""};
    for (int i = 0; i < 3; ++i) {
        SquaredTriple back = mutate(mutate(root, i), i);
        CHECK(back.same_entries(root));
    }
}

TEST_CASE("generation: root chain and first level") {
    std::vector<SquaredTriple> nodes;
    generate(1, [&](const SquaredTriple& t) { nodes.push_back(t); });
    REQUIRE(nodes.size() == 5);
    CHECK(nodes[0].path == "@0");
    CHECK(nodes[0].same_entries({1, 1, 1, ""}));
    CHECK(nodes[1].path == "@1");
    CHECK(nodes[1].z == fixtures::M2());
    CHECK(nodes[2].path == "");
    CHECK(nodes[2].z == fixtures::M5());
    std::map<std::string, LaurentPoly> maxima;
    for (auto& n : nodes) maxima[n.path] = n.z;
    CHECK(maxima.at("L") == fixtures::M13());
    CHECK(maxima.at("R") == fixtures::M29());
}

TEST_CASE("every node to depth 6 is a symmetric positive solution with a unique max") {
    int count = 0;
    std::int64_t prev_len = 0;
    generate(6, [&](const SquaredTriple& t) {
        ++count;
        CHECK(check_equation(t));
        for (int i = 0; i < 3; ++i) {
            CHECK(t[i].is_symmetric());
            CHECK(t[i].is_positive());
        }
        if (t.path == "@0") {
            CHECK(is_degree_singular(t));
        } else if (t.path.rfind("@", 0) != 0) {
            CHECK(!is_degree_singular(t));
            CHECK(max_of(t) == t.z);
        }
        (void)prev_len;
    });
    CHECK(count == 2 + (1 << 7) - 1);
}

TEST_CASE("degree of the maximum strictly increases along edges") {
    std::function<void(const SquaredTriple&, int)> walk = [&](const SquaredTriple& t, int d) {
        if (d == 0) return;
        for (auto child : {left_child(t), right_child(t)}) {
            CHECK(child.z.degree() > t.z.degree());
            walk(child, d - 1);
        }
    };
    walk(node_at(""), 5);
}

TEST_CASE("linear and division mutation forms agree on tree nodes") {
    generate(4, [&](const SquaredTriple& t) {
        if (t.path == "@0") return;  // division by an entry equals the triple itself there
        for (int i = 0; i < 3; ++i) {
            LaurentPoly lin = vieta_linear(t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            LaurentPoly div = vieta_division(t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            CHECK(lin == div);
        }
    });
}

TEST_CASE("node_at follows generation") {
    generate(5, [&](const SquaredTriple& t) {
        SquaredTriple direct = node_at(t.path);
        CHECK(direct.same_entries(t));
    });
    CHECK_THROWS_AS(node_at("LX"), OutOfRange);
}

TEST_CASE("descend accepts tree nodes with their generation path") {
    generate(5, [&](const SquaredTriple& t) {
        auto res = descend(t);
        REQUIRE(res.accepted());
        CHECK(res.path == t.path);
    });
}

TEST_CASE("descend rejections carry the right reason") {
    using Status = DescentResult::Status;
    // zero entry, nonsymmetric companions: checked before symmetry
    CHECK(descend(1, lp(1, {-1}), LaurentPoly{}).status == Status::ZeroEntry);
    CHECK(descend(LaurentPoly{}, LaurentPoly{}, LaurentPoly{}).status == Status::ZeroEntry);
    // nonsymmetric solution without zeros
    CHECK(descend(1, lp(1, {-1}), lp(-1, {-1, -2, -4, -2})).status == Status::NotSymmetric);
    CHECK(descend(1, 1, 2).status == Status::NotASolution);
    CHECK(descend(1, fixtures::M2(), fixtures::M13()).status == Status::NotASolution);
    CHECK(descend(1, fixtures::M2(), fixtures::M5()).accepted());
    CHECK(descend(1, 1, 1).path == "@0");
    CHECK(descend(1, fixtures::M2(), LaurentPoly(1)).path == "@1");
}

TEST_CASE("descend is order-insensitive") {
    SquaredTriple t = node_at("LRL");
    auto res = descend(t.z, t.x, t.y);
    REQUIRE(res.accepted());
    CHECK(res.path == "LRL");
}
