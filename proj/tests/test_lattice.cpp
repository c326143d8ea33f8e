#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toricc/errors.hpp"
#include "toricc/intmatrix.hpp"
#include "toricc/polytope.hpp"

using namespace toricc;
using namespace toricc::fixtures;

static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

static void check_smith_contract(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(s.u.det()) == 1);
    CHECK(abs(s.v.det()) == 1);
    int nmin = std::min(a.rows(), a.cols());
    for (int i = 0; i < nmin; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        if (i + 1 < nmin && s.d.at(i, i) != 0)
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        if (i + 1 < nmin && s.d.at(i, i) == 0) CHECK(s.d.at(i + 1, i + 1) == 0);
    }
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

TEST_CASE("smith normal form on the identity") {
    IntMatrix id = IntMatrix::identity(2);
    SmithResult s = smith_normal_form(id);
    CHECK(s.d == id);
    CHECK(s.u == id);
    CHECK(s.v == id);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
    IntMatrix a = from_rows({{2, 4}, {6, 8}});
    SmithResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    check_smith_contract(a);
}

TEST_CASE("smith normal form of a zero row") {
    IntMatrix a = from_rows({{0, 0}});
    SmithResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == 0);
    CHECK(s.d.at(0, 1) == 0);
}

TEST_CASE("smith normal form randomized contract") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        check_smith_contract(a);
    }
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    // Kernel of (2 4): generated by (2,-1), primitive.
    IntMatrix a = from_rows({{2, 4}});
    auto k = integer_kernel(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * 2 + k[0][1] * 4 == 0);
    Int g = boost::multiprecision::gcd(k[0][0], k[0][1]);
    CHECK(abs(g) == 1);
}

TEST_CASE("fan validation accepts the standard fans") {
    CHECK(validate_fan(*p1()).empty());
    CHECK(validate_fan(*p2()).empty());
    CHECK(validate_fan(*p3()).empty());
    CHECK(validate_fan(*p1xp1()).empty());
    CHECK(validate_fan(*hirzebruch1()).empty());
    CHECK(validate_fan(*point_fan()).empty());
}

TEST_CASE("fan validation flags a non-primitive ray") {
    Fan bad(1, {{Int(2)}, {Int(-1)}}, {{}, {0}, {1}});
    auto report = validate_fan(bad);
    REQUIRE(!report.empty());
    CHECK(report.front().find("ray 0 not primitive") != std::string::npos);
}

TEST_CASE("fan validation flags a missing face") {
    Fan bad(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}, {{}, {0, 1}});
    auto report = validate_fan(bad);
    bool found = false;
    for (const auto& r : report) found = found || r.find("missing") != std::string::npos;
    CHECK(found);
}

TEST_CASE("fan validation flags overlapping cones") {
    // cone{0,1} and cone{2,3} overlap: (1,1) is interior to the first and a
    // generator of the second. Their intersection is not a common face.
    std::vector<RayVec> rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)},
                                {Int(-1), Int(0)}};
    Fan bad = Fan::from_maximal(2, std::move(rays), {{0, 1}, {2, 3}});
    auto report = validate_fan(bad);
    bool found = false;
    for (const auto& r : report)
        found = found || r.find("intersection not a face") != std::string::npos;
    CHECK(found);
}

TEST_CASE("smoothness and completeness of the standard fans") {
    CHECK(is_smooth(*p2()));
    CHECK(is_complete(*p2()));
    CHECK(is_smooth(*p3()));
    CHECK(is_complete(*p3()));
    CHECK(is_smooth(*hirzebruch1()));
    CHECK(is_complete(*hirzebruch1()));
    CHECK(is_complete(*point_fan()));

    // Singular quadric cone: rays (1,0),(1,2) span index 2.
    Fan quad = Fan::from_maximal(2, {{Int(1), Int(0)}, {Int(1), Int(2)}}, {{0, 1}});
    CHECK(!is_smooth(quad));

    // Affine plane: one maximal cone, not complete.
    Fan affine = Fan::from_maximal(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}, {{0, 1}});
    CHECK(is_smooth(affine));
    CHECK(!is_complete(affine));
}

TEST_CASE("is_smooth rejects an invalid fan") {
    Fan bad(1, {{Int(2)}}, {{}, {0}});
    CHECK_THROWS_AS(is_smooth(bad), precondition_error);
}

TEST_CASE("star of the zero cone is the fan itself") {
    FanPtr fan = p2();
    StarData s = star_fan(fan, fan->zero_cone());
    CHECK(s.quotient->same_as(*fan));
    for (ConeId id = 0; id < fan->num_cones(); ++id) CHECK(s.ambient_cone[id] == id);
}

TEST_CASE("star of a maximal cone is the point fan") {
    FanPtr fan = p2();
    ConeId max = fan->cones_of_dim(2).front();
    StarData s = star_fan(fan, max);
    CHECK(s.quotient->rank() == 0);
    CHECK(s.quotient->num_cones() == 1);
    CHECK(s.ambient_cone[0] == max);
}

TEST_CASE("star of a ray of P2 is the fan of P1") {
    FanPtr fan = p2();
    ConeId rho = *fan->find_cone({0}); // ray e_1
    StarData s = star_fan(fan, rho);
    CHECK(s.quotient->rank() == 1);
    CHECK(s.quotient->num_rays() == 2);
    // The two quotient rays must be +1 and -1 up to ordering.
    std::vector<Int> vals = {s.quotient->ray(0)[0], s.quotient->ray(1)[0]};
    std::sort(vals.begin(), vals.end());
    CHECK(vals[0] == -1);
    CHECK(vals[1] == 1);
    CHECK(is_complete(*s.quotient));
}

TEST_CASE("star composition: cone maps compose") {
    FanPtr fan = p3();
    ConeId rho = *fan->find_cone({0});
    StarData s1 = star_fan(fan, rho);

    ConeId tau = *fan->find_cone({0, 1});
    StarData s_direct = star_fan(fan, tau);

    // tau corresponds to a ray of the first quotient fan.
    ConeId tau_in_q = -1;
    for (ConeId q = 0; q < s1.quotient->num_cones(); ++q)
        if (s1.ambient_cone[q] == tau) tau_in_q = q;
    REQUIRE(tau_in_q >= 0);
    StarData s2 = star_fan(s1.quotient, tau_in_q);

    // Composed ambient images = direct star's ambient images, as sets.
    std::set<ConeId> composed, direct;
    for (ConeId q = 0; q < s2.quotient->num_cones(); ++q)
        composed.insert(s1.ambient_cone[s2.ambient_cone[q]]);
    for (ConeId q = 0; q < s_direct.quotient->num_cones(); ++q)
        direct.insert(s_direct.ambient_cone[q]);
    CHECK(composed == direct);
    CHECK(s2.quotient->num_cones() == s_direct.quotient->num_cones());
    CHECK(s2.quotient->rank() == s_direct.quotient->rank());
}

TEST_CASE("fan products") {
    FanPtr prod = p1xp1();
    CHECK(prod->rank() == 2);
    CHECK(prod->num_rays() == 4);
    CHECK(prod->cones_of_dim(2).size() == 4);
    CHECK(is_smooth(*prod));
    CHECK(is_complete(*prod));

    FanPtr with_point = fan_product(p2(), point_fan());
    CHECK(with_point->same_as(*p2()));

    FanPtr p1xp2 = fan_product(p1(), p2());
    CHECK(p1xp2->rank() == 3);
    CHECK(p1xp2->cones_of_dim(3).size() == 6);
    CHECK(is_smooth(*p1xp2));
    CHECK(is_complete(*p1xp2));
}

TEST_CASE("product smoothness factors") {
    Fan quad = Fan::from_maximal(2, {{Int(1), Int(0)}, {Int(1), Int(2)}, {Int(-1), Int(0)},
                                     {Int(0), Int(-1)}},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto quad_ptr = std::make_shared<Fan>(std::move(quad));
    CHECK(!is_smooth(*quad_ptr));
    CHECK(is_smooth(*fan_product(p1(), p1())));
    CHECK(!is_smooth(*fan_product(p1(), quad_ptr)));
}

// Equality of fans up to relabeling rays by their vectors.
static bool same_fan_up_to_ray_order(const Fan& a, const Fan& b) {
    if (a.rank() != b.rank() || a.num_rays() != b.num_rays() ||
        a.num_cones() != b.num_cones())
        return false;
    std::vector<int> to_b(a.num_rays(), -1);
    for (int i = 0; i < a.num_rays(); ++i) {
        for (int j = 0; j < b.num_rays(); ++j)
            if (a.ray(i) == b.ray(j)) to_b[i] = j;
        if (to_b[i] < 0) return false;
    }
    for (ConeId c = 0; c < a.num_cones(); ++c) {
        std::vector<int> mapped;
        for (int r : a.cone(c).rays) mapped.push_back(to_b[r]);
        if (!b.find_cone(mapped)) return false;
    }
    return true;
}

TEST_CASE("normal fan of the unit simplex is P2") {
    auto nf = normal_fan(simplex2());
    CHECK(same_fan_up_to_ray_order(*nf.fan, *p2()));
    // Offsets: a = 0 for the coordinate facets, 1 for the diagonal.
    std::multiset<Rat> offsets(nf.coeffs.begin(), nf.coeffs.end());
    CHECK(offsets == std::multiset<Rat>{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("normal fan of the unit square is P1xP1") {
    auto nf = normal_fan(unit_square());
    CHECK(is_smooth(*nf.fan));
    CHECK(is_complete(*nf.fan));
    CHECK(nf.fan->num_rays() == 4);
    CHECK(nf.fan->cones_of_dim(2).size() == 4);
}

TEST_CASE("normal fan of a segment") {
    auto nf = normal_fan(segment(3));
    CHECK(nf.fan->num_rays() == 2);
    CHECK(is_complete(*nf.fan));
    std::multiset<Rat> offsets(nf.coeffs.begin(), nf.coeffs.end());
    CHECK(offsets == std::multiset<Rat>{Rat(0), Rat(3)});
}

TEST_CASE("normal fan rejects degenerate input") {
    Polytope flat{2, {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(2), Int(0)}}};
    CHECK_THROWS_AS(normal_fan(flat), precondition_error);
}

TEST_CASE("normal fans of valid polytopes are complete and clean") {
    std::vector<Polytope> ps = {simplex2(), dilate(simplex2(), 3), unit_square(),
                                rectangle(2, 3), unit_cube(), segment(5)};
    for (const auto& p : ps) {
        auto nf = normal_fan(p);
        CHECK(validate_fan(*nf.fan).empty());
        CHECK(is_complete(*nf.fan));
    }
}

TEST_CASE("polytope validation rejects a non-vertex point") {
    Polytope bad{2,
                 {{Int(0), Int(0)}, {Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(0)}}};
    CHECK_THROWS_AS(validate_polytope(bad), precondition_error);
}

TEST_CASE("lattice point counts") {
    CHECK(enumerate_lattice_points(simplex2()).count == 3);
    CHECK(enumerate_lattice_points(dilate(simplex2(), 2)).count == 6);
    CHECK(enumerate_lattice_points(unit_cube()).count == 8);
    CHECK(enumerate_lattice_points(unit_square()).count == 4);
    CHECK(enumerate_lattice_points(rectangle(2, 3)).count == 12);
}

TEST_CASE("lattice enumeration guard") {
    Polytope big{2, {{Int(0), Int(0)}, {Int(100000), Int(0)}, {Int(0), Int(100000)}}};
    CHECK_THROWS_AS(enumerate_lattice_points(big), precondition_error);
}

TEST_CASE("dilation counts fit a polynomial of degree rank") {
    // (rank+1)-st finite difference of k -> #(kP ∩ Z^n) vanishes.
    std::vector<Polytope> ps = {simplex2(), unit_square(), rectangle(2, 3), unit_cube()};
    for (const auto& p : ps) {
        int n = p.rank;
        std::vector<Rat> counts;
        for (int k = 1; k <= n + 2; ++k)
            counts.emplace_back(enumerate_lattice_points(dilate(p, k)).count);
        for (int step = 0; step <= n; ++step)
            for (size_t i = 0; i + 1 < counts.size(); ++i) counts[i] = counts[i + 1] - counts[i];
        CHECK(counts.front() == 0);
    }
}

TEST_CASE("fan product associativity up to ray reordering") {
    FanPtr a = p1(), b = p1(), c = p2();
    FanPtr left = fan_product(fan_product(a, b), c);
    FanPtr right = fan_product(a, fan_product(b, c));
    CHECK(left->same_as(*right)); // block embedding keeps ray order aligned
}
