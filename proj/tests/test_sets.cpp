#include "doctest.h"

#include <cmath>

#include "cheb/sets.hpp"

using namespace cheb;

namespace {

bool cyclically_equal(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    if (a.size() != b.size())
        return false;
    const size_t n = a.size();
    for (size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = std::abs(a[(i + shift) % n] - b[i]) <= tol;
        if (ok)
            return true;
    }
    return false;
}

} // namespace

TEST_SUITE("sets") {

TEST_CASE("parse_set: interval union, circle, overlap rejection") {
    auto iu = parse_set(R"({"type":"interval_union","intervals":[[-1,1]]})");
    REQUIRE(iu.is<IntervalUnion>());
    CHECK(iu.get_if<IntervalUnion>()->intervals[0] == std::pair(-1.0, 1.0));

    auto c = parse_set(R"({"type":"circle","center":[0,0],"radius":1})");
    REQUIRE(c.is<Circle>());
    CHECK(c.get_if<Circle>()->radius == 1.0);

    CHECK_THROWS_AS(parse_set(R"({"type":"interval_union","intervals":[[-1,0],[-0.5,1]]})"),
                    ChebError);
    CHECK_THROWS_AS(parse_set(R"({"type":"circle","center":[0,0],"radius":-2})"), ChebError);
    CHECK_THROWS_AS(parse_set("not json"), ChebError);
    CHECK_THROWS_AS(parse_set(R"({"type":"nope"})"), ChebError);
}

TEST_CASE("parse_weight: variants and guards") {
    CHECK(parse_weight(R"({"type":"one"})").is<OneWeight>());
    auto j = parse_weight(R"({"type":"jacobi","alpha":0.5,"beta":0.5})");
    CHECK(j.get_if<JacobiWeight>()->alpha == 0.5);
    CHECK_THROWS_AS(parse_weight(R"({"type":"jacobi","alpha":-1,"beta":0})"), ChebError);

    auto m = parse_weight(R"({"type":"markov","poles":[[0,2],[0,-2]]})");
    CHECK(m.get_if<MarkovWeight>()->poles.size() == 2);
    // pole on [-1,1]
    CHECK_THROWS_AS(parse_weight(R"({"type":"markov","poles":[[0.5,0],[0.5,0]]})"), ChebError);
    // odd finite count without infinity
    CHECK_THROWS_AS(parse_weight(R"({"type":"markov","poles":[[3,0]]})"), ChebError);
    // odd finite count with infinity is the paper's odd case
    auto modd = parse_weight(R"({"type":"markov","poles":[[3,0],"inf"]})");
    CHECK(modd.get_if<MarkovWeight>()->pole_at_infinity);

    auto pz = parse_weight(R"({"type":"power_zeros","base":{"type":"one"},"factors":[[0,0.5]],"M":2})");
    CHECK(pz.is_power_zeros());
    // Jacobi base vanishes at the endpoints: leaves [1/M, M]
    CHECK_THROWS_AS(parse_weight(
        R"({"type":"power_zeros","base":{"type":"jacobi","alpha":1,"beta":0},"factors":[[0,1]],"M":10})"),
        ChebError);
}

TEST_CASE("weight_eval: jacobi and markov examples") {
    auto j = parse_weight(R"({"type":"jacobi","alpha":0.5,"beta":0.5})");
    CHECK(weight_eval(j, 0.0) == doctest::Approx(1.0));
    CHECK(weight_eval(j, 1.0) == doctest::Approx(0.0));
    auto m = parse_weight(R"({"type":"markov","poles":[[0,2],[0,-2]]})");
    CHECK(weight_eval(m, 0.0) == doctest::Approx(1.0)); // prod(1 - 0/a) = 1
    CHECK_THROWS_AS(weight_eval(j, 2.0), ChebError);
    CHECK_THROWS_AS(weight_eval(j, Complex(0.0, 1.0)), ChebError);
}

TEST_CASE("discretize: interval extrema and circle equiangular") {
    auto iu = parse_set(R"({"type":"interval_union","intervals":[[-1,1]]})");
    auto g = discretize(iu, 5);
    REQUIRE(g.points.size() == 5);
    for (int j = 0; j < 5; ++j)
        CHECK(g.points[j].real() == doctest::Approx(-std::cos(M_PI * j / 4.0)).epsilon(1e-14));

    auto c = parse_set(R"({"type":"circle","center":[0,0],"radius":1})");
    auto gc = discretize(c, 4);
    REQUIRE(gc.points.size() == 4);
    CHECK(std::abs(gc.points[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(gc.points[1] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(gc.points[2] - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(gc.points[3] - Complex(0, -1)) < 1e-15);
}

TEST_CASE("discretize: interval union points stay inside the union") {
    auto iu = parse_set(R"({"type":"interval_union","intervals":[[-1,-0.5],[0.25,1]]})");
    auto g = discretize(iu, 200);
    for (auto z : g.points) {
        CHECK(z.imag() == 0.0);
        const double x = z.real();
        const bool inside = (x >= -1.0 && x <= -0.5) || (x >= 0.25 && x <= 1.0);
        CHECK(inside);
    }
}

TEST_CASE("discretize: preimage square roots") {
    auto s = parse_set(R"({"type":"preimage","p":[0,0],"base":{"type":"interval_union","intervals":[[1,1]]}})");
    auto g = discretize(s, 2);
    REQUIRE(g.points.size() == 2);
    CHECK(std::abs(g.points[0] - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(g.points[1] - Complex(1.0)) < 1e-12);
}

TEST_CASE("discretize: lemniscate points satisfy the level equation") {
    auto s = parse_set(R"({"type":"lemniscate","generator":[-1,0],"level":1})");
    auto g = discretize(s, 128);
    CHECK(g.points.size() >= 128);
    for (auto z : g.points) {
        const double lv = std::abs((z * z - 1.0));
        CHECK(std::abs(lv - 1.0) <= 1e-10);
    }
}

TEST_CASE("discretize: sampled curve densification by arclength") {
    std::string doc = R"({"type":"curve_samples","closed":true,"points":[)";
    for (int k = 0; k < 16; ++k) {
        const double t = 2.0 * M_PI * k / 16;
        doc += "[" + std::to_string(std::cos(t)) + "," + std::to_string(std::sin(t)) + "]";
        if (k != 15)
            doc += ",";
    }
    doc += "]}";
    auto s = parse_set(doc);
    auto g = discretize(s, 64);
    CHECK(g.points.size() == 64);
    // interpolated points lie on chords of the polygon, near the circle
    for (auto z : g.points)
        CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("convex_hull: square with interior point, collinear, circle") {
    std::vector<Complex> sq{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, 0}};
    auto h = convex_hull(sq);
    REQUIRE(h.size() == 4);
    CHECK(cyclically_equal(h, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 1e-15));

    auto seg = convex_hull({{-1, 0}, {0, 0}, {1, 0}});
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == Complex(-1, 0));
    CHECK(seg[1] == Complex(1, 0));

    auto c = parse_set(R"({"type":"circle","center":[0,0],"radius":1})");
    auto g = discretize(c, 100);
    auto hc = convex_hull(g.points);
    CHECK(hc.size() == 100);
    CHECK(cyclically_equal(hc, g.points, 1e-12));
}

TEST_CASE("affine_image: intervals, circle, symmetric flip") {
    auto iu = parse_set(R"({"type":"interval_union","intervals":[[-1,1]]})");
    auto img = affine_image(iu, 0.5, 0.5);
    CHECK(img.get_if<IntervalUnion>()->intervals[0].first == doctest::Approx(0.0));
    CHECK(img.get_if<IntervalUnion>()->intervals[0].second == doctest::Approx(1.0));

    auto c = parse_set(R"({"type":"circle","center":[0,0],"radius":1})");
    auto ci = affine_image(c, 2.0, Complex(0, 1));
    CHECK(std::abs(ci.get_if<Circle>()->center - Complex(0, 1)) < 1e-15);
    CHECK(ci.get_if<Circle>()->radius == doctest::Approx(2.0));

    auto flip = affine_image(iu, -1.0, 0.0);
    CHECK(flip.get_if<IntervalUnion>()->intervals[0] == std::pair(-1.0, 1.0));
}

TEST_CASE("affine_image then discretize matches mapped grid") {
    auto iu = parse_set(R"({"type":"interval_union","intervals":[[-1,-0.25],[0.5,1]]})");
    auto img = affine_image(iu, 2.0, 1.0);
    auto g0 = discretize(iu, 96);
    auto g1 = discretize(img, 96);
    REQUIRE(g0.points.size() == g1.points.size());
    for (size_t i = 0; i < g0.points.size(); ++i)
        CHECK(std::abs(g1.points[i] - (2.0 * g0.points[i] + 1.0)) <= 1e-12);
}

TEST_CASE("set round-trips through its document form") {
    for (const char* doc :
         {R"({"type":"interval_union","intervals":[[-1,-0.5],[0.5,1]]})",
          R"({"type":"lemniscate","generator":[[-1,0],[0,0]],"level":1.0})",
          R"({"type":"preimage","p":[[-2,0],[0,0]],"base":{"type":"interval_union","intervals":[[-2,2]]}})"}) {
        auto s = parse_set(doc);
        auto again = parse_set(set_to_json(s));
        CHECK(set_to_json(again) == set_to_json(s));
    }
    for (const char* doc :
         {R"({"type":"jacobi","alpha":1.0,"beta":0.0})",
          R"({"type":"markov","poles":[[3.0,0.0],"inf"]})",
          R"({"type":"power_zeros","base":{"type":"one"},"factors":[[0.0,0.5]],"M":4.0})"}) {
        auto w = parse_weight(doc);
        auto again = parse_weight(weight_to_json(w));
        CHECK(weight_to_json(again) == weight_to_json(w));
    }
}

} // TEST_SUITE
