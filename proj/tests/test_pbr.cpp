#include <doctest.h>

#include "ontic/errors.hpp"
#include "ontic/pbr.hpp"

using namespace ontic;

TEST_CASE("fixture basis is orthonormal and excludes each product") {
    const auto& m = pbr_fixture_measurement();
    REQUIRE(m.effects().size() == 4);
    StateVector z = ket_zero(), p = ket_plus();
    const StateVector products[] = {tensor(z, z), tensor(z, p), tensor(p, z), tensor(p, p)};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& xi = m.effects()[k].range.at(0);
        CHECK(xi.is_exact());
        CHECK(inner_product(xi, products[k]).is_zero());
        for (std::size_t j = 0; j < 4; ++j) {
            Amplitude ip = inner_product(xi, m.effects()[j].range.at(0));
            CHECK(ip == Amplitude(j == k ? 1 : 0));
        }
    }
}

TEST_CASE("|0>, |+> with the fixture measurement is contradictory") {
    TheoremReport r = pbr_check(ket_zero(), ket_plus(), pbr_fixture_measurement());
    CHECK(r.theorem == "PBR");
    CHECK(r.status == "contradiction");
    CHECK(r.expected);
    CHECK(r.zero_conditions.size() == 4);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.front().tag == "non-orthogonal-preparations");
    CHECK(r.trace[r.trace.size() - 2].tag == "response-normalization");
    CHECK(r.trace.back().tag == "conclusion");
}

TEST_CASE("a product basis cannot antidistinguish") {
    TheoremReport r = pbr_check(ket_zero(), ket_plus(), product_basis_measurement());
    CHECK(r.status == "inconclusive");
}

TEST_CASE("identical states give nothing to exclude") {
    TheoremReport r = pbr_check(ket_plus(), ket_plus(), pbr_fixture_measurement());
    CHECK(r.status == "inconclusive");
}

TEST_CASE("bad inputs") {
    StateVector one = StateVector::basis(qubit_space(), "1");
    CHECK_THROWS_AS(pbr_check(ket_zero(), one, pbr_fixture_measurement()), PreconditionError);
    Space other{"a", "b"};
    CHECK_THROWS_AS(pbr_check(ket_zero(), StateVector(other, {1, 0}), pbr_fixture_measurement()), SpaceMismatch);
}
