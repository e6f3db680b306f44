#include "doctest.h"

#include "annular/verify.hpp"

using namespace annular;

TEST_CASE("compositions")
{
    auto c = compositions(3, 3, 4);
    CHECK(c.size() == 4); // (1,1,1) and the three arrangements of (1,1,2)
    CHECK(compositions(3, 3, 6, true).size() == 3 + 10);
    for (auto& s : compositions(2, 2, 8, true))
        CHECK(s.m() % 2 == 0);
}

TEST_CASE("identity suite at a reduced bound")
{
    auto rep = verify_identities(12, 8);
    CAPTURE(rep.text());
    CHECK(rep.ok());
    CHECK(rep.checks.size() == 10);
    CHECK(rep.to_json()["suite"] == "identities");
}

TEST_CASE("parity suite")
{
    auto rep = verify_parity(8, 200, 3);
    CAPTURE(rep.text());
    CHECK(rep.ok());
    for (auto& c : rep.checks)
        CHECK(c.cases > 0);
}

TEST_CASE("oracle suite")
{
    auto rep = verify_oracle(7);
    CAPTURE(rep.text());
    CHECK(rep.ok());
}
