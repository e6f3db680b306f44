#include "doctest.h"

#include <set>

#include "annular/pperm.hpp"
#include "oracles.hpp"

using namespace annular;

namespace {

std::set<std::string> listing(const Shape& s)
{
    std::set<std::string> out;
    for (auto& it : enumerate_ps_nc(s))
        out.insert(it.pp.str());
    return out;
}

std::string pp(const char* v, const char* p)
{
    return PartitionedPermutation(SetPartition::parse(v), Permutation::parse(p)).str();
}

} // namespace

TEST_CASE("PS_NC golden listings")
{
    CHECK(listing(Shape({1, 1})) == std::set<std::string>{pp("{1,2}", "(1,2)"), pp("{1,2}", "(1)(2)")});

    CHECK(listing(Shape({1, 2})) == std::set<std::string>{
                                        pp("{1,2,3}", "(1,2,3)"),
                                        pp("{1,2,3}", "(1,3,2)"),
                                        pp("{1,2|3}", "(1,2)(3)"),
                                        pp("{1,3|2}", "(1,3)(2)"),
                                        pp("{1,2,3}", "(1)(2,3)"),
                                        pp("{1,2|3}", "(1)(2)(3)"),
                                        pp("{1,3|2}", "(1)(2)(3)"),
                                    });

    CHECK(listing(Shape({1, 1, 1})) == std::set<std::string>{
                                           pp("{1,2,3}", "(1,2,3)"),
                                           pp("{1,2,3}", "(1,3,2)"),
                                           pp("{1,2,3}", "(1,2)(3)"),
                                           pp("{1,2,3}", "(1,3)(2)"),
                                           pp("{1,2,3}", "(2,3)(1)"),
                                           pp("{1,2,3}", "(1)(2)(3)"),
                                       });
}

TEST_CASE("PS_NC agrees with the length-additivity oracle")
{
    const std::vector<std::vector<int>> shapes = {{1}, {3}, {1, 1}, {2, 2}, {1, 3}, {2, 3}, {1, 1, 1},
                                                  {1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {2, 2, 2}};
    for (auto& parts : shapes) {
        Shape s(parts);
        CAPTURE(s.str());
        std::vector<oracle::PSPair> got;
        for (auto& it : enumerate_ps_nc(s)) {
            got.push_back({it.pp.v.labels(), it.pp.p.images()});
            REQUIRE(in_ps_nc(it.pp, s));
        }
        std::sort(got.begin(), got.end());
        auto want = oracle::ps_nc_by_length(s);
        CHECK(got.size() == want.size());
        CHECK((got == want));
    }
}

TEST_CASE("PS_NC items are canonically ordered and distinct")
{
    auto items = enumerate_ps_nc(Shape({2, 2, 2}));
    std::set<std::string> seen;
    for (auto& it : items)
        seen.insert(it.pp.str());
    CHECK(seen.size() == items.size());
    auto again = enumerate_ps_nc(Shape({2, 2, 2}));
    REQUIRE(again.size() == items.size());
    for (std::size_t i = 0; i < items.size(); ++i)
        CHECK(again[i].pp == items[i].pp);
}

TEST_CASE("partitioned permutation length and order")
{
    PartitionedPermutation a(SetPartition::parse("{1,2|3}"), Permutation::parse("(1)(2)(3)"));
    CHECK(a.length() == 2);
    CHECK(pp_length(a) == 2);
    PartitionedPermutation top(SetPartition::one(3), Permutation::parse("(1,2,3)"));
    CHECK(top.length() == 2);
    CHECK_THROWS(PartitionedPermutation(SetPartition::parse("{1|2|3}"), Permutation::parse("(1,2)(3)")));

    auto j = a.to_json();
    CHECK(PartitionedPermutation::from_json(j) == a);

    auto g = Shape({3}).gamma();
    CHECK(pp_leq(PartitionedPermutation(SetPartition::zero(3), Permutation::identity(3)),
                 PartitionedPermutation(SetPartition::one(3), g)));
}

TEST_CASE("families partition PS_NC and the pairing families match their closed forms")
{
    for (auto parts : std::vector<std::vector<int>>{{2, 2, 2}, {1, 2, 3}, {2, 2, 4}, {1, 1, 2}, {3, 3, 2}}) {
        Shape s(parts);
        CAPTURE(s.str());
        std::size_t sum = 0;
        for (auto f : {PSFamily::SNC, PSFamily::F11, PSFamily::F211, PSFamily::F111})
            sum += enumerate_family(s, f).size();
        CHECK(sum == enumerate_ps_nc(s).size());
        for (auto f : {PSFamily::NC2_111, PSFamily::NC2_211, PSFamily::NC2_11, PSFamily::NC2_11_2through,
                       PSFamily::NC2_11_t, PSFamily::NC211_111}) {
            CAPTURE(family_name(f));
            auto closed = family_count_closed(s, f);
            REQUIRE(closed.has_value());
            CHECK(*closed == family_count_enumerated(s, f));
            CHECK(family_from_name(family_name(f)) == f);
        }
    }
}
