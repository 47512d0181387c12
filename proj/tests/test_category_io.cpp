#include <doctest.h>

#include "outcat/instances.hpp"
#include "outcat/quotient.hpp"

using namespace outcat;

namespace {

// a tiny valid spec: one object, two endomorphisms {id, s} with s s = id
std::string tiny_spec_json() {
    return R"({
  "compose": [["id", "id", "id"], ["id", "s", "s"], ["s", "id", "s"], ["s", "s", "id"]],
  "homs": [{"morphisms": ["id", "s"], "source": "x", "target": "x"}],
  "identities": {"x": "id"},
  "inner": {"x": ["id", "s"]},
  "objects": ["x"]
})";
}

} // namespace

TEST_CASE("category JSON round trip is byte-stable") {
    auto inst = finite_sets_injections_instance(3);
    std::string text = save_category_json(*inst.spec);
    auto back = load_category_json(text);
    CHECK(save_category_json(*back) == text);
    // loaded spec behaves identically
    auto q1 = quotient(*inst.spec);
    auto q2 = quotient(*back);
    CHECK(q1.class_count() == q2.class_count());
}

TEST_CASE("loading validates the category laws") {
    auto ok = load_category_json(tiny_spec_json());
    CHECK(ok->morphism_count() == 2);
    CHECK(verify_inner_axiom(*ok).empty());
    SUBCASE("missing composite entry") {
        std::string broken = R"({
  "compose": [["id", "id", "id"]],
  "homs": [{"morphisms": ["id", "s"], "source": "x", "target": "x"}],
  "identities": {"x": "id"},
  "inner": {"x": []},
  "objects": ["x"]
})";
        CHECK_THROWS_AS(load_category_json(broken), ValidationError);
    }
    SUBCASE("broken identity law") {
        std::string broken = R"({
  "compose": [["id", "id", "id"], ["id", "s", "id"], ["s", "id", "s"], ["s", "s", "id"]],
  "homs": [{"morphisms": ["id", "s"], "source": "x", "target": "x"}],
  "identities": {"x": "id"},
  "inner": {"x": []},
  "objects": ["x"]
})";
        CHECK_THROWS_AS(load_category_json(broken), ValidationError);
    }
    SUBCASE("non-associative table") {
        // three endomorphisms with a deliberately twisted product
        std::string broken = R"({
  "compose": [["id", "id", "id"], ["id", "a", "a"], ["id", "b", "b"],
              ["a", "id", "a"], ["b", "id", "b"],
              ["a", "a", "b"], ["a", "b", "id"], ["b", "a", "a"], ["b", "b", "a"]],
  "homs": [{"morphisms": ["id", "a", "b"], "source": "x", "target": "x"}],
  "identities": {"x": "id"},
  "inner": {"x": []},
  "objects": ["x"]
})";
        CHECK_THROWS_AS(load_category_json(broken), ValidationError);
    }
    SUBCASE("unknown morphism reference") {
        std::string broken = R"({
  "compose": [["id", "id", "ghost"]],
  "homs": [{"morphisms": ["id"], "source": "x", "target": "x"}],
  "identities": {"x": "id"},
  "inner": {"x": []},
  "objects": ["x"]
})";
        CHECK_THROWS_AS(load_category_json(broken), ValidationError);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(load_category_json("pfff"), ValidationError);
    }
}

TEST_CASE("duplicate names are rejected") {
    FiniteCategorySpec::Builder b;
    b.add_object("x");
    CHECK_THROWS_AS(b.add_object("x"), ValidationError);
    FiniteCategorySpec::Builder b2;
    ObjId o = b2.add_object("x");
    b2.add_morphism("f", o, o);
    CHECK_THROWS_AS(b2.add_morphism("f", o, o), ValidationError);
}
