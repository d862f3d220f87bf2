#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "permlab/corpus.hpp"

using namespace permlab;
using namespace permlab::testing;

namespace {

std::string tmp_path(const std::string& name) { return "/tmp/permlab_test_" + name; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("bundle save/load round trip is byte identical") {
    for (const auto& e : builtin_corpus()) {
        Json j = bundle_to_json(e.bundle);
        std::string path = tmp_path(e.name + ".json");
        save_bundle_json(j, path);
        AnyBundle loaded = load_bundle(path);
        REQUIRE(loaded.is_q());
        Json again = bundle_to_json(*loaded.q);
        CHECK(j.dump(2) == again.dump(2));
        std::remove(path.c_str());
    }
}

TEST_CASE("loading the worked bialgebra bundle resolves every slot") {
    const auto corpus = builtin_corpus();
    const CorpusEntry* e226 = nullptr;
    for (const auto& e : corpus)
        if (e.name == "example-2-26") e226 = &e;
    REQUIRE(e226 != nullptr);
    std::string path = tmp_path("e226.json");
    save_bundle_json(bundle_to_json(e226->bundle), path);
    AnyBundle loaded = load_bundle(path);
    REQUIRE(loaded.is_q());
    const QBundle& b = *loaded.q;
    CHECK(b.spaces.count("g"));
    CHECK(b.algebras.count("product"));
    CHECK(b.coalgebras.count("cop"));
    CHECK(b.maps.count("N"));
    CHECK(b.maps.count("S"));
    CHECK(b.ctx->vars == std::vector<std::string>{"k1", "k2", "k3", "k4"});
    // identity checks work against the loaded copy
    auto bc = bind_bundle(b, {});
    CHECK(identity::check_builtin(identity::IdentityId::NIJ, bc.ctx).ok());
    std::remove(path.c_str());
}

TEST_CASE("schema errors carry a location") {
    std::string path = tmp_path("bad.json");

    write_file(path, "");
    CHECK_THROWS_AS(load_bundle(path), SchemaError);

    write_file(path, "{\"field\":\"Q\"}");
    CHECK_THROWS_AS(load_bundle(path), SchemaError);  // missing spaces

    // tensor over an unknown space is named in the error
    write_file(path, R"({"field":"Q","spaces":{"g":["e1","e2"]},
        "tensors":{"r":{"space":"h","entries":[]}}})");
    try {
        load_bundle(path);
        CHECK(false);
    } catch (const SchemaError& e) {
        CHECK(e.where == "/tensors/r");
    }

    // overlapping rewrite rules are refused at load time
    write_file(path, R"({"field":"Q","parameters":["kappa","lambda","nu"],
        "rewrites":[{"lhs":"kappa^2","rhs":"lambda*nu"},{"lhs":"kappa^3","rhs":"lambda"}],
        "spaces":{"g":["e1","e2"]}})");
    CHECK_THROWS_AS(load_bundle(path), OverlappingRules);

    // bad scalar string
    write_file(path, R"({"field":"Q","spaces":{"g":["e1","e2"]},
        "algebras":{"product":{"space":"g","table":[{"i":"e1","j":"e1","out":{"e1":"1.5"}}]}}})");
    CHECK_THROWS_AS(load_bundle(path), SchemaError);

    // missing file
    CHECK_THROWS_AS(load_bundle(tmp_path("never_written.json")), IoError);

    std::remove(path.c_str());
}

TEST_CASE("finite-field bundles parse and reduce") {
    std::string path = tmp_path("fp.json");
    write_file(path, R"({"field":"Fp","p":7,"spaces":{"g":["e1","e2"]},
        "algebras":{"product":{"space":"g","table":[
            {"i":"e1","j":"e1","out":{"e1":"1"}},
            {"i":"e2","j":"e1","out":{"e2":"8"}}]}}})");
    AnyBundle loaded = load_bundle(path);
    REQUIRE(!loaded.is_q());
    const FpBundle& b = *loaded.fp;
    CHECK(b.p == 7);
    const PermAlgebra<PolyFp>& A = b.algebras.at("product");
    CHECK(A.at(1, 0, 1).constant_value().residue() == 1);  // 8 mod 7
    auto bc = bind_bundle(b, {});
    CHECK(identity::check_builtin(identity::IdentityId::PERM, bc.ctx).ok());
    // characteristic 2 is rejected
    write_file(path, R"({"field":"Fp","p":2,"spaces":{"g":["e1"]}})");
    CHECK_THROWS_AS(load_bundle(path), SchemaError);
    std::remove(path.c_str());
}

TEST_CASE("corpus verification passes and is deterministic") {
    Json first = verify_corpus();
    CHECK(first["ok"].get<bool>());
    Json second = verify_corpus();
    CHECK(first.dump() == second.dump());
}

TEST_CASE("binding falls back to conventional names and reports unknowns") {
    const auto corpus = builtin_corpus();
    const CorpusEntry* e = &corpus.front();
    CHECK_THROWS_AS(bind_bundle(e->bundle, {{"product", "wrongname"}}), UnboundName);
}
