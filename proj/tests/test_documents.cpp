#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "cohoc/documents.hpp"
#include "cohoc/fixtures.hpp"
#include "cohoc/parser.hpp"

using namespace cohoc;

namespace {

// Fresh scratch directory per test run; removed on destruction.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cohoc-test-" + std::to_string(std::random_device{}()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
    void write(const std::string& name, const std::string& text) const {
        std::ofstream out(file(name));
        out << text;
    }
};

} // namespace

TEST_CASE("presentation documents round-trip through text and JSON") {
    const Presentation& G = fixtures::s9_G();
    PresentationDocument doc = to_document(G);
    CHECK(doc.characteristic == 2);
    CHECK(doc.generators.size() == 8);
    CHECK(doc.relations.size() == 10);

    TempDir tmp;
    for (const char* name : {"g.pres", "g.json"}) {
        save_document(doc, tmp.file(name));
        CHECK(peek_document_kind(tmp.file(name)) == DocumentKind::presentation);
        PresentationDocument loaded = load_presentation_document(tmp.file(name));
        CHECK(loaded.characteristic == doc.characteristic);
        REQUIRE(loaded.generators.size() == doc.generators.size());
        for (size_t i = 0; i < doc.generators.size(); ++i) {
            CHECK(loaded.generators[i].name == doc.generators[i].name);
            CHECK(loaded.generators[i].degree == doc.generators[i].degree);
        }
        CHECK(loaded.relations == doc.relations);

        Presentation rebuilt = from_document(loaded);
        CHECK(rebuilt.ngens() == G.ngens());
        REQUIRE(rebuilt.relations.size() == G.relations.size());
        for (size_t i = 0; i < G.relations.size(); ++i)
            CHECK(poly_equal(rebuilt.relations[i], G.relations[i]));
    }
}

TEST_CASE("morphism documents load against their referenced rings") {
    TempDir tmp;
    tmp.write("a.pres", "presentation\ncharacteristic 2\ngenerator u 2\n");
    tmp.write("b.pres",
              "# one variable\npresentation\ncharacteristic 2\ngenerator x 1\n");
    tmp.write("m.mor",
              "morphism\nsource a.pres\ntarget b.pres\nimage u = x^2\n");

    CHECK(peek_document_kind(tmp.file("m.mor")) == DocumentKind::morphism);
    MorphismDocument doc = load_morphism_document(tmp.file("m.mor"));
    CHECK(doc.source_ref == "a.pres");
    CHECK(doc.images.size() == 1);

    DocumentStore store;
    RingMorphism m = store.morphism(tmp.file("m.mor"));
    CHECK(m.source->ngens() == 1);
    CHECK(m.target->ngens() == 1);
    CHECK(validate_morphism(m));
    CHECK(print_element(m.images[0], *m.target) == "x^2");

    // Round-trip the document itself.
    save_document(doc, tmp.file("m2.mor"));
    MorphismDocument again = load_morphism_document(tmp.file("m2.mor"));
    CHECK(again.source_ref == doc.source_ref);
    CHECK(again.target_ref == doc.target_ref);
    CHECK(again.images == doc.images);
    save_document(doc, tmp.file("m.json"));
    MorphismDocument viajson = load_morphism_document(tmp.file("m.json"));
    CHECK(viajson.images == doc.images);
}

TEST_CASE("morphism documents may reference fixtures") {
    TempDir tmp;
    std::string text = "morphism\nsource fixtures:s9_G\ntarget fixtures:s9_U\n";
    const Presentation& G = fixtures::s9_G();
    const RingMorphism& u = fixtures::res_G_to_U();
    for (size_t i = 0; i < G.ngens(); ++i)
        text += "image " + G.gens[i].name + " = " +
                print_element(u.images[i], fixtures::s9_U()) + "\n";
    tmp.write("res.mor", text);

    DocumentStore store;
    RingMorphism m = store.morphism(tmp.file("res.mor"));
    CHECK(m.source == &G);
    CHECK(m.target == &fixtures::s9_U());
    CHECK_FALSE(m.validated); // file-loaded morphisms start unvalidated
    CHECK_FALSE(validate_morphism(m));
    CHECK(m.first_failing_relation == 1);
}

TEST_CASE("schema errors carry line numbers") {
    TempDir tmp;

    tmp.write("nochar.pres", "presentation\ngenerator x 1\n");
    CHECK_THROWS_AS(load_presentation_document(tmp.file("nochar.pres")), SchemaError);

    tmp.write("badgen.pres", "presentation\ncharacteristic 2\ngenerator x\n");
    try {
        load_presentation_document(tmp.file("badgen.pres"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.line == 3);
    }

    tmp.write("badkey.pres", "presentation\ncharacteristic 2\nrelations x^2\n");
    try {
        load_presentation_document(tmp.file("badkey.pres"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.line == 3);
    }

    tmp.write("badint.pres", "presentation\ncharacteristic two\n");
    CHECK_THROWS_AS(load_presentation_document(tmp.file("badint.pres")), SchemaError);

    tmp.write("noimg.mor", "morphism\nsource fixtures:s9_G\ntarget fixtures:s9_U\n");
    DocumentStore store;
    CHECK_THROWS_AS(store.morphism(tmp.file("noimg.mor")), SchemaError);

    tmp.write("what.doc", "paragraph\n");
    CHECK_THROWS_AS(peek_document_kind(tmp.file("what.doc")), SchemaError);

    CHECK_THROWS_AS(load_presentation_document(tmp.file("missing.pres")), IoError);
}

TEST_CASE("invalid algebra inside a well-formed document still fails") {
    TempDir tmp;
    tmp.write("nonprime.pres", "presentation\ncharacteristic 6\ngenerator x 1\n");
    PresentationDocument doc = load_presentation_document(tmp.file("nonprime.pres"));
    CHECK_THROWS_AS(from_document(doc), NonPrimeCharacteristic);

    tmp.write("badrel.pres",
              "presentation\ncharacteristic 2\ngenerator x 1\nrelation x+q\n");
    PresentationDocument doc2 = load_presentation_document(tmp.file("badrel.pres"));
    CHECK_THROWS_AS(from_document(doc2), UnknownGenerator);
}

TEST_CASE("the store resolves fixture pseudo-paths") {
    DocumentStore store;
    const Presentation& G = store.presentation("fixtures:s9_G");
    CHECK(&G == &fixtures::s9_G());
    RingMorphism m = store.morphism("fixtures:res_G_to_U");
    CHECK(m.target == &fixtures::s9_U());
    CHECK_THROWS_AS(store.presentation("fixtures:nope"), IoError);
    CHECK_THROWS_AS(store.morphism("fixtures:nope"), IoError);
}

TEST_CASE("report files are valid JSON") {
    TempDir tmp;
    nlohmann::json report = {{"command", "dim"}, {"dimension", 4}};
    write_report_file(report, tmp.file("r.json"));
    std::ifstream in(tmp.file("r.json"));
    nlohmann::json back = nlohmann::json::parse(in);
    CHECK(back == report);
}
