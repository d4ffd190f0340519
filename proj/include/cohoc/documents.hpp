#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cohoc/morphism.hpp"

namespace cohoc {

// Line-oriented document formats ('#' comments and blank lines ignored):
//
//   presentation              |   morphism
//   characteristic 2          |   source fixtures:s9_G
//   generator b_1_0 1         |   target ring_U.pres
//   relation b_1_0*b_3_0+...  |   image b_1_0 = b_1_0
//
// Paths ending in ".json" use the equivalent structured serialization.
// Expressions use the algebra-core grammar in both shapes.

struct PresentationDocument {
    uint32_t characteristic = 0;
    std::vector<GeneratorInfo> generators;
    std::vector<std::string> relations;
};

struct MorphismDocument {
    std::string source_ref;
    std::string target_ref;
    std::vector<std::pair<std::string, std::string>> images; // generator, expression
};

enum class DocumentKind { presentation, morphism };
DocumentKind peek_document_kind(const std::string& path);

PresentationDocument load_presentation_document(const std::string& path);
MorphismDocument load_morphism_document(const std::string& path);
void save_document(const PresentationDocument& doc, const std::string& path);
void save_document(const MorphismDocument& doc, const std::string& path);

PresentationDocument to_document(const Presentation& ring);
Presentation from_document(const PresentationDocument& doc);

// Resolves "fixtures:NAME" pseudo-paths against the embedded corpus and
// ordinary paths against the filesystem; owns what it loads, so returned
// references and morphism endpoint pointers stay valid for its lifetime.
class DocumentStore {
  public:
    const Presentation& presentation(const std::string& ref);
    RingMorphism morphism(const std::string& ref);

  private:
    std::map<std::string, std::unique_ptr<Presentation>> loaded_;
};

void write_report_file(const nlohmann::json& report, const std::string& path);

} // namespace cohoc
