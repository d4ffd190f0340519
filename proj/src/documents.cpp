#include "cohoc/documents.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cohoc/errors.hpp"
#include "cohoc/fixtures.hpp"
#include "cohoc/parser.hpp"

namespace cohoc {

namespace {

constexpr const char* kFixturePrefix = "fixtures:";

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Significant lines of a text document with their 1-based numbers.
std::vector<std::pair<int, std::string>> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        lines.emplace_back(no, line);
    }
    return lines;
}

// Splits "keyword rest" at the first whitespace run.
std::pair<std::string, std::string> keyword_of(const std::string& line) {
    size_t sp = line.find_first_of(" \t");
    if (sp == std::string::npos) return {line, ""};
    return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

int64_t parse_int(const std::string& text, int line) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw SchemaError("expected an integer, got \"" + text + "\"", line);
    }
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(e.what(), 0);
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path);
}

std::string json_kind(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("document has no \"kind\" field", 0);
    return j["kind"].get<std::string>();
}

// Plain refs inside a morphism document resolve relative to the document.
std::string resolve_ref(const std::string& ref, const std::string& doc_path) {
    if (ref.starts_with(kFixturePrefix)) return ref;
    std::filesystem::path p(ref);
    if (p.is_absolute()) return ref;
    return (std::filesystem::path(doc_path).parent_path() / p).string();
}

} // namespace

DocumentKind peek_document_kind(const std::string& path) {
    if (is_json_path(path)) {
        std::string kind = json_kind(load_json(path));
        if (kind == "presentation") return DocumentKind::presentation;
        if (kind == "morphism") return DocumentKind::morphism;
        throw SchemaError("unknown document kind \"" + kind + "\"", 0);
    }
    auto lines = read_lines(path);
    if (lines.empty()) throw SchemaError("empty document", 0);
    const auto& [no, first] = lines.front();
    if (first == "presentation") return DocumentKind::presentation;
    if (first == "morphism") return DocumentKind::morphism;
    throw SchemaError("expected \"presentation\" or \"morphism\", got \"" + first + "\"", no);
}

PresentationDocument load_presentation_document(const std::string& path) {
    PresentationDocument doc;
    if (is_json_path(path)) {
        nlohmann::json j = load_json(path);
        if (json_kind(j) != "presentation")
            throw SchemaError("expected a presentation document", 0);
        if (!j.contains("characteristic") || !j["characteristic"].is_number_unsigned())
            throw SchemaError("missing characteristic", 0);
        doc.characteristic = j["characteristic"].get<uint32_t>();
        for (const auto& g : j.value("generators", nlohmann::json::array())) {
            if (!g.is_object() || !g.contains("name") || !g.contains("degree"))
                throw SchemaError("generator entries need name and degree", 0);
            doc.generators.push_back(
                {g["name"].get<std::string>(), g["degree"].get<int64_t>()});
        }
        for (const auto& r : j.value("relations", nlohmann::json::array()))
            doc.relations.push_back(r.get<std::string>());
        return doc;
    }

    auto lines = read_lines(path);
    if (lines.empty() || lines.front().second != "presentation")
        throw SchemaError("expected a presentation document", lines.empty() ? 0 : lines.front().first);
    bool have_char = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto [keyword, rest] = keyword_of(line);
        if (keyword == "characteristic") {
            if (have_char) throw SchemaError("characteristic given twice", no);
            int64_t p = parse_int(rest, no);
            if (p < 2 || p > 0xFFFFFFFFLL) throw SchemaError("characteristic out of range", no);
            doc.characteristic = static_cast<uint32_t>(p);
            have_char = true;
        } else if (keyword == "generator") {
            auto [name, degree_text] = keyword_of(rest);
            if (name.empty() || degree_text.empty())
                throw SchemaError("generator lines read: generator NAME DEGREE", no);
            doc.generators.push_back({name, parse_int(degree_text, no)});
        } else if (keyword == "relation") {
            if (rest.empty()) throw SchemaError("empty relation", no);
            doc.relations.push_back(rest);
        } else {
            throw SchemaError("unknown keyword \"" + keyword + "\"", no);
        }
    }
    if (!have_char) throw SchemaError("missing characteristic", 0);
    return doc;
}

MorphismDocument load_morphism_document(const std::string& path) {
    MorphismDocument doc;
    if (is_json_path(path)) {
        nlohmann::json j = load_json(path);
        if (json_kind(j) != "morphism") throw SchemaError("expected a morphism document", 0);
        if (!j.contains("source") || !j.contains("target"))
            throw SchemaError("morphism documents need source and target", 0);
        doc.source_ref = j["source"].get<std::string>();
        doc.target_ref = j["target"].get<std::string>();
        for (const auto& im : j.value("images", nlohmann::json::array())) {
            if (!im.is_object() || !im.contains("generator") || !im.contains("expression"))
                throw SchemaError("image entries need generator and expression", 0);
            doc.images.emplace_back(im["generator"].get<std::string>(),
                                    im["expression"].get<std::string>());
        }
        return doc;
    }

    auto lines = read_lines(path);
    if (lines.empty() || lines.front().second != "morphism")
        throw SchemaError("expected a morphism document", lines.empty() ? 0 : lines.front().first);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto [keyword, rest] = keyword_of(line);
        if (keyword == "source") {
            if (!doc.source_ref.empty()) throw SchemaError("source given twice", no);
            if (rest.empty()) throw SchemaError("empty source reference", no);
            doc.source_ref = rest;
        } else if (keyword == "target") {
            if (!doc.target_ref.empty()) throw SchemaError("target given twice", no);
            if (rest.empty()) throw SchemaError("empty target reference", no);
            doc.target_ref = rest;
        } else if (keyword == "image") {
            size_t eq = rest.find('=');
            if (eq == std::string::npos)
                throw SchemaError("image lines read: image NAME = EXPRESSION", no);
            std::string name = trim(rest.substr(0, eq));
            std::string expr = trim(rest.substr(eq + 1));
            if (name.empty() || expr.empty())
                throw SchemaError("image lines read: image NAME = EXPRESSION", no);
            doc.images.emplace_back(name, expr);
        } else {
            throw SchemaError("unknown keyword \"" + keyword + "\"", no);
        }
    }
    if (doc.source_ref.empty()) throw SchemaError("missing source", 0);
    if (doc.target_ref.empty()) throw SchemaError("missing target", 0);
    return doc;
}

void save_document(const PresentationDocument& doc, const std::string& path) {
    if (is_json_path(path)) {
        nlohmann::json gens = nlohmann::json::array();
        for (const GeneratorInfo& g : doc.generators)
            gens.push_back({{"name", g.name}, {"degree", g.degree}});
        nlohmann::json j = {{"kind", "presentation"},
                            {"characteristic", doc.characteristic},
                            {"generators", gens},
                            {"relations", doc.relations}};
        write_text(path, j.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "presentation\n";
    out << "characteristic " << doc.characteristic << "\n";
    for (const GeneratorInfo& g : doc.generators)
        out << "generator " << g.name << " " << g.degree << "\n";
    for (const std::string& r : doc.relations) out << "relation " << r << "\n";
    write_text(path, out.str());
}

void save_document(const MorphismDocument& doc, const std::string& path) {
    if (is_json_path(path)) {
        nlohmann::json images = nlohmann::json::array();
        for (const auto& [name, expr] : doc.images)
            images.push_back({{"generator", name}, {"expression", expr}});
        nlohmann::json j = {{"kind", "morphism"},
                            {"source", doc.source_ref},
                            {"target", doc.target_ref},
                            {"images", images}};
        write_text(path, j.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "morphism\n";
    out << "source " << doc.source_ref << "\n";
    out << "target " << doc.target_ref << "\n";
    for (const auto& [name, expr] : doc.images)
        out << "image " << name << " = " << expr << "\n";
    write_text(path, out.str());
}

PresentationDocument to_document(const Presentation& ring) {
    PresentationDocument doc;
    doc.characteristic = ring.field.p;
    doc.generators = ring.gens;
    for (const Poly& r : ring.relations) doc.relations.push_back(print_element(r, ring));
    return doc;
}

Presentation from_document(const PresentationDocument& doc) {
    return make_presentation(doc.characteristic, doc.generators, doc.relations);
}

const Presentation& DocumentStore::presentation(const std::string& ref) {
    if (ref.starts_with(kFixturePrefix)) {
        const Presentation* p = fixtures::find_ring(ref.substr(std::strlen(kFixturePrefix)));
        if (p == nullptr) throw IoError("unknown fixture \"" + ref + "\"");
        return *p;
    }
    auto it = loaded_.find(ref);
    if (it == loaded_.end()) {
        auto owned = std::make_unique<Presentation>(
            from_document(load_presentation_document(ref)));
        it = loaded_.emplace(ref, std::move(owned)).first;
    }
    return *it->second;
}

RingMorphism DocumentStore::morphism(const std::string& ref) {
    if (ref.starts_with(kFixturePrefix)) {
        const RingMorphism* m =
            fixtures::find_morphism(ref.substr(std::strlen(kFixturePrefix)));
        if (m == nullptr) throw IoError("unknown fixture \"" + ref + "\"");
        return *m;
    }
    MorphismDocument doc = load_morphism_document(ref);
    const Presentation& source = presentation(resolve_ref(doc.source_ref, ref));
    const Presentation& target = presentation(resolve_ref(doc.target_ref, ref));

    std::vector<std::string> exprs(source.ngens());
    std::vector<bool> seen(source.ngens(), false);
    for (const auto& [name, expr] : doc.images) {
        int i = source.generator_index(name);
        if (i < 0) throw UnknownGenerator("no source generator named " + name);
        if (seen[static_cast<size_t>(i)])
            throw SchemaError("two images for generator " + name, 0);
        seen[static_cast<size_t>(i)] = true;
        exprs[static_cast<size_t>(i)] = expr;
    }
    for (size_t i = 0; i < source.ngens(); ++i)
        if (!seen[i]) throw SchemaError("no image for generator " + source.gens[i].name, 0);

    return make_morphism(source, target, exprs);
}

void write_report_file(const nlohmann::json& report, const std::string& path) {
    write_text(path, report.dump(2) + "\n");
}

} // namespace cohoc
