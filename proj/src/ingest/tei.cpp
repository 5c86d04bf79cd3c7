#include "priorlens/ingest/tei.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cctype>
#include <set>
#include <sstream>

#include "priorlens/common/errors.hpp"
#include "priorlens/common/text.hpp"
#include "priorlens/ingest/sentences.hpp"

namespace priorlens {

namespace {

using boost::property_tree::ptree;

// Inline markers carrying resolved bib keys through sentence segmentation.
constexpr char kMarkerOpen = '\x02';
constexpr char kMarkerClose = '\x03';

bool local_name_is(const std::string& key, const std::string& name) {
    if (key == name) return true;
    return key.size() > name.size() + 1 && key[key.size() - name.size() - 1] == ':' &&
           key.compare(key.size() - name.size(), name.size(), name) == 0;
}

void collect_descendants(const ptree& node, const std::string& name,
                         std::vector<const ptree*>& out) {
    for (const auto& [key, child] : node) {
        if (key == "<xmlattr>" || key == "<xmltext>") continue;
        if (local_name_is(key, name)) out.push_back(&child);
        collect_descendants(child, name, out);
    }
}

std::vector<const ptree*> find_all(const ptree& node, const std::string& name) {
    std::vector<const ptree*> out;
    collect_descendants(node, name, out);
    return out;
}

const ptree* find_first(const ptree& node, const std::string& name) {
    auto all = find_all(node, name);
    return all.empty() ? nullptr : all.front();
}

std::string attr(const ptree& node, const std::string& name) {
    if (auto attrs = node.get_child_optional("<xmlattr>")) {
        for (const auto& [key, value] : *attrs)
            if (local_name_is(key, name)) return value.data();
    }
    return {};
}

// Flattens element text in document order. When `bib_keys` is given,
// <ref type="bibr"> elements additionally emit a key marker after their
// display text; unresolvable targets bump `skipped`.
void flatten(const ptree& node, std::string& out, const std::set<std::string>* bib_keys,
             int* skipped) {
    for (const auto& [key, child] : node) {
        if (key == "<xmlattr>") continue;
        if (key == "<xmltext>") {
            out += child.data();
            continue;
        }
        if (bib_keys && local_name_is(key, "ref") && attr(child, "type") == "bibr") {
            flatten(child, out, nullptr, nullptr);
            std::string target = attr(child, "target");
            if (target.size() > 1 && target[0] == '#' && bib_keys->count(target.substr(1))) {
                out += kMarkerOpen;
                out += target.substr(1);
                out += kMarkerClose;
            } else if (skipped) {
                ++*skipped;
            }
            continue;
        }
        flatten(child, out, bib_keys, skipped);
    }
}

std::string flat_text(const ptree& node) {
    std::string out;
    flatten(node, out, nullptr, nullptr);
    return text::collapse_whitespace(out);
}

std::vector<std::string> marker_keys(const std::string& s) {
    std::vector<std::string> keys;
    size_t pos = 0;
    while ((pos = s.find(kMarkerOpen, pos)) != std::string::npos) {
        size_t end = s.find(kMarkerClose, pos);
        if (end == std::string::npos) break;
        std::string key = s.substr(pos + 1, end - pos - 1);
        bool seen = false;
        for (const auto& k : keys) seen = seen || k == key;
        if (!seen) keys.push_back(key);
        pos = end + 1;
    }
    return keys;
}

std::string strip_markers(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_marker = false;
    for (char c : s) {
        if (c == kMarkerOpen) {
            in_marker = true;
            continue;
        }
        if (c == kMarkerClose) {
            in_marker = false;
            continue;
        }
        if (!in_marker) out.push_back(c);
    }
    return out;
}

ptree parse_xml(const std::string& xml) {
    try {
        std::istringstream in(xml);
        ptree tree;
        boost::property_tree::read_xml(
            in, tree,
            boost::property_tree::xml_parser::no_comments |
                boost::property_tree::xml_parser::no_concat_text);
        return tree;
    } catch (const boost::property_tree::xml_parser_error& e) {
        raise(ErrorKind::ParseFailed, std::string("malformed TEI: ") + e.what());
    }
}

std::vector<BibEntry> parse_bibliography(const ptree& root) {
    std::vector<BibEntry> bib;
    std::set<std::string> seen;
    for (const ptree* entry : find_all(root, "biblStruct")) {
        BibEntry e;
        e.key = attr(*entry, "id");
        if (e.key.empty() || seen.count(e.key)) continue;
        seen.insert(e.key);
        e.raw_text = flat_text(*entry);
        if (e.raw_text.empty()) continue;

        const ptree* title = nullptr;
        for (const ptree* t : find_all(*entry, "title")) {
            if (attr(*t, "level") == "a") {
                title = t;
                break;
            }
            if (!title) title = t;
        }
        if (title) {
            std::string t = flat_text(*title);
            if (!t.empty()) e.title = t;
        }

        for (const ptree* date : find_all(*entry, "date")) {
            std::string when = attr(*date, "when");
            if (when.size() >= 4) {
                bool digits = true;
                for (int i = 0; i < 4; ++i)
                    digits = digits && std::isdigit(static_cast<unsigned char>(when[i]));
                if (digits) {
                    e.year = std::stoi(when.substr(0, 4));
                    break;
                }
            }
        }

        for (const ptree* person : find_all(*entry, "persName")) {
            std::string name;
            for (const ptree* part : find_all(*person, "forename")) {
                if (!name.empty()) name += " ";
                name += flat_text(*part);
            }
            for (const ptree* part : find_all(*person, "surname")) {
                if (!name.empty()) name += " ";
                name += flat_text(*part);
            }
            name = text::collapse_whitespace(name);
            if (!name.empty()) e.authors.push_back(name);
        }
        bib.push_back(std::move(e));
    }
    return bib;
}

struct BodyWalk {
    std::vector<CitationContext> contexts;
    std::map<std::string, std::string> section_texts;
    int skipped_refs = 0;
};

void walk_body(const ptree& root, const std::set<std::string>& bib_keys, BodyWalk& out) {
    const ptree* body = find_first(root, "body");
    if (!body) return;
    std::set<std::pair<std::string, std::string>> seen;
    int unnamed = 0;
    for (const ptree* div : find_all(*body, "div")) {
        std::string section;
        if (const ptree* head = find_first(*div, "head")) section = flat_text(*head);
        if (section.empty()) section = "section-" + std::to_string(++unnamed);

        std::string section_plain;
        for (const auto& [key, child] : *div) {
            if (!local_name_is(key, "p")) continue;
            std::string marked;
            flatten(child, marked, &bib_keys, &out.skipped_refs);
            std::string plain = text::collapse_whitespace(strip_markers(marked));
            if (!plain.empty()) {
                if (!section_plain.empty()) section_plain += "\n\n";
                section_plain += plain;
            }
            for (const std::string& sentence : split_sentences(marked)) {
                std::vector<std::string> keys = marker_keys(sentence);
                if (keys.empty()) continue;
                std::string clean = text::collapse_whitespace(strip_markers(sentence));
                for (const std::string& key : keys) {
                    if (seen.emplace(key, clean).second)
                        out.contexts.push_back({key, clean, section});
                }
            }
        }
        if (!section_plain.empty()) {
            auto [it, inserted] = out.section_texts.emplace(section, section_plain);
            if (!inserted) it->second += "\n\n" + section_plain;
        }
    }
}

} // namespace

TeiParseResult parse_tei(const std::string& tei_xml, const Date& submission_date) {
    if (!submission_date.valid()) raise(ErrorKind::ConfigError, "invalid submission date");
    ptree root = parse_xml(tei_xml);

    TeiParseResult result;
    result.submission.submission_date = submission_date;

    const ptree* title_stmt = find_first(root, "titleStmt");
    if (title_stmt) {
        if (const ptree* title = find_first(*title_stmt, "title"))
            result.submission.title = flat_text(*title);
    }
    if (result.submission.title.empty())
        raise(ErrorKind::MissingTitle, "no title found in TEI header");

    if (const ptree* abstract = find_first(root, "abstract"))
        result.submission.abstract_text = flat_text(*abstract);

    result.submission.bibliography = parse_bibliography(root);
    if (result.submission.bibliography.empty())
        result.warnings.push_back("bibliography is empty");

    std::set<std::string> keys;
    for (const auto& e : result.submission.bibliography) keys.insert(e.key);

    BodyWalk walk;
    walk_body(root, keys, walk);
    result.submission.citation_contexts = std::move(walk.contexts);
    result.submission.section_texts = std::move(walk.section_texts);
    result.skipped_refs = walk.skipped_refs;
    if (walk.skipped_refs > 0)
        result.warnings.push_back(std::to_string(walk.skipped_refs) +
                                  " in-text reference(s) did not resolve to a bibliography entry");
    return result;
}

ContextExtraction extract_citation_contexts(const std::string& tei_xml) {
    ptree root = parse_xml(tei_xml);
    std::set<std::string> keys;
    for (const auto& e : parse_bibliography(root)) keys.insert(e.key);
    BodyWalk walk;
    walk_body(root, keys, walk);
    return {std::move(walk.contexts), walk.skipped_refs};
}

} // namespace priorlens
