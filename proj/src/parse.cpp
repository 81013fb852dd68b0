#include "threm/parse.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace threm {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

void read_label_array(const nlohmann::json& obj, const char* key, NodeType type,
                      NodeRegistry& registry, std::vector<NodeId>& out, std::size_t lineno) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return;
    if (!it->is_array())
        throw ParseError("line " + std::to_string(lineno) + ": \"" + key + "\" is not an array");
    for (const auto& v : *it) {
        if (!v.is_string())
            throw ParseError("line " + std::to_string(lineno) + ": non-string label in \"" +
                             key + "\"");
        auto label = trim(v.get_ref<const std::string&>());
        if (label.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty label in \"" + key +
                             "\"");
        out.push_back(registry.intern(type, label).id);
    }
}

// Timestamps print as integers when integral so year data round-trips verbatim.
void append_time(std::string& out, double t) {
    if (t == static_cast<double>(static_cast<long long>(t))) {
        out += std::to_string(static_cast<long long>(t));
    } else {
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, t);
        out.append(buf, p);
    }
}

}  // namespace

EventSequence parse_event_stream(std::istream& in, const ParseOptions& opts) {
    EventSequence seq;
    std::string line;
    std::size_t lineno = 0;
    std::uint32_t next_seq = 0;
    double prev_t = 0.0;
    bool have_prev = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError("line " + std::to_string(lineno) + ": " + ex.what());
        }
        if (!obj.is_object())
            throw ParseError("line " + std::to_string(lineno) + ": record is not an object");
        auto t_it = obj.find("t");
        if (t_it == obj.end() || !t_it->is_number())
            throw ParseError("line " + std::to_string(lineno) + ": missing numeric \"t\"");

        HyperEvent e;
        e.t = t_it->get<double>();
        e.seq = next_seq++;
        read_label_array(obj, "authors", NodeType::Author, seq.registry, e.sets.authors, lineno);
        read_label_array(obj, "references", NodeType::Reference, seq.registry, e.sets.references,
                         lineno);
        read_label_array(obj, "keywords", NodeType::Keyword, seq.registry, e.sets.keywords,
                         lineno);

        try {
            canonicalize_event(e, seq.dedup_warnings);
        } catch (const ValidationError&) {
            throw ValidationError("line " + std::to_string(lineno) + ": empty author set");
        }

        if (have_prev && e.t < prev_t && !opts.sort_by_time)
            throw OrderingError("line " + std::to_string(lineno) +
                                ": timestamp decreases (pass a sort flag to pre-sort)");
        prev_t = e.t;
        have_prev = true;
        seq.events.push_back(std::move(e));
    }

    if (opts.sort_by_time) {
        std::stable_sort(seq.events.begin(), seq.events.end(),
                         [](const HyperEvent& a, const HyperEvent& b) { return a.t < b.t; });
    }
    validate_sequence(seq);
    return seq;
}

EventSequence parse_event_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path);
    return parse_event_stream(in, opts);
}

void write_event_stream(const EventSequence& seq, std::ostream& out) {
    std::string line;
    for (const auto& e : seq.events) {
        line.clear();
        line += "{\"t\": ";
        append_time(line, e.t);
        auto emit = [&](const char* key, NodeType type, const std::vector<NodeId>& ids) {
            line += ", \"";
            line += key;
            line += "\": [";
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i) line += ", ";
                line += nlohmann::json(seq.registry.label(NodeRef{ids[i], type})).dump();
            }
            line += "]";
        };
        emit("authors", NodeType::Author, e.sets.authors);
        emit("references", NodeType::Reference, e.sets.references);
        emit("keywords", NodeType::Keyword, e.sets.keywords);
        line += "}\n";
        out << line;
    }
}

}  // namespace threm
