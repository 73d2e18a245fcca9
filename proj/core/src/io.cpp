#include "fuzzhyper/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fuzzhyper/errors.hpp"

namespace fuzzhyper {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& value, const std::string& where) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    // JSON floats convert through their shortest decimal literal, which is
    // what the file actually said for inputs like 0.25.
    if (value.is_number_float()) return Rational::parse(value.dump());
    throw ParseError("expected a rational (\"p/q\", integer, or decimal) at " + where);
}

json parse_or_throw(const std::string& text, const std::string& what) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("invalid JSON in " + what);
    return parsed;
}

SpacePtr space_from_json_value(const json& doc) {
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("dist"))
        throw ParseError("space file needs \"labels\" and \"dist\"");
    std::vector<std::string> labels;
    for (const auto& l : doc.at("labels")) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<Rational>> dist;
    for (size_t i = 0; i < doc.at("dist").size(); ++i) {
        const auto& row = doc.at("dist")[i];
        std::vector<Rational> out_row;
        for (size_t j = 0; j < row.size(); ++j)
            out_row.push_back(rational_from_json(row[j], "dist[" + std::to_string(i) + "][" +
                                                             std::to_string(j) + "]"));
        dist.push_back(std::move(out_row));
    }
    try {
        return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(dist));
    } catch (const DomainError& e) {
        throw ParseError(std::string("space rejected: ") + e.what());
    }
}

}  // namespace

SpacePtr space_from_json(const std::string& text) {
    return space_from_json_value(parse_or_throw(text, "space"));
}

std::string space_to_json(const FiniteMetricSpace& space) {
    json doc;
    doc["labels"] = space.labels();
    json rows = json::array();
    for (int i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j).str());
        rows.push_back(std::move(row));
    }
    doc["dist"] = std::move(rows);
    return doc.dump(2);
}

StepFuzzySet fuzzy_from_json(const std::string& text, SpacePtr space) {
    json doc = parse_or_throw(text, "fuzzy set");
    if (!doc.is_object() || !doc.contains("breakpoints") || !doc.contains("levels"))
        throw ParseError("fuzzy set file needs \"breakpoints\" and \"levels\"");
    if (doc.contains("space")) {
        SpacePtr embedded = space_from_json_value(doc.at("space"));
        if (space && !(*space == *embedded))
            throw ParseError("embedded space disagrees with the supplied one");
        space = embedded;
    }
    if (!space) throw ParseError("no space supplied for the fuzzy set");

    std::vector<Rational> breakpoints;
    for (size_t i = 0; i < doc.at("breakpoints").size(); ++i)
        breakpoints.push_back(
            rational_from_json(doc.at("breakpoints")[i], "breakpoints[" + std::to_string(i) + "]"));
    std::vector<Mask> levels;
    for (const auto& level : doc.at("levels")) {
        Mask m = 0;
        for (const auto& l : level) {
            if (!l.is_string()) throw ParseError("level members must be labels");
            auto idx = space->find(l.get<std::string>());
            if (!idx) throw ParseError("unknown label '" + l.get<std::string>() + "' in level");
            m |= Mask(1) << *idx;
        }
        levels.push_back(m);
    }
    StepFuzzySet u;
    try {
        u = StepFuzzySet::from_levels(space, std::move(breakpoints), std::move(levels));
    } catch (const DomainError& e) {
        throw ParseError(std::string("fuzzy set rejected: ") + e.what());
    }
    if (!u.normal()) throw ParseError("fuzzy set rejected: not normal (top breakpoint must be 1)");
    return u;
}

std::string fuzzy_to_json(const StepFuzzySet& u, bool embed_space) {
    json doc;
    json bps = json::array();
    for (const Rational& a : u.breakpoints()) bps.push_back(a.str());
    doc["breakpoints"] = std::move(bps);
    json levels = json::array();
    for (Mask m : u.levels()) {
        json level = json::array();
        for (int i = 0; i < u.space()->size(); ++i)
            if (mask_contains(m, i)) level.push_back(u.space()->label(i));
        levels.push_back(std::move(level));
    }
    doc["levels"] = std::move(levels);
    if (embed_space) doc["space"] = json::parse(space_to_json(*u.space()));
    return doc.dump(2);
}

System system_from_json(const std::string& text) {
    json doc = parse_or_throw(text, "system");
    if (!doc.is_object() || !doc.contains("space") || !doc.contains("map"))
        throw ParseError("system file needs \"space\" and \"map\"");
    SpacePtr space = space_from_json_value(doc.at("space"));
    std::vector<int> image(static_cast<size_t>(space->size()), -1);
    for (const auto& [from, to] : doc.at("map").items()) {
        auto src = space->find(from);
        if (!src) throw ParseError("unknown label '" + from + "' in map");
        if (!to.is_string()) throw ParseError("map targets must be labels");
        auto dst = space->find(to.get<std::string>());
        if (!dst) throw ParseError("unknown label '" + to.get<std::string>() + "' in map");
        image[static_cast<size_t>(*src)] = *dst;
    }
    for (size_t i = 0; i < image.size(); ++i)
        if (image[i] < 0)
            throw ParseError("map misses label '" + space->label(static_cast<int>(i)) + "'");
    return System(std::move(space), std::move(image));
}

std::string system_to_json(const System& sys) {
    json doc;
    doc["space"] = json::parse(space_to_json(*sys.space));
    json map = json::object();
    for (int x = 0; x < sys.size(); ++x) map[sys.space->label(x)] = sys.space->label(sys.apply(x));
    doc["map"] = std::move(map);
    return doc.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace fuzzhyper
