#include "patterncount/point_io.hpp"

#include "patterncount/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace patcount {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> fields;
};

std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string f; in >> f;)
            line.fields.push_back(f);
        if (!line.fields.empty())
            out.push_back(std::move(line));
        if (end == text.size())
            break;
    }
    return out;
}

[[noreturn]] void parse_fail(std::string const& source, std::size_t line, std::string const& msg)
{
    fail(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + msg);
}

Rat parse_field(std::string const& f, std::string const& source, std::size_t line)
{
    try {
        return Rat::parse(f);
    } catch (Error const& e) {
        parse_fail(source, line, "bad rational '" + f + "'");
    }
}

}  // namespace

LinePointSet parse_line_points(std::string_view text, std::string const& source)
{
    std::vector<Rat> pts;
    std::unordered_map<Rat, std::size_t> seen;
    for (auto const& line : content_lines(text)) {
        if (line.fields.size() != 1)
            parse_fail(source, line.number, "expected one rational, found " +
                                                std::to_string(line.fields.size()) + " fields");
        Rat r = parse_field(line.fields[0], source, line.number);
        auto [it, fresh] = seen.emplace(r, line.number);
        if (!fresh)
            fail(ErrorCode::DuplicatePoint, source + ":" + std::to_string(line.number) + ": point " +
                                                r.str() + " repeats line " + std::to_string(it->second));
        pts.push_back(std::move(r));
    }
    return LinePointSet(std::move(pts));
}

PlanePointSet parse_plane_points(std::string_view text, std::string const& source)
{
    std::vector<Point2> pts;
    std::unordered_map<Point2, std::size_t> seen;
    for (auto const& line : content_lines(text)) {
        if (line.fields.size() != 4)
            parse_fail(source, line.number, "expected four rationals 'xr xs yr ys', found " +
                                                std::to_string(line.fields.size()) + " fields");
        Rat v[4];
        for (int i = 0; i < 4; ++i)
            v[i] = parse_field(line.fields[i], source, line.number);
        Point2 p{QSqrt3(v[0], v[1]), QSqrt3(v[2], v[3])};
        auto [it, fresh] = seen.emplace(p, line.number);
        if (!fresh)
            fail(ErrorCode::DuplicatePoint, source + ":" + std::to_string(line.number) + ": point " +
                                                p.str() + " repeats line " + std::to_string(it->second));
        pts.push_back(std::move(p));
    }
    return PlanePointSet(std::move(pts));
}

std::string render_line_points(LinePointSet const& v)
{
    std::string out;
    for (auto const& p : v.points()) {
        out += p.str();
        out += '\n';
    }
    return out;
}

std::string render_plane_points(PlanePointSet const& v)
{
    std::string out;
    for (auto const& p : v.points()) {
        out += p.x.rational_part().str() + ' ' + p.x.sqrt3_part().str() + ' ' +
               p.y.rational_part().str() + ' ' + p.y.sqrt3_part().str() + '\n';
    }
    return out;
}

std::vector<QSqrt3> parse_pattern_values(std::string_view text, std::string const& source)
{
    std::vector<QSqrt3> out;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        auto close = text.find('}', first);
        if (close == std::string_view::npos)
            parse_fail(source, 1, "missing '}' in pattern list");
        std::string body(text.substr(first + 1, close - first - 1));
        std::stringstream in(body);
        for (std::string item; std::getline(in, item, ',');) {
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                       item.end());
            if (item.empty())
                parse_fail(source, 1, "empty pattern entry");
            try {
                out.push_back(QSqrt3::parse(item));
            } catch (Error const&) {
                parse_fail(source, 1, "bad pattern entry '" + item + "'");
            }
        }
        return out;
    }
    for (auto const& line : content_lines(text)) {
        if (line.fields.size() != 1)
            parse_fail(source, line.number, "expected one value per line");
        try {
            out.push_back(QSqrt3::parse(line.fields[0]));
        } catch (Error const&) {
            parse_fail(source, line.number, "bad pattern entry '" + line.fields[0] + "'");
        }
    }
    return out;
}

std::string read_text_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(std::string const& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::Io, "cannot write " + path);
    out << text;
    if (!out)
        fail(ErrorCode::Io, "write failed for " + path);
}

}  // namespace patcount
