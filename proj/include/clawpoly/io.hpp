#pragma once

#include <json.hpp>

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "clawpoly/engine.hpp"
#include "clawpoly/group_model.hpp"
#include "clawpoly/hrep.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly::io {

using json = nlohmann::ordered_json;

enum class Format { Cdd, Records, Json };

inline Format parse_format(std::string_view s)
{
    if (s == "cdd" || s == "cdd-ext" || s == "cdd-ine" || s == "ext" || s == "ine")
        return Format::Cdd;
    if (s == "records" || s == "kv")
        return Format::Records;
    if (s == "json")
        return Format::Json;
    throw Error(ErrorKind::Parse, "unknown format '" + std::string(s) + "' (cdd-ext, cdd-ine, records, json)");
}

inline std::string layout_comment(std::size_t rows, std::size_t cols)
{
    return "* order=row-major rows=" + std::to_string(rows) + " cols=" + std::to_string(cols) + "\n";
}

// ---------------------------------------------------------------------------
// cdd .ext / .ine

inline std::string write_ext(const VertexSet& vs)
{
    std::ostringstream os;
    os << "V-representation\n" << layout_comment(vs.rows, vs.cols) << "begin\n";
    os << vs.size() << ' ' << vs.dimension() + 1 << " rational\n";
    for (const auto& p : vs.points) {
        os << '1';
        for (const auto& q : p)
            os << ' ' << q.get_str();
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

/// Rows encode a.x <= b as "b -a1 ... -ad" (b - a.x >= 0). Equations are
/// listed on a `linearity` line.
inline std::string write_ine(const std::vector<engine::Halfspace>& hs, std::size_t rows, std::size_t cols)
{
    std::ostringstream os;
    os << "H-representation\n" << layout_comment(rows, cols);
    std::vector<std::size_t> lin;
    for (std::size_t k = 0; k < hs.size(); ++k)
        if (hs[k].equation)
            lin.push_back(k + 1);
    if (!lin.empty()) {
        os << "linearity " << lin.size();
        for (auto k : lin)
            os << ' ' << k;
        os << '\n';
    }
    os << "begin\n" << hs.size() << ' ' << rows * cols + 1 << " rational\n";
    for (const auto& h : hs) {
        os << h.rhs.get_str();
        for (const auto& a : h.coeffs)
            os << ' ' << Rational(-a).get_str();
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

inline std::string write_ine(const InequalitySystem& sys)
{
    return write_ine(engine::to_halfspaces(sys), sys.rows, sys.leaves);
}

struct CddBody {
    std::size_t rows = 0, cols = 0; // from the layout comment, 0 if absent
    std::string kind;               // "V-representation" or "H-representation"
    std::vector<std::size_t> linearity;
    std::vector<Point> data;        // full rows including the leading column
};

inline CddBody read_cdd(std::istream& in)
{
    CddBody body;
    std::string line;
    static const std::regex layout(R"(\*\s*order=row-major\s+rows=(\d+)\s+cols=(\d+).*)");
    bool in_body = false;
    std::size_t expected = 0, width = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::smatch mt;
        if (!in_body) {
            if (std::regex_match(line, mt, layout)) {
                body.rows = std::stoul(mt[1]);
                body.cols = std::stoul(mt[2]);
            } else if (line == "V-representation" || line == "H-representation") {
                body.kind = line;
            } else if (line.rfind("linearity", 0) == 0) {
                std::istringstream ls(line.substr(9));
                std::size_t n = 0, k = 0;
                ls >> n;
                while (ls >> k)
                    body.linearity.push_back(k);
            } else if (line == "begin") {
                in_body = true;
                if (!std::getline(in, line))
                    throw Error(ErrorKind::Parse, "missing size line after begin");
                std::istringstream ls(line);
                std::string type;
                if (!(ls >> expected >> width >> type))
                    throw Error(ErrorKind::Parse, "malformed size line '" + line + "'");
                if (type != "rational" && type != "integer")
                    throw Error(ErrorKind::Parse, "unsupported number type '" + type + "'");
            }
            continue;
        }
        if (line == "end")
            break;
        if (line.empty() || line[0] == '*')
            continue;
        std::istringstream ls(line);
        Point row;
        std::string tok;
        while (ls >> tok)
            row.push_back(parse_rational(tok));
        if (row.size() != width)
            throw Error(ErrorKind::Parse, "row has " + std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(width));
        body.data.push_back(std::move(row));
    }
    if (!in_body)
        throw Error(ErrorKind::Parse, "no 'begin' line");
    if (body.data.size() != expected)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(expected) + " rows, read " +
                                          std::to_string(body.data.size()));
    if (width == 0)
        throw Error(ErrorKind::Parse, "zero-width cdd body");
    if (body.rows == 0) {
        body.rows = 1;
        body.cols = width - 1;
    }
    if (body.rows * body.cols != width - 1)
        throw Error(ErrorKind::Parse, "layout " + std::to_string(body.rows) + "x" + std::to_string(body.cols) +
                                          " does not match width " + std::to_string(width));
    return body;
}

inline VertexSet read_ext(std::istream& in)
{
    const auto body = read_cdd(in);
    if (body.kind == "H-representation")
        throw Error(ErrorKind::Parse, "expected a V-representation");
    VertexSet vs{body.rows, body.cols, {}};
    for (const auto& row : body.data) {
        if (row[0] != 1)
            throw Error(ErrorKind::Parse, "only vertices (leading 1) are supported, rays are not");
        vs.points.emplace_back(row.begin() + 1, row.end());
    }
    return vs;
}

struct HFile {
    std::size_t rows = 0, cols = 0;
    std::vector<engine::Halfspace> halfspaces;
};

inline HFile read_ine(std::istream& in)
{
    const auto body = read_cdd(in);
    if (body.kind == "V-representation")
        throw Error(ErrorKind::Parse, "expected an H-representation");
    HFile h{body.rows, body.cols, {}};
    for (std::size_t k = 0; k < body.data.size(); ++k) {
        const auto& row = body.data[k];
        engine::Halfspace hs;
        hs.rhs = row[0];
        for (std::size_t i = 1; i < row.size(); ++i)
            hs.coeffs.push_back(-row[i]);
        hs.equation = std::find(body.linearity.begin(), body.linearity.end(), k + 1) != body.linearity.end();
        h.halfspaces.push_back(std::move(hs));
    }
    return h;
}

inline VertexSet read_ext_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return read_ext(in);
}

// ---------------------------------------------------------------------------
// key=value records

inline std::string quote_value(const std::string& v)
{
    if (v.find_first_of(" \t\"") == std::string::npos && !v.empty())
        return v;
    std::string q = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\')
            q += '\\';
        q += c;
    }
    return q + "\"";
}

/// One record: ordered key=value pairs on a single line.
class Record {
public:
    Record& add(const std::string& key, const std::string& value)
    {
        fields_.emplace_back(key, value);
        return *this;
    }
    Record& add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, const Rational& value) { return add(key, value.get_str()); }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < fields_.size(); ++i)
            s += (i ? " " : "") + fields_[i].first + "=" + quote_value(fields_[i].second);
        return s;
    }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string csv(std::span<const Rational> v)
{
    return join(v, ",");
}

inline std::string write_records(const VertexSet& vs)
{
    std::string out = Record()
                          .add("type", "V-representation")
                          .add("order", "row-major")
                          .add("rows", vs.rows)
                          .add("cols", vs.cols)
                          .add("count", vs.size())
                          .str() +
                      "\n";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += Record().add("index", i).add("point", csv(vs.points[i])).str() + "\n";
    return out;
}

inline std::string write_records(const InequalitySystem& sys)
{
    std::string out = Record()
                          .add("type", "H-representation")
                          .add("model", to_string(sys.model))
                          .add("order", "row-major")
                          .add("rows", sys.rows)
                          .add("cols", sys.leaves)
                          .add("count", sys.size())
                          .str() +
                      "\n";
    for (const auto& ineq : sys.inequalities)
        out += Record()
                   .add("id", ineq.id)
                   .add("family", to_string(ineq.family))
                   .add("coeffs", csv(ineq.coeffs))
                   .add("sense", "<=")
                   .add("rhs", ineq.rhs)
                   .str() +
               "\n";
    return out;
}

inline std::string write_records(const std::vector<engine::Halfspace>& hs, std::size_t rows, std::size_t cols)
{
    std::string out = Record()
                          .add("type", "H-representation")
                          .add("order", "row-major")
                          .add("rows", rows)
                          .add("cols", cols)
                          .add("count", hs.size())
                          .str() +
                      "\n";
    for (std::size_t k = 0; k < hs.size(); ++k)
        out += Record()
                   .add("id", k)
                   .add("coeffs", csv(hs[k].coeffs))
                   .add("sense", hs[k].equation ? "==" : "<=")
                   .add("rhs", hs[k].rhs)
                   .str() +
               "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(std::span<const Rational> v)
{
    json a = json::array();
    for (const auto& q : v)
        a.push_back(q.get_str());
    return a;
}

inline std::string write_json(const VertexSet& vs)
{
    json j;
    j["type"] = "V-representation";
    j["order"] = "row-major";
    j["rows"] = vs.rows;
    j["cols"] = vs.cols;
    j["points"] = json::array();
    for (const auto& p : vs.points)
        j["points"].push_back(to_json(p));
    return j.dump(2) + "\n";
}

inline std::string write_json(const InequalitySystem& sys)
{
    json j;
    j["type"] = "H-representation";
    j["model"] = to_string(sys.model);
    j["order"] = "row-major";
    j["rows"] = sys.rows;
    j["cols"] = sys.leaves;
    j["inequalities"] = json::array();
    for (const auto& ineq : sys.inequalities)
        j["inequalities"].push_back(
            {{"id", ineq.id}, {"family", to_string(ineq.family)}, {"coeffs", to_json(ineq.coeffs)}, {"rhs", ineq.rhs.get_str()}});
    return j.dump(2) + "\n";
}

inline std::string write_json(const std::vector<engine::Halfspace>& hs, std::size_t rows, std::size_t cols)
{
    json j;
    j["type"] = "H-representation";
    j["order"] = "row-major";
    j["rows"] = rows;
    j["cols"] = cols;
    j["inequalities"] = json::array();
    for (std::size_t k = 0; k < hs.size(); ++k)
        j["inequalities"].push_back({{"id", k},
                                     {"coeffs", to_json(hs[k].coeffs)},
                                     {"sense", hs[k].equation ? "==" : "<="},
                                     {"rhs", hs[k].rhs.get_str()}});
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Labelings and inline points

/// "10,01,11" -> ((1,0),(0,1),(1,1)). Each token lists one residue per
/// cyclic factor, either as single digits or separated by ':' ("3:11").
inline Labeling parse_labeling(const GroupSpec& spec, std::string_view text)
{
    std::vector<GroupElement> els;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::vector<int> residues;
        if (tok.find(':') != std::string::npos) {
            std::stringstream ts(tok);
            std::string part;
            while (std::getline(ts, part, ':')) {
                if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
                    throw Error(ErrorKind::Parse, "bad residue '" + part + "' in labeling");
                residues.push_back(std::stoi(part));
            }
        } else {
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw Error(ErrorKind::Parse, "bad residue '" + std::string(1, c) + "' in labeling");
                residues.push_back(c - '0');
            }
        }
        if (residues.size() != spec.orders().size())
            throw Error(ErrorKind::Parse, "labeling token '" + tok + "' has " + std::to_string(residues.size()) +
                                              " residues, group " + spec.to_string() + " needs " +
                                              std::to_string(spec.orders().size()));
        for (std::size_t i = 0; i < residues.size(); ++i)
            if (residues[i] >= spec.orders()[i])
                throw Error(ErrorKind::Parse, "residue " + std::to_string(residues[i]) + " out of range in '" + tok +
                                                  "'");
        els.push_back(spec.element(std::move(residues)));
    }
    return Labeling(spec, std::move(els));
}

/// "1/2,1/2,0;1/2,1/2,0;0,0,0": rows separated by ';', entries by ','.
inline LeafMatrix parse_matrix(std::string_view text)
{
    std::vector<Point> rows;
    std::stringstream ss{std::string(text)};
    std::string row;
    while (std::getline(ss, row, ';')) {
        Point r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                      tok.end());
            r.push_back(parse_rational(tok));
        }
        rows.push_back(std::move(r));
    }
    return LeafMatrix::from_rows(rows);
}

} // namespace clawpoly::io
