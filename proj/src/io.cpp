#include "toricc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "toricc/errors.hpp"

namespace toricc {

static Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw input_error("expected an integer or integer string, got: " + j.dump());
}

static Rat json_to_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw input_error("expected a rational string, got: " + j.dump());
}

FanPtr fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("cones"))
        throw input_error("fan file needs 'rank', 'rays' and 'cones'");
    int rank = static_cast<int>(json_to_int(j.at("rank")).convert_to<long long>());
    std::vector<RayVec> rays;
    for (const auto& row : j.at("rays")) {
        RayVec v;
        for (const auto& entry : row) v.push_back(json_to_int(entry));
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& row : j.at("cones")) {
        std::vector<int> c;
        for (const auto& entry : row)
            c.push_back(static_cast<int>(json_to_int(entry).convert_to<long long>()));
        maximal.push_back(std::move(c));
    }
    auto fan = std::make_shared<Fan>(Fan::from_maximal(rank, std::move(rays), maximal));
    auto report = validate_fan(*fan);
    if (!report.empty()) throw input_error("invalid fan: " + report.front());
    return fan;
}

json fan_to_json(const Fan& fan) {
    json j;
    j["rank"] = std::to_string(fan.rank());
    json rays = json::array();
    for (int i = 0; i < fan.num_rays(); ++i) {
        json row = json::array();
        for (const Int& x : fan.ray(i)) row.push_back(int_to_string(x));
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    json cones = json::array();
    for (ConeId id : fan.maximal_cones()) {
        json row = json::array();
        for (int r : fan.cone(id).rays) row.push_back(std::to_string(r));
        cones.push_back(std::move(row));
    }
    j["cones"] = std::move(cones);
    return j;
}

Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("vertices"))
        throw input_error("polytope file needs 'rank' and 'vertices'");
    Polytope p;
    p.rank = static_cast<int>(json_to_int(j.at("rank")).convert_to<long long>());
    for (const auto& row : j.at("vertices")) {
        std::vector<Int> v;
        for (const auto& entry : row) v.push_back(json_to_int(entry));
        p.vertices.push_back(std::move(v));
    }
    return p;
}

json polytope_to_json(const Polytope& p) {
    json j;
    j["rank"] = std::to_string(p.rank);
    json vs = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const Int& x : v) row.push_back(int_to_string(x));
        vs.push_back(std::move(row));
    }
    j["vertices"] = std::move(vs);
    return j;
}

HodgeTable hodge_table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw input_error("hodge table file needs 'entries': [[p,q,k,h], ...]");
    HodgeTable t;
    for (const auto& row : j.at("entries")) {
        if (!row.is_array() || row.size() != 4)
            throw input_error("hodge table entry must be [p, q, k, h]");
        auto num = [&](int i) {
            return static_cast<long long>(json_to_int(row.at(i)).convert_to<long long>());
        };
        t.add(static_cast<int>(num(0)), static_cast<int>(num(1)), static_cast<int>(num(2)),
              num(3));
    }
    return t;
}

StrataFile strata_from_json(const json& j) {
    StrataFile f;
    if (j.contains("actual_chi"))
        f.actual_chi = parse_genus_poly(j.at("actual_chi").get<std::string>());
    if (j.contains("strata")) {
        for (const auto& row : j.at("strata")) {
            StratumDatum s;
            s.label = row.value("label", std::string("stratum"));
            if (!row.contains("closure_chi") || !row.contains("milnor_chi"))
                throw input_error("stratum needs 'closure_chi' and 'milnor_chi'");
            s.closure_genus = parse_genus_poly(row.at("closure_chi").get<std::string>());
            if (row.contains("boundary_chi"))
                s.boundary_genus = parse_genus_poly(row.at("boundary_chi").get<std::string>());
            s.milnor = parse_genus_poly(row.at("milnor_chi").get<std::string>());
            f.strata.push_back(std::move(s));
        }
    }
    return f;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// --- polynomial expression parser ------------------------------------------

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    ZPolynomial parse() {
        ZPolynomial e = expr();
        skip_ws();
        if (pos != s.size())
            throw input_error("unexpected trailing input in polynomial: '" + s.substr(pos) + "'");
        return e;
    }

    ZPolynomial expr() {
        ZPolynomial acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    ZPolynomial term() {
        ZPolynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    ZPolynomial factor() {
        ZPolynomial base = atom();
        if (eat('^')) {
            int e = integer();
            if (e < 0) {
                // Laurent monomial: only single variables may carry
                // negative exponents.
                if (base.terms().size() != 1 || base.terms().begin()->second != 1)
                    throw input_error("negative exponent on a non-monomial");
                auto exps = base.terms().begin()->first;
                for (int& v : exps) v *= e;
                return ZPolynomial::monomial(exps, Rat(1));
            }
            return base.pow(e);
        }
        return base;
    }

    int integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw input_error("expected an integer exponent");
        int v = std::stoi(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    ZPolynomial atom() {
        skip_ws();
        if (pos >= s.size()) throw input_error("unexpected end of polynomial");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ZPolynomial inner = expr();
            if (!eat(')')) throw input_error("missing ')' in polynomial");
            return inner;
        }
        if (c == 'y') {
            ++pos;
            return ZPolynomial::variable(0);
        }
        if (c == 'x') {
            ++pos;
            return ZPolynomial::variable(1);
        }
        if (c == 'z') {
            ++pos;
            return ZPolynomial::variable(2);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int num(s.substr(start, pos - start));
            if (eat('/')) {
                skip_ws();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) throw input_error("expected a denominator");
                Int den(s.substr(dstart, pos - dstart));
                if (den == 0) throw input_error("zero denominator");
                return ZPolynomial(Rat(num, den));
            }
            return ZPolynomial(Rat(num));
        }
        throw input_error(std::string("unexpected character '") + c + "' in polynomial");
    }
};

} // namespace

ZPolynomial parse_poly(const std::string& text) { return PolyParser(text).parse(); }

EPolynomial parse_epoly(const std::string& text) {
    ZPolynomial p = parse_poly(text);
    EPolynomial out;
    for (const auto& [exps, c] : p.terms()) {
        if (exps[2] != 0) throw input_error("variable z is not allowed here");
        out.add_term({exps[0], exps[1]}, c);
    }
    return out;
}

GenusPoly parse_genus_poly(const std::string& text) {
    ZPolynomial p = parse_poly(text);
    GenusPoly out;
    for (const auto& [exps, c] : p.terms()) {
        if (exps[1] != 0 || exps[2] != 0)
            throw input_error("only the variable y is allowed here");
        out.add_term({exps[0]}, c);
    }
    return out;
}

std::string cone_key(const Fan& fan, ConeId id) {
    std::ostringstream os;
    os << "{";
    const auto& rays = fan.cone(id).rays;
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) os << ",";
        os << rays[i];
    }
    os << "}";
    return os.str();
}

json cycle_class_to_json(const CycleClass& c) {
    json terms = json::array();
    for (const auto& [id, coeff] : c.terms()) {
        json t;
        t["cone"] = cone_key(*c.fan(), id);
        t["dim"] = std::to_string(c.fan()->cone_dim(id));
        t["grading"] = std::to_string(c.grading(id));
        t["coeff"] = coeff.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

std::string cycle_class_to_text(const CycleClass& c, int indent) {
    std::ostringstream os;
    std::string pad(indent, ' ');
    if (c.terms().empty()) {
        os << pad << "0\n";
        return os.str();
    }
    for (const auto& [id, coeff] : c.terms()) {
        os << pad << "[V" << cone_key(*c.fan(), id) << "]  (grading " << c.grading(id)
           << "): " << coeff.to_string() << "\n";
    }
    return os.str();
}

} // namespace toricc
