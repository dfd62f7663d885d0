#include "hecke/io.hpp"

#include <cctype>
#include <vector>

namespace hecke {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace((unsigned char)c)) out.push_back(c);
    return out;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
    throw ParseError(std::string(what) + " in '" + std::string(text) + "'");
}

// split on `sep` at bracket depth zero
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (depth == 0 && c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string_view expect_brackets(std::string_view s, char open, char close) {
    if (s.size() < 2 || s.front() != open || s.back() != close) bad("expected brackets", s);
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == open) ++depth;
        if (s[i] == close && --depth == 0 && i + 1 != s.size())
            bad("unbalanced brackets", s);
    }
    if (depth != 0) bad("unbalanced brackets", s);
    return s.substr(1, s.size() - 2);
}

} // namespace

std::string to_text(const RingInt& a) {
    std::string out;
    const auto& c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class mag = abs(c[i]);
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str();
            term += "L";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (c[i] < 0 ? "-" : "") + term;
        else
            out += (c[i] < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

std::string to_text(const RingRat& a) {
    if (a.den() == 1) return to_text(a.num());
    return "(" + to_text(a.num()) + ")/" + a.den().get_str();
}

std::string to_text(const ProjPoint& p) {
    return p.is_infinity() ? "inf" : to_text(p.value());
}

std::string to_text(const ProjMatrix& m) {
    return "[[" + to_text(m.a()) + "," + to_text(m.b()) + "],[" + to_text(m.c()) + "," +
           to_text(m.d()) + "]]";
}

std::string to_text(const ProjForm& f) {
    return "[" + to_text(f.A()) + ";" + to_text(f.B()) + ";" + to_text(f.C()) + ";" +
           (f.s() == 1 ? "+" : "-") + "]";
}

RingInt parse_ring_int(const ContextPtr& ctx, std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) bad("empty ring element", text);
    std::vector<mpz_class> coeffs;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i > 0) {
            bad("expected '+' or '-' between terms", text);
        }
        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) digits.push_back(s[i++]);
        bool has_var = i < s.size() && s[i] == 'L';
        unsigned long power = 0;
        if (has_var) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string p;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) p.push_back(s[i++]);
                if (p.empty()) bad("missing exponent after '^'", text);
                if (p.size() > 4) bad("exponent too large", text);
                power = std::stoul(p);
            }
        }
        if (digits.empty() && !has_var) bad("expected a term", text);
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        coeff *= sign;
        if (coeffs.size() <= power) coeffs.resize(power + 1, mpz_class(0));
        coeffs[power] += coeff;
    }
    return RingInt::from_coeffs(ctx, std::move(coeffs));
}

RingRat parse_ring_rat(const ContextPtr& ctx, std::string_view text) {
    std::string s = strip(text);
    std::vector<std::string> parts = split_top(s, '/');
    if (parts.size() == 1) return RingRat(parse_ring_int(ctx, s));
    if (parts.size() != 2) bad("multiple '/'", text);
    std::string nums = parts[0];
    if (!nums.empty() && nums.front() == '(')
        nums = std::string(expect_brackets(nums, '(', ')'));
    const std::string& dens = parts[1];
    if (dens.empty() || dens.find_first_not_of("0123456789") != std::string::npos)
        bad("denominator must be a positive integer", text);
    mpz_class den(dens);
    if (den == 0) bad("zero denominator", text);
    return RingRat(parse_ring_int(ctx, nums), den);
}

ProjPoint parse_proj_point(const ContextPtr& ctx, std::string_view text) {
    std::string s = strip(text);
    if (s == "inf") return ProjPoint::infinity();
    return ProjPoint(parse_ring_rat(ctx, s));
}

ProjMatrix parse_matrix(const ContextPtr& ctx, std::string_view text) {
    std::string s = strip(text);
    std::vector<std::string> rows = split_top(expect_brackets(s, '[', ']'), ',');
    if (rows.size() != 2) bad("matrix needs two rows", text);
    std::vector<RingRat> e;
    for (const std::string& row : rows) {
        std::vector<std::string> cols = split_top(expect_brackets(row, '[', ']'), ',');
        if (cols.size() != 2) bad("matrix row needs two entries", text);
        for (const std::string& c : cols) e.push_back(parse_ring_rat(ctx, c));
    }
    return ProjMatrix(e[0], e[1], e[2], e[3]);
}

ProjForm parse_form(const ContextPtr& ctx, std::string_view text) {
    std::string s = strip(text);
    std::vector<std::string> parts = split_top(expect_brackets(s, '[', ']'), ';');
    if (parts.size() != 4) bad("form needs [A;B;C;s]", text);
    int sign;
    if (parts[3] == "+")
        sign = 1;
    else if (parts[3] == "-")
        sign = -1;
    else
        bad("orientation must be '+' or '-'", text);
    return ProjForm(parse_ring_int(ctx, parts[0]), parse_ring_int(ctx, parts[1]),
                    parse_ring_int(ctx, parts[2]), sign);
}

nlohmann::ordered_json to_json(const ProjMatrix& m) {
    return {{"a", to_text(m.a())},
            {"b", to_text(m.b())},
            {"c", to_text(m.c())},
            {"d", to_text(m.d())}};
}

nlohmann::ordered_json to_json(const ProjForm& f) {
    return {{"A", to_text(f.A())},
            {"B", to_text(f.B())},
            {"C", to_text(f.C())},
            {"s", f.s() == 1 ? "+" : "-"}};
}

nlohmann::ordered_json to_json(const ReductionResult& r) {
    nlohmann::ordered_json j;
    j["level"] = r.level;
    j["preperiod"] = nlohmann::ordered_json::array();
    for (const auto& f : r.preperiod) j["preperiod"].push_back(to_json(f));
    j["period"] = nlohmann::ordered_json::array();
    for (const auto& f : r.period) j["period"].push_back(to_json(f));
    j["conjugator"] = to_json(r.conjugator);
    j["period_word"] = r.period_word;
    j["hyperbolic_element"] = to_json(r.hyperbolic_element);
    return j;
}

nlohmann::ordered_json to_json(const DecisionResult& r) {
    nlohmann::ordered_json j;
    j["member"] = r.member;
    if (r.member) {
        auto words = nlohmann::ordered_json::array();
        for (const auto& t : r.word) words.push_back(t.str());
        j["word"] = words;
    } else {
        j["word"] = nullptr;
    }
    j["iterations"] = r.iterations;
    j["bound"] = r.bound;
    return j;
}

nlohmann::ordered_json to_json(const EnumerationReport& r) {
    nlohmann::ordered_json j;
    j["dmax"] = r.dmax.get_str();
    j["word_length_cap"] = r.word_length_cap;
    j["forms"] = nlohmann::ordered_json::array();
    for (const auto& f : r.forms) {
        nlohmann::ordered_json e;
        e["form"] = to_json(f.form);
        e["word"] = f.word;
        e["discriminant"] = to_text(f.discriminant);
        j["forms"].push_back(e);
    }
    j["explored"] = r.explored;
    return j;
}

ProjMatrix matrix_from_json(const ContextPtr& ctx, const nlohmann::json& j) {
    return ProjMatrix(parse_ring_rat(ctx, j.at("a").get<std::string>()),
                      parse_ring_rat(ctx, j.at("b").get<std::string>()),
                      parse_ring_rat(ctx, j.at("c").get<std::string>()),
                      parse_ring_rat(ctx, j.at("d").get<std::string>()));
}

ProjForm form_from_json(const ContextPtr& ctx, const nlohmann::json& j) {
    int s = j.at("s").get<std::string>() == "+" ? 1 : -1;
    return ProjForm(parse_ring_int(ctx, j.at("A").get<std::string>()),
                    parse_ring_int(ctx, j.at("B").get<std::string>()),
                    parse_ring_int(ctx, j.at("C").get<std::string>()), s);
}

} // namespace hecke
