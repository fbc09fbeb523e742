#include "hitprob/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hitprob::textio {

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
      position_(position)
{
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

std::uint64_t read_number(Cursor& c, const char* what)
{
    c.skip_ws();
    bool braced = false;
    if (!c.done() && c.peek() == '{') {
        braced = true;
        ++c.pos;
        c.skip_ws();
    }
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError(std::string("expected ") + what, c.pos);
    std::uint64_t v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + static_cast<std::uint64_t>(c.peek() - '0');
        if (v > 0xffffffffull)
            throw ParseError(std::string(what) + " out of range", c.pos);
        ++c.pos;
    }
    if (braced) {
        c.skip_ws();
        if (c.done() || c.peek() != '}')
            throw ParseError("expected '}'", c.pos);
        ++c.pos;
    }
    return v;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int n)
{
    Monomial m(n);
    Cursor c{text};
    c.skip_ws();
    if (c.done())
        throw ParseError("empty monomial", c.pos);
    if (c.peek() == '1') {
        ++c.pos;
        c.skip_ws();
        if (!c.done())
            throw ParseError("trailing input after constant", c.pos);
        return m;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done())
            break;
        if (!first && c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
        }
        if (c.done() || c.peek() != 'x')
            throw ParseError("expected 'x'", c.pos);
        ++c.pos;
        c.skip_ws();
        if (!c.done() && c.peek() == '_')
            ++c.pos;
        std::size_t at = c.pos;
        std::uint64_t idx = read_number(c, "variable index");
        if (idx < 1 || idx > static_cast<std::uint64_t>(n))
            throw ParseError("variable index out of range", at);
        if (seen[idx])
            throw ParseError("duplicate variable", at);
        seen[idx] = true;
        std::uint64_t e = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            e = read_number(c, "exponent");
        }
        m.set_exp(static_cast<int>(idx), static_cast<std::uint32_t>(e));
        first = false;
        c.skip_ws();
        if (c.done())
            break;
    }
    return m;
}

Polynomial parse_polynomial(const std::string& text, int n)
{
    std::string trimmed = text;
    // Split on '+' at top level (no nesting in this grammar).
    std::vector<Monomial> terms;
    std::size_t start = 0;
    bool all_ws = true;
    for (char ch : trimmed)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            all_ws = false;
    if (all_ws)
        throw ParseError("empty polynomial", 0);
    while (start <= trimmed.size()) {
        std::size_t plus = trimmed.find('+', start);
        std::string piece = trimmed.substr(start, plus == std::string::npos ? plus : plus - start);
        std::string stripped = piece;
        stripped.erase(std::remove_if(stripped.begin(), stripped.end(),
                                      [](unsigned char ch) { return std::isspace(ch); }),
                       stripped.end());
        if (stripped != "0") {
            try {
                terms.push_back(parse_monomial(piece, n));
            } catch (const ParseError& e) {
                throw ParseError(e.what() + std::string(" in term starting here"), start);
            }
        }
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return Polynomial(n, std::move(terms));
}

std::string format_monomial(const Monomial& m)
{
    if (m.is_constant())
        return "1";
    std::ostringstream os;
    for (int j = 1; j <= m.vars(); ++j) {
        std::uint32_t e = m.exp(j);
        if (!e)
            continue;
        os << "x_" << j;
        if (e > 1)
            os << "^{" << e << "}";
    }
    return os.str();
}

std::string format_exponents(const Monomial& m)
{
    std::ostringstream os;
    for (int j = 1; j <= m.vars(); ++j) {
        if (j > 1)
            os << ' ';
        os << m.exp(j);
    }
    return os.str();
}

std::string format_polynomial(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Monomial& m : f.terms()) {
        if (!first)
            os << " + ";
        os << format_monomial(m);
        first = false;
    }
    return os.str();
}

namespace {

std::map<std::string, std::string> parse_header(const std::string& line)
{
    std::map<std::string, std::string> kv;
    std::istringstream is(line);
    std::string tok;
    is >> tok;  // '#'
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            continue;
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

}  // namespace

void save_basis_file(const std::string& path, int n, std::uint64_t d,
                     const std::optional<WeightVector>& omega,
                     const std::vector<Monomial>& monomials)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << "# n=" << n << " d=" << d;
    if (omega)
        out << " omega=" << omega->to_string();
    out << " count=" << monomials.size() << " order=omega-sigma\n";
    for (const Monomial& m : monomials)
        out << format_exponents(m) << '\n';
}

std::optional<BasisFile> load_basis_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("bad basis file header: " + path);
    auto kv = parse_header(line);
    BasisFile bf;
    bf.n = std::stoi(kv.at("n"));
    bf.d = std::stoull(kv.at("d"));
    if (kv.count("omega"))
        bf.omega = WeightVector::parse(kv.at("omega"));
    std::size_t count = std::stoull(kv.at("count"));
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream is(line);
        std::vector<std::uint32_t> exps;
        std::uint64_t e;
        while (is >> e)
            exps.push_back(static_cast<std::uint32_t>(e));
        if (static_cast<int>(exps.size()) != bf.n)
            throw std::runtime_error("bad exponent tuple in " + path);
        bf.monomials.emplace_back(bf.n, std::span<const std::uint32_t>(exps));
    }
    if (bf.monomials.size() != count)
        throw std::runtime_error("count mismatch in " + path);
    return bf;
}

std::string cache_path(const std::string& dir, int n, std::uint64_t d,
                       const std::optional<WeightVector>& omega)
{
    std::ostringstream os;
    os << dir << "/basis_n" << n << "_d" << d;
    if (omega) {
        os << "_w";
        std::string w = omega->to_string();
        std::replace(w.begin(), w.end(), ',', '-');
        os << w;
    }
    os << ".txt";
    return os.str();
}

Fixture load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read fixture " + path);
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("bad fixture header: " + path);
    auto kv = parse_header(line);
    Fixture fx;
    fx.n = std::stoi(kv.at("n"));
    fx.d = std::stoull(kv.at("d"));
    if (kv.count("omega"))
        fx.omega = WeightVector::parse(kv.at("omega"));
    if (kv.count("part"))
        fx.part = kv.at("part");
    std::size_t count = std::stoull(kv.at("count"));
    while (std::getline(in, line)) {
        std::string stripped = line;
        stripped.erase(std::remove_if(stripped.begin(), stripped.end(),
                                      [](unsigned char ch) { return std::isspace(ch); }),
                       stripped.end());
        if (stripped.empty() || stripped[0] == '#')
            continue;
        Monomial m = parse_monomial(line, fx.n);
        if (m.degree() != fx.d)
            throw std::runtime_error("fixture monomial of the wrong degree in " + path + ": " +
                                     line);
        if (fx.omega && !(weight_vector(m) == *fx.omega))
            throw std::runtime_error("fixture monomial of the wrong weight in " + path + ": " +
                                     line);
        fx.monomials.push_back(m);
    }
    if (fx.monomials.size() != count)
        throw std::runtime_error("fixture count mismatch in " + path + ": header says " +
                                 std::to_string(count) + ", found " +
                                 std::to_string(fx.monomials.size()));
    return fx;
}

FixtureDiff verify_fixture(const Fixture& fixture, const std::vector<Monomial>& computed)
{
    auto key = [](const Monomial& m) {
        std::vector<std::uint32_t> v;
        for (int j = 1; j <= m.vars(); ++j)
            v.push_back(m.exp(j));
        return v;
    };
    std::vector<std::pair<std::vector<std::uint32_t>, Monomial>> a, b;
    for (const Monomial& m : fixture.monomials)
        a.emplace_back(key(m), m);
    for (const Monomial& m : computed)
        b.emplace_back(key(m), m);
    auto less = [](const auto& x, const auto& y) { return x.first < y.first; };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);

    FixtureDiff diff;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            diff.missing.push_back(a[i++].second);
        else if (i == a.size() || b[j].first < a[i].first)
            diff.extra.push_back(b[j++].second);
        else {
            ++i;
            ++j;
        }
    }
    return diff;
}

}  // namespace hitprob::textio
