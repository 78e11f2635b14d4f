#include "pis/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace pis {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Returns p for q = p^k, or 0 if q is not a prime power.
long prime_power_base(long q) {
    if (q < 2) return 0;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            long m = q;
            while (m % p == 0) m /= p;
            return m == 1 ? p : 0;
        }
    }
    return q;  // q itself prime
}

std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& exp) {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (exp[i] == 0) continue;
        out += vars[i];
        if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- parsing

struct Token {
    enum class Kind { Word, Int, Punct, End };
    Kind kind;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::Kind::End, "", 0, start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                v = v * 10 + (s_[i_] - '0');
                if (v > 1'000'000'000) throw ParseError("integer literal too large", start);
                ++i_;
            }
            return {Token::Kind::Int, s_.substr(start, i_ - start), v, start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            return {Token::Kind::Word, s_.substr(start, i_ - start), 0, start};
        }
        ++i_;
        return {Token::Kind::Punct, std::string(1, c), 0, start};
    }

    // Raw path token: everything up to whitespace, ',' or ')'.
    Token next_path() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) &&
               s_[i_] != ',' && s_[i_] != ')')
            ++i_;
        if (i_ == start) throw ParseError("expected file path", start);
        return {Token::Kind::Word, s_.substr(start, i_ - start), 0, start};
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    RingSpec parse() {
        RingSpec spec = parse_spec();
        if (cur_.kind != Token::Kind::End)
            throw ParseError("trailing input after ring spec", cur_.pos);
        return spec;
    }

private:
    Lexer lex_;
    Token cur_;

    void advance() { cur_ = lex_.next(); }

    void expect_punct(char c) {
        if (cur_.kind != Token::Kind::Punct || cur_.text[0] != c)
            throw ParseError(std::string("expected '") + c + "'", cur_.pos);
        advance();
    }

    long expect_int() {
        if (cur_.kind != Token::Kind::Int)
            throw ParseError("expected integer", cur_.pos);
        long v = cur_.value;
        advance();
        return v;
    }

    std::string expect_word() {
        if (cur_.kind != Token::Kind::Word)
            throw ParseError("expected identifier", cur_.pos);
        std::string w = cur_.text;
        advance();
        return w;
    }

    RingSpec parse_spec() {
        if (cur_.kind != Token::Kind::Word)
            throw ParseError("expected ring constructor (Z, GF, mon, prod, table)", cur_.pos);
        std::string head = cur_.text;
        size_t headPos = cur_.pos;

        if (head == "Z") {
            advance();
            RingSpec s;
            s.kind = RingSpec::Kind::Zmod;
            s.modulus = expect_int();
            if (s.modulus < 2) throw ParseError("Z n requires n >= 2", headPos);
            return s;
        }
        if (head == "GF") {
            advance();
            RingSpec s;
            s.kind = RingSpec::Kind::GF;
            long q = expect_int();
            // Accept either "GF p k" or "GF q" with q a prime power.
            if (cur_.kind == Token::Kind::Int) {
                s.p = q;
                s.k = expect_int();
            } else {
                long p = prime_power_base(q);
                if (p == 0) throw ParseError("GF order must be a prime power", headPos);
                s.p = p;
                s.k = 0;
                for (long m = q; m > 1; m /= p) ++s.k;
            }
            if (!is_prime(s.p)) throw ParseError("GF characteristic must be prime", headPos);
            if (s.k < 1) throw ParseError("GF degree must be >= 1", headPos);
            return s;
        }
        if (head == "mon") {
            advance();
            return parse_monalg(headPos);
        }
        if (head == "prod") {
            advance();
            expect_punct('(');
            RingSpec s;
            s.kind = RingSpec::Kind::Product;
            s.factors.push_back(parse_spec());
            while (cur_.kind == Token::Kind::Punct && cur_.text == ",") {
                advance();
                s.factors.push_back(parse_spec());
            }
            expect_punct(')');
            if (s.factors.size() < 2)
                throw ParseError("prod requires at least 2 factors", headPos);
            // Flatten nested products.
            std::vector<RingSpec> flat;
            for (auto& f : s.factors) {
                if (f.kind == RingSpec::Kind::Product)
                    for (auto& g : f.factors) flat.push_back(std::move(g));
                else
                    flat.push_back(std::move(f));
            }
            s.factors = std::move(flat);
            return s;
        }
        if (head == "table") {
            RingSpec s;
            s.kind = RingSpec::Kind::Table;
            s.tablePath = lex_.next_path().text;
            advance();
            return s;
        }
        throw ParseError("unknown ring constructor '" + head + "'", headPos);
    }

    RingSpec parse_monalg(size_t headPos) {
        RingSpec s;
        s.kind = RingSpec::Kind::MonAlg;
        s.coeffOrder = expect_int();
        if (prime_power_base(s.coeffOrder) == 0)
            throw ParseError("mon coefficient order must be a prime power", headPos);
        expect_punct('[');
        s.vars.push_back(expect_word());
        while (cur_.kind == Token::Kind::Punct && cur_.text == ",") {
            advance();
            s.vars.push_back(expect_word());
        }
        expect_punct(']');
        if (s.vars.size() > 4) throw ParseError("mon supports at most 4 variables", headPos);
        for (size_t i = 0; i < s.vars.size(); ++i)
            for (size_t j = i + 1; j < s.vars.size(); ++j)
                if (s.vars[i] == s.vars[j])
                    throw ParseError("repeated variable '" + s.vars[i] + "'", headPos);
        expect_punct('/');
        expect_punct('(');
        s.killed.push_back(parse_monomial(s.vars));
        while (cur_.kind == Token::Kind::Punct && cur_.text == ",") {
            advance();
            s.killed.push_back(parse_monomial(s.vars));
        }
        expect_punct(')');

        // Every variable must become nilpotent: some killed monomial must be
        // a pure power of it, otherwise the basis is infinite.
        for (size_t v = 0; v < s.vars.size(); ++v) {
            bool nil = false;
            for (const auto& m : s.killed) {
                bool pure = m[v] > 0;
                for (size_t w = 0; w < s.vars.size() && pure; ++w)
                    if (w != v && m[w] > 0) pure = false;
                if (pure) { nil = true; break; }
            }
            if (!nil)
                throw ParseError("killed set does not make variable '" + s.vars[v] +
                                     "' nilpotent",
                                 headPos);
        }
        return s;
    }

    std::vector<int> parse_monomial(const std::vector<std::string>& vars) {
        std::vector<int> exp(vars.size(), 0);
        bool sawAny = false;
        while (cur_.kind == Token::Kind::Word) {
            // A word may pack several single-letter variables, e.g. "xy".
            std::string w = cur_.text;
            size_t wpos = cur_.pos;
            advance();
            size_t consumed = 0;
            while (consumed < w.size()) {
                // Longest-match against the variable list.
                int match = -1;
                size_t matchLen = 0;
                for (size_t v = 0; v < vars.size(); ++v) {
                    const std::string& name = vars[v];
                    if (w.compare(consumed, name.size(), name) == 0 && name.size() > matchLen) {
                        match = static_cast<int>(v);
                        matchLen = name.size();
                    }
                }
                if (match < 0)
                    throw ParseError("unknown variable in monomial '" + w + "'", wpos);
                consumed += matchLen;
                int e = 1;
                if (consumed == w.size() && cur_.kind == Token::Kind::Punct && cur_.text == "^") {
                    advance();
                    e = static_cast<int>(expect_int());
                    if (e < 1) throw ParseError("monomial exponent must be >= 1", wpos);
                }
                exp[match] += e;
                sawAny = true;
            }
        }
        if (!sawAny) throw ParseError("expected monomial", cur_.pos);
        return exp;
    }
};

// ------------------------------------------------------- GF(p^k) arithmetic

// Polynomials over F_p as coefficient vectors, constant term first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, long p) {
    // m is monic of degree m.size()-1
    int dm = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        int c = a[d];
        if (c == 0) continue;
        for (int i = 0; i <= dm; ++i) {
            int& t = a[d - dm + i];
            t = static_cast<int>(((t - long(c) * m[i]) % p + p) % p);
        }
    }
    a.resize(dm);
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, long p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + long(a[i]) * b[j]) % p);
    return c;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<int>& m, long p) {
    int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> div(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// ordered by the base-p value of the lower coefficients.
std::vector<int> smallest_irreducible(long p, long k) {
    long count = 1;
    for (long i = 0; i < k; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        std::vector<int> m(k + 1, 0);
        long c = code;
        for (long i = 0; i < k; ++i) {
            m[i] = static_cast<int>(c % p);
            c /= p;
        }
        m[k] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw BuildError("no irreducible polynomial found (unreachable)");
}

std::string gf_label(long p, long k, int idx) {
    if (k == 1) return std::to_string(idx);
    std::string out;
    for (int d = static_cast<int>(k) - 1; d >= 0; --d) {
        long pw = 1;
        for (int i = 0; i < d; ++i) pw *= p;
        int c = static_cast<int>((idx / pw) % p);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += std::to_string(c);
        } else {
            if (c > 1) out += std::to_string(c);
            out += "a";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

FiniteRing build_zmod(long n) {
    FiniteRing R;
    R.order = static_cast<int>(n);
    R.addTable.resize(n * n);
    R.mulTable.resize(n * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            R.addTable[a * n + b] = static_cast<uint16_t>((a + b) % n);
            R.mulTable[a * n + b] = static_cast<uint16_t>((a * b) % n);
        }
    R.zero = 0;
    R.one = 1;
    R.labels.resize(n);
    for (long a = 0; a < n; ++a) R.labels[a] = std::to_string(a);
    return R;
}

FiniteRing build_gf(long p, long k, int orderCap) {
    long q = 1;
    for (long i = 0; i < k; ++i) {
        q *= p;
        if (q > orderCap) throw BuildError("GF order exceeds cap");
    }
    std::vector<int> mod = smallest_irreducible(p, k);

    auto decode = [&](int idx) {
        std::vector<int> c(k);
        long v = idx;
        for (long i = 0; i < k; ++i) {
            c[i] = static_cast<int>(v % p);
            v /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long v = 0;
        for (long i = k - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<int>(v);
    };

    FiniteRing R;
    R.order = static_cast<int>(q);
    R.addTable.resize(q * q);
    R.mulTable.resize(q * q);
    for (int a = 0; a < q; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<int> sum(k);
            for (long i = 0; i < k; ++i) sum[i] = static_cast<int>((ca[i] + cb[i]) % p);
            R.addTable[size_t(a) * q + b] = static_cast<uint16_t>(encode(sum));
            R.mulTable[size_t(a) * q + b] =
                static_cast<uint16_t>(encode(poly_mod(poly_mul(ca, cb, p), mod, p)));
        }
    }
    R.zero = 0;
    R.one = 1;
    R.labels.resize(q);
    for (int a = 0; a < q; ++a) R.labels[a] = gf_label(p, k, a);
    return R;
}

FiniteRing build_monalg(const RingSpec& spec, int orderCap) {
    long q = spec.coeffOrder;
    long p = prime_power_base(q);
    long k = 0;
    for (long m = q; m > 1; m /= p) ++k;
    FiniteRing F = build_gf(p, k, orderCap);  // coefficient field

    auto killed_divides = [&](const std::vector<int>& exp) {
        for (const auto& m : spec.killed) {
            bool div = true;
            for (size_t v = 0; v < exp.size(); ++v)
                if (m[v] > exp[v]) { div = false; break; }
            if (div) return true;
        }
        return false;
    };

    // Enumerate surviving monomials by breadth-first multiplication.
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, int> basisIndex;
    std::vector<std::vector<int>> frontier{std::vector<int>(spec.vars.size(), 0)};
    basis.push_back(frontier[0]);
    basisIndex[frontier[0]] = 0;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& m : frontier) {
            for (size_t v = 0; v < spec.vars.size(); ++v) {
                auto e = m;
                e[v]++;
                if (killed_divides(e) || basisIndex.count(e)) continue;
                basisIndex[e] = static_cast<int>(basis.size());
                basis.push_back(e);
                next.push_back(e);
                if (basis.size() > 64) throw BuildError("monomial basis too large");
            }
        }
        frontier = std::move(next);
    }
    // Deterministic basis order: total degree, then lexicographic exponents.
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    });
    basisIndex.clear();
    for (size_t i = 0; i < basis.size(); ++i) basisIndex[basis[i]] = static_cast<int>(i);

    size_t nb = basis.size();
    long order = 1;
    for (size_t i = 0; i < nb; ++i) {
        order *= q;
        if (order > orderCap) throw BuildError("monomial algebra order exceeds cap");
    }

    // Product of two basis monomials: basis index, or -1 when killed.
    std::vector<int> monProduct(nb * nb);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j) {
            std::vector<int> e(spec.vars.size());
            for (size_t v = 0; v < e.size(); ++v) e[v] = basis[i][v] + basis[j][v];
            if (killed_divides(e))
                monProduct[i * nb + j] = -1;
            else
                monProduct[i * nb + j] = basisIndex.at(e);
        }

    auto decode = [&](int idx) {
        std::vector<int> c(nb);
        long v = idx;
        for (size_t i = 0; i < nb; ++i) {
            c[i] = static_cast<int>(v % q);
            v /= q;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long v = 0;
        for (size_t i = nb; i-- > 0;) v = v * q + c[i];
        return static_cast<int>(v);
    };

    FiniteRing R;
    R.order = static_cast<int>(order);
    R.addTable.resize(size_t(order) * order);
    R.mulTable.resize(size_t(order) * order);
    for (int a = 0; a < order; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < order; ++b) {
            auto cb = decode(b);
            std::vector<int> sum(nb), prod(nb, F.zero);
            for (size_t i = 0; i < nb; ++i) sum[i] = F.add(ca[i], cb[i]);
            for (size_t i = 0; i < nb; ++i) {
                if (ca[i] == F.zero) continue;
                for (size_t j = 0; j < nb; ++j) {
                    if (cb[j] == F.zero) continue;
                    int t = monProduct[i * nb + j];
                    if (t < 0) continue;
                    prod[t] = F.add(prod[t], F.mul(ca[i], cb[j]));
                }
            }
            R.addTable[size_t(a) * order + b] = static_cast<uint16_t>(encode(sum));
            R.mulTable[size_t(a) * order + b] = static_cast<uint16_t>(encode(prod));
        }
    }
    R.zero = 0;
    std::vector<int> oneC(nb, F.zero);
    oneC[0] = F.one;
    R.one = encode(oneC);

    R.labels.resize(order);
    for (int a = 0; a < order; ++a) {
        auto c = decode(a);
        std::string out;
        for (size_t i = 0; i < nb; ++i) {
            if (c[i] == F.zero) continue;
            if (!out.empty()) out += "+";
            std::string coeff = F.labels[c[i]];
            std::string mono = monomial_text(spec.vars, basis[i]);
            if (mono == "1") {
                out += coeff;
            } else if (coeff == "1") {
                out += mono;
            } else if (coeff.find('+') != std::string::npos) {
                out += "(" + coeff + ")" + mono;
            } else {
                out += coeff + mono;
            }
        }
        R.labels[a] = out.empty() ? "0" : out;
    }
    return R;
}

FiniteRing build_product(const std::vector<FiniteRing>& factors, int orderCap) {
    long order = 1;
    std::vector<int> orders;
    for (const auto& f : factors) {
        order *= f.order;
        orders.push_back(f.order);
        if (order > orderCap) throw BuildError("product order exceeds cap");
    }

    FiniteRing R;
    R.order = static_cast<int>(order);
    R.addTable.resize(size_t(order) * order);
    R.mulTable.resize(size_t(order) * order);
    for (int a = 0; a < order; ++a) {
        auto ca = product_components(orders, a);
        for (int b = 0; b < order; ++b) {
            auto cb = product_components(orders, b);
            std::vector<int> sum(factors.size()), prod(factors.size());
            for (size_t i = 0; i < factors.size(); ++i) {
                sum[i] = factors[i].add(ca[i], cb[i]);
                prod[i] = factors[i].mul(ca[i], cb[i]);
            }
            R.addTable[size_t(a) * order + b] =
                static_cast<uint16_t>(product_index(orders, sum));
            R.mulTable[size_t(a) * order + b] =
                static_cast<uint16_t>(product_index(orders, prod));
        }
    }
    std::vector<int> zeros, ones;
    for (const auto& f : factors) {
        zeros.push_back(f.zero);
        ones.push_back(f.one);
    }
    R.zero = product_index(orders, zeros);
    R.one = product_index(orders, ones);

    R.labels.resize(order);
    for (int a = 0; a < order; ++a) {
        auto c = product_components(orders, a);
        std::string out = "(";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += ",";
            out += factors[i].labels[c[i]];
        }
        R.labels[a] = out + ")";
    }
    return R;
}

void finish_ring(FiniteRing& R, const RingSpec& spec) {
    R.provenance = spec;
    R.negTable.resize(R.order);
    for (int a = 0; a < R.order; ++a) {
        bool found = false;
        for (int b = 0; b < R.order; ++b)
            if (R.add(a, b) == R.zero) {
                R.negTable[a] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw BuildError("no additive inverse for element " + R.labels[a]);
    }
    if (R.order <= 256) check_ring_axioms(R);
}

}  // namespace

std::string RingSpec::text() const {
    switch (kind) {
        case Kind::Zmod:
            return "Z " + std::to_string(modulus);
        case Kind::GF:
            return "GF " + std::to_string(p) + " " + std::to_string(k);
        case Kind::MonAlg: {
            std::string out = "mon " + std::to_string(coeffOrder) + " [";
            for (size_t i = 0; i < vars.size(); ++i) {
                if (i) out += ",";
                out += vars[i];
            }
            out += "] / (";
            for (size_t i = 0; i < killed.size(); ++i) {
                if (i) out += ",";
                out += monomial_text(vars, killed[i]);
            }
            return out + ")";
        }
        case Kind::Product: {
            std::string out = "prod(";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out += ", ";
                out += factors[i].text();
            }
            return out + ")";
        }
        case Kind::Table:
            return "table " + tablePath;
    }
    return "?";
}

RingSpec parse_ring_spec(const std::string& text) {
    if (text.empty()) throw ParseError("empty ring spec", 0);
    return Parser(text).parse();
}

std::optional<int> FiniteRing::element_by_label(std::string_view label) const {
    for (int a = 0; a < order; ++a)
        if (labels[a] == label) return a;
    return std::nullopt;
}

int product_index(const std::vector<int>& factorOrders, const std::vector<int>& components) {
    int idx = 0;
    for (size_t i = factorOrders.size(); i-- > 0;) idx = idx * factorOrders[i] + components[i];
    return idx;
}

std::vector<int> product_components(const std::vector<int>& factorOrders, int index) {
    std::vector<int> c(factorOrders.size());
    for (size_t i = 0; i < factorOrders.size(); ++i) {
        c[i] = index % factorOrders[i];
        index /= factorOrders[i];
    }
    return c;
}

FiniteRing build_ring(const RingSpec& spec, int orderCap) {
    FiniteRing R;
    switch (spec.kind) {
        case RingSpec::Kind::Zmod:
            if (spec.modulus > orderCap) throw BuildError("Z n order exceeds cap");
            R = build_zmod(spec.modulus);
            break;
        case RingSpec::Kind::GF:
            R = build_gf(spec.p, spec.k, orderCap);
            break;
        case RingSpec::Kind::MonAlg:
            R = build_monalg(spec, orderCap);
            break;
        case RingSpec::Kind::Product: {
            std::vector<FiniteRing> factors;
            for (const auto& f : spec.factors) factors.push_back(build_ring(f, orderCap));
            R = build_product(factors, orderCap);
            break;
        }
        case RingSpec::Kind::Table:
            return load_table_ring(spec.tablePath);
    }
    finish_ring(R, spec);
    return R;
}

FiniteRing load_table_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BuildError("cannot open table file: " + path);

    auto expect_line = [&](const std::string& key) {
        std::string word;
        long value;
        if (!(in >> word >> value) || word != key)
            throw BuildError("table file: expected '" + key + " <int>'");
        return value;
    };

    long n = expect_line("order");
    if (n < 2 || n > 4096) throw BuildError("table file: order out of range");
    long zero = expect_line("zero");
    long one = expect_line("one");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw BuildError("table file: zero/one index out of range");

    FiniteRing R;
    R.order = static_cast<int>(n);
    R.zero = static_cast<int>(zero);
    R.one = static_cast<int>(one);
    R.addTable.resize(n * n);
    R.mulTable.resize(n * n);
    for (auto* table : {&R.addTable, &R.mulTable})
        for (long i = 0; i < n * n; ++i) {
            long v;
            if (!(in >> v)) throw BuildError("table file: truncated table");
            if (v < 0 || v >= n) throw BuildError("table file: entry out of range");
            (*table)[i] = static_cast<uint16_t>(v);
        }
    R.labels.resize(n);
    for (long a = 0; a < n; ++a) R.labels[a] = std::to_string(a);

    RingSpec spec;
    spec.kind = RingSpec::Kind::Table;
    spec.tablePath = path;
    R.provenance = spec;
    R.negTable.resize(n);
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b)
            if (R.add(a, b) == R.zero) {
                R.negTable[a] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        if (!found)
            throw BuildError("axiom violation: no additive inverse for element " +
                             std::to_string(a));
    }
    check_ring_axioms(R);
    return R;
}

Bitset units(const FiniteRing& R) {
    Bitset u(R.order);
    for (int a = 0; a < R.order; ++a)
        for (int b = 0; b < R.order; ++b)
            if (R.mul(a, b) == R.one) {
                u.set(a);
                break;
            }
    return u;
}

void check_ring_axioms(const FiniteRing& R) {
    const int n = R.order;
    auto fail = [&](const std::string& axiom, int a, int b, int c = -1) {
        std::string msg = "axiom violation: " + axiom + " at a=" + std::to_string(a) +
                          " b=" + std::to_string(b);
        if (c >= 0) msg += " c=" + std::to_string(c);
        throw BuildError(msg);
    };

    if (R.zero == R.one) throw BuildError("axiom violation: zero equals one");
    for (int a = 0; a < n; ++a) {
        if (R.add(a, R.zero) != a) fail("additive identity", a, R.zero);
        if (R.mul(a, R.one) != a) fail("multiplicative identity", a, R.one);
        bool hasInverse = false;
        for (int b = 0; b < n; ++b)
            if (R.add(a, b) == R.zero) hasInverse = true;
        if (!hasInverse) fail("additive inverse", a, R.zero);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (R.add(a, b) != R.add(b, a)) fail("addition commutativity", a, b);
            if (R.mul(a, b) != R.mul(b, a)) fail("multiplication commutativity", a, b);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                    fail("addition associativity", a, b, c);
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    fail("multiplication associativity", a, b, c);
                if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
                    fail("distributivity", a, b, c);
            }
}

}  // namespace pis
