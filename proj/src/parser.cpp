#include "hc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hc {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        return s_[pos_++];
    }
    size_t offset() const { return pos_; }

    Int integer() {
        skip_ws();
        const size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits.push_back(s_[pos_]);
            ++pos_;
        }
        if (digits.empty()) throw ParseError("expected an integer", start);
        return Int(digits);
    }

    long small_integer(const char* what) {
        skip_ws();
        const size_t start = pos_;
        Int v = integer();
        if (!v.fits_slong_p()) throw ParseError(std::string(what) + " too large", start);
        return v.get_si();
    }

private:
    std::string_view s_;
    size_t pos_ = 0;
};

} // namespace

SparsePoly parse_poly(std::string_view text, int max_vars, int min_nvars) {
    Cursor cur(text);
    SparsePoly p(min_nvars);
    if (cur.eof()) throw ParseError("empty polynomial", cur.offset());

    bool first_term = true;
    while (true) {
        int sign = 1;
        if (first_term) {
            if (cur.peek() == '-') {
                cur.take();
                sign = -1;
            } else if (cur.peek() == '+') {
                throw ParseError("unary '+' is not part of the grammar", cur.offset());
            }
        } else {
            const char op = cur.take();
            if (op == '-') sign = -1;
            else if (op != '+') throw ParseError("expected '+' or '-'", cur.offset() - 1);
        }
        first_term = false;

        // term: optional integer coefficient, then factors joined by '*'.
        Int coeff = 1;
        Monomial mono = Monomial::one();
        bool saw_factor = false;

        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = cur.integer();
            if (cur.peek() == '*') {
                cur.take();
            } else {
                // bare integer constant term
                p.add_term(mono, sign * coeff);
                if (cur.eof()) break;
                c = cur.peek();
                if (c == '+' || c == '-') continue;
                throw ParseError("expected '+', '-' or end of input", cur.offset());
            }
        } else if (c == '(') {
            throw ParseError("parentheses are not part of the grammar", cur.offset());
        }

        while (true) {
            if (cur.peek() != 'x')
                throw ParseError("expected a variable factor 'x<index>'", cur.offset());
            cur.take();
            const size_t idx_off = cur.offset();
            const long idx = cur.small_integer("variable index");
            if (idx < 0 || idx >= max_vars)
                throw ParseError("variable index exceeding declared nvars", idx_off);
            long exp = 1;
            if (cur.peek() == '^') {
                cur.take();
                const size_t e_off = cur.offset();
                exp = cur.small_integer("exponent");
                if (exp < 0 || exp > 1'000'000) throw ParseError("exponent out of range", e_off);
            }
            mono = mono.times(Monomial::var(static_cast<int>(idx),
                                            static_cast<uint32_t>(exp)));
            saw_factor = true;
            if (cur.peek() == '*') {
                cur.take();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term", cur.offset());
        p.add_term(mono, sign * coeff);

        if (cur.eof()) break;
        c = cur.peek();
        if (c != '+' && c != '-')
            throw ParseError("expected '+', '-' or end of input", cur.offset());
    }
    return p;
}

SparsePoly parse_poly_file(const std::string& path, int max_vars) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
    std::ostringstream text;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text << line << ' ';
    }
    return parse_poly(text.str(), max_vars);
}

} // namespace hc
