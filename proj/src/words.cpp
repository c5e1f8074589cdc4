#include "mzv/words.hpp"

#include <algorithm>
#include <cctype>

namespace mzv {

Letter Letter::z(int s) {
    if (s < 1) throw DomainError("z letters need s >= 1, got " + std::to_string(s));
    Letter l;
    l.kind = Kind::Z;
    l.s = s;
    return l;
}

Letter Letter::x(int bit) {
    if (bit != 0 && bit != 1) throw DomainError("binary letter must be 0 or 1");
    Letter l;
    l.kind = Kind::X;
    l.s = bit;
    return l;
}

Letter Letter::zr(int s, const RatFunc& r) {
    Letter l;
    l.kind = Kind::ZR;
    l.s = s;
    l.r = r;
    return l;
}

Letter Letter::gen(int id, int grade) {
    Letter l;
    l.kind = Kind::GEN;
    l.s = grade;
    l.gens = {id};
    return l;
}

int Letter::grade() const {
    switch (kind) {
    case Kind::Z: return s;
    case Kind::X: return 1;
    case Kind::ZR: return s < 0 ? -s : s;
    case Kind::GEN: return s;
    }
    return 0;
}

bool has_letter_product(Letter::Kind k) { return k != Letter::Kind::X; }

Letter merge(const Letter& a, const Letter& b) {
    if (a.kind != b.kind) throw AlphabetMismatch("cannot merge letters of different alphabets");
    switch (a.kind) {
    case Letter::Kind::Z: return Letter::z(a.s + b.s);
    case Letter::Kind::X: throw UnsupportedMerge("binary letters have no product");
    case Letter::Kind::ZR: return Letter::zr(a.s + b.s, a.r + b.r);
    case Letter::Kind::GEN: {
        Letter l = a;
        l.s += b.s;
        l.gens.insert(l.gens.end(), b.gens.begin(), b.gens.end());
        std::sort(l.gens.begin(), l.gens.end());
        return l;
    }
    }
    throw UnsupportedMerge("unknown alphabet");
}

int weight(const Word& w) {
    int total = 0;
    for (const auto& l : w) total += l.grade();
    return total;
}

Word z_word(const std::vector<int>& composition) {
    Word w;
    for (int s : composition) w.push_back(Letter::z(s));
    return w;
}

Word x_word(const std::vector<int>& bits) {
    Word w;
    for (int b : bits) w.push_back(Letter::x(b));
    return w;
}

std::vector<int> composition_of(const Word& w) {
    std::vector<int> s;
    for (const auto& l : w) {
        if (l.kind != Letter::Kind::Z) throw AlphabetMismatch("expected a composition word");
        s.push_back(l.s);
    }
    return s;
}

namespace detail {

void check_alphabet(const Word& a, const Word& b, bool need_product) {
    const Letter* first = !a.empty() ? &a.front() : (!b.empty() ? &b.front() : nullptr);
    if (!first) return;
    for (const Word* w : {&a, &b})
        for (const auto& l : *w)
            if (l.kind != first->kind) throw AlphabetMismatch("words from different alphabets");
    if (need_product && !a.empty() && !b.empty() && !has_letter_product(first->kind))
        throw UnsupportedMerge("merged shuffles need a letter product");
}

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& f) {
    // bit i of mask set means "cut after position i"
    std::vector<int> parts;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        parts.clear();
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        f(parts);
    }
}

Letter merge_run(const Word& w, std::size_t from, std::size_t len) {
    Letter l = w[from];
    for (std::size_t i = 1; i < len; ++i) l = merge(l, w[from + i]);
    return l;
}

} // namespace detail

std::vector<StufflePair> stuffle_pairs(int k, int l, int r) {
    if (k < 1 || l < 1) throw DomainError("stuffle_pairs needs k, l >= 1");
    if (r < 0 || r > std::min(k, l)) throw DomainError("stuffle_pairs: r out of range");
    std::vector<StufflePair> out;
    const int n = k + l - r;
    StufflePair cur;
    // each position takes the next a-letter, the next b-letter, or both
    std::function<void(int, int, int, int)> go = [&](int pos, int i, int j, int merged) {
        const int rest = r - merged;
        if (rest < 0 || rest > std::min(k - i, l - j) || (k - i) + (l - j) - rest != n - pos) return;
        if (pos == n) {
            if (i == k && j == l && merged == r) out.push_back(cur);
            return;
        }
        if (i < k) {
            cur.phi.push_back(pos + 1);
            go(pos + 1, i + 1, j, merged);
            cur.phi.pop_back();
        }
        if (j < l) {
            cur.psi.push_back(pos + 1);
            go(pos + 1, i, j + 1, merged);
            cur.psi.pop_back();
        }
        if (i < k && j < l && merged < r) {
            cur.phi.push_back(pos + 1);
            cur.psi.push_back(pos + 1);
            go(pos + 1, i + 1, j + 1, merged + 1);
            cur.phi.pop_back();
            cur.psi.pop_back();
        }
    };
    go(0, 0, 0, 0);
    return out;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.size() + 1);
    for (std::size_t j = 0; j <= w.size(); ++j)
        out.emplace_back(Word(w.begin(), w.begin() + j), Word(w.begin() + j, w.end()));
    return out;
}

Word x_to_z(const Word& w) {
    Word out;
    int run = 0;
    for (const auto& l : w) {
        if (l.kind != Letter::Kind::X) throw AlphabetMismatch("x_to_z expects a binary word");
        if (l.s == 0) {
            ++run;
        } else {
            out.push_back(Letter::z(run + 1));
            run = 0;
        }
    }
    if (run != 0) throw DomainError("binary word must end in x1");
    return out;
}

Word z_to_x(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (l.kind != Letter::Kind::Z) throw AlphabetMismatch("z_to_x expects a composition word");
        for (int i = 1; i < l.s; ++i) out.push_back(Letter::x(0));
        out.push_back(Letter::x(1));
    }
    return out;
}

bool is_admissible(const std::vector<int>& s) {
    if (s.empty() || s.front() < 2) return false;
    return std::all_of(s.begin(), s.end(), [](int v) { return v >= 1; });
}

std::vector<int> tau_dual(const std::vector<int>& s) {
    if (!is_admissible(s)) throw DomainError("duality needs an admissible composition");
    Word x = z_to_x(z_word(s));
    std::reverse(x.begin(), x.end());
    for (auto& l : x) l.s = 1 - l.s;
    return composition_of(x_to_z(x));
}

WordSum<RatFunc> word_d(const Word& w) {
    WordSum<RatFunc> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].kind != Letter::Kind::ZR) throw AlphabetMismatch("word_d acts on (s, r) letters");
        Word nw = w;
        nw[i].s -= 1;
        out.add(std::move(nw), w[i].r);
    }
    return out;
}

WordSum<RatFunc> word_d(const WordSum<RatFunc>& u) {
    WordSum<RatFunc> out;
    for (const auto& [w, c] : u.terms()) out += word_d(w).scaled(c);
    return out;
}

// ---- text forms -------------------------------------------------------------

namespace {

std::string strip(std::string_view t) {
    std::string s;
    for (char ch : t)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    return s;
}

} // namespace

Word parse_z_word(std::string_view text) {
    const std::string s = strip(text);
    Word w;
    if (s.empty()) return w;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        if (!tok.empty() && (tok[0] == 'z' || tok[0] == 'Z')) tok.erase(0, 1);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a positive integer", pos);
        const int v = std::stoi(tok);
        if (v < 1) throw ParseError("composition entries must be >= 1", pos);
        w.push_back(Letter::z(v));
        if (end == s.size()) break;
        pos = end + 1;
    }
    return w;
}

Word parse_x_word(std::string_view text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch != '0' && ch != '1') throw ParseError("binary words use the digits 0 and 1", i);
        w.push_back(Letter::x(ch - '0'));
    }
    return w;
}

Word parse_zr_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        const std::size_t bar = text.find('|', i);
        const std::size_t close = text.find(')', i);
        if (bar == std::string_view::npos || close == std::string_view::npos || bar > close)
            throw ParseError("expected '(s|r)'", i);
        const std::string sv = strip(text.substr(i + 1, bar - i - 1));
        int s = 0;
        try {
            std::size_t used = 0;
            s = std::stoi(sv, &used);
            if (used != sv.size()) throw ParseError("bad exponent", i + 1);
        } catch (const std::logic_error&) {
            throw ParseError("bad exponent", i + 1);
        }
        RatFunc r;
        try {
            r = RatFunc::parse(text.substr(bar + 1, close - bar - 1));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), bar + 1 + e.position());
        }
        w.push_back(Letter::zr(s, r));
        i = close + 1;
        skip();
    }
    return w;
}

std::string render_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        switch (l.kind) {
        case Letter::Kind::Z: out += "z" + std::to_string(l.s); break;
        case Letter::Kind::X: out += std::to_string(l.s); break;
        case Letter::Kind::ZR: out += "(" + std::to_string(l.s) + "|" + l.r.str() + ")"; break;
        case Letter::Kind::GEN: {
            out += "[";
            for (std::size_t i = 0; i < l.gens.size(); ++i) out += (i ? " g" : "g") + std::to_string(l.gens[i]);
            out += "]";
            break;
        }
        }
    }
    return out;
}

std::string render_coeff(const Rational& c) { return c.str(); }

std::string render_coeff(const RatFunc& c) {
    if (c.is_constant()) return c.constant().str();
    return "(" + c.str() + ")";
}

} // namespace mzv
