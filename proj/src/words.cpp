#include "arbor/words.hpp"

#include <cctype>

namespace arbor {

std::optional<YLetter> LetterTraits<YLetter>::parse(std::string_view token) {
    if (token.size() < 2 || token[0] != 'y') return std::nullopt;
    long value = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
        value = value * 10 + (token[i] - '0');
        if (value > 1'000'000) return std::nullopt;
    }
    if (value < 1) return std::nullopt;
    return YLetter{static_cast<int>(value)};
}

template <typename L>
Word<L> parse_word(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("unexpected input after empty word 'e'", pos);
        return Word<L>{};
    }
    Word<L> w;
    while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a letter", start);
        auto token = text.substr(start, pos - start);
        auto letter = LetterTraits<L>::parse(token);
        if (!letter)
            throw ParseError("unknown letter '" + std::string(token) + "' for alphabet " +
                                 std::string(1, LetterTraits<L>::prefix),
                             start);
        w.letters.push_back(*letter);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '.') throw ParseError("expected '.' between letters", pos);
        ++pos;
    }
    return w;
}

template Word<XLetter> parse_word<XLetter>(std::string_view);
template Word<YLetter> parse_word<YLetter>(std::string_view);

int weight(const YWord& w) {
    int total = 0;
    for (const auto& l : w.letters) total += l.index;
    return total;
}

XWord s_map(const YWord& w) {
    XWord out;
    out.letters.reserve(static_cast<std::size_t>(weight(w)));
    for (const auto& l : w.letters) {
        out.letters.insert(out.letters.end(), static_cast<std::size_t>(l.index - 1), XLetter::x0);
        out.letters.push_back(XLetter::x1);
    }
    return out;
}

LinComb<XWord> s_map(const LinComb<YWord>& a) {
    LinComb<XWord> r;
    for (const auto& [w, c] : a) r.add_term(s_map(w), c);
    return r;
}

YWord s_inverse(const XWord& v) {
    if (!v.empty() && v.letters.back() != XLetter::x1)
        throw std::invalid_argument("word " + to_string(v) + " does not end in x1");
    YWord out;
    int run = 0;
    for (auto l : v.letters) {
        ++run;
        if (l == XLetter::x1) {
            out.letters.push_back(YLetter{run});
            run = 0;
        }
    }
    return out;
}

LinComb<YWord> s_inverse(const LinComb<XWord>& a) {
    LinComb<YWord> r;
    for (const auto& [v, c] : a) r.add_term(s_inverse(v), c);
    return r;
}

std::vector<YWord> y_words_of_weight(int w) {
    std::vector<YWord> out;
    if (w < 0) return out;
    YWord current;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int n = 1; n <= remaining; ++n) {
            current.letters.push_back(YLetter{n});
            self(self, remaining - n);
            current.letters.pop_back();
        }
    };
    recurse(recurse, w);
    return out;
}

std::vector<YWord> y_words_of_length(int length, int max_index) {
    std::vector<YWord> out{YWord{}};
    for (int i = 0; i < length; ++i) {
        std::vector<YWord> next;
        next.reserve(out.size() * static_cast<std::size_t>(max_index));
        for (const auto& w : out)
            for (int n = 1; n <= max_index; ++n) next.push_back(w.appended(YLetter{n}));
        out = std::move(next);
    }
    return out;
}

std::vector<XWord> x_words_of_length(int length) {
    std::vector<XWord> out{XWord{}};
    for (int i = 0; i < length; ++i) {
        std::vector<XWord> next;
        next.reserve(out.size() * 2);
        for (const auto& w : out) {
            next.push_back(w.appended(XLetter::x0));
            next.push_back(w.appended(XLetter::x1));
        }
        out = std::move(next);
    }
    return out;
}

bool is_convergent(const YWord& w) { return w.empty() || w[0].index != 1; }

bool is_convergent(const XWord& v) {
    return v.empty() || (v.letters.front() == XLetter::x0 && v.letters.back() == XLetter::x1);
}

}  // namespace arbor
