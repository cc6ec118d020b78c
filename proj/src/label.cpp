#include "metallic/label.hpp"

#include "metallic/errors.hpp"

#include <algorithm>
#include <cctype>

namespace metallic {

Label::Label(std::initializer_list<int> digits) : digits_(digits) {
    for (int d : digits_)
        if (d < 0) throw DomainError("label digits must be nonnegative");
}

Label::Label(std::vector<int> digits) : digits_(std::move(digits)) {
    for (int d : digits_)
        if (d < 0) throw DomainError("label digits must be nonnegative");
}

Label Label::parse(std::string_view text) {
    std::vector<int> out;
    if (text.find('-') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('-', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view part = text.substr(start, end - start);
            if (part.empty()) throw DomainError("empty component in label '" + std::string(text) + "'");
            int value = 0;
            for (char c : part) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw DomainError("bad label '" + std::string(text) + "'");
                value = value * 10 + (c - '0');
            }
            out.push_back(value);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("bad label '" + std::string(text) + "'");
            out.push_back(c - '0');
        }
    }
    if (out.empty()) throw DomainError("empty label");
    return Label(std::move(out));
}

bool Label::in_v(int n) const {
    if (!is_triple()) return false;
    const int a = digits_[0], b = digits_[1], c = digits_[2];
    return 0 <= a && a <= b && b <= 1 && b <= c && c <= n + 1;
}

std::string Label::str() const {
    const bool wide = std::any_of(digits_.begin(), digits_.end(), [](int d) { return d >= 10; });
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (wide && i > 0) s += '-';
        s += std::to_string(digits_[i]);
    }
    return s;
}

Label Label::operator+(const Label& other) const {
    std::vector<int> d = digits_;
    d.insert(d.end(), other.digits_.begin(), other.digits_.end());
    return Label(std::move(d));
}

std::vector<Label> all_labels(int n) {
    if (n < 1) throw DomainError("n must be positive");
    std::vector<Label> out;
    for (int a = 0; a <= 1; ++a)
        for (int b = a; b <= 1; ++b)
            for (int c = b; c <= n + 1; ++c) out.push_back(Label{a, b, c});
    return out;
}

std::string join_labels(const std::vector<Label>& word, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) s += sep;
        s += word[i].str();
    }
    return s;
}

} // namespace metallic
