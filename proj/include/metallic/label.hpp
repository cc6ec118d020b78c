#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace metallic {

// An edge color. Metallic labels are digit triples (v0, v1, v2); fused
// tiles carry concatenations of triples and custom sets may use any
// nonempty digit sequence.
class Label {
public:
    Label() = default;
    Label(std::initializer_list<int> digits);
    explicit Label(std::vector<int> digits);

    // Parses "012", "0-1-12" or a single run of digits.
    static Label parse(std::string_view text);

    const std::vector<int>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    int operator[](std::size_t i) const { return digits_[i]; }

    int v0() const { return digits_.at(0); }
    int v1() const { return digits_.at(1); }
    int v2() const { return digits_.at(2); }

    bool is_triple() const { return digits_.size() == 3; }
    // Membership in V_n: 0 <= v0 <= v1 <= 1 and v1 <= v2 <= n+1.
    bool in_v(int n) const;

    std::string str() const;

    Label operator+(const Label& other) const;

    auto operator<=>(const Label&) const = default;
    bool operator==(const Label&) const = default;

private:
    std::vector<int> digits_;
};

// All labels of V_n in lexicographic order; |V_n| = 3n + 4.
std::vector<Label> all_labels(int n);

std::string join_labels(const std::vector<Label>& word, std::string_view sep = ",");

} // namespace metallic
