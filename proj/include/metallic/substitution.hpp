#pragma once

#include "metallic/pattern.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace metallic {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// A 2-D substitution from letters 0..k-1 to rectangular patterns over
// letters 0..codomain_size-1.
struct Substitution2D {
    std::vector<Pattern2D> images;
    int codomain_size = 0;
    // Optional display names for domain letters.
    std::vector<std::string> names;

    int domain_size() const { return static_cast<int>(images.size()); }
    const Pattern2D& operator[](int a) const { return images.at(static_cast<std::size_t>(a)); }
    bool is_endomorphism() const { return codomain_size == domain_size(); }
};

// Block-substitutes every cell; anchored at the lower-left corner.
// Throws AlignmentError when images in a row differ in height or images
// in a column differ in width.
Pattern2D apply(const Substitution2D& s, const Pattern2D& p);

// s after t: letter a maps to apply(s, t(a)).
Substitution2D compose(const Substitution2D& s, const Substitution2D& t);

// The m-th power of an endomorphism.
Substitution2D power(const Substitution2D& s, int m);

// Entry [b][a] counts occurrences of b in s(a).
IntMatrix incidence(const Substitution2D& s);

// The same substitution with letters renamed: domain letter a becomes
// domain_map[a], codomain letter c becomes codomain_map[c].
Substitution2D relabel(const Substitution2D& s, const std::vector<int>& domain_map,
                       const std::vector<int>& codomain_map);

// Shape-(w,h) subwords of the substitutive subshift, for shapes up to
// 2x2. Iterates to a fixpoint; throws ResourceError after max_rounds.
std::set<Pattern2D> substitutive_language(const Substitution2D& s, int w, int h, int max_rounds = 50);

} // namespace metallic
