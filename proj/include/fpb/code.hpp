#ifndef FPB_CODE_HPP
#define FPB_CODE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpb {

/// Feet of one band: first and second occurrence of its label, as 1-based
/// positions counterclockwise along the disk boundary.
struct FootPair {
    int first;
    int second;
};

/// Unlabelled chord diagram: a fixed-point-free involution on 2n boundary
/// positions. Positions are 1-based in every public accessor.
class UnderlyingDiagram {
public:
    /// `partner[k]` is the 1-based mate of position k+1. Throws
    /// Error(InvalidMatching) unless this is a fixed-point-free involution.
    explicit UnderlyingDiagram(std::vector<int> partner);

    int bands() const { return static_cast<int>(partner_.size() / 2); }
    int points() const { return static_cast<int>(partner_.size()); }
    int partner(int position) const { return partner_[static_cast<std::size_t>(position - 1)]; }
    const std::vector<int>& partners() const { return partner_; }

    /// Chords as (smaller, larger) position pairs, sorted by smaller endpoint.
    std::vector<FootPair> chords() const;

    /// Same matching after moving the basepoint k steps (position p -> p-k).
    UnderlyingDiagram rotated(int k) const;

    friend auto operator<=>(const UnderlyingDiagram&, const UnderlyingDiagram&) = default;
    friend bool operator==(const UnderlyingDiagram&, const UnderlyingDiagram&) = default;

private:
    std::vector<int> partner_;
};

/// Parse a matching given either as a partner list ("3,4,1,2") or as pairs
/// ("1-3 2-4"). Throws Error(EmptyInput | InvalidMatching).
UnderlyingDiagram parse_matching(std::string_view text);

/// A flat basket code: a word of length 2n in which each label 1..n occurs
/// exactly twice. Labels are page order; rotating the word keeps the surface,
/// relabelling does not.
class FlatBasketCode {
public:
    /// Validates the word. Throws Error(EmptyInput | MalformedCode | NonContiguousLabels).
    explicit FlatBasketCode(std::vector<int> word);

    int bands() const { return static_cast<int>(word_.size() / 2); }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    /// Label at 1-based position.
    int at(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
    /// Feet of 1-based label.
    const FootPair& feet(int label) const { return feet_[static_cast<std::size_t>(label - 1)]; }

    /// "(1,2,1,2)"
    std::string to_string() const;

    friend auto operator<=>(const FlatBasketCode& a, const FlatBasketCode& b) { return a.word_ <=> b.word_; }
    friend bool operator==(const FlatBasketCode& a, const FlatBasketCode& b) { return a.word_ == b.word_; }

private:
    std::vector<int> word_;
    std::vector<FootPair> feet_;
};

struct SurfaceStats {
    int bands;
    int euler_characteristic;
    int boundary_components;
    int genus;
};

/// Accepts integers separated by commas and/or whitespace, with optional
/// surrounding parentheses, e.g. "(1,2,3,4,1,2,3,4)".
FlatBasketCode parse_code(std::string_view text);

UnderlyingDiagram underlying(const FlatBasketCode& code);

/// Number of cycles of successor∘matching, which is the number of boundary
/// components of disk-plus-untwisted-bands.
int boundary_components(const UnderlyingDiagram& diagram);
int boundary_components(const FlatBasketCode& code);

SurfaceStats surface_stats(const FlatBasketCode& code);

/// Word rotated so that it starts at 0-based index k.
std::vector<int> rotate_word(const std::vector<int>& word, int k);

/// Lexicographically least rotation of the word (labels untouched).
FlatBasketCode canonicalize(const FlatBasketCode& code);
std::vector<int> canonical_rotation(const std::vector<int>& word);

/// Replace every label x by perm[x-1], then canonicalize. Throws
/// Error(InvalidPermutation) unless perm is a bijection on 1..n.
FlatBasketCode relabel(const FlatBasketCode& code, const std::vector<int>& perm);

/// Word read backwards with labels kept; the surface seen from the other side.
FlatBasketCode reversed(const FlatBasketCode& code);

/// Word read backwards with label x -> n+1-x, canonicalized.
FlatBasketCode mirrored(const FlatBasketCode& code);

/// Label the chords of a matching: chord k (ordered by smaller endpoint)
/// receives labels[k]. The word is not canonicalized.
FlatBasketCode label_matching(const UnderlyingDiagram& diagram, const std::vector<int>& labels);

}  // namespace fpb

#endif  // FPB_CODE_HPP
