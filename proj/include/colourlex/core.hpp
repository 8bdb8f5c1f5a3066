#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace colourlex {

/// The eleven basic colour terms. Enumerator order is the Berlin & Kay order,
/// so `static_cast<int>(c) + 1` is the B&K rank.
enum class Colour : std::uint8_t {
  white,
  black,
  red,
  green,
  yellow,
  blue,
  brown,
  pink,
  purple,
  orange,
  grey,
};

inline constexpr std::size_t kColourCount = 11;

constexpr int bk_rank(Colour c) { return static_cast<int>(c) + 1; }
constexpr std::size_t index_of(Colour c) { return static_cast<std::size_t>(c); }
constexpr Colour colour_at(std::size_t index) { return static_cast<Colour>(index); }

/// All colours sorted by B&K rank.
const std::array<Colour, kColourCount>& colour_order();

std::string_view colour_name(Colour c);

/// Case-insensitive; accepts "gray" for grey.
std::optional<Colour> parse_colour(std::string_view name);

/// Vote vector / co-occurrence row over the eleven colours.
class ColourCounts {
 public:
  ColourCounts() = default;

  std::int64_t operator[](Colour c) const { return counts_[index_of(c)]; }
  void add(Colour c, std::int64_t n = 1);

  std::int64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::array<std::int64_t, kColourCount>& values() const { return counts_; }

  /// Largest single count; 0 for an empty vector.
  std::int64_t max_count() const;
  /// Colours attaining max_count(), in B&K order. Empty when total() == 0.
  std::vector<Colour> argmax() const;

  ColourCounts& operator+=(const ColourCounts& other);
  friend ColourCounts operator+(ColourCounts a, const ColourCounts& b) { return a += b; }
  bool operator==(const ColourCounts&) const = default;

 private:
  std::array<std::int64_t, kColourCount> counts_{};
  std::int64_t total_ = 0;
};

/// A small set of colours.
class ColourSet {
 public:
  ColourSet() = default;
  ColourSet(std::initializer_list<Colour> colours);
  static ColourSet all();

  bool contains(Colour c) const { return (bits_ >> index_of(c)) & 1U; }
  void insert(Colour c) { bits_ |= 1U << index_of(c); }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  /// Members in B&K order.
  std::vector<Colour> members() const;

  friend ColourSet operator&(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & b.bits_); }
  bool operator==(const ColourSet&) const = default;

 private:
  explicit ColourSet(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

/// Highest-scoring admissible colour; ties go to the lower B&K rank.
/// Returns nullopt when no admissible colour has a positive score.
std::optional<Colour> argmax_colour(const std::array<double, kColourCount>& scores,
                                    ColourSet admissible = ColourSet::all());

enum class Polarity { positive, negative };

std::string_view polarity_name(Polarity p);

/// positive: white, green, yellow, blue, pink, orange.
/// negative: black, red, brown, grey. Purple belongs to neither.
ColourSet polarity_colour_set(Polarity p);

struct WordSense {
  std::string term;
  std::string category_id;

  auto operator<=>(const WordSense&) const = default;
};

struct LexiconEntry {
  WordSense sense;
  std::string near_synonym;
  ColourCounts votes;
  Colour majority = Colour::white;

  double confidence() const {
    return votes.total() == 0 ? 0.0
                              : static_cast<double>(votes[majority]) / static_cast<double>(votes.total());
  }
  /// Size of the majority class before any tie-breaking.
  std::int64_t majority_class_size() const { return votes.max_count(); }
};

struct ThesaurusCategory {
  std::string id;
  std::string head;
  std::vector<std::string> members;
};

/// Lowercase ASCII copy.
std::string to_lower(std::string_view s);

}  // namespace colourlex
