#include "colourlex/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace colourlex {

namespace {

constexpr std::array<std::string_view, kColourCount> kNames = {
    "white", "black", "red", "green", "yellow", "blue", "brown", "pink", "purple", "orange", "grey"};

}  // namespace

const std::array<Colour, kColourCount>& colour_order() {
  static const std::array<Colour, kColourCount> order = [] {
    std::array<Colour, kColourCount> out{};
    for (std::size_t i = 0; i < kColourCount; ++i) out[i] = colour_at(i);
    return out;
  }();
  return order;
}

std::string_view colour_name(Colour c) { return kNames.at(index_of(c)); }

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::optional<Colour> parse_colour(std::string_view name) {
  const std::string lower = to_lower(name);
  if (lower == "gray") return Colour::grey;
  for (std::size_t i = 0; i < kColourCount; ++i) {
    if (kNames[i] == lower) return colour_at(i);
  }
  return std::nullopt;
}

void ColourCounts::add(Colour c, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("ColourCounts::add: negative count");
  counts_[index_of(c)] += n;
  total_ += n;
}

std::int64_t ColourCounts::max_count() const { return *std::max_element(counts_.begin(), counts_.end()); }

std::vector<Colour> ColourCounts::argmax() const {
  std::vector<Colour> out;
  if (total_ == 0) return out;
  const auto best = max_count();
  for (std::size_t i = 0; i < kColourCount; ++i) {
    if (counts_[i] == best) out.push_back(colour_at(i));
  }
  return out;
}

ColourCounts& ColourCounts::operator+=(const ColourCounts& other) {
  for (std::size_t i = 0; i < kColourCount; ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
  return *this;
}

ColourSet::ColourSet(std::initializer_list<Colour> colours) {
  for (auto c : colours) insert(c);
}

ColourSet ColourSet::all() { return ColourSet(static_cast<std::uint16_t>((1U << kColourCount) - 1)); }

std::size_t ColourSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Colour> ColourSet::members() const {
  std::vector<Colour> out;
  for (auto c : colour_order()) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::optional<Colour> argmax_colour(const std::array<double, kColourCount>& scores, ColourSet admissible) {
  std::optional<Colour> best;
  double best_score = 0.0;
  // Strict comparison in B&K order keeps the lowest-ranked colour on ties.
  for (auto c : colour_order()) {
    if (!admissible.contains(c)) continue;
    const double s = scores[index_of(c)];
    if (s > best_score) {
      best_score = s;
      best = c;
    }
  }
  return best;
}

std::string_view polarity_name(Polarity p) { return p == Polarity::positive ? "positive" : "negative"; }

ColourSet polarity_colour_set(Polarity p) {
  if (p == Polarity::positive) {
    return {Colour::white, Colour::green, Colour::yellow, Colour::blue, Colour::pink, Colour::orange};
  }
  return {Colour::black, Colour::red, Colour::brown, Colour::grey};
}

}  // namespace colourlex
