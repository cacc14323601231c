#include "hyperoct/index_set.hpp"

#include <bit>
#include <charconv>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

void check_ambient(unsigned ambient) {
  if (ambient == 0 || ambient > IndexSet::kMaxAmbient) {
    fail(ErrorCode::OutOfRange,
         "index set ambient degree must be in [1, 63], got " +
             std::to_string(ambient));
  }
}

std::uint64_t all_bits(unsigned ambient) {
  return (std::uint64_t{1} << ambient) - 1;
}

}  // namespace

IndexSet::IndexSet(unsigned ambient) : ambient_(ambient) {
  check_ambient(ambient);
}

IndexSet::IndexSet(unsigned ambient, std::initializer_list<unsigned> members)
    : IndexSet(ambient) {
  for (unsigned i : members) *this = with(i);
}

IndexSet IndexSet::from_mask(unsigned ambient, std::uint64_t mask) {
  IndexSet s(ambient);
  if ((mask & ~all_bits(ambient)) != 0) {
    fail(ErrorCode::OutOfRange, "subset mask has members outside [" +
                                    std::to_string(ambient - 1) + "]_0");
  }
  s.mask_ = mask;
  return s;
}

IndexSet IndexSet::full(unsigned ambient) {
  return from_mask(ambient, all_bits(ambient));
}

IndexSet IndexSet::parse(unsigned ambient, std::string_view text) {
  IndexSet s(ambient);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return s;
  while (true) {
    skip_ws();
    unsigned value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      fail(ErrorCode::InvalidArgument,
           "malformed subset '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    if (value >= ambient) {
      fail(ErrorCode::OutOfRange,
           std::to_string(value) + " is not in [" + std::to_string(ambient - 1) +
               "]_0");
    }
    s.mask_ |= std::uint64_t{1} << value;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      fail(ErrorCode::InvalidArgument,
           "malformed subset '" + std::string(text) + "'");
    }
    ++pos;
  }
  return s;
}

unsigned IndexSet::size() const noexcept {
  return static_cast<unsigned>(std::popcount(mask_));
}

std::vector<unsigned> IndexSet::members() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < ambient_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

IndexSet IndexSet::with(unsigned i) const {
  if (i >= ambient_) {
    fail(ErrorCode::OutOfRange, std::to_string(i) + " is not in [" +
                                    std::to_string(ambient_ - 1) + "]_0");
  }
  IndexSet s = *this;
  s.mask_ |= std::uint64_t{1} << i;
  return s;
}

IndexSet IndexSet::without(unsigned i) const {
  IndexSet s = *this;
  if (i < ambient_) s.mask_ &= ~(std::uint64_t{1} << i);
  return s;
}

IndexSet IndexSet::complement() const {
  IndexSet s = *this;
  s.mask_ = ~mask_ & all_bits(ambient_);
  return s;
}

bool IndexSet::is_even() const noexcept {
  return (mask_ & 0xAAAA'AAAA'AAAA'AAAAull) == 0;
}

IndexSet IndexSet::halved() const {
  if (ambient_ % 2 != 0 || !is_even()) {
    fail(ErrorCode::PreconditionViolation,
         "halving needs an even set in an even ambient degree");
  }
  IndexSet s(ambient_ / 2);
  for (unsigned i : members()) s.mask_ |= std::uint64_t{1} << (i / 2);
  return s;
}

std::string IndexSet::to_string() const {
  std::string out;
  for (unsigned i : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace hyperoct
