#include <permprime/permute.hpp>

#include <algorithm>
#include <stdexcept>

namespace permprime {

std::string first_permutation(const DigitMultiset& ms) {
    return ms.to_string();
}

bool advance_permutation(std::string& digits) {
    if (digits.empty())
        throw std::invalid_argument("cannot advance an empty digit string");
    return std::next_permutation(digits.begin(), digits.end());
}

PermutationCursor::PermutationCursor(const DigitMultiset& ms, LeadingZeroPolicy policy)
    : cur_(first_permutation(ms)), policy_(policy) {}

bool PermutationCursor::advance() {
    if (exhausted_)
        return false;
    while (true) {
        if (fresh_) {
            fresh_ = false;
        } else if (!std::next_permutation(cur_.begin(), cur_.end())) {
            exhausted_ = true;
            return false;
        }
        if (policy_ == LeadingZeroPolicy::exclude && cur_.front() == '0')
            continue;
        return true;
    }
}

std::optional<std::uint64_t> PermutationCursor::next() {
    if (cur_.size() > 19)
        throw std::logic_error("permutation value exceeds 64 bits; use next_string");
    if (!advance())
        return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : cur_)
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    return v;
}

std::optional<std::string> PermutationCursor::next_string() {
    if (!advance())
        return std::nullopt;
    return cur_;
}

}  // namespace permprime
