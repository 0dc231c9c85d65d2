#include "ncis/word.hpp"

namespace ncis {

Word Word::reduce(std::span<const Letter> letters) {
  WordBuilder b;
  for (Letter x : letters) b.push(x);
  return b.take();
}

Word Word::reduce(std::initializer_list<Letter> letters) {
  return reduce(std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::from_reduced_bytes(std::string bytes) { return Word(std::move(bytes)); }

Word Word::inverse() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(static_cast<char>(ncis::inverse(Letter(*it))));
  // the reversal of a reduced word with inverted letters is reduced
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  // inputs are reduced, so cancellation can only happen at the seam
  std::string_view x = a.bytes(), y = b.bytes();
  std::size_t i = x.size(), j = 0;
  while (i > 0 && j < y.size() && mutually_inverse(Letter(x[i - 1]), Letter(y[j]))) {
    --i;
    ++j;
  }
  std::string out;
  out.reserve(i + y.size() - j);
  out.append(x.substr(0, i));
  out.append(y.substr(j));
  return Word::from_reduced_bytes(std::move(out));
}

}  // namespace ncis
