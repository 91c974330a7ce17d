#include "udt/caps.hpp"
#include "udt/errors.hpp"
#include "udt/word.hpp"
#include "udt/verdict.hpp"

namespace udt {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonRealInput: return "NonRealInput";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::BranchFuelExhausted: return "BranchFuelExhausted";
    case ErrorKind::WitnessSpaceTooLarge: return "WitnessSpaceTooLarge";
    case ErrorKind::GeneratorFuelExhausted: return "GeneratorFuelExhausted";
    case ErrorKind::ReductionFuelExhausted: return "ReductionFuelExhausted";
    case ErrorKind::NotTotalDecider: return "NotTotalDecider";
    case ErrorKind::NonPromisedQuery: return "NonPromisedQuery";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::FuelCap: return "FuelCap";
    case ErrorKind::NotTimeConstructible: return "NotTimeConstructible";
    case ErrorKind::NotGapAdmissible: return "NotGapAdmissible";
    case ErrorKind::NoContradictionFound: return "NoContradictionFound";
    case ErrorKind::NoInstanceOfA: return "NoInstanceOfA";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

void Thresholds::validate() const {
  if (c < s) throw Error(ErrorKind::InvalidArgument, "thresholds require c >= s");
}

bool is_bits(std::string_view s) noexcept {
  for (char ch : s)
    if (ch != '0' && ch != '1') return false;
  return true;
}

void require_bits(std::string_view s, std::string_view what) {
  if (!is_bits(s)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not a bitstring");
}

bool next_shortlex(Word& w, std::size_t max_len) {
  // binary increment; all-ones rolls over to the next length
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] == '0') {
      w[k] = '1';
      return true;
    }
    w[k] = '0';
  }
  if (w.size() >= max_len) return false;
  w.assign(w.size() + 1, '0');
  return true;
}

std::vector<Word> words_up_to(std::size_t max_len) {
  std::vector<Word> out;
  Word w;
  do {
    out.push_back(w);
  } while (next_shortlex(w, max_len));
  return out;
}

Word index_to_word(std::uint64_t i) {
  if (i == UINT64_MAX) throw Error(ErrorKind::CapExceeded, "word index overflow");
  std::uint64_t v = i + 1;
  Word out;
  while (v > 1) {
    out.push_back(static_cast<char>('0' + (v & 1u)));
    v >>= 1;
  }
  return {out.rbegin(), out.rend()};
}

std::uint64_t word_to_index(std::string_view w) {
  if (w.size() >= 64) throw Error(ErrorKind::CapExceeded, "word too long for a 64-bit index");
  require_bits(w, "word");
  std::uint64_t v = 1;
  for (char ch : w) v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
  return v - 1;
}

std::string_view verdict_token(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::OutsidePromise: return "outside-promise";
  }
  return "?";
}

std::string_view verdict_output(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "1";
    case Verdict::No: return "0";
    case Verdict::OutsidePromise: return "10";
  }
  return "?";
}

}  // namespace udt
