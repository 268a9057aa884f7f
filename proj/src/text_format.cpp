#include "asclab/text_format.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace asclab {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

// Reads "<keyword> <int>..." and returns the integers.
std::vector<int> keyword_ints(const std::string& line, const std::string& keyword, size_t min_count,
                              size_t max_count) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  if (head != keyword) throw std::invalid_argument("expected '" + keyword + "' line, got: " + line);
  std::vector<int> values;
  long long v;
  while (in >> v) values.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("non-numeric token on '" + keyword + "' line");
  if (values.size() < min_count || values.size() > max_count)
    throw std::invalid_argument("wrong number of values on '" + keyword + "' line");
  return values;
}

}  // namespace

std::string format_automaton(const Dfa& a) {
  std::ostringstream out;
  out << "dfa\n";
  out << "states " << a.state_count << "\n";
  out << "alphabet " << a.alphabet_size << "\n";
  out << "initial " << a.initial << "\n";
  out << "accepting";
  for (int s = 0; s < a.state_count; ++s)
    if (a.is_accepting(s)) out << ' ' << s;
  out << "\n";
  for (int s = 0; s < a.state_count; ++s)
    for (int c = 0; c < a.alphabet_size; ++c)
      out << "trans " << s << ' ' << c << ' ' << a.next(s, c) << "\n";
  return out.str();
}

std::string format_automaton(const UnaryPfaWord& w) { return "word:" + w.bits + "\n"; }

ParsedAutomaton parse_automaton_detail(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty automaton text");

  if (lines[0].rfind("word:", 0) == 0) {
    if (lines.size() != 1) throw std::invalid_argument("word form must be a single line");
    UnaryPfaWord w = make_word(lines[0].substr(5));
    return ParsedAutomaton{w, decode(w)};
  }

  if (lines[0] != "dfa") throw std::invalid_argument("expected 'word:<bits>' or a 'dfa' block");
  if (lines.size() < 5) throw std::invalid_argument("truncated dfa block");

  int states = keyword_ints(lines[1], "states", 1, 1)[0];
  int alphabet = keyword_ints(lines[2], "alphabet", 1, 1)[0];
  if (states < 1 || alphabet < 1) throw std::invalid_argument("states and alphabet must be positive");
  int initial = keyword_ints(lines[3], "initial", 1, 1)[0];
  std::vector<int> accepting =
      keyword_ints(lines[4], "accepting", 0, static_cast<size_t>(states));

  size_t expected = static_cast<size_t>(states) * alphabet;
  if (lines.size() != 5 + expected)
    throw std::invalid_argument("transition table must have exactly states*alphabet lines");

  std::vector<int> transitions(expected, -1);
  for (size_t i = 5; i < lines.size(); ++i) {
    auto entry = keyword_ints(lines[i], "trans", 3, 3);
    int from = entry[0], symbol = entry[1], to = entry[2];
    if (from < 0 || from >= states || symbol < 0 || symbol >= alphabet || to < 0 || to >= states)
      throw std::invalid_argument("transition entry out of range: " + lines[i]);
    size_t slot = static_cast<size_t>(from) * alphabet + symbol;
    if (transitions[slot] != -1)
      throw std::invalid_argument("duplicate transition for state " + std::to_string(from) +
                                  " symbol " + std::to_string(symbol));
    transitions[slot] = to;
  }

  Dfa a = make_dfa(states, alphabet, std::move(transitions), initial, accepting);
  return ParsedAutomaton{std::nullopt, std::move(a)};
}

Dfa parse_automaton(const std::string& text) { return parse_automaton_detail(text).dfa; }

}  // namespace asclab
