#include "gbg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "gbg/errors.hpp"
#include "gbg/homology.hpp"

namespace gbg {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

Presentation pi1_presentation(const CubeComplex& cc, std::size_t basepoint) {
  if (basepoint >= cc.count(0)) throw ValidationError("basepoint is not a 0-cube");
  const auto incident = cc.incident_edges();
  std::vector<char> seen(cc.count(0), 0);
  std::vector<char> tree(cc.count(1), 0);
  std::deque<std::size_t> queue{basepoint};
  seen[basepoint] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      auto [a, b] = cc.endpoints(e);
      const std::size_t w = a == v ? b : a;
      if (seen[w] != 0) continue;
      seen[w] = 1;
      tree[e] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  if (reached != cc.count(0)) {
    throw ValidationError("complex is disconnected (" + std::to_string(components(cc).size()) +
                          " components); pick a component first");
  }

  Presentation p;
  std::vector<int> letter(cc.count(1), 0);
  for (std::size_t e = 0; e < cc.count(1); ++e) {
    if (tree[e] != 0) continue;
    p.generators.push_back("g" + std::to_string(p.generators.size() + 1));
    letter[e] = static_cast<int>(p.generators.size());
  }

  const FiniteGraph& g = cc.graph();
  for (const Cube& sq : cc.cubes(2)) {
    const Edge& e = g.edge(lowest(sq.moving));
    const Edge& f = g.edge(lowest(sq.moving & (sq.moving - 1)));
    const EdgeMask me = EdgeMask{1} << lowest(sq.moving);
    const EdgeMask mf = sq.moving & ~me;
    const VertexMask b = sq.base;
    const std::size_t corner[4] = {
        cc.index_of({b | bit(e.lo()) | bit(f.lo()), 0}), cc.index_of({b | bit(e.hi()) | bit(f.lo()), 0}),
        cc.index_of({b | bit(e.hi()) | bit(f.hi()), 0}), cc.index_of({b | bit(e.lo()) | bit(f.hi()), 0})};
    const std::pair<std::size_t, int> side[4] = {{cc.index_of({b | bit(f.lo()), me}), 1},
                                                 {cc.index_of({b | bit(e.hi()), mf}), 1},
                                                 {cc.index_of({b | bit(f.hi()), me}), -1},
                                                 {cc.index_of({b | bit(e.lo()), mf}), -1}};
    const int start = static_cast<int>(std::min_element(corner, corner + 4) - corner);
    Word w;
    for (int i = 0; i < 4; ++i) {
      const auto [edge, sign] = side[(start + i) % 4];
      if (letter[edge] != 0) w.push_back(sign * letter[edge]);
    }
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

class Simplifier {
 public:
  explicit Simplifier(Presentation p)
      : names_(std::move(p.generators)), rel_(std::move(p.relators)),
        alive_gen_(names_.size() + 1, 1), alive_rel_(rel_.size(), 1), occ_(names_.size() + 1) {
    for (std::size_t r = 0; r < rel_.size(); ++r) refresh(r);
  }

  Presentation run() {
    while (!queue_.empty()) {
      const auto [len, r] = queue_.top();
      queue_.pop();
      if (alive_rel_[r] == 0 || len != rel_[r].size()) continue;
      try_eliminate(r);
    }
    return finish();
  }

 private:
  static constexpr std::size_t kMaxLength = 100000;

  void refresh(std::size_t r) {
    for (int x : rel_[r]) occ_[std::abs(x)].erase(r);
    rel_[r] = cyclic_reduce(std::move(rel_[r]));
    if (rel_[r].empty()) {
      alive_rel_[r] = 0;
      return;
    }
    for (int x : rel_[r]) occ_[std::abs(x)].insert(r);
    queue_.push({rel_[r].size(), r});
  }

  void try_eliminate(std::size_t r) {
    std::map<int, int> count;
    for (int x : rel_[r]) ++count[std::abs(x)];
    for (std::size_t pos = 0; pos < rel_[r].size(); ++pos) {
      const int x = rel_[r][pos];
      if (count[std::abs(x)] != 1) continue;
      // Rotate so x comes first: x w = 1, hence x = w^-1.
      Word rest(rel_[r].begin() + static_cast<long>(pos) + 1, rel_[r].end());
      rest.insert(rest.end(), rel_[r].begin(), rel_[r].begin() + static_cast<long>(pos));
      const Word value = x > 0 ? inverse(rest) : rest;  // word equal to generator |x|
      const int gen = std::abs(x);
      std::size_t growth = 0;
      for (std::size_t other : occ_[gen]) {
        if (other != r) growth += rel_[other].size() * value.size();
      }
      if (growth > kMaxLength) continue;
      substitute(gen, value, r);
      return;
    }
  }

  void substitute(int gen, const Word& value, std::size_t source) {
    const Word value_inv = inverse(value);
    for (int x : rel_[source]) occ_[std::abs(x)].erase(source);
    alive_rel_[source] = 0;
    alive_gen_[gen] = 0;
    const std::vector<std::size_t> targets(occ_[gen].begin(), occ_[gen].end());
    for (std::size_t t : targets) {
      Word w;
      for (int x : rel_[t]) {
        if (x == gen) {
          w.insert(w.end(), value.begin(), value.end());
        } else if (x == -gen) {
          w.insert(w.end(), value_inv.begin(), value_inv.end());
        } else {
          w.push_back(x);
        }
      }
      for (int x : rel_[t]) occ_[std::abs(x)].erase(t);
      rel_[t] = std::move(w);
      for (int x : rel_[t]) occ_[std::abs(x)].insert(t);
      refresh(t);
    }
  }

  Presentation finish() {
    Presentation out;
    std::vector<int> renumber(names_.size() + 1, 0);
    for (std::size_t g = 1; g <= names_.size(); ++g) {
      if (alive_gen_[g] == 0) continue;
      out.generators.push_back(names_[g - 1]);
      renumber[g] = static_cast<int>(out.generators.size());
    }
    std::set<Word> seen;
    for (std::size_t r = 0; r < rel_.size(); ++r) {
      if (alive_rel_[r] == 0) continue;
      Word w;
      for (int x : rel_[r]) w.push_back(x > 0 ? renumber[x] : -renumber[-x]);
      if (seen.insert(w).second) out.relators.push_back(std::move(w));
    }
    return out;
  }

  std::vector<std::string> names_;
  std::vector<Word> rel_;
  std::vector<char> alive_gen_;
  std::vector<char> alive_rel_;
  std::vector<std::set<std::size_t>> occ_;
  std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                      std::greater<>>
      queue_;
};

std::string letter_name(const Presentation& p, int x) {
  std::string name = p.generators.at(static_cast<std::size_t>(std::abs(x)) - 1);
  if (x < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  return name;
}

std::string word_text(const Presentation& p, const Word& w) {
  bool single = std::all_of(p.generators.begin(), p.generators.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0 && !single) out += " ";
    out += letter_name(p, w[i]);
  }
  return out;
}

}  // namespace

Presentation tietze_simplify(Presentation p) {
  for (const Word& w : p.relators) {
    for (int x : w) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > p.generators.size()) {
        throw ValidationError("relator letter out of range");
      }
    }
  }
  return Simplifier(std::move(p)).run();
}

Abelianization abelianization(const Presentation& p) {
  SparseMatrix m{p.relators.size(), p.generators.size(), {}};
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::map<int, long long> sum;
    for (int x : p.relators[r]) sum[std::abs(x)] += x > 0 ? 1 : -1;
    for (auto [g, s] : sum) {
      if (s != 0) m.entries.emplace_back(r, static_cast<std::size_t>(g - 1), s);
    }
  }
  const auto factors = invariant_factors(m);
  Abelianization out;
  out.free_rank = static_cast<long long>(p.generators.size()) - static_cast<long long>(factors.size());
  for (const auto& f : factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i != 0) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i != 0) out += ", ";
    out += word_text(p, p.relators[i]);
  }
  return out + ">";
}

std::string presentation_json(const Presentation& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (const Word& w : p.relators) rel.push_back(word_text(p, w));
  return nlohmann::json{{"generators", p.generators}, {"relators", rel}}.dump();
}

Presentation parse_presentation(const std::string& text) {
  const auto open = text.find('<');
  const auto bar = text.find('|');
  const auto close = text.rfind('>');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
      !(open < bar && bar < close)) {
    throw ValidationError("presentation must look like <a, b | abAB>");
  }
  Presentation p;
  std::map<char, int> index;
  for (char ch : text.substr(open + 1, bar - open - 1)) {
    if (std::islower(static_cast<unsigned char>(ch)) != 0) {
      p.generators.emplace_back(1, ch);
      index[ch] = static_cast<int>(p.generators.size());
    } else if (ch != ',' && std::isspace(static_cast<unsigned char>(ch)) == 0) {
      throw ValidationError(std::string("bad generator character '") + ch + "'");
    }
  }
  Word cur;
  auto flush = [&] {
    if (!cur.empty()) p.relators.push_back(free_reduce(cur));
    cur.clear();
  };
  for (char ch : text.substr(bar + 1, close - bar - 1)) {
    if (ch == ',') {
      flush();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch)) != 0) continue;
    const char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto it = index.find(low);
    if (it == index.end()) throw ValidationError(std::string("unknown generator '") + ch + "'");
    cur.push_back(std::isupper(static_cast<unsigned char>(ch)) != 0 ? -it->second : it->second);
  }
  flush();
  return p;
}

}  // namespace gbg
