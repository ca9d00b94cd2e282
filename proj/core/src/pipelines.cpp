#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "fg/constructions.hpp"

namespace fg {

namespace {

void require_infinite(const SubgroupHandle& h, const char* who) {
  if (index_in_F(h).finite)
    throw PreconditionError(std::string(who) + " must have infinite index");
}

// Intermediate cores past this size make the downstream products and
// rewrites infeasible, so the pipelines give up honestly instead.
constexpr size_t kVertexCap = 50000;

void check_cap(const SubgroupHandle& h, const char* who) {
  if (static_cast<size_t>(h.graph.vertex_count()) > kVertexCap)
    throw ResourceError(std::string(who) + ": intermediate core exceeds vertex cap");
}

}  // namespace

FamilyShrink family_shrink(const std::vector<SubgroupHandle>& family, StageLog* log) {
  if (family.empty()) throw PreconditionError("family_shrink: empty family");
  for (const auto& h : family) require_infinite(h, "family_shrink: every member");

  FamilyShrink out;
  out.shrunk.push_back(family[0]);
  SubgroupHandle j = family[0];
  for (size_t k = 1; k < family.size(); ++k) {
    const SubgroupHandle& next = family[k];
    if (j.is_trivial()) {
      out.shrunk.push_back(next);
      j = next;
      continue;
    }
    EnvelopePair pair = envelope_pair(j, next, log);
    for (auto& s : out.shrunk) s = intersect(s, pair.a1, kVertexCap);
    out.shrunk.push_back(pair.b0);
    j = join(pair.a1, pair.b0);
    check_cap(j, "family_shrink");
    if (index_in_F(j).finite)
      throw std::logic_error("family_shrink: running join reached finite index");
  }
  out.joined = out.shrunk[0];
  for (size_t k = 1; k < out.shrunk.size(); ++k) {
    out.joined = join(out.joined, out.shrunk[k]);
    check_cap(out.joined, "family_shrink");
  }
  if (index_in_F(out.joined).finite)
    throw std::logic_error("family_shrink: final join has finite index");

  if (log) {
    LogStage stage;
    stage.step = "family_shrink";
    stage.note = "finite-index shrinks with an infinite-index join";
    for (size_t i = 0; i < family.size(); ++i)
      stage.handles.emplace_back("H" + std::to_string(i + 1), family[i]);
    for (size_t i = 0; i < out.shrunk.size(); ++i)
      stage.handles.emplace_back("H'" + std::to_string(i + 1), out.shrunk[i]);
    stage.handles.emplace_back("J", out.joined);
    for (size_t i = 0; i < family.size(); ++i) {
      std::string n = std::to_string(i + 1);
      stage.certs.push_back({Certificate::Kind::RelIndexFinite, "H" + n, "H'" + n});
      stage.certs.push_back({Certificate::Kind::ContainsSubgroup, "J", "H'" + n});
    }
    stage.certs.push_back({Certificate::Kind::IndexInfinite, "J"});
    log->add(std::move(stage));
  }
  return out;
}

SubgroupHandle normal_core_in(const SubgroupHandle& q, const SubgroupHandle& b1,
                              size_t order_cap) {
  RelIndex ri = relative_index(b1, q);
  if (!ri.finite())
    throw PreconditionError("normal_core_in: subgroup must have finite relative index");
  if (ri.n == 1) return b1;

  // Coset graph of Q in B1: Q rewritten over B1's basis has no deficit.
  BasisData bd = make_basis(b1.graph);
  int rb = rank(b1);
  std::vector<ReducedWord> rewritten;
  for (const auto& g : basis(q)) rewritten.push_back(*express(b1.graph, bd, g));
  SubgroupHandle qin = from_generators(Alphabet::basis_names(rb), rewritten);
  int m = qin.graph.vertex_count();

  // The normal core is the kernel of the action on those cosets, so its
  // coset graph is the closure of the induced permutations.  Tracing a
  // letter c after a word w composes q_c on the outside.
  auto step = [&](const std::vector<int>& p, int c) {
    std::vector<int> r(p.size());
    for (int v = 0; v < m; ++v) r[v] = qin.graph.target(p[v], c);
    return r;
  };
  std::vector<int> ident(m);
  for (int v = 0; v < m; ++v) ident[v] = v;
  std::map<std::vector<int>, int> id{{ident, 0}};
  std::vector<std::vector<int>> elems{ident};
  std::vector<std::tuple<int, int, int>> arrows;  // (from, letter, to)
  for (size_t head = 0; head < elems.size(); ++head) {
    std::vector<int> cur = elems[head];
    for (int i = 0; i < rb; ++i) {
      std::vector<int> nxt = step(cur, positive_code(i));
      auto [it, fresh] = id.emplace(nxt, static_cast<int>(elems.size()));
      if (fresh) {
        if (elems.size() >= order_cap)
          throw ResourceError("normal_core_in: induced permutation group exceeds cap");
        elems.push_back(std::move(nxt));
      }
      arrows.emplace_back(static_cast<int>(head), i, it->second);
    }
  }

  // Expand back over F: each arrow becomes a path spelling B1's basis word.
  PreGraph pg(b1.alphabet().rank());
  while (pg.n < static_cast<int>(elems.size())) pg.add_vertex();
  for (auto [u, i, v] : arrows) {
    const std::vector<int>& codes = bd.words[i].codes();
    int cur = u;
    for (size_t k = 0; k < codes.size(); ++k) {
      int nxt = k + 1 == codes.size() ? v : pg.add_vertex();
      pg.add_edge(cur, codes[k], nxt);
      cur = nxt;
    }
  }
  SubgroupHandle n{CoreGraph(b1.alphabet(), fold(pg)), "N"};
  // sanity: conjugation by b1's basis fixes n in both directions
  for (const auto& b : basis(b1)) {
    for (const auto& g : basis(n)) {
      if (!is_member(n, conjugate(b, g)) || !is_member(n, conjugate(invert(b), g)))
        throw std::logic_error("normal_core_in: result is not normal");
    }
  }
  return n;
}

NormalizedEnvelope normalized_envelope(const SubgroupHandle& a, const SubgroupHandle& b) {
  require_infinite(a, "normalized_envelope: first subgroup");
  require_infinite(b, "normalized_envelope: second subgroup");

  NormalizedEnvelope out;
  EnvelopePair pair = a.is_trivial() ? EnvelopePair{a, b, b}
                                     : envelope_pair(a, b, &out.log);
  std::vector<ReducedWord> reps = transversal(a, pair.a1);

  std::vector<SubgroupHandle> ls;
  for (const auto& t : reps) ls.push_back(conjugate_subgroup(pair.b1, t));
  FamilyShrink fam = family_shrink(ls, &out.log);

  SubgroupHandle q0 = conjugate_subgroup(fam.shrunk[0], invert(reps[0]));
  for (size_t i = 1; i < reps.size(); ++i)
    q0 = intersect(q0, conjugate_subgroup(fam.shrunk[i], invert(reps[i])), kVertexCap);
  SubgroupHandle q = normal_core_in(q0, pair.b1);
  check_cap(q, "normalized_envelope");

  out.b2 = conjugate_subgroup(q, reps[0]);
  for (size_t i = 1; i < reps.size(); ++i) {
    out.b2 = join(out.b2, conjugate_subgroup(q, reps[i]));
    check_cap(out.b2, "normalized_envelope");
  }
  out.b2.name = "B2";
  out.h = intersect(b, q, kVertexCap);
  out.h.name = "H";

  // the defining invariant: conjugation by A's basis fixes B2
  for (const auto& x : basis(a)) {
    for (const auto& v : basis(out.b2)) {
      if (!is_member(out.b2, conjugate(x, v)) ||
          !is_member(out.b2, conjugate(invert(x), v)))
        throw std::logic_error("normalized_envelope: B2 is not normalized by A");
    }
  }

  LogStage stage;
  stage.step = "normalized_envelope";
  stage.handles = {{"A", a}, {"B", b}, {"B2", out.b2}, {"H", out.h}};
  stage.certs = {
      {Certificate::Kind::RelIndexFinite, "B", "H"},
      {Certificate::Kind::ContainsSubgroup, "B2", "H"},
      {Certificate::Kind::IndexInfinite, "B2"},
  };
  out.log.add(std::move(stage));
  return out;
}

SmallJoin small_join(const SubgroupHandle& a, const SubgroupHandle& b,
                     const std::vector<ReducedWord>& exclude) {
  if (a.alphabet() != b.alphabet())
    throw PreconditionError("subgroups are over different alphabets");
  require_infinite(a, "small_join: first subgroup");
  require_infinite(b, "small_join: second subgroup");
  for (const auto& s : exclude)
    if (is_member(a, s))
      throw PreconditionError("small_join: excluded word is a member of the first subgroup: " +
                              format_word(s, a.alphabet()));

  SmallJoin out;
  SubgroupHandle h{CoreGraph::trivial(a.alphabet()), "H"};
  if (b.is_trivial()) {
    h = b;
    h.name = "H";
  } else {
    NormalizedEnvelope ne = normalized_envelope(a, b);
    out.log = std::move(ne.log);
    h = ne.h;
  }
  if (!exclude.empty() && !b.is_trivial()) {
    SubgroupHandle m = hall_completion(a, exclude);
    h = intersect(h, m);
    h.name = "H";
  }
  SubgroupHandle j = join(a, h);

  if (!relative_index(b, h).finite())
    throw std::logic_error("small_join: H does not have finite index in B");
  if (index_in_F(j).finite)
    throw std::logic_error("small_join: <A, H> has finite index");
  for (const auto& s : exclude)
    if (is_member(j, s))
      throw std::logic_error("small_join: <A, H> contains an excluded word");

  LogStage stage;
  stage.step = "small_join";
  stage.handles = {{"A", a}, {"B", b}, {"H", h}, {"<A,H>", j}};
  stage.certs = {
      {Certificate::Kind::RelIndexFinite, "B", "H"},
      {Certificate::Kind::IndexInfinite, "<A,H>"},
  };
  for (const auto& s : exclude)
    stage.certs.push_back(
        {Certificate::Kind::NotMemberWord, "<A,H>", format_word(s, a.alphabet())});
  out.log.add(std::move(stage));
  out.h = h;
  return out;
}

SmallCancelReport check_smallcancel(const std::vector<ReducedWord>& u_words,
                                    const Alphabet& alphabet, size_t w_length) {
  std::vector<std::string> text;
  for (const auto& u : u_words) {
    std::string s;
    for (int c : u.codes()) {
      if (!code_is_positive(c))
        throw PreconditionError("check_smallcancel: words must be positive");
      s.push_back(static_cast<char>('A' + code_base(c)));
    }
    text.push_back(std::move(s));
  }
  auto occurrences = [](const std::string& hay, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + 1))
      ++count;
    return count;
  };
  SmallCancelReport report;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i].size() < 10 * w_length) {
      report.violation = "word " + std::to_string(i + 1) + " is shorter than 10|w|";
      return report;
    }
    size_t window = (text[i].size() + 9) / 10;
    for (size_t start = 0; start + window <= text[i].size(); ++start) {
      std::string needle = text[i].substr(start, window);
      if (occurrences(text[i], needle) != 1) {
        report.violation = "repeated window in word " + std::to_string(i + 1) +
                           " at offset " + std::to_string(start);
        return report;
      }
      for (size_t j = 0; j < text.size(); ++j) {
        if (j == i) continue;
        if (occurrences(text[j], needle) != 0) {
          report.violation = "window of word " + std::to_string(i + 1) +
                             " at offset " + std::to_string(start) +
                             " occurs in word " + std::to_string(j + 1);
          return report;
        }
      }
    }
  }
  report.ok = true;
  return report;
}

NormalSupplementWitness normal_supplement_witness(const Alphabet& alphabet,
                                                  const ReducedWord& w) {
  const int r = alphabet.rank();
  if (r < 2) throw PreconditionError("normal_supplement_witness: rank must be >= 2");
  if (w.empty()) throw PreconditionError("normal_supplement_witness: w must be nontrivial");

  const int x1 = positive_code(0);
  const int x2 = positive_code(1);
  NormalSupplementWitness out;

  // blocks x1 x2^e with globally distinct exponents; block k of word i uses
  // e = i+1 + 2r*k, so every window of a tenth of the word straddles a full
  // block whose exponent pins its position
  int m = 42;
  for (int attempt = 0; attempt < 8; ++attempt, m += 16) {
    out.u_words.clear();
    for (int i = 0; i < 2 * r; ++i) {
      std::vector<int> raw;
      for (int k = 0; k < m; ++k) {
        raw.push_back(x1);
        int e = i + 1 + 2 * r * k;
        for (int t = 0; t < e; ++t) raw.push_back(x2);
      }
      out.u_words.push_back(ReducedWord::reduce(raw));
    }
    if (check_smallcancel(out.u_words, alphabet, w.length()).ok) break;
    out.u_words.clear();
  }
  if (out.u_words.empty())
    throw std::logic_error("normal_supplement_witness: no admissible word family found");

  for (int i = 0; i < r; ++i) {
    ReducedWord xi = ReducedWord::letter(positive_code(i));
    ReducedWord v = concat(concat(conjugate(out.u_words[2 * i], w), xi),
                           conjugate(out.u_words[2 * i + 1], w));
    // v x_i^-1 factors as a product of two conjugates of w
    ReducedWord lhs = concat(v, invert(xi));
    ReducedWord rhs = concat(conjugate(out.u_words[2 * i], w),
                             conjugate(concat(xi, out.u_words[2 * i + 1]), w));
    if (lhs != rhs)
      throw std::logic_error("normal_supplement_witness: factorization identity failed");
    out.v_words.push_back(std::move(v));
  }

  out.h = from_generators(alphabet, out.v_words, "H");
  if (rank(out.h) != r)
    throw std::logic_error("normal_supplement_witness: generators are not free");
  if (index_in_F(out.h).finite)
    throw std::logic_error("normal_supplement_witness: H has finite index");
  for (int i = 0; i < r; ++i)
    if (is_member(out.h, ReducedWord::letter(positive_code(i))))
      throw std::logic_error("normal_supplement_witness: H contains a basis letter");
  return out;
}

}  // namespace fg
